#pragma once

#include <span>

#include "ptcount/big_count.hpp"

namespace ptcount {

BigCount factorial(int m);

/// Zero when k < 0 or k > m.
BigCount binomial(int m, int k);

/// q! / (parts[0]! * parts[1]! * ...). Requires sum(parts) == q.
BigCount multinomial(int q, std::span<const int> parts);

/// Involution count I(q) (identity included), by the recurrence
/// I(q+1) = I(q) + q * I(q-1) with I(0) = I(1) = 1.
BigCount telephone(int q);

/// I(q) evaluated independently as
/// sum over even j of C(q,j) * j! / (2^(j/2) * (j/2)!).
BigCount telephone_sum(int q);

}  // namespace ptcount

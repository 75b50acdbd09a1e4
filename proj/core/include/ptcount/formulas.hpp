#pragma once

#include "ptcount/big_count.hpp"

namespace ptcount {

/// Number of n-by-n permutation matrices (n = p*q) whose partial transpose is
/// again a permutation matrix, evaluated as a sum over pairs of composition
/// vectors with equal marginal tables:
///
///   sum over tables T of  W(T)^2 * prod_{i,j} T[i][j]!
///   where W(T) = sum over vectors a with marginals T of q! / prod a!.
///
/// Throws for p > 5.
BigCount z_formula(int p, int q);

/// Closed form q! * (q+1)! for the p = 2 column.
BigCount z2_closed(int q);

/// Number of permutation matrices equal to their partial transpose:
/// a single-vector sum with placement factor prod I(T[i][j]).
BigCount ze_formula(int p, int q);

/// The p = 2 closed form ships in two variants: `printed` carries a squared
/// binomial, `corrected` the single binomial that the general formula
/// produces. They disagree already at q = 2 (12 vs 10); ground truth sides
/// with `corrected`. Both are kept so verification can display the
/// contradiction instead of hiding it.
enum class Ze2Variant { printed, corrected };

BigCount ze2_closed(int q, Ze2Variant variant);

/// The quoted closed form 2p*C(q,2) + 2q*C(p,2) for involutions whose partial
/// transpose is a permutation. Evaluated exactly as printed; its agreement
/// with the oracle counts is a matter for the verification report, not for
/// this evaluator.
BigCount zt_closed(int p, int q);

/// The two quoted specializations of zt_closed.
struct ZtSpecialValues {
  BigCount rectangle;  // zt_closed(q+1, q) = q(q+1)(2q-1)
  BigCount square;     // zt_closed(q, q)   = 2(q^3 - q^2)
};

ZtSpecialValues zt_corollaries(int q);

}  // namespace ptcount

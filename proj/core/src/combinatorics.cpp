#include "ptcount/combinatorics.hpp"

#include <stdexcept>

namespace ptcount {

BigCount factorial(int m) {
  if (m < 0) throw std::invalid_argument("factorial of a negative integer");
  BigCount out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

BigCount binomial(int m, int k) {
  if (m < 0) throw std::invalid_argument("binomial with negative upper index");
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigCount out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= m - k + i;
    out /= i;  // exact: out is C(m-k+i, i) at this point
  }
  return out;
}

BigCount multinomial(int q, std::span<const int> parts) {
  int sum = 0;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial with a negative part");
    sum += part;
  }
  if (sum != q) throw std::invalid_argument("multinomial parts must sum to q");
  BigCount out = factorial(q);
  for (int part : parts) out /= factorial(part);
  return out;
}

BigCount telephone(int q) {
  if (q < 0) throw std::invalid_argument("telephone of a negative integer");
  BigCount prev = 1, cur = 1;  // I(0), I(1)
  if (q == 0) return prev;
  for (int k = 1; k < q; ++k) {
    BigCount next = cur + k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigCount telephone_sum(int q) {
  if (q < 0) throw std::invalid_argument("telephone of a negative integer");
  BigCount total = 0;
  for (int j = 0; j <= q; j += 2) {
    // j! / (2^(j/2) * (j/2)!) pairings of j elements
    BigCount pairings = factorial(j);
    pairings /= BigCount(1) << (j / 2);
    pairings /= factorial(j / 2);
    total += binomial(q, j) * pairings;
  }
  return total;
}

}  // namespace ptcount

#include "ptcount/formulas.hpp"

#include <map>
#include <stdexcept>

#include "ptcount/combinatorics.hpp"
#include "ptcount/compositions.hpp"

namespace ptcount {

BigCount z_formula(int p, int q) {
  if (q < 1) throw std::invalid_argument("z_formula requires q >= 1");
  // Group composition vectors by marginal table: the double sum over pairs
  // (a, b) with equal marginals collapses to sum_T W(T)^2 * prod T[i][j]!.
  std::map<MarginalTable, BigCount> weight_by_table;
  CompositionStream stream(p, q);
  CompositionVector a;
  while (stream.next(a))
    weight_by_table[marginal_table(a)] += multinomial(q, a.parts);
  BigCount total = 0;
  for (const auto& [table, weight] : weight_by_table) {
    BigCount placements = 1;
    for (int cell : table.cells) placements *= factorial(cell);
    total += weight * weight * placements;
  }
  return total;
}

BigCount z2_closed(int q) {
  if (q < 1) throw std::invalid_argument("z2_closed requires q >= 1");
  return factorial(q) * factorial(q + 1);
}

BigCount ze_formula(int p, int q) {
  if (q < 1) throw std::invalid_argument("ze_formula requires q >= 1");
  BigCount total = 0;
  CompositionStream stream(p, q);
  CompositionVector a;
  while (stream.next(a)) {
    const MarginalTable table = marginal_table(a);
    BigCount term = multinomial(q, a.parts);
    for (int cell : table.cells) term *= telephone(cell);
    total += term;
  }
  return total;
}

BigCount ze2_closed(int q, Ze2Variant variant) {
  if (q < 0) throw std::invalid_argument("ze2_closed requires q >= 0");
  BigCount total = 0;
  for (int r = 0; r <= q; ++r) {
    BigCount coeff = binomial(q, r);
    if (variant == Ze2Variant::printed) coeff *= coeff;
    const BigCount ir = telephone(r);
    const BigCount iqr = telephone(q - r);
    total += coeff * ir * ir * iqr * iqr;
  }
  return total;
}

BigCount zt_closed(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("zt_closed requires p, q >= 1");
  return 2 * p * binomial(q, 2) + 2 * q * binomial(p, 2);
}

ZtSpecialValues zt_corollaries(int q) {
  if (q < 1) throw std::invalid_argument("zt_corollaries requires q >= 1");
  const BigCount bq(q);
  return {bq * (bq + 1) * (2 * bq - 1), 2 * (bq * bq * bq - bq * bq)};
}

}  // namespace ptcount

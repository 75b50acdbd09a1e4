#pragma once

#include <compare>
#include <vector>

#include "ptcount/big_count.hpp"

namespace ptcount {

/// S_p materialized in lexicographic order. Throws for p > 5 (the composition
/// machinery indexes vectors by all p! permutations, which stops being
/// manageable beyond that).
const std::vector<std::vector<int>>& small_symmetric_group(int p);

/// A nonnegative integer for each permutation of [p], in the order of
/// small_symmetric_group(p); the entries are the partition-class sizes the
/// counting sums range over.
struct CompositionVector {
  int p = 1;
  std::vector<int> parts;

  int sum() const;
};

/// Streams every CompositionVector with the given part sum, each exactly
/// once; there are C(q + p! - 1, p! - 1) of them.
class CompositionStream {
 public:
  CompositionStream(int p, int q);

  bool next(CompositionVector& out);

 private:
  int p_;
  int q_;
  std::vector<int> parts_;
  bool done_ = false;
};

BigCount composition_count(int p, int q);

/// p-by-p grid of the per-block 1-counts induced by a composition vector:
/// cell (i,j) is the sum of parts over permutations with pi(i) == j.
/// Every row and column of a valid table sums to q.
struct MarginalTable {
  int p = 1;
  std::vector<int> cells;  // row-major

  int at(int i, int j) const;  // 1-based

  friend bool operator==(const MarginalTable&, const MarginalTable&) = default;
  friend auto operator<=>(const MarginalTable&, const MarginalTable&) = default;
};

MarginalTable marginal_table(const CompositionVector& a);

}  // namespace ptcount

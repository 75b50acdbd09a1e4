#pragma once

#include <vector>

#include "ptcount/permutation.hpp"

namespace ptcount {

/// Hard ceiling for exhaustive enumeration; 12! words is already ~479M.
inline constexpr int kEnumerationGuard = 12;

/// Streams the n! one-line words in lexicographic order, each exactly once.
/// The two-argument form restricts the stream to words with pi(1) == first,
/// which is how scans are partitioned across workers.
class LexPermutationStream {
 public:
  explicit LexPermutationStream(int n);
  LexPermutationStream(int n, int first);

  /// Copies the next word into `out` and returns true, or returns false when
  /// the stream is exhausted.
  bool next(Permutation& out);

 private:
  std::vector<int> word_;
  bool pinned_;
  bool done_ = false;
};

/// All involutions of S_n (identity included) in lexicographic order.
std::vector<Permutation> involutions(int n);

}  // namespace ptcount

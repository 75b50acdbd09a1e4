#pragma once

#include <cstdint>
#include <vector>

#include "ptcount/permutation.hpp"

namespace ptcount {

/// Dense n-by-n matrix over {0,1}. Not necessarily a permutation matrix.
/// All indices are 1-based, matching the conventions of the rest of the
/// library.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int n);  // all zeros
  static BinaryMatrix identity(int n);
  static BinaryMatrix from_permutation(const Permutation& pi);

  int side() const { return n_; }

  bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
  void set(int r, int c, bool value) { bits_[index(r, c)] = value ? 1 : 0; }

  int count_ones() const;
  BinaryMatrix transposed() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t index(int r, int c) const;  // validates 1 <= r,c <= n

  int n_;
  std::vector<std::uint8_t> bits_;  // row-major
};

}  // namespace ptcount

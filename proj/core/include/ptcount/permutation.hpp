#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ptcount {

class LexPermutationStream;

/// One-line notation of a bijection on [n]. Values are 1-based: the value at
/// position i is pi(i).
class Permutation {
 public:
  /// Throws std::invalid_argument unless `word` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts either a digit string ("3142", values 1..9) or a comma/space
  /// separated list ("10,3,2,...").
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }

  /// pi(i) for 1 <= i <= n.
  int image_of(int i) const;

  const std::vector<int>& word() const { return word_; }

  /// True when pi(pi(i)) == i for every i. The identity counts.
  bool is_involution() const;

  /// Digits concatenated for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> word) : word_(std::move(word)) {}
  friend class LexPermutationStream;
  friend std::vector<Permutation> involutions(int n);

  std::vector<int> word_;
};

}  // namespace ptcount

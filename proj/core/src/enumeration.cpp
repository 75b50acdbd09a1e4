#include "ptcount/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptcount {

namespace {

void check_guard(int n) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  if (n > kEnumerationGuard)
    throw std::invalid_argument("n exceeds the enumeration guard of " +
                                std::to_string(kEnumerationGuard));
}

}  // namespace

LexPermutationStream::LexPermutationStream(int n) : pinned_(false) {
  check_guard(n);
  word_.resize(static_cast<std::size_t>(n));
  std::iota(word_.begin(), word_.end(), 1);
}

LexPermutationStream::LexPermutationStream(int n, int first) : pinned_(true) {
  check_guard(n);
  if (first < 1 || first > n)
    throw std::invalid_argument("first value outside [1, n]");
  word_.reserve(static_cast<std::size_t>(n));
  word_.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first) word_.push_back(v);
}

bool LexPermutationStream::next(Permutation& out) {
  if (done_) return false;
  out = Permutation(Permutation::Unchecked{}, word_);
  const auto movable_begin = pinned_ ? word_.begin() + 1 : word_.begin();
  done_ = !std::next_permutation(movable_begin, word_.end());
  return true;
}

std::vector<Permutation> involutions(int n) {
  check_guard(n);
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  // Assign the smallest unset position either to itself or to a larger unset
  // partner, trying values in increasing order; this emits words
  // lexicographically.
  auto rec = [&](auto&& self, int assigned) -> void {
    if (assigned == n) {
      out.push_back(Permutation(Permutation::Unchecked{}, word));
      return;
    }
    int i = 1;
    while (word[static_cast<std::size_t>(i) - 1] != 0) ++i;
    word[static_cast<std::size_t>(i) - 1] = i;
    self(self, assigned + 1);
    word[static_cast<std::size_t>(i) - 1] = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (word[static_cast<std::size_t>(j) - 1] != 0) continue;
      word[static_cast<std::size_t>(i) - 1] = j;
      word[static_cast<std::size_t>(j) - 1] = i;
      self(self, assigned + 2);
      word[static_cast<std::size_t>(i) - 1] = 0;
      word[static_cast<std::size_t>(j) - 1] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace ptcount

#include "ptcount/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ptcount/combinatorics.hpp"

namespace ptcount {

const std::vector<std::vector<int>>& small_symmetric_group(int p) {
  if (p < 1) throw std::invalid_argument("symmetric group index must be >= 1");
  if (p > 5)
    throw std::invalid_argument(
        "p too large: composition machinery indexes all p! permutations and "
        "is limited to p <= 5");
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> group;
  std::vector<int> word(static_cast<std::size_t>(p));
  std::iota(word.begin(), word.end(), 1);
  do {
    group.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return cache.emplace(p, std::move(group)).first->second;
}

int CompositionVector::sum() const {
  int total = 0;
  for (int part : parts) total += part;
  return total;
}

CompositionStream::CompositionStream(int p, int q) : p_(p), q_(q) {
  if (q < 0) throw std::invalid_argument("composition sum must be >= 0");
  const auto m = small_symmetric_group(p).size();
  parts_.assign(m, 0);
  parts_[0] = q;
}

bool CompositionStream::next(CompositionVector& out) {
  if (done_) return false;
  out.p = p_;
  out.parts = parts_;
  // Successor: move one unit from the leftmost nonzero part to its right
  // neighbour and reset the prefix.
  std::size_t i = 0;
  while (i < parts_.size() && parts_[i] == 0) ++i;
  if (q_ == 0 || i + 1 == parts_.size()) {
    done_ = true;
  } else {
    const int value = parts_[i];
    parts_[i] = 0;
    parts_[i + 1] += 1;
    parts_[0] = value - 1;
  }
  return true;
}

BigCount composition_count(int p, int q) {
  const int m = static_cast<int>(small_symmetric_group(p).size());
  return binomial(q + m - 1, m - 1);
}

int MarginalTable::at(int i, int j) const {
  if (i < 1 || i > p || j < 1 || j > p)
    throw std::out_of_range("marginal table index outside [p] x [p]");
  return cells[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(p) +
               static_cast<std::size_t>(j - 1)];
}

MarginalTable marginal_table(const CompositionVector& a) {
  const auto& group = small_symmetric_group(a.p);
  if (a.parts.size() != group.size())
    throw std::invalid_argument("composition vector has the wrong number of parts");
  MarginalTable table;
  table.p = a.p;
  table.cells.assign(static_cast<std::size_t>(a.p) * static_cast<std::size_t>(a.p), 0);
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (int i = 1; i <= a.p; ++i) {
      const int j = group[k][static_cast<std::size_t>(i) - 1];
      table.cells[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(a.p) +
                  static_cast<std::size_t>(j - 1)] += a.parts[k];
    }
  }
  return table;
}

}  // namespace ptcount

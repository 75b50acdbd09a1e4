#include "ptcount/binary_matrix.hpp"

#include <stdexcept>

namespace ptcount {

BinaryMatrix::BinaryMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix side must be >= 1");
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_permutation(const Permutation& pi) {
  BinaryMatrix m(pi.size());
  for (int i = 1; i <= pi.size(); ++i) m.set(i, pi.image_of(i), true);
  return m;
}

std::size_t BinaryMatrix::index(int r, int c) const {
  if (r < 1 || r > n_ || c < 1 || c > n_)
    throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(c - 1);
}

int BinaryMatrix::count_ones() const {
  int total = 0;
  for (auto b : bits_) total += b;
  return total;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix out(n_);
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c)) out.set(c, r, true);
  return out;
}

}  // namespace ptcount

#include "ptcount/partial_transpose.hpp"

#include <stdexcept>

namespace ptcount {

namespace {

void check_shape(const BinaryMatrix& m, const BlockShape& shape) {
  if (m.side() != shape.n())
    throw std::invalid_argument("matrix side does not equal shape.p * shape.q");
}

}  // namespace

std::string ProfileWord::to_string() const {
  std::string out;
  bool small = true;
  for (int v : word) small = small && v <= 9;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (small) {
      out += static_cast<char>('0' + word[k]);
    } else {
      if (k) out += ',';
      out += std::to_string(word[k]);
    }
  }
  return out;
}

BinaryMatrix inner_partial_transpose(const BinaryMatrix& m, const BlockShape& shape) {
  check_shape(m, shape);
  const int p = shape.p(), q = shape.q();
  BinaryMatrix out(m.side());
  for (int u = 1; u <= p; ++u)
    for (int v = 1; v <= p; ++v)
      for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
          if (m.at((u - 1) * q + j, (v - 1) * q + i))
            out.set((u - 1) * q + i, (v - 1) * q + j, true);
  return out;
}

BinaryMatrix outer_block_transpose(const BinaryMatrix& m, const BlockShape& shape) {
  check_shape(m, shape);
  const int p = shape.p(), q = shape.q();
  BinaryMatrix out(m.side());
  for (int u = 1; u <= p; ++u)
    for (int v = 1; v <= p; ++v)
      for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
          if (m.at((v - 1) * q + i, (u - 1) * q + j))
            out.set((u - 1) * q + i, (v - 1) * q + j, true);
  return out;
}

bool is_permutation_matrix(const BinaryMatrix& m) {
  const int n = m.side();
  for (int r = 1; r <= n; ++r) {
    int ones = 0;
    for (int c = 1; c <= n; ++c) ones += m.at(r, c) ? 1 : 0;
    if (ones != 1) return false;
  }
  for (int c = 1; c <= n; ++c) {
    int ones = 0;
    for (int r = 1; r <= n; ++r) ones += m.at(r, c) ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

bool is_symmetric(const BinaryMatrix& m) {
  const int n = m.side();
  for (int r = 1; r <= n; ++r)
    for (int c = r + 1; c <= n; ++c)
      if (m.at(r, c) != m.at(c, r)) return false;
  return true;
}

ProfileWord profile(const BinaryMatrix& m) {
  ProfileWord out;
  const int n = m.side();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (m.at(r, c)) out.word.push_back(c);
  return out;
}

long long profile_sum(const BinaryMatrix& m) {
  long long total = 0;
  const int n = m.side();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (m.at(r, c)) total += c;
  return total;
}

long long row_index_sum(const BinaryMatrix& m) {
  long long total = 0;
  const int n = m.side();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (m.at(r, c)) total += r;
  return total;
}

std::optional<Permutation> to_permutation(const BinaryMatrix& m) {
  if (!is_permutation_matrix(m)) return std::nullopt;
  const int n = m.side();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (m.at(r, c)) word[static_cast<std::size_t>(r) - 1] = c;
  return Permutation(std::move(word));
}

Permutation shuffle_conjugate(const Permutation& pi, const BlockShape& shape) {
  if (pi.size() != shape.n())
    throw std::invalid_argument("permutation length does not equal shape.p * shape.q");
  const int q = shape.q();
  std::vector<int> word(static_cast<std::size_t>(pi.size()));
  for (int r = 1; r <= pi.size(); ++r) {
    const StrideIndex row = shape.stride_decompose(r);
    const StrideIndex col = shape.stride_decompose(pi.image_of(r));
    const int new_row = (row.offset - 1) * q + row.stride + 1;
    const int new_col = (col.offset - 1) * q + col.stride + 1;
    word[static_cast<std::size_t>(new_row) - 1] = new_col;
  }
  return Permutation(std::move(word));
}

}  // namespace ptcount

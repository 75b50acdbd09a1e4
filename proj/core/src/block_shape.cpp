#include "ptcount/block_shape.hpp"

#include <stdexcept>

namespace ptcount {

BlockShape::BlockShape(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw std::invalid_argument("block shape requires p >= 1 and q >= 1");
}

void BlockShape::check_range(int r) const {
  if (r < 1 || r > n()) throw std::out_of_range("index outside [1, n]");
}

BlockIndex BlockShape::block_decompose(int r) const {
  check_range(r);
  return {(r - 1) / q_ + 1, (r - 1) % q_ + 1};
}

int BlockShape::block_compose(int block, int offset) const {
  if (block < 1 || block > p_ || offset < 1 || offset > q_)
    throw std::out_of_range("block index outside [p] x [q]");
  return (block - 1) * q_ + offset;
}

StrideIndex BlockShape::stride_decompose(int r) const {
  check_range(r);
  return {(r - 1) / p_, (r - 1) % p_ + 1};
}

int BlockShape::stride_compose(int stride, int offset) const {
  if (stride < 0 || stride >= q_ || offset < 1 || offset > p_)
    throw std::out_of_range("stride index outside {0..q-1} x [p]");
  return stride * p_ + offset;
}

}  // namespace ptcount

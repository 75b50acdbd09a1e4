#pragma once

namespace ptcount {

/// r == (block - 1) * q + offset, block in [p], offset in [q].
struct BlockIndex {
  int block;
  int offset;
};

/// r == stride * p + offset, stride in {0, ..., q-1}, offset in [p].
struct StrideIndex {
  int stride;
  int offset;
};

/// Factorization n = p*q of a matrix side: a p-by-p grid of q-by-q blocks.
///
/// Two decompositions of a global 1-based index r in [n] are exposed, because
/// the block-transpose maps are phrased in the first and the shuffle
/// conjugation in the second. Degenerate shapes p=1 and q=1 are legal.
class BlockShape {
 public:
  /// Throws std::invalid_argument unless p >= 1 and q >= 1.
  BlockShape(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ * q_; }

  BlockIndex block_decompose(int r) const;
  int block_compose(int block, int offset) const;

  StrideIndex stride_decompose(int r) const;
  int stride_compose(int stride, int offset) const;

 private:
  void check_range(int r) const;

  int p_;
  int q_;
};

}  // namespace ptcount

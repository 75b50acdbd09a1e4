#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ptcount/binary_matrix.hpp"
#include "ptcount/block_shape.hpp"
#include "ptcount/permutation.hpp"

namespace ptcount {

/// The column index of each 1-entry of a matrix, scanned in row-major order.
/// For a permutation matrix this is exactly the one-line word.
struct ProfileWord {
  std::vector<int> word;

  std::string to_string() const;

  friend bool operator==(const ProfileWord&, const ProfileWord&) = default;
};

/// Transposes each q-by-q block of `m` in place (the Gamma_p operator).
/// Throws std::invalid_argument when m.side() != shape.n().
BinaryMatrix inner_partial_transpose(const BinaryMatrix& m, const BlockShape& shape);

/// Swaps block (u,v) with block (v,u) without transposing block interiors
/// (the Gamma_q operator). Composed with inner_partial_transpose, in either
/// order, it yields the full transpose.
BinaryMatrix outer_block_transpose(const BinaryMatrix& m, const BlockShape& shape);

/// True iff every row and every column contains exactly one 1.
bool is_permutation_matrix(const BinaryMatrix& m);

/// True iff m equals its full transpose. The identity is symmetric here;
/// callers that follow the stricter involution convention exclude it
/// themselves.
bool is_symmetric(const BinaryMatrix& m);

ProfileWord profile(const BinaryMatrix& m);

/// Sum of the profile word, i.e. the column-index sum of the 1-entries.
long long profile_sum(const BinaryMatrix& m);

/// Row-index sum of the 1-entries.
long long row_index_sum(const BinaryMatrix& m);

/// The one-line word of a permutation matrix, or nullopt.
std::optional<Permutation> to_permutation(const BinaryMatrix& m);

/// The reindexing bijection that exchanges the roles of p and q: a 1-entry at
/// (a*p + i, b*p + j), with a,b in {0,...,q-1} and i,j in [p], is sent to
/// ((i-1)*q + a + 1, (j-1)*q + b + 1). Its inverse is the (q,p) shuffle, and
/// it carries matrices whose (q,p)-partial-transpose is a permutation onto
/// matrices whose (p,q)-partial-transpose is one.
Permutation shuffle_conjugate(const Permutation& pi, const BlockShape& shape);

}  // namespace ptcount

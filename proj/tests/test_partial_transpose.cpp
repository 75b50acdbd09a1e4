#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "ptcount/enumeration.hpp"
#include "ptcount/partial_transpose.hpp"

using namespace ptcount;

namespace {

BinaryMatrix matrix_of(const std::string& word) {
  return BinaryMatrix::from_permutation(Permutation::parse(word));
}

BinaryMatrix random_binary_matrix(int n, std::mt19937& rng) {
  BinaryMatrix m(n);
  std::bernoulli_distribution bit(0.35);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

BinaryMatrix random_symmetric_matrix(int n, std::mt19937& rng) {
  BinaryMatrix m(n);
  std::bernoulli_distribution bit(0.35);
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c)
      if (bit(rng)) {
        m.set(r, c, true);
        m.set(c, r, true);
      }
  return m;
}

int block_ones(const BinaryMatrix& m, const BlockShape& shape, int u, int v) {
  int total = 0;
  for (int i = 1; i <= shape.q(); ++i)
    for (int j = 1; j <= shape.q(); ++j)
      total += m.at((u - 1) * shape.q() + i, (v - 1) * shape.q() + j) ? 1 : 0;
  return total;
}

const std::vector<std::pair<int, int>> kShapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {1, 4}, {4, 1}};

}  // namespace

TEST_CASE("the worked 4x4 example") {
  const BlockShape shape(2, 2);
  const BinaryMatrix image = inner_partial_transpose(matrix_of("3142"), shape);
  // exactly (1,2), (1,3), (4,2), (4,3)
  std::set<std::pair<int, int>> ones;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      if (image.at(r, c)) ones.insert({r, c});
  CHECK(ones == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {4, 2}, {4, 3}});
  CHECK_FALSE(is_permutation_matrix(image));
  CHECK(profile(image).to_string() == "2323");
  CHECK(profile_sum(image) == 10);
}

TEST_CASE("fixed points of the inner transpose") {
  const BlockShape shape(2, 2);
  CHECK(inner_partial_transpose(BinaryMatrix::identity(4), shape) ==
        BinaryMatrix::identity(4));
  CHECK(inner_partial_transpose(matrix_of("2143"), shape) == matrix_of("2143"));
}

TEST_CASE("outer block transpose") {
  const BlockShape shape(2, 2);
  CHECK(outer_block_transpose(BinaryMatrix::identity(4), shape) ==
        BinaryMatrix::identity(4));
  // both off-diagonal blocks of 3412 are identity blocks, so swapping them
  // changes nothing
  CHECK(outer_block_transpose(matrix_of("3412"), shape) == matrix_of("3412"));
}

TEST_CASE("shape mismatch is rejected") {
  CHECK_THROWS_AS(inner_partial_transpose(BinaryMatrix::identity(4), BlockShape(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(outer_block_transpose(BinaryMatrix::identity(6), BlockShape(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("permutation-matrix predicate") {
  CHECK(is_permutation_matrix(BinaryMatrix::identity(4)));
  CHECK_FALSE(is_permutation_matrix(
      inner_partial_transpose(matrix_of("3142"), BlockShape(2, 2))));
  CHECK(is_permutation_matrix(
      inner_partial_transpose(matrix_of("3412"), BlockShape(2, 2))));
  BinaryMatrix empty(3);
  CHECK_FALSE(is_permutation_matrix(empty));
}

TEST_CASE("symmetry predicate includes the identity") {
  CHECK(is_symmetric(BinaryMatrix::identity(4)));
  CHECK(is_symmetric(matrix_of("2143")));
  CHECK_FALSE(is_symmetric(matrix_of("2341")));
}

TEST_CASE("profile words from the reference table") {
  const BlockShape shape(2, 2);
  auto profile_of = [&](const std::string& word) {
    return profile(inner_partial_transpose(matrix_of(word), shape)).to_string();
  };
  CHECK(profile_of("1324") == "1414");
  CHECK(profile_of("2314") == "4114");
  CHECK(profile_of("2341") == "4123");
  CHECK(profile_of("3124") == "2314");
  CHECK(profile_of("3142") == "2323");
  // a misprint in the widely reproduced table: the true value is 1423
  CHECK(profile_of("1342") == "1423");
}

TEST_CASE("profile of a permutation matrix is its one-line word") {
  CHECK(profile(matrix_of("1234")).to_string() == "1234");
  std::mt19937 rng(7);
  for (int n : {3, 5, 8}) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    for (int rep = 0; rep < 20; ++rep) {
      std::shuffle(word.begin(), word.end(), rng);
      const Permutation pi(word);
      CHECK(profile(BinaryMatrix::from_permutation(pi)).word == pi.word());
    }
  }
}

TEST_CASE("index sums of a partial transpose equal n(n+1)/2") {
  for (int n : {4, 6}) {
    CHECK(profile_sum(BinaryMatrix::identity(n)) == n * (n + 1) / 2);
  }
  // every pi in S_6, both factorizations
  for (const auto [p, q] : {std::pair{2, 3}, {3, 2}}) {
    const BlockShape shape(p, q);
    LexPermutationStream stream(6);
    Permutation pi = Permutation::identity(6);
    while (stream.next(pi)) {
      const BinaryMatrix image =
          inner_partial_transpose(BinaryMatrix::from_permutation(pi), shape);
      CHECK(profile_sum(image) == 21);
      CHECK(row_index_sum(image) == 21);
    }
  }
}

TEST_CASE("applying the inner transpose twice returns the original") {
  std::mt19937 rng(11);
  for (const auto [p, q] : kShapes) {
    const BlockShape shape(p, q);
    for (int rep = 0; rep < 50; ++rep) {
      const BinaryMatrix m = random_binary_matrix(shape.n(), rng);
      CHECK(inner_partial_transpose(inner_partial_transpose(m, shape), shape) == m);
    }
  }
}

TEST_CASE("inner and outer compose to the full transpose, in either order") {
  std::mt19937 rng(13);
  for (const auto [p, q] : kShapes) {
    const BlockShape shape(p, q);
    for (int rep = 0; rep < 50; ++rep) {
      const BinaryMatrix m = random_binary_matrix(shape.n(), rng);
      const BinaryMatrix t = m.transposed();
      CHECK(outer_block_transpose(inner_partial_transpose(m, shape), shape) == t);
      CHECK(inner_partial_transpose(outer_block_transpose(m, shape), shape) == t);
    }
  }
}

TEST_CASE("per-block 1-counts are preserved") {
  std::mt19937 rng(17);
  for (const auto [p, q] : kShapes) {
    const BlockShape shape(p, q);
    for (int rep = 0; rep < 20; ++rep) {
      const BinaryMatrix m = random_binary_matrix(shape.n(), rng);
      const BinaryMatrix image = inner_partial_transpose(m, shape);
      CHECK(image.count_ones() == m.count_ones());
      for (int u = 1; u <= p; ++u)
        for (int v = 1; v <= p; ++v)
          CHECK(block_ones(image, shape, u, v) == block_ones(m, shape, u, v));
    }
  }
}

TEST_CASE("symmetry survives the inner transpose") {
  std::mt19937 rng(19);
  for (const auto [p, q] : kShapes) {
    const BlockShape shape(p, q);
    for (int rep = 0; rep < 30; ++rep) {
      const BinaryMatrix m = random_symmetric_matrix(shape.n(), rng);
      CHECK(is_symmetric(inner_partial_transpose(m, shape)));
    }
  }
}

TEST_CASE("degenerate shapes: p=1 is the full transpose, q=1 the identity map") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const BinaryMatrix m = random_binary_matrix(5, rng);
    CHECK(inner_partial_transpose(m, BlockShape(1, 5)) == m.transposed());
    CHECK(inner_partial_transpose(m, BlockShape(5, 1)) == m);
  }
}

TEST_CASE("shuffle conjugation examples") {
  CHECK(shuffle_conjugate(Permutation::identity(6), BlockShape(2, 3)) ==
        Permutation::identity(6));
  CHECK(shuffle_conjugate(Permutation::parse("3412"), BlockShape(2, 2)).to_string() ==
        "2143");
  CHECK_THROWS_AS(shuffle_conjugate(Permutation::identity(4), BlockShape(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("the (q,p) shuffle inverts the (p,q) shuffle") {
  for (const auto [p, q] : {std::pair{2, 2}, {1, 4}, {4, 1}}) {
    const BlockShape forward(p, q);
    const BlockShape backward(q, p);
    LexPermutationStream stream(4);
    Permutation pi = Permutation::identity(4);
    while (stream.next(pi))
      CHECK(shuffle_conjugate(shuffle_conjugate(pi, forward), backward) == pi);
  }
}

TEST_CASE("shuffling is a bijection that transports the permutation property") {
  // The (p,q) shuffle carries matrices whose (q,p)-transpose is a permutation
  // onto matrices whose (p,q)-transpose is one; this is what makes the two
  // counts equal.
  for (const auto [p, q] : {std::pair{2, 3}, {3, 2}, {2, 2}}) {
    const BlockShape forward(p, q);
    const BlockShape swapped(q, p);
    const int n = forward.n();
    std::set<Permutation> images;
    LexPermutationStream stream(n);
    Permutation pi = Permutation::identity(n);
    std::size_t total = 0;
    while (stream.next(pi)) {
      ++total;
      const Permutation image = shuffle_conjugate(pi, forward);
      images.insert(image);
      const bool before = is_permutation_matrix(
          inner_partial_transpose(BinaryMatrix::from_permutation(pi), swapped));
      const bool after = is_permutation_matrix(
          inner_partial_transpose(BinaryMatrix::from_permutation(image), forward));
      CHECK(before == after);
    }
    CHECK(images.size() == total);
  }
}

TEST_CASE("matrix to permutation round-trip") {
  CHECK(to_permutation(matrix_of("3142")) == Permutation::parse("3142"));
  CHECK_FALSE(to_permutation(inner_partial_transpose(matrix_of("3142"), BlockShape(2, 2)))
                  .has_value());
}

TEST_CASE("profile words render with separators once values pass 9") {
  const Permutation big = Permutation::parse("10,9,8,7,6,5,4,3,2,1");
  CHECK(profile(BinaryMatrix::from_permutation(big)).to_string() ==
        "10,9,8,7,6,5,4,3,2,1");
  CHECK(big.to_string() == "10,9,8,7,6,5,4,3,2,1");
}

TEST_CASE("matrix accessors validate their indices") {
  BinaryMatrix m(3);
  CHECK_THROWS_AS(m.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.at(1, 4), std::out_of_range);
  CHECK_THROWS_AS(m.set(4, 1, true), std::out_of_range);
  CHECK_THROWS_AS(BinaryMatrix(0), std::invalid_argument);
}

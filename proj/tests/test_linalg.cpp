#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <vector>

#include "json.hpp"
#include "secant/errors.hpp"
#include "secant/linalg.hpp"

using namespace secant;

namespace {

const Field kGF = Field::prime_field();
const Field kQQ = Field::rationals();

// Random matrix of the given shape whose rank is at most `r`: a product of
// (rows x r) and (r x cols) random factors.
Matrix random_low_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t r,
                       Rng& rng) {
  Matrix a(f, rows, r), b(f, r, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k) a.at(i, k) = random_scalar(f, rng);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < cols; ++j) b.at(k, j) = random_scalar(f, rng);
  return a * b;
}

Matrix random_shape(const Field& f, Rng& rng) {
  const std::size_t rows = rng.uniform_below(7), cols = rng.uniform_below(7);
  return random_low_rank(f, rows, cols, rng.uniform_below(6), rng);
}

bool annihilates(const Matrix& m, const Matrix& kernel) {
  return kernel.rows() == 0 || (m * kernel.transpose()).is_zero();
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(kGF, 3, 4)) == 0);
  CHECK(rank(Matrix(kGF, 0, 5)) == 0);
  CHECK(rank(Matrix::identity(kGF, 5)) == 5);
  CHECK(rank(Matrix::from_ints(kGF, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_ints(kQQ, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_ints(kQQ, {{2, 0, 1}, {0, 3, 1}, {4, 3, 3}})) == 2);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(kGF, 4)).rows() == 0);
  const Matrix k = kernel_basis(Matrix::from_ints(kGF, {{1, -1}}));
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == k.at(0, 1));
  CHECK_FALSE(k.at(0, 0).is_zero());
  CHECK(kernel_basis(Matrix(kGF, 2, 3)).rows() == 3);
}

TEST_CASE("random 4x7 kernel matches the oracle") {
  std::ifstream in(SECANT_FIXTURE_DIR "/oracle_values.json");
  REQUIRE(in.good());
  const auto oracle = nlohmann::json::parse(in)["kernel_4x7"];
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_low_rank(kGF, 4, 7, 4, rng);
    const Matrix k = kernel_basis(m);
    CHECK(rank(m) == oracle["rank"].get<int>());
    CHECK(k.rows() == oracle["kernel_rows"].get<std::size_t>());
    CHECK(annihilates(m, k) == oracle["annihilated"].get<bool>());
  }
}

TEST_CASE("row echelon pivots") {
  const Echelon e = row_echelon(Matrix::from_ints(kGF, {{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced.rows() == 2);
  CHECK(e.reduced.at(0, 0).is_one());
  CHECK(e.reduced.at(1, 1).is_one());
  CHECK(e.reduced.at(0, 1).is_zero());
}

TEST_CASE("reduce_modulo_rowspace examples") {
  const Matrix s = Matrix::from_ints(kGF, {{1, 0, 1}, {0, 1, 1}});
  CHECK(reduce_modulo_rowspace(Matrix::from_ints(kGF, {{2, 3, 5}, {1, 1, 2}}), s).is_zero());
  const Matrix v = Matrix::from_ints(kGF, {{4, 5, 6}});
  CHECK(reduce_modulo_rowspace(v, Matrix(kGF, 0, 3)) == v);
  const Matrix r = reduce_modulo_rowspace(Matrix::from_ints(kGF, {{0, 0, 1}}), s);
  CHECK(r.at(0, 0).is_zero());
  CHECK(r.at(0, 1).is_zero());
  CHECK(r.at(0, 2).is_one());
  CHECK_THROWS_AS(reduce_modulo_rowspace(v, Matrix::identity(kGF, 2)), DimensionMismatchError);
}

TEST_CASE("rank agrees with its transpose") {
  for (const Field& f : {kGF, kQQ}) {
    Rng rng(100);
    for (int c = 0; c < 1000; ++c) {
      const Matrix m = random_shape(f, rng);
      REQUIRE(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("rank is invariant under row shuffles and invertible factors") {
  Rng rng(200);
  for (int c = 0; c < 300; ++c) {
    const Matrix m = random_shape(kGF, rng);
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform_below(i)]);
    Matrix shuffled(kGF, 0, m.cols());
    for (std::size_t i : order) shuffled.append_row(m.row(i));
    REQUIRE(rank(shuffled) == rank(m));

    Matrix g = random_low_rank(kGF, m.rows(), m.rows(), m.rows(), rng);
    if (rank(g) == static_cast<int>(m.rows())) REQUIRE(rank(g * m) == rank(m));
  }
}

TEST_CASE("kernel dimension theorem") {
  for (const Field& f : {kGF, kQQ}) {
    Rng rng(300);
    for (int c = 0; c < 1000; ++c) {
      const Matrix m = random_shape(f, rng);
      const Matrix k = kernel_basis(m);
      REQUIRE(rank(m) + static_cast<int>(k.rows()) == static_cast<int>(m.cols()));
      REQUIRE(annihilates(m, k));
      REQUIRE(rank(k) == static_cast<int>(k.rows()));
    }
  }
}

TEST_CASE("reduce_modulo_rowspace rank additivity") {
  Rng rng(400);
  for (int c = 0; c < 1000; ++c) {
    const std::size_t cols = 1 + rng.uniform_below(7);
    const Matrix v = random_low_rank(kGF, rng.uniform_below(5), cols, rng.uniform_below(5), rng);
    const Matrix s = random_low_rank(kGF, rng.uniform_below(5), cols, rng.uniform_below(5), rng);
    const Matrix r = reduce_modulo_rowspace(v, s);
    REQUIRE(r.rows() == v.rows());
    REQUIRE(rank(stack(v, s)) == rank(r) + rank(s));
    REQUIRE(rank(stack(r, s)) == rank(stack(v, s)));
    for (std::size_t p : row_echelon(s).pivots)
      for (std::size_t i = 0; i < r.rows(); ++i) REQUIRE(r.at(i, p).is_zero());
  }
}

TEST_CASE("stacked rank dominates each block") {
  Rng rng(500);
  for (int c = 0; c < 200; ++c) {
    const std::size_t cols = rng.uniform_below(6);
    const Matrix a = random_low_rank(kGF, rng.uniform_below(4), cols, 3, rng);
    const Matrix b = random_low_rank(kGF, rng.uniform_below(4), cols, 3, rng);
    const int r = rank(stack(a, b));
    REQUIRE(r >= rank(a));
    REQUIRE(r >= rank(b));
  }
}

TEST_CASE("rational and prime ranks agree on small integer matrices") {
  Rng rng(600);
  for (int c = 0; c < 300; ++c) {
    const std::size_t rows = 1 + rng.uniform_below(5), cols = 1 + rng.uniform_below(5);
    std::vector<std::vector<std::int64_t>> entries(rows, std::vector<std::int64_t>(cols));
    for (auto& row : entries)
      for (auto& x : row) x = rng.uniform_int(-3, 3);
    REQUIRE(rank(Matrix::from_ints(kGF, entries)) == rank(Matrix::from_ints(kQQ, entries)));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/matrix.hpp"

using namespace leibniz;

namespace {
Matrix mat(const Field& f, std::size_t rows, std::size_t cols,
           std::initializer_list<long> entries) {
  Matrix m(f, rows, cols);
  std::size_t k = 0;
  for (auto e : entries) {
    m.at(k / cols, k % cols) = Scalar::of_int(f, e);
    ++k;
  }
  return m;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::of_int(f, long(rng() % 7) - 3);
  return m;
}
}  // namespace

TEST_CASE("rref canonical form") {
  Field q = Field::rationals();
  Matrix m = mat(q, 3, 3, {2, 4, 6, 1, 2, 3, 0, 1, 1});
  auto [r, pivots] = m.rref();
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.at(0, 0) == Scalar::one(q));
  CHECK(r.at(0, 1) == Scalar::zero(q));   // pivot column cleared
  CHECK(r.at(0, 2) == Scalar::of_int(q, 1));
  CHECK(r.at(1, 2) == Scalar::of_int(q, 1));
  CHECK(m.rank() == 2);
}

TEST_CASE("kernel is exact") {
  Field q = Field::rationals();
  // x + 2y + 3z = 0 has kernel of dim 2
  Matrix m = mat(q, 1, 3, {1, 2, 3});
  Matrix k = m.kernel();
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i)
    CHECK(is_zero(m.apply(k.row(i))));
  // kernel of identity is empty
  CHECK(Matrix::identity(q, 3).kernel().rows() == 0);
}

TEST_CASE("solve pins free variables to zero") {
  Field q = Field::rationals();
  Matrix a = mat(q, 1, 2, {1, 1});
  Vector b{Scalar::one(q)};
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == Vector{Scalar::one(q), Scalar::zero(q)});

  Matrix bad = mat(q, 2, 2, {1, 0, 1, 0});
  CHECK(!bad.solve(Vector{Scalar::one(q), Scalar::of_int(q, 2)}).has_value());

  Matrix id = Matrix::identity(q, 3);
  Vector v{Scalar::of_int(q, 4), Scalar::of_int(q, 5), Scalar::of_int(q, 6)};
  CHECK(*id.solve(v) == v);
}

TEST_CASE("inverse round trip") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    int found = 0;
    while (found < 5) {
      Matrix m = random_matrix(f, 3, 3, rng);
      auto inv = m.inverse();
      if (!inv) continue;
      ++found;
      CHECK(*inv * m == Matrix::identity(f, 3));
      CHECK(m * *inv == Matrix::identity(f, 3));
    }
    // singular matrices have no inverse
    CHECK(!Matrix(f, 2, 2).inverse().has_value());
  }
}

TEST_CASE("product and apply agree") {
  std::mt19937_64 rng(13);
  Field f = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(f, 3, 4, rng);
    Matrix b = random_matrix(f, 4, 2, rng);
    Matrix ab = a * b;
    for (std::size_t j = 0; j < 2; ++j) CHECK(ab.col(j) == a.apply(b.col(j)));
  }
}

TEST_CASE("degenerate shapes") {
  Field q = Field::rationals();
  Matrix e(q, 0, 0);
  CHECK(e.rank() == 0);
  CHECK(e.inverse().has_value());
  CHECK(e.kernel().rows() == 0);
  CHECK(e.solve(Vector{}).has_value());
  Matrix zc(q, 2, 0);  // no columns: kernel empty, solve only for b = 0
  CHECK(zc.kernel().rows() == 0);
  CHECK(zc.solve(zero_vector(q, 2)).has_value());
  CHECK(!zc.solve(Vector{Scalar::one(q), Scalar::zero(q)}).has_value());
}

#pragma once

// Shared fixture algebras for the test binaries. Expected values asserted in
// the tests were computed by hand from these bracket tables or by the
// brute-force oracles defined alongside the tests.

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"

namespace fixtures {

inline leibniz::Vector vec(const leibniz::Field& f,
                           std::initializer_list<long> entries) {
  leibniz::Vector v;
  for (auto e : entries) v.push_back(leibniz::Scalar::of_int(f, e));
  return v;
}

// entry of a sparse bracket table: [e_i, e_j] = sum of coeff * e_k
struct BracketEntry {
  std::size_t i, j;
  std::vector<std::pair<std::size_t, long>> value;
};

inline leibniz::LeibnizAlgebra make_algebra(
    const leibniz::Field& f, std::size_t dim,
    std::vector<std::string> names, const std::vector<BracketEntry>& table) {
  std::vector<std::vector<leibniz::Vector>> sc(
      dim, std::vector<leibniz::Vector>(dim, leibniz::zero_vector(f, dim)));
  for (const auto& e : table)
    for (const auto& [k, c] : e.value)
      sc[e.i][e.j][k] = sc[e.i][e.j][k] + leibniz::Scalar::of_int(f, c);
  return leibniz::LeibnizAlgebra(f, dim, std::move(names), std::move(sc));
}

// dim 4, basis a1..a4; nonzero brackets:
//   [a1,a1] = a4, [a1,a2] = -a2, [a2,a1] = a2, [a3,a1] = -a3, [a3,a2] = a4
inline leibniz::LeibnizAlgebra make_l5(const leibniz::Field& f) {
  return make_algebra(f, 4, {"a1", "a2", "a3", "a4"},
                      {{0, 0, {{3, 1}}},
                       {0, 1, {{1, -1}}},
                       {1, 0, {{1, 1}}},
                       {2, 0, {{2, -1}}},
                       {2, 1, {{3, 1}}}});
}

// dim 2, basis a1, a2; only nonzero bracket [a1,a1] = a2
inline leibniz::LeibnizAlgebra make_n2(const leibniz::Field& f) {
  return make_algebra(f, 2, {"a1", "a2"}, {{0, 0, {{1, 1}}}});
}

// dim 3, basis a1..a3; only nonzero bracket [a1,a3] = a1
inline leibniz::LeibnizAlgebra make_a3(const leibniz::Field& f) {
  return make_algebra(f, 3, {"a1", "a2", "a3"}, {{0, 2, {{0, 1}}}});
}

// random invertible matrix over f (small integer entries; retries until
// the determinant is nonzero)
inline leibniz::Matrix random_invertible(const leibniz::Field& f,
                                         std::size_t dim,
                                         std::mt19937_64& rng) {
  for (;;) {
    leibniz::Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m.at(i, j) = leibniz::Scalar::of_int(f, long(rng() % 5) - 2);
    if (m.rank() == dim) return m;
  }
}

// Random Leibniz algebra: brackets of the first `head` basis vectors land in
// the span of the remaining `dim - head` ones, and that tail brackets to
// zero, so both sides of the Leibniz identity vanish identically. The
// grading is then hidden by conjugating with a random basis change
// (sc'[i][j] = P^{-1} [P e_i, P e_j]).
inline leibniz::LeibnizAlgebra random_central_algebra(
    const leibniz::Field& f, std::size_t dim, std::mt19937_64& rng) {
  using namespace leibniz;
  std::size_t head = dim == 0 ? 0 : rng() % (dim + 1);
  std::vector<std::vector<Vector>> sc(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  for (std::size_t i = 0; i < head; ++i)
    for (std::size_t j = 0; j < head; ++j)
      for (std::size_t k = head; k < dim; ++k)
        sc[i][j][k] = Scalar::of_int(f, long(rng() % 5) - 2);
  Matrix p = random_invertible(f, dim, rng);
  Matrix pinv = p.inverse().value();
  std::vector<std::vector<Vector>> conj(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  LeibnizAlgebra graded(f, dim, {}, sc);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      conj[i][j] = pinv.apply(graded.bracket(p.col(i), p.col(j)));
  return LeibnizAlgebra(f, dim, {}, std::move(conj));
}

}  // namespace fixtures

#pragma once

#include <random>

#include "leibniz/isoclinism.hpp"

namespace leibniz {

// Deterministic generators for the property suites. Every draw comes from
// the caller's engine, so a fixed seed reproduces the exact run.

// small integer entries, retried until invertible
Matrix random_invertible(const Field& f, std::size_t dim, std::mt19937_64& rng);

// Random Leibniz algebra, valid by construction: brackets of the leading
// basis vectors land in the span of the trailing ones, the trailing vectors
// annihilate both sides, and the grading is then hidden by a random change
// of basis.
LeibnizAlgebra random_central_algebra(const Field& f, std::size_t dim,
                                      std::mt19937_64& rng);

// the same multiplication written on the basis P e_1, ..., P e_d, plus the
// algebra isomorphism (new -> old) sending e_i to P e_i
struct BasisChange {
  LeibnizAlgebra algebra;
  Homomorphism iso;
};
BasisChange change_basis(const LeibnizAlgebra& a, const Matrix& p);

// A witness that verifies by construction, drawn from three shapes: a
// random change of basis (any n), a direct sum with a small abelian
// algebra, or the quotient of such a sum by the added line (both n >= 1).
// Source dimensions stay at most max_dim (>= 1).
IsoclinismWitness random_verified_witness(const Field& f, std::size_t max_dim,
                                          std::size_t n, std::mt19937_64& rng);

}  // namespace leibniz

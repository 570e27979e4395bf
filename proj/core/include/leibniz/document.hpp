#pragma once

#include <string>

#include "leibniz/isoclinism.hpp"

namespace leibniz {

// Parsed algebra file, held before the Leibniz identity has been checked so
// callers can report violations instead of failing outright.
//
// Format (UTF-8 JSON): field is "Q" or {"p": odd prime}; dim is the
// dimension; basis lists the dim basis names; brackets lists entries
// {left, right, value} with value a list of {k, c} meaning
// [e_left, e_right] has coefficient c (a scalar string) on e_k.
// Unlisted bracket pairs are zero; repeated entries accumulate.
struct AlgebraDocument {
  Field field;
  std::size_t dim;
  std::vector<std::string> names;
  std::vector<std::vector<Vector>> table;  // table[i][j] = [e_i, e_j]

  // run the identity check and build the algebra (throws IdentityError)
  LeibnizAlgebra build() const;
};

// Throw ParseError on malformed text (syntax or schema); byte positions are
// included for syntax errors.
AlgebraDocument parse_algebra_document(const std::string& text);
AlgebraDocument read_algebra_document(const std::string& path);

// parse + identity check in one step
LeibnizAlgebra parse_algebra(const std::string& text);
LeibnizAlgebra load_algebra(const std::string& path);

// Canonical serialization: keys sorted, brackets ordered by (left, right),
// value terms ordered by k, zero coefficients dropped, two-space indent,
// trailing newline. load(save(A)) reproduces A exactly, and saving twice
// yields identical bytes.
std::string format_algebra(const LeibnizAlgebra& a);
void save_algebra(const std::string& path, const LeibnizAlgebra& a);

// Witness file {algebra1, algebra2, eta_matrix, n, xi_matrix}: the two
// algebra documents plus the matrices of eta (on the canonical bases of the
// central quotients) and xi (on the bases of the commutator terms), as rows
// of scalar strings. Matrix shapes are validated against the level data
// recomputed from the algebras; the commuting diagram is not re-checked
// here (verify_witness does that).
IsoclinismWitness parse_witness(const std::string& text);
IsoclinismWitness load_witness(const std::string& path);
std::string format_witness(const IsoclinismWitness& w);
void save_witness(const std::string& path, const IsoclinismWitness& w);

}  // namespace leibniz

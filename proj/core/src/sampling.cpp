#include "leibniz/sampling.hpp"

namespace leibniz {
namespace {

Scalar small_entry(const Field& f, std::mt19937_64& rng) {
  return Scalar::of_int(f, long(rng() % 5) - 2);
}

}  // namespace

Matrix random_invertible(const Field& f, std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = small_entry(f, rng);
    if (m.rank() == dim) return m;
  }
}

LeibnizAlgebra random_central_algebra(const Field& f, std::size_t dim,
                                      std::mt19937_64& rng) {
  std::size_t head = dim == 0 ? 0 : rng() % (dim + 1);
  std::vector<std::vector<Vector>> sc(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  for (std::size_t i = 0; i < head; ++i)
    for (std::size_t j = 0; j < head; ++j)
      for (std::size_t k = head; k < dim; ++k)
        sc[i][j][k] = small_entry(f, rng);
  LeibnizAlgebra graded(f, dim, {}, std::move(sc));
  return change_basis(graded, random_invertible(f, dim, rng)).algebra;
}

BasisChange change_basis(const LeibnizAlgebra& a, const Matrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim() || p.rank() != a.dim())
    throw Error("change_basis: need an invertible dim x dim matrix");
  Matrix pinv = p.inverse().value();
  std::vector<std::vector<Vector>> sc(
      a.dim(), std::vector<Vector>(a.dim(), zero_vector(a.field(), a.dim())));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      sc[i][j] = pinv.apply(a.bracket(p.col(i), p.col(j)));
  LeibnizAlgebra moved(a.field(), a.dim(), {}, std::move(sc));
  Homomorphism iso(moved, a, p);
  return BasisChange{std::move(moved), std::move(iso)};
}

IsoclinismWitness random_verified_witness(const Field& f, std::size_t max_dim,
                                          std::size_t n, std::mt19937_64& rng) {
  if (max_dim == 0)
    throw Error("random_verified_witness: max_dim must be positive");
  std::size_t kind = n == 0 ? 0 : rng() % 3;
  std::size_t dim = 1 + rng() % max_dim;
  LeibnizAlgebra a = random_central_algebra(f, dim, rng);
  switch (kind) {
    case 1:
      return witness_direct_sum(a, LeibnizAlgebra::abelian(f, 1 + rng() % 2), n);
    case 2: {
      DirectSum s = direct_sum(a, LeibnizAlgebra::abelian(f, 1));
      Subspace line = Subspace::span(
          f, dim + 1, {unit_vector(f, dim + 1, dim)});
      return witness_quotient(s.algebra, line, n);
    }
    default:
      return witness_from_isomorphism(
          change_basis(a, random_invertible(f, dim, rng)).iso, n);
  }
}

}  // namespace leibniz

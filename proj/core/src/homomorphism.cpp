#include "leibniz/homomorphism.hpp"

#include <utility>

namespace leibniz {

Homomorphism::Homomorphism(LeibnizAlgebra source, LeibnizAlgebra target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
  if (!(source_.field() == target_.field()))
    throw Error("homomorphism: source and target fields differ");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error("homomorphism: matrix must be target-dim x source-dim");
}

Homomorphism Homomorphism::identity(const LeibnizAlgebra& a) {
  return Homomorphism(a, a, Matrix::identity(a.field(), a.dim()));
}

Homomorphism Homomorphism::zero(const LeibnizAlgebra& source,
                                const LeibnizAlgebra& target) {
  return Homomorphism(source, target,
                      Matrix(source.field(), target.dim(), source.dim()));
}

Homomorphism Homomorphism::from_images(const LeibnizAlgebra& source,
                                       const LeibnizAlgebra& target,
                                       const std::vector<Vector>& images) {
  if (images.size() != source.dim())
    throw Error("from_images: need one image per source basis vector");
  Matrix m(source.field(), target.dim(), source.dim());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].size() != target.dim())
      throw Error("from_images: image has wrong length");
    for (std::size_t i = 0; i < target.dim(); ++i) m.at(i, j) = images[j][i];
  }
  return Homomorphism(source, target, std::move(m));
}

Vector Homomorphism::apply(const Vector& x) const { return matrix_.apply(x); }

Subspace Homomorphism::apply(const Subspace& s) const {
  if (s.ambient() != source_.dim()) throw Error("apply: wrong ambient");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(apply(s.basis().row(r)));
  return rows.empty() ? Subspace::zero(target_.field(), target_.dim())
                      : Subspace::span(target_.field(), target_.dim(), rows);
}

Subspace Homomorphism::kernel() const {
  std::vector<Vector> rows = matrix_.kernel().row_list();
  return rows.empty() ? Subspace::zero(source_.field(), source_.dim())
                      : Subspace::span(source_.field(), source_.dim(), rows);
}

Subspace Homomorphism::image() const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < matrix_.cols(); ++j) cols.push_back(matrix_.col(j));
  return cols.empty() ? Subspace::zero(target_.field(), target_.dim())
                      : Subspace::span(target_.field(), target_.dim(), cols);
}

bool Homomorphism::is_injective() const { return kernel().is_zero(); }
bool Homomorphism::is_surjective() const { return image().dim() == target_.dim(); }
bool Homomorphism::is_bijective() const { return is_injective() && is_surjective(); }

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!f.target().same_structure(g.source()))
    throw Error("compose: inner target does not match outer source");
  return Homomorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Homomorphism invert(const Homomorphism& f) {
  if (f.source().dim() != f.target().dim())
    throw Error("invert: map is not square");
  std::optional<Matrix> inv = f.matrix().inverse();
  if (!inv) throw Error("invert: map is not bijective");
  return Homomorphism(f.target(), f.source(), std::move(*inv));
}

HomReport analyze_homomorphism(const Homomorphism& f) {
  HomReport report{true, f.kernel(), f.image(), {}};
  const LeibnizAlgebra& s = f.source();
  const LeibnizAlgebra& t = f.target();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vector lhs = f.apply(s.sc(i, j));
      Vector rhs = t.bracket(f.apply(unit_vector(s.field(), s.dim(), i)),
                             f.apply(unit_vector(s.field(), s.dim(), j)));
      if (!(lhs == rhs)) {
        report.is_homomorphism = false;
        report.violations.push_back({i, j, lhs, rhs});
      }
    }
  }
  return report;
}

bool is_isomorphism(const Homomorphism& f) {
  return f.is_bijective() && analyze_homomorphism(f).is_homomorphism;
}

}  // namespace leibniz

#pragma once

#include <optional>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

// Subspace of K^ambient in canonical form: the basis is the unique RREF basis
// (unit pivots, strictly increasing pivot columns, pivot columns otherwise
// zero). Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient,
                       const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // v minus its projection onto the pivot coordinates; zero iff contains(v)
  Vector reduce(const Vector& v) const;
  // coordinates of v in the RREF basis; nullopt when v is outside
  std::optional<Vector> coordinates(const Vector& v) const;
  // standard unit vectors at the non-pivot columns (the canonical complement)
  std::vector<Vector> complement_coordinates() const;
  // their column indices, ascending
  std::vector<std::size_t> complement_indices() const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Subspace(const Field& f, std::size_t ambient, Matrix basis,
           std::vector<std::size_t> pivots);
  Field field_;
  std::size_t ambient_;
  Matrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// all field elements 0..p-1; prime fields only
std::vector<Scalar> field_elements(const Field& f);
// all p^dim elements of the subspace, lexicographic in basis coefficients
std::vector<Vector> subspace_elements(const Subspace& s);
// every subspace of F_p^ambient, deterministic order (by dimension, then by
// pivot set, then lexicographic in the free entries)
std::vector<Subspace> all_subspaces(const Field& f, std::size_t ambient);

}  // namespace leibniz

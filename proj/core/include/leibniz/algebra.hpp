#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

// one Leibniz-identity violation: both sides of [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j]
struct IdentityViolation {
  std::size_t i, j, k;
  Vector lhs, rhs;
};

struct StructureCheck {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

// raw structure-constant check, usable before an algebra object exists
StructureCheck check_structure(const Field& f, std::size_t dim,
                               const std::vector<std::vector<Vector>>& sc);

// thrown by the constructor when the table fails the Leibniz identity
struct IdentityError : Error {
  explicit IdentityError(StructureCheck report);
  StructureCheck report;
};

// Finite-dimensional Leibniz algebra given by structure constants:
// sc[i][j] = coordinates of [e_i, e_j]. The Leibniz identity
// [x,[y,z]] = [[x,y],z] - [[x,z],y] is verified on all basis triples
// at construction.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra(const Field& f, std::size_t dim, std::vector<std::string> names,
                 std::vector<std::vector<Vector>> sc);
  static LeibnizAlgebra abelian(const Field& f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const Vector& sc(std::size_t i, std::size_t j) const { return sc_[i][j]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector lie_bracket(const Vector& x, const Vector& y) const;  // [x,y] + [y,x]

  Subspace zero_subspace() const { return Subspace::zero(field_, dim_); }
  Subspace full_subspace() const { return Subspace::full(field_, dim_); }

  // equal structure constants (names ignored); the witness-chaining test
  bool same_structure(const LeibnizAlgebra& o) const;
  bool operator==(const LeibnizAlgebra& o) const;
  std::string describe_subspace(const Subspace& s) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> sc_;
};

// element of a specific algebra; thin convenience over Vector
struct Element {
  const LeibnizAlgebra* algebra;
  Vector coords;
  static Element basis(const LeibnizAlgebra& a, std::size_t i);
  static Element of(const LeibnizAlgebra& a, Vector coords);
};
Element bracket(const Element& x, const Element& y);
Element lie_bracket(const Element& x, const Element& y);
Element operator+(const Element& x, const Element& y);
Element operator*(const Scalar& c, const Element& x);
bool operator==(const Element& x, const Element& y);

// report form of the constructor-time check (always clean on live objects)
StructureCheck check_leibniz(const LeibnizAlgebra& a);

struct SubspaceFlags {
  bool subalgebra = false;
  bool left_ideal = false;   // [g, S] within S
  bool right_ideal = false;  // [S, g] within S
  bool two_sided_ideal = false;
};

// smallest two-sided ideal containing s
Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s);
SubspaceFlags classify_subspace(const LeibnizAlgebra& a, const Subspace& s);
// two-sided ideal closure of span{ [m_i, n_j]_lie }
Subspace lie_commutator_ideal(const LeibnizAlgebra& a, const Subspace& m,
                              const Subspace& n);
// { z : [e_i, z]_lie = 0 for all i }
Subspace lie_center(const LeibnizAlgebra& a);
// { g : [g, m]_lie in n for all m in a basis of m }
Subspace lie_centralizer(const LeibnizAlgebra& a, const Subspace& m,
                         const Subspace& n);
// span{ [e_i, e_j]_lie : i <= j } closed into an ideal; equals the span of
// all squares [x, x] by polarization (1/2 lies in the field)
Subspace ann_ideal(const LeibnizAlgebra& a);

// gamma_1 = n, gamma_{i+1} = [gamma_i, g]_Lie, until two consecutive terms
// agree; the stabilized value appears once
std::vector<Subspace> lower_lie_series(const LeibnizAlgebra& a, const Subspace& n);
// Z_0 = 0, Z_{i+1} = centralizer(g, Z_i), until stable
std::vector<Subspace> upper_lie_series(const LeibnizAlgebra& a);
// gamma_k(a, n) with saturation past stabilization; k >= 1
Subspace lower_term(const LeibnizAlgebra& a, const Subspace& n, std::size_t k);
// Z_k with saturation; k >= 0
Subspace upper_term(const LeibnizAlgebra& a, std::size_t k);
// smallest c with gamma_{c+1} = 0, absent when the series stabilizes nonzero
std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra& a,
                                            const Subspace& n);

}  // namespace leibniz

#include "leibniz/algebra.hpp"

#include <sstream>
#include <utility>

namespace leibniz {

namespace {

Vector sc_bracket(const Field& f, std::size_t dim,
                  const std::vector<std::vector<Vector>>& sc, const Vector& x,
                  const Vector& y) {
  Vector out = zero_vector(f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) out[k] += c * sc[i][j][k];
    }
  }
  return out;
}

std::string violation_message(const StructureCheck& report) {
  std::ostringstream os;
  os << "structure constants violate the Leibniz identity ("
     << report.violations.size() << " basis triple(s));";
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    os << " first at (i,j,k) = (" << v.i << "," << v.j << "," << v.k
       << "): [e_i,[e_j,e_k]] = " << vector_str(v.lhs)
       << " but [[e_i,e_j],e_k] - [[e_i,e_k],e_j] = " << vector_str(v.rhs);
  }
  return os.str();
}

}  // namespace

StructureCheck check_structure(const Field& f, std::size_t dim,
                               const std::vector<std::vector<Vector>>& sc) {
  if (sc.size() != dim) throw Error("structure constants: need dim rows");
  for (const auto& row : sc) {
    if (row.size() != dim) throw Error("structure constants: need dim columns");
    for (const auto& v : row) {
      if (v.size() != dim) throw Error("structure constants: entries must have length dim");
      for (const auto& s : v) {
        if (!(s.field() == f)) throw Error("structure constants: entry from wrong field");
      }
    }
  }
  StructureCheck report;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        // lhs = [e_i, [e_j, e_k]]
        Vector lhs = sc_bracket(f, dim, sc, unit_vector(f, dim, i), sc[j][k]);
        // rhs = [[e_i, e_j], e_k] - [[e_i, e_k], e_j]
        Vector rhs = sub(sc_bracket(f, dim, sc, sc[i][j], unit_vector(f, dim, k)),
                         sc_bracket(f, dim, sc, sc[i][k], unit_vector(f, dim, j)));
        if (!(lhs == rhs)) {
          report.ok = false;
          report.violations.push_back({i, j, k, lhs, rhs});
        }
      }
    }
  }
  return report;
}

IdentityError::IdentityError(StructureCheck r)
    : Error(violation_message(r)), report(std::move(r)) {}

LeibnizAlgebra::LeibnizAlgebra(const Field& f, std::size_t dim,
                               std::vector<std::string> names,
                               std::vector<std::vector<Vector>> sc)
    : field_(f), dim_(dim), names_(std::move(names)), sc_(std::move(sc)) {
  if (names_.empty())
    for (std::size_t i = 0; i < dim_; ++i)
      names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != dim_) throw Error("algebra: need one name per basis vector");
  StructureCheck report = check_structure(field_, dim_, sc_);
  if (!report.ok) throw IdentityError(std::move(report));
}

LeibnizAlgebra LeibnizAlgebra::abelian(const Field& f, std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<std::vector<Vector>> sc(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  return LeibnizAlgebra(f, dim, std::move(names), std::move(sc));
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("bracket: wrong length");
  return sc_bracket(field_, dim_, sc_, x, y);
}

Vector LeibnizAlgebra::lie_bracket(const Vector& x, const Vector& y) const {
  return add(bracket(x, y), bracket(y, x));
}

bool LeibnizAlgebra::same_structure(const LeibnizAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && sc_ == o.sc_;
}

bool LeibnizAlgebra::operator==(const LeibnizAlgebra& o) const {
  return same_structure(o) && names_ == o.names_;
}

std::string LeibnizAlgebra::describe_subspace(const Subspace& s) const {
  if (s.dim() == 0) return "0";
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) os << ", ";
    const Vector row = s.basis().row(r);
    bool first = true;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (row[k].is_zero()) continue;
      std::string c = row[k].str();
      if (!first) {
        if (!c.empty() && c[0] == '-') {
          os << " - ";
          c = c.substr(1);
        } else {
          os << " + ";
        }
      }
      if (c != "1") os << c << "*";
      os << names_[k];
      first = false;
    }
    if (first) os << "0";
  }
  os << "}";
  return os.str();
}

Element Element::basis(const LeibnizAlgebra& a, std::size_t i) {
  return Element{&a, unit_vector(a.field(), a.dim(), i)};
}

Element Element::of(const LeibnizAlgebra& a, Vector coords) {
  if (coords.size() != a.dim()) throw Error("element: wrong length");
  return Element{&a, std::move(coords)};
}

Element bracket(const Element& x, const Element& y) {
  if (x.algebra != y.algebra) throw Error("element bracket: different algebras");
  return Element{x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

Element lie_bracket(const Element& x, const Element& y) {
  if (x.algebra != y.algebra) throw Error("element lie_bracket: different algebras");
  return Element{x.algebra, x.algebra->lie_bracket(x.coords, y.coords)};
}

Element operator+(const Element& x, const Element& y) {
  if (x.algebra != y.algebra) throw Error("element sum: different algebras");
  return Element{x.algebra, add(x.coords, y.coords)};
}

Element operator*(const Scalar& c, const Element& x) {
  return Element{x.algebra, scale(c, x.coords)};
}

bool operator==(const Element& x, const Element& y) {
  return x.algebra == y.algebra && x.coords == y.coords;
}

StructureCheck check_leibniz(const LeibnizAlgebra& a) {
  std::vector<std::vector<Vector>> sc(a.dim(), std::vector<Vector>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) sc[i][j] = a.sc(i, j);
  return check_structure(a.field(), a.dim(), sc);
}

Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw Error("ideal_closure: wrong ambient");
  Subspace cur = s;
  for (;;) {
    std::vector<Vector> rows = cur.basis().row_list();
    for (std::size_t r = 0; r < cur.dim(); ++r) {
      const Vector v = cur.basis().row(r);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const Vector e = unit_vector(a.field(), a.dim(), i);
        rows.push_back(a.bracket(v, e));
        rows.push_back(a.bracket(e, v));
      }
    }
    Subspace next = rows.empty() ? Subspace::zero(a.field(), a.dim())
                                 : Subspace::span(a.field(), a.dim(), rows);
    if (next == cur) return cur;
    cur = next;
  }
}

SubspaceFlags classify_subspace(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw Error("classify_subspace: wrong ambient");
  SubspaceFlags flags;
  bool sub = true, left = true, right = true;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector v = s.basis().row(r);
    for (std::size_t q = 0; q < s.dim(); ++q) {
      const Vector w = s.basis().row(q);
      if (!s.contains(a.bracket(v, w))) sub = false;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector e = unit_vector(a.field(), a.dim(), i);
      if (!s.contains(a.bracket(e, v))) left = false;
      if (!s.contains(a.bracket(v, e))) right = false;
    }
  }
  flags.subalgebra = sub;
  flags.left_ideal = left;
  flags.right_ideal = right;
  flags.two_sided_ideal = left && right;
  return flags;
}

Subspace lie_commutator_ideal(const LeibnizAlgebra& a, const Subspace& m,
                              const Subspace& n) {
  if (m.ambient() != a.dim() || n.ambient() != a.dim())
    throw Error("lie_commutator_ideal: wrong ambient");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t q = 0; q < n.dim(); ++q)
      rows.push_back(a.lie_bracket(m.basis().row(r), n.basis().row(q)));
  Subspace raw = rows.empty() ? Subspace::zero(a.field(), a.dim())
                              : Subspace::span(a.field(), a.dim(), rows);
  return ideal_closure(a, raw);
}

Subspace lie_center(const LeibnizAlgebra& a) {
  return lie_centralizer(a, a.full_subspace(), a.zero_subspace());
}

Subspace lie_centralizer(const LeibnizAlgebra& a, const Subspace& m,
                         const Subspace& n) {
  if (m.ambient() != a.dim() || n.ambient() != a.dim())
    throw Error("lie_centralizer: wrong ambient");
  // Unknown g (row vector); one block of constraints per basis vector m_r:
  // reduce [g, m_r]_lie against n, remainder must vanish. Build the linear
  // map g -> (remainders) column-wise on basis vectors and take its kernel.
  const std::size_t blocks = m.dim();
  Matrix constraint(a.field(), a.dim(), blocks * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector e = unit_vector(a.field(), a.dim(), i);
    for (std::size_t r = 0; r < blocks; ++r) {
      Vector rem = n.reduce(a.lie_bracket(e, m.basis().row(r)));
      for (std::size_t k = 0; k < a.dim(); ++k)
        constraint.at(i, r * a.dim() + k) = rem[k];
    }
  }
  // rows of `constraint` are images of basis vectors; g = sum x_i e_i lies in
  // the centralizer iff x * constraint = 0, i.e. x in kernel(constraint^T)^T
  // -- but kernel() already treats rows as the map's matrix acting on the
  // right, so we need vectors x with x*constraint = 0: the row-space kernel.
  Matrix k = constraint.transpose().kernel();
  std::vector<Vector> rows = k.row_list();
  return rows.empty() ? Subspace::zero(a.field(), a.dim())
                      : Subspace::span(a.field(), a.dim(), rows);
}

Subspace ann_ideal(const LeibnizAlgebra& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      rows.push_back(a.lie_bracket(unit_vector(a.field(), a.dim(), i),
                                   unit_vector(a.field(), a.dim(), j)));
  Subspace raw = rows.empty() ? Subspace::zero(a.field(), a.dim())
                              : Subspace::span(a.field(), a.dim(), rows);
  return ideal_closure(a, raw);
}

std::vector<Subspace> lower_lie_series(const LeibnizAlgebra& a,
                                       const Subspace& n) {
  if (!classify_subspace(a, n).two_sided_ideal)
    throw Error("lower_lie_series: n must be a two-sided ideal");
  std::vector<Subspace> out{n};
  for (;;) {
    Subspace next = lie_commutator_ideal(a, out.back(), a.full_subspace());
    if (next == out.back()) return out;
    out.push_back(next);
  }
}

std::vector<Subspace> upper_lie_series(const LeibnizAlgebra& a) {
  std::vector<Subspace> out{a.zero_subspace()};
  for (;;) {
    Subspace next = lie_centralizer(a, a.full_subspace(), out.back());
    if (next == out.back()) return out;
    out.push_back(next);
  }
}

Subspace lower_term(const LeibnizAlgebra& a, const Subspace& n, std::size_t k) {
  if (k == 0) throw Error("lower_term: index starts at 1");
  std::vector<Subspace> s = lower_lie_series(a, n);
  return k - 1 < s.size() ? s[k - 1] : s.back();
}

Subspace upper_term(const LeibnizAlgebra& a, std::size_t k) {
  std::vector<Subspace> s = upper_lie_series(a);
  return k < s.size() ? s[k] : s.back();
}

std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra& a,
                                            const Subspace& n) {
  std::vector<Subspace> s = lower_lie_series(a, n);
  if (!s.back().is_zero()) return std::nullopt;
  return s.size() - 1;  // gamma_{c+1} = 0 with c = len - 1; class 0 when n = 0
}

}  // namespace leibniz

#include "leibniz/subspace.hpp"

#include <algorithm>

namespace leibniz {

Subspace::Subspace(const Field& f, std::size_t ambient, Matrix basis,
                   std::vector<std::size_t> pivots)
    : field_(f), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(f, ambient, Matrix::identity(f, ambient), pivots);
}

Subspace Subspace::span(const Field& f, std::size_t ambient,
                        const std::vector<Vector>& generators) {
  return row_space(Matrix::from_rows(f, ambient, generators));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [r, pivots] = m.rref();
  Matrix basis(m.field(), pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = r.at(i, j);
  return Subspace(m.field(), m.cols(), std::move(basis), std::move(pivots));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error("vector/ambient mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const {
  return leibniz::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (field_ != other.field_ || ambient_ != other.ambient_)
    throw Error("subspace ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> r;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) r.push_back(j);
  return r;
}

std::vector<Vector> Subspace::complement_coordinates() const {
  std::vector<Vector> r;
  for (auto j : complement_indices()) r.push_back(unit_vector(field_, ambient_, j));
  return r;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_ || a.ambient_ != b.ambient_)
    throw Error("subspace ambient mismatch");
  std::vector<Vector> rows = a.basis_.row_list();
  for (auto& r : b.basis_.row_list()) rows.push_back(r);
  return Subspace::span(a.field_, a.ambient_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_ || a.ambient_ != b.ambient_)
    throw Error("subspace ambient mismatch");
  // x in both iff x = alpha A = beta B; the (alpha, beta) live in the kernel
  // of the ambient x (dimA + dimB) matrix [A^T | -B^T]
  std::size_t ra = a.dim(), rb = b.dim();
  Matrix m(a.field_, a.ambient_, ra + rb);
  for (std::size_t j = 0; j < a.ambient_; ++j) {
    for (std::size_t i = 0; i < ra; ++i) m.at(j, i) = a.basis_.at(i, j);
    for (std::size_t i = 0; i < rb; ++i) m.at(j, ra + i) = -b.basis_.at(i, j);
  }
  Matrix k = m.kernel();
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vector x = zero_vector(a.field_, a.ambient_);
    for (std::size_t t = 0; t < ra; ++t)
      if (!k.at(i, t).is_zero()) x = add(x, scale(k.at(i, t), a.basis_.row(t)));
    pts.push_back(std::move(x));
  }
  return Subspace::span(a.field_, a.ambient_, pts);
}

std::vector<Scalar> field_elements(const Field& f) {
  if (!f.is_prime_field()) throw Error("element enumeration needs a finite field");
  std::vector<Scalar> r;
  for (unsigned long i = 0; i < f.modulus(); ++i)
    r.push_back(Scalar::of_int(f, static_cast<long>(i)));
  return r;
}

std::vector<Vector> subspace_elements(const Subspace& s) {
  auto elems = field_elements(s.field());
  std::vector<Vector> out;
  std::vector<std::size_t> idx(s.dim(), 0);
  while (true) {
    Vector x = zero_vector(s.field(), s.ambient());
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (idx[i]) x = add(x, scale(elems[idx[i]], s.basis().row(i)));
    out.push_back(std::move(x));
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

namespace {
// lexicographic successor of an r-combination of {0..n-1}; false at the end
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] + (r - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace

std::vector<Subspace> all_subspaces(const Field& f, std::size_t ambient) {
  if (!f.is_prime_field()) throw Error("subspace enumeration needs a finite field");
  auto elems = field_elements(f);
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, ambient));
  for (std::size_t r = 1; r <= ambient; ++r) {
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    do {
      // free slots: (row i, col c) with c > piv[i], c not a pivot column
      std::vector<bool> is_pivot(ambient, false);
      for (auto p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = piv[i] + 1; c < ambient; ++c)
          if (!is_pivot[c]) slots.emplace_back(i, c);
      std::vector<std::size_t> idx(slots.size(), 0);
      while (true) {
        Matrix basis(f, r, ambient);
        for (std::size_t i = 0; i < r; ++i) basis.at(i, piv[i]) = Scalar::one(f);
        for (std::size_t t = 0; t < slots.size(); ++t)
          basis.at(slots[t].first, slots[t].second) = elems[idx[t]];
        out.push_back(Subspace::row_space(basis));
        std::size_t t = 0;
        for (; t < idx.size(); ++t) {
          if (++idx[t] < elems.size()) break;
          idx[t] = 0;
        }
        if (t == idx.size()) break;
      }
    } while (next_combination(piv, ambient));
  }
  return out;
}

std::string Subspace::str() const {
  if (dim() == 0) return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ", ";
    s += vector_str(basis_.row(i));
  }
  return s + "}";
}

}  // namespace leibniz

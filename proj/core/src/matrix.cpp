#include "leibniz/matrix.hpp"

#include <algorithm>

namespace leibniz {

Vector zero_vector(const Field& f, std::size_t n) {
  return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

namespace {
void check_dims(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
}
}  // namespace

Vector add(const Vector& a, const Vector& b) {
  check_dims(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  check_dims(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::string vector_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != f) throw Error("matrix entry field mismatch");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  Vector v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> rs;
  rs.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw Error("matrix field mismatch");
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error("matrix/vector shape mismatch");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * x[j];
  return r;
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

std::size_t Matrix::rank() const { return rref().second.size(); }

Matrix Matrix::kernel() const {
  auto [m, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(field_, cols_);
    x[f] = Scalar::one(field_);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m.at(i, f);
    rows.push_back(std::move(x));
  }
  return Matrix::from_rows(field_, cols_, rows);
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  if (b.size() != rows_) throw Error("matrix/vector shape mismatch in solve");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto [m, pivots] = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vector x = zero_vector(field_, cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m.at(i, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  auto [m, pivots] = aug.rref();
  if (pivots.size() != rows_ || (rows_ && pivots.back() != rows_ - 1))
    return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = m.at(i, cols_ + j);
  return inv;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

std::string Matrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += vector_str(row(i));
    s += "\n";
  }
  return s;
}

}  // namespace leibniz

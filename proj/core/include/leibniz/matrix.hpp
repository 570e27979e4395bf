#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

// coordinate vector; the surrounding context (matrix / algebra) carries the field
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);
std::string vector_str(const Vector& v);

// dense exact matrix, row major
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols,
                          const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector apply(const Vector& x) const;  // matrix * column vector

  // reduced row echelon form with pivot columns (strictly increasing,
  // pivot entries 1, pivot columns otherwise zero)
  std::pair<Matrix, std::vector<std::size_t>> rref() const;
  std::size_t rank() const;
  // rows span {x : M x = 0}; deterministic (one row per free column, ascending)
  Matrix kernel() const;
  // solves M x = b with free variables pinned to zero; nullopt when inconsistent
  std::optional<Vector> solve(const Vector& b) const;
  std::optional<Matrix> inverse() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace leibniz

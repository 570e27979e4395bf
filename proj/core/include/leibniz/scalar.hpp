#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

enum class FieldKind : std::uint8_t { rationals, prime };

// Coefficient field: the rationals, or F_p for an odd prime p.
// Characteristic 2 is rejected outright: the theory divides by 2.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(unsigned long p);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime; }
  unsigned long modulus() const { return p_; }  // 0 for the rationals

  bool operator==(const Field&) const = default;
  std::string str() const;

 private:
  Field(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

// Exact field element. Rationals are reduced fractions; prime-field elements
// are residues in [0, p) held with unit denominator. No floating point.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), v_(0) {}  // rational zero

  static Scalar zero(const Field& f) { return Scalar(f, mpq_class(0)); }
  static Scalar one(const Field& f) { return Scalar(f, mpq_class(1)); }
  static Scalar of_int(const Field& f, long n);
  static Scalar of_mpq(const Field& f, const mpq_class& q);
  // accepts "a", "-a", "a/b" (base 10); prime fields reduce, rejecting p | b
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a/b" or "a" over Q; the decimal residue over F_p
  std::string str() const;

 private:
  Scalar(const Field& f, const mpq_class& v) : field_(f), v_(v) {}
  void check_same_field(const Scalar& o) const;
  Field field_;
  mpq_class v_;
};

}  // namespace leibniz

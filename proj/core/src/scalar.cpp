#include "leibniz/scalar.hpp"

namespace leibniz {

Field Field::prime(unsigned long p) {
  if (p == 2) throw Error("characteristic 2 is not supported (the theory divides by 2)");
  mpz_class m(p);
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw Error("field modulus must be an odd prime, got " + std::to_string(p));
  return Field(FieldKind::prime, p);
}

std::string Field::str() const {
  return is_prime_field() ? "F_" + std::to_string(p_) : "Q";
}

namespace {

// canonical residue in [0, p)
mpz_class reduce_mod(const mpz_class& n, unsigned long p) {
  mpz_class r;
  mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), p);  // GMP mod is nonnegative
  return r;
}

mpz_class invert_mod(const mpz_class& n, unsigned long p) {
  mpz_class r, m(p);
  if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("no inverse modulo " + std::to_string(p));
  return r;
}

}  // namespace

Scalar Scalar::of_int(const Field& f, long n) { return of_mpq(f, mpq_class(n)); }

Scalar Scalar::of_mpq(const Field& f, const mpq_class& q) {
  mpq_class v = q;
  v.canonicalize();
  if (f.is_prime_field()) {
    mpz_class den = reduce_mod(v.get_den(), f.modulus());
    if (sgn(den) == 0)
      throw Error("denominator divisible by " + std::to_string(f.modulus()));
    mpz_class num = reduce_mod(v.get_num(), f.modulus());
    v = mpq_class(num * invert_mod(den, f.modulus()));
    v = mpq_class(reduce_mod(v.get_num(), f.modulus()));
  }
  return Scalar(f, v);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto fail = [&] { throw ParseError("malformed scalar: '" + text + "'"); };
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits = [&](const std::string& s, bool sign_ok) {
    if (s.empty()) fail();
    std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail();
  };
  digits(num, true);
  digits(den, false);
  mpz_class n(num), d(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in scalar '" + text + "'");
  try {
    return of_mpq(f, mpq_class(n, d));
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " in scalar '" + text + "'");
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error("scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field())
    return Scalar(field_, mpq_class(reduce_mod(-v_.get_num(), field_.modulus())));
  return Scalar(field_, mpq_class(-v_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  mpq_class r = v_ + o.v_;
  if (field_.is_prime_field())
    r = mpq_class(reduce_mod(r.get_num(), field_.modulus()));
  return Scalar(field_, r);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  mpq_class r = v_ * o.v_;
  if (field_.is_prime_field())
    r = mpq_class(reduce_mod(r.get_num(), field_.modulus()));
  return Scalar(field_, r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (field_.is_prime_field())
    return Scalar(field_, mpq_class(invert_mod(v_.get_num(), field_.modulus())));
  return Scalar(field_, mpq_class(1) / v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace leibniz

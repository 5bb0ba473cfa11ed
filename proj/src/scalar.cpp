#include "cotan/scalar.hpp"

namespace cotan {

namespace {

mpz_class mod_p(const mpz_class& z, unsigned long p) {
  mpz_class r = z % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return r;
}

mpz_class inv_mod_p(const mpz_class& z, unsigned long p) {
  mpz_class r, pz(static_cast<long>(p));
  if (mpz_invert(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw error("scalar: not invertible mod p");
  return r;
}

}  // namespace

Scalar Scalar::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(mpq_class(mpz_class(s)));
    mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw invalid_input("scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  } catch (const std::invalid_argument&) {
    throw invalid_input("scalar: bad literal '" + s + "'");
  }
}

Scalar Scalar::reduce(const Scalar& a, const FieldSpec& f) {
  if (!f.is_prime()) return a;
  mpz_class num = mod_p(a.v_.get_num(), f.prime);
  if (a.v_.get_den() != 1) {
    mpz_class den = mod_p(a.v_.get_den(), f.prime);
    num = mod_p(num * inv_mod_p(den, f.prime), f.prime);
  }
  return Scalar(mpq_class(num));
}

Scalar Scalar::add(const Scalar& a, const Scalar& b, const FieldSpec& f) {
  Scalar r(mpq_class(a.v_ + b.v_));
  return f.is_prime() ? reduce(r, f) : r;
}

Scalar Scalar::sub(const Scalar& a, const Scalar& b, const FieldSpec& f) {
  Scalar r(mpq_class(a.v_ - b.v_));
  return f.is_prime() ? reduce(r, f) : r;
}

Scalar Scalar::mul(const Scalar& a, const Scalar& b, const FieldSpec& f) {
  Scalar r(mpq_class(a.v_ * b.v_));
  return f.is_prime() ? reduce(r, f) : r;
}

Scalar Scalar::div(const Scalar& a, const Scalar& b, const FieldSpec& f) {
  if (b.is_zero()) throw error("scalar: division by zero");
  if (f.is_prime()) return mul(a, inv(b, f), f);
  return Scalar(mpq_class(a.v_ / b.v_));
}

Scalar Scalar::neg(const Scalar& a, const FieldSpec& f) {
  Scalar r(mpq_class(-a.v_));
  return f.is_prime() ? reduce(r, f) : r;
}

Scalar Scalar::inv(const Scalar& a, const FieldSpec& f) {
  if (a.is_zero()) throw error("scalar: inverse of zero");
  if (!f.is_prime()) return Scalar(mpq_class(1 / a.v_));
  return Scalar(mpq_class(inv_mod_p(a.v_.get_num(), f.prime)));
}

std::string Scalar::str() const {
  return v_.get_str();
}

}  // namespace cotan

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cotan {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input (bad descriptor, parse error, arity mismatch).
struct invalid_input : error {
  using error::error;
};

// A configured degree or time cap was hit.  Never a silent truncation.
struct resource_limit : error {
  using error::error;
};

// Coefficient field of a ring: exact rationals (prime == 0) or Z/p.
struct FieldSpec {
  unsigned long prime = 0;

  bool is_prime() const { return prime != 0; }
  bool operator==(const FieldSpec& o) const { return prime == o.prime; }
};

// Exact coefficient.  Rational mode stores a canonical mpq (reduced,
// positive denominator); prime mode stores an integer in [0, p) with
// denominator 1.  The field lives on the ring, not here, so values from
// different modes cannot silently mix.
class Scalar {
 public:
  Scalar() : v_(0) {}
  explicit Scalar(long n) : v_(n) {}
  explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  Scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw invalid_input("scalar: zero denominator");
    v_.canonicalize();
  }

  static Scalar from_string(const std::string& s);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& value() const { return v_; }

  static Scalar reduce(const Scalar& a, const FieldSpec& f);
  static Scalar add(const Scalar& a, const Scalar& b, const FieldSpec& f);
  static Scalar sub(const Scalar& a, const Scalar& b, const FieldSpec& f);
  static Scalar mul(const Scalar& a, const Scalar& b, const FieldSpec& f);
  static Scalar div(const Scalar& a, const Scalar& b, const FieldSpec& f);
  static Scalar neg(const Scalar& a, const FieldSpec& f);
  static Scalar inv(const Scalar& a, const FieldSpec& f);

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

  std::string str() const;

 private:
  mpq_class v_;
};

}  // namespace cotan

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "cotan/ring.hpp"

namespace cotan {

// Hard cap on ring size.  Catalog rings use <= 8 variables plus one
// elimination variable; 16 leaves headroom.
constexpr int kMaxVars = 16;

// Exponent vector with fixed inline storage.  Ring-agnostic: degree under a
// weight vector is computed against a ring.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint8_t nv = 0;

  static Monomial one(size_t nvars) {
    Monomial m;
    m.nv = static_cast<uint8_t>(nvars);
    return m;
  }
  static Monomial var(size_t nvars, size_t i, uint16_t exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = exp;
    return m;
  }

  bool is_one() const {
    for (int i = 0; i < nv; ++i)
      if (e[i]) return false;
    return true;
  }

  long total_degree() const {
    long d = 0;
    for (int i = 0; i < nv; ++i) d += e[i];
    return d;
  }

  long weighted_degree(const Ring& r) const {
    long d = 0;
    for (int i = 0; i < nv; ++i) d += static_cast<long>(e[i]) * r.weight(i);
    return d;
  }

  bool operator==(const Monomial& o) const {
    return nv == o.nv && std::memcmp(e.data(), o.e.data(), nv * sizeof(uint16_t)) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nv; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nv; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < a.nv; ++i) {
    uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    if (s > 0xffff) throw resource_limit("monomial exponent overflow");
    m.e[i] = static_cast<uint16_t>(s);
  }
  return m;
}

// b / a, caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial m = b;
  for (int i = 0; i < a.nv; ++i) m.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < a.nv; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < m.nv; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace cotan

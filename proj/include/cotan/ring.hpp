#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cotan/scalar.hpp"

namespace cotan {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ambient polynomial ring: named variables, a positive weight per variable
// (quasi-homogeneous grading), and the coefficient field.  Immutable and
// shared; two rings are interchangeable iff structurally equal.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> vars, std::vector<int> weights = {},
                      FieldSpec field = {});

  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(size_t i) const { return vars_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(size_t i) const { return weights_[i]; }
  const FieldSpec& field() const { return field_; }

  // -1 when the name is unknown.
  int var_index(const std::string& name) const;

  bool same(const Ring& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_ && field_ == o.field_;
  }

 private:
  Ring(std::vector<std::string> v, std::vector<int> w, FieldSpec f)
      : vars_(std::move(v)), weights_(std::move(w)), field_(f) {}

  std::vector<std::string> vars_;
  std::vector<int> weights_;
  FieldSpec field_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same(*b));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw invalid_input(std::string(where) + ": ring mismatch");
}

}  // namespace cotan

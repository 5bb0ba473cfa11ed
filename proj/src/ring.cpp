#include "cotan/ring.hpp"

#include "cotan/monomial.hpp"

namespace cotan {

RingPtr Ring::make(std::vector<std::string> vars, std::vector<int> weights, FieldSpec field) {
  if (vars.size() > static_cast<size_t>(kMaxVars))
    throw invalid_input("ring: too many variables (max " + std::to_string(kMaxVars) + ")");
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw invalid_input("ring: weight/variable count mismatch");
  for (int w : weights)
    if (w <= 0) throw invalid_input("ring: weights must be positive");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw invalid_input("ring: duplicate variable " + vars[i]);
  if (field.prime == 1 || field.prime == 2)
    throw invalid_input("ring: prime field requires p > 2");
  return RingPtr(new Ring(std::move(vars), std::move(weights), field));
}

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace cotan

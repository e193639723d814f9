#pragma once

#include <memory>
#include <string>
#include <vector>

#include "forca/field.hpp"
#include "forca/monomial.hpp"

namespace forca {

/// Ambient polynomial ring context: coefficient field, indexed variables,
/// monomial order. Variables are addressed by index everywhere; the names
/// are metadata for parsing and printing.
template <CoefficientField F>
struct Ring {
  F field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }

  /// Index of a declared variable, or -1.
  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring<F>>(
      Ring<F>{std::move(field), std::move(vars), order});
}

/// Structural compatibility: same field, same variables, same order.
/// Pointer identity is the fast path.
template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return true;
  return a && b && a->field == b->field && a->vars == b->vars &&
         a->order == b->order;
}

/// New ring with extra variables appended (same field and order kind).
template <CoefficientField F>
RingPtr<F> extend_ring(const RingPtr<F>& r, std::vector<std::string> extra,
                       MonomialOrder order) {
  std::vector<std::string> vars = r->vars;
  for (auto& v : extra) {
    if (r->var_index(v) >= 0)
      throw std::invalid_argument("variable name collision: " + v);
    vars.push_back(std::move(v));
  }
  return make_ring(r->field, std::move(vars), order);
}

template <CoefficientField F>
RingPtr<F> extend_ring(const RingPtr<F>& r, std::vector<std::string> extra) {
  return extend_ring(r, std::move(extra), r->order);
}

}  // namespace forca

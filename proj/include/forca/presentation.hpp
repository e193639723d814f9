#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "forca/groebner.hpp"

namespace forca {

/// Finitely presented ring R = K[x_1..x_m]/(g_1..g_k). The reduced
/// Groebner basis of the defining ideal is computed once on demand and
/// then shared by all copies of the handle. An empty defining list is a
/// plain polynomial ring.
template <CoefficientField F>
class RingPresentation {
 public:
  RingPresentation() = default;

  explicit RingPresentation(RingPtr<F> ring,
                            std::vector<Polynomial<F>> defining = {},
                            GbLimits limits = {}) {
    auto impl = std::make_shared<Impl>();
    impl->ring = std::move(ring);
    for (auto& g : defining) {
      if (!same_ring(g.ring(), impl->ring)) throw RingMismatchError();
      if (!g.is_zero()) impl->defining.push_back(std::move(g));
    }
    impl->limits = limits;
    impl_ = std::move(impl);
  }

  const RingPtr<F>& ring() const { return impl_->ring; }
  const std::vector<Polynomial<F>>& defining() const { return impl_->defining; }
  const GbLimits& limits() const { return impl_->limits; }
  bool is_polynomial_ring() const { return impl_->defining.empty(); }

  /// Reduced Groebner basis of the defining ideal.
  const std::vector<Polynomial<F>>& defining_basis() const {
    std::call_once(impl_->once, [this] {
      impl_->gb = buchberger<F>(impl_->defining, impl_->limits).basis;
    });
    return impl_->gb;
  }

  /// Normal form modulo the defining ideal (canonical representative).
  Polynomial<F> reduce(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring())) throw RingMismatchError();
    if (is_polynomial_ring()) return f;
    return normal_form<F>(f, defining_basis());
  }

  bool is_zero_in_quotient(const Polynomial<F>& f) const {
    return reduce(f).is_zero();
  }

  /// True when every defining polynomial vanishes at the point.
  bool on_spectrum(std::span<const typename F::Elem> point) const {
    for (const auto& g : impl_->defining)
      if (!ring()->field.is_zero(g.evaluate(point))) return false;
    return true;
  }

  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> defining;
    GbLimits limits;
    mutable std::once_flag once;
    mutable std::vector<Polynomial<F>> gb;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace forca

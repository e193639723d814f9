#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "forca/presentation.hpp"

namespace forca {

/// Ideal in a presented ring, held as a generator list. The reduced
/// Groebner basis (of the generators together with the defining ideal,
/// in the ambient polynomial ring) is computed lazily, once. A second
/// cofactor-tracked basis backs membership witnesses.
template <CoefficientField F>
class IdealHandle {
 public:
  IdealHandle() = default;

  IdealHandle(RingPresentation<F> pres, std::vector<Polynomial<F>> gens) {
    auto impl = std::make_shared<Impl>();
    impl->pres = std::move(pres);
    for (const auto& g : gens)
      if (!same_ring(g.ring(), impl->pres.ring())) throw RingMismatchError();
    impl->gens = std::move(gens);
    impl_ = std::move(impl);
  }

  const RingPresentation<F>& presentation() const { return impl_->pres; }
  const RingPtr<F>& ring() const { return impl_->pres.ring(); }
  const std::vector<Polynomial<F>>& generators() const { return impl_->gens; }

  /// Generators plus the presentation's defining polynomials, the lift
  /// of the ideal to the ambient polynomial ring.
  std::vector<Polynomial<F>> lifted_generators() const {
    std::vector<Polynomial<F>> all = impl_->gens;
    for (const auto& d : impl_->pres.defining()) all.push_back(d);
    return all;
  }

  const std::vector<Polynomial<F>>& groebner_basis() const {
    std::call_once(impl_->once_plain, [this] {
      impl_->gb = buchberger<F>(lifted_generators(), impl_->pres.limits()).basis;
    });
    return impl_->gb;
  }

  /// Fully reduced remainder modulo the ideal; zero iff member.
  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring())) throw RingMismatchError();
    return forca::normal_form<F>(f, groebner_basis());
  }

  bool contains_fast(const Polynomial<F>& f) const {
    return normal_form(f).is_zero();
  }

  struct Membership {
    bool member = false;
    /// When member: f = sum cofactors[i] * generators()[i], an equality
    /// holding modulo the defining ideal (exactly, for polynomial rings).
    std::vector<Polynomial<F>> cofactors;
  };

  /// Membership with a division-record witness over the listed generators.
  Membership contains(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring())) throw RingMismatchError();
    const GroebnerResult<F>& t = tracked();
    DivisionResult<F> d = divide<F>(f, t.basis);
    if (!d.remainder.is_zero()) return {};
    Membership m;
    m.member = true;
    m.cofactors.assign(impl_->gens.size(), Polynomial<F>::zero(ring()));
    for (std::size_t k = 0; k < t.basis.size(); ++k) {
      if (d.quotients[k].is_zero()) continue;
      for (std::size_t i = 0; i < impl_->gens.size(); ++i)
        m.cofactors[i] = m.cofactors[i] + d.quotients[k] * t.cofactors[k][i];
    }
    return m;
  }

  /// True iff the reduced Groebner basis is {1}.
  bool is_unit() const {
    const auto& b = groebner_basis();
    return b.size() == 1 && b.front().is_one();
  }

  bool valid() const { return impl_ != nullptr; }

 private:
  const GroebnerResult<F>& tracked() const {
    std::call_once(impl_->once_tracked, [this] {
      impl_->gb_tracked =
          buchberger<F>(lifted_generators(), impl_->pres.limits(), true);
    });
    return impl_->gb_tracked;
  }

  struct Impl {
    RingPresentation<F> pres;
    std::vector<Polynomial<F>> gens;
    mutable std::once_flag once_plain, once_tracked;
    mutable std::vector<Polynomial<F>> gb;
    mutable GroebnerResult<F> gb_tracked;
  };
  std::shared_ptr<const Impl> impl_;
};

namespace detail {

template <CoefficientField F>
std::string fresh_var_name(const RingPtr<F>& ring, std::string stem) {
  while (ring->var_index(stem) >= 0) stem += "_";
  return stem;
}

/// Identity map of old variables into a ring extended on the right.
inline std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace detail

/// Radical membership via the Rabinowitsch trick: f lies in rad(I) iff
/// I + (1 - w f) is the unit ideal in one extra variable w.
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, const IdealHandle<F>& ideal) {
  const RingPtr<F>& amb = ideal.ring();
  RingPtr<F> ext =
      extend_ring(amb, {detail::fresh_var_name(amb, std::string("_w"))});
  auto vmap = detail::identity_map(amb->nvars());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.lifted_generators()) gens.push_back(g.map_to(ext, vmap));
  Polynomial<F> w = Polynomial<F>::variable(ext, ext->nvars() - 1);
  gens.push_back(Polynomial<F>::constant(ext, 1LL) - w * f.map_to(ext, vmap));
  return buchberger<F>(gens, ideal.presentation().limits()).basis ==
         std::vector<Polynomial<F>>{
             Polynomial<F>::constant(ext, ext->field.one())};
}

/// Ideal quotient (I : f) = { g : g f in I }, via elimination of a tag
/// variable from t*I + (1-t)*(f) followed by exact division by f.
template <CoefficientField F>
IdealHandle<F> ideal_quotient(const IdealHandle<F>& ideal,
                              const Polynomial<F>& f) {
  const RingPtr<F>& amb = ideal.ring();
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  const RingPresentation<F>& pres = ideal.presentation();
  if (pres.is_zero_in_quotient(f)) {
    // f = 0 in the quotient ring: every element multiplies f into I.
    return IdealHandle<F>(pres, {Polynomial<F>::constant(amb, 1LL)});
  }

  std::vector<std::string> vars = {detail::fresh_var_name(amb, "_t")};
  for (const auto& v : amb->vars) vars.push_back(v);
  RingPtr<F> ext =
      make_ring(amb->field, std::move(vars), MonomialOrder::elimination_block(1));
  std::vector<std::size_t> vmap(amb->nvars());
  for (std::size_t i = 0; i < amb->nvars(); ++i) vmap[i] = i + 1;

  Polynomial<F> t = Polynomial<F>::variable(ext, 0);
  Polynomial<F> one = Polynomial<F>::constant(ext, 1LL);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.lifted_generators()) gens.push_back(t * g.map_to(ext, vmap));
  gens.push_back((one - t) * f.map_to(ext, vmap));

  std::vector<std::size_t> back(ext->nvars(), 0);
  for (std::size_t i = 0; i < amb->nvars(); ++i) back[i + 1] = i;

  std::vector<Polynomial<F>> quotient_gens;
  for (const auto& g : buchberger<F>(gens, pres.limits()).basis) {
    if (g.degree_in(0) > 0) continue;  // still involves the tag variable
    Polynomial<F> h = g.map_to(amb, back);
    DivisionResult<F> d = divide<F>(h, std::span<const Polynomial<F>>(&f, 1));
    if (!d.remainder.is_zero())
      throw std::logic_error("ideal quotient: inexact division");
    quotient_gens.push_back(d.quotients[0]);
  }
  return IdealHandle<F>(pres, std::move(quotient_gens));
}

/// Regular pair test: f1 nonzero in R and (f1) : f2 = (f1), both
/// inclusions checked by membership.
template <CoefficientField F>
bool is_regular_pair(const Polynomial<F>& f1, const Polynomial<F>& f2,
                     const RingPresentation<F>& pres) {
  if (pres.is_zero_in_quotient(f1)) return false;
  IdealHandle<F> principal(pres, {f1});
  IdealHandle<F> quotient = ideal_quotient(principal, f2);
  for (const auto& g : quotient.generators())
    if (!principal.contains_fast(g)) return false;
  // (f1) subset (f1):f2 holds generally; check the generator anyway.
  return quotient.contains_fast(f1);
}

/// Krull dimension of the quotient by the ideal, as the size of a maximal
/// set of variables independent modulo the leading-term ideal.
template <CoefficientField F>
std::size_t krull_dim(const IdealHandle<F>& ideal) {
  if (ideal.is_unit())
    throw std::domain_error("krull_dim: unit ideal (empty spectrum)");
  const std::size_t n = ideal.ring()->nvars();
  if (n > 24) throw std::invalid_argument("krull_dim: too many variables");
  std::vector<Monomial> lts;
  for (const auto& g : ideal.groebner_basis()) lts.push_back(g.leading_monomial());

  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lts) {
      bool supported = true;
      for (std::size_t i = 0; i < n && supported; ++i)
        if (m.e[i] > 0 && !(mask & (1u << i))) supported = false;
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <CoefficientField F>
struct EliminationResult {
  RingPtr<F> ring;  // polynomial ring in the kept variables
  IdealHandle<F> ideal;
  std::vector<std::size_t> kept;  // ambient indices of surviving variables
};

/// I ∩ K[kept variables], computed with a two-block elimination order in
/// which the dropped variables form the leading block. The defining ideal
/// of the presentation participates in the intersection.
template <CoefficientField F>
EliminationResult<F> eliminate(const IdealHandle<F>& ideal,
                               const std::vector<std::size_t>& drop) {
  const RingPtr<F>& amb = ideal.ring();
  const std::size_t n = amb->nvars();
  std::vector<bool> dropped(n, false);
  for (auto v : drop) {
    if (v >= n) throw std::invalid_argument("eliminate: variable index out of range");
    dropped[v] = true;
  }
  const std::size_t k = drop.size();
  if (k == 0) return {amb, ideal, detail::identity_map(n)};

  std::vector<std::string> names;
  std::vector<std::size_t> vmap(n, 0);
  for (auto v : drop) {
    vmap[v] = names.size();
    names.push_back(amb->vars[v]);
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) continue;
    vmap[i] = names.size();
    names.push_back(amb->vars[i]);
    kept.push_back(i);
  }
  RingPtr<F> blk =
      make_ring(amb->field, names, MonomialOrder::elimination_block(k));

  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.lifted_generators()) gens.push_back(g.map_to(blk, vmap));

  std::vector<std::string> sub_names(names.begin() + static_cast<std::ptrdiff_t>(k),
                                     names.end());
  RingPtr<F> sub = make_ring(amb->field, std::move(sub_names));
  std::vector<std::size_t> down(blk->nvars(), 0);
  for (std::size_t i = k; i < blk->nvars(); ++i) down[i] = i - k;

  std::vector<Polynomial<F>> survivors;
  for (const auto& g : buchberger<F>(gens, ideal.presentation().limits()).basis) {
    bool free_of_block = true;
    for (std::size_t i = 0; i < k && free_of_block; ++i)
      if (g.degree_in(i) > 0) free_of_block = false;
    if (free_of_block) survivors.push_back(g.map_to(sub, down));
  }
  return {sub, IdealHandle<F>(RingPresentation<F>(sub, {}, ideal.presentation().limits()),
                              std::move(survivors)),
          std::move(kept)};
}

}  // namespace forca

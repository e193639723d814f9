#pragma once

#include <vector>

#include "forca/ideal.hpp"

namespace forca {
namespace detail {

/// Element of a free module P^m over the ambient polynomial ring, with
/// terms ordered position-over-term: component index first (lower
/// component wins), the ring's monomial order inside a component.
template <CoefficientField F>
struct VecPoly {
  struct T {
    std::size_t comp;
    Monomial mono;
    typename F::Elem c;
  };

  RingPtr<F> ring;
  std::vector<T> ts;  // strictly descending

  bool is_zero() const { return ts.empty(); }
  const T& lead() const { return ts.front(); }

  static int cmp(const MonomialOrder& ord, const T& a, const T& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ord.compare(a.mono, b.mono);
  }

  static VecPoly unit(RingPtr<F> r, std::size_t comp, const Polynomial<F>& p) {
    VecPoly v{std::move(r), {}};
    for (const auto& t : p.terms()) v.ts.push_back({comp, t.mono, t.coeff});
    return v;
  }

  VecPoly times_term(const Monomial& m, const typename F::Elem& c) const {
    VecPoly r{ring, {}};
    if (ring->field.is_zero(c)) return r;
    r.ts.reserve(ts.size());
    for (const auto& t : ts)
      r.ts.push_back({t.comp, t.mono * m, ring->field.mul(t.c, c)});
    return r;
  }

  friend VecPoly operator-(const VecPoly& a, const VecPoly& b) {
    const F& k = a.ring->field;
    const MonomialOrder& ord = a.ring->order;
    VecPoly r{a.ring, {}};
    std::size_t i = 0, j = 0;
    while (i < a.ts.size() && j < b.ts.size()) {
      int c = cmp(ord, a.ts[i], b.ts[j]);
      if (c > 0) {
        r.ts.push_back(a.ts[i++]);
      } else if (c < 0) {
        r.ts.push_back({b.ts[j].comp, b.ts[j].mono, k.neg(b.ts[j].c)});
        ++j;
      } else {
        typename F::Elem s = k.sub(a.ts[i].c, b.ts[j].c);
        if (!k.is_zero(s)) r.ts.push_back({a.ts[i].comp, a.ts[i].mono, s});
        ++i, ++j;
      }
    }
    for (; i < a.ts.size(); ++i) r.ts.push_back(a.ts[i]);
    for (; j < b.ts.size(); ++j)
      r.ts.push_back({b.ts[j].comp, b.ts[j].mono, k.neg(b.ts[j].c)});
    return r;
  }
};

/// Module Buchberger over a free module, cofactor-tracked, no pair
/// criteria (S-pairs exist only between elements with equal leading
/// component). Small systems only; correctness over speed.
template <CoefficientField F>
struct ModuleBasis {
  std::vector<VecPoly<F>> basis;
  std::vector<std::vector<Polynomial<F>>> cofactors;  // over the inputs
};

template <CoefficientField F>
ModuleBasis<F> module_groebner(const std::vector<VecPoly<F>>& inputs,
                               const RingPtr<F>& ring, const GbLimits& limits) {
  const F& k = ring->field;
  struct Entry {
    VecPoly<F> v;
    std::vector<Polynomial<F>> rep;
  };
  const std::size_t n_in = inputs.size();
  std::vector<Entry> work;
  for (std::size_t i = 0; i < n_in; ++i) {
    if (inputs[i].is_zero()) continue;
    std::vector<Polynomial<F>> rep(n_in, Polynomial<F>::zero(ring));
    rep[i] = Polynomial<F>::constant(ring, k.one());
    work.push_back({inputs[i], std::move(rep)});
  }

  auto reduce_full = [&](VecPoly<F> p, std::vector<Polynomial<F>> rep) {
    VecPoly<F> rem{ring, {}};
    while (!p.is_zero()) {
      const auto& lt = p.lead();
      bool hit = false;
      for (const auto& w : work) {
        const auto& wl = w.v.lead();
        if (wl.comp != lt.comp || !wl.mono.divides(lt.mono)) continue;
        Monomial t = wl.mono.quotient_of(lt.mono);
        typename F::Elem c = k.mul(lt.c, k.inv(wl.c));
        p = p - w.v.times_term(t, c);
        Polynomial<F> q = Polynomial<F>::from_term(ring, t, c);
        for (std::size_t s = 0; s < n_in; ++s) rep[s] = rep[s] - q * w.rep[s];
        hit = true;
        break;
      }
      if (!hit) {
        rem.ts.push_back(lt);
        VecPoly<F> single{ring, {lt}};
        p = p - single;
      }
    }
    return Entry{std::move(rem), std::move(rep)};
  };

  struct Pair {
    std::size_t i, j;
    std::uint64_t deg;
  };
  std::vector<Pair> pending;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (work[i].v.lead().comp != work[j].v.lead().comp) continue;
      Monomial l = Monomial::lcm(work[i].v.lead().mono, work[j].v.lead().mono);
      pending.push_back({i, j, l.degree()});
    }
  };
  for (std::size_t j = 1; j < work.size(); ++j) push_pairs(j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const Pair &a = pending[t], &b = pending[best];
      if (a.deg < b.deg ||
          (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i))))
        best = t;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed > limits.max_pairs)
      throw ResourceCapError("computation aborted: module pair cap exceeded");

    const auto& li = work[pr.i].v.lead();
    const auto& lj = work[pr.j].v.lead();
    Monomial l = Monomial::lcm(li.mono, lj.mono);
    VecPoly<F> s =
        work[pr.i].v.times_term(li.mono.quotient_of(l), k.inv(li.c)) -
        work[pr.j].v.times_term(lj.mono.quotient_of(l), k.inv(lj.c));
    std::vector<Polynomial<F>> rep(n_in, Polynomial<F>::zero(ring));
    {
      Polynomial<F> qi =
          Polynomial<F>::from_term(ring, li.mono.quotient_of(l), k.inv(li.c));
      Polynomial<F> qj =
          Polynomial<F>::from_term(ring, lj.mono.quotient_of(l), k.inv(lj.c));
      for (std::size_t t = 0; t < n_in; ++t)
        rep[t] = qi * work[pr.i].rep[t] - qj * work[pr.j].rep[t];
    }
    Entry e = reduce_full(std::move(s), std::move(rep));
    if (e.v.is_zero()) continue;
    work.push_back(std::move(e));
    if (work.size() > limits.max_polys)
      throw ResourceCapError("computation aborted: module basis cap exceeded");
    push_pairs(work.size() - 1);
  }

  ModuleBasis<F> out;
  for (auto& w : work) {
    out.basis.push_back(std::move(w.v));
    out.cofactors.push_back(std::move(w.rep));
  }
  return out;
}

}  // namespace detail

template <CoefficientField F>
struct LinearSolveResult {
  bool solvable = false;
  /// When solvable: canonical representatives with A * solution = s in R.
  std::vector<Polynomial<F>> solution;
};

/// Decide A t = s over the presented ring R (module membership of s in the
/// column module of A) by a position-over-term module Groebner basis.
/// A "no solution" answer is certified, not a timeout; resource exhaustion
/// raises ResourceCapError instead.
template <CoefficientField F>
LinearSolveResult<F> solve_linear_over_ring(
    const std::vector<std::vector<Polynomial<F>>>& matrix,
    const std::vector<Polynomial<F>>& rhs, const RingPresentation<F>& pres) {
  const RingPtr<F>& ring = pres.ring();
  const F& k = ring->field;
  const std::size_t m = matrix.size();
  if (rhs.size() != m) throw std::invalid_argument("rhs length mismatch");
  const std::size_t n = m == 0 ? 0 : matrix.front().size();
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("ragged matrix");

  // Components are disjoint, so appending per ascending component yields
  // strictly descending position-over-term order directly.
  using VP = detail::VecPoly<F>;
  std::vector<VP> inputs;
  for (std::size_t j = 0; j < n; ++j) {
    VP col{ring, {}};
    for (std::size_t i = 0; i < m; ++i) {
      if (!same_ring(matrix[i][j].ring(), ring)) throw RingMismatchError();
      for (const auto& t : matrix[i][j].terms())
        col.ts.push_back({i, t.mono, t.coeff});
    }
    inputs.push_back(std::move(col));
  }
  for (const auto& d : pres.defining())
    for (std::size_t i = 0; i < m; ++i)
      inputs.push_back(VP::unit(ring, i, d));

  detail::ModuleBasis<F> gb =
      detail::module_groebner<F>(inputs, ring, pres.limits());

  // Tracked reduction of s by the module basis.
  VP p{ring, {}};
  for (std::size_t i = 0; i < m; ++i) {
    if (!same_ring(rhs[i].ring(), ring)) throw RingMismatchError();
    for (const auto& t : rhs[i].terms()) p.ts.push_back({i, t.mono, t.coeff});
  }
  std::vector<Polynomial<F>> combo(inputs.size(), Polynomial<F>::zero(ring));
  while (!p.is_zero()) {
    const auto& lt = p.lead();
    bool hit = false;
    for (std::size_t w = 0; w < gb.basis.size(); ++w) {
      const auto& wl = gb.basis[w].lead();
      if (wl.comp != lt.comp || !wl.mono.divides(lt.mono)) continue;
      Monomial t = wl.mono.quotient_of(lt.mono);
      typename F::Elem c = k.mul(lt.c, k.inv(wl.c));
      p = p - gb.basis[w].times_term(t, c);
      Polynomial<F> q = Polynomial<F>::from_term(ring, t, c);
      for (std::size_t s = 0; s < inputs.size(); ++s)
        combo[s] = combo[s] + q * gb.cofactors[w][s];
      hit = true;
      break;
    }
    if (!hit) return {};  // certified: s is not in the column module
  }

  LinearSolveResult<F> out;
  out.solvable = true;
  out.solution.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.solution.push_back(pres.reduce(combo[j]));
  return out;
}

}  // namespace forca

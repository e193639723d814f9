#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "forca/errors.hpp"
#include "forca/polynomial.hpp"

namespace forca {

/// Engine caps. Exceeding one raises ResourceCapError, never a wrong
/// answer. max_degree of 0 means unbounded.
struct GbLimits {
  std::size_t max_pairs = 100000;
  std::size_t max_polys = 10000;
  std::uint64_t max_degree = 0;
};

template <CoefficientField F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;  // one per divisor
  Polynomial<F> remainder;
};

/// Multivariate division with full tail reduction. Deterministic: at each
/// step the first divisor (in list order) whose leading monomial divides
/// the current leading monomial is used. Guarantees
///   f = sum quotients[i] * divisors[i] + remainder
/// with no remainder term divisible by any leading monomial.
template <CoefficientField F>
DivisionResult<F> divide(const Polynomial<F>& f,
                         std::span<const Polynomial<F>> divisors) {
  const RingPtr<F>& ring = f.ring();
  const F& k = ring->field;
  DivisionResult<F> out;
  out.quotients.assign(divisors.size(), Polynomial<F>::zero(ring));
  std::vector<typename Polynomial<F>::Term> rem_terms;

  Polynomial<F> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial<F>& g = divisors[i];
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lt.mono)) continue;
      Monomial t = g.leading_monomial().quotient_of(lt.mono);
      typename F::Elem c = k.mul(lt.coeff, k.inv(g.leading_coeff()));
      out.quotients[i] =
          out.quotients[i] + Polynomial<F>::from_term(ring, t, c);
      p = p - g.times_term(t, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back(lt);
      p = p - Polynomial<F>::from_term(ring, lt.mono, lt.coeff);
    }
  }
  out.remainder = Polynomial<F>::from_terms(ring, std::move(rem_terms));
  return out;
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f,
                          std::span<const Polynomial<F>> basis) {
  return divide(f, basis).remainder;
}

template <CoefficientField F>
Polynomial<F> spoly(const Polynomial<F>& f, const Polynomial<F>& g) {
  const F& k = f.ring()->field;
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(f.leading_monomial().quotient_of(l),
                      k.inv(f.leading_coeff())) -
         g.times_term(g.leading_monomial().quotient_of(l),
                      k.inv(g.leading_coeff()));
}

template <CoefficientField F>
struct GroebnerResult {
  std::vector<Polynomial<F>> basis;  // reduced, monic, descending by lt
  // When tracked: basis[k] = sum cofactors[k][i] * input[i] exactly.
  std::vector<std::vector<Polynomial<F>>> cofactors;
  bool tracked = false;
};

/// Buchberger with the product and chain criteria and the normal selection
/// strategy (lowest lcm degree first, ties by generator index pair). The
/// returned basis is the unique reduced Groebner basis for the ring's
/// order. With track=true, a cofactor row over the inputs accompanies
/// every basis element.
template <CoefficientField F>
GroebnerResult<F> buchberger(std::span<const Polynomial<F>> inputs,
                             const GbLimits& limits = {}, bool track = false) {
  GroebnerResult<F> out;
  out.tracked = track;
  RingPtr<F> ring;
  for (const auto& g : inputs)
    if (g.ring()) { ring = g.ring(); break; }
  if (!ring) return out;
  const F& k = ring->field;
  const MonomialOrder& ord = ring->order;
  const std::size_t n_in = inputs.size();

  struct Entry {
    Polynomial<F> poly;
    std::vector<Polynomial<F>> rep;
  };
  std::vector<Entry> work;
  auto unit_rep = [&](std::size_t idx) {
    std::vector<Polynomial<F>> rep;
    if (!track) return rep;
    rep.assign(n_in, Polynomial<F>::zero(ring));
    rep[idx] = Polynomial<F>::constant(ring, k.one());
    return rep;
  };
  for (std::size_t i = 0; i < n_in; ++i) {
    if (!inputs[i].is_zero()) work.push_back({inputs[i], unit_rep(i)});
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(work[i].poly.leading_monomial(),
                                 work[j].poly.leading_monomial());
      std::uint64_t d = l.degree();
      pending.push_back({i, j, std::move(l), d});
    }
  };
  for (std::size_t j = 1; j < work.size(); ++j) push_pairs_for(j);

  // Reduce with cofactor bookkeeping against the current working set.
  auto reduce_entry = [&](Polynomial<F> p, std::vector<Polynomial<F>> rep) {
    std::vector<Polynomial<F>> divisors;
    divisors.reserve(work.size());
    for (const auto& w : work) divisors.push_back(w.poly);
    DivisionResult<F> d = divide<F>(p, divisors);
    if (track) {
      for (std::size_t t = 0; t < work.size(); ++t) {
        if (d.quotients[t].is_zero()) continue;
        for (std::size_t s = 0; s < n_in; ++s)
          rep[s] = rep[s] - d.quotients[t] * work[t].rep[s];
      }
    }
    return Entry{std::move(d.remainder), std::move(rep)};
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    // normal strategy: minimal lcm degree, then lexicographic (j, i)
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const Pair &a = pending[t], &b = pending[best];
      if (a.deg < b.deg ||
          (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i))))
        best = t;
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    treated.insert({pr.i, pr.j});

    if (++processed > limits.max_pairs)
      throw ResourceCapError("computation aborted: pair cap exceeded (" +
                             std::to_string(limits.max_pairs) + ")");

    const Monomial& li = work[pr.i].poly.leading_monomial();
    const Monomial& lj = work[pr.j].poly.leading_monomial();
    // product criterion
    if (li.coprime_with(lj)) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t t = 0; t < work.size() && !skip; ++t) {
      if (t == pr.i || t == pr.j) continue;
      if (!work[t].poly.leading_monomial().divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, t);
      auto key2 = std::minmax(pr.j, t);
      if (treated.count({key1.first, key1.second}) &&
          treated.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial<F> s = spoly(work[pr.i].poly, work[pr.j].poly);
    std::vector<Polynomial<F>> rep;
    if (track) {
      rep.assign(n_in, Polynomial<F>::zero(ring));
      Monomial ti = li.quotient_of(pr.lcm);
      Monomial tj = lj.quotient_of(pr.lcm);
      typename F::Elem ci = k.inv(work[pr.i].poly.leading_coeff());
      typename F::Elem cj = k.inv(work[pr.j].poly.leading_coeff());
      for (std::size_t sIdx = 0; sIdx < n_in; ++sIdx)
        rep[sIdx] = work[pr.i].rep[sIdx].times_term(ti, ci) -
                    work[pr.j].rep[sIdx].times_term(tj, cj);
    }
    Entry e = reduce_entry(std::move(s), std::move(rep));
    if (e.poly.is_zero()) continue;

    if (limits.max_degree && e.poly.total_degree() > limits.max_degree)
      throw ResourceCapError("computation aborted: degree cap exceeded (" +
                             std::to_string(limits.max_degree) + ")");
    work.push_back(std::move(e));
    if (work.size() > limits.max_polys)
      throw ResourceCapError("computation aborted: basis size cap exceeded (" +
                             std::to_string(limits.max_polys) + ")");
    push_pairs_for(work.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another survivor's.
  std::vector<bool> keep(work.size(), true);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < work.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = work[i].poly.leading_monomial();
      const Monomial& mj = work[j].poly.leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) keep[i] = false;
    }
  }
  std::vector<Entry> minimal;
  for (std::size_t i = 0; i < work.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(work[i]));

  // Autoreduce tails, then normalize monic and sort descending by lt.
  std::vector<Entry> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j].poly);
    DivisionResult<F> d = divide<F>(minimal[i].poly, others);
    Entry e{std::move(d.remainder), minimal[i].rep};
    if (track) {
      std::size_t t = 0;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        if (!d.quotients[t].is_zero())
          for (std::size_t s = 0; s < n_in; ++s)
            e.rep[s] = e.rep[s] - d.quotients[t] * minimal[j].rep[s];
        ++t;
      }
    }
    if (!e.poly.is_zero()) {
      typename F::Elem iv = k.inv(e.poly.leading_coeff());
      e.poly = e.poly.scaled(iv);
      if (track)
        for (auto& r : e.rep) r = r.scaled(iv);
      reduced.push_back(std::move(e));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Entry& a, const Entry& b) {
    return ord.compare(a.poly.leading_monomial(), b.poly.leading_monomial()) > 0;
  });

  for (auto& e : reduced) {
    out.basis.push_back(std::move(e.poly));
    if (track) out.cofactors.push_back(std::move(e.rep));
  }
  return out;
}

template <CoefficientField F>
GroebnerResult<F> buchberger(const std::vector<Polynomial<F>>& inputs,
                             const GbLimits& limits = {}, bool track = false) {
  return buchberger(std::span<const Polynomial<F>>(inputs), limits, track);
}

}  // namespace forca

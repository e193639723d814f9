#pragma once

#include <vector>

#include "forca/forca.hpp"

// Criterion-free textbook Buchberger, used as an independent oracle for
// the engine. Processes every S-pair, reduces with its own top-reduction
// loop, and interreduces at the end. No pair elimination, no selection
// strategy, no caps.
namespace oracle {

template <forca::CoefficientField F>
forca::Polynomial<F> naive_reduce(forca::Polynomial<F> p,
                                  const std::vector<forca::Polynomial<F>>& gs) {
  using forca::Monomial;
  using forca::Polynomial;
  const auto ring = p.ring();
  const F& k = ring->field;
  std::vector<typename Polynomial<F>::Term> rem;
  while (!p.is_zero()) {
    bool hit = false;
    for (const auto& g : gs) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(p.leading_monomial())) continue;
      Monomial t = g.leading_monomial().quotient_of(p.leading_monomial());
      p = p - g.times_term(t, k.mul(p.leading_coeff(), k.inv(g.leading_coeff())));
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(p.leading_term());
      p = p - Polynomial<F>::from_term(ring, p.leading_term().mono,
                                       p.leading_term().coeff);
    }
  }
  return Polynomial<F>::from_terms(ring, std::move(rem));
}

template <forca::CoefficientField F>
std::vector<forca::Polynomial<F>> naive_groebner(
    std::vector<forca::Polynomial<F>> gens) {
  using forca::Monomial;
  using forca::Polynomial;
  std::vector<Polynomial<F>> g;
  for (auto& x : gens)
    if (!x.is_zero()) g.push_back(std::move(x));
  if (g.empty()) return g;
  const auto ring = g.front().ring();
  const F& k = ring->field;

  // process every pair, including pairs created along the way
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Monomial l = Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial());
      Polynomial<F> s =
          g[i].times_term(g[i].leading_monomial().quotient_of(l),
                          k.inv(g[i].leading_coeff())) -
          g[j].times_term(g[j].leading_monomial().quotient_of(l),
                          k.inv(g[j].leading_coeff()));
      Polynomial<F> r = naive_reduce(s, g);
      if (!r.is_zero()) g.push_back(std::move(r));
    }
  }

  // minimalize + reduce + monic + sort: the unique reduced basis
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = g[i].leading_monomial(), &mj = g[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<F> r = naive_reduce(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return ring->order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

}  // namespace oracle

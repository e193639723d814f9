#pragma once

#include <string>
#include <vector>

#include "forca/ideal.hpp"

namespace forca {

/// Bracket ideal I^[q] = (f_1^q,..,f_n^q) for q a power of the (positive)
/// characteristic, the extension of I under the e-th Frobenius.
template <CoefficientField F>
IdealHandle<F> bracket_ideal(const IdealHandle<F>& ideal, std::uint64_t q) {
  std::uint32_t p = ideal.ring()->field.characteristic();
  if (p == 0)
    throw std::invalid_argument("bracket ideal requires positive characteristic");
  std::uint64_t r = q;
  while (r > 1 && r % p == 0) r /= p;
  if (r != 1)
    throw std::invalid_argument("bracket exponent must be a power of the characteristic");
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(q));
  return IdealHandle<F>(ideal.presentation(), std::move(gens));
}

template <CoefficientField F>
struct FrobeniusLevel {
  unsigned e = 0;
  std::uint64_t q = 0;
  bool member = false;
  bool capped = false;       // the level hit a resource cap
  std::string message;       // cap diagnostics
  /// f^q = sum cofactors[i] * f_i^q when member.
  std::vector<Polynomial<F>> cofactors;
};

template <CoefficientField F>
struct FrobeniusReport {
  std::uint32_t p = 0;
  std::vector<FrobeniusLevel<F>> levels;
};

/// Frobenius-power membership f^q in I^[q] for q = p^e, e = 1..e_max.
/// These are z = 1 witnesses (Frobenius closure style); the report answers
/// "inclusion found / not found up to e_max", never a tight-closure
/// verdict. Membership is monotone in e; the report enforces it.
template <CoefficientField F>
FrobeniusReport<F> frobenius_member(const Polynomial<F>& f,
                                    const IdealHandle<F>& ideal,
                                    unsigned e_max) {
  FrobeniusReport<F> rep;
  rep.p = ideal.ring()->field.characteristic();
  if (rep.p == 0)
    throw std::invalid_argument("Frobenius membership requires positive characteristic");
  if (e_max == 0) throw std::invalid_argument("e_max must be positive");

  std::uint64_t q = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    if (q > (std::uint64_t(1) << 40) / rep.p)
      throw std::invalid_argument("Frobenius exponent overflow");
    q *= rep.p;
    FrobeniusLevel<F> level;
    level.e = e;
    level.q = q;
    try {
      IdealHandle<F> bq = bracket_ideal(ideal, q);
      auto membership = bq.contains(f.pow(q));
      level.member = membership.member;
      level.cofactors = std::move(membership.cofactors);
    } catch (const ResourceCapError& err) {
      level.capped = true;
      level.message = err.what();
    }
    rep.levels.push_back(std::move(level));
  }

  // Once f^q lies in I^[q], applying Frobenius gives f^{qp} in I^[qp].
  bool seen_true = false;
  for (const auto& level : rep.levels) {
    if (level.capped) continue;
    if (seen_true && !level.member)
      throw std::logic_error("Frobenius membership report violates monotonicity");
    if (level.member) seen_true = true;
  }
  return rep;
}

/// Weighted degree of the two-generator class f/(f1 f2):
/// deg(f) - deg(f1) - deg(f2). All three inputs must be homogeneous.
template <CoefficientField F>
std::vector<std::int64_t> class_degree(const Polynomial<F>& f,
                                       const Polynomial<F>& f1,
                                       const Polynomial<F>& f2,
                                       const Grading& grading) {
  auto df = weighted_degree(f, grading);
  auto d1 = weighted_degree(f1, grading);
  auto d2 = weighted_degree(f2, grading);
  if (!df || !d1 || !d2)
    throw std::invalid_argument("class degree requires homogeneous data");
  std::vector<std::int64_t> out(df->size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (*df)[i] - (*d1)[i] - (*d2)[i];
  return out;
}

}  // namespace forca

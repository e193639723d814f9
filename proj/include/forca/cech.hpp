#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "forca/forcing.hpp"

namespace forca {

/// Degree-one Cech cocycle on D(f_1,..,f_n): the family b_ij/(f_i^m f_j^m)
/// for i < j, a single exponent m for every pair. Only the i < j entries
/// are stored; b_ji = -b_ij by convention.
template <CoefficientField F>
struct CechCocycle {
  RingPresentation<F> base;
  std::vector<Polynomial<F>> gens;
  unsigned exponent = 1;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial<F>> numerators;

  std::size_t size() const { return gens.size(); }

  const Polynomial<F>& numerator(std::size_t i, std::size_t j) const {
    auto it = numerators.find({i, j});
    if (it == numerators.end())
      throw std::invalid_argument("cocycle numerator index out of range");
    return it->second;
  }
};

/// Build a cocycle, filling absent pairs with zero and validating shapes.
template <CoefficientField F>
CechCocycle<F> make_cocycle(
    RingPresentation<F> base, std::vector<Polynomial<F>> gens, unsigned exponent,
    std::map<std::pair<std::size_t, std::size_t>, Polynomial<F>> numerators) {
  if (exponent == 0) throw std::invalid_argument("cocycle exponent must be >= 1");
  CechCocycle<F> c;
  c.base = std::move(base);
  c.gens = std::move(gens);
  c.exponent = exponent;
  for (const auto& g : c.gens)
    if (!same_ring(g.ring(), c.base.ring())) throw RingMismatchError();
  const std::size_t n = c.gens.size();
  for (auto& [key, b] : numerators) {
    if (key.first >= key.second || key.second >= n)
      throw std::invalid_argument("cocycle numerators must be indexed by pairs i < j");
    if (!same_ring(b.ring(), c.base.ring())) throw RingMismatchError();
    c.numerators[key] = std::move(b);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!c.numerators.count({i, j}))
        c.numerators[{i, j}] = Polynomial<F>::zero(c.base.ring());
  return c;
}

template <CoefficientField F>
struct CocycleCheck {
  bool ok = true;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> failing;
  Polynomial<F> residual;  // normal form of the failing combination
};

/// Cocycle condition: b_ij f_k^m - b_ik f_j^m + b_jk f_i^m = 0 in R for
/// every i < j < k. Returns the first failing triple, if any.
template <CoefficientField F>
CocycleCheck<F> check_cocycle(const CechCocycle<F>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial<F> lhs = c.numerator(i, j) * c.gens[k].pow(c.exponent) -
                            c.numerator(i, k) * c.gens[j].pow(c.exponent) +
                            c.numerator(j, k) * c.gens[i].pow(c.exponent);
        Polynomial<F> res = c.base.reduce(lhs);
        if (!res.is_zero()) return {false, {{i, j, k}}, std::move(res)};
      }
    }
  }
  return {};
}

/// The (n choose 2) x n forcing system of a cocycle: rows indexed by pairs
/// (i,j), i < j, in lexicographic order; row (i,j) reads
/// f_j^m T_i - f_i^m T_j = b_ij. The cocycle condition is enforced.
template <CoefficientField F>
ForcingSystem<F> cech_to_forcing(const CechCocycle<F>& c,
                                 const std::string& tvar_stem = "T") {
  CocycleCheck<F> chk = check_cocycle(c);
  if (!chk.ok) {
    auto [i, j, k] = *chk.failing;
    throw std::invalid_argument(
        "cocycle condition fails at triple (" + std::to_string(i + 1) + "," +
        std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  }
  const std::size_t n = c.size();
  const RingPtr<F>& amb = c.base.ring();
  std::vector<std::vector<Polynomial<F>>> a;
  std::vector<Polynomial<F>> s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Polynomial<F>> row(n, Polynomial<F>::zero(amb));
      row[i] = c.gens[j].pow(c.exponent);
      row[j] = -c.gens[i].pow(c.exponent);
      a.push_back(std::move(row));
      s.push_back(c.numerator(i, j));
    }
  }
  return ForcingSystem<F>::from_matrix(c.base, std::move(a), std::move(s),
                                       tvar_stem);
}

template <CoefficientField F>
struct CoboundaryResult {
  bool coboundary = false;
  /// When a coboundary: f_j^m t_i - f_i^m t_j = b_ij in R for all i < j.
  std::vector<Polynomial<F>> witness;
};

/// Decide whether the class is zero, i.e. the representative lies in the
/// image of the coboundary map. Negative answers are certified.
template <CoefficientField F>
CoboundaryResult<F> is_coboundary(const CechCocycle<F>& c) {
  ForcingSystem<F> fs = cech_to_forcing(c);
  LinearSolveResult<F> sol =
      solve_linear_over_ring(fs.matrix(), fs.rhs(), fs.base());
  return {sol.solvable, std::move(sol.solution)};
}

/// Restriction of the class to the closed subscheme cut out by extra
/// defining polynomials. Numerators are reduced modulo the enlarged
/// defining ideal; the cocycle condition is re-verified.
template <CoefficientField F>
CechCocycle<F> restrict_class(const CechCocycle<F>& c,
                              std::vector<Polynomial<F>> extra) {
  std::vector<Polynomial<F>> defining = c.base.defining();
  for (auto& g : extra) defining.push_back(std::move(g));
  RingPresentation<F> smaller(c.base.ring(), std::move(defining),
                              c.base.limits());
  std::map<std::pair<std::size_t, std::size_t>, Polynomial<F>> nums;
  for (const auto& [key, b] : c.numerators) nums[key] = smaller.reduce(b);
  CechCocycle<F> r = make_cocycle(std::move(smaller), c.gens, c.exponent,
                                  std::move(nums));
  CocycleCheck<F> chk = check_cocycle(r);
  if (!chk.ok)
    throw std::invalid_argument(
        "restricted data no longer satisfies the cocycle condition");
  return r;
}

template <CoefficientField F>
struct LocalizationReport {
  std::size_t chart = 0;
  /// Inverse-variable name adjoined with relation y * f_chart = 1.
  std::string inverse_var;
  /// For every j != chart, the expression of T_j in R_{f_chart}[T_chart].
  std::vector<std::pair<std::size_t, Polynomial<F>>> eliminated;
  /// Normal forms of the forcing rows after substitution; all must vanish.
  bool all_rows_vanish = false;
  std::vector<bool> row_vanishes;
};

/// Witness that B_{f_i} is a polynomial ring R_{f_i}[T_i]: adjoin an
/// inverse y of f_i, express every other T_j through the (i,j) rows, and
/// verify all forcing rows reduce to zero after substitution.
template <CoefficientField F>
LocalizationReport<F> localize_presentation(const CechCocycle<F>& c,
                                            std::size_t chart) {
  const std::size_t n = c.size();
  if (chart >= n) throw std::invalid_argument("chart index out of range");
  ForcingSystem<F> fs = cech_to_forcing(c);
  const RingPtr<F>& total = fs.total_ring();

  LocalizationReport<F> rep;
  rep.chart = chart;
  rep.inverse_var = detail::fresh_var_name(total, std::string("_y"));
  RingPtr<F> ext = extend_ring(total, {rep.inverse_var});
  auto vmap = detail::identity_map(total->nvars());
  Polynomial<F> y = Polynomial<F>::variable(ext, ext->nvars() - 1);
  Polynomial<F> ym = y.pow(c.exponent);

  auto lift_base = [&](const Polynomial<F>& p) {
    return fs.lift(p).map_to(ext, vmap);
  };
  Polynomial<F> fi = lift_base(c.gens[chart]);
  Polynomial<F> ti =
      Polynomial<F>::variable(ext, fs.t_index(chart));

  // Substitution images: T_j -> y^m (f_j^m T_i -+ b), everything else fixed.
  std::vector<Polynomial<F>> images;
  for (std::size_t v = 0; v < ext->nvars(); ++v)
    images.push_back(Polynomial<F>::variable(ext, v));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == chart) continue;
    Polynomial<F> fjm = lift_base(c.gens[j]).pow(c.exponent);
    Polynomial<F> expr =
        j > chart
            ? ym * (fjm * ti - lift_base(c.numerator(chart, j)))
            : ym * (fjm * ti + lift_base(c.numerator(j, chart)));
    images[fs.t_index(j)] = expr;
    rep.eliminated.push_back({j, std::move(expr)});
  }

  // Residuals reduce modulo the base data and the inverse relation only.
  std::vector<Polynomial<F>> mod;
  for (const auto& d : c.base.defining())
    mod.push_back(fs.lift(d).map_to(ext, vmap));
  mod.push_back(y * fi - Polynomial<F>::constant(ext, 1LL));
  IdealHandle<F> chart_ideal(RingPresentation<F>(ext, {}, c.base.limits()),
                             std::move(mod));

  rep.all_rows_vanish = true;
  for (const auto& rel : fs.relations()) {
    Polynomial<F> res = rel.map_to(ext, vmap).substitute(images);
    bool ok = chart_ideal.contains_fast(res);
    rep.row_vanishes.push_back(ok);
    if (!ok) rep.all_rows_vanish = false;
  }
  if (!rep.all_rows_vanish)
    throw std::logic_error(
        "localization: a forcing row fails to vanish on the chart");
  return rep;
}

/// Transition identity between two charts: with W_i = y_i^m T_i,
/// W_i - W_j = b_ij y_i^m y_j^m modulo the forcing data and both inverse
/// relations.
template <CoefficientField F>
bool check_transition(const CechCocycle<F>& c, std::size_t i, std::size_t j) {
  if (i >= j || j >= c.size())
    throw std::invalid_argument("transition requires chart indices i < j");
  ForcingSystem<F> fs = cech_to_forcing(c);
  const RingPtr<F>& total = fs.total_ring();
  std::string yi_name = detail::fresh_var_name(total, std::string("_yi"));
  std::string yj_name = detail::fresh_var_name(total, std::string("_yj"));
  RingPtr<F> ext = extend_ring(total, {yi_name, yj_name});
  auto vmap = detail::identity_map(total->nvars());

  Polynomial<F> yi = Polynomial<F>::variable(ext, ext->nvars() - 2);
  Polynomial<F> yj = Polynomial<F>::variable(ext, ext->nvars() - 1);
  auto lift_base = [&](const Polynomial<F>& p) {
    return fs.lift(p).map_to(ext, vmap);
  };

  std::vector<Polynomial<F>> mod;
  for (const auto& d : fs.total().defining()) mod.push_back(d.map_to(ext, vmap));
  mod.push_back(yi * lift_base(c.gens[i]) - Polynomial<F>::constant(ext, 1LL));
  mod.push_back(yj * lift_base(c.gens[j]) - Polynomial<F>::constant(ext, 1LL));
  IdealHandle<F> ideal(RingPresentation<F>(ext, {}, c.base.limits()),
                       std::move(mod));

  Polynomial<F> wi =
      yi.pow(c.exponent) * Polynomial<F>::variable(ext, fs.t_index(i));
  Polynomial<F> wj =
      yj.pow(c.exponent) * Polynomial<F>::variable(ext, fs.t_index(j));
  Polynomial<F> target = wi - wj -
                         lift_base(c.numerator(i, j)) * yi.pow(c.exponent) *
                             yj.pow(c.exponent);
  return ideal.contains_fast(target);
}

}  // namespace forca

#pragma once

#include <string>
#include <vector>

#include "forca/forcing.hpp"

namespace forca {

/// Jacobian of the presentation of B: one row per base defining polynomial
/// (zero in the T-columns) and a final row for the forcing relation h,
/// whose T-entries are the ideal generators f_1..f_n.
template <CoefficientField F>
struct JacobianMatrix {
  RingPtr<F> ring;  // total ambient ring
  std::size_t base_vars = 0, forcing_vars = 0;
  std::vector<std::vector<Polynomial<F>>> rows;  // (k+1) x (m+n)

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return base_vars + forcing_vars; }
};

template <CoefficientField F>
JacobianMatrix<F> jacobian(const ForcingSystem<F>& fs) {
  fs.require_ideal_case();
  JacobianMatrix<F> jm;
  jm.ring = fs.total_ring();
  jm.base_vars = fs.base_var_count();
  jm.forcing_vars = fs.unknowns();
  std::vector<Polynomial<F>> rels;
  for (const auto& d : fs.base().defining()) rels.push_back(fs.lift(d));
  rels.push_back(fs.relations().front());  // h
  for (const auto& r : rels) {
    std::vector<Polynomial<F>> row;
    for (std::size_t v = 0; v < jm.ring->nvars(); ++v)
      row.push_back(r.derivative(v));
    jm.rows.push_back(std::move(row));
  }
  return jm;
}

template <CoefficientField F>
FieldMatrix<F> evaluate_matrix(const JacobianMatrix<F>& jm,
                               std::span<const typename F::Elem> point) {
  const F& k = jm.ring->field;
  FieldMatrix<F> m(jm.row_count(), jm.col_count(), k.zero());
  for (std::size_t i = 0; i < jm.row_count(); ++i)
    for (std::size_t j = 0; j < jm.col_count(); ++j)
      m.at(i, j) = jm.rows[i][j].evaluate(point);
  return m;
}

enum class PointCase {
  case1_smooth,    // some f_i(P) != 0, base point nonsingular
  case1_singular,  // some f_i(P) != 0, base point singular
  case2_empty,     // all f_i(P) = 0 and f(P) != 0: empty fiber
  case3_singular,  // all vanish, base point singular
  case4_singular,  // all vanish, base smooth, h-row base partials vanish
  rank_test,       // none of the structural cases: direct rank comparison
};

enum class Verdict { nonsingular, singular, empty_fiber };

struct PointClassification {
  PointCase case_tag = PointCase::rank_test;
  Verdict verdict = Verdict::singular;
  std::size_t rank = 0;
  std::size_t expected_codim = 0;
  std::size_t dim_b = 0;
  std::string note;
};

inline const char* to_string(PointCase c) {
  switch (c) {
    case PointCase::case1_smooth: return "case1-smooth";
    case PointCase::case1_singular: return "case1-singular";
    case PointCase::case2_empty: return "case2-empty";
    case PointCase::case3_singular: return "case3-singular";
    case PointCase::case4_singular: return "case4-singular";
    case PointCase::rank_test: return "rank-test";
  }
  return "";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::nonsingular: return "nonsingular";
    case Verdict::singular: return "singular";
    case Verdict::empty_fiber: return "empty-fiber";
  }
  return "";
}

template <CoefficientField F>
std::size_t base_dimension(const ForcingSystem<F>& fs) {
  return krull_dim(
      IdealHandle<F>(RingPresentation<F>(fs.base().ring(), {}, fs.base().limits()),
                     fs.base().defining()));
}

/// Point-wise singularity classification of Q = (P, t) on Spec B by the
/// Jacobian rank criterion, with the structural shortcut cases first.
/// dim_b defaults to dim R + n - 1 (nonzero relation over a domain).
template <CoefficientField F>
PointClassification classify_point(const ForcingSystem<F>& fs,
                                   std::span<const typename F::Elem> q,
                                   std::size_t dim_b_override = SIZE_MAX) {
  fs.require_ideal_case();
  const RingPtr<F>& total = fs.total_ring();
  const F& k = total->field;
  const std::size_t m = fs.base_var_count(), n = fs.unknowns();
  if (q.size() != m + n) throw std::invalid_argument("point arity mismatch");
  std::span<const typename F::Elem> p = q.subspan(0, m);
  if (!fs.base().on_spectrum(p))
    throw std::invalid_argument("point does not lie on the base spectrum");

  std::vector<typename F::Elem> fvals;
  bool all_gens_vanish = true;
  for (const auto& fi : fs.ideal_generators()) {
    fvals.push_back(fi.evaluate(p));
    if (!k.is_zero(fvals.back())) all_gens_vanish = false;
  }
  typename F::Elem fval = fs.forced_element().evaluate(p);

  PointClassification out;
  if (!k.is_zero(fs.relations().front().evaluate(q))) {
    if (all_gens_vanish && !k.is_zero(fval)) {
      out.case_tag = PointCase::case2_empty;
      out.verdict = Verdict::empty_fiber;
      out.note = "all generators vanish at P and f(P) != 0";
      return out;
    }
    throw std::invalid_argument("point does not satisfy the forcing relation");
  }

  std::size_t dim_r = base_dimension(fs);
  std::size_t dim_b = dim_b_override != SIZE_MAX
                          ? dim_b_override
                          : (fs.relations().front().is_zero() ? dim_r + n
                                                              : dim_r + n - 1);
  out.dim_b = dim_b;
  std::size_t codim_r = m - dim_r;
  std::size_t codim_b = (m + n) - dim_b;

  JacobianMatrix<F> jm = jacobian(fs);

  // Base-only Jacobian rank at P (the g-block).
  FieldMatrix<F> base_jac(fs.base().defining().size(), m, k.zero());
  for (std::size_t i = 0; i < fs.base().defining().size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      base_jac.at(i, j) = fs.base().defining()[i].derivative(j).evaluate(p);
  std::size_t rank_base = matrix_rank(k, std::move(base_jac));
  bool base_smooth = rank_base == codim_r;

  if (!all_gens_vanish) {
    out.case_tag = base_smooth ? PointCase::case1_smooth : PointCase::case1_singular;
    out.verdict = base_smooth ? Verdict::nonsingular : Verdict::singular;
    out.rank = rank_base;
    out.expected_codim = codim_r;
    out.note = "some generator is a unit at P; Q inherits the base verdict";
    return out;
  }

  // From here on every f_i(P) = 0 and f(P) = 0 (h(Q) = 0 forces it).
  out.rank = matrix_rank(k, evaluate_matrix(jm, q));
  out.expected_codim = codim_b;
  // The structural shortcuts presume a nonzero forcing relation and the
  // hypersurface dimension count; otherwise only the rank test applies.
  bool structural = !fs.relations().front().is_zero() && dim_b == dim_r + n - 1;
  if (structural && !base_smooth) {
    out.case_tag = PointCase::case3_singular;
    out.verdict = Verdict::singular;
    out.note = "P is singular on the base";
    return out;
  }
  if (structural && base_smooth) {
    bool h_partials_vanish = true;
    const Polynomial<F>& h = fs.relations().front();
    for (std::size_t j = 0; j < m && h_partials_vanish; ++j)
      if (!k.is_zero(h.derivative(j).evaluate(q))) h_partials_vanish = false;
    if (h_partials_vanish) {
      out.case_tag = PointCase::case4_singular;
      out.verdict = Verdict::singular;
      out.note = "all base partials of the forcing relation vanish at Q";
      return out;
    }
  }
  out.case_tag = PointCase::rank_test;
  out.verdict = out.rank == codim_b ? Verdict::nonsingular : Verdict::singular;
  return out;
}

/// The linear system of structural case 4 at a base point P where every
/// f_i and f vanish: solutions t to
///   sum_i t_i d f_i/d x_j (P) = -d f/d x_j (P)   for all j
/// give fiber points (P, t) at which every base partial of h vanishes,
/// hence singular points of B.
template <CoefficientField F>
struct Case4System {
  FieldMatrix<F> matrix;                   // (base vars) x n
  std::vector<typename F::Elem> rhs;       // negated f-partials at P
  LinearSolution<F> solutions;
};

template <CoefficientField F>
Case4System<F> case4_system(const ForcingSystem<F>& fs,
                            std::span<const typename F::Elem> p) {
  fs.require_ideal_case();
  const F& k = fs.base().ring()->field;
  const std::size_t m = fs.base_var_count(), n = fs.unknowns();
  if (p.size() != m) throw std::invalid_argument("point arity mismatch");
  if (!fs.base().on_spectrum(p))
    throw std::invalid_argument("point does not lie on the base spectrum");
  for (const auto& fi : fs.ideal_generators())
    if (!k.is_zero(fi.evaluate(p)))
      throw std::invalid_argument("case 4 requires every generator to vanish at P");
  if (!k.is_zero(fs.forced_element().evaluate(p)))
    throw std::invalid_argument("case 4 requires f(P) = 0");

  Case4System<F> sys;
  sys.matrix = FieldMatrix<F>(m, n, k.zero());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      sys.matrix.at(j, i) = fs.ideal_generators()[i].derivative(j).evaluate(p);
  for (std::size_t j = 0; j < m; ++j)
    sys.rhs.push_back(k.neg(fs.forced_element().derivative(j).evaluate(p)));
  sys.solutions = solve_linear(k, sys.matrix, sys.rhs);
  return sys;
}

namespace detail {

template <CoefficientField F>
Polynomial<F> poly_determinant(const std::vector<std::vector<Polynomial<F>>>& a,
                               const RingPtr<F>& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial<F>::constant(ring, 1LL);
  if (n == 1) return a[0][0];
  Polynomial<F> det = Polynomial<F>::zero(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial<F>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<F>> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    Polynomial<F> term = a[0][c] * poly_determinant(minor, ring);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Symbolic singular locus: the ideal generated by the presentation of B
/// together with all codim x codim minors of the Jacobian. A point of
/// Spec B is singular iff it satisfies every generator.
template <CoefficientField F>
IdealHandle<F> singular_locus_ideal(const ForcingSystem<F>& fs,
                                    std::size_t codim) {
  JacobianMatrix<F> jm = jacobian(fs);
  if (codim > std::min(jm.row_count(), jm.col_count()))
    throw std::invalid_argument("codimension out of range for the Jacobian size");
  const RingPtr<F>& ring = jm.ring;

  std::vector<Polynomial<F>> gens;
  for (const auto& d : fs.total().defining()) gens.push_back(d);
  if (codim == 0) {
    // The empty minor is the constant 1: the locus ideal is the unit ideal.
    gens.push_back(Polynomial<F>::constant(ring, 1LL));
  } else {
    std::vector<std::size_t> rsel(codim), csel(codim);
    for (std::size_t i = 0; i < codim; ++i) rsel[i] = i;
    do {
      for (std::size_t i = 0; i < codim; ++i) csel[i] = i;
      do {
        std::vector<std::vector<Polynomial<F>>> sub;
        for (auto r : rsel) {
          std::vector<Polynomial<F>> row;
          for (auto c : csel) row.push_back(jm.rows[r][c]);
          sub.push_back(std::move(row));
        }
        Polynomial<F> d = detail::poly_determinant(sub, ring);
        if (!d.is_zero()) gens.push_back(std::move(d));
      } while (detail::next_combination(csel, jm.col_count()));
    } while (detail::next_combination(rsel, jm.row_count()));
  }
  return IdealHandle<F>(RingPresentation<F>(ring, {}, fs.base().limits()),
                        std::move(gens));
}

}  // namespace forca

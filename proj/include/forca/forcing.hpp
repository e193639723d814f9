#pragma once

#include <string>
#include <vector>

#include "forca/linalg.hpp"
#include "forca/module_solve.hpp"

namespace forca {

/// Presentation of B = R[T_1..T_n]/(rows of A T - s) over a presented base
/// ring R. The ideal case is the single row (f_1 .. f_n | -f), i.e. the
/// relation f_1 T_1 + ... + f_n T_n + f = 0. Immutable after construction.
template <CoefficientField F>
class ForcingSystem {
 public:
  static ForcingSystem from_matrix(RingPresentation<F> base,
                                   std::vector<std::vector<Polynomial<F>>> a,
                                   std::vector<Polynomial<F>> s,
                                   const std::string& tvar_stem = "T") {
    ForcingSystem fs;
    fs.base_ = std::move(base);
    fs.matrix_ = std::move(a);
    fs.rhs_ = std::move(s);
    const std::size_t m = fs.matrix_.size();
    if (fs.rhs_.size() != m)
      throw std::invalid_argument("forcing data: rhs length mismatch");
    fs.nt_ = m == 0 ? 0 : fs.matrix_.front().size();
    for (const auto& row : fs.matrix_) {
      if (row.size() != fs.nt_) throw std::invalid_argument("forcing data: ragged matrix");
      for (const auto& p : row)
        if (!same_ring(p.ring(), fs.base_.ring())) throw RingMismatchError();
    }
    for (const auto& p : fs.rhs_)
      if (!same_ring(p.ring(), fs.base_.ring())) throw RingMismatchError();

    const RingPtr<F>& amb = fs.base_.ring();
    std::vector<std::string> tnames;
    for (std::size_t i = 1; i <= fs.nt_; ++i)
      tnames.push_back(tvar_stem + std::to_string(i));
    fs.total_ring_ = extend_ring(amb, tnames);
    fs.base_vars_ = amb->nvars();

    auto vmap = detail::identity_map(fs.base_vars_);
    std::vector<Polynomial<F>> total_defining;
    for (const auto& d : fs.base_.defining())
      total_defining.push_back(d.map_to(fs.total_ring_, vmap));
    for (std::size_t r = 0; r < m; ++r) {
      Polynomial<F> rel = Polynomial<F>::zero(fs.total_ring_);
      for (std::size_t j = 0; j < fs.nt_; ++j)
        rel = rel + fs.matrix_[r][j].map_to(fs.total_ring_, vmap) *
                        Polynomial<F>::variable(fs.total_ring_, fs.base_vars_ + j);
      rel = rel - fs.rhs_[r].map_to(fs.total_ring_, vmap);
      fs.relations_.push_back(rel);
      total_defining.push_back(std::move(rel));
    }
    fs.total_ = RingPresentation<F>(fs.total_ring_, std::move(total_defining),
                                    fs.base_.limits());
    return fs;
  }

  /// The ideal case: generators f_1..f_n and forced element f, stored as
  /// the relation f_1 T_1 + ... + f_n T_n + f = 0.
  static ForcingSystem ideal_case(RingPresentation<F> base,
                                  std::vector<Polynomial<F>> gens,
                                  Polynomial<F> f,
                                  const std::string& tvar_stem = "T") {
    std::vector<Polynomial<F>> s = {-f};
    return from_matrix(std::move(base), {std::move(gens)}, std::move(s), tvar_stem);
  }

  const RingPresentation<F>& base() const { return base_; }
  const std::vector<std::vector<Polynomial<F>>>& matrix() const { return matrix_; }
  const std::vector<Polynomial<F>>& rhs() const { return rhs_; }
  std::size_t rows() const { return matrix_.size(); }
  std::size_t unknowns() const { return nt_; }
  std::size_t base_var_count() const { return base_vars_; }

  const RingPtr<F>& total_ring() const { return total_ring_; }
  /// Presentation of B (base defining ideal plus the forcing relations).
  const RingPresentation<F>& total() const { return total_; }
  /// The forcing relations (A T - s rows) in the total ring.
  const std::vector<Polynomial<F>>& relations() const { return relations_; }

  std::size_t t_index(std::size_t i) const { return base_vars_ + i; }

  bool is_ideal_case() const { return rows() == 1; }
  /// Ideal-case accessors.
  const std::vector<Polynomial<F>>& ideal_generators() const {
    require_ideal_case();
    return matrix_.front();
  }
  Polynomial<F> forced_element() const {
    require_ideal_case();
    return -rhs_.front();
  }
  IdealHandle<F> ideal() const {
    require_ideal_case();
    return IdealHandle<F>(base_, matrix_.front());
  }

  Polynomial<F> lift(const Polynomial<F>& base_poly) const {
    return base_poly.map_to(total_ring_, detail::identity_map(base_vars_));
  }

  void require_ideal_case() const {
    if (!is_ideal_case())
      throw std::invalid_argument("operation requires the ideal case (one forcing row)");
  }

 private:
  ForcingSystem() = default;

  RingPresentation<F> base_;
  std::vector<std::vector<Polynomial<F>>> matrix_;
  std::vector<Polynomial<F>> rhs_;
  RingPtr<F> total_ring_;
  RingPresentation<F> total_;
  std::vector<Polynomial<F>> relations_;
  std::size_t nt_ = 0;
  std::size_t base_vars_ = 0;
};

/// Fiber over a rational point: empty, or an affine subspace given by one
/// particular solution and a basis of directions.
template <CoefficientField F>
struct FiberClass {
  enum class Tag { Empty, Affine };
  Tag tag = Tag::Empty;
  std::size_t dimension = 0;
  std::vector<typename F::Elem> particular;
  std::vector<std::vector<typename F::Elem>> directions;

  bool empty() const { return tag == Tag::Empty; }
};

/// Exact classification of { t : A(P) t = s(P) } over the coefficient
/// field. P must lie on Spec R.
template <CoefficientField F>
FiberClass<F> fiber_at(const ForcingSystem<F>& fs,
                       std::span<const typename F::Elem> point) {
  const RingPtr<F>& amb = fs.base().ring();
  if (point.size() != amb->nvars())
    throw std::invalid_argument("point arity mismatch");
  if (!fs.base().on_spectrum(point))
    throw std::invalid_argument("point does not lie on the base spectrum");
  const F& k = amb->field;

  FieldMatrix<F> a(fs.rows(), fs.unknowns(), k.zero());
  std::vector<typename F::Elem> b;
  for (std::size_t i = 0; i < fs.rows(); ++i) {
    for (std::size_t j = 0; j < fs.unknowns(); ++j)
      a.at(i, j) = fs.matrix()[i][j].evaluate(point);
    b.push_back(fs.rhs()[i].evaluate(point));
  }
  LinearSolution<F> sol = solve_linear(k, std::move(a), std::move(b));

  FiberClass<F> fc;
  if (!sol.consistent) return fc;
  fc.tag = FiberClass<F>::Tag::Affine;
  fc.dimension = fs.unknowns() - sol.rank;
  fc.particular = std::move(sol.particular);
  fc.directions = std::move(sol.kernel);
  return fc;
}

template <CoefficientField F>
struct SectionResult {
  bool exists = false;
  /// T_i -> witness[i] defines a base-ring section of Spec B -> Spec R.
  std::vector<Polynomial<F>> witness;
};

/// A section exists iff A t = s is solvable over R; in the ideal case this
/// is the membership f in (f_1,..,f_n).
template <CoefficientField F>
SectionResult<F> has_section(const ForcingSystem<F>& fs) {
  LinearSolveResult<F> r =
      solve_linear_over_ring(fs.matrix(), fs.rhs(), fs.base());
  return {r.solvable, std::move(r.solution)};
}

/// Ideal case only: Spec B -> Spec R is surjective iff f lies in rad(I).
template <CoefficientField F>
bool is_surjective_over_base(const ForcingSystem<F>& fs) {
  fs.require_ideal_case();
  return radical_member(fs.forced_element(),
                        IdealHandle<F>(fs.base(), fs.ideal_generators()));
}

/// The canonical derivation D = f_2 d/dT_1 - f_1 d/dT_2 on a two-generator
/// forcing algebra. Annihilates the base ring and the forcing relation.
template <CoefficientField F>
class Derivation {
 public:
  Derivation(ForcingSystem<F> fs, bool regular_pair)
      : fs_(std::move(fs)), regular_pair_(regular_pair) {
    image_t1_ = fs_.lift(fs_.ideal_generators()[1]);   // f_2
    image_t2_ = -fs_.lift(fs_.ideal_generators()[0]);  // -f_1
  }

  const ForcingSystem<F>& system() const { return fs_; }
  const Polynomial<F>& image_t1() const { return image_t1_; }
  const Polynomial<F>& image_t2() const { return image_t2_; }
  /// Whether (f_1, f_2) passed the regular-pair test; the kernel claim
  /// B^D = R needs it.
  bool regular_pair() const { return regular_pair_; }
  /// Kernel description by the base ring is a characteristic-zero
  /// statement; positive characteristic gets a warning flag.
  bool characteristic_warning() const {
    return fs_.base().ring()->field.characteristic() != 0;
  }

  /// D(g) for an ambient representative g of an element of B.
  Polynomial<F> apply(const Polynomial<F>& g) const {
    return image_t1_ * g.derivative(fs_.t_index(0)) +
           image_t2_ * g.derivative(fs_.t_index(1));
  }

 private:
  ForcingSystem<F> fs_;
  Polynomial<F> image_t1_, image_t2_;
  bool regular_pair_;
};

/// Build D for an ideal-case system with exactly two generators, verifying
/// that D annihilates the forcing relation in B.
template <CoefficientField F>
Derivation<F> build_lnd(const ForcingSystem<F>& fs) {
  fs.require_ideal_case();
  if (fs.unknowns() != 2)
    throw std::invalid_argument("derivation requires exactly two generators");
  bool regular = is_regular_pair(fs.ideal_generators()[0],
                                 fs.ideal_generators()[1], fs.base());
  Derivation<F> d(fs, regular);
  if (!fs.total().is_zero_in_quotient(d.apply(fs.relations().front())))
    throw std::logic_error("derivation does not annihilate the forcing relation");
  return d;
}

/// Smallest n with D^n(g) = 0 in B. Terminates: D strictly lowers the
/// T-degree, so n never exceeds T-degree(g) + 1.
template <CoefficientField F>
std::size_t nilpotency_index(const Derivation<F>& d, const Polynomial<F>& g) {
  const ForcingSystem<F>& fs = d.system();
  Polynomial<F> h = g;
  std::size_t n = 0;
  while (!fs.total().is_zero_in_quotient(h)) {
    h = d.apply(h);
    ++n;
  }
  return n;
}

/// Certify the additive coaction T_1 -> T_1 + f_2 W, T_2 -> T_2 - f_1 W:
/// the transformed forcing relation reduces to zero modulo the original
/// one in B[W].
template <CoefficientField F>
bool verify_coaction(const ForcingSystem<F>& fs) {
  fs.require_ideal_case();
  if (fs.unknowns() != 2)
    throw std::invalid_argument("coaction check requires exactly two generators");
  const RingPtr<F>& total = fs.total_ring();
  RingPtr<F> wring =
      extend_ring(total, {detail::fresh_var_name(total, std::string("W"))});
  auto vmap = detail::identity_map(total->nvars());
  Polynomial<F> w = Polynomial<F>::variable(wring, wring->nvars() - 1);
  Polynomial<F> f1 = fs.lift(fs.ideal_generators()[0]).map_to(wring, vmap);
  Polynomial<F> f2 = fs.lift(fs.ideal_generators()[1]).map_to(wring, vmap);

  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < total->nvars(); ++i)
    images.push_back(Polynomial<F>::variable(wring, i));
  images[fs.t_index(0)] = images[fs.t_index(0)] + f2 * w;
  images[fs.t_index(1)] = images[fs.t_index(1)] - f1 * w;

  Polynomial<F> rel = fs.relations().front();
  Polynomial<F> transformed = rel.substitute(images);

  std::vector<Polynomial<F>> ideal_gens;
  for (const auto& g : fs.total().defining())
    ideal_gens.push_back(g.map_to(wring, vmap));
  IdealHandle<F> b_ideal(RingPresentation<F>(wring, {}, fs.base().limits()),
                         std::move(ideal_gens));
  return b_ideal.contains_fast(transformed);
}

}  // namespace forca

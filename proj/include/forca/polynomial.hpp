#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "forca/errors.hpp"
#include "forca/ring.hpp"

namespace forca {

/// Sparse exact multivariate polynomial. Terms are kept in strictly
/// descending monomial order (the ring's order) with no zero coefficients,
/// so equal polynomials have identical representations and serialize
/// byte-identically. Values are immutable once built; all operations
/// return fresh polynomials.
template <CoefficientField F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c))
      p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, long long n) {
    return constant(ring, ring->field.from_int(n));
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t idx) {
    Monomial m(ring->nvars());
    m.e.at(idx) = 1;
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), ring->field.one()});
    return p;
  }

  static Polynomial from_term(RingPtr<F> ring, Monomial m, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Build from an arbitrary (monomial, coefficient) list; merges
  /// duplicates and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Accum acc(ring);
    for (auto& t : terms) acc.add(t.mono, t.coeff);
    return acc.take();
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Elem& leading_coeff() const { return leading_term().coeff; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
  }
  /// True iff the polynomial is the constant 1.
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_constant() &&
           ring_->field.is_one(terms_[0].coeff);
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.e[var]);
    return d;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono)) return false;
      if (!ring_->field.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
    }
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono, ring_->field.neg(t.coeff)});
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Accum acc(a.ring_);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        acc.add(ta.mono * tb.mono, a.ring_->field.mul(ta.coeff, tb.coeff));
    return acc.take();
  }

  /// coeff * x^m * this, the single-term product used in division loops.
  Polynomial times_term(const Monomial& m, const Elem& c) const {
    Polynomial r(ring_);
    if (ring_->field.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono * m, ring_->field.mul(t.coeff, c)});
    return r;
  }

  Polynomial scaled(const Elem& c) const {
    return times_term(Monomial(ring_->nvars()), c);
  }

  /// Monic normalization (leading coefficient 1); zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(leading_coeff()));
  }

  Polynomial pow(std::uint64_t n) const {
    Polynomial r = constant(ring_, ring_->field.one());
    Polynomial b = *this;
    while (n) {
      if (n & 1) r = r * b;
      if (n >>= 1) b = b * b;
    }
    return r;
  }

  /// Ring-homomorphism evaluation at a point (one value per variable).
  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != ring_->nvars())
      throw std::invalid_argument("point arity mismatch");
    const F& k = ring_->field;
    Elem acc = k.zero();
    for (const auto& t : terms_) {
      Elem v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        for (std::uint32_t e = 0; e < t.mono.e[i]; ++e) v = k.mul(v, point[i]);
      }
      acc = k.add(acc, v);
    }
    return acc;
  }

  /// Formal partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw std::invalid_argument("variable index out of range");
    Accum acc(ring_);
    for (const auto& t : terms_) {
      if (t.mono.e[var] == 0) continue;
      Monomial m = t.mono;
      Elem c = ring_->field.mul(
          t.coeff, ring_->field.from_int(static_cast<long long>(m.e[var])));
      m.e[var] -= 1;
      acc.add(std::move(m), std::move(c));
    }
    return acc.take();
  }

  /// Image under variable substitution: `images[i]` replaces variable i.
  /// All images must live in one ring, which becomes the result's ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
      throw std::invalid_argument("substitute: one image per variable required");
    const RingPtr<F>& target = images.empty() ? ring_ : images.front().ring();
    Polynomial out = zero(target);
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i)
        if (t.mono.e[i]) prod = prod * images[i].pow(t.mono.e[i]);
      out = out + prod;
    }
    return out;
  }

  /// Transport into another ring: variable i here becomes variable
  /// `var_map[i]` there. Unmapped target variables get exponent zero.
  Polynomial map_to(const RingPtr<F>& target,
                    const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->nvars())
      throw std::invalid_argument("map_to: var_map arity mismatch");
    Accum acc(target);
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < var_map.size(); ++i) {
        if (t.mono.e[i]) m.e.at(var_map[i]) += t.mono.e[i];
      }
      acc.add(std::move(m), t.coeff);
    }
    return acc.take();
  }

  /// Canonical display form; parsing it back reproduces the polynomial.
  std::string str() const {
    if (terms_.empty()) return "0";
    const F& k = ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = k.str(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (first) {
        if (negative) os << '-', c = c.substr(1);
      } else {
        os << (negative ? " - " : " + ");
        if (negative) c = c.substr(1);
      }
      first = false;
      bool unit_coeff = (c == "1");
      if (t.mono.is_constant()) {
        os << c;
      } else {
        bool printed = false;
        if (!unit_coeff) {
          os << c;
          printed = true;
        }
        for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
          if (!t.mono.e[i]) continue;
          if (printed) os << '*';
          os << ring_->vars[i];
          if (t.mono.e[i] > 1) os << '^' << t.mono.e[i];
          printed = true;
        }
      }
    }
    return os.str();
  }

 private:
  // Ordered accumulator used by every term-producing operation.
  struct Accum {
    struct Cmp {
      MonomialOrder order;
      bool operator()(const Monomial& a, const Monomial& b) const {
        return order.compare(a, b) > 0;  // descending
      }
    };
    RingPtr<F> ring;
    std::map<Monomial, Elem, Cmp> m;

    explicit Accum(RingPtr<F> r) : ring(std::move(r)), m(Cmp{ring->order}) {}

    void add(Monomial mono, Elem c) {
      if (ring->field.is_zero(c)) return;
      auto it = m.find(mono);
      if (it == m.end()) {
        m.emplace(std::move(mono), std::move(c));
      } else {
        it->second = ring->field.add(it->second, c);
        if (ring->field.is_zero(it->second)) m.erase(it);
      }
    }

    Polynomial take() {
      Polynomial p(ring);
      p.terms_.reserve(m.size());
      for (auto& [mono, c] : m) p.terms_.push_back({mono, std::move(c)});
      return p;
    }
  };

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatchError();
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    const F& k = a.ring_->field;
    const MonomialOrder& ord = a.ring_->order;
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        Elem s = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                          : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Per-variable degree vectors of a common length r (r=1 ordinary
/// weights, r=2 bigradings, ...).
struct Grading {
  std::vector<std::vector<std::int64_t>> degrees;  // one vector per variable

  std::size_t rank() const { return degrees.empty() ? 0 : degrees.front().size(); }

  void validate(std::size_t nvars) const {
    if (degrees.size() != nvars)
      throw std::invalid_argument("grading: one degree vector per variable required");
    for (const auto& d : degrees)
      if (d.size() != rank())
        throw std::invalid_argument("grading: degree vectors must share one length");
  }
};

/// Common weighted degree of all terms, or nullopt when the polynomial is
/// inhomogeneous for the grading. Undefined (throws) on zero.
template <CoefficientField F>
std::optional<std::vector<std::int64_t>> weighted_degree(
    const Polynomial<F>& f, const Grading& g) {
  if (f.is_zero())
    throw std::domain_error("weighted degree of the zero polynomial is undefined");
  g.validate(f.ring()->nvars());
  std::optional<std::vector<std::int64_t>> result;
  for (const auto& t : f.terms()) {
    std::vector<std::int64_t> d(g.rank(), 0);
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      for (std::size_t r = 0; r < g.rank(); ++r)
        d[r] += static_cast<std::int64_t>(t.mono.e[i]) * g.degrees[i][r];
    }
    if (!result) {
      result = std::move(d);
    } else if (*result != d) {
      return std::nullopt;
    }
  }
  return result;
}

}  // namespace forca

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace forca {

/// Exact rational coefficients (characteristic zero). All arithmetic is
/// arbitrary precision; nothing is ever rounded.
class Rationals {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  /// num/den as a field element; den must be invertible.
  Elem ratio(long long num, long long den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    return Elem(num) / Elem(den);
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.str(); }
  /// True when `a` has a nontrivial denominator (needs a/b syntax).
  bool is_integral(const Elem& a) const {
    return boost::multiprecision::denominator(a) == 1;
  }

  bool operator==(const Rationals&) const { return true; }
};

/// The prime field F_p for a word-sized prime p. Elements are canonical
/// residues in [0, p). Inverses come from a precomputed table for small p
/// and from Fermat's little theorem otherwise.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (p <= kTableLimit) {
      inverses_.resize(p, 0);
      for (std::uint32_t a = 1; a < p; ++a) inverses_[a] = pow_mod(a, p - 2);
    }
  }

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? Elem(s - p_) : Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (!inverses_.empty()) return inverses_[a];
    return pow_mod(a, p_ - 2);
  }
  Elem ratio(long long num, long long den) const {
    Elem d = from_int(den);
    if (d == 0)
      throw std::domain_error("coefficient not in field: denominator " +
                              std::to_string(den) + " vanishes mod " +
                              std::to_string(p_));
    return mul(from_int(num), inv(d));
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  bool equal(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }
  bool is_integral(Elem) const { return true; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n >= (1u << 31)) return false;  // word-sized by contract
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  static constexpr std::uint32_t kTableLimit = 1u << 14;

  Elem pow_mod(Elem a, std::uint32_t e) const {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return Elem(r);
  }

  std::uint32_t p_;
  std::vector<Elem> inverses_;
};

template <typename F>
concept CoefficientField = requires(const F f, typename F::Elem a) {
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.str(a) } -> std::same_as<std::string>;
};

}  // namespace forca

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace forca {

/// Exponent vector of fixed length (the ambient variable count).
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t(0));
  }
  bool is_constant() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  /// m / *this, assuming divisibility.
  Monomial quotient_of(const Monomial& m) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i)
      r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  bool coprime_with(const Monomial& b) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && b.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Monomial order: degrevlex (default), lex, or a two-block elimination
/// order whose first block is the leading `block` variables (degrevlex
/// within each block).
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination_block(std::size_t k) {
    return {Kind::block, k};
  }

  /// <0, 0, >0 as in a three-way compare; positive means a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::lex:
        for (std::size_t i = 0; i < a.e.size(); ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case Kind::degrevlex:
        return degrevlex_range(a, b, 0, a.e.size());
      case Kind::block: {
        std::size_t k = std::min(block, a.e.size());
        if (int c = degrevlex_range(a, b, 0, k)) return c;
        return degrevlex_range(a, b, k, a.e.size());
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block || block == o.block);
  }

  std::string str() const {
    switch (kind) {
      case Kind::degrevlex: return "degrevlex";
      case Kind::lex: return "lex";
      case Kind::block: return "block:" + std::to_string(block);
    }
    return "";
  }

 private:
  static int degrevlex_range(const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace forca

#pragma once

#include <cstddef>
#include <vector>

#include "forca/field.hpp"

namespace forca {

/// Dense matrix over a coefficient field, row major.
template <CoefficientField F>
struct FieldMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c, typename F::Elem fill)
      : rows(r), cols(c), a(r * c, fill) {}

  typename F::Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const typename F::Elem& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

/// Solution set of A t = b over a field: empty, or particular + kernel basis.
template <CoefficientField F>
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<typename F::Elem> particular;            // length = cols
  std::vector<std::vector<typename F::Elem>> kernel;   // basis of ker A
};

/// Gauss--Jordan over an exact field; deterministic (first nonzero pivot).
template <CoefficientField F>
LinearSolution<F> solve_linear(const F& k, FieldMatrix<F> m,
                               std::vector<typename F::Elem> b) {
  if (b.size() != m.rows) throw std::invalid_argument("rhs length mismatch");
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && k.is_zero(m.at(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      std::swap(b[p], b[r]);
    }
    typename F::Elem iv = k.inv(m.at(r, c));
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = k.mul(m.at(r, j), iv);
    b[r] = k.mul(b[r], iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      typename F::Elem f = m.at(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
      b[i] = k.sub(b[i], k.mul(f, b[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution<F> sol;
  sol.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!k.is_zero(b[i])) return sol;  // inconsistent
  sol.consistent = true;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  sol.particular.assign(cols, k.zero());
  for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_col[i]] = b[i];

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::Elem> v(cols, k.zero());
    v[c] = k.one();
    for (std::size_t i = 0; i < r; ++i)
      v[pivot_col[i]] = k.neg(m.at(i, c));
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

template <CoefficientField F>
std::size_t matrix_rank(const F& k, FieldMatrix<F> m) {
  std::vector<typename F::Elem> zero_rhs(m.rows, k.zero());
  return solve_linear(k, std::move(m), std::move(zero_rhs)).rank;
}

}  // namespace forca

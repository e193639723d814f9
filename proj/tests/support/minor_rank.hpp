#pragma once

#include <vector>

#include "forca/forca.hpp"

// Rank by brute-force minor enumeration: the largest k admitting a
// nonsingular k x k submatrix. Independent of the elimination code path.
namespace oracle {

template <forca::CoefficientField F>
typename F::Elem dense_det(const F& k,
                           std::vector<std::vector<typename F::Elem>> a) {
  const std::size_t n = a.size();
  typename F::Elem det = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && k.is_zero(a[p][c])) ++p;
    if (p == n) return k.zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = k.neg(det);
    }
    det = k.mul(det, a[c][c]);
    typename F::Elem iv = k.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      typename F::Elem f = k.mul(a[i][c], iv);
      for (std::size_t j = c; j < n; ++j)
        a[i][j] = k.sub(a[i][j], k.mul(f, a[c][j]));
    }
  }
  return det;
}

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t limit) {
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

template <forca::CoefficientField F>
std::size_t minor_rank(const F& k, const forca::FieldMatrix<F>& m) {
  for (std::size_t size = std::min(m.rows, m.cols); size >= 1; --size) {
    std::vector<std::size_t> rs(size), cs(size);
    for (std::size_t i = 0; i < size; ++i) rs[i] = i;
    do {
      for (std::size_t i = 0; i < size; ++i) cs[i] = i;
      do {
        std::vector<std::vector<typename F::Elem>> sub;
        for (auto r : rs) {
          std::vector<typename F::Elem> row;
          for (auto c : cs) row.push_back(m.at(r, c));
          sub.push_back(std::move(row));
        }
        if (!k.is_zero(dense_det(k, std::move(sub)))) return size;
      } while (next_subset(cs, m.cols));
    } while (next_subset(rs, m.rows));
  }
  return 0;
}

}  // namespace oracle

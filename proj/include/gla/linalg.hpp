#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gla/rational.hpp"

namespace gla {

// Dense exact-rational vectors and matrices. Everything here is tiny
// (rank <= 8 Gram matrices, sl_n models with n <= 8), so plain
// Gauss-Jordan and LDL^T are all that is ever needed.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Mat zero_mat(std::size_t r, std::size_t c) { return Mat(r, Vec(c)); }

inline Mat identity(std::size_t n) {
  Mat m = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

inline bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Vec& v, const Rat& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r = zero_mat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

inline Mat mat_scale(const Mat& a, const Rat& c) {
  Mat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat r = zero_mat(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline Rat trace(const Mat& a) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

// [A, B] = AB - BA.
inline Mat bracket(const Mat& a, const Mat& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

inline bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    if (!is_zero(row)) return false;
  return true;
}

// Exact Gauss-Jordan inverse. Throws on a singular input.
inline Mat inverse(const Mat& m) {
  std::size_t n = m.size();
  Mat a = m;
  Mat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Symmetric positive definiteness via pivots of unpivoted elimination:
// a symmetric matrix is PD iff all pivots stay positive.
inline bool positive_definite(const Mat& m) {
  std::size_t n = m.size();
  Mat a = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(a[k][k] > Rat(0))) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

// True iff a and b are nonzero and span the same line.
inline bool parallel(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("parallel: size mismatch");
  if (is_zero(a) || is_zero(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace gla

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gla/linalg.hpp"

namespace gla {

// Explicit sl_n(R) with the Killing form B(X,Y) = 2n tr(XY), the Cartan
// involution sigma(X) = -X^T and the block gradation deg(E_ij) =
// block(j) - block(i) (strictly upper block-triangular = positive).
// Ground truth for the symbolic engine on split A-type.
struct MatrixModel {
  int n = 0;
  std::vector<int> blocks;     // sizes, p >= 2
  std::vector<int> block_of;   // 0-based block index per matrix index

  struct Unit {
    int i, j;        // E_ij, i != j
    long long degree;
  };
  std::vector<Unit> units;

  long long position_degree(int i, int j) const {
    return static_cast<long long>(block_of[j]) - block_of[i];
  }

  Mat unit_matrix(int i, int j) const {
    Mat m = zero_mat(n, n);
    m[i][j] = Rat(1);
    return m;
  }

  // D_k = E_kk - E_{k+1,k+1}; with the units these span sl_n.
  Mat diag_matrix(int k) const {
    Mat m = zero_mat(n, n);
    m[k][k] = Rat(1);
    m[k + 1][k + 1] = Rat(-1);
    return m;
  }

  Mat sigma(const Mat& x) const { return mat_scale(transpose(x), Rat(-1)); }

  Rat killing(const Mat& x, const Mat& y) const {
    return Rat(2 * n) * trace(mat_mul(x, y));
  }

  Rat bsigma(const Mat& x, const Mat& y) const {
    return Rat(-1) * killing(x, sigma(y));
  }

  // Projection onto n = span of the positive-degree positions.
  Mat project_n(const Mat& x) const {
    Mat m = zero_mat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (position_degree(i, j) > 0) m[i][j] = x[i][j];
    return m;
  }

  // The diagonal characteristic element: [Z, E_ij] = deg(E_ij) E_ij.
  Mat characteristic_matrix() const {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += block_of[i];
    Rat c(s, n);
    Mat z = zero_mat(n, n);
    for (int i = 0; i < n; ++i) z[i][i] = c - Rat(block_of[i]);
    return z;
  }
};

inline MatrixModel build_model(std::vector<int> blocks) {
  if (blocks.size() < 2)
    throw std::invalid_argument("block gradation needs at least 2 blocks");
  for (int b : blocks)
    if (b < 1) throw std::invalid_argument("block sizes must be positive");

  MatrixModel m;
  m.blocks = std::move(blocks);
  for (std::size_t b = 0; b < m.blocks.size(); ++b)
    for (int t = 0; t < m.blocks[b]; ++t) m.block_of.push_back(static_cast<int>(b));
  m.n = static_cast<int>(m.block_of.size());

  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) m.units.push_back({i, j, m.position_degree(i, j)});

  // B_sigma must be positive definite on the basis (diagonal 2n on the
  // units; a small tridiagonal block on the D_k part).
  std::vector<Mat> basis;
  for (const auto& u : m.units) basis.push_back(m.unit_matrix(u.i, u.j));
  for (int k = 0; k + 1 < m.n; ++k) basis.push_back(m.diag_matrix(k));
  Mat gramm = zero_mat(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      gramm[a][b] = gramm[b][a] = m.bsigma(basis[a], basis[b]);
  if (!positive_definite(gramm))
    throw std::logic_error("B_sigma is not positive definite on the model basis");

  // Degree additivity of the bracket across the whole basis.
  std::vector<long long> degree;
  for (const auto& u : m.units) degree.push_back(u.degree);
  for (int k = 0; k + 1 < m.n; ++k) degree.push_back(0);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Mat br = bracket(basis[a], basis[b]);
      long long d = degree[a] + degree[b];
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
          if (!br[i][j].is_zero() && (i == j ? 0 : m.position_degree(i, j)) != d)
            throw std::logic_error("bracket is not degree-additive");
    }
  return m;
}

// Ric^n from the curvature formula for nilmanifolds, evaluated over the
// orthogonal basis {E_ij : deg > 0} with the 1/|E|^2 weights written out so
// everything stays rational; duals via (ad_U)* V = [V, sigma U]_n.
// Returns the diagonal scalars and insists the operator is diagonal.
inline std::map<std::pair<int, int>, Rat> brute_ricci(const MatrixModel& m) {
  std::vector<MatrixModel::Unit> nbasis;
  for (const auto& u : m.units)
    if (u.degree > 0) nbasis.push_back(u);

  const Rat w(1, 2 * m.n);  // 1/|E_ij|^2
  std::map<std::pair<int, int>, Rat> out;
  for (const auto& u : nbasis) {
    Mat U = m.unit_matrix(u.i, u.j);
    Mat ric = zero_mat(m.n, m.n);
    for (const auto& f : nbasis) {
      Mat F = m.unit_matrix(f.i, f.j);
      Mat sF = m.sigma(F);
      Mat t1 = bracket(F, m.project_n(bracket(U, sF)));
      Mat t2 = m.project_n(bracket(bracket(F, U), sF));
      ric = mat_add(ric, mat_scale(t1, Rat(1, 4) * w));
      ric = mat_sub(ric, mat_scale(t2, Rat(1, 2) * w));
    }
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        if (ric[i][j].is_zero()) continue;
        if (i == u.i && j == u.j) continue;
        throw std::logic_error("Ric^n is not diagonal on the root spaces");
      }
    out[{u.i, u.j}] = ric[u.i][u.j];
  }
  return out;
}

struct BruteMeanCurvature {
  std::map<long long, Mat> zk;  // k -> Z_k as a diagonal matrix
  Mat h0;
  Mat characteristic;
};

// Z_k = sum [sigma(E), E] over a basis of g_k with 1/|E|^2 weights; checks
// B_sigma(Z_k, Z) = k dim g_k and 2 sum k Z_k = Z against the block data.
inline BruteMeanCurvature brute_mean_curvature(const MatrixModel& m) {
  BruteMeanCurvature out;
  out.characteristic = m.characteristic_matrix();
  out.h0 = zero_mat(m.n, m.n);
  const Rat w(1, 2 * m.n);
  std::map<long long, long long> dim;
  for (const auto& u : m.units) {
    if (u.degree <= 0) continue;
    Mat e = m.unit_matrix(u.i, u.j);
    Mat z = mat_scale(bracket(m.sigma(e), e), w);
    auto it = out.zk.find(u.degree);
    if (it == out.zk.end())
      out.zk[u.degree] = z;
    else
      it->second = mat_add(it->second, z);
    ++dim[u.degree];
  }
  Mat acc = zero_mat(m.n, m.n);
  for (const auto& [k, z] : out.zk) {
    if (m.bsigma(z, out.characteristic) != Rat(k) * Rat(dim[k]))
      throw std::logic_error("B_sigma(Z_k, Z) != k dim g_k in the matrix model");
    out.h0 = mat_add(out.h0, z);
    acc = mat_add(acc, mat_scale(z, Rat(2 * k)));
  }
  if (acc != out.characteristic)
    throw std::logic_error("2 sum k Z_k != Z in the matrix model");
  return out;
}

// Dictionary between the block model on sl_n and the split A_{n-1} root
// data: node k (0-based) is e_k - e_{k+1}, a boundary after position k
// contributes H^k to the characteristic element.
inline std::vector<long long> block_characteristic(const MatrixModel& m) {
  std::vector<long long> c(m.n - 1, 0);
  for (int k = 0; k + 1 < m.n; ++k)
    if (m.block_of[k + 1] > m.block_of[k]) c[k] = 1;
  return c;
}

inline std::vector<int> unit_root(const MatrixModel& m, int i, int j) {
  if (!(0 <= i && i < j && j < m.n))
    throw std::invalid_argument("unit_root expects i < j");
  std::vector<int> r(m.n - 1, 0);
  for (int k = i; k < j; ++k) r[k] = 1;
  return r;
}

// H_{alpha_k} as a matrix: (1/2n)(E_kk - E_{k+1,k+1}).
inline Mat root_vector_matrix(const MatrixModel& m, int k) {
  return mat_scale(m.diag_matrix(k), Rat(1, 2 * m.n));
}

}  // namespace gla

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gla/root_system.hpp"

namespace gla {

// Restricted root multiplicities, stored per squared-length class. Roots of
// equal length form a single Weyl orbit in an irreducible system, so this
// representation is Weyl-invariant by construction.
struct MultiplicityProfile {
  std::map<Rat, long long> by_class;  // squared length (base form) -> dim g_alpha

  long long at(const Rat& norm) const {
    auto it = by_class.find(norm);
    if (it == by_class.end())
      throw std::invalid_argument("multiplicity profile has no class of norm " +
                                  norm.str());
    return it->second;
  }
};

// Distinct squared lengths of the positive roots, ascending.
inline std::vector<Rat> length_classes(const RootSystem& rs) {
  std::map<Rat, int> seen;
  for (const auto& b : rs.positive) seen[rs.norm0(b)] = 1;
  std::vector<Rat> out;
  for (const auto& [k, v] : seen) out.push_back(k);
  return out;
}

inline MultiplicityProfile uniform_profile(const RootSystem& rs, long long m) {
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  MultiplicityProfile p;
  for (const Rat& c : length_classes(rs)) p.by_class[c] = m;
  return p;
}

// A root system together with multiplicities and the inner product induced
// by the Killing form. gram holds <alpha_i, alpha_j>_B; dual_basis column j
// expresses H^j in the root-vector basis {H_{alpha_i}}, so alpha_i(H^j) is
// delta_ij exactly. Cartan-space vectors are coefficient vectors over
// {H_{alpha_i}} throughout.
struct RestrictedRootData {
  RootSystem rs;
  MultiplicityProfile profile;
  Mat gram;
  Mat dual_basis;
  std::string name;

  long long mult(const RootCoeffs& b) const { return profile.at(rs.norm0(b)); }
  long long mult(int positive_index) const {
    return mult(rs.positive[positive_index]);
  }

  // beta(H) for beta a rational covector in the simple-root basis and H a
  // Cartan vector in the root-vector basis: a single Gram contraction.
  Rat pairing(const Vec& beta, const Vec& h) const {
    return dot(beta, mat_vec(gram, h));
  }
  Rat pairing(const RootCoeffs& beta, const Vec& h) const {
    Rat s;
    for (int i = 0; i < rs.rank; ++i) {
      if (beta[i] == 0) continue;
      s += Rat(beta[i]) * dot(gram[i], h);
    }
    return s;
  }

  // B_sigma on Cartan vectors.
  Rat bsigma(const Vec& a, const Vec& b) const { return dot(a, mat_vec(gram, b)); }

  // H_beta in the {H_{alpha_i}} basis is just the coefficient vector.
  Vec root_vector(const RootCoeffs& beta) const {
    Vec v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = Rat(beta[i]);
    return v;
  }

  Vec dual_vector(int j) const {  // H^j, 0-based node
    Vec v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = dual_basis[i][j];
    return v;
  }

  // Z = sum c_j H^j as a Cartan vector.
  Vec characteristic_vector(const std::vector<long long>& c) const {
    Vec v(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      if (c[j] == 0) continue;
      for (int i = 0; i < rs.rank; ++i) v[i] += Rat(c[j]) * dual_basis[i][j];
    }
    return v;
  }
};

using RootDataPtr = std::shared_ptr<const RestrictedRootData>;

// Scales the base form, one irreducible component at a time, so that the
// resulting form is the one induced by the Killing form of the real form
// with the given multiplicities: <a,b>_B = sum_{g in Delta} mult(g)
// <g,a>_B <g,b>_B. The scale solves t = <a,a>_0 / sum mult(g) <g,a>_0^2.
inline RestrictedRootData killing_normalize(RootSystem rs,
                                            MultiplicityProfile profile,
                                            std::string name = {}) {
  const int r = rs.rank;
  for (const Rat& c : length_classes(rs))
    if (profile.at(c) <= 0)
      throw std::invalid_argument("multiplicity must be positive");

  // Connected components of the diagram.
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> work{i};
    comp[i] = ncomp;
    while (!work.empty()) {
      int u = work.front();
      work.pop_front();
      for (int v = 0; v < r; ++v)
        if (comp[v] < 0 && !rs.base_form[u][v].is_zero()) {
          comp[v] = ncomp;
          work.push_back(v);
        }
    }
    ++ncomp;
  }

  std::vector<Rat> scale(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    int i0 = 0;
    while (comp[i0] != c) ++i0;
    RootCoeffs a(r, 0);
    a[i0] = 1;
    Rat denom;  // over the full Delta = 2x over the positives
    for (const auto& b : rs.positive) {
      Rat ip = rs.inner0(b, a);
      denom += Rat(2) * Rat(profile.at(rs.norm0(b))) * ip * ip;
    }
    scale[c] = rs.base_form[i0][i0] / denom;
  }

  RestrictedRootData data;
  data.gram = zero_mat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (comp[i] == comp[j]) data.gram[i][j] = scale[comp[i]] * rs.base_form[i][j];

  // The Killing consistency identity must now hold exactly for all i, j;
  // it certifies the normalization (and the per-component proportionality).
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat sum;
      for (const auto& b : rs.positive) {
        Rat pi, pj;
        for (int k = 0; k < r; ++k) {
          if (b[k] == 0) continue;
          pi += Rat(b[k]) * data.gram[k][i];
          pj += Rat(b[k]) * data.gram[k][j];
        }
        sum += Rat(2) * Rat(profile.at(rs.norm0(b))) * pi * pj;
      }
      if (sum != data.gram[i][j])
        throw std::logic_error("Killing consistency identity failed");
    }

  if (!positive_definite(data.gram))
    throw std::logic_error("Killing-normalized form is not positive definite");

  data.dual_basis = inverse(data.gram);
  data.rs = std::move(rs);
  data.profile = std::move(profile);
  data.name = std::move(name);
  return data;
}

// Simple reflection s_j applied to a root, standard denominator
// <alpha_j, alpha_j>. Accepts any root of the system (either sign).
inline RootCoeffs reflect(const RestrictedRootData& data, int j,
                          const RootCoeffs& beta) {
  const RootSystem& rs = data.rs;
  if (j < 0 || j >= rs.rank) throw std::invalid_argument("reflect: bad node index");
  if (!rs.contains(beta)) throw std::invalid_argument("reflect: not a root");
  RootCoeffs aj(rs.rank, 0);
  aj[j] = 1;
  Rat cart = Rat(2) * rs.inner0(beta, aj) / rs.base_form[j][j];
  if (!cart.is_integer()) throw std::logic_error("non-integral Cartan pairing");
  RootCoeffs r = beta;
  r[j] -= static_cast<int>(cart.num());
  return r;
}

}  // namespace gla

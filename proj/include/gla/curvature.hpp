#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gla/gradation.hpp"

namespace gla {

// The k-th mean curvature vectors Z_k = sum_{alpha in Delta_k} mult(alpha)
// H_alpha, and their sum H_0. Cartan vectors over {H_{alpha_i}}.
struct MeanCurvatureData {
  std::map<long long, Vec> zk;
  Vec h0;
};

// Computes Z_1..Z_nu and H_0 for a type-alpha0 gradation and certifies the
// normalization: B_sigma(Z_k, Z) = k dim g_k, 2 sum k Z_k = Z, support
// confinement and positivity of the H_0 coefficients. A failure here means
// the inner product is wrong, so it throws rather than returning.
inline MeanCurvatureData mean_curvature(const Gradation& g) {
  if (!g.alpha0)
    throw std::invalid_argument("mean_curvature requires a type-alpha0 gradation");
  const RestrictedRootData& data = *g.data;
  const int r = data.rs.rank;

  MeanCurvatureData mc;
  mc.h0 = zero_vec(r);
  for (long long k = 1; k <= g.kind; ++k) {
    Vec zk = zero_vec(r);
    for (int idx : g.layers[k]) {
      const RootCoeffs& b = data.rs.positive[idx];
      Rat m = Rat(data.mult(idx));
      for (int i = 0; i < r; ++i) zk[i] += m * Rat(b[i]);
    }
    mc.h0 = add(mc.h0, zk);
    mc.zk[k] = std::move(zk);
  }

  // B_sigma(Z_k, Z) = sum_i zk_i alpha_i(Z) = sum_i zk_i c_i.
  for (long long k = 1; k <= g.kind; ++k) {
    Rat s;
    for (int i = 0; i < r; ++i) s += mc.zk[k][i] * Rat(g.z[i]);
    if (s != Rat(k) * Rat(g.dims[k]))
      throw std::logic_error("mean curvature: B_sigma(Z_k, Z) != k dim g_k");
  }

  // 2 sum k Z_k = Z.
  Vec zvec = data.characteristic_vector(g.z);
  Vec acc = zero_vec(r);
  for (const auto& [k, zk] : mc.zk) acc = add(acc, scale(zk, Rat(2 * k)));
  if (acc != zvec)
    throw std::logic_error("mean curvature: 2 sum k Z_k != Z");

  // Z_k lies in span{H^i : c_i > 0}; H_0 coefficients are positive there.
  for (const auto& [k, zk] : mc.zk) {
    Vec pair = mat_vec(data.gram, zk);  // alpha_i(Z_k)
    for (int i = 0; i < r; ++i)
      if (g.z[i] == 0 && !pair[i].is_zero())
        throw std::logic_error("mean curvature: Z_k leaves the support span");
  }
  Vec h0pair = mat_vec(data.gram, mc.h0);
  for (int i = 0; i < r; ++i) {
    if (g.z[i] == 0 && !h0pair[i].is_zero())
      throw std::logic_error("mean curvature: H_0 leaves the support span");
    if (g.z[i] > 0 && !(h0pair[i] > Rat(0)))
      throw std::logic_error("mean curvature: H_0 coefficient not positive");
  }
  return mc;
}

// a_m(alpha): the scalar by which A_m acts on the root space of alpha,
// solving A_m = B_m - ad Z_m with B_m = A_{m+l} on g_l and B_m = 0 past the
// kind:  a_m(alpha) = -(alpha(Z_m) + alpha(Z_{m+l}) + alpha(Z_{m+2l}) + ...).
inline Rat a_scalar(const Gradation& g, const MeanCurvatureData& mc, int root_index,
                    long long m) {
  long long l = g.level_of[root_index];
  if (l < 1) throw std::invalid_argument("a_scalar: root has level < 1");
  if (m < 1 || m > g.kind) throw std::invalid_argument("a_scalar: layer index out of range");
  const RootCoeffs& b = g.data->rs.positive[root_index];
  Rat s;
  for (long long t = m; t <= g.kind; t += l) s += g.data->pairing(b, mc.zk.at(t));
  return -s;
}

inline Rat a_scalar(const Gradation& g, int root_index, long long m) {
  return a_scalar(g, mean_curvature(g), root_index, m);
}

// Ric^n on the root space of alpha at level l:
// -(1/4) sum_{m<l} a_m + (1/2) sum_{m>l} a_m.
inline Rat nil_ricci(const Gradation& g, const MeanCurvatureData& mc, int root_index) {
  long long l = g.level_of[root_index];
  if (l < 1) throw std::invalid_argument("nil_ricci: root has level < 1");
  Rat s;
  for (long long m = 1; m < l; ++m)
    s += Rat(-1, 4) * a_scalar(g, mc, root_index, m);
  for (long long m = l + 1; m <= g.kind; ++m)
    s += Rat(1, 2) * a_scalar(g, mc, root_index, m);
  return s;
}

inline Rat nil_ricci(const Gradation& g, int root_index) {
  return nil_ricci(g, mean_curvature(g), root_index);
}

namespace detail {

// tr(ad_H on n) = sum over positive levels of mult(alpha) alpha(H).
inline Rat trace_ad_n(const Gradation& g, const Vec& h) {
  Rat s;
  for (std::size_t idx = 0; idx < g.level_of.size(); ++idx)
    if (g.level_of[idx] > 0)
      s += Rat(g.data->mult(static_cast<int>(idx))) *
           g.data->pairing(g.data->rs.positive[idx], h);
  return s;
}

// Rescales H to the mean-curvature normalization B_sigma(H,H) = tr(ad_H|n).
inline Vec normalize_extension_vector(const Gradation& g, const Vec& h) {
  if (is_zero(h)) throw std::invalid_argument("extension vector must be nonzero");
  Rat tr = trace_ad_n(g, h);
  if (!(tr > Rat(0)))
    throw std::invalid_argument("extension vector has nonpositive trace on n");
  Rat b = g.data->bsigma(h, h);
  return scale(h, tr / b);
}

}  // namespace detail

// Ric of the extension (R H + n, <,>^c) on the root space of alpha:
// Ric^c(U) = Ric^n(U) - (1/c) alpha(H) U, after H is rescaled to the
// mean-curvature normalization the formula presumes.
inline Rat solv_ricci(const Gradation& g, const MeanCurvatureData& mc, int root_index,
                      const Vec& h, const Rat& c) {
  if (!(c > Rat(0))) throw std::invalid_argument("solv_ricci: c must be positive");
  Vec hn = detail::normalize_extension_vector(g, h);
  const RootCoeffs& b = g.data->rs.positive[root_index];
  return nil_ricci(g, mc, root_index) - g.data->pairing(b, hn) / c;
}

inline Rat solv_ricci(const Gradation& g, int root_index, const Vec& h, const Rat& c) {
  return solv_ricci(g, mean_curvature(g), root_index, h, c);
}

// Ricci eigenvalue on the H direction:
// -tr(ad_H|n)^2 / (c tr(ad_H on g)^2), scale invariant in H. Equals
// -1/(2c) exactly when H annihilates every level-0 root.
inline Rat solv_ricci_h(const Gradation& g, const Vec& h, const Rat& c) {
  if (is_zero(h)) throw std::invalid_argument("solv_ricci_h: H must be nonzero");
  if (!(c > Rat(0))) throw std::invalid_argument("solv_ricci_h: c must be positive");
  Rat num, den;
  for (std::size_t idx = 0; idx < g.level_of.size(); ++idx) {
    Rat a = g.data->pairing(g.data->rs.positive[idx], h);
    Rat t = Rat(g.data->mult(static_cast<int>(idx))) * a * a;
    den += Rat(2) * t;  // full Delta counts both signs
    if (g.level_of[idx] > 0) num += t;
  }
  return -num / (c * den);
}

// Eigenvalue type: the spectrum of the normalized ad_{H_0} on n as coprime
// positive integers with multiplicities.
struct EigenvalueType {
  std::vector<std::pair<long long, long long>> classes;  // (mu_i, d_i), mu ascending
};

inline EigenvalueType eigenvalue_type(const Gradation& g_in) {
  Gradation g = g_in.alpha0 ? g_in : alpha0_reduction(g_in);
  MeanCurvatureData mc = mean_curvature(g);
  std::map<Rat, long long> classes;  // alpha(H_0) -> total multiplicity
  for (std::size_t idx = 0; idx < g.level_of.size(); ++idx) {
    if (g.level_of[idx] == 0) continue;
    Rat v = g.data->pairing(g.data->rs.positive[idx], mc.h0);
    if (!(v > Rat(0)))
      throw std::logic_error("eigenvalue type: nonpositive ad_{H_0} eigenvalue");
    classes[v] += g.data->mult(static_cast<int>(idx));
  }
  long long l = 1;
  for (const auto& [v, d] : classes) l = lcm_ll(l, v.den());
  long long gc = 0;
  for (const auto& [v, d] : classes) gc = gcd_ll(gc, v.num() * (l / v.den()));
  EigenvalueType t;
  for (const auto& [v, d] : classes)
    t.classes.emplace_back(v.num() * (l / v.den()) / gc, d);
  return t;
}

// (max eigenvalue) + 1 for the normalized spectrum.
inline long long carnot_step(const Gradation& g) {
  EigenvalueType t = eigenvalue_type(g);
  return t.classes.back().first + 1;
}

// Dimension criteria for kinds up to four, valid when every Z_k is parallel
// to Z (always the case for a single-node characteristic element). kind 1
// and 2 extensions are Einstein unconditionally.
struct KindShortcut {
  bool applicable = false;          // every Z_k parallel to Z
  long long kind = 0;               // of the reduced gradation
  std::optional<bool> einstein;     // set when applicable and kind <= 4
};

inline KindShortcut kind_shortcut_predicates(const Gradation& g_in) {
  Gradation g = g_in.alpha0 ? g_in : alpha0_reduction(g_in);
  MeanCurvatureData mc = mean_curvature(g);
  Vec zvec = g.data->characteristic_vector(g.z);

  KindShortcut out;
  out.kind = g.kind;
  out.applicable = true;
  for (const auto& [k, zk] : mc.zk)
    if (!parallel(zk, zvec)) out.applicable = false;
  if (!out.applicable) return out;

  const auto& d = g.dims;
  switch (g.kind) {
    case 1:
    case 2:
      out.einstein = true;
      break;
    case 3:
      out.einstein = (d[1] == 2 * d[2]);
      break;
    case 4:
      out.einstein = (d[1] == 3 * d[3]) && (d[1] + 4 * d[4] == 2 * d[2]);
      break;
    default:
      break;  // no dimension criterion past kind 4
  }
  return out;
}

// Mean curvature vector of the full Iwasawa solvmanifold (longest
// gradation): H_0 = sum h_i H^i with
// h_i = (dim g_{alpha_i} + 4 dim g_{2 alpha_i}) <alpha_i, alpha_i>_B.
struct SymmetricMeanCurvature {
  std::vector<Rat> coeffs;  // h_i over the dual basis
  Vec vec;                  // the same vector over {H_{alpha_i}}
};

inline SymmetricMeanCurvature symmetric_mean_curvature(const RestrictedRootData& data) {
  const int r = data.rs.rank;
  SymmetricMeanCurvature out;
  out.coeffs.resize(r);
  for (int i = 0; i < r; ++i) {
    RootCoeffs ai(r, 0), ai2(r, 0);
    ai[i] = 1;
    ai2[i] = 2;
    long long m = data.mult(ai);
    long long m2 = data.rs.index_of(ai2) >= 0 ? data.mult(ai2) : 0;
    out.coeffs[i] = Rat(m + 4 * m2) * data.gram[i][i];
  }
  out.vec = zero_vec(r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) out.vec[i] += out.coeffs[j] * data.dual_basis[i][j];
  return out;
}

// Full curvature report for the natural solvable extension
// (R H_0 + n, <,>^2) of the attached nilmanifold.
struct CurvatureReport {
  Gradation reduced;                     // alpha0-canonical gradation
  std::vector<long long> original_z;
  long long original_kind = 0;
  bool original_alpha0 = true;
  MeanCurvatureData mc;
  std::map<int, Rat> nil;                // root index -> Ric^n scalar
  std::map<int, Rat> solv;               // root index -> Ric scalar at (H_0, 2)
  std::map<int, Rat> alpha_h0;           // root index -> alpha(H_0)
  Rat ric_h0;
  bool einstein = false;
  std::optional<Rat> einstein_constant;
  EigenvalueType type;
  long long carnot = 0;
};

inline CurvatureReport einstein_verdict(const Gradation& g_in) {
  CurvatureReport rep;
  rep.original_z = g_in.z;
  rep.original_kind = g_in.kind;
  rep.original_alpha0 = g_in.alpha0;
  rep.reduced = g_in.alpha0 ? g_in : alpha0_reduction(g_in);
  const Gradation& g = rep.reduced;
  rep.mc = mean_curvature(g);

  // H_0 already carries the mean-curvature normalization; anything else
  // signals an inconsistency upstream.
  if (g.data->bsigma(rep.mc.h0, rep.mc.h0) != detail::trace_ad_n(g, rep.mc.h0))
    throw std::logic_error("H_0 is not mean-curvature normalized");

  const Rat target(-1, 4);
  bool all = true;
  for (std::size_t idx = 0; idx < g.level_of.size(); ++idx) {
    long long l = g.level_of[idx];
    if (l == 0) continue;
    int i = static_cast<int>(idx);
    Rat nil = nil_ricci(g, rep.mc, i);
    Rat ah = g.data->pairing(g.data->rs.positive[idx], rep.mc.h0);
    Rat solv = nil - ah / Rat(2);
    rep.nil[i] = nil;
    rep.solv[i] = solv;
    rep.alpha_h0[i] = ah;
    if (solv != target) {
      all = false;
      if (l <= 2)
        throw std::logic_error("Ric != -1/4 on g_1 + g_2 of a natural extension");
    }
  }
  rep.ric_h0 = solv_ricci_h(g, rep.mc.h0, Rat(2));
  if (rep.ric_h0 != target)
    throw std::logic_error("Ric(H_0) != -1/4 for a natural extension");

  rep.einstein = all;
  if (all) rep.einstein_constant = target;
  rep.type = eigenvalue_type(g);
  long long dim_n = 0;
  long long gc = 0;
  for (const auto& [mu, d] : rep.type.classes) {
    dim_n += d;
    gc = gcd_ll(gc, mu);
  }
  long long total = 0;
  for (long long k = 1; k <= g.kind; ++k) total += g.dims[k];
  if (gc != 1 || dim_n != total)
    throw std::logic_error("eigenvalue type fails its invariants");
  rep.carnot = rep.type.classes.back().first + 1;
  return rep;
}

}  // namespace gla

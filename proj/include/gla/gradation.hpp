#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "gla/root_data.hpp"

namespace gla {

// Z = sum c_i H^i, c_i nonnegative integers, not all zero.
struct CharacteristicElement {
  std::vector<long long> coeffs;
};

// A gradation of the restricted root system: layers Delta_k, their
// dimensions with multiplicity, the kind and the alpha_0 flag.
struct Gradation {
  RootDataPtr data;
  std::vector<long long> z;               // characteristic coefficients
  std::vector<long long> level_of;        // per positive-root index
  std::vector<std::vector<int>> layers;   // [k] = indices at level k, k = 0..kind
  std::vector<long long> dims;            // [k] = dim g_k, k = 0..kind
  long long kind = 0;
  bool alpha0 = false;

  std::vector<long long> support() const {  // 0-based nodes with c_i > 0
    std::vector<long long> s;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] > 0) s.push_back(static_cast<long long>(i));
    return s;
  }
};

inline Gradation make_gradation(RootDataPtr data, CharacteristicElement c) {
  if (!data) throw std::invalid_argument("make_gradation: null root data");
  const RootSystem& rs = data->rs;
  if (static_cast<int>(c.coeffs.size()) != rs.rank)
    throw std::invalid_argument("characteristic element has wrong length");
  bool any = false;
  for (long long x : c.coeffs) {
    if (x < 0) throw std::invalid_argument("characteristic coefficients must be nonnegative");
    if (x > 0) any = true;
  }
  if (!any) throw std::invalid_argument("characteristic element must be nonzero");

  Gradation g;
  g.data = std::move(data);
  g.z = std::move(c.coeffs);

  long long kind = 0;
  for (int i = 0; i < rs.rank; ++i) kind += g.z[i] * rs.highest[i];
  g.kind = kind;
  g.layers.assign(static_cast<std::size_t>(kind) + 1, {});
  g.dims.assign(static_cast<std::size_t>(kind) + 1, 0);
  g.level_of.resize(rs.positive.size());

  for (std::size_t idx = 0; idx < rs.positive.size(); ++idx) {
    const RootCoeffs& b = rs.positive[idx];
    long long lvl = 0;
    for (int i = 0; i < rs.rank; ++i) lvl += static_cast<long long>(b[i]) * g.z[i];
    if (lvl < 0 || lvl > kind)
      throw std::logic_error("root level outside [0, kind]");
    g.level_of[idx] = lvl;
    g.layers[lvl].push_back(static_cast<int>(idx));
    g.dims[lvl] += g.data->mult(static_cast<int>(idx));
  }
  if (g.dims[kind] == 0) throw std::logic_error("top layer is empty");

  g.alpha0 = true;
  for (long long x : g.z)
    if (x > 1) g.alpha0 = false;
  if (g.alpha0)
    for (long long k = 1; k <= kind; ++k)
      if (g.dims[k] == 0)
        throw std::logic_error("alpha0 gradation has an empty layer");
  return g;
}

// Clamps every positive coefficient to 1. Same nilpotent part, idempotent.
inline Gradation alpha0_reduction(const Gradation& g) {
  CharacteristicElement c;
  c.coeffs.resize(g.z.size());
  for (std::size_t i = 0; i < g.z.size(); ++i) c.coeffs[i] = g.z[i] > 0 ? 1 : 0;
  return make_gradation(g.data, std::move(c));
}

struct EnumerateOptions {
  long long max_kind = 0;  // 0 = no filter
};

// One gradation per Aut(DD)-orbit of nonempty node subsets (the type-alpha0
// gradations). Representative: lexicographically least coefficient vector
// in the orbit; output sorted by that vector.
inline std::vector<Gradation> enumerate_gradations(
    RootDataPtr data, const EnumerateOptions& options = {}) {
  if (!data) throw std::invalid_argument("enumerate_gradations: null root data");
  const RootSystem& rs = data->rs;
  const int r = rs.rank;
  if (r > 16)
    throw std::invalid_argument("enumeration supported up to rank 16");

  const auto& gens = rs.diagram_automorphisms;
  std::set<std::vector<long long>> canonical;
  for (unsigned long mask = 1; mask < (1ul << r); ++mask) {
    std::vector<long long> v(r, 0);
    for (int i = 0; i < r; ++i)
      if (mask & (1ul << i)) v[i] = 1;
    // Orbit closure under the generated automorphism group.
    std::set<std::vector<long long>> orbit{v};
    std::deque<std::vector<long long>> work{v};
    while (!work.empty()) {
      auto u = work.front();
      work.pop_front();
      for (const auto& p : gens) {
        std::vector<long long> w(r);
        for (int i = 0; i < r; ++i) w[p[i]] = u[i];
        if (orbit.insert(w).second) work.push_back(w);
      }
    }
    canonical.insert(*orbit.begin());
  }

  std::vector<Gradation> out;
  for (const auto& v : canonical) {
    Gradation g = make_gradation(data, CharacteristicElement{v});
    if (options.max_kind > 0 && g.kind > options.max_kind) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gla

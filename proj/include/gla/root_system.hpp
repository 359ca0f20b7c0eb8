#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gla/linalg.hpp"

namespace gla {

// Families of (possibly non-reduced) irreducible restricted root systems.
enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::BC: return "BC";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  if (s == "BC") return Family::BC;
  return std::nullopt;
}

// A root as integer coefficients over the simple roots (Bourbaki order).
using RootCoeffs = std::vector<int>;

// Abstract root system with a fixed standard inner product on the span of
// the simple roots. Positive roots are stored in lexicographic order of
// their coefficient vectors; all node indices are 0-based.
struct RootSystem {
  Family family{};
  int rank = 0;
  Mat base_form;                        // <alpha_i, alpha_j>_0
  std::vector<RootCoeffs> positive;     // lex-sorted
  RootCoeffs highest;                   // highest root
  std::vector<std::vector<int>> diagram_automorphisms;  // generator perms

  std::map<RootCoeffs, int> position;   // positive root -> index

  Rat inner0(const RootCoeffs& a, const RootCoeffs& b) const {
    Rat s;
    for (int i = 0; i < rank; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank; ++j) {
        if (b[j] == 0) continue;
        s += Rat(a[i]) * base_form[i][j] * Rat(b[j]);
      }
    }
    return s;
  }

  Rat norm0(const RootCoeffs& a) const { return inner0(a, a); }

  int index_of(const RootCoeffs& a) const {
    auto it = position.find(a);
    return it == position.end() ? -1 : it->second;
  }

  // Membership as a root (positive or negative).
  bool contains(const RootCoeffs& a) const {
    if (index_of(a) >= 0) return true;
    RootCoeffs neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return index_of(neg) >= 0;
  }
};

namespace detail {

inline void base_form_chain(Mat& g, int i, int j, const Rat& v) {
  g[i][j] = v;
  g[j][i] = v;
}

inline Mat make_base_form(Family family, int rank) {
  Mat g = zero_mat(rank, rank);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) base_form_chain(g, i, i + 1, Rat(-1));
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i < rank; ++i) g[i][i] = Rat(2);
      chain(rank);
      break;
    case Family::B:
    case Family::BC:
      // alpha_i = e_i - e_{i+1} (long), alpha_r = e_r (short).
      for (int i = 0; i < rank; ++i) g[i][i] = Rat(2);
      g[rank - 1][rank - 1] = Rat(1);
      chain(rank);
      break;
    case Family::C:
      // alpha_r = 2 e_r.
      for (int i = 0; i < rank; ++i) g[i][i] = Rat(2);
      g[rank - 1][rank - 1] = Rat(4);
      chain(rank - 1);
      if (rank >= 2) base_form_chain(g, rank - 2, rank - 1, Rat(-2));
      break;
    case Family::D:
      for (int i = 0; i < rank; ++i) g[i][i] = Rat(2);
      chain(rank - 1);
      base_form_chain(g, rank - 3, rank - 1, Rat(-1));
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
      for (int i = 0; i < rank; ++i) g[i][i] = Rat(2);
      base_form_chain(g, 0, 2, Rat(-1));
      for (int i = 2; i + 1 < rank; ++i) base_form_chain(g, i, i + 1, Rat(-1));
      base_form_chain(g, 1, 3, Rat(-1));
      break;
    case Family::F4:
      g[0][0] = Rat(2);
      g[1][1] = Rat(2);
      g[2][2] = Rat(1);
      g[3][3] = Rat(1);
      base_form_chain(g, 0, 1, Rat(-1));
      base_form_chain(g, 1, 2, Rat(-1));
      base_form_chain(g, 2, 3, Rat(-1, 2));
      break;
    case Family::G2:
      g[0][0] = Rat(2);
      g[1][1] = Rat(6);
      base_form_chain(g, 0, 1, Rat(-3));
      break;
  }
  return g;
}

inline long long classical_positive_count(Family family, long long r) {
  switch (family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
    case Family::BC: return r * r + r;
  }
  return -1;
}

inline void validate_family_rank(Family family, int rank) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                " for family " + to_string(family));
  };
  switch (family) {
    case Family::A:
    case Family::BC:
      if (rank < 1) fail();
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail();
      break;
    case Family::D:
      if (rank < 3) fail();
      break;
    case Family::E6:
      if (rank != 6) fail();
      break;
    case Family::E7:
      if (rank != 7) fail();
      break;
    case Family::E8:
      if (rank != 8) fail();
      break;
    case Family::F4:
      if (rank != 4) fail();
      break;
    case Family::G2:
      if (rank != 2) fail();
      break;
  }
}

inline std::vector<std::vector<int>> diagram_automorphism_generators(
    Family family, int rank) {
  std::vector<std::vector<int>> gens;
  auto ident = [&] {
    std::vector<int> p(rank);
    for (int i = 0; i < rank; ++i) p[i] = i;
    return p;
  };
  switch (family) {
    case Family::A:
      if (rank >= 2) {
        auto p = ident();
        std::reverse(p.begin(), p.end());
        gens.push_back(p);
      }
      break;
    case Family::D: {
      if (rank == 3) {
        auto p = ident();
        std::swap(p[1], p[2]);
        gens.push_back(p);
      } else {
        auto p = ident();
        std::swap(p[rank - 2], p[rank - 1]);
        gens.push_back(p);
        if (rank == 4) {
          auto q = ident();
          std::swap(q[0], q[2]);
          gens.push_back(q);  // together with p generates the full triality S3
        }
      }
      break;
    }
    case Family::E6: {
      auto p = ident();
      std::swap(p[0], p[5]);
      std::swap(p[2], p[4]);
      gens.push_back(p);
      break;
    }
    default:
      break;
  }
  return gens;
}

}  // namespace detail

// Generates the full root system by reflection closure of the simple roots
// (plus the divisible roots for BC). Deterministic: positive roots come out
// sorted lexicographically by coefficient vector.
inline RootSystem build_root_system(Family family, int rank) {
  detail::validate_family_rank(family, rank);

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.base_form = detail::make_base_form(family, rank);

  std::set<RootCoeffs> all;
  std::deque<RootCoeffs> work;
  for (int i = 0; i < rank; ++i) {
    RootCoeffs a(rank, 0);
    a[i] = 1;
    all.insert(a);
    work.push_back(a);
    a[i] = -1;
    all.insert(a);
    work.push_back(a);
  }
  while (!work.empty()) {
    RootCoeffs b = work.front();
    work.pop_front();
    for (int j = 0; j < rank; ++j) {
      RootCoeffs aj(rank, 0);
      aj[j] = 1;
      Rat cart = Rat(2) * rs.inner0(b, aj) / rs.base_form[j][j];
      if (!cart.is_integer())
        throw std::logic_error("root closure produced a non-integral Cartan pairing");
      RootCoeffs r = b;
      r[j] -= static_cast<int>(cart.num());
      if (all.insert(r).second) work.push_back(r);
    }
  }

  if (family == Family::BC) {
    // The indivisible roots close under reflections; the divisible ones are
    // exactly the doubles of the short class (squared length 1).
    std::vector<RootCoeffs> doubles;
    for (const auto& b : all)
      if (rs.norm0(b) == Rat(1)) {
        RootCoeffs d = b;
        for (auto& x : d) x *= 2;
        doubles.push_back(d);
      }
    for (auto& d : doubles) all.insert(d);
  }

  for (const auto& b : all) {
    bool nonneg = true, nonpos = true;
    for (int x : b) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw std::logic_error("root with mixed-sign coefficients");
    if (nonneg) rs.positive.push_back(b);
  }
  std::sort(rs.positive.begin(), rs.positive.end());

  if (static_cast<long long>(rs.positive.size()) !=
      detail::classical_positive_count(family, rank))
    throw std::logic_error("positive root count mismatch for " +
                           to_string(family) + std::to_string(rank));

  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    rs.position[rs.positive[i]] = static_cast<int>(i);

  // Highest root: unique positive root of maximal height, and it must
  // dominate every root coefficientwise.
  long long best = -1;
  for (const auto& b : rs.positive) {
    long long h = 0;
    for (int x : b) h += x;
    if (h > best) {
      best = h;
      rs.highest = b;
    }
  }
  for (const auto& b : rs.positive)
    for (int i = 0; i < rank; ++i)
      if (b[i] > rs.highest[i])
        throw std::logic_error("highest root does not dominate");

  rs.diagram_automorphisms = detail::diagram_automorphism_generators(family, rank);
  for (const auto& p : rs.diagram_automorphisms)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (rs.base_form[p[i]][p[j]] != rs.base_form[i][j])
          throw std::logic_error("diagram automorphism does not preserve the base form");

  return rs;
}

// Applies a node permutation to a root/coefficient vector.
inline RootCoeffs apply_permutation(const std::vector<int>& perm,
                                    const RootCoeffs& v) {
  RootCoeffs r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[perm[i]] = v[i];
  return r;
}

}  // namespace gla

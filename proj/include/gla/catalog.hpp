#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gla/root_data.hpp"

namespace gla {

// A named (root system, multiplicity profile) pair. Multiplicities are per
// length class; which classes must be present depends on the family.
struct CatalogEntry {
  std::string name;
  Family family{};
  int rank = 0;
  std::optional<long long> mult_long;
  std::optional<long long> mult_short;
  std::optional<long long> mult_doubled;
  std::map<std::string, long long> parameters;
};

namespace detail {

inline MultiplicityProfile profile_for_entry(const CatalogEntry& e,
                                             const RootSystem& rs) {
  auto classes = length_classes(rs);
  auto need = [&](const std::optional<long long>& m, const char* which) {
    if (!m)
      throw std::invalid_argument("catalog entry '" + e.name + "': missing " +
                                  which + " multiplicity");
    if (*m <= 0)
      throw std::invalid_argument("catalog entry '" + e.name +
                                  "': multiplicities must be positive");
    return *m;
  };
  MultiplicityProfile p;
  if (e.family == Family::BC) {
    // classes are {1, 4} for rank 1 and {1, 2, 4} for rank >= 2
    if (rs.rank == 1) {
      if (e.mult_long)
        throw std::invalid_argument("catalog entry '" + e.name +
                                    "': BC_1 has no long class");
      p.by_class[Rat(1)] = need(e.mult_short, "short");
      p.by_class[Rat(4)] = need(e.mult_doubled, "doubled");
    } else {
      p.by_class[Rat(1)] = need(e.mult_short, "short");
      p.by_class[Rat(2)] = need(e.mult_long, "long");
      p.by_class[Rat(4)] = need(e.mult_doubled, "doubled");
    }
    return p;
  }
  if (e.mult_doubled)
    throw std::invalid_argument("catalog entry '" + e.name +
                                "': only BC systems have a doubled class");
  if (classes.size() == 1) {
    long long m = need(e.mult_long, "long");
    if (e.mult_short && *e.mult_short != m)
      throw std::invalid_argument(
          "catalog entry '" + e.name +
          "': all roots form one Weyl orbit, multiplicity must be constant");
    p.by_class[classes[0]] = m;
    return p;
  }
  p.by_class[classes[0]] = need(e.mult_short, "short");
  p.by_class[classes[1]] = need(e.mult_long, "long");
  return p;
}

inline std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  // "g2^c" and friends mean the complex form
  if (out.size() > 2 && out.substr(out.size() - 2) == "^c")
    out = out.substr(0, out.size() - 2) + "(c)";
  std::string cleaned;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '^' && i + 1 < out.size() && out[i + 1] == '*') continue;
    cleaned += out[i];
  }
  return cleaned;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& builtin_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto fixed = [&](std::string name, Family f, int rank, long long ml,
                     std::optional<long long> ms = std::nullopt) {
      CatalogEntry e;
      e.name = std::move(name);
      e.family = f;
      e.rank = rank;
      e.mult_long = ml;
      e.mult_short = ms;
      v.push_back(std::move(e));
    };
    fixed("g2(2)", Family::G2, 2, 1, 1);
    fixed("g2(C)", Family::G2, 2, 2, 2);
    fixed("f4(4)", Family::F4, 4, 1, 1);
    fixed("f4(C)", Family::F4, 4, 2, 2);
    fixed("e6(6)", Family::E6, 6, 1);
    fixed("e6(C)", Family::E6, 6, 2);
    fixed("e7(7)", Family::E7, 7, 1);
    fixed("e8(8)", Family::E8, 8, 1);
    fixed("e6(2)", Family::F4, 4, 1, 2);
    fixed("e7(-5)", Family::F4, 4, 1, 4);
    fixed("e8(-24)", Family::F4, 4, 1, 8);
    fixed("su*(6)", Family::A, 2, 4);
    fixed("su*(8)", Family::A, 3, 4);
    fixed("e6(-26)", Family::A, 2, 8);
    fixed("so(5,C)", Family::B, 2, 2, 2);
    return v;
  }();
  return entries;
}

struct ParameterizedFamily {
  std::string pattern;
  std::string description;
};

inline const std::vector<ParameterizedFamily>& parameterized_families() {
  static const std::vector<ParameterizedFamily> fams = {
      {"sl(n,R)", "split sl_n(R), n >= 2: A_{n-1}, multiplicity 1"},
      {"sl(n,C)", "sl_n(C) as a real algebra, n >= 2: A_{n-1}, multiplicity 2"},
      {"su*(2n)", "su*(2n), n >= 2: A_{n-1}, multiplicity 4"},
      {"so(2,q)", "so(2,q), q >= 3: B_2, long multiplicity 1, short q-2"},
  };
  return fams;
}

// Resolves a name against extra entries, the builtin entries, and finally
// the parameterized families (sl(n,R), sl(n,C), su*(2n), so(2,q)).
inline std::optional<CatalogEntry> lookup(
    std::string_view name, const std::vector<CatalogEntry>& extra = {}) {
  std::string key = detail::normalize_name(name);
  for (const auto& e : extra)
    if (detail::normalize_name(e.name) == key) return e;
  for (const auto& e : builtin_entries())
    if (detail::normalize_name(e.name) == key) return e;

  std::smatch m;
  auto make = [&](std::string display, Family f, int rank, long long ml,
                  std::optional<long long> ms,
                  std::map<std::string, long long> params) {
    CatalogEntry e;
    e.name = std::move(display);
    e.family = f;
    e.rank = rank;
    e.mult_long = ml;
    e.mult_short = ms;
    e.parameters = std::move(params);
    return e;
  };
  static const std::regex sl_r(R"(^sl\((\d+)(,r)?\)$|^sl(\d+)\(r\)$)");
  static const std::regex sl_c(R"(^sl\((\d+),c\)$|^sl(\d+)\(c\)$)");
  static const std::regex su_star(R"(^su\*\((\d+)\)$)");
  static const std::regex so_2q(R"(^so\(2,(\d+)\)$)");
  if (std::regex_match(key, m, sl_r)) {
    long long n = std::stoll(m[1].matched ? m[1].str() : m[3].str());
    if (n < 2) return std::nullopt;
    return make("sl(" + std::to_string(n) + ",R)", Family::A,
                static_cast<int>(n - 1), 1, std::nullopt, {{"n", n}});
  }
  if (std::regex_match(key, m, sl_c)) {
    long long n = std::stoll(m[1].matched ? m[1].str() : m[2].str());
    if (n < 2) return std::nullopt;
    return make("sl(" + std::to_string(n) + ",C)", Family::A,
                static_cast<int>(n - 1), 2, std::nullopt, {{"n", n}});
  }
  if (std::regex_match(key, m, su_star)) {
    long long n2 = std::stoll(m[1].str());
    if (n2 < 4 || n2 % 2 != 0) return std::nullopt;
    return make("su*(" + std::to_string(n2) + ")", Family::A,
                static_cast<int>(n2 / 2 - 1), 4, std::nullopt, {{"n", n2 / 2}});
  }
  if (std::regex_match(key, m, so_2q)) {
    long long q = std::stoll(m[1].str());
    if (q < 3) return std::nullopt;
    return make("so(2," + std::to_string(q) + ")", Family::B, 2, 1, q - 2,
                {{"q", q}});
  }
  return std::nullopt;
}

// Builds the root data for an entry; all profile validation happens here.
inline RootDataPtr realize(const CatalogEntry& e) {
  RootSystem rs = build_root_system(e.family, e.rank);
  MultiplicityProfile p = detail::profile_for_entry(e, rs);
  return std::make_shared<RestrictedRootData>(
      killing_normalize(std::move(rs), std::move(p), e.name));
}

// Strict JSON record -> entry. Unknown keys are rejected.
inline CatalogEntry entry_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("catalog record must be an object");
  static const std::vector<std::string> known = {
      "name", "family", "rank", "mult_long", "mult_short", "mult_doubled",
      "parameters"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known) ok = ok || it.key() == k;
    if (!ok)
      throw std::invalid_argument("catalog record has unknown field '" +
                                  it.key() + "'");
  }
  CatalogEntry e;
  if (!j.contains("name") || !j["name"].is_string() || j["name"].empty())
    throw std::invalid_argument("catalog record needs a nonempty string 'name'");
  e.name = j["name"].get<std::string>();
  if (!j.contains("family") || !j["family"].is_string())
    throw std::invalid_argument("catalog record needs a string 'family'");
  auto fam = family_from_string(j["family"].get<std::string>());
  if (!fam)
    throw std::invalid_argument("catalog record has unknown family '" +
                                j["family"].get<std::string>() + "'");
  e.family = *fam;
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw std::invalid_argument("catalog record needs an integer 'rank'");
  e.rank = j["rank"].get<int>();
  auto opt = [&](const char* key) -> std::optional<long long> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer())
      throw std::invalid_argument(std::string("catalog field '") + key +
                                  "' must be an integer");
    return j[key].get<long long>();
  };
  e.mult_long = opt("mult_long");
  e.mult_short = opt("mult_short");
  e.mult_doubled = opt("mult_doubled");
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object())
      throw std::invalid_argument("catalog field 'parameters' must be an object");
    for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it) {
      if (!it.value().is_number_integer())
        throw std::invalid_argument("catalog parameters must be integers");
      e.parameters[it.key()] = it.value().get<long long>();
    }
  }
  realize(e);  // validates family/rank pair and the multiplicity profile
  return e;
}

inline std::vector<CatalogEntry> load_catalog(const nlohmann::json& doc) {
  if (!doc.is_array())
    throw std::invalid_argument("catalog document must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& rec : doc) {
    CatalogEntry e = entry_from_json(rec);
    for (const auto& prev : out)
      if (detail::normalize_name(prev.name) == detail::normalize_name(e.name))
        throw std::invalid_argument("duplicate catalog name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file '" + path + "'");
  nlohmann::json doc;
  in >> doc;
  return load_catalog(doc);
}

}  // namespace gla

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gla/catalog.hpp"
#include "gla/curvature.hpp"
#include "gla/oracle.hpp"

namespace gla {

inline std::string delta_string(const RootSystem& rs) {
  switch (rs.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::BC:
      return to_string(rs.family) + std::to_string(rs.rank);
    default:
      return to_string(rs.family);
  }
}

inline std::string format_eigenvalue_type(
    const std::vector<std::pair<long long, long long>>& classes) {
  std::string mu, d;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) {
      mu += "<";
      d += ",";
    }
    mu += std::to_string(classes[i].first);
    d += std::to_string(classes[i].second);
  }
  return "(" + mu + "; " + d + ")";
}

// "H^1+H^3" for 0/1 vectors, "2 H^1+3 H^3" in general (nodes 1-based).
inline std::string characteristic_string(const std::vector<long long>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] != 1) s += std::to_string(c[i]) + " ";
    s += "H^" + std::to_string(i + 1);
  }
  return s;
}

inline std::string join_ll(const std::vector<long long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string format_vec(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string csv_escape(const std::string& s) {
  bool quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One fully analyzed gradation, everything exact. Vectors are reported in
// dual-basis coordinates (the coefficients over {H^i}).
struct AnalysisDocument {
  std::string algebra;
  std::string delta;
  std::vector<long long> coeffs;
  long long kind = 0;
  bool alpha0 = true;
  std::vector<long long> reduced_coeffs;
  long long reduced_kind = 0;
  std::vector<std::pair<long long, long long>> dims;          // requested gradation
  std::vector<std::pair<long long, long long>> reduced_dims;  // alpha0 reduction
  std::vector<std::pair<long long, std::vector<Rat>>> zk;
  std::vector<Rat> h0;
  struct RicciClass {
    long long level;
    Rat alpha_h0;
    Rat nil;
    Rat solv;
    long long dim;
  };
  std::vector<RicciClass> ricci;
  Rat ric_h0;
  bool einstein = false;
  std::optional<Rat> einstein_constant;
  std::vector<std::pair<long long, long long>> eigenvalue_type;
  long long carnot_step = 0;
};

inline AnalysisDocument analyze(const RootDataPtr& data,
                                const std::vector<long long>& coeffs) {
  Gradation g = make_gradation(data, CharacteristicElement{coeffs});
  CurvatureReport rep = einstein_verdict(g);
  const Gradation& red = rep.reduced;

  AnalysisDocument doc;
  doc.algebra = data->name;
  doc.delta = delta_string(data->rs);
  doc.coeffs = coeffs;
  doc.kind = g.kind;
  doc.alpha0 = g.alpha0;
  doc.reduced_coeffs = red.z;
  doc.reduced_kind = red.kind;
  for (long long k = 1; k <= g.kind; ++k)
    if (g.dims[k] > 0) doc.dims.emplace_back(k, g.dims[k]);
  for (long long k = 1; k <= red.kind; ++k)
    doc.reduced_dims.emplace_back(k, red.dims[k]);
  for (const auto& [k, zk] : rep.mc.zk)
    doc.zk.emplace_back(k, mat_vec(data->gram, zk));
  doc.h0 = mat_vec(data->gram, rep.mc.h0);

  std::map<std::tuple<long long, Rat, Rat, Rat>, long long> classes;
  for (const auto& [idx, nil] : rep.nil) {
    classes[{red.level_of[idx], rep.alpha_h0.at(idx), nil, rep.solv.at(idx)}] +=
        data->mult(idx);
  }
  for (const auto& [key, dim] : classes)
    doc.ricci.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                         std::get<3>(key), dim});
  doc.ric_h0 = rep.ric_h0;
  doc.einstein = rep.einstein;
  doc.einstein_constant = rep.einstein_constant;
  doc.eigenvalue_type = rep.type.classes;
  doc.carnot_step = rep.carnot;
  return doc;
}

// ---- JSON (schema gla-analysis/1; rationals as [num, den]) ----

inline nlohmann::json rat_to_json(const Rat& r) {
  return nlohmann::json::array({r.num(), r.den()});
}

inline Rat rat_from_json(const nlohmann::json& j) {
  return Rat(j.at(0).get<long long>(), j.at(1).get<long long>());
}

inline nlohmann::json vec_to_json(const std::vector<Rat>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& r : v) a.push_back(rat_to_json(r));
  return a;
}

inline std::vector<Rat> vec_from_json(const nlohmann::json& j) {
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

inline nlohmann::json to_json(const AnalysisDocument& d) {
  nlohmann::json j;
  j["schema"] = "gla-analysis/1";
  j["algebra"] = d.algebra;
  j["delta"] = d.delta;
  j["coefficients"] = d.coeffs;
  j["kind"] = d.kind;
  j["alpha0"] = d.alpha0;
  j["reduced_coefficients"] = d.reduced_coeffs;
  j["reduced_kind"] = d.reduced_kind;
  auto dims_json = [](const std::vector<std::pair<long long, long long>>& dims) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [k, v] : dims) a.push_back({{"level", k}, {"dim", v}});
    return a;
  };
  j["dims"] = dims_json(d.dims);
  j["reduced_dims"] = dims_json(d.reduced_dims);
  nlohmann::json zk = nlohmann::json::array();
  for (const auto& [k, v] : d.zk)
    zk.push_back({{"k", k}, {"coords", vec_to_json(v)}});
  j["zk"] = zk;
  j["h0"] = vec_to_json(d.h0);
  nlohmann::json ricci = nlohmann::json::array();
  for (const auto& rc : d.ricci)
    ricci.push_back({{"level", rc.level},
                     {"alpha_h0", rat_to_json(rc.alpha_h0)},
                     {"nil", rat_to_json(rc.nil)},
                     {"solv", rat_to_json(rc.solv)},
                     {"dim", rc.dim}});
  j["ricci"] = ricci;
  j["ric_h0"] = rat_to_json(d.ric_h0);
  j["einstein"] = d.einstein;
  if (d.einstein_constant)
    j["einstein_constant"] = rat_to_json(*d.einstein_constant);
  nlohmann::json type = nlohmann::json::array();
  for (const auto& [mu, dim] : d.eigenvalue_type)
    type.push_back({{"mu", mu}, {"dim", dim}});
  j["eigenvalue_type"] = type;
  j["eigenvalue_type_string"] = format_eigenvalue_type(d.eigenvalue_type);
  j["carnot_step"] = d.carnot_step;
  return j;
}

inline AnalysisDocument analysis_from_json(const nlohmann::json& j) {
  AnalysisDocument d;
  d.algebra = j.at("algebra").get<std::string>();
  d.delta = j.at("delta").get<std::string>();
  d.coeffs = j.at("coefficients").get<std::vector<long long>>();
  d.kind = j.at("kind").get<long long>();
  d.alpha0 = j.at("alpha0").get<bool>();
  d.reduced_coeffs = j.at("reduced_coefficients").get<std::vector<long long>>();
  d.reduced_kind = j.at("reduced_kind").get<long long>();
  auto dims_from = [](const nlohmann::json& a) {
    std::vector<std::pair<long long, long long>> v;
    for (const auto& x : a)
      v.emplace_back(x.at("level").get<long long>(), x.at("dim").get<long long>());
    return v;
  };
  d.dims = dims_from(j.at("dims"));
  d.reduced_dims = dims_from(j.at("reduced_dims"));
  for (const auto& x : j.at("zk"))
    d.zk.emplace_back(x.at("k").get<long long>(), vec_from_json(x.at("coords")));
  d.h0 = vec_from_json(j.at("h0"));
  for (const auto& x : j.at("ricci"))
    d.ricci.push_back({x.at("level").get<long long>(),
                       rat_from_json(x.at("alpha_h0")),
                       rat_from_json(x.at("nil")), rat_from_json(x.at("solv")),
                       x.at("dim").get<long long>()});
  d.ric_h0 = rat_from_json(j.at("ric_h0"));
  d.einstein = j.at("einstein").get<bool>();
  if (j.contains("einstein_constant"))
    d.einstein_constant = rat_from_json(j.at("einstein_constant"));
  for (const auto& x : j.at("eigenvalue_type"))
    d.eigenvalue_type.emplace_back(x.at("mu").get<long long>(),
                                   x.at("dim").get<long long>());
  d.carnot_step = j.at("carnot_step").get<long long>();
  return d;
}

inline std::string dims_string(const std::vector<std::pair<long long, long long>>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(dims[i].first) + ":" + std::to_string(dims[i].second);
  }
  return s;
}

inline std::string to_text(const AnalysisDocument& d) {
  std::ostringstream os;
  os << "algebra:          " << d.algebra << "  (restricted root system "
     << d.delta << ")\n";
  os << "characteristic:   Z = " << characteristic_string(d.coeffs)
     << "  [coefficients " << join_ll(d.coeffs) << "]\n";
  os << "kind:             " << d.kind << "\n";
  os << "type alpha0:      " << (d.alpha0 ? "yes" : "no") << "\n";
  if (!d.alpha0) {
    os << "reduction:        Z' = " << characteristic_string(d.reduced_coeffs)
       << "  (kind " << d.reduced_kind << ", same nilpotent part)\n";
  }
  os << "layer dims:       " << dims_string(d.dims) << "\n";
  if (!d.alpha0)
    os << "reduced dims:     " << dims_string(d.reduced_dims) << "\n";
  for (const auto& [k, v] : d.zk)
    os << "Z_" << k << ":              " << format_vec(v) << "\n";
  os << "H_0:              " << format_vec(d.h0)
     << "  [coordinates over the dual basis H^i]\n";
  os << "Ricci of the natural extension (H = H_0, c = 2):\n";
  for (const auto& rc : d.ricci)
    os << "  level " << rc.level << ": alpha(H_0) = " << rc.alpha_h0
       << ", Ric^n = " << rc.nil << ", Ric = " << rc.solv << "  [dim " << rc.dim
       << "]\n";
  os << "Ric(H_0):         " << d.ric_h0 << "\n";
  os << "einstein:         " << (d.einstein ? "yes" : "no");
  if (d.einstein_constant) os << "  (constant " << *d.einstein_constant << ")";
  os << "\n";
  os << "eigenvalue type:  " << format_eigenvalue_type(d.eigenvalue_type) << "\n";
  os << "carnot step:      " << d.carnot_step << "\n";
  return os.str();
}

inline std::string analysis_csv_header() {
  return "algebra,coefficients,kind,alpha0,reduced_coefficients,dims,einstein,"
         "einstein_constant,ric_h0,eigenvalue_type,carnot_step,h0";
}

inline std::string to_csv_row(const AnalysisDocument& d) {
  std::ostringstream os;
  os << csv_escape(d.algebra) << "," << csv_escape(join_ll(d.coeffs)) << ","
     << d.kind << "," << (d.alpha0 ? "yes" : "no") << ","
     << csv_escape(join_ll(d.reduced_coeffs)) << ","
     << csv_escape(dims_string(d.dims)) << "," << (d.einstein ? "yes" : "no")
     << "," << (d.einstein_constant ? d.einstein_constant->str() : "") << ","
     << d.ric_h0.str() << ","
     << csv_escape(format_eigenvalue_type(d.eigenvalue_type)) << ","
     << d.carnot_step << "," << csv_escape(format_vec(d.h0));
  return os.str();
}

inline std::string to_csv(const AnalysisDocument& d) {
  return analysis_csv_header() + "\n" + to_csv_row(d) + "\n";
}

// ---- Enumeration ----

struct Enumeration {
  std::string algebra;
  std::vector<AnalysisDocument> rows;
};

inline Enumeration enumerate_analysis(const RootDataPtr& data,
                                      const EnumerateOptions& options = {}) {
  Enumeration e;
  e.algebra = data->name;
  for (const Gradation& g : enumerate_gradations(data, options))
    e.rows.push_back(analyze(data, g.z));
  return e;
}

inline std::string to_text(const Enumeration& e) {
  std::ostringstream os;
  os << "algebra: " << e.algebra << "  (" << e.rows.size()
     << " gradations up to diagram automorphism)\n";
  for (const auto& d : e.rows) {
    os << "  Z = " << characteristic_string(d.coeffs) << "  kind " << d.kind
       << "  dims " << dims_string(d.dims) << "  einstein "
       << (d.einstein ? "yes" : "no") << "  type "
       << format_eigenvalue_type(d.eigenvalue_type) << "  carnot "
       << d.carnot_step << "\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const Enumeration& e) {
  nlohmann::json j;
  j["schema"] = "gla-enumerate/1";
  j["algebra"] = e.algebra;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& d : e.rows) rows.push_back(to_json(d));
  j["gradations"] = rows;
  return j;
}

inline std::string to_csv(const Enumeration& e) {
  std::ostringstream os;
  os << "algebra,z,kind,dims,einstein,eigenvalue_type,carnot_step\n";
  for (const auto& d : e.rows)
    os << csv_escape(e.algebra) << ","
       << csv_escape(characteristic_string(d.coeffs)) << "," << d.kind << ","
       << csv_escape(dims_string(d.dims)) << "," << (d.einstein ? "yes" : "no")
       << "," << csv_escape(format_eigenvalue_type(d.eigenvalue_type)) << ","
       << d.carnot_step << "\n";
  return os.str();
}

// ---- The classification table of third- and fourth-kind Einstein rows ----

struct PaperTableRow {
  std::string algebra;
  std::string delta;
  std::string z;
  std::string type;
  bool einstein = false;
};

inline std::vector<PaperTableRow> paper_table() {
  static const std::vector<std::pair<const char*, int>> cases = {
      {"g2(2)", 1},  {"g2(C)", 1},   {"f4(4)", 2},  {"f4(C)", 2},
      {"e6(2)", 2},  {"e7(-5)", 2},  {"e8(-24)", 2}, {"e6(6)", 4},
      {"e6(C)", 4},  {"f4(4)", 3},   {"f4(C)", 3},  {"e6(2)", 3},
      {"e7(-5)", 3}, {"e8(-24)", 3},
  };
  std::vector<PaperTableRow> rows;
  for (const auto& [name, node] : cases) {
    RootDataPtr data = realize(*lookup(name));
    std::vector<long long> c(data->rs.rank, 0);
    c[node - 1] = 1;
    AnalysisDocument d = analyze(data, c);
    rows.push_back({name, d.delta, "H^" + std::to_string(node),
                    format_eigenvalue_type(d.eigenvalue_type), d.einstein});
  }
  return rows;
}

inline std::string to_text(const std::vector<PaperTableRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.algebra << ", " << r.delta << ", " << r.z << ", " << r.type << "\n";
  return os.str();
}

inline nlohmann::json paper_table_json(const std::vector<PaperTableRow>& rows) {
  nlohmann::json j;
  j["schema"] = "gla-paper-table/1";
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows)
    a.push_back({{"algebra", r.algebra},
                 {"delta", r.delta},
                 {"z", r.z},
                 {"eigenvalue_type", r.type},
                 {"einstein", r.einstein}});
  j["rows"] = a;
  return j;
}

inline std::string paper_table_csv(const std::vector<PaperTableRow>& rows) {
  std::ostringstream os;
  os << "algebra,delta,z,eigenvalue_type\n";
  for (const auto& r : rows)
    os << csv_escape(r.algebra) << "," << csv_escape(r.delta) << ","
       << csv_escape(r.z) << "," << csv_escape(r.type) << "\n";
  return os.str();
}

// ---- Oracle cross-check ----

struct OracleRootLine {
  int i, j;          // unit E_ij, 0-based
  long long level;
  Rat brute_nil, symbolic_nil;
  Rat brute_solv, symbolic_solv;
  bool match = false;
};

struct OracleReport {
  int n = 0;
  std::vector<int> blocks;
  std::vector<OracleRootLine> lines;
  bool mean_curvature_match = false;
  bool pass = false;
};

// Compares the structure-constant Ricci of the block gradation on sl_n with
// the symbolic computation on split A_{n-1}, root space by root space, and
// the mean curvature vectors through the same dictionary.
inline OracleReport oracle_check(const std::vector<int>& blocks) {
  MatrixModel model = build_model(blocks);
  auto brute = brute_ricci(model);
  BruteMeanCurvature bmc = brute_mean_curvature(model);

  RootDataPtr data = realize(*lookup("sl(" + std::to_string(model.n) + ",R)"));
  Gradation g = make_gradation(data, CharacteristicElement{block_characteristic(model)});
  MeanCurvatureData mc = mean_curvature(g);

  OracleReport rep;
  rep.n = model.n;
  rep.blocks = blocks;

  // Brute H_0 eigenvalue on E_ij is the difference of diagonal entries.
  auto h0_eigen = [&](int i, int j) { return bmc.h0[i][i] - bmc.h0[j][j]; };

  bool all = true;
  for (const auto& [ij, val] : brute) {
    auto [i, j] = ij;
    int idx = data->rs.index_of(unit_root(model, i, j));
    if (idx < 0) throw std::logic_error("oracle dictionary failed to find a root");
    OracleRootLine line;
    line.i = i;
    line.j = j;
    line.level = g.level_of[idx];
    line.brute_nil = val;
    line.symbolic_nil = nil_ricci(g, mc, idx);
    line.brute_solv = val - h0_eigen(i, j) / Rat(2);
    line.symbolic_solv = solv_ricci(g, mc, idx, mc.h0, Rat(2));
    line.match = line.brute_nil == line.symbolic_nil &&
                 line.brute_solv == line.symbolic_solv;
    all = all && line.match;
    rep.lines.push_back(line);
  }

  rep.mean_curvature_match = true;
  for (const auto& [k, zmat] : bmc.zk) {
    Mat symb = zero_mat(model.n, model.n);
    const Vec& zk = mc.zk.at(k);
    for (int t = 0; t + 1 < model.n; ++t)
      symb = mat_add(symb, mat_scale(root_vector_matrix(model, t), zk[t]));
    if (symb != zmat) rep.mean_curvature_match = false;
  }
  rep.pass = all && rep.mean_curvature_match;
  return rep;
}

inline std::string to_text(const OracleReport& r) {
  std::ostringstream os;
  os << "oracle check: sl(" << r.n << ",R), blocks";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    os << (i ? "," : " ") << r.blocks[i];
  os << "\n";
  for (const auto& l : r.lines)
    os << "  E(" << l.i + 1 << "," << l.j + 1 << ") level " << l.level
       << ": Ric^n brute " << l.brute_nil << " symbolic " << l.symbolic_nil
       << ", Ric brute " << l.brute_solv << " symbolic " << l.symbolic_solv
       << "  " << (l.match ? "PASS" : "FAIL") << "\n";
  os << "  mean curvature vectors: "
     << (r.mean_curvature_match ? "PASS" : "FAIL") << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline nlohmann::json to_json(const OracleReport& r) {
  nlohmann::json j;
  j["schema"] = "gla-oracle-check/1";
  j["n"] = r.n;
  j["blocks"] = r.blocks;
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : r.lines)
    lines.push_back({{"i", l.i + 1},
                     {"j", l.j + 1},
                     {"level", l.level},
                     {"brute_nil", rat_to_json(l.brute_nil)},
                     {"symbolic_nil", rat_to_json(l.symbolic_nil)},
                     {"brute_solv", rat_to_json(l.brute_solv)},
                     {"symbolic_solv", rat_to_json(l.symbolic_solv)},
                     {"match", l.match}});
  j["root_spaces"] = lines;
  j["mean_curvature_match"] = r.mean_curvature_match;
  j["pass"] = r.pass;
  return j;
}

inline std::string to_csv(const OracleReport& r) {
  std::ostringstream os;
  os << "i,j,level,brute_nil,symbolic_nil,brute_solv,symbolic_solv,match\n";
  for (const auto& l : r.lines)
    os << l.i + 1 << "," << l.j + 1 << "," << l.level << ","
       << l.brute_nil.str() << "," << l.symbolic_nil.str() << ","
       << l.brute_solv.str() << "," << l.symbolic_solv.str() << ","
       << (l.match ? "yes" : "no") << "\n";
  return os.str();
}

// ---- Catalog listing ----

inline std::string list_algebras_text(const std::vector<CatalogEntry>& extra = {}) {
  std::ostringstream os;
  auto line = [&](const CatalogEntry& e) {
    os << "  " << e.name << "  [" << to_string(e.family) << e.rank
       << "]  mult";
    if (e.mult_long) os << " long=" << *e.mult_long;
    if (e.mult_short) os << " short=" << *e.mult_short;
    if (e.mult_doubled) os << " doubled=" << *e.mult_doubled;
    os << "\n";
  };
  os << "builtin algebras:\n";
  for (const auto& e : builtin_entries()) line(e);
  if (!extra.empty()) {
    os << "catalog file algebras:\n";
    for (const auto& e : extra) line(e);
  }
  os << "parameterized families:\n";
  for (const auto& f : parameterized_families())
    os << "  " << f.pattern << "  " << f.description << "\n";
  return os.str();
}

inline nlohmann::json list_algebras_json(const std::vector<CatalogEntry>& extra = {}) {
  nlohmann::json j;
  j["schema"] = "gla-list/1";
  auto entry = [](const CatalogEntry& e) {
    nlohmann::json x;
    x["name"] = e.name;
    x["family"] = to_string(e.family);
    x["rank"] = e.rank;
    if (e.mult_long) x["mult_long"] = *e.mult_long;
    if (e.mult_short) x["mult_short"] = *e.mult_short;
    if (e.mult_doubled) x["mult_doubled"] = *e.mult_doubled;
    return x;
  };
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : builtin_entries()) a.push_back(entry(e));
  for (const auto& e : extra) a.push_back(entry(e));
  j["algebras"] = a;
  nlohmann::json p = nlohmann::json::array();
  for (const auto& f : parameterized_families())
    p.push_back({{"pattern", f.pattern}, {"description", f.description}});
  j["parameterized"] = p;
  return j;
}

inline std::string list_algebras_csv(const std::vector<CatalogEntry>& extra = {}) {
  std::ostringstream os;
  os << "name,family,rank,mult_long,mult_short,mult_doubled\n";
  auto line = [&](const CatalogEntry& e) {
    os << csv_escape(e.name) << "," << to_string(e.family) << "," << e.rank
       << "," << (e.mult_long ? std::to_string(*e.mult_long) : "") << ","
       << (e.mult_short ? std::to_string(*e.mult_short) : "") << ","
       << (e.mult_doubled ? std::to_string(*e.mult_doubled) : "") << "\n";
  };
  for (const auto& e : builtin_entries()) line(e);
  for (const auto& e : extra) line(e);
  return os.str();
}

}  // namespace gla

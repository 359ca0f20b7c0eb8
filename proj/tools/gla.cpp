#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gla/analysis.hpp"

namespace {

std::vector<long long> parse_coeffs(const std::string& s) {
  std::vector<long long> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

std::vector<int> parse_blocks(const std::string& s) {
  std::vector<int> out;
  for (long long v : parse_coeffs(s)) out.push_back(static_cast<int>(v));
  return out;
}

gla::RootDataPtr resolve(const std::string& name,
                         const std::vector<gla::CatalogEntry>& extra) {
  auto entry = gla::lookup(name, extra);
  if (!entry) throw std::invalid_argument("unknown algebra '" + name + "'");
  return gla::realize(*entry);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gla: exact curvature of the nilmanifolds and solvmanifolds attached to "
      "gradations of semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string catalog_path;
  bool quiet = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--catalog", catalog_path, "JSON file with extra catalog entries");
  app.add_flag("--quiet", quiet, "reduce text output to the essential lines");

  auto* list = app.add_subcommand("list-algebras", "list the algebra catalog");
  list->fallthrough();

  auto* analyze = app.add_subcommand(
      "analyze", "analyze one gradation given by its characteristic coefficients");
  analyze->fallthrough();
  std::string algebra, coeffs_arg;
  analyze->add_option("algebra", algebra, "catalog name, e.g. g2(2) or sl(4,R)")
      ->required();
  analyze
      ->add_option("coefficients", coeffs_arg,
                   "comma-separated nonnegative integers, Bourbaki node order")
      ->required();

  auto* enumerate =
      app.add_subcommand("enumerate",
                         "analyze every type-alpha0 gradation up to diagram "
                         "automorphism");
  enumerate->fallthrough();
  std::string enum_algebra;
  long long max_kind = 0;
  enumerate->add_option("algebra", enum_algebra, "catalog name")->required();
  enumerate->add_option("--max-kind", max_kind, "only keep gradations of kind <= N");

  auto* table = app.add_subcommand(
      "paper-table", "the classification table of third- and fourth-kind "
                     "Einstein solvmanifolds");
  table->fallthrough();

  auto* oracle = app.add_subcommand(
      "oracle-check",
      "cross-check the symbolic Ricci against sl_n structure constants");
  oracle->fallthrough();
  int oracle_n = 0;
  std::string blocks_arg;
  int max_n = 8;
  oracle->add_option("n", oracle_n, "matrix size")->required();
  oracle->add_option("blocks", blocks_arg, "comma-separated block sizes")->required();
  oracle->add_option("--max-n", max_n, "largest accepted matrix size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<gla::CatalogEntry> extra;
    if (!catalog_path.empty()) extra = gla::load_catalog_file(catalog_path);

    if (list->parsed()) {
      if (format == "json")
        std::cout << gla::list_algebras_json(extra).dump(2) << "\n";
      else if (format == "csv")
        std::cout << gla::list_algebras_csv(extra);
      else if (quiet) {
        for (const auto& e : gla::builtin_entries()) std::cout << e.name << "\n";
        for (const auto& e : extra) std::cout << e.name << "\n";
      } else
        std::cout << gla::list_algebras_text(extra);
      return 0;
    }

    if (analyze->parsed()) {
      auto data = resolve(algebra, extra);
      gla::AnalysisDocument doc = gla::analyze(data, parse_coeffs(coeffs_arg));
      if (format == "json")
        std::cout << gla::to_json(doc).dump(2) << "\n";
      else if (format == "csv")
        std::cout << gla::to_csv(doc);
      else if (quiet)
        std::cout << doc.algebra << " Z=" << gla::characteristic_string(doc.coeffs)
                  << " kind=" << doc.kind
                  << " einstein=" << (doc.einstein ? "yes" : "no") << " type="
                  << gla::format_eigenvalue_type(doc.eigenvalue_type)
                  << " carnot=" << doc.carnot_step << "\n";
      else
        std::cout << gla::to_text(doc);
      return 0;
    }

    if (enumerate->parsed()) {
      auto data = resolve(enum_algebra, extra);
      gla::EnumerateOptions options;
      options.max_kind = max_kind;
      gla::Enumeration e = gla::enumerate_analysis(data, options);
      if (format == "json")
        std::cout << gla::to_json(e).dump(2) << "\n";
      else if (format == "csv")
        std::cout << gla::to_csv(e);
      else if (quiet) {
        for (const auto& d : e.rows)
          std::cout << gla::characteristic_string(d.coeffs) << " kind=" << d.kind
                    << " einstein=" << (d.einstein ? "yes" : "no") << " type="
                    << gla::format_eigenvalue_type(d.eigenvalue_type) << "\n";
      } else
        std::cout << gla::to_text(e);
      return 0;
    }

    if (table->parsed()) {
      auto rows = gla::paper_table();
      if (format == "json")
        std::cout << gla::paper_table_json(rows).dump(2) << "\n";
      else if (format == "csv")
        std::cout << gla::paper_table_csv(rows);
      else
        std::cout << gla::to_text(rows);
      return 0;
    }

    if (oracle->parsed()) {
      std::vector<int> blocks = parse_blocks(blocks_arg);
      long long sum = 0;
      for (int b : blocks) sum += b;
      if (sum != oracle_n)
        throw std::invalid_argument("blocks do not partition n");
      if (oracle_n > max_n)
        throw std::invalid_argument("n exceeds the configured bound " +
                                    std::to_string(max_n));
      gla::OracleReport rep = gla::oracle_check(blocks);
      if (format == "json")
        std::cout << gla::to_json(rep).dump(2) << "\n";
      else if (format == "csv")
        std::cout << gla::to_csv(rep);
      else if (quiet)
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
      else
        std::cout << gla::to_text(rep);
      return rep.pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

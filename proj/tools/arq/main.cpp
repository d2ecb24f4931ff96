#include "arq/catalog.hpp"
#include "arq/report.hpp"
#include "arq/vg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using arq::Arrangement;
using arq::QVector;
using arq::Rational;

// Text format: first line `d n`, then d rows of n rationals; the columns
// of the matrix are the normals. JSON format: {"normals": [...]} with one
// row of d rational strings per normal.
Arrangement parse_text(const std::string& content) {
  std::istringstream in(content);
  std::size_t d = 0, n = 0;
  if (!(in >> d >> n) || d == 0 || n == 0)
    throw std::invalid_argument("input: first line must be `d n` with both positive");
  std::vector<QVector> normals(n, QVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw std::invalid_argument("input: expected " + std::to_string(d * n) +
                                    " matrix entries");
      normals[j][i] = arq::parse_rational(tok);
    }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("input: trailing content '" + extra + "'");
  return Arrangement(normals);
}

Arrangement parse_json_input(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("input: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("normals") || !j.at("normals").is_array())
    throw std::invalid_argument("input: JSON must be an object with a \"normals\" array");
  std::vector<QVector> normals;
  for (const nlohmann::json& row : j.at("normals")) {
    QVector v;
    for (const nlohmann::json& entry : row) {
      if (entry.is_string())
        v.push_back(arq::parse_rational(entry.get<std::string>()));
      else if (entry.is_number_integer())
        v.push_back(Rational(entry.get<long long>()));
      else
        throw std::invalid_argument("input: normal entries must be rational strings");
    }
    normals.push_back(std::move(v));
  }
  return Arrangement(normals);
}

Arrangement load_input(const std::string& input) {
  if (!std::filesystem::exists(input)) {
    try {
      return arq::catalog_get(input);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("input '" + input +
                                  "' is neither a file nor a catalog name (" + e.what() + ")");
    }
  }
  std::ifstream f(input);
  if (!f) throw std::invalid_argument("input: cannot read '" + input + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string content = buf.str();
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("input: empty file");
  return content[first] == '{' ? parse_json_input(content) : parse_text(content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of central rational hyperplane arrangements"};
  app.require_subcommand(1);

  std::string input;
  std::string field = "q";
  std::string cas_path;
  bool want_sigma_chain = false;
  bool want_json = false;
  std::size_t export_k = 0;
  arq::Caps caps;

  CLI::App* an = app.add_subcommand("analyze", "full analysis of one arrangement");
  an->add_option("input", input, "catalog name (see `list`) or input file path")->required();
  an->add_option("--field", field, "coefficient field: q or fp:<prime> (default q)");
  an->add_flag("--sigma-chain", want_sigma_chain,
               "compute the full sigma chain, not just sigma_2 (costlier)");
  an->add_flag("--json", want_json, "emit the JSON report instead of text");
  an->add_option("--export-cas", cas_path,
                 "write the ideal presentation, pasteable into a computer-algebra system");
  an->add_option("--export-k", export_k,
                 "ideal level for --export-cas, 1..rank (default: rank)");
  an->add_option("--node-cap", caps.node_cap, "search/elimination work limit");
  an->add_option("--chamber-cap", caps.chamber_cap, "maximum number of chambers");

  CLI::App* be = app.add_subcommand("bench", "time sigma_2, chambers, and the vg verdict");
  be->add_option("name", input, "catalog name")->required();
  be->add_flag("--json", want_json, "emit JSON instead of text");
  be->add_option("--node-cap", caps.node_cap, "search/elimination work limit");
  be->add_option("--chamber-cap", caps.chamber_cap, "maximum number of chambers");

  CLI::App* li = app.add_subcommand("list", "list the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (li->parsed()) {
      for (const arq::CatalogEntry& e : arq::catalog_entries()) {
        std::string head = e.name;
        if (!e.params.empty()) head += "(" + e.params + ")";
        std::cout << head << std::string(head.size() < 24 ? 24 - head.size() : 1, ' ')
                  << e.note << "\n";
      }
      return 0;
    }
    if (be->parsed()) {
      const arq::BenchReport rep = arq::bench(input, caps);
      std::cout << (want_json ? arq::to_json(rep) : arq::to_text(rep));
      return 0;
    }

    const Arrangement arr = load_input(input);
    arq::AnalyzeOptions opts;
    opts.field = arq::FieldSpec::parse(field);
    opts.sigma_chain = want_sigma_chain;
    opts.caps = caps;
    const arq::AnalysisReport rep = arq::analyze(arr, opts);
    if (!cas_path.empty()) {
      const std::size_t k = export_k == 0 ? arr.rank() : export_k;
      if (k < 1 || k > arr.rank())
        throw std::invalid_argument("--export-k must lie in 1..rank");
      std::ofstream out(cas_path);
      if (!out) throw std::invalid_argument("cannot write '" + cas_path + "'");
      out << arq::export_presentation(arr, k);
    }
    std::cout << (want_json ? arq::to_json(rep) : arq::to_text(rep));
    return 0;
  } catch (const arq::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

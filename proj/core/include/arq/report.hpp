#pragma once

// One-stop analysis of an arrangement: every verdict the library can
// produce, with per-stage timings. The report enforces the implications
// the verdicts must satisfy (vg_quadratic equals yoshinaga, a quadratic
// Cordovil ideal forces yoshinaga, yoshinaga forces formality); a
// violation means a library bug and analysis throws rather than report
// inconsistent results.
//
// JSON layout (schema 1): counts as numbers, rationals and big integers
// as strings, timings under "timings_ms" as [stage, milliseconds] pairs.
// Serialization is deterministic: identical reports give byte-identical
// text, and timings are the only field that varies between runs on the
// same input.

#include "arq/arrangement.hpp"
#include "arq/caps.hpp"
#include "arq/cordovil.hpp"
#include "arq/field.hpp"
#include "arq/formality.hpp"
#include "arq/matroid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arq {

struct AnalyzeOptions {
  FieldSpec field = FieldSpec::rational();
  bool sigma_chain = false;  // compute every sigma_k, not just sigma_2
  Caps caps;
};

struct StageTiming {
  std::string stage;
  double ms = 0;
  bool operator==(const StageTiming&) const = default;
};

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::optional<std::vector<std::uint64_t>> sigma_chain;  // sigma_1..sigma_rank
  std::uint64_t chamber_count = 0;
  bool yoshinaga = false;
  bool vg_quadratic = false;
  CordovilReport cordovil;
  ChordalityResult chordal;
  FormalityResult formal;
  std::vector<Int> characteristic_polynomial;  // t^rank down to t^0
  std::vector<StageTiming> timings_ms;         // in execution order

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const Arrangement& arr, const AnalyzeOptions& opts = {});

// Timings for the three headline computations on a catalog arrangement.
struct BenchReport {
  std::string name;
  std::uint64_t sigma2 = 0;
  std::uint64_t chamber_count = 0;
  bool vg_quadratic = false;
  std::vector<StageTiming> timings_ms;
};

BenchReport bench(const std::string& catalog_name, const Caps& caps = {});

std::string to_json(const AnalysisReport& rep);
AnalysisReport analysis_report_from_json(const std::string& text);

std::string to_json(const BenchReport& rep);

std::string to_text(const AnalysisReport& rep);
std::string to_text(const BenchReport& rep);

}  // namespace arq

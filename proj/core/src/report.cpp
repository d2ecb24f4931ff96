#include "arq/report.hpp"

#include "arq/catalog.hpp"
#include "arq/signgeo.hpp"
#include "arq/vg.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace arq {

namespace {

using nlohmann::json;

class StageTimer {
 public:
  explicit StageTimer(std::vector<StageTiming>& out) : out_(out) {}

  template <typename F>
  auto run(const char* stage, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
      f();
      out_.push_back({stage, elapsed(t0)});
    } else {
      auto v = f();
      out_.push_back({stage, elapsed(t0)});
      return v;
    }
  }

 private:
  static double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  std::vector<StageTiming>& out_;
};

json timings_json(const std::vector<StageTiming>& ts) {
  json arr = json::array();
  for (const StageTiming& t : ts) arr.push_back(json::array({t.stage, t.ms}));
  return arr;
}

std::vector<StageTiming> timings_from_json(const json& arr) {
  std::vector<StageTiming> out;
  for (const json& t : arr) out.push_back({t.at(0).get<std::string>(), t.at(1).get<double>()});
  return out;
}

std::string poly_string(const std::vector<Int>& cs) {
  std::string out;
  const std::size_t r = cs.size() - 1;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    const bool neg = cs[i] < 0;
    const Int a = neg ? Int(-cs[i]) : cs[i];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::size_t p = r - i;
    const bool unit = a == 1 && p > 0;
    if (!unit) out += a.str();
    if (p > 0) {
      if (!unit) out += "*";
      out += "t";
      if (p > 1) out += "^" + std::to_string(p);
    }
  }
  return out.empty() ? "0" : out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string ms_str(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

AnalysisReport analyze(const Arrangement& arr, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.n = arr.size();
  rep.rank = arr.rank();
  StageTimer timer(rep.timings_ms);

  timer.run("matroid", [&] {
    rep.characteristic_polynomial = characteristic_polynomial(arr);
    rep.chordal = is_chordal(arr);
  });
  rep.chamber_count =
      timer.run("chambers", [&] { return enumerate_chambers(arr, opts.caps).size(); });
  const std::uint64_t sigma2 = timer.run("sigma", [&] {
    if (opts.sigma_chain) {
      rep.sigma_chain = sigma_chain(arr, opts.caps).sigma;
      return rep.sigma_chain->size() >= 2 ? (*rep.sigma_chain)[1] : rep.chamber_count;
    }
    return count_sigma(arr, 2, opts.caps);
  });
  rep.yoshinaga = sigma2 == rep.chamber_count;
  timer.run("vg", [&] {
    const std::uint64_t d2 = dim_vg_k(arr, 2, opts.field, opts.caps);
    const std::uint64_t dr = dim_vg_k(arr, rep.rank, opts.field, opts.caps);
    rep.vg_quadratic = d2 == dr;
  });
  rep.cordovil =
      timer.run("cordovil", [&] { return cordovil_report(arr, opts.field, opts.caps); });
  rep.formal = timer.run("formality", [&] { return is_formal(arr); });

  if (rep.vg_quadratic != rep.yoshinaga)
    throw std::logic_error("analysis invariant violated: vg_quadratic must equal yoshinaga");
  if (rep.cordovil.quadratic && !rep.yoshinaga)
    throw std::logic_error(
        "analysis invariant violated: quadratic Cordovil ideal without yoshinaga");
  if (rep.yoshinaga && !rep.formal.formal)
    throw std::logic_error("analysis invariant violated: yoshinaga without formality");
  return rep;
}

BenchReport bench(const std::string& catalog_name, const Caps& caps) {
  const Arrangement arr = catalog_get(catalog_name);
  BenchReport b;
  b.name = catalog_name;
  StageTimer timer(b.timings_ms);
  b.sigma2 = timer.run("sigma2", [&] { return count_sigma(arr, 2, caps); });
  b.chamber_count =
      timer.run("chambers", [&] { return enumerate_chambers(arr, caps).size(); });
  b.vg_quadratic = timer.run("vg_verdict",
                             [&] { return is_vg_quadratic(arr, FieldSpec::rational(), caps); });
  return b;
}

std::string to_json(const AnalysisReport& rep) {
  json j;
  j["schema"] = 1;
  j["n"] = rep.n;
  j["rank"] = rep.rank;
  if (rep.sigma_chain) j["sigma_chain"] = *rep.sigma_chain;
  j["chamber_count"] = rep.chamber_count;
  j["yoshinaga"] = rep.yoshinaga;
  j["vg_quadratic"] = rep.vg_quadratic;

  json cord;
  cord["dims_quadratic"] = rep.cordovil.dims_quadratic;
  cord["dims_full"] = rep.cordovil.dims_full;
  cord["hilbert"] = rep.cordovil.hilbert;
  cord["quadratic"] = rep.cordovil.quadratic;
  cord["min_generator_degrees"] = rep.cordovil.min_generator_degrees;
  cord["field"] = rep.cordovil.field.str();
  j["cordovil"] = std::move(cord);

  json chordal;
  chordal["verdict"] = rep.chordal.chordal;
  if (rep.chordal.witness) {
    json w;
    w["support"] = rep.chordal.witness->support;
    w["positive"] = rep.chordal.witness->positive;
    w["elements"] = rep.chordal.witness->elements;
    chordal["witness"] = std::move(w);
  } else {
    chordal["witness"] = nullptr;
  }
  j["chordal"] = std::move(chordal);

  j["formal"] = json{{"verdict", rep.formal.formal}, {"defect", rep.formal.defect}};

  json chi = json::array();
  for (const Int& c : rep.characteristic_polynomial) chi.push_back(c.str());
  j["characteristic_polynomial"] = std::move(chi);

  j["timings_ms"] = timings_json(rep.timings_ms);
  return j.dump(2) + "\n";
}

AnalysisReport analysis_report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
      throw std::invalid_argument("report: unsupported schema");
    AnalysisReport rep;
    rep.n = j.at("n").get<std::size_t>();
    rep.rank = j.at("rank").get<std::size_t>();
    if (j.contains("sigma_chain"))
      rep.sigma_chain = j.at("sigma_chain").get<std::vector<std::uint64_t>>();
    rep.chamber_count = j.at("chamber_count").get<std::uint64_t>();
    rep.yoshinaga = j.at("yoshinaga").get<bool>();
    rep.vg_quadratic = j.at("vg_quadratic").get<bool>();

    const json& cord = j.at("cordovil");
    rep.cordovil.dims_quadratic = cord.at("dims_quadratic").get<std::vector<std::uint64_t>>();
    rep.cordovil.dims_full = cord.at("dims_full").get<std::vector<std::uint64_t>>();
    rep.cordovil.hilbert = cord.at("hilbert").get<std::vector<std::uint64_t>>();
    rep.cordovil.quadratic = cord.at("quadratic").get<bool>();
    rep.cordovil.min_generator_degrees =
        cord.at("min_generator_degrees").get<std::vector<std::size_t>>();
    rep.cordovil.field = FieldSpec::parse(cord.at("field").get<std::string>());

    const json& chordal = j.at("chordal");
    rep.chordal.chordal = chordal.at("verdict").get<bool>();
    if (!chordal.at("witness").is_null()) {
      SignedCircuit w;
      w.support = chordal.at("witness").at("support").get<std::uint64_t>();
      w.positive = chordal.at("witness").at("positive").get<std::uint64_t>();
      w.elements = chordal.at("witness").at("elements").get<std::vector<std::size_t>>();
      rep.chordal.witness = std::move(w);
    }

    rep.formal.formal = j.at("formal").at("verdict").get<bool>();
    rep.formal.defect = j.at("formal").at("defect").get<std::size_t>();

    for (const json& c : j.at("characteristic_polynomial"))
      rep.characteristic_polynomial.emplace_back(c.get<std::string>());

    rep.timings_ms = timings_from_json(j.at("timings_ms"));
    return rep;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed JSON: ") + e.what());
  }
}

std::string to_json(const BenchReport& rep) {
  json j;
  j["schema"] = 1;
  j["bench"] = rep.name;
  j["sigma2"] = rep.sigma2;
  j["chamber_count"] = rep.chamber_count;
  j["vg_quadratic"] = rep.vg_quadratic;
  j["timings_ms"] = timings_json(rep.timings_ms);
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& rep) {
  std::string out;
  out += "n: " + std::to_string(rep.n) + "\n";
  out += "rank: " + std::to_string(rep.rank) + "\n";
  out += "chamber count: " + std::to_string(rep.chamber_count) + "\n";
  out += "characteristic polynomial: " + poly_string(rep.characteristic_polynomial) + "\n";
  if (rep.sigma_chain) {
    out += "sigma chain:";
    for (const std::uint64_t s : *rep.sigma_chain) out += " " + std::to_string(s);
    out += "\n";
  }
  out += "yoshinaga: " + std::string(bool_str(rep.yoshinaga)) + "\n";
  out += "vg quadratic: " + std::string(bool_str(rep.vg_quadratic)) + "\n";
  out += "cordovil quadratic (over " + rep.cordovil.field.str() +
         "): " + bool_str(rep.cordovil.quadratic) + "\n";
  out += "cordovil hilbert:";
  for (const std::uint64_t h : rep.cordovil.hilbert) out += " " + std::to_string(h);
  out += "\n";
  out += "cordovil min generator degrees:";
  if (rep.cordovil.min_generator_degrees.empty()) out += " none";
  for (const std::size_t d : rep.cordovil.min_generator_degrees)
    out += " " + std::to_string(d);
  out += "\n";
  out += "chordal: " + std::string(bool_str(rep.chordal.chordal));
  if (rep.chordal.witness) {
    out += ", unsplit circuit {";
    bool first = true;
    for (const std::size_t e : rep.chordal.witness->elements) {
      if (!first) out += ", ";
      out += std::to_string(e);
      first = false;
    }
    out += "}";
  }
  out += "\n";
  out += "formal: " + std::string(bool_str(rep.formal.formal)) + " (defect " +
         std::to_string(rep.formal.defect) + ")\n";
  out += "timings (ms):";
  for (const StageTiming& t : rep.timings_ms) out += " " + t.stage + "=" + ms_str(t.ms);
  out += "\n";
  return out;
}

std::string to_text(const BenchReport& rep) {
  std::string out = "bench: " + rep.name + "\n";
  const char* names[] = {"sigma_2", "chambers", "vg quadratic"};
  const std::string values[] = {std::to_string(rep.sigma2), std::to_string(rep.chamber_count),
                                bool_str(rep.vg_quadratic)};
  for (std::size_t i = 0; i < 3 && i < rep.timings_ms.size(); ++i)
    out += std::string(names[i]) + " = " + values[i] + " (" + ms_str(rep.timings_ms[i].ms) +
           " ms)\n";
  return out;
}

}  // namespace arq

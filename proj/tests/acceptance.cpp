// End-to-end acceptance checks. Each criterion prints exactly one
// [PASS]/[FAIL] line; the process exits nonzero when anything failed.

#include "arq/catalog.hpp"
#include "arq/cone.hpp"
#include "arq/cordovil.hpp"
#include "arq/formality.hpp"
#include "arq/matroid.hpp"
#include "arq/report.hpp"
#include "arq/signgeo.hpp"
#include "arq/vg.hpp"
#include "oracle.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace arq;

namespace {

struct Checks {
  std::vector<std::string> bad;

  void expect(bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  }
  bool ok() const { return bad.empty(); }
  std::string detail() const {
    std::string out;
    for (const std::string& b : bad) out += (out.empty() ? "" : "; ") + b;
    return out;
  }
};

int g_failures = 0;

void report_line(int idx, const std::string& what, const Checks& ck) {
  std::cout << (ck.ok() ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what;
  if (!ck.ok()) std::cout << " -- " << ck.detail();
  std::cout << "\n" << std::flush;
  if (!ck.ok()) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t zaslavsky(const Arrangement& a) {
  const Int chi = test::eval_poly(test::whitney_characteristic(a), Int(-1));
  const Int count = a.rank() % 2 ? -chi : chi;
  return static_cast<std::uint64_t>(count);
}

void criterion1() {
  Checks ck;
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep = analyze(catalog_get("remark13"));
  const double dt = seconds_since(t0);
  ck.expect(rep.n == 20 && rep.rank == 4, "shape must be n=20 rank=4");
  ck.expect(!rep.yoshinaga, "yoshinaga must be false");
  ck.expect(!rep.vg_quadratic, "vg quadraticity must be false");
  ck.expect(rep.chamber_count == 2266, "chamber count must be 2266");
  ck.expect(dt <= 60.0, "analysis must finish within 60s");
  std::ostringstream label;
  label << "remark13 analyzed, sigma_2 above the chamber count ("
        << static_cast<int>(dt * 1000) << " ms)";
  report_line(1, label.str(), ck);
}

void criterion2() {
  Checks ck;
  Arrangement d4 = catalog_get("d4");
  AnalysisReport rep = analyze(d4);
  ck.expect(rep.yoshinaga, "yoshinaga must be true");
  ck.expect(!rep.cordovil.quadratic, "the cone ideal must not be quadratic");
  ck.expect(rep.cordovil.min_generator_degrees == std::vector<std::size_t>{2, 4},
            "minimal generator degrees must be exactly {2, 4}");
  ck.expect(rep.chamber_count == 192, "chamber count must be 192");
  ck.expect(zaslavsky(d4) == 192, "Zaslavsky evaluation must give 192");
  report_line(2, "d4 passes the sigma test yet its cone ideal needs a quartic", ck);
}

void criterion3() {
  Checks ck;
  Arrangement x2 = catalog_get("x2");
  AnalysisReport rep = analyze(x2);
  ck.expect(rep.yoshinaga, "yoshinaga must be true");
  ck.expect(!rep.chordal.chordal, "matroid must not be chordal");
  std::map<std::size_t, int> census;
  for (const SignedCircuit& c : circuits(x2)) ++census[c.size()];
  ck.expect(census[3] == 5 && census[4] == 15 && census.size() == 2,
            "circuit census must be 5 of size 3 and 15 of size 4");
  ck.expect(rep.cordovil.quadratic, "cone ideal must be quadratic");
  ck.expect(rep.formal.formal, "must be formal");
  report_line(3, "x2 separates chordality from the quadratic properties", ck);
}

void criterion4() {
  Checks ck;
  for (const char* spec : {"er(-1)", "er(0)", "er(1)"}) {
    Arrangement a = catalog_get(spec);
    AnalysisReport rep = analyze(a);
    ck.expect(rep.vg_quadratic, std::string(spec) + ": vg quadraticity must be true");
    ck.expect(rep.yoshinaga, std::string(spec) + ": yoshinaga must be true");
    ck.expect(rep.cordovil.quadratic,
              std::string(spec) + ": cone ideal must be quadratic");
    // the verdict must survive the literal-generator route
    for (std::size_t k = 2; k <= a.rank(); ++k)
      ck.expect(graded_ideal_dims(a, k) == graded_ideal_dims_literal(a, k),
                std::string(spec) + ": circuit and literal ideals must agree");
  }
  report_line(4, "er family at t in {-1, 0, 1} is quadratic on every route", ck);
}

void criterion5() {
  Checks ck;
  AnalysisReport rep = analyze(catalog_get("bracelet"));
  ck.expect(rep.vg_quadratic, "vg quadraticity must be true");
  ck.expect(rep.yoshinaga, "yoshinaga must be true");
  report_line(5, "bracelet passes the quadraticity test", ck);
}

void criterion6() {
  Checks ck;
  const auto t0 = std::chrono::steady_clock::now();
  const bool vg = is_vg_quadratic(catalog_get("primegap6"));
  const double dt = seconds_since(t0);
  ck.expect(!vg, "vg quadraticity must be false");
  ck.expect(dt <= 120.0, "verdict must arrive within 120s");
  std::ostringstream label;
  label << "primegap6 fails the quadraticity test ("
        << static_cast<int>(dt * 1000) << " ms)";
  report_line(6, label.str(), ck);
}

void criterion7() {
  Checks ck;
  Arrangement special = catalog_get("ziegler(special)");
  Arrangement general = catalog_get("ziegler(general)");
  ck.expect(circuits(special) == circuits(general),
            "the pair must have identical signed circuits");
  ck.expect(!is_formal(special).formal, "special position must not be formal");
  ck.expect(is_formal(general).formal, "general position must be formal");
  ck.expect(!cordovil_quadratic_verdict(special),
            "special: cone ideal must not be quadratic");
  ck.expect(!cordovil_quadratic_verdict(general),
            "general: cone ideal must not be quadratic");
  report_line(7, "ziegler pair: same matroid, formality differs", ck);
}

void criterion8() {
  Checks ck;
  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<std::size_t> nd(3, 10), dd(2, 4);
  const int instances = 200;
  int sigma_checks = 0;
  for (int trial = 0; trial < instances; ++trial) {
    Arrangement a = test::random_arrangement(rng, nd(rng), dd(rng));
    const std::string tag = "instance " + std::to_string(trial);

    for (std::size_t k = 1; k <= a.rank(); ++k, ++sigma_checks)
      ck.expect(count_sigma(a, k) == test::brute_sigma(a, k),
                tag + ": sigma_" + std::to_string(k) + " differs from brute force");

    const ChamberSet cs = enumerate_chambers(a);
    ck.expect(cs.size() == zaslavsky(a), tag + ": chambers must match Zaslavsky");
    for (const Chamber& c : cs.chambers)
      for (std::size_t h = 0; h < a.size(); ++h)
        if (sign_of(dot(a.normal(h), c.witness)) != c.sign.at(h)) {
          ck.expect(false, tag + ": chamber witness fails its sign pattern");
          break;
        }

    const std::vector<std::uint64_t> hilbert = hilbert_series(a);
    ck.expect(hilbert == test::whitney_numbers(a),
              tag + ": quotient dimensions must equal the Whitney numbers");
    std::uint64_t total = 0;
    for (std::uint64_t h : hilbert) total += h;
    ck.expect(total == cs.size(), tag + ": total quotient dimension != chambers");

    // feasibility certificates on a few arbitrary sign patterns, through
    // both presentations of the cone
    for (int probe = 0; probe < 3; ++probe) {
      const std::uint64_t eps = rng() & a.full_mask();
      std::vector<QVector> normals;
      std::vector<int> signs;
      std::vector<ZVector> rows;
      for (std::size_t i = 0; i < a.size(); ++i) {
        normals.push_back(a.normal(i));
        const int s = (eps >> i) & 1 ? +1 : -1;
        signs.push_back(s);
        ZVector b = a.primitive(i);
        if (s < 0)
          for (Int& z : b) z = -z;
        rows.push_back(std::move(b));
      }
      const FeasibilityAnswer direct = strict_cone_feasible(normals, signs);
      ck.expect(verify_answer(normals, signs, direct),
                tag + ": feasibility certificate must verify");
      const FeasibilityAnswer masked = strict_cone_feasible(a, a.full_mask(), eps);
      ck.expect(masked.feasible == direct.feasible,
                tag + ": cone presentations must agree");
      ck.expect(verify_answer(rows, a.dim(), masked),
                tag + ": row certificate must verify");
    }
  }
  std::ostringstream label;
  label << instances << " random arrangements: sigma counts (" << sigma_checks
        << " comparisons), chambers, quotient dimensions, certificates";
  report_line(8, label.str(), ck);
}

void criterion9() {
  Checks ck;
  const auto verdicts = [&ck](const Arrangement& a, const std::string& tag) {
    const bool yosh = yoshinaga(a);
    const bool vg = is_vg_quadratic(a);
    const bool cordovil = cordovil_quadratic_verdict(a);
    const bool formal = is_formal(a).formal;
    const bool chordal = is_chordal(a).chordal;
    ck.expect(!cordovil || yosh, tag + ": quadratic cone ideal must imply yoshinaga");
    ck.expect(yosh == vg, tag + ": yoshinaga and vg quadraticity must coincide");
    ck.expect(!yosh || formal, tag + ": yoshinaga must imply formal");
    ck.expect(!chordal || yosh, tag + ": chordal must imply yoshinaga");
    return std::tuple(chordal, yosh, formal);
  };

  for (const char* spec :
       {"remark13", "x2", "bracelet", "er(-1)", "er(0)", "er(1)", "er(2)", "er(1/2)",
        "d4", "primegap6", "boolean(3)", "boolean(5)", "braid(3)", "braid(4)",
        "braid(5)", "typeD(3)", "typeD(5)", "ziegler(special)", "ziegler(general)"})
    verdicts(catalog_get(spec), spec);

  std::mt19937_64 rng(77200819);
  std::uniform_int_distribution<std::size_t> nd(3, 8), dd(2, 4);
  for (int trial = 0; trial < 60; ++trial)
    verdicts(test::random_arrangement(rng, nd(rng), dd(rng)),
             "random " + std::to_string(trial));

  // graphic arrangements: chordality, the sigma test, and formality are one
  // property, and matroid chordality is graph chordality
  std::uniform_int_distribution<int> vtx(3, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = vtx(rng);
    std::uniform_int_distribution<int> cnt(3, v * (v - 1) / 2);
    const auto edges = test::random_graph(rng, v, cnt(rng));
    std::string params;
    for (const auto& [x, y] : edges)
      params += (params.empty() ? "" : ",") + std::to_string(x) + "-" + std::to_string(y);
    const std::string tag = "graphic(" + params + ")";
    Arrangement arr = catalog_get(tag);
    const auto [chordal, yosh, formal] = verdicts(arr, tag);
    ck.expect(chordal == yosh && yosh == formal,
              tag + ": chordal, yoshinaga, formal must coincide");
    ck.expect(chordal == test::graph_chordal(v, edges),
              tag + ": matroid chordality must equal graph chordality");
  }
  report_line(9, "implication lattice holds on the catalog and random corpora", ck);
}

void criterion10() {
  Checks ck;
  const std::vector<FieldSpec> fields{FieldSpec::rational(), FieldSpec::prime(2),
                                      FieldSpec::prime(3), FieldSpec::prime(5)};
  for (const char* spec :
       {"remark13", "x2", "bracelet", "er(-1)", "er(0)", "er(1)", "d4", "primegap6",
        "boolean(4)", "braid(4)", "typeD(5)", "ziegler(special)", "ziegler(general)"}) {
    Arrangement a = catalog_get(spec);
    for (std::size_t k : {std::size_t(2), a.rank()}) {
      const std::uint64_t over_q = dim_vg_k(a, k, fields[0]);
      for (std::size_t f = 1; f < fields.size(); ++f)
        ck.expect(dim_vg_k(a, k, fields[f]) == over_q,
                  std::string(spec) + ": dimension at k=" + std::to_string(k) +
                      " must not depend on the field");
    }
  }
  report_line(10, "quotient dimensions agree over q, fp:2, fp:3, fp:5", ck);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES above")
            << " (" << static_cast<int>(seconds_since(t0)) << " s total)\n";
  return g_failures == 0 ? 0 : 1;
}

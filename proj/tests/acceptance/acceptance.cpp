// Acceptance suite. Runs every criterion once, writes one JSON report per
// criterion, then runs criteria 1-9 again with a different thread count and
// compares the reports byte for byte.
//
//   sptok_acceptance [--out DIR] [--only 1,2,...] [--threads A,B]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "golden.hpp"
#include "oracles.hpp"
#include "sptok/bijections.hpp"
#include "sptok/identities.hpp"
#include "sptok/io.hpp"
#include "sptok/weights.hpp"

namespace {

using namespace sptok;
using io::json;

// Wall-clock limits in seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kSymbolicSuiteLimit = 600.0;
constexpr double kModularLimit = 900.0;
constexpr double kNoLimit = 0.0;

constexpr std::uint64_t kModularSeed = 42;
constexpr int kModularTrials = 20;
// ST^(9,7,6,2,1)(5) has 19 781 353 800 elements, all of which are streamed.
constexpr std::uint64_t kModularStreamCap = 30'000'000'000ULL;

struct Outcome {
  bool pass = true;
  json report = json::object();

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      report["failures"].push_back(what);
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit;
  std::function<Outcome(unsigned threads)> run;
};

// (n, max |mu|) pairs of the symbolic suite
const std::vector<std::pair<int, int>> kSuite = {{1, 4}, {2, 4}, {3, 2}};

std::vector<std::pair<int, StrictPartition>> suite_shapes() {
  std::vector<std::pair<int, StrictPartition>> out;
  for (const auto& [n, w] : kSuite)
    for (const auto& mu : partitions_up_to(n, w)) out.emplace_back(n, add_staircase(mu, n));
  return out;
}

json shape_json(int n, const StrictPartition& lambda) { return json{{"n", n}, {"lambda", lambda.parts()}}; }

LaurentPoly var(VarId v, int e = 1) { return LaurentPoly::variable(v, e); }

Outcome golden_weights(unsigned) {
  Outcome o;
  const LaurentPoly want = golden::weight();
  const LaurentPoly st = wgt_ST(golden::st());
  const LaurentPoly cpm = wgt_cpm(golden::uasm(), WeightScheme::CPM_XY);
  const LaurentPoly gt = wgt_gtp(golden::gtp(), WeightScheme::GT_XY);
  o.require(st == want, "wgt_ST differs from the worked weight");
  o.require(cpm == want, "wgt_cpm(CPM_XY) differs from the worked weight");
  o.require(gt == want, "wgt_gtp(GT_XY) differs from the worked weight");
  o.report["expected"] = to_string(want);
  o.report["wgt_ST"] = to_string(st);
  o.report["wgt_cpm"] = to_string(cpm);
  o.report["wgt_gtp"] = to_string(gt);
  return o;
}

Outcome golden_statistics(unsigned) {
  Outcome o;
  const GTStatistics s = gt_statistics(golden::gtp());
  o.require(s.B == 7, "B != 7");
  o.require(s.R_o == 2, "R_o != 2");
  o.require(s.L_e == 5, "L_e != 5");
  o.require(s.x_exponents == std::vector<int>{0, 1, 0, -4, 0}, "monomial is not x2 x4^-4");
  const LaurentPoly want = (LaurentPoly(1) + var(VarId::q())).pow(7) * var(VarId::q(), 7) * var(VarId::x(2)) *
                           var(VarId::x(4), -4);
  const LaurentPoly got = wgt_gtp(golden::gtp(), WeightScheme::GT_QX);
  o.require(got == want, "qxwgt differs from (1+q)^7 q^7 x2 x4^-4");
  o.report["B"] = s.B;
  o.report["R_o"] = s.R_o;
  o.report["L_e"] = s.L_e;
  o.report["xExponents"] = s.x_exponents;
  o.report["qxwgt"] = qx_factored(s);
  return o;
}

Outcome golden_bijections(unsigned) {
  Outcome o;
  const UTurnASM a = golden::uasm();
  o.require(uasm_to_st(a) == golden::st(), "uasm_to_st differs from the worked ST");
  o.require(uasm_to_gtp(a) == golden::gtp(), "uasm_to_gtp differs from the worked GT");
  const CompassPointMatrix c = uasm_to_cpm(a), want = golden::cpm();
  int matched = 0;
  for (std::size_t i = 0; i < want.rows.size(); ++i)
    for (std::size_t j = 0; j < want.rows[i].size(); ++j)
      matched += i < c.rows.size() && j < c.rows[i].size() && c.rows[i][j] == want.rows[i][j];
  o.require(matched == 90, "only " + std::to_string(matched) + " of 90 CPM entries match");
  o.require(st_to_uasm(golden::st()) == a, "st_to_uasm does not invert");
  o.report["cpmEntriesMatched"] = matched;
  o.report["st"] = io::to_json(uasm_to_st(a));
  o.report["gtp"] = io::to_json(uasm_to_gtp(a));
  return o;
}

Outcome symbolic_suite(unsigned threads) {
  Outcome o;
  json reports = json::array();
  auto run = [&](IdentityId id, const VerifyOptions& opts) {
    for (const auto& [n, w] : kSuite)
      for (const auto& r : verify_sweep(id, n, w, opts, threads)) {
        o.require(r.equal, std::string(to_string(id)) + " fails at n=" + std::to_string(n) + " mu=" + to_string(r.mu));
        reports.push_back(io::to_json(r, false));
      }
  };
  for (IdentityId id : all_identities()) run(id, {});
  VerifyOptions norm;
  norm.variants.cpm_q = CpmQWeighting::Normalised;
  run(IdentityId::COR_UASM_Q, norm);
  o.report["checks"] = reports.size();
  o.report["reports"] = std::move(reports);
  return o;
}

Outcome bijection_suite(unsigned) {
  Outcome o;
  json shapes = json::array();
  int brute_force_cases = 0;
  for (const auto& [n, lambda] : suite_shapes()) {
    const auto sts = enumerate_shifted_tableaux(lambda, n);
    const auto as = enumerate_uasm(lambda, n);
    const auto gs = enumerate_gtp(lambda, n);
    const std::string where = to_string(lambda) + " n=" + std::to_string(n);
    o.require(sts.size() == as.size() && sts.size() == gs.size(), "cardinalities differ at " + where);
    bool round_trips = true, triangle = true;
    for (const auto& st : sts) {
      const UTurnASM a = st_to_uasm(st);
      const SympGTPattern g = st_to_gtp(st);
      round_trips = round_trips && uasm_to_st(a) == st && gtp_to_st(g) == st && cpm_to_uasm(uasm_to_cpm(a)) == a;
      triangle = triangle && uasm_to_gtp(a) == g && gtp_to_uasm(g) == a;
    }
    for (const auto& a : as) round_trips = round_trips && st_to_uasm(uasm_to_st(a)) == a;
    for (const auto& g : gs) round_trips = round_trips && st_to_gtp(gtp_to_st(g)) == g;
    o.require(round_trips, "round trip broken at " + where);
    o.require(triangle, "triangle does not commute at " + where);

    json s = shape_json(n, lambda);
    s["st"] = sts.size();
    s["uasm"] = as.size();
    s["gtp"] = gs.size();
    if (2 * n * lambda.breadth() <= 12) {
      std::set<std::vector<std::vector<int>>> generated, brute;
      for (const auto& a : as) generated.insert(a.a.to_rows());
      for (auto& m : oracle::uasms(lambda, n)) brute.insert(std::move(m));
      o.require(generated == brute, "brute-force UASM set differs at " + where);
      s["bruteForceUasm"] = brute.size();
      ++brute_force_cases;
    }
    shapes.push_back(std::move(s));
  }
  o.report["bruteForceCases"] = brute_force_cases;
  o.report["shapes"] = std::move(shapes);
  return o;
}

Outcome lemma_suite(unsigned) {
  Outcome o;
  std::uint64_t checked = 0;
  for (const auto& [n, lambda] : suite_shapes())
    for (const auto& a : enumerate_uasm(lambda, n)) {
      const LemmaReport r = lemma_counts(uasm_to_cpm(a));
      for (const auto& v : r.violations) o.require(false, to_string(lambda) + ": " + v);
      ++checked;
    }
  o.report["cpms"] = checked;
  return o;
}

Outcome weight_properties(unsigned) {
  Outcome o;
  json shapes = json::array();
  for (const auto& [n, lambda] : suite_shapes()) {
    std::map<VarId, Monomial> qsub, tscale;
    for (int k = 1; k <= n; ++k) {
      qsub[VarId::y(k)] = Monomial(VarId::q()) * Monomial(VarId::x(k));
      tscale[VarId::x(k)] = Monomial(VarId::t()) * Monomial(VarId::x(k));
      tscale[VarId::y(k)] = Monomial(VarId::t()) * Monomial(VarId::y(k));
    }
    const LaurentPoly c0 = (LaurentPoly(1) + var(VarId::q())).pow(n) * var(VarId::q(), -oracle::triangle(n));
    const LaurentPoly t_size = var(VarId::t(), lambda.size());

    // failures per property over this shape
    std::map<std::string, int> bad;
    for (const char* p : {"representations", "alternativeCpm", "primingSum", "tHomogeneity", "qSpecialisation",
                          "normalisedCpmTotal", "statisticsForm", "lemma"})
      bad[p] = 0;
    std::uint64_t objects = 0, primed = 0;
    LaurentPoly plain, norm;
    for (const auto& st : enumerate_shifted_tableaux(lambda, n)) {
      ++objects;
      const UTurnASM a = st_to_uasm(st);
      const SympGTPattern g = st_to_gtp(st);
      const LaurentPoly ws = wgt_ST(st);
      bad["representations"] += wgt_cpm(a, WeightScheme::CPM_XY) != ws || wgt_gtp(g, WeightScheme::GT_XY) != ws;
      bad["alternativeCpm"] += wgt_cpm(a, WeightScheme::CPM_XY_ALT) != wgt_cpm(a, WeightScheme::CPM_XY);
      LaurentPoly primed_sum;
      for (const auto& qt : primings(st)) {
        ++primed;
        const LaurentPoly plain_qt = wgt_QT(qt, false);
        primed_sum += plain_qt;
        bad["tHomogeneity"] += wgt_QT(qt, true).substitute(tscale) != t_size * plain_qt;
      }
      bad["primingSum"] += primed_sum != ws;
      const LaurentPoly wq = ws.substitute(qsub);
      bad["qSpecialisation"] += wgt_st_q(st) != wq || wgt_cpm(a, WeightScheme::CPM_Q_PLAIN) != wq ||
                                wgt_gtp(g, WeightScheme::GT_Q) != wq;
      bad["statisticsForm"] += c0 * wgt_gtp(g, WeightScheme::GT_QX) != wgt_gtp(g, WeightScheme::GT_Q);
      bad["lemma"] += !lemma_counts(uasm_to_cpm(a)).ok();
      plain += wgt_cpm(a, WeightScheme::CPM_Q_PLAIN);
      norm += wgt_cpm(a, WeightScheme::CPM_Q_NORM);
    }
    bad["normalisedCpmTotal"] += plain != norm;

    json s = shape_json(n, lambda);
    s["objects"] = objects;
    s["primedObjects"] = primed;
    s["failures"] = bad;
    for (const auto& [p, count] : bad)
      o.require(count == 0, p + " fails " + std::to_string(count) + " times at " + to_string(lambda));
    shapes.push_back(std::move(s));
  }
  o.report["shapes"] = std::move(shapes);
  return o;
}

Outcome ambiguities(unsigned threads) {
  Outcome o;
  json findings = json::array();
  std::map<std::pair<std::string, std::string>, bool> verdict;
  for (const auto& f : resolve_ambiguities(2, 2, threads)) {
    for (const auto& r : f.reports) o.require(r.mode == Mode::Symbolic, "finding not decided symbolically");
    verdict[{f.question, f.candidate}] = f.satisfies;
    findings.push_back(io::to_json(f, false));
  }
  auto expect = [&](const std::string& q, const std::string& c, bool want) {
    auto it = verdict.find({q, c});
    o.require(it != verdict.end(), "no finding for " + q + " = " + c);
    if (it != verdict.end())
      o.require(it->second == want, q + " = " + c + (want ? " does not satisfy" : " unexpectedly satisfies"));
  };
  expect("normalised CPM q-weighting constant", "(1+q)^n/q^(n(n+1)/2)", true);
  expect("normalised CPM q-weighting constant", "(1+q)/q^(n(n+1)/2)", false);
  expect("q-tableau weight neighbour", "below", true);
  o.report["findings"] = std::move(findings);
  return o;
}

Outcome modular_large(unsigned) {
  Outcome o;
  VerifyOptions opts;
  opts.mode = Mode::Modular;
  opts.trials = kModularTrials;
  opts.seed = kModularSeed;
  opts.prime = PrimeField::kDefaultPrime;
  opts.stream_cap = kModularStreamCap;
  opts.accumulation = Accumulation::Streamed;
  const VerificationReport r = verify(IdentityId::THM_ST, Partition({4, 3, 3}), 5, opts);
  o.require(r.lambda == StrictPartition({9, 7, 6, 2, 1}), "unexpected lambda");
  o.require(r.accumulation == Accumulation::Streamed, "left side was not streamed");
  o.require(r.trials >= 20, "fewer than 20 trials");
  o.require(r.prime == 2147483647ULL, "prime is not 2^31-1");
  o.require(r.equal, "THM_ST reported unequal");
  o.report["verification"] = io::to_json(r, false);
  return o;
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s << " s";
  return out.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string out_dir = "acceptance_reports";
  std::vector<int> only;
  std::vector<unsigned> threads{1, 3};
  app.add_option("--out", out_dir, "directory for the JSON reports");
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  app.add_option("--threads", threads, "thread counts of the two runs")->delimiter(',')->expected(2);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "worked example weights", kGoldenLimit, golden_weights},
      {2, "worked example q-statistics", kGoldenLimit, golden_statistics},
      {3, "worked example bijections", kGoldenLimit, golden_bijections},
      {4, "symbolic identity suite", kSymbolicSuiteLimit, symbolic_suite},
      {5, "bijections and cardinalities", kNoLimit, bijection_suite},
      {6, "lemma counts", kNoLimit, lemma_suite},
      {7, "weight equivalences", kNoLimit, weight_properties},
      {8, "ambiguity findings", kNoLimit, ambiguities},
      {9, "modular THM_ST at n=5, mu=(4,3,3)", kModularLimit, modular_large},
  };
  auto selected = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };

  const std::filesystem::path dir(out_dir);
  std::map<int, std::string> first_run;
  bool all_pass = true;
  json summary = json::array();

  auto run_one = [&](const Criterion& c, unsigned t, bool& pass, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(t);
    } catch (const std::exception& e) {
      o.pass = false;
      o.report["failures"].push_back(std::string("exception: ") + e.what());
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json doc{{"criterion", c.number}, {"title", c.title}, {"pass", o.pass}, {"report", o.report}};
    pass = o.pass;
    return doc.dump(2) + "\n";
  };

  for (const auto& c : criteria) {
    if (!selected(c.number)) continue;
    bool pass = false;
    double seconds = 0;
    const std::string text = run_one(c, threads[0], pass, seconds);
    write_file(dir / ("criterion_" + std::to_string(c.number) + ".json"), text);
    first_run[c.number] = text;
    std::string note;
    if (c.limit > 0 && seconds >= c.limit) {
      pass = false;
      note = ", over the " + format_seconds(c.limit) + " limit";
    }
    all_pass = all_pass && pass;
    std::cout << "criterion " << c.number << " (" << c.title << "): " << (pass ? "PASS" : "FAIL") << " ["
              << format_seconds(seconds) << note << "]" << std::endl;
    summary.push_back({{"criterion", c.number}, {"pass", pass}, {"seconds", seconds}});
  }

  if (selected(10)) {
    std::vector<int> mismatched;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
      if (!first_run.count(c.number)) continue;
      bool pass = false;
      double seconds = 0;
      const std::string text = run_one(c, threads[1], pass, seconds);
      write_file(dir / "rerun" / ("criterion_" + std::to_string(c.number) + ".json"), text);
      if (text != first_run[c.number]) mismatched.push_back(c.number);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = !first_run.empty() && mismatched.empty();
    all_pass = all_pass && pass;
    std::ostringstream detail;
    detail << first_run.size() << " reports compared, threads " << threads[0] << " vs " << threads[1];
    for (int k : mismatched) detail << ", criterion " << k << " differs";
    std::cout << "criterion 10 (determinism across runs): " << (pass ? "PASS" : "FAIL") << " ["
              << format_seconds(seconds) << ", " << detail.str() << "]" << std::endl;
    summary.push_back({{"criterion", 10}, {"pass", pass}, {"seconds", seconds}, {"mismatched", mismatched}});
  }

  write_file(dir / "summary.json", summary.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner. `acceptance --criterion N` evaluates one criterion,
// `acceptance` evaluates all of them; each prints one PASS or FAIL line.
// Exit status is 0 only when every evaluated criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fair_range/error.h"
#include "fair_range/generators.h"
#include "fair_range/pipeline.h"
#include "fair_range/round.h"
#include "fair_range/unimodular.h"

namespace fair_range {
namespace {

constexpr int kFeasibilityInstances = 500;
constexpr double kFeasibilitySeconds = 300.0;
constexpr int kOracleInstances = 200;
constexpr double kOracleSeconds = 180.0;
constexpr double kRatioFloor = 1.0 - 1e-9;
constexpr double kRatioEnvelope = 30.0;
constexpr int kHalfIntegralSolves = 500;
constexpr double kHalfIntegralTolerance = 1e-6;
constexpr int kTuInstances = 20;
constexpr int kTuDeterminants = 1000;
constexpr int kTuMaxDimension = 8;
constexpr int kTuRowSubsets = 500;
constexpr double kSeparationSlack = 1e-9;
constexpr double kHalfMassSlack = 1e-7;
constexpr double kFigureRatio = 1.5;
constexpr int kAppendixTrials = 10000;
constexpr double kAppendixTolerance = 1e-9;
constexpr double kPerformanceSeconds = 10.0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Case {
  std::uint64_t seed = 0;
  MetricInstance inst;
  RangeConstraints rc;
  SolveReport report;
  std::string error;  // set when the solver threw
  double ratio = std::numeric_limits<double>::quiet_NaN();
};

struct Suite {
  std::vector<Case> cases;
  double seconds = 0.0;
};

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random instance and ranges; the solver records certificate failures
// instead of throwing so that every criterion can inspect them.
Case MakeCase(std::uint64_t seed, int n_lo, int n_hi, int k_hi,
              const std::vector<double>& ps, bool oracle) {
  std::mt19937_64 rng(seed);
  Case c;
  c.seed = seed;
  RandomInstanceOptions options;
  options.num_points = Uniform(rng, n_lo, n_hi);
  options.num_groups = Uniform(rng, 1, 3);
  options.p = ps[Uniform(rng, 0, static_cast<int>(ps.size()) - 1)];
  options.seed = seed;
  c.inst = GenerateRandomInstance(options);
  c.rc = RandomFeasibleRangesForK(c.inst.GroupSizes(), Uniform(rng, 1, k_hi), rng);
  SolverConfig config;
  config.strict = false;
  try {
    c.report = SolveFairRange(c.inst, c.rc, config);
    if (oracle) {
      const OracleResult best = BruteForceOptimum(c.inst, c.rc);
      const double p = c.inst.p;
      c.ratio = std::pow(c.report.solution.cost_p, 1.0 / p) /
                std::pow(best.cost_p, 1.0 / p);
    }
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

const Suite& FeasibilitySuite() {
  static const Suite suite = [] {
    Suite s;
    const auto start = Clock::now();
    for (int i = 0; i < kFeasibilityInstances; ++i)
      s.cases.push_back(MakeCase(10'000 + i, 8, 40, 6, {1.0, 2.0, 3.0}, false));
    s.seconds = Seconds(start);
    return s;
  }();
  return suite;
}

const Suite& OracleSuite() {
  static const Suite suite = [] {
    Suite s;
    const auto start = Clock::now();
    for (int i = 0; i < kOracleInstances; ++i)
      s.cases.push_back(MakeCase(20'000 + i, 5, 12, 4, {1.0, 2.0}, true));
    s.seconds = Seconds(start);
    return s;
  }();
  return suite;
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

// Seeds of the first few failing cases.
std::string FirstSeeds(const std::vector<std::uint64_t>& seeds) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seeds.size() && i < 5; ++i) os << (i ? "," : " seeds ") << seeds[i];
  return os.str();
}

bool Feasible(const Case& c) {
  return c.error.empty() &&
         static_cast<int>(c.report.solution.centers.size()) == c.rc.k &&
         SatisfiesRanges(c.report.solution, c.rc);
}

Verdict Criterion1() {
  const Suite& s = FeasibilitySuite();
  std::vector<std::uint64_t> bad;
  for (const Case& c : s.cases)
    if (!Feasible(c)) bad.push_back(c.seed);
  const bool pass = bad.empty() && s.seconds < kFeasibilitySeconds;
  return {pass, Fmt("%zu/%zu feasible with |C| = k, %.2f s (limit %.0f s)",
                    s.cases.size() - bad.size(), s.cases.size(), s.seconds,
                    kFeasibilitySeconds) + FirstSeeds(bad)};
}

Verdict Criterion2() {
  const Suite& s = OracleSuite();
  double worst = 0.0, low = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> bad;
  for (const Case& c : s.cases) {
    const bool ok = Feasible(c) && std::isfinite(c.ratio) && c.ratio >= kRatioFloor;
    if (!ok) bad.push_back(c.seed);
    if (std::isfinite(c.ratio)) {
      worst = std::max(worst, c.ratio);
      low = std::min(low, c.ratio);
    }
  }
  const bool pass = bad.empty() && worst <= kRatioEnvelope && s.seconds < kOracleSeconds;
  return {pass, Fmt("%zu instances, ratio in [%.6f, %.6f] (envelope %.0f), %.2f s "
                    "(limit %.0f s)",
                    s.cases.size(), low, worst, kRatioEnvelope, s.seconds,
                    kOracleSeconds) + FirstSeeds(bad)};
}

Verdict Criterion3() {
  int checked = 0, failed = 0, missing = 0;
  std::vector<std::uint64_t> bad;
  for (const Suite* s : {&FeasibilitySuite(), &OracleSuite()}) {
    for (const Case& c : s->cases) {
      if (!c.error.empty()) {
        ++missing;
        bad.push_back(c.seed);
        continue;
      }
      // The six chain certificates are always present; the reduction one
      // only when |D| > k.
      const std::size_t expected = c.report.reduced ? 7 : 6;
      if (c.report.certificates.size() != expected) {
        ++missing;
        bad.push_back(c.seed);
      }
      for (const Certificate& cert : c.report.certificates) {
        ++checked;
        if (!cert.passed) {
          ++failed;
          bad.push_back(c.seed);
        }
      }
    }
  }
  return {failed == 0 && missing == 0,
          Fmt("%d certificates over 700 solves, %d failed, %d solves incomplete",
              checked, failed, missing) + FirstSeeds(bad)};
}

Verdict Criterion4() {
  const Suite& s = FeasibilitySuite();
  int solves = 0, good = 0;
  double worst = 0.0;
  std::vector<std::uint64_t> bad;
  for (const Case& c : s.cases) {
    if (solves == kHalfIntegralSolves) break;
    ++solves;
    if (!c.error.empty()) {
      bad.push_back(c.seed);
      continue;
    }
    try {
      const HalfIntegralSolution h =
          SolveHalfIntegral(c.report.structured_lp, {}, kHalfIntegralTolerance);
      worst = std::max(worst, h.max_deviation);
      const bool snapped = std::all_of(h.y.begin(), h.y.end(), [](double v) {
        return v == 0.0 || v == 0.5 || v == 1.0;
      });
      if (snapped) {
        ++good;
      } else {
        bad.push_back(c.seed);
      }
    } catch (const FairRangeError&) {
      bad.push_back(c.seed);
    }
  }
  return {good == kHalfIntegralSolves,
          Fmt("%d/%d scaled vertices within %.0e of integers, max deviation %.2e",
              good, solves, kHalfIntegralTolerance, worst) + FirstSeeds(bad)};
}

Verdict Criterion5() {
  int instances = 0, det_ok = 0, gh_found = 0, gh_total = 0, fallback = 0;
  std::int64_t dets = 0, nonzero = 0;
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 30'000; instances < kTuInstances; ++seed) {
    const Case c = MakeCase(seed, 12, 30, 6, {1.0, 2.0}, false);
    if (!c.error.empty()) {
      bad.push_back(seed);
      ++instances;
      continue;
    }
    ++instances;
    const StructuredLp& slp = c.report.structured_lp;
    const IntMatrix m = ConstraintMatrixGe(slp.lp, true);
    const DeterminantCheck d =
        SubmatrixDeterminantCheck(m, kTuDeterminants, kTuMaxDimension, seed);
    dets += d.trials;
    nonzero += d.nonzero;
    if (d.ok) {
      ++det_ok;
    } else {
      bad.push_back(seed);
    }
    const std::vector<RowTag> tags = StructuredRowTags(slp, true);
    std::mt19937_64 rng(seed);
    const int rows = static_cast<int>(m.size());
    for (int t = 0; t < kTuRowSubsets; ++t) {
      std::vector<int> subset;
      const double keep = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
      for (int r = 0; r < rows; ++r)
        if (std::bernoulli_distribution(keep)(rng)) subset.push_back(r);
      if (subset.empty()) subset.push_back(Uniform(rng, 0, rows - 1));
      const SigningResult res = GhouilaHouriCheck(m, subset, &tags);
      ++gh_total;
      if (res.status == SigningResult::Status::kFound &&
          IsValidSigning(m, subset, res.signs)) {
        ++gh_found;
        fallback += res.used_fallback;
      } else {
        bad.push_back(seed);
      }
    }
  }
  const bool pass = det_ok == kTuInstances && gh_found == gh_total;
  return {pass, Fmt("%d/%d instances unimodular over %lld submatrices (%lld nonsingular, "
                    "dim <= %d); %d/%d row subsets signed (%d by exhaustive search)",
                    det_ok, instances, static_cast<long long>(dets),
                    static_cast<long long>(nonzero), kTuMaxDimension, gh_found,
                    gh_total, fallback) + FirstSeeds(bad)};
}

// Independent scans over the sparsified instance.
bool SeparatedDisjointHalfMass(const Case& c) {
  const SparsifiedInstance& s = c.report.sparse;
  const double p = c.inst.p;
  const double factor = std::pow(2.0, 1.0 + 1.0 / p);
  const int ns = s.survivors.size();
  for (int i = 0; i < ns; ++i) {
    const double ri = s.radii[s.survivor_source[i]];
    for (int j = i + 1; j < ns; ++j) {
      const double rj = s.radii[s.survivor_source[j]];
      const double d = c.inst.d(s.survivors.points[i], s.survivors.points[j]);
      if (d < factor * std::max(ri, rj) - kSeparationSlack) return false;
    }
  }
  std::vector<int> owner(c.inst.num_facilities(), -1);
  for (int i = 0; i < ns; ++i) {
    for (int u : s.balls[i]) {
      if (owner[u] >= 0) return false;
      owner[u] = i;
    }
  }
  for (int i = 0; i < ns; ++i) {
    double mass = 0.0;
    for (int u : s.balls[i]) mass += c.report.fractional.x(s.survivor_source[i], u);
    if (mass < 0.5 - kHalfMassSlack) return false;
  }
  return true;
}

Verdict Criterion6() {
  int total = 0, good = 0;
  std::vector<std::uint64_t> bad;
  for (const Suite* s : {&FeasibilitySuite(), &OracleSuite()}) {
    for (const Case& c : s->cases) {
      ++total;
      if (c.error.empty() && SeparatedDisjointHalfMass(c)) {
        ++good;
      } else {
        bad.push_back(c.seed);
      }
    }
  }
  return {good == total,
          Fmt("%d/%d consolidated instances separated, with disjoint balls and "
              "in-ball mass >= 1/2", good, total) + FirstSeeds(bad)};
}

Verdict Criterion7() {
  int total = 0, good = 0;
  std::vector<std::uint64_t> bad;
  for (const Suite* s : {&FeasibilitySuite(), &OracleSuite()}) {
    for (const Case& c : s->cases) {
      ++total;
      bool ok = c.error.empty() && CheckFlow(c.report.network).empty();
      if (ok) {
        const FlowNetwork& net = c.report.network;
        for (const FlowArc& a : net.arcs)
          if (a.from == net.t1 && a.to == net.t2) ok &= a.flow == c.rc.k;
        const std::vector<int>& centers = c.report.solution.centers;
        for (int i : c.report.partition.surviving) {
          const std::vector<int>& set = c.report.partition.sets[i];
          ok &= std::any_of(set.begin(), set.end(), [&](int u) {
            return std::binary_search(centers.begin(), centers.end(), u);
          });
        }
      }
      if (ok) {
        ++good;
      } else {
        bad.push_back(c.seed);
      }
    }
  }
  return {good == total, Fmt("%d/%d networks carry an integral flow of value k meeting "
                             "all bounds, centers hit every selected set",
                             good, total) + FirstSeeds(bad)};
}

double MaxClientDistance(const MetricInstance& inst, const std::vector<int>& centers) {
  double worst = 0.0;
  for (int v : inst.clients) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) best = std::min(best, inst.to_facility(v, c));
    worst = std::max(worst, best);
  }
  return worst;
}

Verdict Criterion8() {
  const double m = 1.0, M = 2.0;
  const MetricInstance inst = GenerateFigure1Instance(6, 24, m, M, 1.0);
  RangeConstraints ranged{6, {{2, 4}, {2, 4}}};
  RangeConstraints strict{6, {{3, 3}, {3, 3}}};
  const OracleResult best_ranged = BruteForceOptimum(inst, ranged);
  const OracleResult best_strict = BruteForceOptimum(inst, strict);
  SolverConfig config;
  config.strict = false;
  const SolveReport r = SolveFairRange(inst, ranged, config);
  const bool only_m = MaxClientDistance(inst, best_ranged.centers) <= m;
  const bool strict_larger = best_strict.cost_p > best_ranged.cost_p;
  const bool chain = r.AllCertificatesPassed() && SatisfiesRanges(r.solution, ranged) &&
                     r.solution.cost_p >= best_ranged.cost_p * kRatioFloor;
  const double ratio = best_strict.cost_p / r.solution.cost_p;
  const bool separated = ratio >= kFigureRatio;
  return {only_m && strict_larger && chain && separated,
          Fmt("ranged optimum %.3g uses only m: %s; strict optimum %.3g larger: %s; "
              "solver %.3g within the certified chain: %s; strict/solver = %.4f "
              "(need >= %.2f): %s",
              best_ranged.cost_p, only_m ? "yes" : "no", best_strict.cost_p,
              strict_larger ? "yes" : "no", r.solution.cost_p, chain ? "yes" : "no",
              ratio, kFigureRatio, separated ? "yes" : "no")};
}

Verdict Criterion9() {
  std::mt19937_64 rng(40'000);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int lemma = 0, chains = 0, triples = 0, failures = 0;
  std::uint64_t instance_seed = 0;
  MetricInstance inst;
  for (int t = 0; t < kAppendixTrials; ++t) {
    // A fresh point set every 100 trials.
    if (t % 100 == 0) {
      RandomInstanceOptions options;
      options.num_points = 20;
      options.dimension = 1 + t / 100 % 4;
      options.seed = instance_seed++;
      inst = GenerateRandomInstance(options);
    }
    const double p = 1.0 + 9.0 * unit(rng);
    // Lemma: arbitrary non-negative reals.
    const int n = Uniform(rng, 1, 8);
    const double x = unit(rng) < 0.1 ? 0.0 : 100.0 * unit(rng);
    std::vector<double> ys(n);
    for (double& y : ys) y = unit(rng) < 0.1 ? 0.0 : 100.0 * unit(rng);
    const double lambda = std::exp(std::uniform_real_distribution<double>(-5.0, 5.0)(rng));
    ++lemma;
    failures += !PowerTriangleCheck(x, ys, lambda, p, kAppendixTolerance);
    // General corollary on a random chain.
    std::vector<int> chain(Uniform(rng, 2, 7));
    for (int& v : chain) v = Uniform(rng, 0, inst.num_points() - 1);
    ++chains;
    failures += !ChainPowerBoundHolds(inst, chain, p, kAppendixTolerance);
    // Three-point corollary.
    const std::vector<int> triple{Uniform(rng, 0, 19), Uniform(rng, 0, 19),
                                  Uniform(rng, 0, 19)};
    ++triples;
    failures += !ChainPowerBoundHolds(inst, triple, p, kAppendixTolerance);
  }
  return {failures == 0,
          Fmt("%d power-sum, %d chain and %d triple inequalities, %d violated "
              "(relative tolerance %.0e)",
              lemma, chains, triples, failures, kAppendixTolerance)};
}

Verdict Criterion10() {
  RandomInstanceOptions options;
  options.num_points = 200;
  options.num_groups = 4;
  options.p = 2.0;
  options.seed = 50'000;
  const MetricInstance inst = GenerateRandomInstance(options);
  std::mt19937_64 rng(50'000);
  const RangeConstraints rc = RandomFeasibleRangesForK(inst.GroupSizes(), 10, rng);
  SolverConfig config;
  config.strict = false;
  const auto start = Clock::now();
  const SolveReport r = SolveFairRange(inst, rc, config);
  const double seconds = Seconds(start);
  const bool ok = SatisfiesRanges(r.solution, rc) && seconds < kPerformanceSeconds;
  return {ok, Fmt("n=200 k=10 groups=4 p=2 solved in %.2f s (limit %.0f s), "
                  "certificates %s",
                  seconds, kPerformanceSeconds,
                  r.AllCertificatesPassed() ? "passed" : "failed")};
}

}  // namespace
}  // namespace fair_range

int main(int argc, char** argv) {
  using namespace fair_range;
  CLI::App app{"Acceptance criteria"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "Criterion 1-10; all when omitted")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Verdict()>> all{
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9, Criterion10};
  bool ok = true;
  for (int i = 1; i <= 10; ++i) {
    if (criterion != 0 && criterion != i) continue;
    Verdict v;
    try {
      v = all[i - 1]();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    std::printf("criterion %d %s: %s\n", i, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    ok &= v.pass;
  }
  return ok ? 0 : 1;
}

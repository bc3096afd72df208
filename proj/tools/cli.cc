// Copyright 2026 The matchreg Authors.
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

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matchreg/enumerate.h"
#include "matchreg/error.h"
#include "matchreg/feasibility.h"
#include "matchreg/game.h"
#include "matchreg/generators.h"
#include "matchreg/graph_io.h"
#include "matchreg/leaves.h"
#include "matchreg/reductions.h"
#include "matchreg/serialize.h"
#include "matchreg/solvers.h"

namespace matchreg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to the file at path, or to out when path is empty or "-".
void Emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  file << text;
  if (!file) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::uint64_t EnumerationBudget(std::uint64_t flag) {
  return flag > 0 ? flag : DefaultEnumerationBudget();
}

// "4..7" or "4".
std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    Fail(ErrorCode::kBadParams, "bad range '" + text + "', expected a..b");
  }
}

// One experiment table row. Empty optionals print as empty CSV cells and
// JSON nulls.
struct Row {
  int n = 0;
  int m = 0;
  int delta = 0;
  int nu = 0;
  std::optional<int> worst_sw;
  int opt_sw = 0;
  std::optional<double> ratio;
  std::optional<int> approx_q;
  std::optional<int> exact_q;
  double time_ms = 0;
  std::string status = "ok";
};

std::string RowId(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", i);
  return buf;
}

std::string FormatRatio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

std::string Cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

void PrintTable(const std::vector<Row>& rows, const std::string& format,
                bool timing, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      auto opt = [](const auto& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
      };
      nlohmann::ordered_json j;
      j["id"] = RowId(i);
      j["n"] = r.n;
      j["m"] = r.m;
      j["delta"] = r.delta;
      j["nu"] = r.nu;
      j["worst_sw"] = opt(r.worst_sw);
      j["opt_sw"] = r.opt_sw;
      j["ratio"] = opt(r.ratio);
      j["approx_q"] = opt(r.approx_q);
      j["exact_q"] = opt(r.exact_q);
      j["time_ms"] = timing ? r.time_ms : 0.0;
      j["status"] = r.status;
      table.push_back(std::move(j));
    }
    out << table.dump(2) << "\n";
    return;
  }
  out << "id,n,m,delta,nu,worst_sw,opt_sw,ratio,approx_q,exact_q,time_ms,"
         "status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out << RowId(i) << ',' << r.n << ',' << r.m << ',' << r.delta << ','
        << r.nu << ',' << Cell(r.worst_sw) << ',' << r.opt_sw << ','
        << (r.ratio ? FormatRatio(*r.ratio) : "") << ',' << Cell(r.approx_q)
        << ',' << Cell(r.exact_q) << ','
        << (timing ? FormatRatio(r.time_ms) : "0") << ',' << r.status
        << '\n';
  }
}

Row BaseRow(const Graph& g) {
  Row r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.delta = g.max_degree();
  r.nu = MatchingNumber(g);
  r.opt_sw = 2 * r.nu;
  return r;
}

// Minimum welfare over compatible equilibria that are also 2-strong (hence
// strong).
int WorstStrongWelfare(const Graph& g, std::uint64_t budget) {
  int worst = std::numeric_limits<int>::max();
  ForEachEquilibrium(g, {}, budget, [&](const StrategyProfile& s) {
    if (IsKStrongEquilibrium(g, s, {}, 2, budget)) {
      worst = std::min(worst, SocialWelfare(g, s));
    }
    return true;
  });
  return worst;
}

Method ParseMethod(const std::string& name) {
  if (name == "approx") return Method::kApprox;
  if (name == "exact") return Method::kExact;
  return Method::kAuto;
}

struct Options {
  // gen
  std::string family;
  std::vector<std::int64_t> params;
  std::string output;
  // shared inputs
  std::string graph_path;
  std::string solution_path;
  std::uint64_t budget = 0;
  bool timing = false;
  std::string format = "csv";
  // check
  bool explain = false;
  bool oracle = false;
  // solve
  std::string method = "auto";
  std::string emit_matching;
  // simulate
  std::string schedule = "round_robin";
  std::uint64_t seed = 0;
  int rounds_max = -1;
  std::string initial_path;
  // poa
  std::string range;
  bool strong = false;
  // ratio-audit
  int n_min = 2;
  int n_max = 6;
  int samples = 0;
  int sample_n_max = 10;
  // reduce-vc
  std::string direction;
};

int CmdGen(const Options& o, std::ostream& out) {
  Emit(o.output, WriteEdgeList(Generate(o.family, o.params)), out);
  return kExitOk;
}

int CmdCheck(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = ReadEdgeList(ReadFile(o.graph_path));
  const Solution sol = SolutionFromJson(ReadFile(o.solution_path));
  sol.Validate(g);
  const FeasibilityReport report = CheckFeasibility(g, sol);
  if (o.explain) {
    out << FeasibilityReportToJson(report);
  } else {
    out << (report.feasible ? "feasible\n" : "infeasible\n");
  }
  if (o.oracle) {
    try {
      const bool oracle = IsFeasibleOracle(g, sol, EnumerationBudget(o.budget));
      if (oracle != report.feasible) {
        err << "oracle disagrees: enumeration says "
            << (oracle ? "feasible" : "infeasible") << "\n";
        return kExitOracleDisagreement;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      err << "oracle skipped: " << e.what() << "\n";
    }
  }
  return report.feasible ? kExitOk : kExitInfeasible;
}

int CmdSolve(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = ReadEdgeList(ReadFile(o.graph_path));
  SolveOptions so;
  so.method = ParseMethod(o.method);
  if (o.budget > 0) {
    so.exact_budget = o.budget;
    so.auto_budget = o.budget;
  }
  int code = kExitOk;
  SolveResult result;
  try {
    result = Solve(g, so);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    err << e.what() << "; emitting the approx solution instead\n";
    SolveOptions fallback;
    fallback.method = Method::kApprox;
    result = Solve(g, fallback);
    result.fallback = true;
    code = kExitBudget;
  }
  out << SolveResultToJson(result, o.timing);
  if (!o.emit_matching.empty()) {
    Emit(o.emit_matching,
         WriteMatching(CompatibleMaximumMatching(g, result.solution).matching),
         out);
  }
  return code;
}

int CmdSimulate(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = ReadEdgeList(ReadFile(o.graph_path));
  Solution sol;
  if (!o.solution_path.empty()) {
    sol = SolutionFromJson(ReadFile(o.solution_path));
    sol.Validate(g);
  }
  StrategyProfile initial;
  if (!o.initial_path.empty()) {
    initial = ReadProfile(g, ReadFile(o.initial_path));
  } else {
    initial = LowestNeighbourProfile(g);
    for (const auto& [u, t] : sol.forced()) initial.set(u, t);
  }
  const Schedule schedule = o.schedule == "random" ? Schedule::Random(o.seed)
                                                   : Schedule::RoundRobin();
  try {
    out << EquilibriumReportToJson(
        BestResponseDynamics(g, sol, initial, schedule, o.rounds_max));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonTermination) throw;
    err << e.what() << "\n";
    return kExitNonTermination;
  }
  return kExitOk;
}

int CmdPoa(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = ParseRange(o.range);
  const std::uint64_t budget = EnumerationBudget(o.budget);
  std::vector<Row> rows;
  bool violation = false;
  for (int k = lo; k <= hi; ++k) {
    const std::int64_t param = k;
    const Graph g = Generate(o.family, std::span(&param, 1));
    const auto start = Clock::now();
    Row r = BaseRow(g);
    try {
      const int worst =
          o.strong ? WorstStrongWelfare(g, budget)
                   : WorstEquilibriumWelfare(g, {}, budget);
      r.worst_sw = worst;
      r.ratio = static_cast<double>(worst) / r.opt_sw;
      const bool bound =
          o.strong ? worst >= r.nu : worst >= 2 && worst * r.delta >= r.opt_sw;
      const bool tight =
          o.strong ? worst == r.nu : worst == 2 || worst * r.delta == r.opt_sw;
      r.status = !bound ? "violation" : tight ? "tight" : "ok";
      violation |= !bound;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      r.status = "budget";
    }
    r.time_ms = MillisSince(start);
    rows.push_back(r);
  }
  PrintTable(rows, o.format, o.timing, out);
  if (violation) err << "bound violated on some row\n";
  return violation ? kExitInfeasible : kExitOk;
}

// Approx size, exact size and the two restricted optima behind the ratio
// chain, for one connected graph.
Row AuditRow(const Graph& g, std::uint64_t budget, double* worst_ratio) {
  const auto start = Clock::now();
  Row r = BaseRow(g);
  SolveOptions approx_opts;
  approx_opts.method = Method::kApprox;
  const int approx = Solve(g, approx_opts).solution.size();
  r.approx_q = approx;
  try {
    ExactOptions eo;
    eo.budget = budget;
    const int exact = Exact(g, eo).solution.size();
    r.exact_q = exact;
    const Graph red = DedupLeaves(g).reduced;
    const int star =
        RestrictedExact(red, LeafSaturatingMaximumMatching(red), eo)
            .solution.size();
    // Only needed when approx forced someone; 0 <= 2 * anything otherwise.
    int restricted = 0;
    if (approx > 0) {
      restricted =
          RestrictedExact(red, ApproxWithTrace(red).modified, eo).solution.size();
    }
    // 0/0 counts as ratio 1; approx > 0 = exact has no ratio.
    if (exact > 0) {
      r.ratio = static_cast<double>(approx) / exact;
    } else if (approx == 0) {
      r.ratio = 1.0;
    }
    const bool ok =
        approx <= 6 * exact && approx <= 2 * restricted && star <= 3 * exact;
    r.status = ok ? "ok" : "violation";
    if (exact > 0) *worst_ratio = std::max(*worst_ratio, *r.ratio);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    r.status = "budget";
  }
  r.time_ms = MillisSince(start);
  return r;
}

int CmdRatioAudit(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n_min < 2 || o.n_max > kMaxEnumerationVertices - 1 ||
      o.samples < 0 || o.sample_n_max < 2 || o.sample_n_max > 64) {
    Fail(ErrorCode::kBadParams, "ratio-audit: bad size parameters");
  }
  const std::uint64_t budget = o.budget > 0 ? o.budget : kDefaultExactBudget;
  std::vector<Row> rows;
  double worst_ratio = 0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      rows.push_back(AuditRow(g, budget, &worst_ratio));
    }
  }
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.samples; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                   o.sample_n_max - 1));
    const long max_m = std::min<long>(n * (n - 1L) / 2, 3L * n);
    const int m = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                       max_m - n + 2));
    rows.push_back(AuditRow(RandomConnected(n, m, rng()), budget,
                            &worst_ratio));
  }
  PrintTable(rows, o.format, o.timing, out);
  const auto violations = std::count_if(
      rows.begin(), rows.end(),
      [](const Row& r) { return r.status == "violation"; });
  err << rows.size() << " rows, " << violations
      << " violations, max approx/exact " << FormatRatio(worst_ratio) << "\n";
  return violations > 0 ? kExitInfeasible : kExitOk;
}

int CmdReduceVc(const Options& o, std::ostream& out) {
  const Graph g = ReadEdgeList(ReadFile(o.graph_path));
  const Graph h = o.direction == "to-mfv" ? VcToMfv(g) : MfvToVc(g).graph;
  Emit(o.output, WriteEdgeList(h), out);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Uncoordinated matching games and minimum forced vertices",
               "matchreg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "matchreg 0.1.0");
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("family", o.family,
                  "path | cycle | star | complete | poa_gadget | random_gnm "
                  "| random_connected")
      ->required();
  gen->add_option("params", o.params, "Family parameters")->required();
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* check = app.add_subcommand(
      "check", "Decide feasibility (exit 0 feasible, 1 infeasible)");
  check->add_option("graph", o.graph_path, "Edge-list file")->required();
  check->add_option("solution", o.solution_path, "Solution JSON file")
      ->required();
  check->add_flag("--explain", o.explain, "Print the report with witness");
  check->add_flag("--oracle", o.oracle,
                  "Cross-check with equilibrium enumeration (exit 3 on "
                  "disagreement)");
  check->add_option("--budget", o.budget, "Enumeration budget");

  auto* solve = app.add_subcommand("solve", "Compute a feasible solution");
  solve->add_option("graph", o.graph_path, "Edge-list file")->required();
  solve->add_option("--method", o.method, "approx | exact | auto")
      ->check(CLI::IsMember({"approx", "exact", "auto"}));
  solve->add_option("--budget", o.budget, "Exact search node budget");
  solve->add_option("--emit-matching", o.emit_matching,
                    "Write a maximum matching compatible with the solution");
  solve->add_flag("--timing", o.timing, "Include wall-clock time");

  auto* simulate =
      app.add_subcommand("simulate", "Run best-response dynamics");
  simulate->add_option("graph", o.graph_path, "Edge-list file")->required();
  simulate->add_option("solution", o.solution_path,
                       "Solution JSON file (default: nobody forced)");
  simulate->add_option("--schedule", o.schedule, "round_robin | random")
      ->check(CLI::IsMember({"round_robin", "random"}));
  simulate->add_option("--seed", o.seed, "Seed for the random schedule");
  simulate->add_option("--rounds-max", o.rounds_max,
                       "Round limit (default n)");
  simulate->add_option("--initial", o.initial_path,
                       "Initial profile file (default: lowest neighbour)");

  auto* poa = app.add_subcommand("poa", "Worst equilibrium welfare table");
  poa->add_option("--family", o.family, "Single-parameter family")
      ->required();
  poa->add_option("--range", o.range, "Parameter range a..b")->required();
  poa->add_option("--budget", o.budget, "Enumeration budget");
  poa->add_flag("--strong", o.strong, "Restrict to strong equilibria");
  poa->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  poa->add_flag("--timing", o.timing, "Fill the time_ms column");

  auto* audit = app.add_subcommand(
      "ratio-audit", "Compare approx, restricted and exact solution sizes");
  audit->add_option("--n-min", o.n_min, "Smallest exhaustive size");
  audit->add_option("--n-max", o.n_max,
                    "Largest exhaustive size; below --n-min skips enumeration");
  audit->add_option("--samples", o.samples, "Random connected graphs");
  audit->add_option("--sample-n-max", o.sample_n_max,
                    "Largest random graph size");
  audit->add_option("--seed", o.seed, "Seed for random graphs");
  audit->add_option("--budget", o.budget, "Exact search node budget");
  audit->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  audit->add_flag("--timing", o.timing, "Fill the time_ms column");

  auto* reduce =
      app.add_subcommand("reduce-vc", "Vertex cover reductions");
  reduce->add_option("direction", o.direction, "to-mfv | to-vc")
      ->required()
      ->check(CLI::IsMember({"to-mfv", "to-vc"}));
  reduce->add_option("graph", o.graph_path, "Edge-list file")->required();
  reduce->add_option("-o,--output", o.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen->parsed()) return CmdGen(o, out);
    if (check->parsed()) return CmdCheck(o, out, err);
    if (solve->parsed()) return CmdSolve(o, out, err);
    if (simulate->parsed()) return CmdSimulate(o, out, err);
    if (poa->parsed()) return CmdPoa(o, out, err);
    if (audit->parsed()) return CmdRatioAudit(o, out, err);
    if (reduce->parsed()) return CmdReduceVc(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace matchreg::cli

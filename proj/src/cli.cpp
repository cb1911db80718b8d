#include "jrp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "jrp/checks.hpp"
#include "jrp/oracle.hpp"
#include "jrp/reductions.hpp"
#include "jrp/serialization.hpp"
#include "jrp/solver.hpp"

namespace jrp::cli {

namespace {

using io::Json;

// Raised when a command completed but the oracle disagreed.
struct Disagreement {};

struct Common {
  bool json = false;
  bool timing = false;
  std::optional<std::uint64_t> budget;

  SolverOptions options(std::uint64_t fallback_budget = 0) const {
    SolverOptions o = default_solver_options();
    if (fallback_budget != 0 && std::getenv(kCellBudgetEnv) == nullptr)
      o.cell_budget = fallback_budget;
    if (budget) o.cell_budget = *budget;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_flag("--json", common.json, "Print a machine-readable run report");
  cmd->add_flag("--timing", common.timing, "Include wall time in the report");
  cmd->add_option("--budget", common.budget, "Solver cell budget (default: $JRP_CELL_BUDGET or 10^7)");
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

std::string join_factors(const std::vector<Nat>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) s += " * ";
    s += factors[i].str();
  }
  return s;
}

Json string_array(const std::vector<Nat>& xs) {
  Json a = Json::array();
  for (const Nat& x : xs) a.push_back(x.str());
  return a;
}

std::vector<Nat> parse_list(const std::string& text) {
  std::vector<Nat> items;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) items.push_back(Nat::parse(tok));
  return items;
}

JrpOracle pick_solver(const std::string& name, const SolverOptions& options) {
  if (name == "scan") return scan_oracle(options);
  if (name == "divisor") return divisor_oracle(options);
  throw DomainError("unknown solver '" + name + "' (expected scan or divisor)");
}

class Reporter {
 public:
  Reporter(std::string command, const Common& common, std::ostream& out)
      : common_(common), out_(out), start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
    report_["inputs"] = Json::object();
    report_["outputs"] = Json::object();
  }

  Json& inputs() { return report_["inputs"]; }
  Json& outputs() { return report_["outputs"]; }
  void oracle(bool agree) { report_["oracle"] = agree ? "AGREE" : "DISAGREE"; }

  /// Human-readable line, suppressed in --json mode.
  void line(const std::string& text) {
    if (!common_.json) out_ << text << '\n';
  }

  void finish() {
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    if (common_.json) {
      if (common_.timing) report_["wall_time_ms"] = elapsed;
      out_ << report_.dump() << '\n';
    } else if (common_.timing) {
      out_ << "time: " << elapsed << " ms\n";
    }
  }

 private:
  const Common& common_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  Json report_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-item joint replenishment: exact solvers and hardness reductions", "jrp"};
  app.require_subcommand(1);
  Common common;

  // factor
  std::string factor_m;
  std::string factor_variant = "periodic";
  std::string factor_solver = "scan";
  bool factor_oracle = false;
  auto* factor_cmd = app.add_subcommand("factor", "Factor M through JRP oracle calls");
  factor_cmd->add_option("M", factor_m, "Integer >= 2")->required();
  factor_cmd->add_option("--variant", factor_variant, "aperiodic | periodic")
      ->check(CLI::IsMember({"aperiodic", "periodic"}));
  factor_cmd->add_option("--solver", factor_solver, "scan | divisor (periodic only)")
      ->check(CLI::IsMember({"scan", "divisor"}));
  factor_cmd->add_flag("--oracle", factor_oracle, "Cross-check with trial division");
  add_common(factor_cmd, common);

  // solve
  std::string solve_file;
  std::string solve_z;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance document exactly");
  solve_cmd->add_option("instance", solve_file, "Instance JSON file")->required();
  solve_cmd->add_option("--z", solve_z, "Threshold <num>/<den>: print YES iff optimum <= z");
  add_common(solve_cmd, common);

  // build
  std::string build_m;
  int build_lemma = 2;
  auto* build_cmd = app.add_subcommand("build", "Emit the reduction instance for M");
  build_cmd->add_option("M", build_m, "Odd composite >= 9")->required();
  build_cmd->add_option("--lemma", build_lemma, "1 (aperiodic) or 2 (periodic)")
      ->check(CLI::IsMember({1, 2}));
  add_common(build_cmd, common);

  // range
  std::string range_m, range_l, range_u;
  std::string range_solver = "scan";
  bool range_oracle = false;
  auto* range_cmd = app.add_subcommand("range", "Decide RangeDivisor(M, L, U) via periodic JRP");
  range_cmd->add_option("M", range_m)->required();
  range_cmd->add_option("L", range_l)->required();
  range_cmd->add_option("U", range_u)->required();
  range_cmd->add_option("--solver", range_solver, "scan | divisor")
      ->check(CLI::IsMember({"scan", "divisor"}));
  range_cmd->add_flag("--oracle", range_oracle, "Cross-check by direct divisor search");
  add_common(range_cmd, common);

  // partition
  std::string partition_items;
  std::uint64_t partition_seed = 1;
  unsigned partition_guard = kDefaultGuardBits;
  auto* partition_cmd =
      app.add_subcommand("partition", "Partition -> RangeDivisor -> JRP decision");
  partition_cmd->add_option("items", partition_items, "Comma-separated positive integers")
      ->required();
  partition_cmd->add_option("--seed", partition_seed, "Prime sampling seed");
  partition_cmd->add_option("--guard-bits", partition_guard, "Extra precision bits");
  add_common(partition_cmd, common);

  // curve
  std::string curve_m, curve_from, curve_to, curve_out, curve_l, curve_u, curve_k0;
  std::string curve_variant = "aperiodic";
  auto* curve_cmd = app.add_subcommand("curve", "Export the reduced objective as CSV");
  curve_cmd->add_option("M", curve_m)->required();
  curve_cmd->add_option("--variant", curve_variant, "aperiodic | periodic | rangedivisor")
      ->check(CLI::IsMember({"aperiodic", "periodic", "rangedivisor"}));
  curve_cmd->add_option("--from", curve_from, "First q")->required();
  curve_cmd->add_option("--to", curve_to, "Last q")->required();
  curve_cmd->add_option("--out", curve_out, "CSV file (default: standard output)");
  curve_cmd->add_option("--L", curve_l, "RangeDivisor L (K0 = L*U)");
  curve_cmd->add_option("--U", curve_u, "RangeDivisor U (K0 = L*U)");
  curve_cmd->add_option("--k0", curve_k0, "Joint cost K0 for the rangedivisor curve");

  // check
  std::string check_kind;
  std::uint64_t check_seed = 1;
  std::size_t check_count = 0;
  unsigned check_guard = kDefaultGuardBits;
  auto* check_cmd = app.add_subcommand("check", "Seeded batch cross-checks against the oracles");
  check_cmd->add_option("kind", check_kind, "solver | range | partition")
      ->required()
      ->check(CLI::IsMember({"solver", "range", "partition"}));
  check_cmd->add_option("--seed", check_seed, "Base seed");
  check_cmd->add_option("--count", check_count, "Number of runs (default 200/300/50)");
  check_cmd->add_option("--guard-bits", check_guard, "Extra precision bits (partition)");
  check_cmd->add_flag("--json", common.json, "Print the full report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*factor_cmd) {
      Reporter rep("factor", common, out);
      const Nat m = Nat::parse(factor_m);
      const Variant variant = parse_variant(factor_variant);
      rep.inputs()["M"] = m.str();
      rep.inputs()["variant"] = factor_variant;
      rep.inputs()["solver"] = factor_solver;
      const std::vector<Nat> factors =
          factor(m, variant, pick_solver(factor_solver, common.options()));
      rep.outputs()["factors"] = string_array(factors);
      rep.line(factors.size() == 1 ? m.str() + " is prime" : m.str() + " = " + join_factors(factors));
      bool agree = true;
      if (factor_oracle) {
        agree = oracle::trial_division_factor(m) == factors;
        rep.oracle(agree);
        rep.line(std::string("oracle: ") + (agree ? "AGREE" : "DISAGREE"));
      }
      rep.finish();
      if (!agree) throw Disagreement{};
    } else if (*solve_cmd) {
      Reporter rep("solve", common, out);
      const Json doc = read_json_file(solve_file);
      const JrpInstance inst = io::instance_from_json(doc);
      rep.inputs()["instance"] = io::to_json(inst);
      const JrpSolution sol = solve_exact(inst, common.options());
      rep.outputs()["solution"] = io::to_json(sol);
      rep.line("q1=" + sol.q1.str() + " q2=" + sol.q2.str() + " cost=" + sol.cost.str());
      if (!solve_z.empty()) {
        const Ratio z = Ratio::parse(solve_z);
        const bool yes = sol.cost <= z;
        rep.inputs()["z"] = z.fraction_str();
        rep.outputs()["decision"] = yes;
        rep.line(yes_no(yes));
      }
      rep.finish();
    } else if (*build_cmd) {
      const Nat m = Nat::parse(build_m);
      const ReductionArtifact art =
          build_lemma == 1 ? build_aperiodic_instance(m) : build_periodic_instance(m);
      if (common.json) {
        Reporter rep("build", common, out);
        rep.inputs()["M"] = m.str();
        rep.inputs()["lemma"] = std::string(to_string(art.lemma));
        rep.outputs()["artifact"] = io::to_json(art);
        rep.finish();
      } else {
        out << io::to_json(art).dump(2) << '\n';
      }
    } else if (*range_cmd) {
      Reporter rep("range", common, out);
      const RangeDivisorInstance rd{Nat::parse(range_m), Nat::parse(range_l), Nat::parse(range_u)};
      rep.inputs() = io::to_json(rd);
      rep.inputs()["solver"] = range_solver;
      const bool yes = decide_range_divisor(rd, pick_solver(range_solver, common.options()));
      rep.outputs()["decision"] = yes;
      rep.line(yes_no(yes));
      bool agree = true;
      if (range_oracle) {
        agree = oracle::has_divisor_in_range(rd.m, rd.l, rd.u) == yes;
        rep.oracle(agree);
        rep.line(std::string("oracle: ") + (agree ? "AGREE" : "DISAGREE"));
      }
      rep.finish();
      if (!agree) throw Disagreement{};
    } else if (*partition_cmd) {
      Reporter rep("partition", common, out);
      const std::vector<Nat> items = parse_list(partition_items);
      rep.inputs()["items"] = string_array(items);
      rep.inputs()["seed"] = std::to_string(partition_seed);
      rep.inputs()["guard_bits"] = partition_guard;
      const PartitionInstance padded = pad_partition(items);
      const PartitionReduction red =
          partition_to_rangedivisor(padded, partition_seed, partition_guard);
      const bool decision =
          decide_range_divisor(red.rd, divisor_oracle(common.options(1'000'000'000)));
      Nat total(0);
      for (const Nat& a : items) total += a;
      const bool truth = !total.is_odd() && oracle::subset_sum_exists(items, total / Nat(2));
      rep.outputs()["padded"] = string_array(padded.items);
      rep.outputs()["bit_width"] = padded.bit_width;
      rep.outputs()["lambda"] = red.lambda.fraction_str();
      rep.outputs()["primes"] = string_array(red.primes);
      rep.outputs()["rangedivisor"] = io::to_json(red.rd);
      rep.outputs()["decision"] = decision;
      rep.oracle(decision == truth);
      rep.line(io::to_json(red.rd).dump());
      rep.line("decision=" + yes_no(decision) + " oracle=" + yes_no(truth));
      rep.finish();
      if (decision != truth) throw Disagreement{};
    } else if (*curve_cmd) {
      const Nat m = Nat::parse(curve_m);
      checks::CurveKind kind = checks::CurveKind::aperiodic;
      if (curve_variant == "periodic") kind = checks::CurveKind::periodic;
      if (curve_variant == "rangedivisor") kind = checks::CurveKind::rangedivisor;
      std::optional<Nat> k0;
      if (!curve_k0.empty()) k0 = Nat::parse(curve_k0);
      if (!curve_l.empty() && !curve_u.empty()) k0 = Nat::parse(curve_l) * Nat::parse(curve_u);
      const Nat from = Nat::parse(curve_from);
      const Nat to = Nat::parse(curve_to);
      if (curve_out.empty()) {
        checks::write_curve_csv(out, kind, m, from, to, k0);
      } else {
        std::ostringstream csv;
        checks::write_curve_csv(csv, kind, m, from, to, k0);
        std::ofstream file(curve_out);
        if (!file) throw DomainError("cannot write '" + curve_out + "'");
        file << csv.str();
        if (!file) throw DomainError("failed writing '" + curve_out + "'");
      }
    } else if (*check_cmd) {
      Json report;
      std::size_t expected = 0;
      if (check_kind == "solver") {
        report = checks::solver_vs_oracle(check_seed, check_count ? check_count : 200);
        expected = report["count"].get<std::size_t>();
      } else if (check_kind == "range") {
        report = checks::range_divisor(check_seed, check_count ? check_count : 300);
        expected = report["count"].get<std::size_t>();
      } else {
        report = checks::partition_pipeline(check_seed, check_count ? check_count : 50, check_guard);
        expected = report["decided"].get<std::size_t>();
      }
      const std::size_t agree = report["agree"].get<std::size_t>();
      if (common.json) {
        out << report.dump() << '\n';
      } else {
        out << check_kind << ": " << agree << "/" << expected << " agree";
        if (check_kind == "partition")
          out << ", sampling failures " << report["sampling_failures"].get<std::size_t>() << "/"
              << report["count"].get<std::size_t>();
        out << '\n';
      }
      if (agree != expected) throw Disagreement{};
    }
  } catch (const Disagreement&) {
    return kExitDisagree;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace jrp::cli

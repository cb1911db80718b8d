// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jrp/checks.hpp"
#include "jrp/cli.hpp"
#include "jrp/number_theory.hpp"
#include "jrp/oracle.hpp"
#include "jrp/reductions.hpp"
#include "jrp/solver.hpp"

using namespace jrp;

namespace {

constexpr std::uint64_t kSolverSeed = 1;
constexpr std::uint64_t kRangeSeed = 1;
constexpr std::uint64_t kPartitionSeed = 1;

struct Outcome {
  bool pass;
  std::string detail;
};

bool odd_composite(unsigned long m) { return m >= 9 && m % 2 == 1 && !is_prime(Nat(m)); }

unsigned ceil_log2(const Nat& m) {
  const unsigned bits = static_cast<unsigned>(m.bit_length());
  return Nat::pow2(bits - 1) == m ? bits - 1 : bits;
}

Outcome periodic_sweep() {
  std::size_t checked = 0;
  for (unsigned long m = 9; m <= 2001; m += 2) {
    if (!odd_composite(m)) continue;
    const Nat nm(m);
    const JrpSolution s = solve_exact(build_periodic_instance(nm).instance);
    const Nat g = gcd(s.q1, nm);
    if (s.q2 != nm || g == Nat(1) || g == nm)
      return {false, "M=" + nm.str() + " gives q1=" + s.q1.str() + " q2=" + s.q2.str()};
    ++checked;
  }
  return {true, std::to_string(checked) + " odd composites in [9, 2001]"};
}

Outcome aperiodic_sweep() {
  std::size_t checked = 0;
  for (unsigned long m = 9; m <= 501; m += 2) {
    if (!odd_composite(m)) continue;
    const Nat nm(m);
    const JrpSolution s = solve_exact(build_aperiodic_instance(nm).instance);
    const Nat g = gcd(s.q1, nm);
    if (s.q2 != nm || g == Nat(1) || g == nm)
      return {false, "M=" + nm.str() + " gives q1=" + s.q1.str() + " q2=" + s.q2.str()};
    if (!(reduced_aperiodic(nm, s.q1) < Ratio(4 * (m - 1))))
      return {false, "M=" + nm.str() + ": reduced value not below 4(M-1)"};
    ++checked;
  }
  return {true, std::to_string(checked) + " odd composites in [9, 501]"};
}

Outcome factor_sweep() {
  const JrpOracle solver = scan_oracle();
  for (unsigned long m = 2; m <= 10001; ++m)
    if (factor(Nat(m), Variant::periodic, solver) != oracle::trial_division_factor(Nat(m)))
      return {false, "periodic mismatch at M=" + std::to_string(m)};
  for (unsigned long m = 2; m <= 1001; ++m)
    if (factor(Nat(m), Variant::aperiodic, solver) != oracle::trial_division_factor(Nat(m)))
      return {false, "aperiodic mismatch at M=" + std::to_string(m)};
  return {true, "periodic [2, 10001], aperiodic [2, 1001]"};
}

Outcome solver_vs_oracle() {
  const io::Json r = checks::solver_vs_oracle(kSolverSeed, 200);
  const std::size_t agree = r.at("agree").get<std::size_t>();
  return {agree == 200, std::to_string(agree) + "/200 agree"};
}

Outcome range_equivalence() {
  const io::Json r = checks::range_divisor(kRangeSeed, 300);
  const std::size_t agree = r.at("agree").get<std::size_t>();
  const io::Json& first = r.at("runs").at(0);
  const bool sample_case = first.at("M") == "385" && first.at("L") == "2" && first.at("U") == "6" &&
                          first.at("decision") == true;
  return {agree == 300 && sample_case,
          std::to_string(agree) + "/300 agree, (385, 2, 6) -> " +
              (first.at("decision") == true ? "YES" : "NO") + ", " +
              std::to_string(r.at("yes_instances").get<std::size_t>()) + " yes-instances"};
}

Outcome curve_property() {
  std::ostringstream csv;
  checks::write_curve_csv(csv, checks::CurveKind::aperiodic, 315, 1, 630);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  std::size_t below = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) return {false, "malformed row: " + line};
    const Ratio value{mpz_class(f[1]), mpz_class(f[2])};
    const Ratio baseline{mpz_class(f[3]), mpz_class(f[4])};
    const bool shared = f[5] != "1";
    if (shared ? !(value < baseline) : !(value == baseline))
      return {false, "q=" + f[0] + " breaks the pattern"};
    below += shared ? 1 : 0;
    ++rows;
  }
  return {rows == 630, std::to_string(rows) + " rows, " + std::to_string(below) +
                           " strictly below the coprime curve"};
}

Outcome partition_pipeline() {
  const io::Json r = checks::partition_pipeline(kPartitionSeed, 50);
  const std::size_t decided = r.at("decided").get<std::size_t>();
  const std::size_t agree = r.at("agree").get<std::size_t>();
  const std::size_t failures = r.at("sampling_failures").get<std::size_t>();
  const std::size_t precondition = r.at("precondition_failures").get<std::size_t>();
  const bool pass = agree == decided && precondition == 0 && failures * 5 < 50;
  return {pass, std::to_string(agree) + "/" + std::to_string(decided) +
                    " decided runs agree, sampling failures " + std::to_string(failures) +
                    "/50, precondition failures " + std::to_string(precondition)};
}

Outcome coefficient_size() {
  std::size_t worst_slack = 1000;
  std::string worst;
  long summed_excess = -1000;
  auto check = [&](const ReductionArtifact& art, const Nat& m) {
    const unsigned limit = 5 * ceil_log2(m) + 16;
    const JrpInstance& i = art.instance;
    long summed = 0;
    for (const Nat* c : {&i.k0, &i.k1, &i.k2, &i.h1, &i.h2}) summed += c->bit_length();
    summed_excess = std::max(summed_excess, summed - static_cast<long>(limit));
    for (const Nat* c : {&i.k0, &i.k1, &i.k2, &i.h1, &i.h2}) {
      const std::size_t bits = c->bit_length();
      if (bits > limit) return false;
      if (limit - bits < worst_slack) {
        worst_slack = limit - bits;
        worst = std::string(to_string(art.lemma)) + " M=" + m.str();
      }
    }
    return true;
  };
  for (unsigned long m = 9; m <= 2001; m += 2) {
    if (!odd_composite(m)) continue;
    if (!check(build_periodic_instance(Nat(m)), Nat(m)))
      return {false, "L2 M=" + std::to_string(m)};
    if (m <= 501 && !check(build_aperiodic_instance(Nat(m)), Nat(m)))
      return {false, "L1 M=" + std::to_string(m)};
  }
  return {true, "largest coefficient within 5*ceil(log2 M)+16 bits; tightest slack " +
                    std::to_string(worst_slack) + " bits at " + worst +
                    "; summed over all five the excess peaks at " +
                    std::to_string(summed_excess) + " bits"};
}

std::string cli_report(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"check", "solver", "--seed", std::to_string(kSolverSeed), "--count", "200", "--json"},
      {"check", "range", "--seed", std::to_string(kRangeSeed), "--count", "300", "--json"},
      {"check", "partition", "--seed", std::to_string(kPartitionSeed), "--count", "50", "--json"},
  };
  std::size_t bytes = 0;
  for (const auto& cmd : commands) {
    const std::string a = cli_report(cmd);
    const std::string b = cli_report(cmd);
    if (a.empty() || a != b) return {false, "reports differ for check " + cmd[1]};
    bytes += a.size();
  }
  return {true, "3 report pairs identical (" + std::to_string(bytes) + " bytes each side)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"periodic construction sweep", periodic_sweep},
      {"aperiodic construction sweep", aperiodic_sweep},
      {"factoring end to end", factor_sweep},
      {"solver vs brute force", solver_vs_oracle},
      {"range divisor equivalence", range_equivalence},
      {"M=315 curve below the coprime baseline", curve_property},
      {"partition pipeline", partition_pipeline},
      {"coefficient size", coefficient_size},
      {"determinism of json reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " - " << o.detail << " [" << timing << "]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

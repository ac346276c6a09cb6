// Command-line front end: field, construct, verify, census, curve-count,
// affine-check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zerosum/census.hpp"
#include "zerosum/construct.hpp"
#include "zerosum/error.hpp"

namespace {

using namespace zerosum;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum subspaces of F_{2^n}"};
  app.require_subcommand(1);

  unsigned n = 0;
  unsigned k = 0;
  unsigned l = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_trials = SearchBudget{}.max_trials;
  std::uint64_t trials = 1000;
  unsigned direct_max_k = SearchBudget{}.direct_check_max_k;
  std::string out;
  std::string csv;
  std::string cert_path;
  std::string mode = "exhaustive";
  bool counts = false;

  auto* field_cmd = app.add_subcommand("field", "print the modulus of F_{2^n}");
  field_cmd->add_option("--n", n, "extension degree")->required()->check(CLI::Range(2, 64));

  auto* construct = app.add_subcommand("construct", "build a zero-sum certificate");
  construct->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  construct->add_option("--k", k)->required();
  construct->add_option("--seed", seed);
  construct->add_option("--max-trials", max_trials)->check(CLI::PositiveNumber);
  construct->add_option("--out", out, "certificate file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--direct-max-k", direct_max_k);

  auto* census = app.add_subcommand("census", "determine which k admit zero-sum subspaces");
  census->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  census->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "constructive"}));
  census->add_flag("--counts", counts, "count all zero-sum subspaces (exhaustive mode)");
  census->add_option("--seed", seed);
  census->add_option("--max-trials", max_trials)->check(CLI::PositiveNumber);
  census->add_option("--out", out, "report file (default stdout)");
  census->add_option("--csv", csv, "also write n,k,member,method rows");

  auto* curve = app.add_subcommand("curve-count", "count points of the completion curve");
  curve->add_option("--n", n)->required()->check(CLI::Range(2, 13));
  curve->add_option("--l", l)->required();
  curve->add_option("--seed", seed);

  auto* affine = app.add_subcommand("affine-check", "sample affine subspaces avoiding 0");
  affine->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  affine->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  affine->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*field_cmd) {
      std::cout << modulus_hex(find_irreducible(n)) << '\n';
      return 0;
    }

    if (*construct) {
      SearchBudget budget;
      budget.seed = seed;
      budget.max_trials = max_trials;
      const BuildResult r = build_zero_sum(n, k, budget);
      switch (r.status) {
        case BuildStatus::Certificate:
          write_out(out, certificate_to_json(*r.certificate));
          return 0;
        case BuildStatus::NotExist:
          std::cerr << "no " << k << "-dimensional zero-sum subspace exists: " << r.note << '\n';
          return 2;
        case BuildStatus::NoSolution:
          std::cerr << "no solution found: " << r.note << '\n';
          return 3;
      }
    }

    if (*verify) {
      const ZeroSumCertificate cert = certificate_from_json(read_file(cert_path));
      const VerificationReport rep = verify_certificate(cert, direct_max_k);
      std::cout << rep.to_text();
      return rep.ok() ? 0 : 1;
    }

    if (*census) {
      SearchBudget budget;
      budget.seed = seed;
      budget.max_trials = max_trials;
      const CensusReport rep = census_run(n, *parse_census_mode(mode), budget, counts);
      write_out(out, rep.to_json().dump(2) + "\n");
      if (!csv.empty()) write_out(csv, rep.to_csv());
      return 0;
    }

    if (*curve) {
      std::cout << curve_point_count(n, l, seed).to_json().dump(2) << '\n';
      return 0;
    }

    if (*affine) {
      const AffineCheckResult r = affine_sample_check(n, trials, seed);
      std::cout << r.to_json().dump(2) << '\n';
      return r.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

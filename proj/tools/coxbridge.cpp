// coxbridge: Wirtinger numbers and maximal rank Coxeter quotients of knots.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxbridge/census.hpp"
#include "coxbridge/certificate.hpp"
#include "coxbridge/homsearch.hpp"
#include "coxbridge/robust.hpp"

using namespace coxbridge;

namespace {

std::string default_robust_dir() {
  const char* env = std::getenv("COXBRIDGE_ROBUST_DIR");
  return env ? env : "";
}

std::string require_robust(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  throw Error(Errc::io_error,
              "no robust directory: pass --robust or set COXBRIDGE_ROBUST_DIR");
}

int cmd_wirtinger(const std::string& file, int k_max) {
  int quarantined = 0;
  for (const GaussCode& code : read_knot_file(file)) {
    try {
      Diagram d = build_diagram(code);
      WirtingerResult wr = wirtinger_number(d, k_max);
      std::cout << (code.name.empty() ? "(unnamed)" : code.name) << ": omega=" << wr.omega
                << " seeds=[";
      for (std::size_t i = 0; i < wr.seeds.size(); ++i)
        std::cout << (i ? "," : "") << wr.seeds[i];
      std::cout << "] moves=" << wr.moves.size() << "\n";
    } catch (const std::exception& e) {
      ++quarantined;
      std::cout << (code.name.empty() ? "(unnamed)" : code.name) << ": error: " << e.what()
                << "\n";
    }
  }
  return quarantined ? 2 : 0;
}

int cmd_search(const std::string& file, const std::string& robust_dir,
               const std::vector<std::string>& groups, int k_max) {
  SearchContext ctx = load_context(require_robust(robust_dir), groups);
  int quarantined = 0;
  for (const GaussCode& code : read_knot_file(file)) {
    std::string name = code.name.empty() ? "(unnamed)" : code.name;
    try {
      Diagram d = build_diagram(code);
      AnalysisReport rep = analyze(d, ctx, k_max, groups);
      std::cout << name << ": omega=" << rep.wirtinger->omega;
      for (const GroupOutcome& out : rep.outcomes)
        std::cout << " " << out.group << "=" << (out.hit ? "hit" : "miss");
      if (rep.bridge)
        std::cout << " bridge=" << *rep.bridge;
      else if (rep.wirtinger->omega >= 3)
        std::cout << " bridge<=" << rep.wirtinger->omega << " (MRCQ not found)";
      if (!rep.note.empty()) std::cout << "  [" << rep.note << "]";
      std::cout << "\n";
    } catch (const std::exception& e) {
      ++quarantined;
      std::cout << name << ": error: " << e.what() << "\n";
    }
  }
  return quarantined ? 2 : 0;
}

int cmd_robust_gen(const std::string& group, const std::string& out, int threads) {
  GroupTable gt = build_group(group);
  RobustBuildOptions opts;
  opts.threads = threads;
  RobustLibrary lib = build_robust(gt, opts);
  save_robust(lib, out);
  std::uint64_t f = lib.ordered_factor();
  std::cout << group << ": candidates=" << lib.counts.candidates << " spanning="
            << lib.counts.spanning << " generating=" << lib.counts.generating
            << " degenerate=" << lib.counts.degenerate << " classes=" << lib.counts.classes
            << " (ordered " << lib.counts.candidates * f << "/" << lib.counts.spanning * f
            << "/" << lib.counts.generating * f << "/" << lib.counts.degenerate * f << "/"
            << lib.counts.classes * f << ")\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_census(const std::string& file, const std::string& robust_dir, const std::string& out,
               int threads, const std::vector<std::string>& groups, int k_max) {
  CensusOptions opts;
  opts.robust_dir = require_robust(robust_dir);
  opts.out_dir = out;
  opts.threads = threads;
  opts.groups = groups;
  opts.k_max = k_max;
  CensusResult result = run_census(file, opts);
  std::cout << result.rows.size() << " knots, " << result.quarantined
            << " quarantined; wrote " << out << "/census.csv\n";
  return result.exit_code();
}

int cmd_summarize(const std::string& dir) {
  auto rows = read_census_csv(dir + "/census.csv");
  std::cout << format_summary(summarize(rows));
  return 0;
}

int cmd_verify_cert(const std::string& file, const std::string& robust_dir) {
  QuotientCertificate cert = load_certificate(file);
  verify_certificate(cert);
  if (!cert.robust_hash.empty()) {
    if (!robust_dir.empty()) {
      GroupTable gt = build_group(cert.group);
      RobustLibrary lib = load_robust(robust_dir + "/" + cert.group + ".json", gt);
      if (lib.content_hash != cert.robust_hash)
        throw Error(Errc::hash_mismatch,
                    "certificate was produced against a different robust library");
      std::cout << "robust hash: match\n";
    } else {
      std::cout << "robust hash: not checked (no robust directory given)\n";
    }
  }
  std::cout << file << ": OK (" << cert.knot << " -> " << cert.group << ", omega "
            << cert.omega << ")\n";
  return 0;
}

int cmd_conjecture(const std::string& dir) {
  auto rows = read_census_csv(dir + "/census.csv");
  auto violations = check_bridge_crossing_conjecture(rows);
  int certified = 0;
  for (const auto& r : rows)
    if (r.bridge && *r.bridge >= 3) ++certified;
  std::cout << certified << " rows with certified bridge number >= 3, "
            << violations.size() << " violations of crossings >= 3n-1\n";
  for (const auto& v : violations)
    std::cout << "violation: " << v.name << " crossings=" << v.crossings
              << " bridge=" << v.bridge << "\n";
  return violations.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wirtinger numbers and maximal rank Coxeter quotients of knot groups"};
  app.require_subcommand(1);

  std::string file, out, dir, group;
  std::string robust = default_robust_dir();
  std::vector<std::string> groups;
  int threads = 1, k_max = 5;

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger number of each diagram in FILE");
  wirt->add_option("file", file, "knot file (Gauss or DT codes)")->required();
  wirt->add_option("--kmax", k_max, "largest seed-set size tried");

  auto* search = app.add_subcommand("search", "search FILE for maximal rank quotients");
  search->add_option("file", file)->required();
  search->add_option("--robust", robust, "directory of robust-set files");
  search->add_option("--groups", groups, "restrict to these groups")->delimiter(',');
  search->add_option("--kmax", k_max);

  auto* rgen = app.add_subcommand("robust-gen", "enumerate robust generating sets");
  rgen->add_option("--group", group, "A3|A4|A5|D4|D5|H3|H4")->required();
  rgen->add_option("--out", out, "output JSON path")->required();
  rgen->add_option("--threads", threads);

  auto* census = app.add_subcommand("census", "batch analysis to CSV + certificates");
  census->add_option("file", file)->required();
  census->add_option("--robust", robust);
  census->add_option("--out", out, "output directory")->required();
  census->add_option("--threads", threads);
  census->add_option("--groups", groups)->delimiter(',');
  census->add_option("--kmax", k_max);

  auto* summ = app.add_subcommand("summarize", "tables from a census output directory");
  summ->add_option("dir", dir)->required();

  auto* vc = app.add_subcommand("verify-cert", "re-verify a stored certificate");
  vc->add_option("file", file)->required();
  vc->add_option("--robust", robust);

  auto* conj = app.add_subcommand("conjecture", "bridge/crossing conjecture check on a census");
  conj->add_option("dir", dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (wirt->parsed()) return cmd_wirtinger(file, k_max);
    if (search->parsed()) return cmd_search(file, robust, groups, k_max);
    if (rgen->parsed()) return cmd_robust_gen(group, out, threads);
    if (census->parsed()) return cmd_census(file, robust, out, threads, groups, k_max);
    if (summ->parsed()) return cmd_summarize(dir);
    if (vc->parsed()) return cmd_verify_cert(file, robust);
    if (conj->parsed()) return cmd_conjecture(dir);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

// Batch census over knot files: per-knot analysis rows, CSV emission,
// table-shaped summaries, and the bridge/crossing conjecture check.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxbridge/homsearch.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

inline constexpr const char* kCsvHeader =
    "name,crossings,omega,dihedral,A3,H3,A4,D4,H4,A5,D5,bridge,cert_path,error";

// Group columns in CSV order; "dihedral" aggregates every I2(p).
inline const std::vector<std::string>& census_columns() {
  static const std::vector<std::string> cols = {"dihedral", "A3", "H3", "A4",
                                                "D4", "H4", "A5", "D5"};
  return cols;
}

struct CensusRow {
  std::string name;
  int crossings = 0;
  std::optional<int> omega;
  // "" = not searched, "0" = searched and missed, "1" = hit
  std::map<std::string, std::string> flags;
  std::optional<int> bridge;
  std::string cert_path;
  std::string error;
};

namespace detail {
inline std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',' ) c = ';';
    else if (c == '\n' || c == '\r') c = ' ';
  return s;
}
}  // namespace detail

inline std::string to_csv_line(const CensusRow& r) {
  std::string line = detail::csv_safe(r.name) + "," + std::to_string(r.crossings) + ",";
  if (r.omega) line += std::to_string(*r.omega);
  for (const std::string& col : census_columns()) {
    auto it = r.flags.find(col);
    line += ",";
    if (it != r.flags.end()) line += it->second;
  }
  line += ",";
  if (r.bridge) line += std::to_string(*r.bridge);
  line += "," + detail::csv_safe(r.cert_path) + "," + detail::csv_safe(r.error);
  return line;
}

struct CensusOptions {
  std::string robust_dir;
  std::string out_dir;       // empty: no files written
  int threads = 1;
  int k_max = 5;
  std::vector<std::string> groups;  // empty: all applicable
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::string csv;
  int quarantined = 0;

  int exit_code() const { return quarantined ? 2 : 0; }
};

inline CensusRow row_from_report(const AnalysisReport& rep, const std::string& cert_dir,
                                 bool write_certs) {
  CensusRow row;
  row.name = rep.name;
  row.crossings = rep.crossings;
  if (rep.wirtinger) row.omega = rep.wirtinger->omega;
  row.bridge = rep.bridge;
  for (const GroupOutcome& out : rep.outcomes) {
    std::string col = out.group.rfind("I2(", 0) == 0 ? "dihedral" : out.group;
    row.flags[col] = out.hit ? "1" : "0";
    if (out.hit && out.cert) {
      std::string fname = sanitize_filename(rep.name) + "." + sanitize_filename(out.group) +
                          ".json";
      std::string path = cert_dir.empty() ? fname : cert_dir + "/" + fname;
      if (write_certs) save_certificate(*out.cert, path);
      if (row.cert_path.empty()) row.cert_path = path;
    }
  }
  return row;
}

inline CensusResult run_census(const std::string& input_path, const CensusOptions& opts) {
  std::vector<GaussCode> codes = read_knot_file(input_path);
  SearchContext ctx = load_context(opts.robust_dir, opts.groups);

  std::string cert_dir;
  if (!opts.out_dir.empty()) {
    std::filesystem::create_directories(opts.out_dir);
    cert_dir = opts.out_dir + "/certs";
    std::filesystem::create_directories(cert_dir);
  }

  CensusResult result;
  result.rows.resize(codes.size());
  parallel_for_index(codes.size(), opts.threads, [&](std::size_t i) {
    CensusRow& row = result.rows[i];
    try {
      Diagram d = build_diagram(codes[i]);
      AnalysisReport rep = analyze(d, ctx, opts.k_max, opts.groups);
      row = row_from_report(rep, cert_dir, !opts.out_dir.empty());
    } catch (const std::exception& e) {
      row.name = codes[i].name;
      row.crossings = codes[i].crossings();
      row.omega.reset();
      row.flags.clear();
      row.bridge.reset();
      row.cert_path.clear();
      row.error = e.what();
    }
  });

  result.csv = kCsvHeader;
  result.csv += "\n";
  for (const CensusRow& r : result.rows) {
    result.csv += to_csv_line(r);
    result.csv += "\n";
    if (!r.error.empty()) ++result.quarantined;
  }
  if (!opts.out_dir.empty()) spew(opts.out_dir + "/census.csv", result.csv);
  return result;
}

inline std::vector<CensusRow> read_census_csv(const std::string& path) {
  std::string content = slurp(path);
  std::vector<CensusRow> rows;
  std::size_t start = 0;
  bool first = true;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (first) {
      if (trim(line) != kCsvHeader)
        throw Error(Errc::schema_mismatch, path + ": unexpected CSV header");
      first = false;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t p = 0;
    while (true) {
      std::size_t q = line.find(',', p);
      if (q == std::string::npos) { cells.push_back(line.substr(p)); break; }
      cells.push_back(line.substr(p, q - p));
      p = q + 1;
    }
    if (cells.size() != 14)
      throw Error(Errc::schema_mismatch, path + ": bad CSV row: " + line);
    CensusRow r;
    r.name = cells[0];
    r.crossings = std::stoi(cells[1]);
    if (!cells[2].empty()) r.omega = std::stoi(cells[2]);
    const auto& cols = census_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!cells[3 + i].empty()) r.flags[cols[i]] = cells[3 + i];
    if (!cells[11].empty()) r.bridge = std::stoi(cells[11]);
    r.cert_path = cells[12];
    r.error = cells[13];
    rows.push_back(std::move(r));
  }
  return rows;
}

// Per-crossing-number strata in the shape of the rank 3/4/5 tables.
struct SummaryRow {
  int crossings = 0;
  int knots = 0;          // rows for this crossing number
  int omega2 = 0, omega3 = 0, omega4 = 0, omega5 = 0;
  int dihedral = 0;
  int a3 = 0, h3 = 0, rank3_union = 0;
  int a4 = 0, d4 = 0, h4 = 0, rank4_union = 0;
  int a5 = 0, d5 = 0, rank5_union = 0;
  int errors = 0;
};

inline std::vector<SummaryRow> summarize(const std::vector<CensusRow>& rows) {
  std::map<int, SummaryRow> acc;
  for (const CensusRow& r : rows) {
    SummaryRow& s = acc[r.crossings];
    s.crossings = r.crossings;
    ++s.knots;
    if (!r.error.empty()) { ++s.errors; continue; }
    auto hit = [&](const char* g) {
      auto it = r.flags.find(g);
      return it != r.flags.end() && it->second == "1";
    };
    if (r.omega) {
      switch (*r.omega) {
        case 2: ++s.omega2; break;
        case 3: ++s.omega3; break;
        case 4: ++s.omega4; break;
        case 5: ++s.omega5; break;
        default: break;
      }
    }
    if (hit("dihedral")) ++s.dihedral;
    if (hit("A3")) ++s.a3;
    if (hit("H3")) ++s.h3;
    if (hit("A3") || hit("H3")) ++s.rank3_union;
    if (hit("A4")) ++s.a4;
    if (hit("D4")) ++s.d4;
    if (hit("H4")) ++s.h4;
    if (hit("A4") || hit("D4") || hit("H4")) ++s.rank4_union;
    if (hit("A5")) ++s.a5;
    if (hit("D5")) ++s.d5;
    if (hit("A5") || hit("D5")) ++s.rank5_union;
  }
  std::vector<SummaryRow> out;
  for (auto& [_, s] : acc) out.push_back(s);
  return out;
}

inline std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::string out;
  auto line = [&out](std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out += "  ";
      first = false;
      out += c;
      if (c.size() < 10) out += std::string(10 - c.size(), ' ');
    }
    out += "\n";
  };
  out += "rank 3 quotients (omega(D) = 3)\n";
  line({"crossings", "knots", "omega3", "A3", "H3", "A3|H3"});
  for (const auto& r : rows)
    line({std::to_string(r.crossings), std::to_string(r.knots), std::to_string(r.omega3),
          std::to_string(r.a3), std::to_string(r.h3), std::to_string(r.rank3_union)});
  out += "\nrank 4 quotients (omega(D) = 4)\n";
  line({"crossings", "knots", "omega4", "A4", "D4", "H4", "A4|D4|H4"});
  for (const auto& r : rows)
    line({std::to_string(r.crossings), std::to_string(r.knots), std::to_string(r.omega4),
          std::to_string(r.a4), std::to_string(r.d4), std::to_string(r.h4),
          std::to_string(r.rank4_union)});
  out += "\nrank 5 quotients (omega(D) = 5)\n";
  line({"crossings", "knots", "omega5", "A5", "D5", "A5|D5"});
  for (const auto& r : rows)
    line({std::to_string(r.crossings), std::to_string(r.knots), std::to_string(r.omega5),
          std::to_string(r.a5), std::to_string(r.d5), std::to_string(r.rank5_union)});
  return out;
}

struct ConjectureViolation {
  std::string name;
  int crossings = 0;
  int bridge = 0;
};

// Checks crossing number >= 3n - 1 for rows whose bridge number n >= 3 was
// certified by a quotient.
inline std::vector<ConjectureViolation> check_bridge_crossing_conjecture(
    const std::vector<CensusRow>& rows) {
  std::vector<ConjectureViolation> out;
  for (const CensusRow& r : rows) {
    if (!r.bridge || *r.bridge < 3) continue;
    if (r.crossings < 3 * *r.bridge - 1)
      out.push_back({r.name, r.crossings, *r.bridge});
  }
  return out;
}

}  // namespace coxbridge

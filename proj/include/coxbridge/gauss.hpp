#pragma once

// Gauss codes and Dowker-Thistlethwaite codes for knot diagrams.
//
// A Gauss code lists the crossings met while walking once around the knot:
// entry +k means the walk passes over crossing k, -k means it passes under.
// Every label k in 1..m appears exactly once with each sign. Codes are read
// cyclically; no planarity check is made, so virtual codes pass through.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxbridge/util.hpp"

namespace coxbridge {

struct GaussCode {
  std::string name;
  std::vector<int> entries;

  int crossings() const { return static_cast<int>(entries.size()) / 2; }
};

namespace detail {
inline void validate_gauss(const std::vector<int>& entries) {
  if (entries.empty()) throw Error(Errc::unpaired_crossing, "empty code");
  int m = static_cast<int>(entries.size()) / 2;
  if (entries.size() % 2 != 0)
    throw Error(Errc::unpaired_crossing, "odd number of entries");
  std::vector<int> pos(m + 1, 0), neg(m + 1, 0);
  for (int e : entries) {
    if (e == 0) throw Error(Errc::zero_entry, "entry 0 is not a crossing label");
    int k = std::abs(e);
    if (k > m)
      throw Error(Errc::unpaired_crossing,
                  "label " + std::to_string(k) + " exceeds crossing count " + std::to_string(m));
    (e > 0 ? pos : neg)[k]++;
  }
  for (int k = 1; k <= m; ++k)
    if (pos[k] != 1 || neg[k] != 1)
      throw Error(Errc::unpaired_crossing,
                  "label " + std::to_string(k) + " appears " + std::to_string(pos[k]) +
                      " times over and " + std::to_string(neg[k]) + " under");
}
}  // namespace detail

// Accepts "name: e1,e2,..." or just the entry list; separators are commas
// and/or whitespace.
inline GaussCode parse_gauss(std::string_view text) {
  GaussCode code;
  size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    code.name = trim(text.substr(0, colon));
    text = text.substr(colon + 1);
  }
  for (const std::string& tok : split_tokens(text)) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw Error(Errc::malformed_token, "'" + tok + "' is not an integer");
    }
    if (used != tok.size())
      throw Error(Errc::malformed_token, "'" + tok + "' is not an integer");
    code.entries.push_back(static_cast<int>(v));
  }
  detail::validate_gauss(code.entries);
  return code;
}

// DT code: entry i (1-based) pairs odd position 2i-1 with even position |dt[i]|;
// a positive entry marks the odd-position visit as the under-pass.
inline GaussCode dt_to_gauss(const std::vector<int>& dt, std::string name = {}) {
  int m = static_cast<int>(dt.size());
  if (m == 0) throw Error(Errc::unpaired_crossing, "empty code");
  GaussCode code;
  code.name = std::move(name);
  code.entries.assign(2 * m, 0);
  std::vector<char> seen(2 * m + 1, 0);
  for (int i = 0; i < m; ++i) {
    int v = dt[i];
    if (v == 0) throw Error(Errc::zero_entry, "entry 0 in DT code");
    int even = std::abs(v);
    if (even % 2 != 0)
      throw Error(Errc::position_clash, "DT entry " + std::to_string(v) + " is odd");
    if (even > 2 * m || seen[even])
      throw Error(Errc::invalid_pairing,
                  "DT entry " + std::to_string(v) + " is out of range or repeated");
    seen[even] = 1;
    int odd = 2 * i + 1;  // positions are 1-based
    int label = i + 1;
    bool odd_under = v > 0;
    code.entries[odd - 1] = odd_under ? -label : label;
    code.entries[even - 1] = odd_under ? label : -label;
  }
  detail::validate_gauss(code.entries);
  return code;
}

// One knot per line: "name: code". Blank lines and lines starting with '#'
// are skipped. A line whose tokens are all even in absolute value and
// pairwise distinct is read as a DT code (a Gauss code always contains +-1
// twice), anything else as a Gauss code.
inline std::vector<GaussCode> read_knot_file(const std::string& path) {
  std::string content = slurp(path);
  std::vector<GaussCode> out;
  size_t start = 0;
  while (start <= content.size()) {
    size_t end = content.find('\n', start);
    std::string line = trim(content.substr(
        start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) start = content.size() + 1;
    else start = end + 1;
    if (line.empty() || line[0] == '#') continue;

    std::string name;
    std::string body = line;
    size_t colon = line.find(':');
    if (colon != std::string::npos) {
      name = trim(line.substr(0, colon));
      body = line.substr(colon + 1);
    }
    std::vector<int> vals;
    bool dt_like = true;
    for (const std::string& tok : split_tokens(body)) {
      size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw Error(Errc::malformed_token, path + ": '" + tok + "' is not an integer");
      }
      if (used != tok.size())
        throw Error(Errc::malformed_token, path + ": '" + tok + "' is not an integer");
      vals.push_back(static_cast<int>(v));
      if (v == 0 || std::abs(v) % 2 != 0) dt_like = false;
    }
    if (dt_like) {
      std::vector<char> seen;
      seen.assign(2 * vals.size() + 2, 0);
      for (int v : vals) {
        int k = std::abs(v);
        if (k > static_cast<int>(2 * vals.size()) || seen[k]) { dt_like = false; break; }
        seen[k] = 1;
      }
    }
    out.push_back(dt_like ? dt_to_gauss(vals, name) : parse_gauss(line));
  }
  return out;
}

}  // namespace coxbridge

#pragma once

// Robust generating sets: representatives of every simultaneous-conjugation
// class of reflection generating sets of a Coxeter group. Because all
// reflections are conjugate, every class contains a set through a fixed base
// reflection, so enumeration fixes reflection 0 and deduplicates by the
// lexicographically least conjugate ("min-conj-sorted" canonical form).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxbridge/coxeter.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

using GenSet = std::vector<int>;  // reflection positions, strictly increasing

struct RobustCounts {
  std::uint64_t candidates = 0;
  std::uint64_t spanning = 0;
  std::uint64_t generating = 0;
  std::uint64_t degenerate = 0;  // spanning but proper-subgroup closure
  std::uint64_t classes = 0;
};

struct RobustLibrary {
  std::string group;
  int rank = 0;
  bool base_fixed = true;
  std::string canonicalization = "min-conj-sorted-v1";
  RobustCounts counts;
  std::vector<GenSet> sets;  // canonical forms, sorted
  std::string content_hash;

  // The tables count unordered sets; the ordered convention multiplies by the
  // number of arrangements of the free slots.
  std::uint64_t ordered_factor() const {
    std::uint64_t f = 1;
    for (int i = 2; i <= (base_fixed ? rank - 1 : rank); ++i) f *= i;
    return f;
  }
};

inline std::vector<GenSet> candidate_sets(const GroupTable& gt, bool fix_base = true) {
  int r = gt.reflection_count(), k = gt.rank;
  std::vector<GenSet> out;
  if (fix_base) {
    for_each_combination(r - 1, k - 1, [&](const std::vector<int>& c) {
      GenSet s(1, 0);
      for (int x : c) s.push_back(x + 1);
      out.push_back(std::move(s));
      return true;
    });
  } else {
    for_each_combination(r, k, [&](const std::vector<int>& c) {
      out.push_back(c);
      return true;
    });
  }
  return out;
}

// Do the roots of the chosen reflections span? (Rank equals the set size
// here, so this is a determinant test over Z[phi].)
inline bool spans(const GroupTable& gt, const GenSet& set) {
  GMat m;
  m.n = gt.rank;
  for (int i = 0; i < gt.rank; ++i)
    for (int j = 0; j < gt.rank; ++j) m.at(i, j) = gt.roots[set[i]][j];
  return !det(m).is_zero();
}

// Order of the subgroup generated by the chosen reflections. Stops early at
// more than half the group order, which already forces the whole group.
inline int closure_order(const GroupTable& gt, const GenSet& set) {
  int n = gt.order();
  std::vector<char> seen(n, 0);
  std::vector<int> work;
  seen[0] = 1;
  work.push_back(0);
  int count = 1;
  for (std::size_t head = 0; head < work.size(); ++head) {
    int x = work[head];
    for (int r : set) {
      int y = gt.rmul(x, r);
      if (!seen[y]) {
        seen[y] = 1;
        work.push_back(y);
        if (++count > n / 2) return n;
      }
    }
  }
  return count;
}

inline bool is_generating(const GroupTable& gt, const GenSet& set) {
  return closure_order(gt, set) == gt.order();
}

// Lexicographically least sorted image of the set under conjugation by every
// group element.
inline GenSet canonical_form(const GroupTable& gt, const GenSet& set) {
  int k = static_cast<int>(set.size());
  GenSet best, cur(k);
  for (int g = 0; g < gt.order(); ++g) {
    for (int j = 0; j < k; ++j) cur[j] = gt.conj_refl(g, set[j]);
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

inline std::vector<GenSet> dedup(const GroupTable& gt, const std::vector<GenSet>& sets) {
  std::set<GenSet> classes;
  for (const GenSet& s : sets) classes.insert(canonical_form(gt, s));
  return std::vector<GenSet>(classes.begin(), classes.end());
}

struct RobustBuildOptions {
  bool fix_base = true;
  int threads = 1;
};

inline RobustLibrary build_robust(const GroupTable& gt, RobustBuildOptions opts = {}) {
  RobustLibrary lib;
  lib.group = gt.name;
  lib.rank = gt.rank;
  lib.base_fixed = opts.fix_base;

  std::vector<GenSet> cands = candidate_sets(gt, opts.fix_base);
  lib.counts.candidates = cands.size();

  std::atomic<std::uint64_t> spanning{0}, generating{0};
  std::mutex merge_mutex;
  std::set<GenSet> classes;
  parallel_for_index(cands.size(), opts.threads, [&](std::size_t i) {
    const GenSet& s = cands[i];
    if (!spans(gt, s)) return;
    spanning.fetch_add(1);
    if (!is_generating(gt, s)) return;
    generating.fetch_add(1);
    GenSet canon = canonical_form(gt, s);
    std::lock_guard<std::mutex> lock(merge_mutex);
    classes.insert(std::move(canon));
  });
  lib.counts.spanning = spanning.load();
  lib.counts.generating = generating.load();
  lib.counts.degenerate = lib.counts.spanning - lib.counts.generating;
  lib.sets.assign(classes.begin(), classes.end());
  lib.counts.classes = lib.sets.size();
  return lib;
}

namespace detail {
inline nlohmann::json robust_json_body(const RobustLibrary& lib,
                                       const std::vector<GMat>& gens) {
  nlohmann::json j;
  j["schema"] = "coxbridge-robust-v1";
  j["group"] = lib.group;
  j["rank"] = lib.rank;
  j["base_fixed"] = lib.base_fixed;
  j["canonicalization"] = lib.canonicalization;
  nlohmann::json gj = nlohmann::json::array();
  for (const GMat& g : gens) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jj = 0; jj < g.n; ++jj)
        row.push_back({g.at(i, jj).a, g.at(i, jj).b});
      rows.push_back(row);
    }
    gj.push_back(rows);
  }
  j["generators"] = gj;
  std::uint64_t f = lib.ordered_factor();
  j["counts"] = {{"candidates", lib.counts.candidates},
                 {"spanning", lib.counts.spanning},
                 {"generating", lib.counts.generating},
                 {"degenerate", lib.counts.degenerate},
                 {"classes", lib.counts.classes}};
  j["counts_ordered"] = {{"candidates", lib.counts.candidates * f},
                         {"spanning", lib.counts.spanning * f},
                         {"generating", lib.counts.generating * f},
                         {"degenerate", lib.counts.degenerate * f},
                         {"classes", lib.counts.classes * f}};
  j["sets"] = lib.sets;
  return j;
}
}  // namespace detail

inline void save_robust(const RobustLibrary& lib, const std::string& path) {
  auto gens = standard_generators(CoxeterMatrix::of(lib.group));
  nlohmann::json j = detail::robust_json_body(lib, gens);
  j["content_hash"] = hex64(fnv1a64(j.dump()));
  spew(path, j.dump(1) + "\n");
}

inline RobustLibrary load_robust(const std::string& path, const GroupTable& gt) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io_error, path + ": " + e.what());
  }
  if (!j.contains("schema") || j["schema"] != "coxbridge-robust-v1")
    throw Error(Errc::schema_mismatch, path + ": unknown schema");
  RobustLibrary lib;
  lib.group = j.at("group").get<std::string>();
  lib.rank = j.at("rank").get<int>();
  lib.base_fixed = j.at("base_fixed").get<bool>();
  lib.canonicalization = j.at("canonicalization").get<std::string>();
  if (lib.group != gt.name || lib.rank != gt.rank)
    throw Error(Errc::group_mismatch,
                path + ": file is for " + lib.group + ", not " + gt.name);

  std::string stored_hash = j.at("content_hash").get<std::string>();
  nlohmann::json body = j;
  body.erase("content_hash");
  if (hex64(fnv1a64(body.dump())) != stored_hash)
    throw Error(Errc::hash_mismatch, path + ": content hash does not match");

  auto gens = standard_generators(CoxeterMatrix::of(lib.group));
  nlohmann::json expect = detail::robust_json_body(lib, gens)["generators"];
  if (j.at("generators") != expect)
    throw Error(Errc::group_mismatch, path + ": generator matrices differ");

  const auto& counts = j.at("counts");
  lib.counts.candidates = counts.at("candidates").get<std::uint64_t>();
  lib.counts.spanning = counts.at("spanning").get<std::uint64_t>();
  lib.counts.generating = counts.at("generating").get<std::uint64_t>();
  lib.counts.degenerate = counts.at("degenerate").get<std::uint64_t>();
  lib.counts.classes = counts.at("classes").get<std::uint64_t>();
  lib.sets = j.at("sets").get<std::vector<GenSet>>();
  if (lib.sets.size() != lib.counts.classes)
    throw Error(Errc::schema_mismatch, path + ": class count disagrees with set list");
  for (const GenSet& s : lib.sets) {
    if (static_cast<int>(s.size()) != lib.rank)
      throw Error(Errc::rank_mismatch, path + ": set size differs from rank");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= gt.reflection_count())
        throw Error(Errc::schema_mismatch, path + ": reflection index out of range");
      if (i && s[i] <= s[i - 1])
        throw Error(Errc::schema_mismatch, path + ": set not strictly increasing");
    }
  }
  lib.content_hash = stored_hash;
  return lib;
}

}  // namespace coxbridge

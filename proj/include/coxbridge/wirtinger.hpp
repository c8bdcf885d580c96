#pragma once

// Wirtinger number of a diagram: the smallest k for which some k strands,
// declared colored as seeds, extend to a coloring of every strand via the
// move "if the over strand and one under strand at a crossing are colored,
// color the other under strand".

#include <vector>

#include "coxbridge/diagram.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

using SeedSet = std::vector<int>;  // strand indices, strictly increasing

struct Move {
  int crossing = 0;  // crossing id where the move happens
  int colored = 0;   // strand that becomes colored
  int over = 0;      // over strand supplying the move
  int from = 0;      // the already-colored under strand
};

using MoveSequence = std::vector<Move>;

struct Saturation {
  std::vector<char> colored;
  MoveSequence moves;
  int colored_count = 0;
  bool complete = false;
};

inline Saturation saturate(const Diagram& d, const SeedSet& seeds) {
  int m = d.size();
  Saturation s;
  s.colored.assign(m, 0);
  for (int i : seeds) {
    if (i < 0 || i >= m) throw Error(Errc::not_found, "seed strand out of range");
    if (!s.colored[i]) ++s.colored_count;
    s.colored[i] = 1;
  }
  bool progress = true;
  while (progress && s.colored_count < m) {
    progress = false;
    for (const Crossing& c : d.crossings) {
      if (!s.colored[c.over]) continue;
      bool a = s.colored[c.under_a], b = s.colored[c.under_b];
      if (a == b) continue;
      int nw = a ? c.under_b : c.under_a;
      int from = a ? c.under_a : c.under_b;
      s.colored[nw] = 1;
      ++s.colored_count;
      s.moves.push_back({c.id, nw, c.over, from});
      progress = true;
    }
  }
  s.complete = s.colored_count == m;
  return s;
}

struct WirtingerResult {
  int omega = 0;
  SeedSet seeds;
  MoveSequence moves;
};

// Exhaustive over subset sizes 1..k_max, lexicographic within a size, so the
// reported seed set is the first complete one in that order.
inline WirtingerResult wirtinger_number(const Diagram& d, int k_max = 5) {
  int m = d.size();
  WirtingerResult result;
  bool found = false;
  for (int k = 1; k <= k_max && k <= m && !found; ++k) {
    for_each_combination(m, k, [&](const std::vector<int>& seeds) {
      Saturation s = saturate(d, seeds);
      if (s.complete) {
        result = {k, seeds, std::move(s.moves)};
        found = true;
        return false;
      }
      return true;
    });
  }
  if (!found)
    throw Error(Errc::not_found,
                "no seed set of size <= " + std::to_string(k_max) + " colors " +
                    (d.source.name.empty() ? std::string("diagram") : d.source.name));
  return result;
}

// Mechanical replay: checks that each move colors a previously uncolored
// strand using an already colored over strand and under partner, and that the
// sequence ends with every strand colored.
inline bool replay_check(const Diagram& d, const SeedSet& seeds, const MoveSequence& moves) {
  int m = d.size();
  std::vector<char> colored(m, 0);
  for (int i : seeds) {
    if (i < 0 || i >= m) return false;
    colored[i] = 1;
  }
  for (const Move& mv : moves) {
    if (mv.crossing < 1 || mv.crossing > m) return false;
    const Crossing& c = d.crossings[mv.crossing - 1];
    if (c.over != mv.over) return false;
    bool fits = (c.under_a == mv.from && c.under_b == mv.colored) ||
                (c.under_b == mv.from && c.under_a == mv.colored);
    if (!fits) return false;
    if (!colored[mv.over] || !colored[mv.from] || colored[mv.colored]) return false;
    colored[mv.colored] = 1;
  }
  for (char c : colored)
    if (!c) return false;
  return true;
}

}  // namespace coxbridge

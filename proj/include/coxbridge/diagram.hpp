#pragma once

// Strand/crossing structure of a knot diagram, derived from a Gauss code.
//
// A strand is a maximal arc between consecutive under-passes, recorded as the
// cyclic slice of code entries from its starting under-pass to its ending one
// (both endpoints included). An m-crossing knot diagram has exactly m strands.

#include <string>
#include <vector>

#include "coxbridge/gauss.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

struct Strand {
  int index = 0;
  std::vector<int> entries;  // -k, overs..., -k'
};

struct Crossing {
  int id = 0;       // 1-based label from the code
  int over = 0;     // strand passing over
  int under_a = 0;  // strand ending at this crossing's under-pass
  int under_b = 0;  // strand starting at it
};

struct Diagram {
  GaussCode source;
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;  // ordered by id

  int size() const { return static_cast<int>(crossings.size()); }
};

inline Diagram build_diagram(GaussCode code) {
  Diagram d;
  int total = static_cast<int>(code.entries.size());
  int m = code.crossings();

  std::vector<int> under_pos;  // positions of negative entries, in cyclic order
  under_pos.reserve(m);
  for (int p = 0; p < total; ++p)
    if (code.entries[p] < 0) under_pos.push_back(p);

  d.strands.resize(m);
  for (int s = 0; s < m; ++s) {
    int from = under_pos[s], to = under_pos[(s + 1) % m];
    d.strands[s].index = s;
    auto& ent = d.strands[s].entries;
    ent.push_back(code.entries[from]);
    for (int p = (from + 1) % total; p != to; p = (p + 1) % total)
      ent.push_back(code.entries[p]);
    ent.push_back(code.entries[to]);
  }

  // strand_at[p]: for an over position the strand whose interior covers p,
  // for an under position the strand that starts there.
  std::vector<int> strand_at(total, -1);
  for (int s = 0; s < m; ++s) {
    int to = under_pos[(s + 1) % m];
    for (int p = (under_pos[s] + 1) % total; p != to; p = (p + 1) % total)
      strand_at[p] = s;
  }
  for (int s = 0; s < m; ++s) strand_at[under_pos[s]] = s;

  std::vector<int> over_pos(m + 1, -1), under_at(m + 1, -1);
  for (int p = 0; p < total; ++p) {
    int e = code.entries[p];
    if (e > 0) over_pos[e] = p;
    else under_at[-e] = p;
  }

  std::vector<int> under_index(total, -1);  // position -> index in under_pos
  for (int i = 0; i < m; ++i) under_index[under_pos[i]] = i;

  d.crossings.resize(m);
  for (int k = 1; k <= m; ++k) {
    Crossing& c = d.crossings[k - 1];
    c.id = k;
    c.over = strand_at[over_pos[k]];
    int up = under_at[k];
    c.under_b = strand_at[up];
    c.under_a = (under_index[up] + m - 1) % m;  // strand ending at up
  }
  d.source = std::move(code);
  return d;
}

}  // namespace coxbridge

#pragma once

// Knot shadows as chord pairings of the 2n traversal positions of a closed
// curve (the combinatorial core of a DT code), with symmetry
// canonicalization, reducedness/primeness filters, and planar realizability
// by searching transversal rotation systems for an Euler-characteristic-2
// embedding. Position x pairs across parity: evens are the odd 1-based
// traversal steps of the usual DT convention.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coxbridge/util.hpp"

namespace coxbridge {

struct Shadow {
  int n = 0;
  std::vector<int> pair;    // size 2n; involution exchanging parities
  std::vector<char> under;  // size 2n; under[pair[x]] == 1 - under[x]

  // Signed DT vector: entry i is the 1-based partner of position 2i,
  // positive when the pass at position 2i goes under.
  std::vector<int> dt() const {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
      out[i] = under[2 * i] ? pair[2 * i] + 1 : -(pair[2 * i] + 1);
    return out;
  }

  int vertex_of(int x) const { return (x % 2 == 0 ? x : pair[x]) / 2; }
};

inline Shadow shadow_from_dt(const std::vector<int>& dt) {
  int n = static_cast<int>(dt.size());
  Shadow s;
  s.n = n;
  s.pair.assign(2 * n, -1);
  s.under.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    int v = std::abs(dt[i]) - 1;
    if (v < 0 || v >= 2 * n || v % 2 == 0 || s.pair[v] >= 0)
      throw Error(Errc::invalid_pairing, "bad DT vector");
    s.pair[2 * i] = v;
    s.pair[v] = 2 * i;
    s.under[2 * i] = dt[i] > 0;
    s.under[v] = dt[i] < 0;
  }
  return s;
}

// Symmetries of the traversal: x -> sign*x + offset (mod 2n), optionally
// composed with a global over/under flip (the mirror image).
struct ShadowMap {
  int sign = 1;    // +1 or -1
  int offset = 0;  // 0..2n-1
  bool flip = false;
};

namespace detail {
inline int map_pos(const ShadowMap& f, int x, int period) {
  int y = (f.sign * x + f.offset) % period;
  return y < 0 ? y + period : y;
}
inline int unmap_pos(const ShadowMap& f, int y, int period) {
  int x = (f.sign * (y - f.offset)) % period;  // sign is its own inverse
  return x < 0 ? x + period : x;
}
}  // namespace detail

// DT vector of the relabeled shadow.
inline std::vector<int> transformed_dt(const Shadow& s, const ShadowMap& f) {
  int period = 2 * s.n;
  std::vector<int> out(s.n);
  for (int i = 0; i < s.n; ++i) {
    int x = detail::unmap_pos(f, 2 * i, period);
    int partner = detail::map_pos(f, s.pair[x], period) + 1;
    bool u = static_cast<bool>(s.under[x]) != f.flip;
    out[i] = u ? partner : -partner;
  }
  return out;
}

// Unsigned (pairing-only) DT vector under the same relabeling.
inline std::vector<int> transformed_matching(const Shadow& s, const ShadowMap& f) {
  int period = 2 * s.n;
  std::vector<int> out(s.n);
  for (int i = 0; i < s.n; ++i) {
    int x = detail::unmap_pos(f, 2 * i, period);
    out[i] = detail::map_pos(f, s.pair[x], period) + 1;
  }
  return out;
}

inline std::vector<ShadowMap> all_maps(int n, bool with_flip) {
  std::vector<ShadowMap> out;
  for (int sign : {1, -1})
    for (int offset = 0; offset < 2 * n; ++offset) {
      out.push_back({sign, offset, false});
      if (with_flip) out.push_back({sign, offset, true});
    }
  return out;
}

// True when s.pair is the lexicographically least relabeling of itself;
// stab (optional) receives every relabeling that fixes the matching.
inline bool matching_is_canonical(const Shadow& s, std::vector<ShadowMap>* stab = nullptr) {
  int period = 2 * s.n;
  if (stab) stab->clear();
  for (int sign : {1, -1})
    for (int offset = 0; offset < period; ++offset) {
      ShadowMap f{sign, offset, false};
      int cmp = 0;
      for (int i = 0; i < s.n && cmp == 0; ++i) {
        int x = detail::unmap_pos(f, 2 * i, period);
        int img = detail::map_pos(f, s.pair[x], period) + 1;
        int self = s.pair[2 * i] + 1;
        cmp = img < self ? -1 : img > self ? 1 : 0;
      }
      if (cmp < 0) return false;
      if (cmp == 0 && stab) stab->push_back(f);
    }
  return true;
}

// Least signed DT vector over the matching stabilizer and the mirror flip.
// Because stabilizers fix the pairing, comparing signed vectors within them
// canonicalizes the over/under assignment of a fixed shadow.
inline bool signs_are_canonical(const Shadow& s, const std::vector<ShadowMap>& stab) {
  int period = 2 * s.n;
  for (const ShadowMap& g : stab)
    for (bool flip : {false, true}) {
      ShadowMap f{g.sign, g.offset, flip};
      int cmp = 0;
      for (int i = 0; i < s.n && cmp == 0; ++i) {
        int x = detail::unmap_pos(f, 2 * i, period);
        int partner = detail::map_pos(f, s.pair[x], period) + 1;
        int img = static_cast<bool>(s.under[x]) != flip ? partner : -partner;
        int self = s.under[2 * i] ? s.pair[2 * i] + 1 : -(s.pair[2 * i] + 1);
        cmp = img < self ? -1 : img > self ? 1 : 0;
      }
      if (cmp < 0) return false;
    }
  return true;
}

// A crossing whose two passes bound a pairing-closed interval is nugatory.
inline bool is_reduced(const Shadow& s) {
  int period = 2 * s.n;
  for (int x = 0; x < period; ++x) {
    int y = s.pair[x];
    if (y < x) continue;
    bool closed = true;
    for (int z = x + 1; z < y && closed; ++z) closed = s.pair[z] > x && s.pair[z] < y;
    if (closed) return false;
  }
  return true;
}

// A proper pairing-closed cyclic interval splits the diagram as a connected
// sum; primeness excludes every such interval.
inline bool is_prime_shadow(const Shadow& s) {
  int period = 2 * s.n;
  for (int start = 0; start < period; ++start) {
    int open = 0;
    for (int len = 1; len <= period - 2; ++len) {
      int y = (start + len - 1) % period;
      int d = (s.pair[y] - start) % period;
      if (d < 0) d += period;
      open += d < len - 1 ? -1 : 1;
      if (open == 0 && len >= 2) return false;
    }
  }
  return true;
}

// Visits every kink-free pairing (under pattern preset to alternating).
// Count of positions is fixed by n; visit may return false to stop.
inline void enumerate_shadows(int n, const std::function<bool(Shadow&)>& visit) {
  Shadow s;
  s.n = n;
  int period = 2 * n;
  s.pair.assign(period, -1);
  s.under.assign(period, 0);
  for (int x = 0; x < period; x += 2) s.under[x] = 1;
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == n) {
      if (!visit(s)) stop = true;
      return;
    }
    int e = 2 * i;
    for (int o = 1; o < period; o += 2) {
      if (s.pair[o] >= 0) continue;
      if (o == (e + 1) % period || o == (e + period - 1) % period) continue;  // kink
      s.pair[e] = o;
      s.pair[o] = e;
      rec(i + 1);
      s.pair[e] = -1;
      s.pair[o] = -1;
    }
  };
  rec(0);
}

// Planar realization: a rotation choice per crossing. Choice 0 orders the
// edge ends counterclockwise as (in_p, in_q, out_p, out_q); choice 1 as
// (in_p, out_q, out_p, in_q). Both interleave the two passes (transversal).
struct Embedding {
  std::vector<char> rot;
};

namespace detail {
// Slot = edge end at a crossing: 4v + {0: in at even pass, 1: out at even
// pass, 2: in at odd pass, 3: out at odd pass}.
inline int in_slot(const Shadow& s, int x) {
  return 4 * s.vertex_of(x) + (x % 2 == 0 ? 0 : 2);
}
inline int out_slot(const Shadow& s, int x) {
  return 4 * s.vertex_of(x) + (x % 2 == 0 ? 1 : 3);
}
inline const int* ccw_order(int rot) {
  static const int orders[2][4] = {{0, 2, 1, 3}, {0, 3, 1, 2}};
  return orders[rot];
}

struct SlotTables {
  std::vector<int> slot_pos;  // slot -> position (by its in/out role)
  std::vector<int> epart;     // slot -> slot across the incident edge

  explicit SlotTables(const Shadow& s) {
    int period = 2 * s.n;
    slot_pos.assign(4 * s.n, -1);
    epart.assign(4 * s.n, -1);
    for (int x = 0; x < period; ++x) {
      slot_pos[in_slot(s, x)] = x;
      slot_pos[out_slot(s, x)] = x;
      int next = (x + 1) % period;
      epart[out_slot(s, x)] = in_slot(s, next);
      epart[in_slot(s, next)] = out_slot(s, x);
    }
  }
};

inline int ccw_next(const Embedding& e, int slot) {
  int v = slot / 4, local = slot % 4;
  const int* order = ccw_order(e.rot[v]);
  for (int k = 0; k < 4; ++k)
    if (order[k] == local) return 4 * v + order[(k + 1) % 4];
  return -1;
}
}  // namespace detail

// Face count of the embedded 4-valent graph. Faces follow: arrive at a slot,
// step to the next slot counterclockwise, leave along its edge.
inline int face_count(const Shadow& s, const Embedding& e) {
  detail::SlotTables t(s);
  int slots = 4 * s.n;
  std::vector<char> seen(slots, 0);
  int faces = 0;
  for (int s0 = 0; s0 < slots; ++s0) {
    if (seen[s0]) continue;
    ++faces;
    int cur = s0;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = t.epart[detail::ccw_next(e, cur)];
    }
  }
  return faces;
}

// First rotation system embedding the shadow in the sphere (V - E + F = 2,
// i.e. F = n + 2), if any. rot[0] is pinned: reflecting the sphere flips
// every rotation, so half the search space is redundant.
inline std::optional<Embedding> realize(const Shadow& s) {
  Embedding e;
  e.rot.assign(s.n, 0);
  int want = s.n + 2;
  for (std::uint32_t mask = 0; mask < (1u << (s.n - 1)); ++mask) {
    for (int v = 1; v < s.n; ++v) e.rot[v] = (mask >> (v - 1)) & 1;
    if (face_count(s, e) == want) return e;
  }
  return std::nullopt;
}

// Crossing signs of the realized diagram: positive when the under strand
// enters immediately counterclockwise of the over entry.
inline std::vector<int> crossing_signs(const Shadow& s, const Embedding& e) {
  std::vector<int> signs(s.n);
  for (int v = 0; v < s.n; ++v) {
    int over_local = s.under[2 * v] ? 2 : 0;  // even pass under => odd pass over
    int under_local = 2 - over_local;
    const int* order = detail::ccw_order(e.rot[v]);
    int i = 0;
    while (order[i] != over_local) ++i;
    signs[v] = order[(i + 1) % 4] == under_local ? 1 : -1;
  }
  return signs;
}

// Bigon faces of the embedding, reported as the tail positions {x, y} of
// their two boundary edges: the passes at positions x, x+1 lie on one side,
// y, y+1 on the other. A Reidemeister-II move applies exactly when the two
// passes along a side agree in over/under, so minimal diagrams never do.
inline std::vector<std::pair<int, int>> bigon_faces(const Shadow& s, const Embedding& e) {
  detail::SlotTables t(s);
  int period = 2 * s.n;
  int slots = 4 * s.n;
  std::vector<char> seen(slots, 0);
  std::vector<std::pair<int, int>> out;
  for (int s0 = 0; s0 < slots; ++s0) {
    if (seen[s0]) continue;
    std::vector<int> departs;
    int cur = s0;
    while (!seen[cur]) {
      seen[cur] = 1;
      departs.push_back(detail::ccw_next(e, cur));
      cur = t.epart[departs.back()];
    }
    if (departs.size() != 2) continue;
    // Tail position of the edge leaving slot d: out slots name it directly,
    // in slots sit at the head of the previous traversal edge.
    auto tail = [&](int d) {
      int pos = t.slot_pos[d];
      return d % 4 == 1 || d % 4 == 3 ? pos : (pos + period - 1) % period;
    };
    int a = tail(departs[0]), b = tail(departs[1]);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace coxbridge

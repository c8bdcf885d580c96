#pragma once

// Exhaustive tabulation of prime knots by crossing number. Canonical
// shadows are enumerated, embedded in the sphere, and assigned over/under
// patterns. Alternating classes are the flype components of the shadows;
// nonalternating diagrams are classified by invariants after excluding
// every knot certified at lower levels and their connected sums. The run
// is certified by hard anchors: the count of knot classes per crossing
// number and the count of two-bridge classes among them must equal the
// known tables exactly, so an enumeration gap, a wrongful exclusion, or
// an invariant collision aborts the run instead of corrupting fixtures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxbridge/diagram.hpp"
#include "coxbridge/gauss.hpp"
#include "coxbridge/invariants.hpp"
#include "coxbridge/shadow.hpp"
#include "coxbridge/util.hpp"
#include "coxbridge/wirtinger.hpp"

namespace coxbridge {

struct TabKnot {
  std::string name;
  int crossings = 0;
  bool alternating = false;
  KnotInvariants inv;
  int omega = 0;            // least Wirtinger number over the minimal diagrams found
  std::vector<int> rep;     // signed DT vector of a diagram attaining it
  int diagram_count = 0;
};

struct TabLevel {
  int n = 0;
  std::vector<TabKnot> knots;  // alternating classes first
  int alternating_count = 0;
  int nonalternating_count = 0;
  int shadow_count = 0;        // canonical realizable reduced prime shadows
  int two_bridge_count = 0;    // classes with omega == 2
};

struct Tabulation {
  std::vector<TabLevel> levels;
  int total() const {
    int t = 0;
    for (const TabLevel& l : levels) t += static_cast<int>(l.knots.size());
    return t;
  }
};

// Known prime knot counts per crossing number; the run must reproduce them.
inline int expected_alternating(int n) {
  static const std::map<int, int> table{{3, 1}, {4, 1},  {5, 2},  {6, 3},
                                        {7, 7}, {8, 18}, {9, 41}, {10, 123}};
  auto it = table.find(n);
  return it == table.end() ? -1 : it->second;
}
inline int expected_nonalternating(int n) {
  static const std::map<int, int> table{{3, 0}, {4, 0}, {5, 0}, {6, 0},
                                        {7, 0}, {8, 3}, {9, 8}, {10, 42}};
  auto it = table.find(n);
  return it == table.end() ? -1 : it->second;
}
inline int expected_two_bridge(int n) {
  static const std::map<int, int> table{{3, 1}, {4, 1},  {5, 2},  {6, 3},
                                        {7, 7}, {8, 12}, {9, 24}, {10, 45}};
  auto it = table.find(n);
  return it == table.end() ? -1 : it->second;
}

namespace tab_detail {

struct CanonicalShadow {
  Shadow shadow;  // under pattern preset to alternating
  Embedding emb;
  std::vector<ShadowMap> stab;
  std::vector<std::pair<int, int>> bigons;
};

inline std::vector<CanonicalShadow> canonical_shadows(int n) {
  std::vector<CanonicalShadow> out;
  enumerate_shadows(n, [&](Shadow& s) {
    if (!is_reduced(s) || !is_prime_shadow(s)) return true;
    std::vector<ShadowMap> stab;
    if (!matching_is_canonical(s, &stab)) return true;
    auto emb = realize(s);
    if (!emb) return true;
    std::vector<std::pair<int, int>> bigons = bigon_faces(s, *emb);
    out.push_back({s, *emb, std::move(stab), std::move(bigons)});
    return true;
  });
  return out;
}

// Lexicographically least unsigned DT vector over the traversal symmetries:
// the key under which canonical_shadows keeps one shadow per matching orbit.
inline std::vector<int> matching_key(const Shadow& s) {
  std::vector<int> best;
  for (const ShadowMap& f : all_maps(s.n, false)) {
    std::vector<int> cand = transformed_matching(s, f);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

// Shadows one flype away. A flype slides a crossing c through a tangle T
// and turns the tangle over. The chord of c is {a,b}; T is traversed in two
// passes I and J, nonempty and with I u J closed under the pairing. Each
// pass meets c directly at one end, which leaves three traversal patterns
// up to exchanging a and b (the passes can run through T in opposite
// directions or in the same direction), each with its own rewiring, every
// block keeping its internal order:
//
//   a, I, O1, J, b, O2   ->   I, a, O1, b, J, O2
//   a, I, O1, b, J, O2   ->   I, a, O1, J, b, O2
//   a, O1, I, b, O2, J   ->   a, I, O2, b, J, O1
//
// The under pattern of the result is reset to alternating.
inline std::vector<Shadow> flype_neighbors(const Shadow& s) {
  int period = 2 * s.n;
  std::vector<Shadow> out;
  std::vector<char> tangle(period);
  std::vector<int> newpos(period);
  using Blocks = std::initializer_list<std::pair<int, int>>;
  auto closed_tangle = [&](Blocks blocks) {
    std::fill(tangle.begin(), tangle.end(), 0);
    for (auto [from, count] : blocks)
      for (int i = 0; i < count; ++i) tangle[(from + i + period) % period] = 1;
    for (int x = 0; x < period; ++x)
      if (tangle[x] && !tangle[s.pair[x]]) return false;
    return true;
  };
  auto push = [&](Blocks order) {
    int idx = 0;
    for (auto [from, count] : order)
      for (int i = 0; i < count; ++i) newpos[(from + i + period) % period] = idx++;
    Shadow t;
    t.n = s.n;
    t.pair.resize(period);
    t.under.resize(period);
    for (int x = 0; x < period; ++x) t.pair[newpos[x]] = newpos[s.pair[x]];
    for (int x = 0; x < period; ++x) t.under[x] = static_cast<char>(x & 1);
    out.push_back(std::move(t));
  };
  for (int a = 0; a < period; ++a) {
    int b = s.pair[a];
    int len1 = (b - a + period) % period - 1;  // positions strictly between a and b
    int len2 = period - 2 - len1;              // strictly between b and a
    for (int p = 1; p < len1; ++p)
      for (int q = 1; p + q <= len1; ++q) {
        if (!closed_tangle({{a + 1, p}, {b - q, q}})) continue;
        push({{a + 1, p}, {a, 1}, {a + p + 1, len1 - p - q}, {b, 1},
              {b - q, q}, {b + 1, period - len1 - 2}});
      }
    for (int p = 1; p <= len1; ++p)
      for (int q = 1; q <= len2; ++q) {
        if (closed_tangle({{a + 1, p}, {b + 1, q}}))
          push({{a + 1, p}, {a, 1}, {a + p + 1, len1 - p}, {b + 1, q}, {b, 1},
                {b + q + 1, len2 - q}});
        if (closed_tangle({{b - p, p}, {a - q, q}}))
          push({{a, 1}, {b - p, p}, {b + 1, len2 - q}, {b, 1},
                {a - q, q}, {a + 1, len1 - p}});
      }
  }
  return out;
}

// Flype equivalence over the canonical shadows. Reduced alternating diagrams
// of the same prime knot are connected by flypes, and a flype of a reduced
// prime shadow stays reduced and prime, so the components are exactly the
// alternating knot classes at this crossing number. Returns a dense
// component id per shadow.
inline std::vector<int> flype_components(const std::vector<CanonicalShadow>& shadows) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < shadows.size(); ++i)
    index[matching_key(shadows[i].shadow)] = static_cast<int>(i);
  std::vector<int> parent(shadows.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < shadows.size(); ++i)
    for (const Shadow& t : flype_neighbors(shadows[i].shadow)) {
      auto it = index.find(matching_key(t));
      if (it == index.end())
        throw Error(Errc::invalid_pairing, "flype left the canonical set");
      parent[find(static_cast<int>(i))] = find(it->second);
    }
  std::vector<int> comp(shadows.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (comp[r] < 0) comp[r] = next++;
    comp[i] = comp[r];
  }
  return comp;
}

using AlexCache = std::map<std::vector<std::int64_t>, std::vector<std::int64_t>>;

inline KnotInvariants diagram_invariants(const Shadow& s, const Embedding& emb,
                                         AlexCache& cache) {
  KnotInvariants inv;
  inv.jones = jones_raw(s, emb);
  inv.sig = signature(s, emb);
  Diagram d = build_diagram(dt_to_gauss(s.dt()));
  std::vector<std::int64_t> values = alexander_values(d, crossing_signs(s, emb));
  auto it = cache.find(values);
  if (it == cache.end()) it = cache.emplace(values, alexander_from_values(values)).first;
  inv.alex = it->second;
  inv.det = std::abs(alexander_at(inv.alex, -1));
  if (inv.det % 2 == 0) throw Error(Errc::invalid_pairing, "even determinant");
  // |H1| equals the coloring determinant, so this also cross-checks the
  // Alexander value at -1 against the Fox coloring matrix.
  inv.h1 = fox::homology_divisors(d);
  std::int64_t prod = 1;
  for (std::int64_t c : inv.h1) prod *= c;
  if (prod != inv.det) throw Error(Errc::invalid_pairing, "homology cross-check");
  canonicalize_chirality(inv);
  return inv;
}

struct ClassAccum {
  KnotInvariants inv;
  std::vector<std::vector<int>> dts;
};

// All over/under assignments of a canonical shadow that could be a minimal
// diagram: a bigon face whose two passes along one side agree in over/under
// admits a crossing-removing move, so both crossings of every bigon must
// carry equal even-position under flags (the constraint is the same from
// either side). Components of the bigon graph are free; assignments are kept
// one per stabilizer-and-mirror orbit and the two alternating patterns are
// skipped.
inline void for_each_nonalternating(const CanonicalShadow& cs,
                                    const std::function<void(const Shadow&)>& fn) {
  int n = cs.shadow.n;
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& [x, y] : cs.bigons) {
    int a = find(cs.shadow.vertex_of(x));
    int b = find(cs.shadow.vertex_of((x + 1) % (2 * n)));
    (void)y;
    if (a != b) parent[a] = b;
  }
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) roots.push_back(v);
  int comps = static_cast<int>(roots.size());
  Shadow s = cs.shadow;
  std::vector<char> uv(n);
  for (std::uint32_t mask = 0; mask < (1u << comps); ++mask) {
    bool constant = mask == 0 || mask + 1 == (1u << comps);
    if (constant) continue;  // the two alternating assignments
    std::vector<char> root_bit(n, 0);
    for (int k = 0; k < comps; ++k) root_bit[roots[k]] = (mask >> k) & 1u;
    for (int v = 0; v < n; ++v) uv[v] = root_bit[find(v)];
    for (int v = 0; v < n; ++v) {
      s.under[2 * v] = uv[v];
      s.under[s.pair[2 * v]] = 1 - uv[v];
    }
    if (!signs_are_canonical(s, cs.stab)) continue;
    fn(s);
  }
}

// Exclusion keys for the non-alternating pass at level n: every knot already
// certified at lower crossing number, every alternating knot at n, the
// unknot, and every connected sum whose factor crossing numbers fit the
// budget. Reduced diagrams of such knots at n are not new; any other knot
// appearing here would change the anchored class count.
inline std::set<std::string> exclusion_keys(
    const std::vector<std::pair<int, KnotInvariants>>& atoms, int budget) {
  std::set<std::string> excl;
  KnotInvariants unknot;
  unknot.alex = {1};
  unknot.jones.terms = {{0, 1}};
  unknot.det = 1;
  excl.insert(unknot.key());
  for (const auto& [cost, inv] : atoms) excl.insert(inv.key());
  std::function<void(const KnotInvariants&, int, std::size_t)> grow =
      [&](const KnotInvariants& cur, int cost, std::size_t min_i) {
        for (std::size_t i = min_i; i < atoms.size(); ++i) {
          int c2 = cost + atoms[i].first;
          if (c2 > budget) continue;
          for (const KnotInvariants& inv : composite_invariants(cur, atoms[i].second)) {
            excl.insert(inv.key());
            grow(inv, c2, i);
          }
        }
      };
  for (std::size_t i = 0; i < atoms.size(); ++i)
    grow(atoms[i].second, atoms[i].first, i);
  return excl;
}

}  // namespace tab_detail

// Tabulates one crossing number. certified carries (crossing number,
// invariants) of every knot established at lower levels; the returned
// level appends its own. log, when set, receives progress lines.
inline TabLevel tabulate_level(int n,
                               std::vector<std::pair<int, KnotInvariants>>& certified,
                               tab_detail::AlexCache& cache,
                               const std::function<void(const std::string&)>& log = {}) {
  using namespace tab_detail;
  TabLevel level;
  level.n = n;
  std::vector<CanonicalShadow> shadows = canonical_shadows(n);
  level.shadow_count = static_cast<int>(shadows.size());

  // Alternating classes are flype components; invariants must be constant
  // on each component, which cross-checks the flype rewiring against every
  // invariant at once.
  std::vector<int> comp = flype_components(shadows);
  std::vector<ClassAccum> alt;
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    const CanonicalShadow& cs = shadows[i];
    KnotInvariants inv = diagram_invariants(cs.shadow, cs.emb, cache);
    if (comp[i] >= static_cast<int>(alt.size())) alt.resize(comp[i] + 1);
    ClassAccum& acc = alt[comp[i]];
    if (acc.dts.empty())
      acc.inv = inv;
    else if (!(acc.inv == inv))
      throw Error(Errc::invalid_pairing, "flype component invariant mismatch");
    acc.dts.push_back(cs.shadow.dt());
  }
  level.alternating_count = static_cast<int>(alt.size());
  if (log)
    log("n=" + std::to_string(n) + ": " + std::to_string(shadows.size()) +
        " shadows, " + std::to_string(alt.size()) + " alternating classes");

  // Certified knots at this level's own crossing number take part in the
  // exclusion set (as connected-sum factors they cannot, but a budget check
  // inside the growth handles that: factors of a sum realized at n total at
  // most the budget).
  std::vector<std::pair<int, KnotInvariants>> atoms = certified;
  for (const ClassAccum& acc : alt) atoms.push_back({n, acc.inv});
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::set<std::string> excl = exclusion_keys(atoms, n + 3);

  std::map<std::string, ClassAccum> nonalt;
  for (const CanonicalShadow& cs : shadows) {
    for_each_nonalternating(cs, [&](const Shadow& s) {
      KnotInvariants inv = diagram_invariants(s, cs.emb, cache);
      std::string key = inv.key();
      if (excl.count(key)) return;
      ClassAccum& acc = nonalt[key];
      acc.inv = inv;
      acc.dts.push_back(s.dt());
    });
  }
  level.nonalternating_count = static_cast<int>(nonalt.size());
  if (log)
    log("n=" + std::to_string(n) + ": " + std::to_string(nonalt.size()) +
        " nonalternating classes");

  int want_alt = expected_alternating(n);
  int want_non = expected_nonalternating(n);
  if (want_alt >= 0 && level.alternating_count != want_alt)
    throw Error(Errc::multiple_classes,
                "alternating class count at n=" + std::to_string(n) + ": got " +
                    std::to_string(level.alternating_count) + ", expected " +
                    std::to_string(want_alt));
  if (want_non >= 0 && level.nonalternating_count != want_non)
    throw Error(Errc::multiple_classes,
                "nonalternating class count at n=" + std::to_string(n) + ": got " +
                    std::to_string(level.nonalternating_count) + ", expected " +
                    std::to_string(want_non));

  // Representatives: least Wirtinger number over the class's diagrams, ties
  // to the lexicographically least DT vector.
  auto emit = [&](std::vector<ClassAccum>& classes, bool alternating) {
    std::vector<TabKnot> knots;
    for (ClassAccum& acc : classes) {
      TabKnot k;
      k.crossings = n;
      k.alternating = alternating;
      k.inv = acc.inv;
      k.diagram_count = static_cast<int>(acc.dts.size());
      std::sort(acc.dts.begin(), acc.dts.end());
      k.omega = 0;
      for (const std::vector<int>& dtv : acc.dts) {
        Diagram d = build_diagram(dt_to_gauss(dtv));
        WirtingerResult wr = wirtinger_number(d);
        if (k.omega == 0 || wr.omega < k.omega) {
          k.omega = wr.omega;
          k.rep = dtv;
        }
      }
      knots.push_back(std::move(k));
    }
    std::sort(knots.begin(), knots.end(),
              [](const TabKnot& a, const TabKnot& b) { return a.rep < b.rep; });
    for (std::size_t i = 0; i < knots.size(); ++i)
      knots[i].name = std::to_string(n) + (alternating ? "a" : "n") + std::to_string(i + 1);
    return knots;
  };
  level.knots = emit(alt, true);
  std::vector<ClassAccum> nonalt_classes;
  for (auto& [key, acc] : nonalt) nonalt_classes.push_back(std::move(acc));
  std::vector<TabKnot> extra = emit(nonalt_classes, false);
  level.knots.insert(level.knots.end(), extra.begin(), extra.end());

  for (const TabKnot& k : level.knots)
    if (k.omega == 2) ++level.two_bridge_count;
  int want_two = expected_two_bridge(n);
  if (want_two >= 0 && level.two_bridge_count != want_two)
    throw Error(Errc::multiple_classes,
                "two-bridge count at n=" + std::to_string(n) + ": got " +
                    std::to_string(level.two_bridge_count) + ", expected " +
                    std::to_string(want_two));

  for (const TabKnot& k : level.knots) certified.push_back({n, k.inv});
  return level;
}

inline Tabulation tabulate(int max_crossings,
                           const std::function<void(const std::string&)>& log = {}) {
  Tabulation tab;
  std::vector<std::pair<int, KnotInvariants>> certified;
  tab_detail::AlexCache cache;
  for (int n = 3; n <= max_crossings; ++n)
    tab.levels.push_back(tabulate_level(n, certified, cache, log));
  return tab;
}

// Fixture emission: "name: dt entries", one knot per line.
inline std::string format_dt_file(const Tabulation& tab) {
  std::string out;
  out += "# prime knots by crossing number, DT codes of the recorded diagrams\n";
  for (const TabLevel& level : tab.levels)
    for (const TabKnot& k : level.knots) {
      out += k.name + ":";
      for (int v : k.rep) out += ' ' + std::to_string(v);
      out += '\n';
    }
  return out;
}

}  // namespace coxbridge

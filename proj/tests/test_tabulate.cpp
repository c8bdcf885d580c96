#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "coxbridge/invariants.hpp"
#include "coxbridge/shadow.hpp"
#include "coxbridge/tabulate.hpp"

using namespace coxbridge;

namespace {

// Invariants of a DT code through the full realize-and-classify path.
KnotInvariants inv_of(const std::vector<int>& dt) {
  Shadow s = shadow_from_dt(dt);
  auto emb = realize(s);
  REQUIRE(emb.has_value());
  return shadow_invariants(s, *emb);
}

Laurent laurent_of(std::vector<std::pair<int, std::int64_t>> terms) {
  Laurent l;
  l.terms = std::move(terms);
  return l;
}

}  // namespace

TEST_CASE("shadow round trip and enumeration") {
  Shadow s = shadow_from_dt({4, 6, 2});
  REQUIRE(s.dt() == std::vector<int>{4, 6, 2});
  REQUIRE(s.pair[0] == 3);
  REQUIRE(s.vertex_of(0) == 0);
  REQUIRE(s.vertex_of(3) == 0);

  int count2 = 0, count3 = 0;
  enumerate_shadows(2, [&](Shadow&) { ++count2; return true; });
  enumerate_shadows(3, [&](Shadow& t) {
    ++count3;
    REQUIRE(t.dt() == std::vector<int>{4, 6, 2});
    return true;
  });
  REQUIRE(count2 == 0);  // two crossings force a kink
  REQUIRE(count3 == 1);
}

TEST_CASE("reducedness and primeness filters") {
  REQUIRE(is_reduced(shadow_from_dt({4, 6, 2})));
  REQUIRE(is_prime_shadow(shadow_from_dt({4, 6, 2})));
  // nugatory crossing: positions 1 and 2 pair, cutting off a closed interval
  REQUIRE_FALSE(is_reduced(shadow_from_dt({6, 2, 4})));
  // granny knot diagram: two trefoil factors side by side
  Shadow granny = shadow_from_dt({4, 6, 2, 10, 12, 8});
  REQUIRE(is_reduced(granny));
  REQUIRE_FALSE(is_prime_shadow(granny));
}

TEST_CASE("canonical form of the trefoil matching") {
  Shadow s = shadow_from_dt({4, 6, 2});
  std::vector<ShadowMap> stab;
  REQUIRE(matching_is_canonical(s, &stab));
  // every relabeling of the unique 3-shadow fixes it
  REQUIRE(stab.size() == 12);
  // all-positive loses to its all-negative mirror image lexicographically
  REQUIRE_FALSE(signs_are_canonical(s, stab));
  Shadow neg = shadow_from_dt({-4, -6, -2});
  REQUIRE(signs_are_canonical(neg, stab));
  // brute force: no relabeling gives a smaller matching vector
  std::vector<int> self{4, 6, 2};
  for (const ShadowMap& f : all_maps(3, false))
    REQUIRE_FALSE(transformed_matching(s, f) < self);
}

TEST_CASE("planar realization of small shadows") {
  Shadow s = shadow_from_dt({4, 6, 2});
  auto emb = realize(s);
  REQUIRE(emb.has_value());
  REQUIRE(face_count(s, *emb) == 5);
  // the trefoil embedding is unique once one rotation is pinned
  int realizations = 0;
  Embedding probe;
  probe.rot.assign(3, 0);
  for (int mask = 0; mask < 4; ++mask) {
    probe.rot[1] = mask & 1;
    probe.rot[2] = (mask >> 1) & 1;
    if (face_count(s, probe) == 5) ++realizations;
  }
  REQUIRE(realizations == 1);
  // standard trefoil diagram: three bigon faces, writhe of size three
  REQUIRE(bigon_faces(s, *emb).size() == 3);
  std::vector<int> signs = crossing_signs(s, *emb);
  REQUIRE(std::abs(signs[0] + signs[1] + signs[2]) == 3);

  Shadow f8 = shadow_from_dt({4, 6, 8, 2});
  auto emb8 = realize(f8);
  REQUIRE(emb8.has_value());
  REQUIRE(face_count(f8, *emb8) == 6);
  // figure-eight: writhe zero
  std::vector<int> s8 = crossing_signs(f8, *emb8);
  REQUIRE(s8[0] + s8[1] + s8[2] + s8[3] == 0);
}

TEST_CASE("laurent arithmetic") {
  Laurent a = laurent_of({{-1, 1}, {0, 1}});
  Laurent b = laurent_of({{0, 1}, {1, 1}});
  REQUIRE(laurent_mul(a, b) == laurent_of({{-1, 1}, {0, 2}, {1, 1}}));
  REQUIRE(laurent_mirror(b) == laurent_of({{-1, 1}, {0, 1}}));
  REQUIRE(mirror_canonical(b) == laurent_of({{-1, 1}, {0, 1}}));
  REQUIRE(laurent_str(a) == "-1:1 0:1");
}

TEST_CASE("jones polynomial oracles") {
  Shadow tre = shadow_from_dt({4, 6, 2});
  REQUIRE(jones(tre, *realize(tre)) ==
          laurent_of({{-4, -1}, {-3, 1}, {-1, 1}}));

  Shadow f8 = shadow_from_dt({4, 6, 8, 2});
  REQUIRE(jones(f8, *realize(f8)) ==
          laurent_of({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));

  Shadow cinq = shadow_from_dt({6, 8, 10, 2, 4});
  REQUIRE(jones(cinq, *realize(cinq)) ==
          laurent_of({{-7, -1}, {-6, 1}, {-5, -1}, {-4, 1}, {-2, 1}}));
}

TEST_CASE("alexander polynomial oracles") {
  KnotInvariants tre = inv_of({4, 6, 2});
  REQUIRE(tre.alex == std::vector<std::int64_t>{1, -1, 1});
  REQUIRE(tre.det == 3);

  KnotInvariants f8 = inv_of({4, 6, 8, 2});
  REQUIRE(f8.alex == std::vector<std::int64_t>{-1, 3, -1});
  REQUIRE(f8.det == 5);

  KnotInvariants five2 = inv_of({4, 8, 10, 2, 6});
  REQUIRE(five2.alex == std::vector<std::int64_t>{2, -3, 2});
  REQUIRE(five2.det == 7);

  REQUIRE(alexander_at({1, -1, 1}, -1) == 3);
  REQUIRE(alexander_at({-1, 3, -1}, 1) == 1);
}

TEST_CASE("signature oracles") {
  auto sig_of = [](const std::vector<int>& dt) {
    Shadow s = shadow_from_dt(dt);
    return signature(s, *realize(s));
  };
  REQUIRE(sig_of({4, 6, 2}) == 2);     // left-handed trefoil
  REQUIRE(sig_of({-4, -6, -2}) == -2);  // its mirror
  REQUIRE(sig_of({4, 6, 8, 2}) == 0);  // figure eight, amphichiral
  REQUIRE(std::abs(sig_of({6, 8, 10, 2, 4})) == 4);
  REQUIRE(std::abs(sig_of({4, 8, 10, 2, 6})) == 2);
}

TEST_CASE("flype moves stay inside the canonical shadow set") {
  using namespace tab_detail;
  // every flype of the lone 3-shadow lands back on itself
  Shadow tre = shadow_from_dt({4, 6, 2});
  std::vector<int> key = matching_key(tre);
  for (const Shadow& t : flype_neighbors(tre)) REQUIRE(matching_key(t) == key);

  // eight crossings: 27 shadows fall into the 18 knot classes, and the two
  // diagrams below are joined only by a flype whose tangle passes run in the
  // same direction
  std::vector<CanonicalShadow> shadows = canonical_shadows(8);
  std::vector<int> comp = flype_components(shadows);
  REQUIRE(*std::max_element(comp.begin(), comp.end()) == 17);
  int ca = -1, cb = -1;
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    std::vector<int> dt = shadows[i].shadow.dt();
    for (int& x : dt) x = std::abs(x);
    if (dt == std::vector<int>{4, 10, 12, 14, 16, 2, 8, 6}) ca = comp[i];
    if (dt == std::vector<int>{4, 10, 12, 16, 14, 2, 6, 8}) cb = comp[i];
  }
  REQUIRE(ca >= 0);
  REQUIRE(ca == cb);
}

TEST_CASE("composite invariants cover both chiralities") {
  KnotInvariants tre = inv_of({4, 6, 2});
  REQUIRE(tre.h1 == std::vector<std::int64_t>{3});
  REQUIRE(tre.sig == 2);  // chirality-canonical form is the left trefoil
  std::vector<KnotInvariants> sums = composite_invariants(tre, tre);
  REQUIRE(sums.size() == 2);  // granny and square
  for (const KnotInvariants& s : sums) {
    REQUIRE(s.det == 9);
    REQUIRE(s.alex == std::vector<std::int64_t>{1, -2, 3, -2, 1});
    REQUIRE(s.h1 == std::vector<std::int64_t>{3, 3});
  }
  REQUIRE_FALSE(sums[0].jones == sums[1].jones);
  REQUIRE(sums[0].sig == 4);  // granny; the square knot sums to zero
  REQUIRE(sums[1].sig == 0);
}

TEST_CASE("tabulation reproduces the knot tables through eight crossings") {
  Tabulation tab = tabulate(8);
  REQUIRE(tab.levels.size() == 6);
  REQUIRE(tab.total() == 35);

  const std::vector<int> alt{1, 1, 2, 3, 7, 18};
  const std::vector<int> non{0, 0, 0, 0, 0, 3};
  const std::vector<int> two{1, 1, 2, 3, 7, 12};
  for (std::size_t i = 0; i < tab.levels.size(); ++i) {
    const TabLevel& level = tab.levels[i];
    REQUIRE(level.n == static_cast<int>(i) + 3);
    REQUIRE(level.alternating_count == alt[i]);
    REQUIRE(level.nonalternating_count == non[i]);
    REQUIRE(level.two_bridge_count == two[i]);
  }

  const TabKnot& trefoil = tab.levels[0].knots.at(0);
  REQUIRE(trefoil.name == "3a1");
  REQUIRE(trefoil.rep == std::vector<int>{4, 6, 2});
  REQUIRE(trefoil.omega == 2);
  REQUIRE(trefoil.inv.det == 3);

  const TabKnot& f8 = tab.levels[1].knots.at(0);
  REQUIRE(f8.name == "4a1");
  REQUIRE(f8.rep == std::vector<int>{4, 6, 8, 2});
  REQUIRE(f8.inv.det == 5);

  auto dets = [](const TabLevel& level, bool alternating) {
    std::multiset<std::int64_t> out;
    for (const TabKnot& k : level.knots)
      if (k.alternating == alternating) out.insert(k.inv.det);
    return out;
  };
  REQUIRE(dets(tab.levels[2], true) == std::multiset<std::int64_t>{5, 7});
  REQUIRE(dets(tab.levels[3], true) == std::multiset<std::int64_t>{9, 11, 13});

  // eight crossings: the three nonalternating knots and the 3-bridge count
  const TabLevel& eight = tab.levels[5];
  REQUIRE(dets(eight, false) == std::multiset<std::int64_t>{3, 9, 15});
  int omega3 = 0;
  for (const TabKnot& k : eight.knots) {
    REQUIRE((k.omega == 2 || k.omega == 3));
    if (k.omega == 3) ++omega3;
  }
  REQUIRE(omega3 == 9);
  for (const TabKnot& k : eight.knots)
    if (!k.alternating && k.inv.det == 3) {
      // (3,4) torus knot: bridge number three, known Alexander polynomial
      REQUIRE(k.omega == 3);
      REQUIRE(k.inv.alex == std::vector<std::int64_t>{1, -1, 0, 1, 0, -1, 1});
    }

  // every name is unique and every representative parses back to a diagram
  std::set<std::string> names;
  for (const TabLevel& level : tab.levels)
    for (const TabKnot& k : level.knots) {
      REQUIRE(names.insert(k.name).second);
      Diagram d = build_diagram(dt_to_gauss(k.rep, k.name));
      REQUIRE(d.size() == level.n);
    }
}

TEST_CASE("dt fixture formatting") {
  Tabulation tab = tabulate(4);
  std::string text = format_dt_file(tab);
  REQUIRE(text.find("3a1: 4 6 2\n") != std::string::npos);
  REQUIRE(text.find("4a1: 4 6 8 2\n") != std::string::npos);
}

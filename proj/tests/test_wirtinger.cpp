#include <catch_amalgamated.hpp>

#include "coxbridge/diagram.hpp"
#include "coxbridge/wirtinger.hpp"

using namespace coxbridge;

namespace {
Diagram diagram(const char* code) { return build_diagram(parse_gauss(code)); }
const char* k816 = "-1,2,-3,4,-8,6,-7,3,-4,5,-6,1,-2,7,-5,8";
}  // namespace

TEST_CASE("saturate trefoil") {
  Diagram d = diagram("-1,2,-3,1,-2,3");

  Saturation stall = saturate(d, {0});
  REQUIRE_FALSE(stall.complete);
  REQUIRE(stall.moves.empty());

  Saturation full = saturate(d, {0, 1});
  REQUIRE(full.complete);
  REQUIRE(full.moves.size() == 1);
  REQUIRE(full.moves[0].colored == 2);
}

TEST_CASE("wirtinger numbers of small diagrams") {
  WirtingerResult tref = wirtinger_number(diagram("-1,2,-3,1,-2,3"));
  REQUIRE(tref.omega == 2);
  REQUIRE(tref.seeds == SeedSet{0, 1});
  REQUIRE(tref.moves.size() == 1);

  REQUIRE(wirtinger_number(diagram("1,-1")).omega == 1);

  Diagram fig8 = build_diagram(dt_to_gauss({4, 6, 8, 2}, "fig8"));
  WirtingerResult w8 = wirtinger_number(fig8);
  REQUIRE(w8.omega == 2);
  REQUIRE(replay_check(fig8, w8.seeds, w8.moves));
}

TEST_CASE("an 8_16 diagram has Wirtinger number 3") {
  Diagram d = diagram(k816);
  WirtingerResult wr = wirtinger_number(d);
  REQUIRE(wr.omega == 3);
  REQUIRE(replay_check(d, wr.seeds, wr.moves));

  // A complete three-seed choice for this diagram: strands
  // (-5,8,-1), (-6,1,-2), (-8,6,-7) = indices 7, 5, 2.
  Saturation s = saturate(d, {2, 5, 7});
  REQUIRE(s.complete);
  REQUIRE(s.moves.size() == 5);  // m - k = 8 - 3

  // No pair of strands suffices.
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) REQUIRE_FALSE(saturate(d, {i, j}).complete);
}

TEST_CASE("complete sequences have m - k moves and valid replays") {
  for (const char* code :
       {"-1,2,-3,1,-2,3", k816, "1,-1", "-1,4,-2,1,-3,2,-4,3"}) {
    Diagram d = diagram(code);
    WirtingerResult wr = wirtinger_number(d);
    REQUIRE(static_cast<int>(wr.moves.size()) == d.size() - wr.omega);
    REQUIRE(replay_check(d, wr.seeds, wr.moves));
  }
}

TEST_CASE("replay_check rejects tampered sequences") {
  Diagram d = diagram("-1,2,-3,1,-2,3");
  WirtingerResult wr = wirtinger_number(d);
  REQUIRE(replay_check(d, wr.seeds, wr.moves));

  MoveSequence wrong_over = wr.moves;
  wrong_over[0].over = (wrong_over[0].over + 1) % 3;
  REQUIRE_FALSE(replay_check(d, wr.seeds, wrong_over));

  MoveSequence truncated;  // leaves strands uncolored
  REQUIRE_FALSE(replay_check(d, wr.seeds, truncated));

  REQUIRE_FALSE(replay_check(d, {0}, wr.moves));  // missing seed
}

TEST_CASE("wirtinger_number respects k_max") {
  Diagram d = diagram(k816);
  REQUIRE_THROWS_AS(wirtinger_number(d, 2), Error);
  try {
    wirtinger_number(d, 2);
  } catch (const Error& e) {
    REQUIRE(e.code == Errc::not_found);
  }
}

TEST_CASE("seed sets are reported in lexicographic order") {
  // For the figure-8 code the first complete pair must be the smallest one.
  Diagram d = build_diagram(dt_to_gauss({4, 6, 8, 2}));
  WirtingerResult wr = wirtinger_number(d);
  bool earlier_complete = false;
  for (int i = 0; i < d.size() && !earlier_complete; ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      SeedSet s{i, j};
      if (s < wr.seeds && saturate(d, s).complete) earlier_complete = true;
    }
  REQUIRE_FALSE(earlier_complete);
}

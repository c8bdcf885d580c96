#include <catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>

#include "coxbridge/diagram.hpp"
#include "coxbridge/gauss.hpp"

using namespace coxbridge;

namespace {
const char* kTrefoil = "-1,2,-3,1,-2,3";
const char* k816 = "-1,2,-3,4,-8,6,-7,3,-4,5,-6,1,-2,7,-5,8";
}  // namespace

TEST_CASE("parse_gauss basics") {
  GaussCode c = parse_gauss(kTrefoil);
  REQUIRE(c.crossings() == 3);
  REQUIRE(c.entries == std::vector<int>{-1, 2, -3, 1, -2, 3});
  REQUIRE(c.name.empty());

  GaussCode named = parse_gauss("trefoil:  -1 2 -3 1 -2 3");
  REQUIRE(named.name == "trefoil");
  REQUIRE(named.entries == c.entries);

  GaussCode mixed = parse_gauss("k: -1, 2 -3,1  -2, 3");
  REQUIRE(mixed.entries == c.entries);
}

TEST_CASE("parse_gauss rejects malformed codes") {
  auto code_of = [](const char* s) {
    try {
      parse_gauss(s);
    } catch (const Error& e) {
      return e.code;
    }
    return Errc::not_found;
  };
  REQUIRE(code_of("-1,2,x,1,-2,3") == Errc::malformed_token);
  REQUIRE(code_of("1,-1,0,2") == Errc::zero_entry);
  REQUIRE(code_of("1,2,-1") == Errc::unpaired_crossing);        // odd length
  REQUIRE(code_of("1,1,-1,-1") == Errc::unpaired_crossing);     // 1 twice over
  REQUIRE(code_of("1,-1,3,-3") == Errc::unpaired_crossing);     // label exceeds m
  REQUIRE(code_of("") == Errc::unpaired_crossing);              // empty
  REQUIRE(code_of("1.5,-1") == Errc::malformed_token);
}

TEST_CASE("dt_to_gauss on standard codes") {
  GaussCode tref = dt_to_gauss({4, 6, 2}, "trefoil");
  REQUIRE(tref.entries == std::vector<int>{-1, 3, -2, 1, -3, 2});
  REQUIRE(tref.name == "trefoil");

  GaussCode fig8 = dt_to_gauss({4, 6, 8, 2});
  REQUIRE(fig8.entries == std::vector<int>{-1, 4, -2, 1, -3, 2, -4, 3});

  // Negative entries flip over/under at the odd position.
  GaussCode mirror = dt_to_gauss({-4, -6, -2});
  REQUIRE(mirror.entries == std::vector<int>{1, -3, 2, -1, 3, -2});
}

TEST_CASE("dt_to_gauss rejects malformed codes") {
  auto code_of = [](std::vector<int> dt) {
    try {
      dt_to_gauss(dt);
    } catch (const Error& e) {
      return e.code;
    }
    return Errc::not_found;
  };
  REQUIRE(code_of({3, 6, 2}) == Errc::position_clash);   // odd entry
  REQUIRE(code_of({4, 4, 2}) == Errc::invalid_pairing);  // repeated
  REQUIRE(code_of({4, 6, 8}) == Errc::invalid_pairing);  // 8 > 2m
  REQUIRE(code_of({4, 0, 2}) == Errc::zero_entry);
  REQUIRE(code_of({}) == Errc::unpaired_crossing);
}

TEST_CASE("build_diagram trefoil structure") {
  Diagram d = build_diagram(parse_gauss(kTrefoil));
  REQUIRE(d.size() == 3);
  REQUIRE(d.strands.size() == 3);
  REQUIRE(d.strands[0].entries == std::vector<int>{-1, 2, -3});
  REQUIRE(d.strands[1].entries == std::vector<int>{-3, 1, -2});
  REQUIRE(d.strands[2].entries == std::vector<int>{-2, 3, -1});

  // crossing k: over strand / strand ending at -k / strand starting at -k
  REQUIRE(d.crossings[0].over == 1);
  REQUIRE(d.crossings[0].under_a == 2);
  REQUIRE(d.crossings[0].under_b == 0);
  REQUIRE(d.crossings[1].over == 0);
  REQUIRE(d.crossings[1].under_a == 1);
  REQUIRE(d.crossings[1].under_b == 2);
  REQUIRE(d.crossings[2].over == 2);
  REQUIRE(d.crossings[2].under_a == 0);
  REQUIRE(d.crossings[2].under_b == 1);
}

TEST_CASE("build_diagram on an 8_16 diagram") {
  Diagram d = build_diagram(parse_gauss(k816));
  REQUIRE(d.size() == 8);
  REQUIRE(d.strands.size() == 8);
  REQUIRE(d.strands[7].entries == std::vector<int>{-5, 8, -1});
  REQUIRE(d.strands[5].entries == std::vector<int>{-6, 1, -2});
  REQUIRE(d.strands[2].entries == std::vector<int>{-8, 6, -7});

  struct Row { int over, a, b; };
  const Row expect[8] = {{5, 7, 0}, {0, 5, 6}, {3, 0, 1}, {1, 3, 4},
                         {4, 6, 7}, {2, 4, 5}, {6, 2, 3}, {7, 1, 2}};
  for (int k = 0; k < 8; ++k) {
    CAPTURE(k);
    REQUIRE(d.crossings[k].over == expect[k].over);
    REQUIRE(d.crossings[k].under_a == expect[k].a);
    REQUIRE(d.crossings[k].under_b == expect[k].b);
  }
}

TEST_CASE("build_diagram kink") {
  Diagram d = build_diagram(parse_gauss("1,-1"));
  REQUIRE(d.size() == 1);
  REQUIRE(d.strands[0].entries == std::vector<int>{-1, 1, -1});
  REQUIRE(d.crossings[0].over == 0);
  REQUIRE(d.crossings[0].under_a == 0);
  REQUIRE(d.crossings[0].under_b == 0);
}

TEST_CASE("every strand starts and ends with an under-pass") {
  for (const char* code : {kTrefoil, k816, "1,-1"}) {
    Diagram d = build_diagram(parse_gauss(code));
    REQUIRE(static_cast<int>(d.strands.size()) == d.size());
    for (const Strand& s : d.strands) {
      REQUIRE(s.entries.front() < 0);
      REQUIRE(s.entries.back() < 0);
      for (std::size_t i = 1; i + 1 < s.entries.size(); ++i) REQUIRE(s.entries[i] > 0);
    }
  }
}

TEST_CASE("read_knot_file mixes formats and skips comments") {
  std::string path = "/tmp/coxbridge_test_knots.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "trefoil: -1,2,-3,1,-2,3\n";
    out << "\n";
    out << "fig8: 4 6 8 2\n";
    out << "8_16: " << k816 << "\n";
  }
  auto codes = read_knot_file(path);
  REQUIRE(codes.size() == 3);
  REQUIRE(codes[0].name == "trefoil");
  REQUIRE(codes[0].crossings() == 3);
  REQUIRE(codes[1].name == "fig8");
  REQUIRE(codes[1].entries == std::vector<int>{-1, 4, -2, 1, -3, 2, -4, 3});
  REQUIRE(codes[2].name == "8_16");
  REQUIRE(codes[2].crossings() == 8);
  std::remove(path.c_str());
}

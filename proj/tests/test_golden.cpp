#include <catch_amalgamated.hpp>
#include <random>

#include "coxbridge/golden.hpp"

using namespace coxbridge;

namespace {
GoldenInt rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  return {d(rng), d(rng)};
}
}  // namespace

TEST_CASE("golden ring identities") {
  GoldenInt phi{0, 1};
  REQUIRE(phi * phi == GoldenInt(1, 1));  // phi^2 = phi + 1

  std::mt19937_64 rng(20240815);
  for (int t = 0; t < 500; ++t) {
    GoldenInt x = rnd(rng), y = rnd(rng), z = rnd(rng);
    REQUIRE((x + y) * z == x * z + y * z);
    REQUIRE(x * (y * z) == (x * y) * z);
    REQUIRE(x * y == y * x);
    REQUIRE((x * y).conj() == x.conj() * y.conj());
    REQUIRE((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("golden sign via Fibonacci convergents") {
  // F(n+1) - F(n) phi alternates sign and tends to zero.
  REQUIRE(GoldenInt(2, -1).sign() == 1);    // 2 - phi > 0
  REQUIRE(GoldenInt(3, -2).sign() == -1);   // 3 - 2 phi < 0
  REQUIRE(GoldenInt(5, -3).sign() == 1);
  REQUIRE(GoldenInt(8, -5).sign() == -1);
  REQUIRE(GoldenInt(13, -8).sign() == 1);
  REQUIRE(GoldenInt(0, 0).sign() == 0);
  REQUIRE(GoldenInt(-1, 1).sign() == 1);    // phi - 1 > 0
  REQUIRE(GoldenInt(1, -1).sign() == -1);
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    GoldenInt x = rnd(rng), y = rnd(rng);
    if (y.norm() == 0) continue;
    REQUIRE(exact_div(x * y, y) == x);
  }
  REQUIRE_THROWS_AS(exact_div(GoldenInt(1), GoldenInt(2)), Error);
  REQUIRE_THROWS_AS(exact_div(GoldenInt(1), GoldenInt(0)), Error);
}

TEST_CASE("determinant, adjugate, inverse") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 50; ++t) {
      GMat m;
      m.n = n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = {d(rng), d(rng)};
      GoldenInt dm = det(m);
      GMat prod = m * adjugate(m);
      GMat expect;
      expect.n = n;
      for (int i = 0; i < n; ++i) expect.at(i, i) = dm;
      REQUIRE(prod == expect);
    }
  }

  GMat s = GMat::identity(3);
  s.at(0, 0) = GoldenInt(-1);
  s.at(0, 1) = GoldenInt(1);
  s.at(0, 2) = GoldenInt(0, 1);
  REQUIRE(det(s) == GoldenInt(-1));
  REQUIRE(unimodular_inverse(s) * s == GMat::identity(3));
  REQUIRE(s * unimodular_inverse(s) == GMat::identity(3));
}

TEST_CASE("matrix hash distinguishes nearby matrices") {
  GMat a = GMat::identity(4), b = GMat::identity(4);
  b.at(3, 3) = GoldenInt(1, 1);
  REQUIRE(a.hash() != b.hash());
  REQUIRE(a.hash() == GMat::identity(4).hash());
}

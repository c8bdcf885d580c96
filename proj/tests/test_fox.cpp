#include <catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "coxbridge/diagram.hpp"
#include "coxbridge/fox.hpp"

using namespace coxbridge;

namespace {

Diagram diagram(const char* code) { return build_diagram(parse_gauss(code)); }
const char* kTrefoil = "-1,2,-3,1,-2,3";
const char* k816 = "-1,2,-3,4,-8,6,-7,3,-4,5,-6,1,-2,7,-5,8";

// Oracle 1: count every assignment f : strands -> Z/p satisfying
// 2 f(over) = f(under_a) + f(under_b) at each crossing.
long long count_colorings(const Diagram& d, int p) {
  int m = d.size();
  std::vector<int> f(m, 0);
  long long total = 0;
  while (true) {
    bool ok = true;
    for (const Crossing& c : d.crossings)
      if ((2 * f[c.over]) % p != (f[c.under_a] + f[c.under_b]) % p) {
        ok = false;
        break;
      }
    if (ok) ++total;
    int i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) break;
  }
  return total;
}

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

// Oracle 2: signed determinant by Laplace expansion along the first row.
std::int64_t laplace_det(const std::vector<std::vector<std::int64_t>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t det = 0;
  for (int j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> sub(n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) sub[i - 1].push_back(a[i][k]);
    std::int64_t term = a[0][j] * laplace_det(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

std::int64_t laplace_minor(const Diagram& d) {
  auto rows = fox::coloring_matrix(d);
  int m = d.size();
  std::vector<std::vector<std::int64_t>> minor(m - 1);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) minor[i - 1].push_back(rows[i][j]);
  std::int64_t det = laplace_det(minor);
  return det < 0 ? -det : det;
}

}  // namespace

TEST_CASE("coloring matrix of the trefoil") {
  auto rows = fox::coloring_matrix(diagram(kTrefoil));
  REQUIRE(rows == std::vector<std::vector<std::int64_t>>{
                      {1, -2, 1}, {-2, 1, 1}, {1, 1, -2}});
}

TEST_CASE("determinants of small knots") {
  REQUIRE(fox::determinant(diagram(kTrefoil)) == 3);
  REQUIRE(fox::determinant(build_diagram(dt_to_gauss({4, 6, 8, 2}))) == 5);
  REQUIRE(fox::determinant(diagram(k816)) == 35);
  REQUIRE(fox::determinant(diagram("1,-1")) == 1);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  for (const char* code : {kTrefoil, k816, "-1,4,-2,1,-3,2,-4,3"}) {
    Diagram d = diagram(code);
    REQUIRE(fox::determinant(d) == fox::BigInt(laplace_minor(d)));
  }
}

TEST_CASE("determinant is independent of the dropped row and column") {
  Diagram d = diagram(k816);
  fox::BigInt ref = fox::determinant(d);
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) REQUIRE(fox::determinant(d, i, j) == ref);
}

TEST_CASE("coloring counts match mod-p nullity") {
  struct Case {
    const char* code;
    std::vector<int> primes;
  };
  for (const Case& tc : {Case{kTrefoil, {3, 5, 7, 11, 13}},
                         Case{"-1,4,-2,1,-3,2,-4,3", {3, 5, 7, 11, 13}},
                         Case{k816, {3, 5, 7}}}) {
    Diagram d = diagram(tc.code);
    for (int p : tc.primes) {
      long long n = count_colorings(d, p);
      INFO("code=" << tc.code << " p=" << p);
      REQUIRE(n == pow_ll(p, fox::nullity_mod_p(d, p)));
      REQUIRE(fox::p_colorable(d, p) == (n > p));
    }
  }
}

TEST_CASE("odd p divides the determinant iff p-colorable") {
  for (const char* code :
       {kTrefoil, "-1,4,-2,1,-3,2,-4,3", k816, "1,-1"}) {
    Diagram d = diagram(code);
    fox::BigInt det = fox::determinant(d);
    for (int p : {3, 5, 7, 11, 13}) {
      INFO("code=" << code << " p=" << p);
      REQUIRE(fox::p_colorable(d, p) == (det % p == 0));
    }
  }
}

TEST_CASE("p_coloring returns a valid non-constant coloring") {
  for (auto [code, p] : {std::pair{kTrefoil, 3}, {k816, 5}, {k816, 7}}) {
    Diagram d = diagram(code);
    auto v = fox::p_coloring(d, p);
    REQUIRE(v);
    bool constant = true;
    for (int x : *v) constant = constant && x == (*v)[0];
    REQUIRE_FALSE(constant);
    for (const Crossing& c : d.crossings)
      REQUIRE((2 * (*v)[c.over]) % p == ((*v)[c.under_a] + (*v)[c.under_b]) % p);
  }
  REQUIRE_FALSE(fox::p_coloring(diagram(kTrefoil), 5));
}

TEST_CASE("dihedral quotients") {
  auto tref = fox::dihedral_mrcq(diagram(kTrefoil));
  REQUIRE(tref);
  REQUIRE(tref->p == 3);

  auto fig8 = fox::dihedral_mrcq(build_diagram(dt_to_gauss({4, 6, 8, 2})));
  REQUIRE(fig8);
  REQUIRE(fig8->p == 5);

  auto f3 = fox::dihedral_mrcq(diagram(k816));
  REQUIRE(f3);
  REQUIRE(f3->p == 5);  // smallest odd prime factor of 35

  REQUIRE_FALSE(fox::dihedral_mrcq(diagram("1,-1")));  // determinant 1
}

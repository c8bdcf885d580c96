#pragma once

// Fox p-colorings. The coloring matrix stacks one row per crossing with
// +1 at each under strand and -2 at the over strand (accumulated, so kinks
// and repeated strands fold together). Its first minor gives the knot
// determinant; p-colorability is a mod-p nullity condition.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "coxbridge/diagram.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {
namespace fox {

using BigInt = boost::multiprecision::cpp_int;

inline std::vector<std::vector<std::int64_t>> coloring_matrix(const Diagram& d) {
  int m = d.size();
  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(m, 0));
  for (const Crossing& c : d.crossings) {
    auto& row = rows[c.id - 1];
    row[c.under_a] += 1;
    row[c.under_b] += 1;
    row[c.over] -= 2;
  }
  return rows;
}

// Fraction-free Gaussian elimination; returns |det| exactly.
inline BigInt abs_det(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  if (det < 0) det = -det;
  return det;
}

// Knot determinant: absolute value of the minor that deletes the first row
// and column (any choice gives the same value; see tests).
inline BigInt determinant(const Diagram& d, int drop_row = 0, int drop_col = 0) {
  auto rows = coloring_matrix(d);
  int m = d.size();
  if (m <= 1) return 1;
  std::vector<std::vector<BigInt>> minor;
  minor.reserve(m - 1);
  for (int i = 0; i < m; ++i) {
    if (i == drop_row) continue;
    std::vector<BigInt> r;
    r.reserve(m - 1);
    for (int j = 0; j < m; ++j)
      if (j != drop_col) r.emplace_back(rows[i][j]);
    minor.push_back(std::move(r));
  }
  return abs_det(std::move(minor));
}

// Turns diagonal entries of an equivalent diagonal form into elementary
// divisors: diag(a, b) and diag(gcd, lcm) present the same group, so pairwise
// fixes converge to the divisibility chain. Also merges the divisors of a
// direct sum of two groups given in chain form.
inline void normalize_divisor_chain(std::vector<std::int64_t>& out) {
  std::sort(out.begin(), out.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      if (out[i + 1] % out[i] != 0) {
        std::int64_t g = std::gcd(out[i], out[i + 1]);
        std::int64_t l = out[i] / g * out[i + 1];
        out[i] = g;
        out[i + 1] = l;
        changed = true;
      }
    if (changed) std::sort(out.begin(), out.end());
  }
  out.erase(std::remove(out.begin(), out.end(), 1), out.end());
}

// Elementary divisors (> 1, each dividing the next) of the first homology of
// the double branched cover, presented by the same minor as the determinant.
// Refines the determinant: it is their product, but the group structure
// separates knots the single number cannot.
inline std::vector<std::int64_t> homology_divisors(const Diagram& d) {
  int m = d.size();
  if (m <= 1) return {};
  auto rows = coloring_matrix(d);
  std::vector<std::vector<BigInt>> a(m - 1, std::vector<BigInt>(m - 1));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) a[i - 1][j - 1] = rows[i][j];
  int n = m - 1;
  std::vector<std::int64_t> out;
  for (int k = 0; k < n; ++k) {
    // move a least nonzero entry of the remaining block to the pivot
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (a[i][j] != 0 &&
              (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return out;  // block vanished; remaining divisors are 0 (free part)
      std::swap(a[k], a[pi]);
      for (int i = k; i < n; ++i) std::swap(a[i][k], a[i][pj]);
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        BigInt q = a[i][k] / a[k][k];
        if (q != 0)
          for (int j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        BigInt q = a[k][j] / a[k][k];
        if (q != 0)
          for (int i = k; i < n; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    BigInt piv = abs(a[k][k]);
    if (piv > 1) out.push_back(static_cast<std::int64_t>(piv));
  }
  normalize_divisor_chain(out);
  return out;
}

namespace detail {
// Row-reduces the coloring matrix mod p in place; returns pivot columns.
inline std::vector<int> rref_mod_p(std::vector<std::vector<int>>& a, int p) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto inv_mod = [p](int x) {  // p prime, x nonzero mod p
    int r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<int>(1ll * r * b % p);
      b = static_cast<int>(1ll * b * b % p);
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] % p != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    int inv = inv_mod(((a[r][c] % p) + p) % p);
    for (int j = 0; j < cols; ++j) a[r][j] = static_cast<int>((1ll * a[r][j] * inv % p + p) % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      int f = ((a[i][c] % p) + p) % p;
      for (int j = 0; j < cols; ++j)
        a[i][j] = static_cast<int>(((a[i][j] - 1ll * f * a[r][j]) % p + p) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace detail

inline int nullity_mod_p(const Diagram& d, int p) {
  auto rows64 = coloring_matrix(d);
  int m = d.size();
  std::vector<std::vector<int>> a(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = static_cast<int>(((rows64[i][j] % p) + p) % p);
  auto pivots = detail::rref_mod_p(a, p);
  return m - static_cast<int>(pivots.size());
}

// A diagram is p-colorable when some non-constant assignment of Z/p labels
// to strands satisfies every crossing relation; equivalently the mod-p
// kernel is at least 2-dimensional (constants are always solutions).
inline bool p_colorable(const Diagram& d, int p) { return nullity_mod_p(d, p) >= 2; }

// A non-constant coloring, when one exists.
inline std::optional<std::vector<int>> p_coloring(const Diagram& d, int p) {
  auto rows64 = coloring_matrix(d);
  int m = d.size();
  std::vector<std::vector<int>> a(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = static_cast<int>(((rows64[i][j] % p) + p) % p);
  auto pivots = detail::rref_mod_p(a, p);
  if (m - static_cast<int>(pivots.size()) < 2) return std::nullopt;

  std::vector<char> is_pivot(m, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int free_col = 0; free_col < m; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<int> v(m, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = ((-a[r][free_col]) % p + p) % p;
    bool constant = true;
    for (int i = 1; i < m; ++i)
      if (v[i] != v[0]) { constant = false; break; }
    if (!constant) return v;
  }
  return std::nullopt;  // unreachable when nullity >= 2
}

struct DihedralColoring {
  long p = 0;              // odd prime
  std::vector<int> labels; // strand -> Z/p reflection label
};

// Rank-2 quotient: find the smallest odd prime dividing the determinant and
// return a non-constant p-coloring. Empty when the determinant is a power
// of two (then no dihedral quotient of odd order exists).
inline std::optional<DihedralColoring> dihedral_mrcq(const Diagram& d) {
  BigInt det = determinant(d);
  while (det != 0 && det % 2 == 0) det /= 2;
  if (det == 0) {
    // Nullity over Q; any odd prime colors. (Does not occur for knots, whose
    // determinant is odd, but links through the same code path hit it.)
    det = 3;
  }
  if (det == 1) return std::nullopt;
  long p = 0;
  for (long q = 3;; q += 2) {
    if (det % q == 0) { p = q; break; }
    if (BigInt(q) * q > det) { p = static_cast<long>(det); break; }
  }
  auto labels = p_coloring(d, static_cast<int>(p));
  if (!labels) return std::nullopt;
  return DihedralColoring{p, std::move(*labels)};
}

}  // namespace fox
}  // namespace coxbridge

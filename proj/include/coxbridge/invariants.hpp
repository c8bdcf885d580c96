#pragma once

// Classical invariants used to separate knot types during tabulation: the
// Jones polynomial (through the Kauffman bracket of an embedded shadow), the
// Alexander polynomial (through the Fox Jacobian of the Wirtinger
// presentation, evaluated at integers and interpolated exactly), and the
// signature (through the Goeritz form of a checkerboard surface).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxbridge/diagram.hpp"
#include "coxbridge/fox.hpp"
#include "coxbridge/gauss.hpp"
#include "coxbridge/shadow.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

// Sparse integer Laurent polynomial, terms sorted by exponent.
struct Laurent {
  std::vector<std::pair<int, std::int64_t>> terms;
  bool operator==(const Laurent&) const = default;
  bool operator<(const Laurent& o) const { return terms < o.terms; }
};

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  std::map<int, std::int64_t> acc;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) acc[ea + eb] += ca * cb;
  Laurent out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.terms.push_back({e, c});
  return out;
}

inline Laurent laurent_mirror(const Laurent& a) {
  Laurent out = a;
  for (auto& [e, c] : out.terms) e = -e;
  std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

// A knot and its mirror have Jones polynomials related by t -> 1/t; keys
// identify knots up to mirror image, so keep the smaller of the two.
inline Laurent mirror_canonical(const Laurent& a) {
  Laurent m = laurent_mirror(a);
  return m < a ? m : a;
}

inline std::string laurent_str(const Laurent& a) {
  std::string out;
  for (const auto& [e, c] : a.terms) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ':' + std::to_string(c);
  }
  return out;
}

// Kauffman bracket by direct state sum over the 2^n smoothings. Rotating
// the over strand counterclockwise onto the under strand sweeps the two
// A-regions, so the A-smoothing joins each over-strand end to the edge end
// immediately counterclockwise BEFORE it (its ccw predecessor), merging
// those regions.
inline Laurent kauffman_bracket(const Shadow& s, const Embedding& emb) {
  int n = s.n;
  detail::SlotTables t(s);
  std::vector<std::array<int, 4>> corner(n);  // slots in ccw order from over-in
  for (int v = 0; v < n; ++v) {
    const int* order = detail::ccw_order(emb.rot[v]);
    int over_local = s.under[2 * v] ? 2 : 0;
    int i = 0;
    while (order[i] != over_local) ++i;
    for (int k = 0; k < 4; ++k) corner[v][k] = 4 * v + order[(i + k) % 4];
  }
  // (-A^2 - A^-2)^k expanded once per loop count.
  std::vector<std::vector<std::pair<int, std::int64_t>>> delta_pow(n + 1);
  delta_pow[0] = {{0, 1}};
  for (int k = 1; k <= n; ++k) {
    std::map<int, std::int64_t> acc;
    for (const auto& [e, c] : delta_pow[k - 1]) {
      acc[e + 2] -= c;
      acc[e - 2] -= c;
    }
    delta_pow[k].assign(acc.begin(), acc.end());
  }
  int off = 3 * n + 2;
  std::vector<std::int64_t> acc(2 * off + 1, 0);
  std::vector<int> join(4 * n);
  std::vector<char> seen(4 * n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) {
      const std::array<int, 4>& c = corner[v];
      if ((mask >> v) & 1u) {  // B: pair (c0,c1) and (c2,c3)
        join[c[0]] = c[1], join[c[1]] = c[0];
        join[c[2]] = c[3], join[c[3]] = c[2];
      } else {  // A: pair (c3,c0) and (c1,c2)
        join[c[3]] = c[0], join[c[0]] = c[3];
        join[c[1]] = c[2], join[c[2]] = c[1];
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = 0;
    for (int s0 = 0; s0 < 4 * n; ++s0) {
      if (seen[s0]) continue;
      ++loops;
      int cur = s0;
      while (!seen[cur]) {
        seen[cur] = 1;
        int j = join[cur];
        seen[j] = 1;
        cur = t.epart[j];
      }
    }
    int ab = n - 2 * __builtin_popcount(mask);
    for (const auto& [e, c] : delta_pow[loops - 1]) acc[ab + e + off] += c;
  }
  Laurent out;
  for (int e = 0; e <= 2 * off; ++e)
    if (acc[e] != 0) out.terms.push_back({e - off, acc[e]});
  return out;
}

// Jones polynomial in t of the realized diagram, as drawn (not symmetrized
// under mirror image). Exponent divisibility and the value 1 at t = 1 are
// hard checks.
inline Laurent jones_raw(const Shadow& s, const Embedding& emb) {
  Laurent br = kauffman_bracket(s, emb);
  std::vector<int> signs = crossing_signs(s, emb);
  int w = 0;
  for (int x : signs) w += x;
  Laurent out;
  std::int64_t at_one = 0;
  for (const auto& [e, c] : br.terms) {
    int ee = e - 3 * w;
    if (ee % 4 != 0) throw Error(Errc::invalid_pairing, "bracket exponent parity");
    out.terms.push_back({-ee / 4, w % 2 ? -c : c});
    at_one += w % 2 ? -c : c;
  }
  std::sort(out.terms.begin(), out.terms.end());
  if (at_one != 1) throw Error(Errc::invalid_pairing, "Jones value at 1");
  return out;
}

inline Laurent jones(const Shadow& s, const Embedding& emb) {
  return mirror_canonical(jones_raw(s, emb));
}

// Knot signature from a checkerboard surface: the signature of the Goeritz
// form corrected by the signed count of type-II crossings, those whose two
// strands cross the white band in the same direction (Gordon-Litherland).
// Signs follow the convention where the positive trefoil has signature -2.
// The white and the black surface must agree, and the result must be even;
// both are checked.
inline int signature(const Shadow& s, const Embedding& emb) {
  namespace mp = boost::multiprecision;
  int n = s.n;
  int period = 2 * n, slots = 4 * n;
  detail::SlotTables t(s);
  // face of the corner whose counterclockwise boundary starts at each slot
  std::vector<int> face_of(slots, -1);
  int nf = 0;
  for (int s0 = 0; s0 < slots; ++s0) {
    if (face_of[s0] >= 0) continue;
    for (int cur = s0; face_of[cur] < 0; cur = t.epart[detail::ccw_next(emb, cur)])
      face_of[cur] = nf;
    ++nf;
  }
  // faces across an edge get opposite colors
  std::vector<std::vector<int>> adj(nf);
  for (int x = 0; x < period; ++x) {
    int a = face_of[detail::out_slot(s, x)];
    int b = face_of[detail::in_slot(s, (x + 1) % period)];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(nf, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(Errc::invalid_pairing, "checkerboard coloring");
      }
    }
  }

  auto sigma_for = [&](int white) {
    std::vector<int> widx(nf, -1);
    int nw = 0;
    for (int f = 0; f < nf; ++f)
      if (color[f] == white) widx[f] = nw++;
    std::vector<std::vector<std::int64_t>> g(nw, std::vector<std::int64_t>(nw, 0));
    int mu = 0;
    for (int v = 0; v < n; ++v) {
      const int* order = detail::ccw_order(emb.rot[v]);
      int over_local = s.under[2 * v] ? 2 : 0;
      int i = 0;
      while (order[i] != over_local) ++i;
      std::array<int, 4> c;
      for (int k = 0; k < 4; ++k) c[k] = 4 * v + order[(i + k) % 4];
      // corners c1, c3 are the ones swept by the A-smoothing
      bool white_a = color[face_of[c[1]]] == white;
      int eta = white_a ? 1 : -1;
      int w1 = face_of[white_a ? c[1] : c[0]];
      int w2 = face_of[white_a ? c[3] : c[2]];
      // the corner between the two in-ends is white exactly when the strands
      // cross the white band in opposite directions
      int j = 0;
      while (order[j] != 0) ++j;
      int ins_local = order[(j + 1) % 4] == 2 ? 0 : 2;
      bool same_direction = color[face_of[4 * v + ins_local]] != white;
      if (same_direction) mu += eta;
      if (w1 != w2) {
        g[widx[w1]][widx[w2]] -= eta;
        g[widx[w2]][widx[w1]] -= eta;
      }
    }
    for (int a = 0; a < nw; ++a) {
      std::int64_t row = 0;
      for (int b = 0; b < nw; ++b)
        if (b != a) row += g[a][b];
      g[a][a] = -row;
    }
    // signature of the minor dropping region 0, by congruence diagonalization
    using Rat = mp::cpp_rational;
    int m = nw - 1;
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
    for (int r = 0; r < m; ++r)
      for (int cc = 0; cc < m; ++cc) a[r][cc] = g[r + 1][cc + 1];
    int sig = 0;
    for (int k = 0; k < m; ++k) {
      if (a[k][k] == 0) {
        int l = k + 1;
        while (l < m && a[l][l] == 0) ++l;
        if (l < m) {
          std::swap(a[k], a[l]);
          for (auto& row : a) std::swap(row[k], row[l]);
        } else {
          int ii = -1, jj = -1;
          for (int r = k; r < m && ii < 0; ++r)
            for (int cc = r + 1; cc < m; ++cc)
              if (a[r][cc] != 0) {
                ii = r;
                jj = cc;
                break;
              }
          if (ii < 0) break;  // remaining block is zero
          if (ii != k) {
            std::swap(a[k], a[ii]);
            for (auto& row : a) std::swap(row[k], row[ii]);
          }
          for (int cc = 0; cc < m; ++cc) a[k][cc] += a[jj][cc];
          for (int r = 0; r < m; ++r) a[r][k] += a[r][jj];
        }
      }
      Rat piv = a[k][k];
      sig += piv > 0 ? 1 : -1;
      for (int r = k + 1; r < m; ++r) {
        Rat f = a[r][k] / piv;
        if (f == 0) continue;
        for (int cc = k; cc < m; ++cc) a[r][cc] -= f * a[k][cc];
      }
      for (int cc = k + 1; cc < m; ++cc) a[k][cc] = 0;
    }
    return sig - mu;
  };

  int white_val = sigma_for(1);
  if (sigma_for(0) != white_val)
    throw Error(Errc::invalid_pairing, "signature surface cross-check");
  if (white_val % 2 != 0) throw Error(Errc::invalid_pairing, "signature parity");
  return white_val;
}

namespace detail {

// Signed determinant, fraction-free. Entries stay bounded by minors of the
// input, comfortably inside int64 for the sizes used here.
inline std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  int m = static_cast<int>(a.size());
  if (m == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

}  // namespace detail

// Fox Jacobian minor of the Wirtinger presentation, evaluated at the integers
// t = 2..m+1. The m values determine the (degree < m) minor polynomial, so
// they double as a cache key for the interpolation below. signs[k] is the
// sign of crossing k+1 in the realized diagram.
inline std::vector<std::int64_t> alexander_values(const Diagram& d, const std::vector<int>& signs) {
  int m = d.size();
  if (m > 13) throw Error(Errc::order_overflow, "Alexander evaluation bound");
  std::vector<std::int64_t> values(m);
  for (int j = 0; j < m; ++j) {
    std::int64_t t0 = j + 2;
    std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(m, 0));
    for (int k = 0; k < m; ++k) {
      const Crossing& c = d.crossings[k];
      rows[k][c.over] += 1 - t0;
      if (signs[k] > 0) {
        rows[k][c.under_a] += t0;
        rows[k][c.under_b] += -1;
      } else {
        rows[k][c.under_a] += -1;
        rows[k][c.under_b] += t0;
      }
    }
    std::vector<std::vector<std::int64_t>> minor(m - 1, std::vector<std::int64_t>(m - 1));
    for (int r = 0; r + 1 < m; ++r)
      for (int col = 0; col + 1 < m; ++col) minor[r][col] = rows[r][col + 1];
    values[j] = detail::bareiss_det(std::move(minor));
  }
  return values;
}

// Alexander polynomial from the evaluations above: exact Lagrange
// interpolation, then normalization to ascending coefficients with the
// lowest degree stripped and value +1 at t = 1.
inline std::vector<std::int64_t> alexander_from_values(const std::vector<std::int64_t>& values) {
  namespace mp = boost::multiprecision;
  int m = static_cast<int>(values.size());
  using Rat = mp::cpp_rational;
  std::vector<Rat> full(m + 1, 0);  // prod (t - t_j)
  full[0] = 1;
  for (int j = 0; j < m; ++j) {
    std::int64_t t0 = j + 2;
    for (int k = m; k >= 1; --k) full[k] = full[k - 1] - t0 * full[k];
    full[0] = -t0 * full[0];
  }
  std::vector<Rat> poly(m, 0);
  for (int j = 0; j < m; ++j) {
    std::int64_t t0 = j + 2;
    // synthetic division of full by (t - t0)
    std::vector<Rat> q(m, 0);
    Rat carry = full[m];
    for (int k = m - 1; k >= 0; --k) {
      q[k] = carry;
      carry = full[k] + t0 * carry;
    }
    Rat denom = 1;
    for (int k = 0; k < m; ++k)
      if (k != j) denom *= Rat(t0 - (k + 2));
    Rat scale = Rat(values[j]) / denom;
    for (int k = 0; k < m; ++k) poly[k] += scale * q[k];
  }
  std::vector<std::int64_t> coeffs(m, 0);
  for (int k = 0; k < m; ++k) {
    if (mp::denominator(poly[k]) != 1)
      throw Error(Errc::invalid_pairing, "Alexander interpolation not integral");
    coeffs[k] = static_cast<std::int64_t>(mp::numerator(poly[k]));
  }
  int lo = 0, hi = m - 1;
  while (hi > 0 && coeffs[hi] == 0) --hi;
  while (lo < hi && coeffs[lo] == 0) ++lo;
  std::vector<std::int64_t> out(coeffs.begin() + lo, coeffs.begin() + hi + 1);
  std::int64_t at_one = 0;
  for (std::int64_t c : out) at_one += c;
  if (at_one != 1 && at_one != -1)
    throw Error(Errc::invalid_pairing, "Alexander value at 1");
  if (at_one < 0)
    for (auto& c : out) c = -c;
  std::vector<std::int64_t> rev(out.rbegin(), out.rend());
  if (rev != out) throw Error(Errc::invalid_pairing, "Alexander not palindromic");
  return out;
}

inline std::vector<std::int64_t> alexander(const Diagram& d, const std::vector<int>& signs) {
  return alexander_from_values(alexander_values(d, signs));
}

inline std::int64_t alexander_at(const std::vector<std::int64_t>& alex, std::int64_t t) {
  std::int64_t v = 0;
  for (auto it = alex.rbegin(); it != alex.rend(); ++it) v = v * t + *it;
  return v;
}

// Separation key: Alexander polynomial, Jones polynomial, determinant, the
// double branched cover homology, and the signature agree exactly on diagrams
// of the same knot (up to mirror); distinct values certify distinct knots.
// Jones and signature flip together under mirror image, so the pair is kept
// in the lexicographically smaller of its two chiral forms.
struct KnotInvariants {
  std::vector<std::int64_t> alex;
  Laurent jones;
  std::int64_t det = 0;
  std::vector<std::int64_t> h1;  // elementary divisors, product = det
  int sig = 0;

  bool operator==(const KnotInvariants&) const = default;

  std::string key() const {
    std::string out;
    for (std::int64_t c : alex) out += std::to_string(c) + ',';
    out += '|';
    out += laurent_str(jones);
    out += '|';
    out += std::to_string(det);
    out += '|';
    for (std::int64_t c : h1) out += std::to_string(c) + ',';
    out += '|';
    out += std::to_string(sig);
    return out;
  }
};

inline void canonicalize_chirality(KnotInvariants& inv) {
  Laurent m = laurent_mirror(inv.jones);
  if (m < inv.jones || (m == inv.jones && inv.sig > 0)) {
    inv.jones = std::move(m);
    inv.sig = -inv.sig;
  }
}

// Invariants of a realized shadow, cross-validated against the coloring
// matrix determinant of the same diagram.
inline KnotInvariants shadow_invariants(const Shadow& s, const Embedding& emb) {
  KnotInvariants inv;
  inv.jones = jones_raw(s, emb);
  inv.sig = signature(s, emb);
  Diagram d = build_diagram(dt_to_gauss(s.dt()));
  inv.alex = alexander(d, crossing_signs(s, emb));
  inv.det = std::abs(alexander_at(inv.alex, -1));
  if (fox::BigInt(inv.det) != fox::determinant(d))
    throw Error(Errc::invalid_pairing, "determinant cross-check");
  inv.h1 = fox::homology_divisors(d);
  std::int64_t prod = 1;
  for (std::int64_t c : inv.h1) prod *= c;
  if (prod != inv.det) throw Error(Errc::invalid_pairing, "homology cross-check");
  canonicalize_chirality(inv);
  return inv;
}

// Connected sums multiply Alexander, Jones and the determinant, add the
// signature and merge the divisor chains; the mirror of each factor is an
// independent choice, so a composite with given factors realizes one of the
// chiral combinations below.
inline std::vector<KnotInvariants> composite_invariants(const KnotInvariants& a,
                                                        const KnotInvariants& b) {
  std::vector<std::int64_t> alex(a.alex.size() + b.alex.size() - 1, 0);
  for (std::size_t i = 0; i < a.alex.size(); ++i)
    for (std::size_t j = 0; j < b.alex.size(); ++j) alex[i + j] += a.alex[i] * b.alex[j];
  std::vector<std::int64_t> h1 = a.h1;
  h1.insert(h1.end(), b.h1.begin(), b.h1.end());
  fox::normalize_divisor_chain(h1);
  std::vector<KnotInvariants> out;
  for (int flip = 0; flip < 2; ++flip) {
    KnotInvariants inv;
    inv.alex = alex;
    inv.jones = laurent_mul(a.jones, flip ? laurent_mirror(b.jones) : b.jones);
    inv.sig = a.sig + (flip ? -b.sig : b.sig);
    inv.det = a.det * b.det;
    inv.h1 = h1;
    canonicalize_chirality(inv);
    if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(inv);
  }
  return out;
}

}  // namespace coxbridge

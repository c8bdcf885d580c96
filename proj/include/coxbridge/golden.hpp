#pragma once

// Exact arithmetic over Z[phi], phi = (1+sqrt(5))/2, with phi^2 = phi + 1,
// plus the small dense matrices and vectors the Coxeter machinery needs.
// Ranks never exceed 5, so everything is value-typed with inline storage.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "coxbridge/util.hpp"

namespace coxbridge {

struct GoldenInt {
  std::int64_t a = 0;  // integer part
  std::int64_t b = 0;  // coefficient of phi

  constexpr GoldenInt() = default;
  constexpr GoldenInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  friend constexpr GoldenInt operator+(GoldenInt x, GoldenInt y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x, GoldenInt y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend constexpr GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  GoldenInt& operator+=(GoldenInt y) { return *this = *this + y; }
  GoldenInt& operator-=(GoldenInt y) { return *this = *this - y; }
  GoldenInt& operator*=(GoldenInt y) { return *this = *this * y; }
  friend constexpr bool operator==(GoldenInt x, GoldenInt y) {
    return x.a == y.a && x.b == y.b;
  }
  friend constexpr bool operator!=(GoldenInt x, GoldenInt y) { return !(x == y); }

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  // Galois conjugate: phi -> 1 - phi.
  constexpr GoldenInt conj() const { return {a + b, -b}; }
  // Field norm N(x) = x * conj(x), an ordinary integer.
  constexpr std::int64_t norm() const { return a * a + a * b - b * b; }

  // Sign of the real value a + b phi. Writing it as (u + v sqrt5)/2 with
  // u = 2a + b, v = b keeps the comparison in integers.
  int sign() const {
    std::int64_t u = 2 * a + b, v = b;
    if (u == 0 && v == 0) return 0;
    if (u >= 0 && v >= 0) return 1;
    if (u <= 0 && v <= 0) return -1;
    std::int64_t lhs = u * u, rhs = 5 * v * v;  // compare |u| vs |v| sqrt5
    if (u > 0) return lhs > rhs ? 1 : -1;       // v < 0
    return lhs < rhs ? 1 : -1;                  // u < 0, v > 0
  }

  std::string str() const {
    if (b == 0) return std::to_string(a);
    std::string s;
    if (a != 0) s = std::to_string(a) + (b > 0 ? "+" : "");
    if (b == 1) s += "phi";
    else if (b == -1) s += "-phi";
    else s += std::to_string(b) + "*phi";
    return s;
  }
};

// Exact quotient x / y in Z[phi]; throws if y is zero or does not divide x.
inline GoldenInt exact_div(GoldenInt x, GoldenInt y) {
  std::int64_t n = y.norm();
  if (n == 0) throw Error(Errc::zero_entry, "division by zero in Z[phi]");
  GoldenInt num = x * y.conj();
  if (num.a % n != 0 || num.b % n != 0)
    throw Error(Errc::invalid_pairing, "inexact division in Z[phi]");
  return {num.a / n, num.b / n};
}

constexpr int kMaxRank = 5;

struct GVec {
  int n = 0;
  std::array<GoldenInt, kMaxRank> v{};

  GoldenInt& operator[](int i) { return v[i]; }
  const GoldenInt& operator[](int i) const { return v[i]; }
  friend bool operator==(const GVec& x, const GVec& y) {
    if (x.n != y.n) return false;
    for (int i = 0; i < x.n; ++i)
      if (x.v[i] != y.v[i]) return false;
    return true;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero()) return false;
    return true;
  }
};

struct GMat {
  int n = 0;
  std::array<GoldenInt, kMaxRank * kMaxRank> e{};

  static GMat identity(int n) {
    GMat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = GoldenInt(1);
    return m;
  }

  GoldenInt& at(int i, int j) { return e[i * kMaxRank + j]; }
  const GoldenInt& at(int i, int j) const { return e[i * kMaxRank + j]; }

  friend GMat operator*(const GMat& x, const GMat& y) {
    GMat r;
    r.n = x.n;
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        GoldenInt xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  friend GVec operator*(const GMat& m, const GVec& x) {
    GVec r;
    r.n = m.n;
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) r[i] += m.at(i, j) * x[j];
    return r;
  }

  friend bool operator==(const GMat& x, const GMat& y) {
    if (x.n != y.n) return false;
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j)
        if (x.at(i, j) != y.at(i, j)) return false;
    return true;
  }
  friend bool operator!=(const GMat& x, const GMat& y) { return !(x == y); }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t v) {
      for (int k = 0; k < 8; ++k) {
        h ^= static_cast<unsigned char>(v >> (8 * k));
        h *= 1099511628211ull;
      }
    };
    mix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mix(e[i * kMaxRank + j].a), mix(e[i * kMaxRank + j].b);
    return h;
  }
};

namespace detail {
inline GoldenInt det_rec(const GMat& m, unsigned rows, unsigned cols) {
  int r = -1;
  for (int i = 0; i < m.n; ++i)
    if (rows & (1u << i)) { r = i; break; }
  if (r < 0) return GoldenInt(1);
  GoldenInt sum;
  int parity = 0;
  for (int j = 0; j < m.n; ++j) {
    if (!(cols & (1u << j))) continue;
    const GoldenInt& mij = m.at(r, j);
    if (!mij.is_zero()) {
      GoldenInt sub = det_rec(m, rows & ~(1u << r), cols & ~(1u << j));
      sum += (parity % 2 ? -GoldenInt(1) : GoldenInt(1)) * mij * sub;
    }
    ++parity;
  }
  return sum;
}
}  // namespace detail

inline GoldenInt det(const GMat& m) {
  unsigned mask = (1u << m.n) - 1;
  return detail::det_rec(m, mask, mask);
}

// Minor with row i and column j removed.
inline GoldenInt minor_det(const GMat& m, int i, int j) {
  unsigned mask = (1u << m.n) - 1;
  return detail::det_rec(m, mask & ~(1u << i), mask & ~(1u << j));
}

// Adjugate: adj(M) * M = M * adj(M) = det(M) * I.
inline GMat adjugate(const GMat& m) {
  GMat a;
  a.n = m.n;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      GoldenInt c = minor_det(m, j, i);
      a.at(i, j) = ((i + j) % 2) ? -c : c;
    }
  return a;
}

// Inverse for matrices with det = +-1 (every Coxeter group element here).
inline GMat unimodular_inverse(const GMat& m) {
  GoldenInt d = det(m);
  GMat a = adjugate(m);
  if (d == GoldenInt(1)) return a;
  if (d == GoldenInt(-1)) {
    for (auto& x : a.e) x = -x;
    return a;
  }
  throw Error(Errc::invalid_pairing, "matrix determinant is not a unit integer");
}

}  // namespace coxbridge

#pragma once

// Finite Coxeter groups in their geometric representation over Z[phi].
// enumerate_group builds the full element list by closure; reflections,
// roots, and the lookup tables used by the quotient search hang off the
// resulting GroupTable.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxbridge/golden.hpp"
#include "coxbridge/util.hpp"

namespace coxbridge {

struct GroupSpec {
  const char* name;
  int rank;
  int order;
  int reflections;
};

inline const std::vector<GroupSpec>& known_groups() {
  static const std::vector<GroupSpec> specs = {
      {"A3", 3, 24, 6},    {"A4", 4, 120, 10},  {"A5", 5, 720, 15},
      {"D4", 4, 192, 12},  {"D5", 5, 1920, 20}, {"H3", 3, 120, 15},
      {"H4", 4, 14400, 60},
  };
  return specs;
}

inline const GroupSpec& group_spec(std::string_view name) {
  for (const auto& s : known_groups())
    if (name == s.name) return s;
  throw Error(Errc::unsupported_label, "unknown group " + std::string(name));
}

struct CoxeterMatrix {
  int n = 0;
  std::array<std::array<int, kMaxRank>, kMaxRank> m{};

  static CoxeterMatrix of(std::string_view name) {
    CoxeterMatrix cm;
    auto init = [&cm](int rank) {
      cm.n = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cm.m[i][j] = i == j ? 1 : 2;
    };
    auto edge = [&cm](int i, int j, int label) {
      cm.m[i][j] = cm.m[j][i] = label;
    };
    if (name == "A3") { init(3); edge(0, 1, 3); edge(1, 2, 3); }
    else if (name == "A4") { init(4); edge(0, 1, 3); edge(1, 2, 3); edge(2, 3, 3); }
    else if (name == "A5") { init(5); edge(0, 1, 3); edge(1, 2, 3); edge(2, 3, 3); edge(3, 4, 3); }
    else if (name == "D4") { init(4); edge(0, 1, 3); edge(1, 2, 3); edge(1, 3, 3); }
    else if (name == "D5") { init(5); edge(0, 1, 3); edge(1, 2, 3); edge(2, 3, 3); edge(2, 4, 3); }
    else if (name == "H3") { init(3); edge(0, 1, 3); edge(1, 2, 5); }
    else if (name == "H4") { init(4); edge(0, 1, 3); edge(1, 2, 3); edge(2, 3, 5); }
    else throw Error(Errc::unsupported_label, "unknown group " + std::string(name));
    return cm;
  }
};

// Bilinear-form coefficient c with s_i(alpha_j) = alpha_j + c alpha_i for the
// edge label m_ij. Only labels 2, 3, 5 occur in the supported groups.
inline GoldenInt edge_coefficient(int label) {
  switch (label) {
    case 2: return GoldenInt(0);
    case 3: return GoldenInt(1);
    case 5: return GoldenInt(0, 1);  // phi
    default:
      throw Error(Errc::unsupported_label,
                  "edge label " + std::to_string(label) + " not representable over Z[phi]");
  }
}

inline std::vector<GMat> standard_generators(const CoxeterMatrix& cm) {
  int n = cm.n;
  std::vector<GMat> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (cm.m[i][i] != 1)
      throw Error(Errc::unsupported_label, "Coxeter matrix diagonal must be 1");
    GMat s = GMat::identity(n);
    for (int j = 0; j < n; ++j) {
      if (j == i) { s.at(i, i) = GoldenInt(-1); continue; }
      if (cm.m[i][j] != cm.m[j][i] || cm.m[i][j] < 2)
        throw Error(Errc::unsupported_label, "invalid Coxeter matrix");
      s.at(i, j) = edge_coefficient(cm.m[i][j]);
    }
    gens.push_back(s);
  }
  return gens;
}

struct GroupTable {
  std::string name;
  int rank = 0;
  std::vector<GMat> elements;  // element 0 is the identity
  std::vector<int> gens;       // element indices of the generators
  std::vector<int> inverse;    // element index of g^{-1}
  std::vector<int> refl;       // element indices of all reflections, ascending
  std::vector<int> refl_index; // element index -> position in refl, or -1
  std::vector<GVec> roots;     // positive root per reflection, aligned with refl

  std::unordered_multimap<std::uint64_t, int> index;
  std::vector<std::int32_t> rmul_table;  // |elements| x R: g * r
  std::vector<std::int32_t> conj_table;  // |elements| x R: refl position of g r g^{-1}

  int order() const { return static_cast<int>(elements.size()); }
  int reflection_count() const { return static_cast<int>(refl.size()); }

  int index_of(const GMat& m) const {
    auto [lo, hi] = index.equal_range(m.hash());
    for (auto it = lo; it != hi; ++it)
      if (elements[it->second] == m) return it->second;
    return -1;
  }

  int mult(int i, int j) const {
    int r = index_of(elements[i] * elements[j]);
    if (r < 0) throw Error(Errc::order_overflow, "product left the enumerated group");
    return r;
  }

  int rmul(int g, int r) const { return rmul_table[static_cast<std::size_t>(g) * refl.size() + r]; }
  int conj_refl(int g, int r) const { return conj_table[static_cast<std::size_t>(g) * refl.size() + r]; }
  // r1 r2 r1 (= r1 r2 r1^{-1}), as a reflection position.
  int refl_conj(int r1, int r2) const { return conj_refl(refl[r1], r2); }
};

inline GroupTable enumerate_group(std::string name, const std::vector<GMat>& gen_mats,
                                  std::size_t expected_order) {
  GroupTable gt;
  gt.name = std::move(name);
  gt.rank = static_cast<int>(gen_mats.size());
  GMat id = GMat::identity(gen_mats.empty() ? 0 : gen_mats[0].n);
  gt.elements.push_back(id);
  gt.index.emplace(id.hash(), 0);
  for (std::size_t head = 0; head < gt.elements.size(); ++head) {
    GMat cur = gt.elements[head];  // copy: elements reallocates below
    for (const GMat& g : gen_mats) {
      GMat next = cur * g;
      if (gt.index_of(next) >= 0) continue;
      gt.elements.push_back(next);
      gt.index.emplace(next.hash(), static_cast<int>(gt.elements.size()) - 1);
      if (gt.elements.size() > expected_order)
        throw Error(Errc::order_overflow,
                    gt.name + ": closure exceeds expected order " + std::to_string(expected_order));
    }
  }
  if (gt.elements.size() != expected_order)
    throw Error(Errc::group_mismatch,
                gt.name + ": closure has order " + std::to_string(gt.elements.size()) +
                    ", expected " + std::to_string(expected_order));
  for (const GMat& g : gen_mats) gt.gens.push_back(gt.index_of(g));
  gt.inverse.resize(gt.elements.size());
  for (std::size_t i = 0; i < gt.elements.size(); ++i) {
    int inv = gt.index_of(unimodular_inverse(gt.elements[i]));
    if (inv < 0) throw Error(Errc::group_mismatch, "inverse missing from closure");
    gt.inverse[i] = inv;
  }
  return gt;
}

namespace detail {
inline GVec normalized_root(const GMat& refl_mat) {
  int n = refl_mat.n;
  GMat a = refl_mat;
  for (int i = 0; i < n; ++i) a.at(i, i) += GoldenInt(1);
  if (!det(a).is_zero())
    throw Error(Errc::group_mismatch, "reflection has no (-1)-eigenvector");
  GMat adj = adjugate(a);
  GVec root;
  root.n = n;
  for (int j = 0; j < n && root.is_zero(); ++j)
    for (int i = 0; i < n; ++i) root[i] = adj.at(i, j);
  if (root.is_zero())
    throw Error(Errc::group_mismatch, "reflection (-1)-eigenspace is not 1-dimensional");
  // Content reduction keeps coordinates small and the choice deterministic.
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i)
    g = std::gcd(std::gcd(g, std::abs(root[i].a)), std::abs(root[i].b));
  if (g > 1)
    for (int i = 0; i < n; ++i) root[i] = {root[i].a / g, root[i].b / g};
  int s = 0;
  for (int i = 0; i < n && s == 0; ++i) s = root[i].sign();
  if (s < 0)
    for (int i = 0; i < n; ++i) root[i] = -root[i];
  return root;
}
}  // namespace detail

// Reflections = the conjugacy closure of the generators. Requires (and
// checks) that they form a single class containing every generator.
inline void find_reflections(GroupTable& gt) {
  std::vector<char> in_set(gt.elements.size(), 0);
  std::vector<int> work;
  auto add = [&](int e) {
    if (!in_set[e]) { in_set[e] = 1; work.push_back(e); }
  };
  add(gt.gens[0]);
  for (std::size_t head = 0; head < work.size(); ++head) {
    int r = work[head];
    for (int g : gt.gens) {
      const GMat& gm = gt.elements[g];  // generators are involutions
      int c = gt.index_of(gm * gt.elements[r] * gm);
      if (c < 0) throw Error(Errc::group_mismatch, "conjugate missing from closure");
      add(c);
    }
  }
  for (int g : gt.gens)
    if (!in_set[g])
      throw Error(Errc::multiple_classes,
                  gt.name + ": generators fall in more than one conjugacy class");
  gt.refl.clear();
  for (std::size_t e = 0; e < gt.elements.size(); ++e)
    if (in_set[e]) gt.refl.push_back(static_cast<int>(e));
  gt.refl_index.assign(gt.elements.size(), -1);
  for (std::size_t i = 0; i < gt.refl.size(); ++i) gt.refl_index[gt.refl[i]] = static_cast<int>(i);

  gt.roots.clear();
  for (int e : gt.refl) {
    const GMat& m = gt.elements[e];
    if (m * m != GMat::identity(m.n))
      throw Error(Errc::group_mismatch, "reflection is not an involution");
    gt.roots.push_back(detail::normalized_root(m));
  }
}

inline void build_tables(GroupTable& gt) {
  std::size_t n = gt.elements.size(), r = gt.refl.size();
  gt.rmul_table.assign(n * r, -1);
  gt.conj_table.assign(n * r, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < r; ++j) {
      int gr = gt.index_of(gt.elements[g] * gt.elements[gt.refl[j]]);
      if (gr < 0) throw Error(Errc::group_mismatch, "product missing from closure");
      gt.rmul_table[g * r + j] = gr;
      int conj = gt.index_of(gt.elements[gr] * gt.elements[gt.inverse[g]]);
      if (conj < 0 || gt.refl_index[conj] < 0)
        throw Error(Errc::group_mismatch, "conjugate of a reflection is not a reflection");
      gt.conj_table[g * r + j] = gt.refl_index[conj];
    }
  }
}

// Full pipeline for a supported group name.
inline GroupTable build_group(std::string_view name) {
  const GroupSpec& spec = group_spec(name);
  CoxeterMatrix cm = CoxeterMatrix::of(name);
  GroupTable gt = enumerate_group(spec.name, standard_generators(cm),
                                  static_cast<std::size_t>(spec.order));
  find_reflections(gt);
  if (gt.reflection_count() != spec.reflections)
    throw Error(Errc::group_mismatch,
                gt.name + ": found " + std::to_string(gt.reflection_count()) +
                    " reflections, expected " + std::to_string(spec.reflections));
  build_tables(gt);
  return gt;
}

}  // namespace coxbridge

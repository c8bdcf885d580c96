#pragma once

// Quotient certificates and their from-scratch verification. A certificate
// stores everything needed to recheck a claimed maximal rank quotient without
// the search machinery: the diagram's Gauss entries, the target group, seeds,
// the seed assignment, and the full strand labeling. verify_certificate
// rebuilds the diagram, recomputes omega, and checks every crossing relation
// and surjectivity with plain matrix arithmetic.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxbridge/coxeter.hpp"
#include "coxbridge/diagram.hpp"
#include "coxbridge/util.hpp"
#include "coxbridge/wirtinger.hpp"

namespace coxbridge {

struct QuotientCertificate {
  std::string knot;
  std::string group;           // "A3".."H4" or "I2(p)"
  int omega = 0;
  std::vector<int> seeds;      // strand indices, ascending
  std::vector<int> assignment; // reflection indices (or Z/p labels), aligned with seeds
  std::vector<int> labels;     // per-strand reflection indices (or Z/p labels)
  std::string robust_hash;     // hash of the robust library used; empty for dihedral
  bool verified = false;
  std::vector<int> gauss;      // diagram entries, making the file self-contained
};

inline nlohmann::json cert_to_json(const QuotientCertificate& c) {
  nlohmann::json j;
  j["schema"] = "coxbridge-cert-v1";
  j["knot"] = c.knot;
  j["group"] = c.group;
  j["omega"] = c.omega;
  j["seeds"] = c.seeds;
  j["assignment"] = c.assignment;
  j["labels"] = c.labels;
  j["robust_hash"] = c.robust_hash;
  j["verified"] = c.verified;
  j["gauss"] = c.gauss;
  return j;
}

inline QuotientCertificate cert_from_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j["schema"] != "coxbridge-cert-v1")
    throw Error(Errc::schema_mismatch, "unknown certificate schema");
  QuotientCertificate c;
  c.knot = j.at("knot").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.omega = j.at("omega").get<int>();
  c.seeds = j.at("seeds").get<std::vector<int>>();
  c.assignment = j.at("assignment").get<std::vector<int>>();
  c.labels = j.at("labels").get<std::vector<int>>();
  c.robust_hash = j.at("robust_hash").get<std::string>();
  c.verified = j.at("verified").get<bool>();
  c.gauss = j.at("gauss").get<std::vector<int>>();
  return c;
}

inline void save_certificate(const QuotientCertificate& c, const std::string& path) {
  spew(path, cert_to_json(c).dump(1) + "\n");
}

inline QuotientCertificate load_certificate(const std::string& path) {
  try {
    return cert_from_json(nlohmann::json::parse(slurp(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_mismatch, path + ": " + e.what());
  }
}

namespace detail {
inline std::optional<long> dihedral_order(const std::string& group) {
  // "I2(p)"
  if (group.size() < 5 || group.compare(0, 3, "I2(") != 0 || group.back() != ')')
    return std::nullopt;
  long p = 0;
  for (std::size_t i = 3; i + 1 < group.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(group[i]))) return std::nullopt;
    p = p * 10 + (group[i] - '0');
  }
  return p;
}
}  // namespace detail

// Throws on any defect; returns normally iff the certificate is sound.
inline void verify_certificate(const QuotientCertificate& c) {
  GaussCode code;
  code.name = c.knot;
  code.entries = c.gauss;
  detail::validate_gauss(code.entries);
  Diagram d = build_diagram(std::move(code));
  int m = d.size();

  WirtingerResult wr = wirtinger_number(d);
  if (wr.omega != c.omega)
    throw Error(Errc::rank_mismatch,
                "certificate omega " + std::to_string(c.omega) + " but diagram has omega " +
                    std::to_string(wr.omega));
  if (static_cast<int>(c.labels.size()) != m)
    throw Error(Errc::rank_mismatch, "labeling does not cover all strands");
  if (c.seeds.size() != c.assignment.size())
    throw Error(Errc::rank_mismatch, "seed/assignment length mismatch");
  if (static_cast<int>(c.seeds.size()) != c.omega)
    throw Error(Errc::rank_mismatch, "seed count differs from omega");
  for (std::size_t i = 0; i < c.seeds.size(); ++i) {
    int s = c.seeds[i];
    if (s < 0 || s >= m) throw Error(Errc::not_found, "seed strand out of range");
    if (i && c.seeds[i] <= c.seeds[i - 1])
      throw Error(Errc::not_found, "seeds not strictly increasing");
    if (c.labels[s] != c.assignment[i])
      throw Error(Errc::group_mismatch, "labeling disagrees with seed assignment");
  }

  if (auto p = detail::dihedral_order(c.group)) {
    if (*p < 3 || *p % 2 == 0)
      throw Error(Errc::unsupported_label, "dihedral order must be an odd prime");
    for (long q = 3; q * q <= *p; q += 2)
      if (*p % q == 0)
        throw Error(Errc::unsupported_label, "dihedral order must be an odd prime");
    if (c.omega != 2)
      throw Error(Errc::rank_mismatch, "dihedral certificates require omega = 2");
    bool constant = true;
    for (int v : c.labels) {
      if (v < 0 || v >= *p) throw Error(Errc::group_mismatch, "label out of Z/p range");
      if (v != c.labels[0]) constant = false;
    }
    if (constant) throw Error(Errc::group_mismatch, "coloring is constant");
    for (const Crossing& cr : d.crossings) {
      long lhs = (2ll * c.labels[cr.over]) % *p;
      long rhs = (c.labels[cr.under_a] + c.labels[cr.under_b]) % *p;
      if (lhs != rhs)
        throw Error(Errc::group_mismatch,
                    "coloring fails at crossing " + std::to_string(cr.id));
    }
    return;
  }

  // Coxeter case: rebuild the group from its name and check with raw matrices.
  GroupTable gt = build_group(c.group);
  if (gt.rank != c.omega)
    throw Error(Errc::rank_mismatch, "group rank differs from omega");
  int R = gt.reflection_count();
  for (int v : c.labels)
    if (v < 0 || v >= R) throw Error(Errc::group_mismatch, "label is not a reflection index");

  for (const Crossing& cr : d.crossings) {
    const GMat& over = gt.elements[gt.refl[c.labels[cr.over]]];
    const GMat& a = gt.elements[gt.refl[c.labels[cr.under_a]]];
    const GMat& b = gt.elements[gt.refl[c.labels[cr.under_b]]];
    if (over * a * over != b)
      throw Error(Errc::group_mismatch,
                  "crossing relation fails at crossing " + std::to_string(cr.id));
  }

  // Surjectivity: closure of the seed images by plain matrix products.
  std::vector<GMat> closure;
  std::unordered_multimap<std::uint64_t, int> idx;
  auto push = [&](const GMat& g) {
    auto [lo, hi] = idx.equal_range(g.hash());
    for (auto it = lo; it != hi; ++it)
      if (closure[it->second] == g) return;
    idx.emplace(g.hash(), static_cast<int>(closure.size()));
    closure.push_back(g);
  };
  push(GMat::identity(gt.rank));
  std::vector<GMat> gens;
  for (int r : c.assignment) gens.push_back(gt.elements[gt.refl[r]]);
  for (std::size_t head = 0; head < closure.size(); ++head) {
    GMat cur = closure[head];
    for (const GMat& g : gens) {
      push(cur * g);
      if (static_cast<int>(closure.size()) > gt.order())
        throw Error(Errc::order_overflow, "closure exceeded group order");
    }
  }
  if (static_cast<int>(closure.size()) != gt.order())
    throw Error(Errc::group_mismatch,
                "seed images generate a proper subgroup of order " +
                    std::to_string(closure.size()));
}

inline std::string sanitize_filename(std::string_view s) {
  std::string out;
  for (char ch : s)
    out.push_back(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_'
                      ? ch
                      : '_');
  return out.empty() ? "unnamed" : out;
}

}  // namespace coxbridge

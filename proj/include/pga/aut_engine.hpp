#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pga/bigint.hpp"
#include "pga/errors.hpp"
#include "pga/finite_group.hpp"
#include "pga/group_expr.hpp"
#include "pga/men_quotient.hpp"
#include "pga/number_theory.hpp"
#include "pga/oracle.hpp"
#include "pga/power_graph.hpp"

namespace pga {

struct EngineOptions {
  /// Used to certify that components grouped together are isomorphic.
  oracle::Caps isomorphism_caps{256, 10'000'000, 20'000'000};
  /// Used to count components with no unique dominating node.
  oracle::Caps fallback_caps{};
};

/// Bookkeeping of what the recursive decomposition did.
struct DecompositionStats {
  std::size_t components = 0;
  std::size_t wreath_steps = 0;       // isomorphism classes with multiplicity > 1
  std::size_t certified_pairs = 0;    // component pairs certified isomorphic
  std::size_t apex_removals = 0;      // unique dominating nodes removed
  std::size_t brute_force_pieces = 0;
};

namespace detail {

struct ComponentClass {
  WeightedGraph representative;
  std::uint64_t multiplicity;
};

inline bool cheap_invariants_match(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::pair<std::uint64_t, std::size_t>> da, db;
  for (Vertex v = 0; v < a.size(); ++v) da.emplace_back(a.weight(v), a.degree(v));
  for (Vertex v = 0; v < b.size(); ++v) db.emplace_back(b.weight(v), b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

inline GroupExpr component_aut(const WeightedGraph& c, const EngineOptions& opts, DecompositionStats& stats);

}  // namespace detail

/// Aut of a weighted graph as a structural expression (not normalised):
/// components are grouped into isomorphism classes (each grouping certified
/// by the oracle), each class of m copies contributes Aut(C) wr Sm, and a
/// connected component with a unique dominating node is reduced to the
/// component minus that node. Components without one are counted by brute
/// force and appear as Opaque(order).
inline GroupExpr quotient_aut(const WeightedGraph& q, const EngineOptions& opts, DecompositionStats& stats) {
  std::vector<detail::ComponentClass> classes;
  for (const auto& comp : connected_components(q)) {
    ++stats.components;
    WeightedGraph sub = q.induced(comp);
    bool placed = false;
    for (auto& cls : classes) {
      if (!detail::cheap_invariants_match(cls.representative, sub)) continue;
      if (!oracle::are_isomorphic(cls.representative, sub, opts.isomorphism_caps).isomorphic) continue;
      ++cls.multiplicity;
      ++stats.certified_pairs;
      placed = true;
      break;
    }
    if (!placed) classes.push_back({std::move(sub), 1});
  }
  std::vector<GroupExpr> factors;
  for (const auto& cls : classes) {
    GroupExpr inner = detail::component_aut(cls.representative, opts, stats);
    if (cls.multiplicity > 1) {
      ++stats.wreath_steps;
      factors.push_back(GroupExpr::wreath(std::move(inner), cls.multiplicity));
    } else {
      factors.push_back(std::move(inner));
    }
  }
  if (factors.size() == 1) return std::move(factors.front());
  return GroupExpr::product(std::move(factors));
}

inline GroupExpr quotient_aut(const WeightedGraph& q, const EngineOptions& opts = {}) {
  DecompositionStats stats;
  return quotient_aut(q, opts, stats);
}

inline GroupExpr quotient_aut(const QuotientGraph& q, const EngineOptions& opts = {}) {
  return quotient_aut(q.graph, opts);
}

namespace detail {

inline GroupExpr component_aut(const WeightedGraph& c, const EngineOptions& opts, DecompositionStats& stats) {
  if (c.size() == 1) return GroupExpr::trivial();
  std::vector<Vertex> dominating, rest;
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c.degree(v) + 1 == c.size()) dominating.push_back(v);
    else rest.push_back(v);
  }
  if (dominating.size() == 1) {
    // the apex is fixed by every automorphism and adjacent to everything
    ++stats.apex_removals;
    return quotient_aut(c.induced(rest), opts, stats);
  }
  ++stats.brute_force_pieces;
  auto counted = oracle::count_automorphisms(c, opts.fallback_caps);
  if (!counted.known())
    throw CapExceeded("order-only unavailable: component of " + std::to_string(c.size()) +
                      " nodes has no unique dominating node and " + counted.reason);
  return GroupExpr::opaque(*counted.count);
}

}  // namespace detail

/// One Sym(|class|) per twin class, in class order.
inline std::vector<GroupExpr> class_symmetric_factors(const MenPartition& mp) {
  std::vector<GroupExpr> out;
  out.reserve(mp.size());
  for (auto w : mp.weights) out.push_back(GroupExpr::sym(w));
  return out;
}

/// Aut(quotient) x prod Sym(|class|), the top-level combination left as an
/// unspecified extension.
inline GroupExpr combine_with_classes(GroupExpr quotient_part, const MenPartition& mp) {
  std::vector<GroupExpr> factors{std::move(quotient_part)};
  for (auto& s : class_symmetric_factors(mp)) factors.push_back(std::move(s));
  return GroupExpr::product(std::move(factors), GroupExpr::Splitting::UnspecifiedExtension);
}

// ---------------------------------------------------------------------------
// Closed forms

/// Cyclic group of order n with at least two prime divisors: one Sym(phi(d))
/// per divisor d > 1.
inline GroupExpr aut_cyclic_formula(std::uint64_t n) {
  if (n < 2 || nt::as_prime_power(n))
    throw SpecError("cyclic formula needs n with two distinct prime factors; for a prime power q the "
                    "power graph is complete and Aut = S(q-1)");
  std::vector<GroupExpr> factors;
  for (auto d : nt::divisors(n))
    if (d > 1) factors.push_back(GroupExpr::sym(nt::totient(d)));
  return GroupExpr::product(std::move(factors));
}

/// Z(p^m): the power graph is complete on p^m - 1 vertices.
inline GroupExpr aut_prime_power_cyclic(std::uint64_t p, unsigned m) {
  if (!nt::is_prime(p) || m == 0) throw SpecError("need a prime p and m >= 1");
  return GroupExpr::sym(nt::ipow(p, m) - 1);
}

struct HomocyclicCounts {
  std::vector<BigInt> r;  // r[t-1]: number of cyclic subgroups of order p^t
  std::vector<BigInt> k;  // k[0] = r_1, k[i] = r_{i+1} / r_i
};

inline HomocyclicCounts homocyclic_counts(std::uint64_t p, unsigned m, unsigned n) {
  HomocyclicCounts out;
  const BigInt bp = p;
  for (unsigned t = 1; t <= m; ++t) {
    const BigInt elements = boost::multiprecision::pow(bp, t * n) - boost::multiprecision::pow(bp, (t - 1) * n);
    const BigInt per_subgroup = boost::multiprecision::pow(bp, t) - boost::multiprecision::pow(bp, t - 1);
    check_internal(elements % per_subgroup == 0, "non-integral subgroup count");
    out.r.push_back(elements / per_subgroup);
  }
  out.k.push_back(out.r[0]);
  for (unsigned i = 1; i < m; ++i) {
    check_internal(out.r[i] % out.r[i - 1] == 0, "non-integral branching count");
    out.k.push_back(out.r[i] / out.r[i - 1]);
  }
  return out;
}

/// Z(p^m)^n, n >= 2: the nested wreath ((S_km wr ...) wr S_k2) wr S_k1
/// times prod_i Sym(p^i - p^(i-1))^(r_i).
inline GroupExpr aut_homocyclic_formula(std::uint64_t p, unsigned m, unsigned n) {
  if (!nt::is_prime(p) || m == 0) throw SpecError("need a prime p and m >= 1");
  if (n < 2) throw SpecError("homocyclic groups have at least two factors; use the cyclic case");
  const auto counts = homocyclic_counts(p, m, n);
  auto small = [](const BigInt& v) {
    if (v > 1'000'000) throw CapExceeded("factor count " + v.str() + " too large to expand");
    return static_cast<std::uint64_t>(v);
  };
  GroupExpr nested = GroupExpr::sym(small(counts.k[m - 1]));
  for (unsigned i = m - 1; i-- > 0;) nested = GroupExpr::wreath(std::move(nested), small(counts.k[i]));
  std::vector<GroupExpr> factors{std::move(nested)};
  for (unsigned i = 1; i <= m; ++i) {
    const std::uint64_t w = nt::ipow(p, i) - nt::ipow(p, i - 1);
    const std::uint64_t copies = small(counts.r[i - 1]);
    for (std::uint64_t c = 0; c < copies; ++c) factors.push_back(GroupExpr::sym(w));
  }
  return GroupExpr::product(std::move(factors), GroupExpr::Splitting::UnspecifiedExtension);
}

}  // namespace pga

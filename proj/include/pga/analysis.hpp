#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pga/aut_engine.hpp"
#include "pga/bigint.hpp"
#include "pga/errors.hpp"
#include "pga/finite_group.hpp"
#include "pga/group_expr.hpp"
#include "pga/group_spec.hpp"
#include "pga/men_quotient.hpp"
#include "pga/number_theory.hpp"
#include "pga/oracle.hpp"
#include "pga/power_graph.hpp"

namespace pga {

struct ClassRow {
  std::vector<std::string> members;  // element labels
  std::size_t weight = 0;
  std::size_t element_order = 0;  // maximal order in the class
  MenType type = MenType::Neither;
};

struct Verification {
  enum class Status { Skipped, FullVerified, QuotientVerified, Mismatch, Unknown };
  Status status = Status::Skipped;
  std::optional<BigInt> oracle_quotient_order;
  std::optional<BigInt> oracle_full_order;
  std::vector<std::string> notes;
};

inline const char* to_string(Verification::Status s) {
  switch (s) {
    case Verification::Status::Skipped:
      return "SKIPPED";
    case Verification::Status::FullVerified:
      return "FULL-VERIFIED";
    case Verification::Status::QuotientVerified:
      return "QUOTIENT-VERIFIED";
    case Verification::Status::Mismatch:
      return "MISMATCH";
    case Verification::Status::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

struct AutReport {
  std::string spec;
  std::size_t group_order = 0;
  std::size_t vertex_count = 0;
  std::vector<ClassRow> classes;
  std::size_t quotient_nodes = 0;
  std::size_t quotient_edges = 0;
  GroupExpr raw_expression;       // as produced by the method
  GroupExpr expression;           // normal form of raw_expression
  GroupExpr quotient_expression;  // the method's claim for Aut(quotient), normal form
  std::string expression_text;
  BigInt quotient_order = 1;
  BigInt order = 1;
  std::string method;
  DecompositionStats stats;
  Verification verification;
};

struct AnalyzeOptions {
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  EngineOptions engine{};
};

/// Everything computed for one group. The report's order always equals the
/// order of its expression.
struct Analysis {
  GroupSpec spec;
  FiniteGroup group;
  PowerGraph graph;
  MenPartition partition;
  QuotientGraph quotient;
  std::vector<MenClassification> classification;
  AutReport report;
};

namespace detail {

inline BigInt class_factorial_product(const MenPartition& mp) {
  BigInt r = 1;
  for (auto w : mp.weights) r *= factorial(w);
  return r;
}

/// Group-level fields of a report. Classifies every class and checks the
/// order reconstruction; a class of neither shape is a hard failure.
inline AutReport report_skeleton(const FiniteGroup& g, const PowerGraph& pg, const MenPartition& mp,
                                 const QuotientGraph& q, std::vector<MenClassification>* classification) {
  AutReport r;
  r.spec = g.description();
  r.group_order = g.size();
  r.vertex_count = pg.size();
  r.quotient_nodes = q.size();
  r.quotient_edges = q.graph.edge_count();
  for (std::size_t c = 0; c < mp.size(); ++c) {
    auto cls = classify_men_class(g, pg, mp.classes[c]);
    ClassRow row;
    for (Vertex v : mp.classes[c]) row.members.push_back(g.label(pg.vertices[v]));
    row.weight = mp.weights[c];
    row.element_order = reconstruct_order(g, pg, mp, c);
    row.type = cls.type;
    check_internal(cls.type != MenType::Neither,
                   "twin class {" + row.members.front() + ", ...} of " + g.description() +
                       " is neither a generator set nor a cyclic chain");
    r.classes.push_back(std::move(row));
    if (classification) classification->push_back(std::move(cls));
  }
  return r;
}

inline void finish(AutReport& r, GroupExpr raw, GroupExpr quotient_part, const MenPartition& mp,
                   std::string method) {
  r.raw_expression = std::move(raw);
  r.expression = expr_normalize(r.raw_expression);
  r.quotient_expression = expr_normalize(quotient_part);
  r.expression_text = render(r.expression);
  r.order = expr_order(r.expression);
  r.quotient_order = expr_order(r.quotient_expression);
  r.method = std::move(method);
  check_internal(r.order == expr_order(r.raw_expression), "normalisation changed the order");
  check_internal(r.order == r.quotient_order * class_factorial_product(mp),
                 r.method + ": order " + r.order.str() + " is not |Aut(quotient)| * prod |class|!");
}

}  // namespace detail

/// Aut(P(G)) as Aut(quotient) combined with one symmetric group per class,
/// the quotient part from the recursive decomposition.
inline AutReport aut_full(const FiniteGroup& g, const PowerGraph& pg, const MenPartition& mp,
                          const QuotientGraph& q, const EngineOptions& opts = {}) {
  AutReport r = detail::report_skeleton(g, pg, mp, q, nullptr);
  GroupExpr quotient_part = quotient_aut(q.graph, opts, r.stats);
  GroupExpr raw = combine_with_classes(quotient_part, mp);
  detail::finish(r, std::move(raw), std::move(quotient_part), mp, "quotient-recursive");
  return r;
}

/// Nilpotent G = P1 x ... x Pt (pairwise coprime orders): the quotient part
/// is the product of the quotient parts of the factors, each computed on the
/// factor's own quotient after merging nodes with equal closed
/// neighbourhoods. The class part comes from P(G) itself.
inline AutReport aut_nilpotent(const FiniteGroup& g, const PowerGraph& pg, const MenPartition& mp,
                               const QuotientGraph& q, const std::vector<FiniteGroup>& factors,
                               const EngineOptions& opts = {}) {
  std::vector<const FiniteGroup*> nontrivial;
  std::size_t product = 1;
  for (const auto& f : factors) {
    product *= f.size();
    if (f.size() > 1) nontrivial.push_back(&f);
  }
  if (nontrivial.size() < 2) throw SpecError("nilpotent decomposition needs at least two nontrivial factors");
  for (std::size_t i = 0; i < nontrivial.size(); ++i)
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
      if (nt::gcd(nontrivial[i]->size(), nontrivial[j]->size()) != 1)
        throw SpecError("factor orders " + std::to_string(nontrivial[i]->size()) + " and " +
                        std::to_string(nontrivial[j]->size()) + " are not coprime");
  if (product != g.size()) throw SpecError("factor orders do not multiply to |G|");

  AutReport r = detail::report_skeleton(g, pg, mp, q, nullptr);
  std::vector<GroupExpr> parts;
  for (const FiniteGroup* f : nontrivial) {
    const PowerGraph fpg = build_power_graph(*f);
    const MenPartition fmp = men_partition(fpg);
    const QuotientGraph fq = build_quotient(fpg, fmp);
    parts.push_back(quotient_aut(merge_closed_twins(fq.graph), opts, r.stats));
  }
  GroupExpr quotient_part = GroupExpr::product(std::move(parts));
  GroupExpr raw = combine_with_classes(quotient_part, mp);
  detail::finish(r, std::move(raw), std::move(quotient_part), mp, "nilpotent-sylow");
  return r;
}

/// Abelian G given by its elementary divisors. Closed forms are used where
/// they apply and always cross-checked against the recursive decomposition.
inline AutReport aut_abelian(const FiniteGroup& g, const PowerGraph& pg, const MenPartition& mp,
                             const QuotientGraph& q, const std::vector<std::uint64_t>& invariants,
                             const EngineOptions& opts = {}) {
  if (!g.is_abelian()) throw SpecError(g.description() + " is not abelian");
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  std::uint64_t product = 1;
  for (auto d : invariants) {
    const auto pp = nt::as_prime_power(d);
    if (!pp) throw SpecError("invariant " + std::to_string(d) + " is not a prime power");
    by_prime[pp->prime].push_back(pp->exponent);
    product *= d;
  }
  if (product != g.size()) throw SpecError("invariants do not multiply to |G|");

  AutReport generic = aut_full(g, pg, mp, q, opts);
  bool cyclic = true;
  for (const auto& [p, exps] : by_prime) cyclic = cyclic && exps.size() == 1;

  std::optional<GroupExpr> closed;
  std::string method;
  if (cyclic && by_prime.size() == 1) {
    const auto& [p, exps] = *by_prime.begin();
    closed = aut_prime_power_cyclic(p, exps.front());
    method = "prime-power-cyclic";
  } else if (cyclic) {
    closed = aut_cyclic_formula(g.size());
    method = "cyclic-formula";
  } else if (by_prime.size() == 1) {
    const auto& [p, exps] = *by_prime.begin();
    if (std::all_of(exps.begin(), exps.end(), [&](unsigned e) { return e == exps.front(); })) {
      closed = aut_homocyclic_formula(p, exps.front(), static_cast<unsigned>(exps.size()));
      method = "homocyclic-formula";
    } else {
      generic.method = "abelian-p-group-recursive";
      return generic;
    }
  } else {
    auto sylows = sylow_decomposition(g);
    check_internal(sylows.has_value(), "abelian group failed the Sylow decomposition");
    std::vector<FiniteGroup> factors;
    for (auto& s : *sylows) factors.push_back(std::move(s.group));
    AutReport r = aut_nilpotent(g, pg, mp, q, factors, opts);
    check_internal(r.order == generic.order, "Sylow route gives " + r.order.str() +
                                                 " but the recursive decomposition gives " + generic.order.str());
    return r;
  }

  AutReport r = generic;
  const BigInt closed_order = expr_order(*closed);
  check_internal(closed_order == generic.order, method + " gives " + closed_order.str() +
                                                    " but the recursive decomposition gives " + generic.order.str());
  detail::finish(r, std::move(*closed), generic.quotient_expression, mp, method);
  return r;
}

/// Full pipeline: realise, build the graph and quotient, then pick the most
/// specific method (abelian closed forms, Sylow decomposition for nilpotent
/// groups, recursive decomposition otherwise).
inline Analysis analyze(const GroupSpec& spec, const AnalyzeOptions& opts = {}) {
  FiniteGroup g = realize(spec, opts.max_group_order);
  PowerGraph pg = build_power_graph(g);
  MenPartition mp = men_partition(pg);
  QuotientGraph q = build_quotient(pg, mp);
  std::vector<MenClassification> classification;
  (void)detail::report_skeleton(g, pg, mp, q, &classification);

  AutReport report;
  if (g.is_abelian()) {
    report = aut_abelian(g, pg, mp, q, abelian_invariants(g), opts.engine);
  } else if (auto sylows = sylow_decomposition(g); sylows && sylows->size() >= 2) {
    std::vector<FiniteGroup> factors;
    for (auto& s : *sylows) factors.push_back(std::move(s.group));
    report = aut_nilpotent(g, pg, mp, q, factors, opts.engine);
    const AutReport generic = aut_full(g, pg, mp, q, opts.engine);
    check_internal(report.order == generic.order, "Sylow route gives " + report.order.str() +
                                                      " but the recursive decomposition gives " +
                                                      generic.order.str());
  } else {
    report = aut_full(g, pg, mp, q, opts.engine);
  }
  report.spec = render(spec);
  return Analysis{spec,          std::move(g),          std::move(pg), std::move(mp),
                  std::move(q),  std::move(classification), std::move(report)};
}

inline Analysis analyze(std::string_view spec_text, const AnalyzeOptions& opts = {}) {
  return analyze(parse_group_spec(spec_text), opts);
}

/// Cross-checks a report against the brute-force oracle. The quotient claim
/// is always checked; the full power graph is checked as well when it is
/// within caps.max_nodes and the claimed order is within caps.max_count.
inline Verification verify(const Analysis& a, const oracle::Caps& caps = {}) {
  Verification v;
  const AutReport& r = a.report;
  bool mismatch = false;

  const auto quotient = oracle::count_automorphisms(a.quotient.graph, caps);
  if (quotient.known()) {
    v.oracle_quotient_order = *quotient.count;
    if (*quotient.count != r.quotient_order) {
      mismatch = true;
      v.notes.push_back("quotient: structural " + r.quotient_order.str() + " != oracle " + quotient.count->str());
    } else {
      v.notes.push_back("quotient: " + r.quotient_order.str() + " = " + quotient.count->str());
    }
  } else {
    v.notes.push_back("quotient: oracle unknown (" + quotient.reason + ")");
  }

  bool full_done = false;
  if (a.graph.size() > caps.max_nodes) {
    v.notes.push_back("full graph: skipped, " + std::to_string(a.graph.size()) + " vertices exceed max-nodes " +
                      std::to_string(caps.max_nodes));
  } else if (r.order > caps.max_count) {
    v.notes.push_back("full graph: skipped, order " + r.order.str() + " exceeds max-count " +
                      std::to_string(caps.max_count));
  } else {
    const auto full = oracle::count_automorphisms(as_weighted_graph(a.graph), caps);
    if (full.known()) {
      full_done = true;
      v.oracle_full_order = *full.count;
      if (*full.count != r.order) {
        mismatch = true;
        v.notes.push_back("full graph: structural " + r.order.str() + " != oracle " + full.count->str());
      } else {
        v.notes.push_back("full graph: " + r.order.str() + " = " + full.count->str());
      }
    } else {
      v.notes.push_back("full graph: oracle unknown (" + full.reason + ")");
    }
  }

  if (mismatch) v.status = Verification::Status::Mismatch;
  else if (full_done) v.status = Verification::Status::FullVerified;
  else if (quotient.known()) v.status = Verification::Status::QuotientVerified;
  else v.status = Verification::Status::Unknown;
  return v;
}

}  // namespace pga

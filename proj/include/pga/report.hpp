#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "pga/analysis.hpp"

namespace pga {

/// JSON report. Schema:
///   {spec, group_order, vertex_count,
///    classes: [{members, weight, element_order, men_type}],
///    quotient: {nodes, edges}, expression, order_decimal, method,
///    verification: {status, oracle_quotient_order, oracle_full_order, notes}}
/// Orders are decimal strings; absent oracle values are null.
inline nlohmann::ordered_json to_json(const AutReport& r) {
  nlohmann::ordered_json j;
  j["spec"] = r.spec;
  j["group_order"] = r.group_order;
  j["vertex_count"] = r.vertex_count;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    nlohmann::ordered_json row;
    row["members"] = c.members;
    row["weight"] = c.weight;
    row["element_order"] = c.element_order;
    row["men_type"] = to_string(c.type);
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  j["quotient"] = {{"nodes", r.quotient_nodes}, {"edges", r.quotient_edges}};
  j["expression"] = r.expression_text;
  j["order_decimal"] = r.order.str();
  j["method"] = r.method;
  nlohmann::ordered_json v;
  v["status"] = to_string(r.verification.status);
  v["oracle_quotient_order"] =
      r.verification.oracle_quotient_order ? nlohmann::ordered_json(r.verification.oracle_quotient_order->str())
                                           : nlohmann::ordered_json(nullptr);
  v["oracle_full_order"] = r.verification.oracle_full_order
                               ? nlohmann::ordered_json(r.verification.oracle_full_order->str())
                               : nlohmann::ordered_json(nullptr);
  v["notes"] = r.verification.notes;
  j["verification"] = std::move(v);
  return j;
}

inline std::string to_text(const AutReport& r) {
  std::ostringstream out;
  out << "group            " << r.spec << "\n";
  out << "group order      " << r.group_order << "\n";
  out << "vertices         " << r.vertex_count << "\n";
  out << "twin classes     " << r.classes.size() << "\n";
  for (const auto& c : r.classes) {
    out << "  {";
    for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? ", " : "") << c.members[i];
    out << "}  weight=" << c.weight << " order=" << c.element_order << " type=" << to_string(c.type) << "\n";
  }
  out << "quotient         " << r.quotient_nodes << " nodes, " << r.quotient_edges << " edges\n";
  out << "expression       " << r.expression_text << "\n";
  out << "order            " << r.order.str() << "\n";
  out << "method           " << r.method << "\n";
  if (r.verification.status != Verification::Status::Skipped) {
    out << "verification     " << to_string(r.verification.status) << "\n";
    for (const auto& n : r.verification.notes) out << "  " << n << "\n";
  }
  return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

/// Power graph in DOT; nodes labelled with the element and its order.
inline std::string power_graph_dot(const FiniteGroup& g, const PowerGraph& pg) {
  std::ostringstream out;
  out << "graph \"" << detail::dot_escape("P(" + pg.group_ref + ")") << "\" {\n";
  for (Vertex v = 0; v < pg.size(); ++v) {
    const Element x = pg.vertices[v];
    out << "  v" << v << " [label=\"" << detail::dot_escape(g.label(x)) << "\\no=" << g.element_order(x)
        << "\"];\n";
  }
  for (Vertex v = 0; v < pg.size(); ++v)
    for (Vertex u : pg.neighbor_lists[v])
      if (u > v) out << "  v" << v << " -- v" << u << ";\n";
  out << "}\n";
  return out.str();
}

/// Weighted quotient in DOT; nodes labelled "weight=w, order=o" with o the
/// maximal element order in the class.
inline std::string quotient_dot(const Analysis& a) {
  std::ostringstream out;
  out << "graph \"" << detail::dot_escape("quotient of P(" + a.graph.group_ref + ")") << "\" {\n";
  const auto& q = a.quotient.graph;
  for (Vertex v = 0; v < q.size(); ++v) {
    out << "  c" << v << " [label=\"weight=" << q.weight(v)
        << ", order=" << a.report.classes.at(v).element_order << "\"];\n";
  }
  for (Vertex v = 0; v < q.size(); ++v)
    for (Vertex u : q.neighbors(v))
      if (u > v) out << "  c" << v << " -- c" << u << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pga

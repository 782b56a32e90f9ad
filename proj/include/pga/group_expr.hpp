#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pga/bigint.hpp"
#include "pga/errors.hpp"

namespace pga {

/// Symbolic description of a permutation group built from symmetric groups by
/// products and wreath products. Opaque nodes carry only an exact order (used
/// when a piece was counted by brute force).
struct GroupExpr {
  enum class Kind { Trivial, Sym, Product, Wreath, Opaque };
  /// Products coming straight from a twin-class reduction are not claimed to
  /// split as direct products; only their order is asserted.
  enum class Splitting { Direct, UnspecifiedExtension };

  Kind kind = Kind::Trivial;
  std::uint64_t degree = 0;  // n of Sym(n), t of Wreath(base, Sym(t))
  BigInt opaque_order = 1;
  Splitting splitting = Splitting::Direct;
  std::vector<GroupExpr> children;  // factors, or {base} for Wreath

  bool operator==(const GroupExpr&) const = default;

  static GroupExpr trivial() { return {}; }
  static GroupExpr sym(std::uint64_t n) {
    if (n == 0) throw InternalError("Sym(0) is not allowed");
    GroupExpr e;
    e.kind = Kind::Sym;
    e.degree = n;
    return e;
  }
  static GroupExpr product(std::vector<GroupExpr> factors, Splitting s = Splitting::Direct) {
    GroupExpr e;
    e.kind = Kind::Product;
    e.splitting = s;
    e.children = std::move(factors);
    return e;
  }
  static GroupExpr wreath(GroupExpr base, std::uint64_t top) {
    if (top == 0) throw InternalError("wreath top degree must be positive");
    GroupExpr e;
    e.kind = Kind::Wreath;
    e.degree = top;
    e.children.push_back(std::move(base));
    return e;
  }
  static GroupExpr opaque(BigInt order) {
    if (order < 1) throw InternalError("opaque order must be positive");
    GroupExpr e;
    e.kind = Kind::Opaque;
    e.opaque_order = std::move(order);
    return e;
  }

  const GroupExpr& base() const { return children.at(0); }
};

inline BigInt expr_order(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Trivial:
      return 1;
    case K::Sym:
      return factorial(e.degree);
    case K::Opaque:
      return e.opaque_order;
    case K::Product: {
      BigInt r = 1;
      for (const auto& f : e.children) r *= expr_order(f);
      return r;
    }
    case K::Wreath:
      return boost::multiprecision::pow(expr_order(e.base()), static_cast<unsigned>(e.degree)) *
             factorial(e.degree);
  }
  return 1;
}

inline std::string render(const GroupExpr& e);

namespace detail {

inline int kind_rank(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Wreath:
      return 0;
    case GroupExpr::Kind::Opaque:
      return 1;
    case GroupExpr::Kind::Product:
      return 2;
    case GroupExpr::Kind::Sym:
      return 3;
    case GroupExpr::Kind::Trivial:
      return 4;
  }
  return 5;
}

/// Wreaths first, then opaque pieces, then symmetric groups; larger orders
/// first within a kind; ties broken by rendered text.
inline bool canonical_less(const GroupExpr& a, const GroupExpr& b) {
  if (kind_rank(a) != kind_rank(b)) return kind_rank(a) < kind_rank(b);
  const BigInt oa = expr_order(a), ob = expr_order(b);
  if (oa != ob) return oa > ob;
  return render(a) < render(b);
}

inline bool is_identity_factor(const GroupExpr& e) {
  return e.kind == GroupExpr::Kind::Trivial || (e.kind == GroupExpr::Kind::Sym && e.degree == 1) ||
         (e.kind == GroupExpr::Kind::Opaque && e.opaque_order == 1);
}

}  // namespace detail

/// Normal form: products flattened and sorted, trivial factors dropped,
/// Wreath(A, S1) = A, Wreath(1, St) = St. Order is preserved exactly.
inline GroupExpr expr_normalize(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Trivial:
      return GroupExpr::trivial();
    case K::Sym:
      return e.degree == 1 ? GroupExpr::trivial() : e;
    case K::Opaque:
      return e.opaque_order == 1 ? GroupExpr::trivial() : e;
    case K::Wreath: {
      GroupExpr base = expr_normalize(e.base());
      if (e.degree == 1) return base;
      if (base.kind == K::Trivial) return GroupExpr::sym(e.degree);
      return GroupExpr::wreath(std::move(base), e.degree);
    }
    case K::Product: {
      std::vector<GroupExpr> flat;
      auto splitting = e.splitting;
      for (const auto& f : e.children) {
        GroupExpr nf = expr_normalize(f);
        if (nf.kind == K::Product) {
          if (nf.splitting == GroupExpr::Splitting::UnspecifiedExtension) splitting = nf.splitting;
          for (auto& g : nf.children) flat.push_back(std::move(g));
        } else if (!detail::is_identity_factor(nf)) {
          flat.push_back(std::move(nf));
        }
      }
      if (flat.empty()) return GroupExpr::trivial();
      if (flat.size() == 1) return std::move(flat.front());
      std::stable_sort(flat.begin(), flat.end(), detail::canonical_less);
      return GroupExpr::product(std::move(flat), splitting);
    }
  }
  return e;
}

namespace detail {

inline std::string render_operand(const GroupExpr& e) {
  const bool compound = e.kind == GroupExpr::Kind::Product || e.kind == GroupExpr::Kind::Wreath;
  return compound ? "(" + render(e) + ")" : render(e);
}

}  // namespace detail

/// Text form: `x` for products, `wr` for wreath products, `S<n>`, `^k` for k
/// consecutive identical factors, `1` for the trivial group and
/// `Opaque(<order>)` for brute-force pieces.
inline std::string render(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Trivial:
      return "1";
    case K::Sym:
      return "S" + std::to_string(e.degree);
    case K::Opaque:
      return "Opaque(" + e.opaque_order.str() + ")";
    case K::Wreath:
      return detail::render_operand(e.base()) + " wr S" + std::to_string(e.degree);
    case K::Product: {
      if (e.children.empty()) return "1";
      std::string out;
      for (std::size_t i = 0; i < e.children.size();) {
        std::size_t j = i + 1;
        while (j < e.children.size() && e.children[j] == e.children[i]) ++j;
        if (!out.empty()) out += " x ";
        if (j - i > 1) out += detail::render_operand(e.children[i]) + "^" + std::to_string(j - i);
        else out += e.children[i].kind == K::Wreath || e.children[i].kind == K::Product
                        ? detail::render_operand(e.children[i])
                        : render(e.children[i]);
        i = j;
      }
      return out;
    }
  }
  return "?";
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse_all() {
    GroupExpr e = parse_product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecError("expression syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint64_t small_int() {
    const auto s = digits();
    if (s.size() > 18) fail("integer too large");
    return std::stoull(s);
  }

  GroupExpr parse_product() {
    std::vector<GroupExpr> factors;
    parse_factor(factors);
    while (accept("x")) parse_factor(factors);
    if (factors.size() == 1) return std::move(factors.front());
    return GroupExpr::product(std::move(factors));
  }

  void parse_factor(std::vector<GroupExpr>& out) {
    GroupExpr e = parse_wreath();
    std::uint64_t count = 1;
    if (accept("^")) count = small_int();
    if (count == 0) fail("exponent must be positive");
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(e);
  }

  GroupExpr parse_wreath() {
    GroupExpr e = parse_atom();
    while (accept("wr")) {
      if (!accept("S")) fail("expected S<n> after 'wr'");
      const auto t = small_int();
      if (t == 0) fail("S0 is not a group");
      e = GroupExpr::wreath(std::move(e), t);
    }
    return e;
  }

  GroupExpr parse_atom() {
    if (accept("(")) {
      GroupExpr e = parse_product();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (accept("Opaque(")) {
      BigInt v(digits());
      if (!accept(")")) fail("expected ')'");
      if (v < 1) fail("opaque order must be positive");
      return GroupExpr::opaque(std::move(v));
    }
    if (accept("S")) {
      const auto n = small_int();
      if (n == 0) fail("S0 is not a group");
      return GroupExpr::sym(n);
    }
    if (accept("1")) return GroupExpr::trivial();
    fail("expected S<n>, 1, Opaque(<n>) or '('");
  }
};

}  // namespace detail

inline GroupExpr parse_group_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

}  // namespace pga

#include <gtest/gtest.h>

#include <random>

#include "pga/pga.hpp"

using namespace pga;
using E = GroupExpr;

TEST(ExprOrder, Examples) {
  EXPECT_EQ(expr_order(E::sym(3)), 6);
  EXPECT_EQ(expr_order(E::trivial()), 1);
  EXPECT_EQ(expr_order(E::wreath(E::sym(2), 3)), 48);
  const auto e = E::product({E::wreath(E::sym(2), 3), E::product(std::vector<E>(6, E::sym(2)))});
  EXPECT_EQ(expr_order(e), 3072);
  EXPECT_EQ(expr_order(E::opaque(BigInt(77))), 77);
  EXPECT_EQ(expr_order(E::sym(25)), factorial(25));
}

TEST(ExprNormalize, Examples) {
  EXPECT_EQ(render(expr_normalize(E::product({E::sym(2), E::trivial(), E::sym(1), E::sym(2)}))), "S2^2");
  EXPECT_EQ(render(expr_normalize(E::product({E::sym(2), E::product({E::sym(3), E::sym(2)})}))), "S3 x S2^2");
  EXPECT_EQ(render(expr_normalize(E::wreath(E::sym(4), 1))), "S4");
  EXPECT_EQ(render(expr_normalize(E::wreath(E::trivial(), 5))), "S5");
  EXPECT_EQ(render(expr_normalize(E::product({E::sym(1), E::trivial()}))), "1");
  EXPECT_EQ(render(expr_normalize(E::product({E::sym(2), E::opaque(6), E::wreath(E::sym(2), 3)}))),
            "(S2 wr S3) x Opaque(6) x S2");
}

TEST(ExprRender, NestedWreathParenthesised) {
  const auto e = E::wreath(E::wreath(E::sym(2), 3), 4);
  EXPECT_EQ(render(e), "(S2 wr S3) wr S4");
  EXPECT_EQ(expr_order(e), BigInt(48) * 48 * 48 * 48 * 24);
}

TEST(ExprParse, Examples) {
  EXPECT_EQ(expr_order(parse_group_expr("(S2 wr S3) x S2^6")), 3072);
  EXPECT_EQ(parse_group_expr("S3"), E::sym(3));
  EXPECT_EQ(expr_order(parse_group_expr("1")), 1);
  EXPECT_THROW(parse_group_expr("S2 x"), SpecError);
  EXPECT_THROW(parse_group_expr("T3"), SpecError);
}

namespace {

E random_expr(std::mt19937& rng, int depth) {
  const int pick = depth == 0 ? 0 : static_cast<int>(rng() % 5);
  switch (pick) {
    case 1: {
      std::vector<E> fs;
      const int k = 1 + rng() % 3;
      for (int i = 0; i < k; ++i) fs.push_back(random_expr(rng, depth - 1));
      return E::product(std::move(fs));
    }
    case 2:
      return E::wreath(random_expr(rng, depth - 1), 1 + rng() % 4);
    case 3:
      return E::opaque(BigInt(1 + rng() % 20));
    case 4:
      return E::trivial();
    default:
      return E::sym(1 + rng() % 6);
  }
}

}  // namespace

TEST(ExprProperties, WreathOrderLaw) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_expr(rng, 2);
    const std::uint64_t t = 1 + rng() % 5;
    EXPECT_EQ(expr_order(E::wreath(a, t)), boost::multiprecision::pow(expr_order(a), t) * factorial(t));
  }
}

TEST(ExprProperties, NormalizePreservesOrderAndIsIdempotent) {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto e = random_expr(rng, 3);
    const auto n = expr_normalize(e);
    EXPECT_EQ(expr_order(n), expr_order(e));
    EXPECT_EQ(expr_normalize(n), n);
  }
}

TEST(ExprProperties, RenderParseRoundTrip) {
  std::mt19937 rng(29);
  for (int i = 0; i < 500; ++i) {
    const auto n = expr_normalize(random_expr(rng, 3));
    const auto text = render(n);
    const auto back = parse_group_expr(text);
    EXPECT_EQ(expr_order(back), expr_order(n)) << text;
    EXPECT_EQ(render(expr_normalize(back)), text);
  }
}

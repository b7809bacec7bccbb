#include <gtest/gtest.h>

#include "corpus.hpp"
#include "medlat/logic.hpp"
#include "medlat/parser.hpp"
#include "random_formula.hpp"

using namespace medlat;

namespace {
Formula v(const char* n) { return Formula::var(n); }
}  // namespace

TEST(Parser, Identity) { EXPECT_EQ(parse("p -> p"), Formula::implies(v("p"), v("p"))); }

TEST(Parser, KreiselPutnam) {
  const auto np = Formula::negate(v("p"));
  const auto expected = Formula::implies(
      Formula::implies(np, Formula::disj(v("q"), v("r"))),
      Formula::disj(Formula::implies(np, v("q")), Formula::implies(np, v("r"))));
  EXPECT_EQ(parse("(~p -> q | r) -> (~p -> q) | (~p -> r)"), expected);
}

TEST(Parser, ImplicationIsRightAssociative) {
  EXPECT_EQ(parse("p -> q -> r"), Formula::implies(v("p"), Formula::implies(v("q"), v("r"))));
}

TEST(Parser, Precedence) {
  // ~ binds tighter than &, & than |, | than ->
  EXPECT_EQ(parse("~p & q | r -> s"),
            Formula::implies(Formula::disj(Formula::conj(Formula::negate(v("p")), v("q")), v("r")), v("s")));
  EXPECT_EQ(parse("p | q & r"), Formula::disj(v("p"), Formula::conj(v("q"), v("r"))));
  EXPECT_EQ(parse("p | q | r"), Formula::disj(Formula::disj(v("p"), v("q")), v("r")));
  EXPECT_EQ(parse("~~p"), Formula::negate(Formula::negate(v("p"))));
}

TEST(Parser, Constants) {
  EXPECT_EQ(parse("T"), Formula::truth());
  EXPECT_EQ(parse("F -> x_1"), Formula::implies(Formula::falsity(), v("x_1")));
  EXPECT_EQ(parse("⊤ ∧ ⊥"), Formula::conj(Formula::truth(), Formula::falsity()));
}

TEST(Parser, UnicodeAliases) {
  EXPECT_EQ(parse("¬p ∨ ¬¬p"), parse("~p | ~~p"));
  EXPECT_EQ(parse("p ∧ q → r"), parse("p & q -> r"));
  EXPECT_EQ(render_unicode(parse("~p | ~~p")), "¬p ∨ ¬¬p");
}

TEST(Parser, VariableNames) {
  EXPECT_EQ(parse("abc2_x").name(), "abc2_x");
  EXPECT_THROW(parse("Tx"), parse_error);
  EXPECT_THROW(parse("P"), parse_error);
}

TEST(Parser, ErrorPositions) {
  try {
    parse("p -> ");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 5U);
    EXPECT_TRUE(e.expected().count("variable"));
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
  }
  try {
    parse("(p | q");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 6U);
    EXPECT_TRUE(e.expected().count("')'"));
  }
  try {
    parse("p q");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 2U);
  }
  try {
    parse("p & $");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 4U);
    EXPECT_NE(std::string(e.what()).find("'$'"), std::string::npos);
  }
  EXPECT_THROW(parse(""), parse_error);
  EXPECT_THROW(parse(")"), parse_error);
}

TEST(Parser, DepthLimit) {
  const std::string deep = std::string(300, '(') + "p" + std::string(300, ')');
  EXPECT_THROW(parse(deep), input_error);
  const std::string nested = std::string(100, '(') + "p" + std::string(100, ')');
  EXPECT_EQ(parse(nested), v("p"));
}

TEST(Render, Minimal) {
  EXPECT_EQ(render(parse("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(render(parse("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(render(parse("(p | q) & r")), "(p | q) & r");
  EXPECT_EQ(render(parse("p | (q | r)")), "p | (q | r)");
  EXPECT_EQ(render(parse("~(p & q)")), "~(p & q)");
}

TEST(RoundTrip, Corpus) {
  for (const auto& text : corpus::formulas()) {
    const auto f = parse(text);
    EXPECT_EQ(parse(render(f)), f) << text;
    EXPECT_EQ(parse(render_unicode(f)), f) << text;
  }
  for (const auto& e : axiom_catalogue) EXPECT_EQ(parse(render(axiom(e.name))), axiom(e.name));
}

TEST(RoundTrip, RandomFormulas) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const auto f = support::random_formula(rng, 4, 7);
    EXPECT_EQ(parse(render(f)), f) << render(f);
  }
}

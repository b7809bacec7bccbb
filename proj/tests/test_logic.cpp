#include <gtest/gtest.h>

#include <fstream>

#include "corpus.hpp"
#include "medlat/io.hpp"
#include "medlat/logic.hpp"
#include "medlat/selector.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace medlat;
using support::at;

TEST(Axioms, Catalogue) {
  EXPECT_EQ(axiom("lin"), parse("(p->q)|(q->p)"));
  EXPECT_EQ(axiom("jan"), parse("~p | ~~p"));
  EXPECT_EQ(axiom("sc_paper"), parse("((~~p -> p) -> (~p | p)) -> (~~p | p)"));
  EXPECT_EQ(axiom("sc_standard"), parse("((~~p -> p) -> (p | ~p)) -> (~p | ~~p)"));
  EXPECT_EQ(axiom("lem"), parse("p | ~p"));
  EXPECT_EQ(axiom("kp"), parse("(~p -> q | r) -> (~p -> q) | (~p -> r)"));
  try {
    axiom("dummett");
    FAIL();
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("sc_standard"), std::string::npos);
  }
}

TEST(AntichainFormula, Examples) {
  EXPECT_EQ(antichain_formula(2), axiom("lin"));
  EXPECT_TRUE(is_valid(antichain_formula(2), chain_algebra(3)).valid());
  EXPECT_TRUE(is_valid(antichain_formula(3), bn(2)).valid());
  EXPECT_FALSE(is_valid(antichain_formula(3), bn(3)).valid());
  EXPECT_EQ(antichain_formula(4).variables().size(), 4U);
  EXPECT_THROW(antichain_formula(1), input_error);
  EXPECT_THROW(antichain_formula(7), input_error);
}

TEST(AntichainFormula, MatchesWidth) {
  ValidityOptions opt;
  opt.budget = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto a = from_poset(p);
      const auto width = max_antichain_size(*a);
      const bool irreducible_bottom = a->irreducibles().is_meet_irreducible(a->bottom());
      for (std::size_t k = 2; k <= 6; ++k) {
        if (!irreducible_bottom && width >= k) continue;  // only width < k => valid is claimed
        if (valuation_count(a->size(), k) > 50'000'000) continue;
        const bool valid = is_valid(antichain_formula(k), a, opt).valid();
        EXPECT_EQ(valid, width < k) << p.name() << " k = " << k;
      }
    }
}

TEST(Classical, Examples) {
  EXPECT_TRUE(classical_tautology(axiom("lem")));
  EXPECT_TRUE(classical_tautology(axiom("jan")));
  EXPECT_FALSE(classical_tautology(parse("p")));
  EXPECT_FALSE(classical_tautology(axiom("sc_paper")));
  EXPECT_TRUE(classical_tautology(axiom("sc_standard")));
}

TEST(Classical, FiniteAlgebrasValidateOnlyTautologies) {
  std::vector<Formula> formulas;
  for (const auto& t : corpus::formulas()) formulas.push_back(parse(t));
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto a = from_poset(p);
      for (const auto& f : formulas)
        if (is_valid(f, a).valid()) {
          EXPECT_TRUE(classical_tautology(f)) << render(f) << " " << p.name();
        }
    }
}

TEST(LmMember, Linearity) {
  const auto rep = lm_member(axiom("lin"), 2);
  ASSERT_EQ(rep.levels.size(), 2U);
  EXPECT_TRUE(rep.levels[0].report->valid());
  const auto& r2 = *rep.levels[1].report;
  ASSERT_FALSE(r2.valid());
  EXPECT_EQ(bn(2)->label(r2.countermodel->assignment.at("p")), "{0}");
  EXPECT_EQ(bn(2)->label(r2.countermodel->assignment.at("q")), "{1}");
  EXPECT_FALSE(rep.member_up_to_level());
}

TEST(LmMember, KpAndIdentity) {
  EXPECT_TRUE(lm_member(axiom("kp"), 3).member_up_to_level());
  EXPECT_TRUE(lm_member(parse("p -> p"), 4).member_up_to_level());
  EXPECT_THROW(lm_member(parse("p"), 6), input_error);
}

TEST(LmMember, LevelFiveOnlyForOneVariable) {
  const auto rep = lm_member(axiom("lin"), 5);
  EXPECT_FALSE(rep.levels[4].report.has_value());
  EXPECT_FALSE(rep.levels[4].error.empty());
}

TEST(CountermodelSearch, WeakExcludedMiddleNeedsTheFork) {
  const auto s = countermodel_search(axiom("jan"), 3);
  ASSERT_TRUE(s.found.has_value());
  EXPECT_TRUE(are_isomorphic(s.found->poset, support::fork()));
  const auto& alg = *s.found->algebra;
  const auto pv = alg.opens()[s.found->report.countermodel->assignment.at("p")];
  EXPECT_EQ(std::popcount(pv), 1);
  EXPECT_NE(pv & s.found->poset.maximal_elements(), 0U);
}

TEST(CountermodelSearch, ExcludedMiddleNeedsTheTwoChain) {
  const auto s = countermodel_search(axiom("lem"), 2);
  ASSERT_TRUE(s.found.has_value());
  EXPECT_TRUE(are_isomorphic(s.found->poset, Poset::chain(2)));
  const auto& alg = *s.found->algebra;
  const auto p = s.found->report.countermodel->assignment.at("p");
  EXPECT_NE(p, alg.bottom());
  EXPECT_NE(p, alg.top());
  EXPECT_EQ(s.posets_examined, 3U);
}

TEST(CountermodelSearch, IdentityHasNone) {
  const auto s = countermodel_search(parse("p -> p"), 7);
  EXPECT_FALSE(s.found.has_value());
  EXPECT_EQ(s.posets_examined, 1U + 2 + 5 + 16 + 63 + 318 + 2045);
  EXPECT_THROW(countermodel_search(parse("p"), 8), input_error);
}

TEST(TheoryCompare, Examples) {
  const auto sep = theory_compare(bn(1), bn(2), {axiom("lin")});
  EXPECT_FALSE(sep.first_in_second);
  EXPECT_TRUE(sep.second_in_first);
  ASSERT_EQ(sep.only_first.size(), 1U);
  EXPECT_EQ(sep.only_first[0], axiom("lin"));

  std::vector<Formula> corpus;
  for (const auto& e : axiom_catalogue) corpus.push_back(axiom(e.name));
  const auto same = theory_compare(bn(2), bn(2), corpus);
  EXPECT_TRUE(same.first_in_second && same.second_in_first);

  const auto t = theory_compare(bn(2), bn(3), corpus);
  ASSERT_EQ(t.rows.size(), 6U);
  const std::vector<bool> expected{true, false, true, false, false, false};  // catalogue order
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(*t.rows[i].first, expected[i]) << axiom_catalogue[i].name;
    EXPECT_EQ(*t.rows[i].second, expected[i]) << axiom_catalogue[i].name;
  }
}

TEST(TheoryCompare, BudgetErrorsAreExcluded) {
  ValidityOptions opt;
  opt.budget = 100;
  const auto t = theory_compare(bn(3), bn(2), {axiom("kp")}, opt);
  EXPECT_FALSE(t.rows[0].error.empty());
  EXPECT_TRUE(t.first_in_second && t.second_in_first);
}

TEST(KpClass, SmallBounds) {
  for (std::size_t max : {3U, 4U}) {
    const auto rep = kp_class_check(max);
    EXPECT_GT(rep.positive, 0U);
    EXPECT_TRUE(rep.contains_two_element);
    EXPECT_TRUE(rep.contains_three_chain);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.positive + rep.negative, rep.algebras);
  }
  EXPECT_TRUE(all_negations_meet_irreducible(*chain_algebra(2)).ok);
}

TEST(KpClass, UpToFivePoints) {
  const auto rep = kp_class_check(5);
  EXPECT_EQ(rep.algebras, 1U + 2 + 5 + 16 + 63);
  EXPECT_TRUE(rep.positive_failures.empty());
  // KP fails somewhere in the other class, so the split is not vacuous
  EXPECT_GT(rep.negative_kp_invalid, 0U);
}

TEST(Spectrum, Examples) {
  const auto two = one_variable_spectrum(*chain_algebra(2), 4);
  for (const auto& s : two.spectra) EXPECT_EQ(s, (std::vector<elem>{0, 1}));
  const auto three = one_variable_spectrum(*chain_algebra(3), 4);
  EXPECT_EQ(three.spectra[1], (std::vector<elem>{0, 1, 2}));
  const auto b = bn(2);
  const auto s = one_variable_spectrum(*b, 4).spectra[at(*b, "{0}")];
  for (const char* l : {"{0}", "{1}", "{0,1}", "{0,1,01}", "{}"})
    EXPECT_TRUE(std::binary_search(s.begin(), s.end(), at(*b, l))) << l;
  EXPECT_THROW(one_variable_spectrum(*b, 9), input_error);
}

TEST(Fixtures, FrozenVerdictsReproduce) {
  std::ifstream in(std::string(MEDLAT_FIXTURE_DIR) + "/axioms.jsonl");
  ASSERT_TRUE(in.good());
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto expected = json::parse(line);
    const auto alg = resolve_algebra(expected.at("algebra").get<std::string>());
    const auto r = is_valid(parse(expected.at("formula").get<std::string>()), alg);
    EXPECT_EQ(fixture_line(r, *alg), expected) << line;
    ++count;
  }
  EXPECT_EQ(count, corpus::formulas().size() * corpus::algebras().size());
}

TEST(Fixtures, AxiomStatuses) {
  const auto lem = is_valid(axiom("lem"), chain_algebra(3));
  EXPECT_FALSE(lem.valid());
  const auto b2 = bn(2);
  const auto jan = is_valid(axiom("jan"), b2);
  ASSERT_FALSE(jan.valid());
  EXPECT_EQ(b2->label(jan.countermodel->assignment.at("p")), "{0}");
  EXPECT_FALSE(is_valid(axiom("lin"), b2).valid());
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(is_valid(axiom("kp"), bn(n)).valid()) << n;
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_FALSE(is_valid(axiom("sc_paper"), bn(n)).valid()) << n;
    EXPECT_TRUE(is_valid(axiom("sc_standard"), bn(n)).valid()) << n;
  }
}

#pragma once

// Named axioms and the experiments built on validity checking: Medvedev-logic
// levels, countermodel search over small posets, theory comparison, the
// negation-irreducibility class, and one-variable spectra.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"
#include "medlat/formula.hpp"
#include "medlat/parser.hpp"
#include "medlat/poset.hpp"
#include "medlat/validity.hpp"

namespace medlat {

struct AxiomEntry {
  std::string_view name;
  std::string_view text;
};

/// kp: Kreisel-Putnam. sc_paper: Scott's formula with consequent ~~p | p.
/// sc_standard: Scott's formula with consequent ~p | ~~p. jan: weak excluded
/// middle. lin: linearity. lem: excluded middle.
inline constexpr std::array<AxiomEntry, 6> axiom_catalogue{{
    {"kp", "(~p -> q | r) -> (~p -> q) | (~p -> r)"},
    {"sc_paper", "((~~p -> p) -> (~p | p)) -> (~~p | p)"},
    {"sc_standard", "((~~p -> p) -> (p | ~p)) -> (~p | ~~p)"},
    {"jan", "~p | ~~p"},
    {"lin", "(p -> q) | (q -> p)"},
    {"lem", "p | ~p"},
}};

inline Formula axiom(std::string_view name) {
  for (const auto& e : axiom_catalogue)
    if (e.name == name) return parse(e.text);
  std::string known;
  for (const auto& e : axiom_catalogue) known += std::string(known.empty() ? "" : ", ") + std::string(e.name);
  throw input_error("unknown axiom '" + std::string(name) + "'; known: " + known);
}

/// Disjunction over all pairs i < j of (xi -> xj) | (xj -> xi): some two of
/// the k values are comparable.
inline Formula antichain_formula(std::size_t k) {
  if (k < 2 || k > 6) throw input_error("antichain_formula: k must be in 2..6");
  auto x = [&](std::size_t i) { return Formula::var(k == 2 ? std::string(i == 1 ? "p" : "q") : "x" + std::to_string(i)); };
  std::optional<Formula> out;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      auto term = Formula::disj(Formula::implies(x(i), x(j)), Formula::implies(x(j), x(i)));
      out = out ? Formula::disj(*out, term) : term;
    }
  return *out;
}

/// Truth-table check, independent of the algebra machinery.
inline bool classical_tautology(const Formula& f) {
  const auto vars = f.variables();
  if (vars.size() > 20) throw input_error("classical_tautology supports at most 20 variables");
  std::function<bool(const Formula&, std::uint32_t)> value = [&](const Formula& g, std::uint32_t row) -> bool {
    switch (g.kind()) {
      case Connective::var: {
        const auto i = std::lower_bound(vars.begin(), vars.end(), g.name()) - vars.begin();
        return ((row >> i) & 1U) != 0;
      }
      case Connective::truth: return true;
      case Connective::falsity: return false;
      case Connective::conj: return value(g.lhs(), row) && value(g.rhs(), row);
      case Connective::disj: return value(g.lhs(), row) || value(g.rhs(), row);
      case Connective::imp: return !value(g.lhs(), row) || value(g.rhs(), row);
      case Connective::neg: return !value(g.lhs(), row);
    }
    return false;
  };
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << vars.size()); ++row)
    if (!value(f, row)) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct LevelResult {
  std::size_t level = 0;
  std::optional<ValidityReport> report;
  std::string error;  // set when the level could not be decided
};

struct LmReport {
  std::vector<LevelResult> levels;
  /// Valid at every level 1..N.
  bool member_up_to_level() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](const LevelResult& l) { return l.report && l.report->valid(); });
  }
};

/// Validity in B_1 .. B_max_level. B_5 is only attempted for one-variable formulas.
inline LmReport lm_member(const Formula& f, std::size_t max_level, const ValidityOptions& opt = {}) {
  if (max_level == 0 || max_level > 5) throw input_error("lm_member: level must be in 1..5");
  LmReport out;
  for (std::size_t n = 1; n <= max_level; ++n) {
    LevelResult lr{n, std::nullopt, {}};
    try {
      if (n == 5 && f.variables().size() > 1)
        throw resource_error("B_5 is only checked for one-variable formulas");
      lr.report = is_valid(f, bn(n, opt.workers), opt);
    } catch (const resource_error& e) {
      lr.error = e.what();
    }
    out.levels.push_back(std::move(lr));
  }
  return out;
}

struct CountermodelFound {
  Poset poset;
  AlgebraPtr algebra;
  ValidityReport report;
};

struct CountermodelSearch {
  std::optional<CountermodelFound> found;
  std::size_t posets_examined = 0;
  std::size_t bound = 0;
};

/// First refuting B(P) over posets P of 1..max_poset_size elements, in
/// enumeration order. An empty result says nothing about IPC-validity beyond
/// the bound.
inline CountermodelSearch countermodel_search(const Formula& f, std::size_t max_poset_size,
                                              const ValidityOptions& opt = {}) {
  if (max_poset_size == 0 || max_poset_size > 7)
    throw input_error("countermodel_search: max poset size must be in 1..7");
  CountermodelSearch out;
  out.bound = max_poset_size;
  for (std::size_t n = 1; n <= max_poset_size; ++n)
    for (auto& p : enumerate_posets(n)) {
      ++out.posets_examined;
      auto alg = from_poset(p);
      auto rep = is_valid(f, alg, opt);
      if (rep.verdict == Verdict::invalid) {
        out.found = CountermodelFound{std::move(p), std::move(alg), std::move(rep)};
        return out;
      }
    }
  return out;
}

struct TheoryRow {
  Formula formula;
  std::optional<bool> first;
  std::optional<bool> second;
  std::string error;
};

struct TheoryComparison {
  std::vector<TheoryRow> rows;
  bool first_in_second = true;   // Th(A1) n corpus is inside Th(A2) n corpus
  bool second_in_first = true;
  std::vector<Formula> only_first;   // valid in A1, invalid in A2
  std::vector<Formula> only_second;
};

inline TheoryComparison theory_compare(const AlgebraPtr& a1, const AlgebraPtr& a2,
                                       const std::vector<Formula>& corpus,
                                       const ValidityOptions& opt = {}) {
  TheoryComparison out;
  for (const auto& f : corpus) {
    TheoryRow row{f, std::nullopt, std::nullopt, {}};
    try {
      row.first = is_valid(f, a1, opt).valid();
      row.second = is_valid(f, a2, opt).valid();
    } catch (const resource_error& e) {
      row.first.reset();
      row.second.reset();
      row.error = e.what();
    }
    if (row.first && row.second) {
      if (*row.first && !*row.second) {
        out.first_in_second = false;
        out.only_first.push_back(f);
      }
      if (*row.second && !*row.first) {
        out.second_in_first = false;
        out.only_second.push_back(f);
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct KpClassReport {
  std::size_t algebras = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  /// Provenance of positive-class algebras refuting KP; expected to be empty.
  std::vector<std::string> positive_failures;
  std::size_t negative_kp_invalid = 0;
  bool contains_two_element = false;
  bool contains_three_chain = false;
  bool ok() const { return positive_failures.empty(); }
};

/// Splits the algebras of all posets up to the bound by whether every
/// negation is meet-irreducible, and checks KP on both sides.
inline KpClassReport kp_class_check(std::size_t max_poset_size, const ValidityOptions& opt = {}) {
  if (max_poset_size == 0 || max_poset_size > 6)
    throw input_error("kp_class_check: max poset size must be in 1..6");
  const Formula kp = axiom("kp");
  KpClassReport out;
  for (std::size_t n = 1; n <= max_poset_size; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto alg = from_poset(p);
      ++out.algebras;
      const bool positive = all_negations_meet_irreducible(*alg).ok;
      const bool kp_valid = is_valid(kp, alg, opt).valid();
      if (positive) {
        ++out.positive;
        if (!kp_valid) out.positive_failures.push_back(alg->provenance());
        if (alg->size() == 2) out.contains_two_element = true;
        if (alg->size() == 3 && order_width(3, [&](std::size_t x, std::size_t y) {
              return alg->leq(static_cast<elem>(x), static_cast<elem>(y));
            }) == 1)
          out.contains_three_chain = true;
      } else {
        ++out.negative;
        if (!kp_valid) ++out.negative_kp_invalid;
      }
    }
  return out;
}

struct Spectrum {
  /// spectra[p] = distinct values reachable from p, sorted.
  std::vector<std::vector<elem>> spectra;
  std::size_t max_size = 0;
};

/// Values of one-variable formulas: starting from {p}, each round adds the
/// negations and pairwise join, meet and implication of what is known so far.
inline Spectrum one_variable_spectrum(const BrouwerAlgebra& a, std::size_t depth) {
  if (depth > 8) throw input_error("one_variable_spectrum: depth must be at most 8");
  Spectrum out;
  for (std::size_t p = 0; p < a.size(); ++p) {
    std::vector<bool> in(a.size(), false);
    std::vector<elem> cur{static_cast<elem>(p)};
    in[p] = true;
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<elem> next = cur;
      auto add = [&](elem x) {
        if (!in[x]) {
          in[x] = true;
          next.push_back(x);
        }
      };
      for (auto x : cur) {
        add(a.neg(x));
        for (auto y : cur) {
          add(a.join(x, y));
          add(a.meet(x, y));
          add(a.imp(x, y));
        }
      }
      if (next.size() == cur.size()) break;
      cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    out.max_size = std::max(out.max_size, cur.size());
    out.spectra.push_back(std::move(cur));
  }
  return out;
}

}  // namespace medlat

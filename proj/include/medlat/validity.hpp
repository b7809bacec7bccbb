#pragma once

// Evaluating formulas in Brouwer algebras and deciding validity.
//
// Connectives are read as: & -> join (+), | -> meet (x), -> -> imp, ~ -> neg,
// T -> bottom, F -> top. A formula is valid when it evaluates to the
// designated element, the bottom, under every valuation.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"
#include "medlat/formula.hpp"

namespace medlat {

/// Variable name -> element, kept sorted by name.
using Valuation = std::map<std::string, elem>;

/// Plain structural recursion.
inline elem eval(const Formula& f, const BrouwerAlgebra& a, const Valuation& v) {
  switch (f.kind()) {
    case Connective::var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw input_error("variable '" + f.name() + "' is not assigned");
      if (it->second >= a.size()) throw input_error("valuation of '" + f.name() + "' out of range");
      return it->second;
    }
    case Connective::truth: return a.bottom();
    case Connective::falsity: return a.top();
    case Connective::conj: return a.join(eval(f.lhs(), a, v), eval(f.rhs(), a, v));
    case Connective::disj: return a.meet(eval(f.lhs(), a, v), eval(f.rhs(), a, v));
    case Connective::imp: return a.imp(eval(f.lhs(), a, v), eval(f.rhs(), a, v));
    case Connective::neg: return a.neg(eval(f.lhs(), a, v));
  }
  return a.top();
}

/// Postfix program with shared subterms merged. Each instruction records the
/// highest variable position it depends on, so a valuation change at
/// position k only recomputes instructions that read a variable at k or later.
class CompiledFormula {
 public:
  struct Instr {
    Connective op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  explicit CompiledFormula(const Formula& f) : vars_(f.variables()) {
    std::map<std::tuple<Connective, std::uint32_t, std::uint32_t>, std::uint32_t> seen;
    root_ = emit(f, seen);
    recompute_.resize(vars_.size() + 1);
    for (std::size_t k = 0; k <= vars_.size(); ++k)
      for (std::uint32_t i = 0; i < code_.size(); ++i)
        if (level_[i] >= static_cast<int>(k)) recompute_[k].push_back(i);
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t size() const { return code_.size(); }

  /// Scratch state for incremental evaluation.
  class Runner {
   public:
    Runner(const CompiledFormula& cf, const BrouwerAlgebra& alg)
        : cf_(cf), alg_(alg), values_(cf.code_.size(), 0) {}

    /// Recomputes everything that depends on positions >= k and returns the root value.
    elem update(const std::vector<elem>& digits, std::size_t k) {
      const auto& list = k == 0 ? cf_.all_ : cf_.recompute_[k];
      for (auto i : list) {
        const auto& in = cf_.code_[i];
        elem r = 0;
        switch (in.op) {
          case Connective::var: r = digits[in.a]; break;
          case Connective::truth: r = alg_.bottom(); break;
          case Connective::falsity: r = alg_.top(); break;
          case Connective::conj: r = alg_.join(values_[in.a], values_[in.b]); break;
          case Connective::disj: r = alg_.meet(values_[in.a], values_[in.b]); break;
          case Connective::imp: r = alg_.imp(values_[in.a], values_[in.b]); break;
          case Connective::neg: r = alg_.neg(values_[in.a]); break;
        }
        values_[i] = r;
      }
      return values_[cf_.root_];
    }

   private:
    const CompiledFormula& cf_;
    const BrouwerAlgebra& alg_;
    std::vector<elem> values_;
  };

 private:
  std::uint32_t emit(const Formula& f,
                     std::map<std::tuple<Connective, std::uint32_t, std::uint32_t>, std::uint32_t>& seen) {
    Instr in{f.kind()};
    int level = -1;
    if (f.kind() == Connective::var) {
      const auto pos = std::lower_bound(vars_.begin(), vars_.end(), f.name()) - vars_.begin();
      in.a = static_cast<std::uint32_t>(pos);
      level = static_cast<int>(pos);
    } else if (!f.operands().empty()) {
      in.a = emit(f.lhs(), seen);
      level = level_[in.a];
      if (f.binary()) {
        in.b = emit(f.rhs(), seen);
        level = std::max(level, level_[in.b]);
      }
    }
    const auto key = std::make_tuple(in.op, in.a, in.b);
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(code_.size());
    code_.push_back(in);
    level_.push_back(level);
    all_.push_back(id);
    seen.emplace(key, id);
    return id;
  }

  std::vector<std::string> vars_;
  std::vector<Instr> code_;
  std::vector<int> level_;
  std::vector<std::uint32_t> all_;
  std::vector<std::vector<std::uint32_t>> recompute_;
  std::uint32_t root_ = 0;
};

enum class Designation { bottom, top };
enum class Verdict { valid, invalid, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::valid: return "valid";
    case Verdict::invalid: return "invalid";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline constexpr std::uint64_t default_budget = 100'000'000;

/// Evaluation budget, overridable by MEDLAT_BUDGET.
inline std::uint64_t budget_from_env() {
  if (const char* s = std::getenv("MEDLAT_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
    throw input_error(std::string("MEDLAT_BUDGET is not a positive integer: ") + s);
  }
  return default_budget;
}

struct ValidityOptions {
  /// Evaluation steps (valuations x program size) allowed for exhaustive search.
  std::uint64_t budget = budget_from_env();
  unsigned workers = 1;
  /// Strict mode designates the top instead; kept for comparison only.
  Designation designated = Designation::bottom;
  /// Enables random sampling when the exhaustive count is over budget.
  std::optional<std::uint64_t> sample_seed;
  std::uint64_t samples = 1'000'000;
};

struct Countermodel {
  Valuation assignment;
  elem value = 0;
};

struct ValidityReport {
  Formula formula;
  std::string algebra;
  Verdict verdict = Verdict::unknown;
  std::optional<Countermodel> countermodel;
  /// Valuations up to and including the countermodel in canonical order, or
  /// all of them when valid. Independent of the worker count.
  std::uint64_t valuations_checked = 0;
  bool sampled = false;

  bool valid() const { return verdict == Verdict::valid; }
};

/// m^k, saturating.
inline std::uint64_t valuation_count(std::size_t m, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    total *= m;
  }
  return total;
}

namespace detail {

struct LocalHit {
  std::vector<elem> digits;
  elem value = 0;
  std::uint64_t rank = 0;
};

/// Scans every valuation whose leading digit is `first`, in canonical order.
inline std::optional<LocalHit> scan_leading(const CompiledFormula& cf, const BrouwerAlgebra& a,
                                            elem designated, elem first) {
  const std::size_t k = cf.variables().size();
  const auto m = static_cast<elem>(a.size());
  CompiledFormula::Runner run(cf, a);
  std::vector<elem> digits(k, 0);
  digits[0] = first;
  std::uint64_t rank = 0;
  std::size_t changed = 0;
  while (true) {
    const elem v = run.update(digits, changed);
    if (v != designated) return LocalHit{digits, v, rank};
    ++rank;
    std::size_t pos = k;
    while (pos > 1) {
      --pos;
      if (++digits[pos] < m) break;
      digits[pos] = 0;
      if (pos == 1) return std::nullopt;
    }
    if (pos <= 1 && k == 1) return std::nullopt;
    changed = pos;
  }
}

}  // namespace detail

/// Decides validity of `f` in `a`. Exhaustive search returns the first
/// countermodel in canonical order (variables sorted by name, first variable
/// most significant, element indices ascending) whatever the worker count.
inline ValidityReport is_valid(const Formula& f, const AlgebraPtr& a, const ValidityOptions& opt = {}) {
  const CompiledFormula cf(f);
  const std::size_t k = cf.variables().size();
  const std::size_t m = a->size();
  const elem designated = opt.designated == Designation::bottom ? a->bottom() : a->top();
  ValidityReport rep{f, a->provenance(), Verdict::unknown, std::nullopt};
  auto make_cm = [&](const std::vector<elem>& digits, elem value) {
    Countermodel cm;
    for (std::size_t i = 0; i < k; ++i) cm.assignment.emplace(cf.variables()[i], digits[i]);
    cm.value = value;
    return cm;
  };

  if (k == 0) {
    CompiledFormula::Runner run(cf, *a);
    const elem v = run.update({}, 0);
    rep.valuations_checked = 1;
    rep.verdict = v == designated ? Verdict::valid : Verdict::invalid;
    if (v != designated) rep.countermodel = make_cm({}, v);
    return rep;
  }

  const std::uint64_t total = valuation_count(m, k);
  const std::uint64_t steps =
      total > opt.budget ? std::numeric_limits<std::uint64_t>::max() : total * cf.size();
  if (steps > opt.budget) {
    if (!opt.sample_seed)
      throw resource_error("exhaustive check needs " + std::to_string(total) + " valuations (" +
                           std::to_string(m) + "^" + std::to_string(k) + ") x " +
                           std::to_string(cf.size()) + " steps, over budget " +
                           std::to_string(opt.budget) + "; enable sampling with a seed");
    std::mt19937_64 rng(*opt.sample_seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    CompiledFormula::Runner run(cf, *a);
    std::vector<elem> digits(k);
    rep.sampled = true;
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      for (auto& d : digits) d = static_cast<elem>(pick(rng));
      const elem v = run.update(digits, 0);
      if (v != designated) {
        rep.verdict = Verdict::invalid;
        rep.countermodel = make_cm(digits, v);
        rep.valuations_checked = s + 1;
        return rep;
      }
    }
    rep.verdict = Verdict::unknown;
    rep.valuations_checked = opt.samples;
    return rep;
  }

  const unsigned workers = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(m)));
  std::atomic<std::size_t> best_first{m};
  std::vector<std::optional<detail::LocalHit>> hits(workers);
  auto work = [&](unsigned w) {
    for (std::size_t d = w; d < m; d += workers) {
      if (d > best_first.load()) return;
      if (auto hit = detail::scan_leading(cf, *a, designated, static_cast<elem>(d))) {
        hits[w] = std::move(hit);
        std::size_t cur = best_first.load();
        while (d < cur && !best_first.compare_exchange_weak(cur, d)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  const detail::LocalHit* best = nullptr;
  for (const auto& h : hits)
    if (h && (!best || h->digits[0] < best->digits[0])) best = &*h;
  if (!best) {
    rep.verdict = Verdict::valid;
    rep.valuations_checked = total;
    return rep;
  }
  rep.verdict = Verdict::invalid;
  rep.countermodel = make_cm(best->digits, best->value);
  rep.valuations_checked = static_cast<std::uint64_t>(best->digits[0]) * valuation_count(m, k - 1) +
                           best->rank + 1;
  return rep;
}

}  // namespace medlat

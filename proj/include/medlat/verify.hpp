#pragma once

// Batch property checks, grouped into named suites for the CLI.

#include <functional>
#include <string>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/freedist.hpp"
#include "medlat/logic.hpp"
#include "medlat/poset.hpp"

namespace medlat {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first failure
};

namespace verify {

/// validate(B(P)) is clean for every poset with up to max_poset elements.
inline CheckResult construction(std::size_t max_poset) {
  CheckResult r;
  r.name = "construction: validate(B(P)), |P| <= " + std::to_string(max_poset);
  for (std::size_t n = 1; n <= max_poset; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto a = from_poset(p);
      ++r.checked;
      auto rep = validate(*a);
      if (!rep.ok() && r.ok) {
        r.ok = false;
        r.witness = a->provenance() + " violates " + rep.violations.front().law;
      }
    }
  return r;
}

/// |F_n| = |Op(2^n - {0})| and F_n -> B_n is a B-isomorphism.
inline CheckResult iso(std::size_t max_n = 4) {
  CheckResult r;
  r.name = "iso: F_n = B_n for n <= " + std::to_string(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    ++r.checked;
    const auto free_count = free_enumerate(n).size();
    const auto open_count = up_set_masks(powerset_poset(n), 8000).size();
    const auto rep = iso_to_bn(n);
    if (r.ok && (free_count != open_count || !rep.ok())) {
      r.ok = false;
      r.witness = "n = " + std::to_string(n) + ": |F_n| = " + std::to_string(free_count) +
                  ", |B_n| = " + std::to_string(open_count) +
                  (rep.bijective ? "" : ", not bijective") +
                  (rep.hom.ok ? "" : ", fails " + rep.hom.operation);
    }
  }
  return r;
}

/// free_imp agrees with the residuation scan in B_n on every pair.
inline CheckResult arrow(std::size_t max_n = 4) {
  CheckResult r;
  r.name = "arrow: free_imp vs residuation in B_n, n <= " + std::to_string(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& fa = free_algebra(n);
    const auto iso = iso_to_bn(n);
    const auto& b = *iso.map.target;
    for (std::size_t i = 0; i < fa.elements.size(); ++i)
      for (std::size_t j = 0; j < fa.elements.size(); ++j) {
        ++r.checked;
        const auto lhs = fa.index_of(free_imp(fa.elements[i], fa.elements[j]));
        const auto scan = residuation_min_scan(b, iso.map(static_cast<elem>(i)), iso.map(static_cast<elem>(j)));
        if (r.ok && (!scan || iso.map(lhs) != *scan)) {
          r.ok = false;
          r.witness = "n = " + std::to_string(n) + ": " + render(fa.elements[i]) + " -> " +
                      render(fa.elements[j]);
        }
      }
  }
  return r;
}

/// factor(A, a) is isomorphic to interval(A, bottom, a).
inline CheckResult factor(std::size_t max_poset) {
  CheckResult r;
  r.name = "factor: L/a = [0,a], |P| <= " + std::to_string(max_poset);
  for (std::size_t n = 1; n <= max_poset; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto a = from_poset(p);
      for (std::size_t x = 0; x < a->size(); ++x) {
        ++r.checked;
        auto f = factor_by_principal_filter(a, static_cast<elem>(x));
        if (r.ok && !f.iso_to_interval) {
          r.ok = false;
          r.witness = a->provenance() + " at " + a->label(static_cast<elem>(x));
        }
      }
    }
  return r;
}

/// u |-> u + a is a surjective B-homomorphism [0,c] -> [a, c+a] in B_n.
inline CheckResult hom(std::size_t n = 3) {
  CheckResult r;
  r.name = "hom: plus_a_map in B_" + std::to_string(n);
  auto b = bn(n);
  for (std::size_t a = 0; a < b->size(); ++a)
    for (std::size_t c = 0; c < b->size(); ++c) {
      ++r.checked;
      auto f = plus_a_map(b, static_cast<elem>(a), static_cast<elem>(c));
      auto h = is_b_homomorphism(f.map);
      if (r.ok && (!h.ok || !f.surjective)) {
        r.ok = false;
        r.witness = "a = " + b->label(static_cast<elem>(a)) + ", c = " + b->label(static_cast<elem>(c)) +
                    (h.ok ? ", not surjective" : ", fails " + h.operation);
      }
    }
  return r;
}

/// KP holds in every algebra whose negations are all meet-irreducible.
inline CheckResult kp(std::size_t max_poset) {
  CheckResult r;
  r.name = "kp: negation-irreducible algebras validate KP, |P| <= " + std::to_string(max_poset);
  const auto rep = kp_class_check(max_poset);
  r.checked = rep.algebras;
  r.ok = rep.ok();
  if (!r.ok) r.witness = rep.positive_failures.front();
  return r;
}

/// Generator negations and independence in F_n.
inline CheckResult free_identities(std::size_t max_n = 4) {
  CheckResult r;
  r.name = "free: generator negations and independence, n <= " + std::to_string(max_n);
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& row : generator_negations(n)) {
      ++r.checked;
      if (r.ok && (!row.neg_is_join_of_others || !row.double_negation_fixed)) {
        r.ok = false;
        r.witness = "n = " + std::to_string(n) + ", ~a" + std::to_string(row.index) + " = " + render(row.neg);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
        if ((subset >> i) & 1U) continue;
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
          if ((subset >> j) & 1U) others.push_back(j);
        ++r.checked;
        if (r.ok && independence_check(n, i, others)) {
          r.ok = false;
          r.witness = "n = " + std::to_string(n) + ": a" + std::to_string(i) + " below a join of others";
        }
      }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"iso", "arrow", "factor", "hom", "kp", "free", "all"};
  return names;
}

/// Runs a named suite; max_poset bounds the poset-enumeration checks.
inline std::vector<CheckResult> run_suite(const std::string& suite, std::size_t max_poset) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all) out.push_back(construction(max_poset));
  if (all || suite == "iso") out.push_back(iso());
  if (all || suite == "arrow") out.push_back(arrow());
  if (all || suite == "factor") out.push_back(factor(std::min<std::size_t>(max_poset, 5)));
  if (all || suite == "hom") out.push_back(hom());
  if (all || suite == "kp") out.push_back(kp(std::min<std::size_t>(max_poset, 6)));
  if (all || suite == "free") out.push_back(free_identities());
  if (out.empty()) {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw input_error("unknown verify suite '" + suite + "'; known:" + known);
  }
  return out;
}

}  // namespace verify
}  // namespace medlat

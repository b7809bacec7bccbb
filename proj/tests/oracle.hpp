#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the library's algebra code: orders are stored as boolean matrices,
// up-sets as plain element lists, and implication is found by scanning.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "medlat/formula.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline bool is_partial_order(const Matrix& le) {
  const std::size_t n = le.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!le[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) return false;
    }
  }
  return true;
}

/// Posets on n labelled points, up to isomorphism, by trying every relation
/// and every permutation.
inline std::size_t count_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  std::vector<std::size_t> perm(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag.size()); ++bits) {
    Matrix le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t e = 0; e < offdiag.size(); ++e)
      if ((bits >> e) & 1U) le[offdiag[e].first][offdiag[e].second] = true;
    if (!is_partial_order(le)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> code;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) code.push_back(le[perm[i]][perm[j]]);
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

/// Subsets of {0..n-1} closed upward, as sorted element lists in order of
/// their characteristic number.
inline std::vector<std::vector<std::size_t>> up_sets(const Matrix& le) {
  const std::size_t n = le.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      for (std::size_t y = 0; y < n && closed; ++y)
        if (((s >> x) & 1U) && le[x][y] && !((s >> y) & 1U)) closed = false;
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if ((s >> x) & 1U) members.push_back(x);
    out.push_back(std::move(members));
  }
  return out;
}

/// Largest set of pairwise incomparable elements, over all subsets.
inline std::size_t max_antichain(const Matrix& le) {
  const std::size_t n = le.size();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool anti = true;
    for (std::size_t x = 0; x < n && anti; ++x)
      for (std::size_t y = x + 1; y < n && anti; ++y)
        if (((s >> x) & 1U) && ((s >> y) & 1U) && (le[x][y] || le[y][x])) anti = false;
    if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

/// A finite lattice with residuated implication found by scanning.
struct Algebra {
  std::size_t size = 0;
  Matrix le;
  std::vector<std::vector<std::size_t>> join, meet, imp;
  std::size_t bottom = 0, top = 0;
  std::vector<std::string> labels;
};

/// x -> y: the least c with y <= x + c.
inline std::size_t scan_imp(const Algebra& a, std::size_t x, std::size_t y) {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < a.size; ++c)
    if (a.le[y][a.join[x][c]] && (!best || a.le[c][*best])) best = c;
  return *best;
}

inline void fill_imp(Algebra& a) {
  a.imp.assign(a.size, std::vector<std::size_t>(a.size));
  for (std::size_t x = 0; x < a.size; ++x)
    for (std::size_t y = 0; y < a.size; ++y) a.imp[x][y] = scan_imp(a, x, y);
}

/// Up-sets of the order ordered by reverse inclusion: join is intersection,
/// meet is union.
inline Algebra from_order(const Matrix& le, const std::vector<std::string>& point_labels) {
  const auto opens = up_sets(le);
  Algebra a;
  a.size = opens.size();
  std::vector<std::set<std::size_t>> sets;
  for (const auto& o : opens) sets.emplace_back(o.begin(), o.end());
  auto index = [&](const std::set<std::size_t>& s) {
    return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), s) - sets.begin());
  };
  a.le.assign(a.size, std::vector<bool>(a.size));
  a.join.assign(a.size, std::vector<std::size_t>(a.size));
  a.meet.assign(a.size, std::vector<std::size_t>(a.size));
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t j = 0; j < a.size; ++j) {
      a.le[i][j] = std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end());
      std::set<std::size_t> inter, uni;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::inserter(inter, inter.end()));
      std::set_union(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                     std::inserter(uni, uni.end()));
      a.join[i][j] = index(inter);
      a.meet[i][j] = index(uni);
    }
  for (std::size_t i = 0; i < a.size; ++i) {
    if (sets[i].empty()) a.top = i;
    if (sets[i].size() == le.size()) a.bottom = i;
    std::string label = "{";
    for (auto x : sets[i]) label += (label.size() > 1 ? "," : "") + point_labels[x];
    a.labels.push_back(label + "}");
  }
  fill_imp(a);
  return a;
}

/// Nonempty subsets of {0..n-1} ordered by reverse inclusion; point k is the
/// subset with characteristic number k + 1.
inline std::pair<Matrix, std::vector<std::string>> powerset_order(std::size_t n) {
  const std::size_t count = (std::size_t{1} << n) - 1;
  Matrix le(count, std::vector<bool>(count));
  std::vector<std::string> labels(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) le[i][j] = ((j + 1) & ~(i + 1)) == 0;
    for (std::size_t b = 0; b < n; ++b)
      if (((i + 1) >> b) & 1U) labels[i] += std::to_string(b);
  }
  return {le, labels};
}

inline Algebra bn(std::size_t n) {
  auto [le, labels] = powerset_order(n);
  return from_order(le, labels);
}

inline Algebra chain(std::size_t m) {
  Algebra a;
  a.size = m;
  a.le.assign(m, std::vector<bool>(m));
  a.join.assign(m, std::vector<std::size_t>(m));
  a.meet.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    a.labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) {
      a.le[i][j] = i <= j;
      a.join[i][j] = std::max(i, j);
      a.meet[i][j] = std::min(i, j);
    }
  }
  a.bottom = 0;
  a.top = m - 1;
  fill_imp(a);
  return a;
}

using Assignment = std::map<std::string, std::size_t>;

inline std::size_t eval(const medlat::Formula& f, const Algebra& a, const Assignment& v) {
  using medlat::Connective;
  switch (f.kind()) {
    case Connective::var: return v.at(f.name());
    case Connective::truth: return a.bottom;
    case Connective::falsity: return a.top;
    case Connective::conj: return a.join[eval(f.lhs(), a, v)][eval(f.rhs(), a, v)];
    case Connective::disj: return a.meet[eval(f.lhs(), a, v)][eval(f.rhs(), a, v)];
    case Connective::imp: return a.imp[eval(f.lhs(), a, v)][eval(f.rhs(), a, v)];
    case Connective::neg: return a.imp[eval(f.lhs(), a, v)][a.top];
  }
  return a.top;
}

struct Verdict {
  bool valid = true;
  Assignment countermodel;
  std::size_t value = 0;
};

/// First valuation (variables sorted, first most significant) not sent to bottom.
inline Verdict check(const medlat::Formula& f, const Algebra& a) {
  const auto vars = f.variables();
  std::vector<std::size_t> digits(vars.size(), 0);
  while (true) {
    Assignment v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = digits[i];
    const auto value = eval(f, a, v);
    if (value != a.bottom) return {false, v, value};
    std::size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < a.size) break;
      digits[pos] = 0;
      if (pos == 0) return {};
    }
    if (vars.empty()) return {};
  }
}

/// Classical truth table.
inline bool tautology(const medlat::Formula& f) {
  using medlat::Connective;
  const auto vars = f.variables();
  std::function<bool(const medlat::Formula&, std::uint32_t)> val = [&](const medlat::Formula& g,
                                                                       std::uint32_t row) -> bool {
    switch (g.kind()) {
      case Connective::var:
        return (row >> (std::find(vars.begin(), vars.end(), g.name()) - vars.begin())) & 1U;
      case Connective::truth: return true;
      case Connective::falsity: return false;
      case Connective::conj: return val(g.lhs(), row) && val(g.rhs(), row);
      case Connective::disj: return val(g.lhs(), row) || val(g.rhs(), row);
      case Connective::imp: return !val(g.lhs(), row) || val(g.rhs(), row);
      case Connective::neg: return !val(g.lhs(), row);
    }
    return false;
  };
  for (std::uint32_t row = 0; row < (1U << vars.size()); ++row)
    if (!val(f, row)) return false;
  return true;
}

}  // namespace oracle

#pragma once

// Finite Brouwer algebras stored as full operation tables.
//
// Conventions: `join` is the lattice join (+), `meet` is the lattice meet (x),
// `imp(a, b)` is the least c with a + c >= b, and `bottom` is the designated
// truth value. For algebras built from a poset the carrier is the set of
// up-sets ordered by reverse inclusion, so join is intersection and meet is
// union.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "medlat/error.hpp"
#include "medlat/poset.hpp"

namespace medlat {

/// Index of an algebra element.
using elem = std::uint16_t;

inline constexpr std::size_t max_algebra_elements = 65535;

/// Raw operation tables, row-major m x m.
struct AlgebraTables {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;
  std::vector<elem> join;
  std::vector<elem> meet;
  std::vector<elem> imp;
  elem bottom = 0;
  elem top = 0;
};

namespace detail {

/// Runs fn(row) for every row in [0, rows), strided over `workers` threads.
template <class Fn>
void parallel_rows(std::size_t rows, unsigned workers, Fn&& fn) {
  if (workers <= 1 || rows < 64) {
    for (std::size_t r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) fn(r);
    });
}

/// Open-addressing map from up-set masks to element indices.
class MaskIndex {
 public:
  explicit MaskIndex(std::span<const mask_t> keys) {
    std::size_t cap = 16;
    while (cap < keys.size() * 2) cap <<= 1;
    slots_.assign(cap, {~mask_t{0}, 0});
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(cap));
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::size_t h = slot(keys[i]);
      while (slots_[h].first != ~mask_t{0}) h = (h + 1) & (slots_.size() - 1);
      slots_[h] = {keys[i], static_cast<elem>(i)};
    }
  }

  std::optional<elem> find(mask_t key) const {
    std::size_t h = slot(key);
    while (slots_[h].first != ~mask_t{0}) {
      if (slots_[h].first == key) return slots_[h].second;
      h = (h + 1) & (slots_.size() - 1);
    }
    return std::nullopt;
  }

  elem at(mask_t key) const {
    auto r = find(key);
    if (!r) throw precondition_error("mask is not an element of the algebra");
    return *r;
  }

 private:
  std::size_t slot(mask_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_);
  }
  std::vector<std::pair<mask_t, elem>> slots_;
  unsigned shift_ = 60;
};

}  // namespace detail

class BrouwerAlgebra;
using AlgebraPtr = std::shared_ptr<const BrouwerAlgebra>;

/// Irreducible elements under the strict definitions: x is meet-irreducible
/// iff no b, c strictly above x have b x c = x, dually for joins. Under these
/// rules the top is always meet-irreducible and the bottom always
/// join-irreducible; the *_proper views drop them for the empty-join and
/// empty-meet convention.
struct Irreducibles {
  std::vector<elem> meet;
  std::vector<elem> join;
  elem bottom = 0;
  elem top = 0;

  bool is_meet_irreducible(elem x) const { return std::binary_search(meet.begin(), meet.end(), x); }
  bool is_join_irreducible(elem x) const { return std::binary_search(join.begin(), join.end(), x); }

  std::vector<elem> join_proper() const {
    std::vector<elem> out;
    for (auto x : join)
      if (x != bottom) out.push_back(x);
    return out;
  }
  std::vector<elem> meet_proper() const {
    std::vector<elem> out;
    for (auto x : meet)
      if (x != top) out.push_back(x);
    return out;
  }
};

class BrouwerAlgebra {
 public:
  /// Checks table shape only; use validate() for the algebra laws.
  BrouwerAlgebra(AlgebraTables t, std::string provenance, std::vector<std::string> labels = {})
      : t_(std::move(t)), provenance_(std::move(provenance)), labels_(std::move(labels)) {
    const std::size_t m = t_.size;
    if (m == 0 || m > max_algebra_elements)
      throw input_error("algebra size must be in 1.." + std::to_string(max_algebra_elements));
    const std::size_t sq = m * m;
    if (t_.leq.size() != sq || t_.join.size() != sq || t_.meet.size() != sq || t_.imp.size() != sq)
      throw input_error("algebra tables must be " + std::to_string(m) + "x" + std::to_string(m));
    if (t_.bottom >= m || t_.top >= m) throw input_error("bottom/top index out of range");
    for (const auto* tab : {&t_.join, &t_.meet, &t_.imp})
      for (auto v : *tab)
        if (v >= m) throw input_error("operation table entry " + std::to_string(v) + " out of range");
    if (labels_.empty())
      for (std::size_t i = 0; i < m; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != m) throw input_error("label count does not match algebra size");
  }

  std::size_t size() const { return t_.size; }
  elem bottom() const { return t_.bottom; }
  elem top() const { return t_.top; }

  bool leq(elem a, elem b) const { return t_.leq[idx(a, b)] != 0; }
  bool less(elem a, elem b) const { return a != b && leq(a, b); }
  elem join(elem a, elem b) const { return t_.join[idx(a, b)]; }
  elem meet(elem a, elem b) const { return t_.meet[idx(a, b)]; }
  elem imp(elem a, elem b) const { return t_.imp[idx(a, b)]; }
  elem neg(elem a) const { return imp(a, t_.top); }

  const AlgebraTables& tables() const { return t_; }
  const std::string& provenance() const { return provenance_; }
  const std::string& label(elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Elements this algebra was carved from, when it is an interval of
  /// another algebra (index in the parent per local element).
  const std::vector<elem>& parent_carrier() const { return parent_; }

  /// Set when the algebra is a one-element collapse.
  bool degenerate() const { return t_.size == 1; }

  /// Poset the algebra was built from, if any; element i is the up-set opens()[i].
  const std::shared_ptr<const Poset>& poset() const { return poset_; }
  const std::vector<mask_t>& opens() const { return opens_; }

  std::optional<elem> element_of_open(mask_t open) const {
    auto it = std::lower_bound(opens_.begin(), opens_.end(), open);
    if (it == opens_.end() || *it != open) return std::nullopt;
    return static_cast<elem>(it - opens_.begin());
  }

  /// Computed once per algebra.
  const Irreducibles& irreducibles() const {
    std::call_once(irr_once_->flag, [this] { irr_once_->value = compute_irreducibles(); });
    return irr_once_->value;
  }

  /// Distributivity over all triples, computed once.
  bool distributive() const {
    std::call_once(dist_once_->flag, [this] { dist_once_->value = compute_distributive(); });
    return dist_once_->value;
  }

  std::optional<elem> find_label(const std::string& text) const {
    std::optional<elem> hit;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == text) {
        if (hit) throw input_error("label '" + text + "' names several elements");
        hit = static_cast<elem>(i);
      }
    return hit;
  }

 private:
  friend AlgebraPtr from_poset(std::shared_ptr<const Poset>, std::size_t, unsigned, std::string);
  friend AlgebraPtr interval(const AlgebraPtr&, elem, elem);

  std::size_t idx(elem a, elem b) const { return static_cast<std::size_t>(a) * t_.size + b; }

  Irreducibles compute_irreducibles() const {
    Irreducibles r;
    r.bottom = t_.bottom;
    r.top = t_.top;
    const auto m = static_cast<elem>(t_.size);
    for (elem x = 0; x < m; ++x) {
      // x is meet-reducible iff the meet of everything strictly above it is x
      elem above = t_.top;
      bool any_above = false;
      elem below = t_.bottom;
      bool any_below = false;
      for (elem y = 0; y < m; ++y) {
        if (less(x, y)) {
          above = meet(above, y);
          any_above = true;
        } else if (less(y, x)) {
          below = join(below, y);
          any_below = true;
        }
      }
      if (!any_above || above != x) r.meet.push_back(x);
      if (!any_below || below != x) r.join.push_back(x);
    }
    return r;
  }

  bool compute_distributive() const {
    const auto m = static_cast<elem>(t_.size);
    for (elem a = 0; a < m; ++a)
      for (elem b = 0; b < m; ++b)
        for (elem c = 0; c < m; ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
  }

  template <class T>
  struct Once {
    std::once_flag flag;
    T value{};
  };

  AlgebraTables t_;
  std::string provenance_;
  std::vector<std::string> labels_;
  std::vector<elem> parent_;
  std::shared_ptr<const Poset> poset_;
  std::vector<mask_t> opens_;
  std::shared_ptr<Once<Irreducibles>> irr_once_ = std::make_shared<Once<Irreducibles>>();
  std::shared_ptr<Once<bool>> dist_once_ = std::make_shared<Once<bool>>();
};

/// Total map between two algebras' carriers.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<elem> image;

  elem operator()(elem x) const { return image[x]; }
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string law;
  std::array<elem, 3> witness{};
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(const std::string& law) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.law == law; });
  }
};

/// Checks every Brouwer-algebra law and records the first witness per law.
inline ValidationReport validate(const BrouwerAlgebra& a) {
  ValidationReport rep;
  const auto m = static_cast<elem>(a.size());
  auto fail = [&](const char* law, elem x, elem y, elem z) {
    if (!rep.violates(law)) rep.violations.push_back({law, {x, y, z}});
  };
  for (elem x = 0; x < m; ++x) {
    if (!a.leq(x, x)) fail("reflexive", x, x, x);
    if (!a.leq(a.bottom(), x) || !a.leq(x, a.top())) fail("bounds", x, a.bottom(), a.top());
    for (elem y = 0; y < m; ++y) {
      if (x != y && a.leq(x, y) && a.leq(y, x)) fail("antisymmetric", x, y, x);
      const elem j = a.join(x, y), mt = a.meet(x, y), i = a.imp(x, y);
      if (!a.leq(x, j) || !a.leq(y, j)) fail("join_upper_bound", x, y, j);
      if (!a.leq(mt, x) || !a.leq(mt, y)) fail("meet_lower_bound", x, y, mt);
      if (!a.leq(y, a.join(x, i))) fail("residuation", x, y, i);
      for (elem z = 0; z < m; ++z) {
        if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) fail("transitive", x, y, z);
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) fail("join_least", x, y, z);
        if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, mt)) fail("meet_greatest", x, y, z);
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          fail("distributive", x, y, z);
        if (a.leq(y, a.join(x, z)) && !a.leq(i, z)) fail("residuation_minimal", x, y, z);
      }
    }
  }
  return rep;
}

/// a -> b by scanning for the least c with a + c >= b. Independent of the
/// stored implication table.
inline std::optional<elem> residuation_min_scan(const BrouwerAlgebra& a, elem x, elem y) {
  std::vector<elem> candidates;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a.leq(y, a.join(x, static_cast<elem>(c)))) candidates.push_back(static_cast<elem>(c));
  for (auto c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](elem d) { return a.leq(c, d); }))
      return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

inline std::string render_open(const Poset& p, mask_t open) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((open >> x) & 1U) {
      if (!first) out += ",";
      out += p.label(x);
      first = false;
    }
  return out + "}";
}

/// B(P): the up-sets of P ordered by reverse inclusion.
inline AlgebraPtr from_poset(std::shared_ptr<const Poset> p, std::size_t max_elements = 8000,
                             unsigned workers = 1, std::string provenance = {}) {
  auto opens = up_set_masks(*p, max_elements);
  const std::size_t m = opens.size();
  if (m > max_algebra_elements) throw resource_error("algebra exceeds element index range");
  const detail::MaskIndex index(opens);
  AlgebraTables t;
  t.size = m;
  t.leq.assign(m * m, 0);
  t.join.assign(m * m, 0);
  t.meet.assign(m * m, 0);
  t.imp.assign(m * m, 0);
  t.bottom = index.at(p->all());
  t.top = index.at(0);
  detail::parallel_rows(m, workers, [&](std::size_t i) {
    const mask_t u = opens[i];
    for (std::size_t j = 0; j < m; ++j) {
      const mask_t v = opens[j];
      const std::size_t k = i * m + j;
      t.leq[k] = (v & ~u) == 0 ? 1 : 0;
      t.join[k] = index.at(u & v);
      t.meet[k] = index.at(u | v);
      // U -> V = {x : [x) n U is inside V}: everything not below a point of U \ V
      t.imp[k] = index.at(p->all() & ~down_closure_mask(*p, u & ~v));
    }
  });
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto o : opens) labels.push_back(render_open(*p, o));
  if (provenance.empty()) provenance = p->name().empty() ? "poset" : "poset:" + p->name();
  auto a = std::make_shared<BrouwerAlgebra>(std::move(t), std::move(provenance), std::move(labels));
  a->poset_ = std::move(p);
  a->opens_ = std::move(opens);
  return a;
}

inline AlgebraPtr from_poset(const Poset& p, std::size_t max_elements = 8000, unsigned workers = 1) {
  return from_poset(std::make_shared<const Poset>(p), max_elements, workers);
}

/// The m-element chain 0 < 1 < ... < m-1 with bottom 0.
inline AlgebraPtr chain_algebra(std::size_t m) {
  if (m == 0 || m > 4096) throw input_error("chain size must be in 1..4096");
  AlgebraTables t;
  t.size = m;
  t.leq.assign(m * m, 0);
  t.join.assign(m * m, 0);
  t.meet.assign(m * m, 0);
  t.imp.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i * m + j;
      t.leq[k] = i <= j;
      t.join[k] = static_cast<elem>(std::max(i, j));
      t.meet[k] = static_cast<elem>(std::min(i, j));
      t.imp[k] = static_cast<elem>(i >= j ? 0 : j);
    }
  t.bottom = 0;
  t.top = static_cast<elem>(m - 1);
  return std::make_shared<BrouwerAlgebra>(std::move(t), "chain:" + std::to_string(m));
}

/// Cached B_n = B(powerset_poset(n)).
inline AlgebraPtr bn(std::size_t n, unsigned workers = 1, std::size_t cap = 5) {
  if (n == 0 || n > cap)
    throw resource_error("bn: n must be in 1.." + std::to_string(cap) + ", got " + std::to_string(n));
  static std::mutex mu;
  static std::map<std::size_t, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto p = std::make_shared<const Poset>(powerset_poset(n, cap));
  auto built = from_poset(p, 8000, workers, "bn:" + std::to_string(n));
  cache.emplace(n, built);
  return built;
}

inline elem neg(const BrouwerAlgebra& a, elem x) {
  if (x >= a.size()) throw input_error("element out of range");
  return a.neg(x);
}

/// The interval [lo, hi] with implication (u -> v) + lo.
inline AlgebraPtr interval(const AlgebraPtr& a, elem lo, elem hi) {
  if (lo >= a->size() || hi >= a->size()) throw input_error("interval bound out of range");
  if (!a->leq(lo, hi))
    throw input_error("interval: " + a->label(lo) + " is not below " + a->label(hi));
  std::vector<elem> carrier;
  for (std::size_t x = 0; x < a->size(); ++x)
    if (a->leq(lo, static_cast<elem>(x)) && a->leq(static_cast<elem>(x), hi))
      carrier.push_back(static_cast<elem>(x));
  const std::size_t m = carrier.size();
  std::vector<elem> local(a->size(), 0);
  for (std::size_t i = 0; i < m; ++i) local[carrier[i]] = static_cast<elem>(i);
  AlgebraTables t;
  t.size = m;
  t.leq.resize(m * m);
  t.join.resize(m * m);
  t.meet.resize(m * m);
  t.imp.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const elem u = carrier[i], v = carrier[j];
      const std::size_t k = i * m + j;
      t.leq[k] = a->leq(u, v);
      t.join[k] = local[a->join(u, v)];
      t.meet[k] = local[a->meet(u, v)];
      t.imp[k] = local[a->join(a->imp(u, v), lo)];
    }
  t.bottom = local[lo];
  t.top = local[hi];
  std::vector<std::string> labels;
  for (auto x : carrier) labels.push_back(a->label(x));
  auto out = std::make_shared<BrouwerAlgebra>(
      std::move(t), "interval(" + a->provenance() + "," + a->label(lo) + "," + a->label(hi) + ")",
      std::move(labels));
  out->parent_ = std::move(carrier);
  return out;
}

// ---------------------------------------------------------------------------
// Maps

struct HomCheck {
  bool ok = true;
  std::string operation;  // first failing operation, empty when ok
  elem x = 0;
  elem y = 0;
};

/// Whether f preserves bottom, top, join, meet and implication.
inline HomCheck is_b_homomorphism(const AlgebraMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.image.size() != s.size()) throw input_error("map is not total on its source");
  if (f(s.bottom()) != t.bottom()) return {false, "bottom", s.bottom(), s.bottom()};
  if (f(s.top()) != t.top()) return {false, "top", s.top(), s.top()};
  const auto m = static_cast<elem>(s.size());
  for (elem x = 0; x < m; ++x)
    for (elem y = 0; y < m; ++y) {
      if (f(s.join(x, y)) != t.join(f(x), f(y))) return {false, "join", x, y};
      if (f(s.meet(x, y)) != t.meet(f(x), f(y))) return {false, "meet", x, y};
      if (f(s.imp(x, y)) != t.imp(f(x), f(y))) return {false, "imp", x, y};
    }
  return {};
}

inline bool is_surjective(const AlgebraMap& f) {
  std::vector<bool> hit(f.target->size(), false);
  for (auto v : f.image) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

inline bool is_bijective(const AlgebraMap& f) {
  return f.source->size() == f.target->size() && is_surjective(f);
}

struct PlusAMap {
  AlgebraMap map;
  bool surjective = false;
};

/// u |-> u + a from [bottom, c] onto [a, c + a].
inline PlusAMap plus_a_map(const AlgebraPtr& a, elem shift, elem c) {
  if (shift >= a->size() || c >= a->size()) throw input_error("element out of range");
  auto source = interval(a, a->bottom(), c);
  auto target = interval(a, shift, a->join(c, shift));
  std::vector<elem> local(a->size(), 0);
  const auto& tc = target->parent_carrier();
  for (std::size_t i = 0; i < tc.size(); ++i) local[tc[i]] = static_cast<elem>(i);
  AlgebraMap f{source, target, {}};
  for (auto u : source->parent_carrier()) f.image.push_back(local[a->join(u, shift)]);
  return {f, is_surjective(f)};
}

/// A bijective B-homomorphism between the two algebras, if one exists.
/// Distributive lattices are determined by their join-irreducibles, so the
/// search matches those (pruned by up/down counts) and extends by joins.
inline std::optional<AlgebraMap> is_isomorphic(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  const std::size_t m = a1->size();
  if (m != a2->size()) return std::nullopt;
  const auto j1 = a1->irreducibles().join_proper();
  const auto j2 = a2->irreducibles().join_proper();
  if (j1.size() != j2.size()) return std::nullopt;
  auto fingerprint = [](const BrouwerAlgebra& a, elem x) {
    std::size_t below = 0, above = 0;
    for (std::size_t y = 0; y < a.size(); ++y) {
      below += a.leq(static_cast<elem>(y), x);
      above += a.leq(x, static_cast<elem>(y));
    }
    return std::array<std::size_t, 3>{below, above, a.irreducibles().is_meet_irreducible(x) ? 1U : 0U};
  };
  std::vector<std::array<std::size_t, 3>> f1, f2;
  for (auto x : j1) f1.push_back(fingerprint(*a1, x));
  for (auto x : j2) f2.push_back(fingerprint(*a2, x));
  {
    auto s1 = f1, s2 = f2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  const std::size_t k = j1.size();
  std::vector<std::size_t> assign(k);
  std::vector<bool> used(k, false);
  std::optional<AlgebraMap> found;

  auto extend = [&]() -> bool {
    AlgebraMap f{a1, a2, std::vector<elem>(m)};
    for (std::size_t x = 0; x < m; ++x) {
      elem img = a2->bottom();
      for (std::size_t i = 0; i < k; ++i)
        if (a1->leq(j1[i], static_cast<elem>(x))) img = a2->join(img, j2[assign[i]]);
      f.image[x] = img;
    }
    if (!is_bijective(f) || !is_b_homomorphism(f).ok) return false;
    found = std::move(f);
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return extend();
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || f1[i] != f2[c]) continue;
      bool consistent = true;
      for (std::size_t p = 0; p < i && consistent; ++p) {
        consistent = a1->leq(j1[p], j1[i]) == a2->leq(j2[assign[p]], j2[c]) &&
                     a1->leq(j1[i], j1[p]) == a2->leq(j2[c], j2[assign[p]]);
      }
      if (!consistent) continue;
      used[c] = true;
      assign[i] = c;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// ---------------------------------------------------------------------------
// Factors

struct FactorResult {
  AlgebraPtr algebra;
  /// Class index of every element of the original algebra.
  std::vector<elem> quotient;
  bool degenerate = false;
  /// Isomorphism onto the initial segment [bottom, a], found by search.
  std::optional<AlgebraMap> iso_to_interval;
};

/// Quotient by the principal filter generated by `a`: b and c are identified
/// iff b x a = c x a. Join and meet are computed on representatives; the
/// implication is the residual of the quotient order, [b] -> [c] =
/// [(b x a) -> (c x a)], because b -> c itself does not respect the classes.
inline FactorResult factor_by_principal_filter(const AlgebraPtr& alg, elem a) {
  if (a >= alg->size()) throw input_error("element out of range");
  const std::size_t m = alg->size();
  std::vector<elem> cls(m);
  std::vector<elem> rep;  // class -> smallest member
  std::map<elem, elem> by_key;
  for (std::size_t x = 0; x < m; ++x) {
    const elem key = alg->meet(static_cast<elem>(x), a);
    auto [it, fresh] = by_key.emplace(key, static_cast<elem>(rep.size()));
    if (fresh) rep.push_back(static_cast<elem>(x));
    cls[x] = it->second;
  }
  const std::size_t k = rep.size();
  AlgebraTables t;
  t.size = k;
  t.leq.resize(k * k);
  t.join.resize(k * k);
  t.meet.resize(k * k);
  t.imp.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const elem b = rep[i], c = rep[j];
      const std::size_t idx = i * k + j;
      t.leq[idx] = alg->leq(alg->meet(b, a), c);
      t.join[idx] = cls[alg->join(b, c)];
      t.meet[idx] = cls[alg->meet(b, c)];
      t.imp[idx] = cls[alg->imp(alg->meet(b, a), alg->meet(c, a))];
    }
  t.bottom = cls[alg->bottom()];
  t.top = cls[alg->top()];
  std::vector<std::string> labels;
  for (auto r : rep) labels.push_back("[" + alg->label(r) + "]");
  FactorResult out;
  out.algebra = std::make_shared<BrouwerAlgebra>(
      std::move(t), "factor(" + alg->provenance() + "," + alg->label(a) + ")", std::move(labels));
  out.quotient = std::move(cls);
  out.degenerate = k == 1;
  out.iso_to_interval = is_isomorphic(out.algebra, interval(alg, alg->bottom(), a));
  return out;
}

// ---------------------------------------------------------------------------
// Structure

/// The unique antichain of meet-irreducibles whose meet is x: the minimal
/// meet-irreducibles above x.
inline std::vector<elem> meet_irreducible_decomposition(const BrouwerAlgebra& a, elem x) {
  if (x >= a.size()) throw input_error("element out of range");
  if (!a.distributive())
    throw precondition_error("meet_irreducible_decomposition requires a distributive algebra");
  const auto& irr = a.irreducibles();
  std::vector<elem> above;
  for (auto y : irr.meet)
    if (a.leq(x, y)) above.push_back(y);
  std::vector<elem> out;
  for (auto y : above)
    if (std::none_of(above.begin(), above.end(), [&](elem z) { return a.less(z, y); }))
      out.push_back(y);
  return out;
}

/// Minimal poset elements of the open element U; their up-closure is U.
inline std::vector<std::size_t> open_antichain_representation(const BrouwerAlgebra& a, mask_t open) {
  if (!a.poset()) throw precondition_error("algebra was not built from a poset");
  if (!is_up_closed(*a.poset(), open)) throw input_error("set is not open in the poset");
  std::vector<std::size_t> out;
  for (mask_t r = minimal_generators(*a.poset(), open); r != 0; r &= r - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(r)));
  return out;
}

inline std::vector<std::size_t> open_antichain_representation(const BrouwerAlgebra& a, elem u) {
  if (!a.poset()) throw precondition_error("algebra was not built from a poset");
  if (u >= a.size()) throw input_error("element out of range");
  return open_antichain_representation(a, a.opens()[u]);
}

/// Inverse direction: the element whose open set is the up-closure of the antichain.
inline elem open_from_antichain(const BrouwerAlgebra& a, std::span<const std::size_t> antichain) {
  if (!a.poset()) throw precondition_error("algebra was not built from a poset");
  const auto u = up_closure(*a.poset(), antichain);
  return *a.element_of_open(u.members);
}

enum class Ops : unsigned { join = 1, meet = 2, neg = 4, imp = 8, all = 15 };

inline constexpr Ops operator|(Ops a, Ops b) {
  return static_cast<Ops>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
inline constexpr bool has(Ops set, Ops o) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(o)) != 0;
}

/// Closure of seeds together with bottom and top under the chosen operations.
inline std::vector<elem> generated_subalgebra(const BrouwerAlgebra& a, std::span<const elem> seeds,
                                              Ops ops = Ops::all) {
  if (seeds.empty()) throw input_error("generated_subalgebra needs at least one seed");
  std::vector<bool> in(a.size(), false);
  std::vector<elem> members;
  std::vector<elem> work;
  auto add = [&](elem x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  add(a.bottom());
  add(a.top());
  for (auto s : seeds) {
    if (s >= a.size()) throw input_error("seed out of range");
    add(s);
  }
  while (!work.empty()) {
    const elem x = work.back();
    work.pop_back();
    members.push_back(x);
    if (has(ops, Ops::neg)) add(a.neg(x));
    const std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i) {
      const elem y = members[i];
      if (has(ops, Ops::join)) add(a.join(x, y));
      if (has(ops, Ops::meet)) add(a.meet(x, y));
      if (has(ops, Ops::imp)) {
        add(a.imp(x, y));
        add(a.imp(y, x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

struct NegationCheck {
  bool ok = true;
  std::optional<elem> witness;  // x with neg(x) meet-reducible
};

inline NegationCheck all_negations_meet_irreducible(const BrouwerAlgebra& a) {
  const auto& irr = a.irreducibles();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!irr.is_meet_irreducible(a.neg(static_cast<elem>(x))))
      return {false, static_cast<elem>(x)};
  return {};
}

/// Width of the algebra's lattice order.
inline std::size_t max_antichain_size(const BrouwerAlgebra& a) {
  return order_width(a.size(), [&](std::size_t x, std::size_t y) {
    return a.leq(static_cast<elem>(x), static_cast<elem>(y));
  });
}

}  // namespace medlat

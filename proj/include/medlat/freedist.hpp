#pragma once

// F_n: the free distributive lattice on n generators with a new bottom added,
// held in antichain normal form. An element is a join of meets of generator
// subsets; the subsets are pairwise incomparable under inclusion. The empty
// family is the bottom and the family of all singletons is the top.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"

namespace medlat {

/// Nonempty subset of generators, bit i = generator a_i.
using gen_set = std::uint32_t;

inline constexpr std::size_t max_generators = 5;

namespace detail {

/// Lexicographic order on the sorted index lists of two generator sets.
inline bool gen_set_lex_less(gen_set a, gen_set b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline bool subset(gen_set a, gen_set b) { return (a & ~b) == 0; }

}  // namespace detail

class FreeElement {
 public:
  FreeElement() = default;

  /// Normalizes: drops components that contain another component.
  FreeElement(std::size_t n, std::vector<gen_set> family) : n_(n) {
    check_n(n);
    for (auto s : family)
      if (s == 0 || (s >> n) != 0)
        throw input_error("generator subset must be a nonempty subset of 0.." + std::to_string(n - 1));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (auto s : family)
      if (std::none_of(family.begin(), family.end(),
                       [&](gen_set t) { return t != s && detail::subset(t, s); }))
        family_.push_back(s);
    std::sort(family_.begin(), family_.end(), detail::gen_set_lex_less);
  }

  static FreeElement bottom(std::size_t n) { return FreeElement(n, {}); }

  static FreeElement top(std::size_t n) {
    check_n(n);
    std::vector<gen_set> f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(gen_set{1} << i);
    return FreeElement(n, std::move(f));
  }

  static FreeElement generator(std::size_t n, std::size_t i) {
    check_n(n);
    if (i >= n)
      throw input_error("generator index " + std::to_string(i) + " out of range for n = " +
                        std::to_string(n));
    return FreeElement(n, {gen_set{1} << i});
  }

  std::size_t n() const { return n_; }
  const std::vector<gen_set>& family() const { return family_; }

  bool is_bottom() const { return family_.empty(); }
  bool is_top() const { return *this == top(n_); }

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  static void check_n(std::size_t n) {
    if (n == 0 || n > max_generators)
      throw input_error("generator count must be in 1.." + std::to_string(max_generators));
  }

 private:
  std::size_t n_ = 0;
  std::vector<gen_set> family_;
};

namespace detail {
inline void same_n(const FreeElement& a, const FreeElement& b) {
  if (a.n() != b.n())
    throw input_error("free lattice elements over different generator counts (" +
                      std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
}
}  // namespace detail

/// a <= b iff every meet in a lies below some meet in b, i.e. for each
/// component A of a some component B of b satisfies B subset A.
inline bool free_leq(const FreeElement& a, const FreeElement& b) {
  detail::same_n(a, b);
  return std::all_of(a.family().begin(), a.family().end(), [&](gen_set s) {
    return std::any_of(b.family().begin(), b.family().end(),
                       [&](gen_set t) { return detail::subset(t, s); });
  });
}

inline FreeElement free_join(const FreeElement& a, const FreeElement& b) {
  detail::same_n(a, b);
  std::vector<gen_set> f(a.family());
  f.insert(f.end(), b.family().begin(), b.family().end());
  return {a.n(), std::move(f)};
}

inline FreeElement free_meet(const FreeElement& a, const FreeElement& b) {
  detail::same_n(a, b);
  std::vector<gen_set> f;
  for (auto s : a.family())
    for (auto t : b.family()) f.push_back(s | t);
  return {a.n(), std::move(f)};
}

/// a -> b keeps exactly the components of b whose meet is not below a.
inline FreeElement free_imp(const FreeElement& a, const FreeElement& b) {
  detail::same_n(a, b);
  std::vector<gen_set> f;
  for (auto t : b.family())
    if (!free_leq(FreeElement(a.n(), {t}), a)) f.push_back(t);
  return {a.n(), std::move(f)};
}

inline FreeElement free_neg(const FreeElement& a) { return free_imp(a, FreeElement::top(a.n())); }

/// "0", "1", or components joined by " + " with meets written "a0*a1".
inline std::string render(const FreeElement& a) {
  if (a.is_bottom()) return "0";
  if (a.is_top()) return "1";
  std::string out;
  for (auto s : a.family()) {
    if (!out.empty()) out += " + ";
    bool first = true;
    for (gen_set r = s; r != 0; r &= r - 1) {
      if (!first) out += "*";
      out += "a" + std::to_string(std::countr_zero(r));
      first = false;
    }
  }
  return out;
}

/// Parses the rendering above (whitespace-insensitive).
inline FreeElement parse_free_element(const std::string& text, std::size_t n) {
  FreeElement::check_n(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return FreeElement::bottom(n);
  if (s == "1") return FreeElement::top(n);
  std::vector<gen_set> family;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw input_error("cannot parse free lattice element '" + text + "' at " + std::to_string(pos) +
                      ": " + why);
  };
  while (true) {
    gen_set comp = 0;
    while (true) {
      if (pos >= s.size() || s[pos] != 'a') fail("expected generator 'a<i>'");
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected generator index");
      const auto i = std::stoul(s.substr(start, pos - start));
      if (i >= n) fail("generator index " + std::to_string(i) + " out of range");
      comp |= gen_set{1} << i;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    family.push_back(comp);
    if (pos == s.size()) break;
    if (s[pos] != '+') fail("expected '+' or '*'");
    ++pos;
  }
  return {n, std::move(family)};
}

/// Every normal form of F_n, ordered by family size then lexicographically.
inline std::vector<FreeElement> free_enumerate(std::size_t n, std::size_t cap = max_generators) {
  FreeElement::check_n(n);
  if (n > cap) throw resource_error("free_enumerate: n = " + std::to_string(n) + " exceeds cap");
  const gen_set count = (gen_set{1} << n) - 1;
  std::vector<std::vector<gen_set>> families;
  std::vector<gen_set> current;
  auto rec = [&](auto&& self, gen_set next) -> void {
    families.push_back(current);
    for (gen_set s = next; s <= count; ++s) {
      if (std::any_of(current.begin(), current.end(), [&](gen_set t) {
            return detail::subset(t, s) || detail::subset(s, t);
          }))
        continue;
      current.push_back(s);
      self(self, s + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  std::vector<FreeElement> out;
  out.reserve(families.size());
  for (auto& f : families) out.emplace_back(n, std::move(f));
  std::sort(out.begin(), out.end(), [](const FreeElement& a, const FreeElement& b) {
    if (a.family().size() != b.family().size()) return a.family().size() < b.family().size();
    return std::lexicographical_compare(a.family().begin(), a.family().end(), b.family().begin(),
                                        b.family().end(), detail::gen_set_lex_less);
  });
  return out;
}

/// F_n as a table-backed algebra together with its element list.
struct FreeAlgebra {
  AlgebraPtr algebra;
  std::vector<FreeElement> elements;

  elem index_of(const FreeElement& x) const {
    auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end()) throw input_error("element not in F_n");
    return static_cast<elem>(it - elements.begin());
  }
};

/// Cached tables of F_n built from free_leq/join/meet/imp. Capped at n = 4.
inline const FreeAlgebra& free_algebra(std::size_t n, std::size_t cap = 4) {
  FreeElement::check_n(n);
  if (n > cap) throw resource_error("free_algebra: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<FreeAlgebra>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  auto fa = std::make_unique<FreeAlgebra>();
  fa->elements = free_enumerate(n);
  const auto& els = fa->elements;
  const std::size_t m = els.size();
  std::map<std::vector<gen_set>, elem> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(els[i].family(), static_cast<elem>(i));
  auto at = [&](const FreeElement& x) { return index.at(x.family()); };
  AlgebraTables t;
  t.size = m;
  t.leq.resize(m * m);
  t.join.resize(m * m);
  t.meet.resize(m * m);
  t.imp.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i * m + j;
      t.leq[k] = free_leq(els[i], els[j]);
      t.join[k] = at(free_join(els[i], els[j]));
      t.meet[k] = at(free_meet(els[i], els[j]));
      t.imp[k] = at(free_imp(els[i], els[j]));
    }
  t.bottom = at(FreeElement::bottom(n));
  t.top = at(FreeElement::top(n));
  std::vector<std::string> labels;
  for (const auto& x : els) labels.push_back(render(x));
  fa->algebra = std::make_shared<BrouwerAlgebra>(std::move(t), "free:" + std::to_string(n),
                                                 std::move(labels));
  return *cache.emplace(n, std::move(fa)).first->second;
}

/// Up-set of B_n that generator a_i is sent to: the basic open [n - {i}),
/// i.e. the nonempty subsets avoiding i.
inline mask_t generator_open(std::size_t n, std::size_t i) {
  mask_t out = 0;
  const std::uint32_t count = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s <= count; ++s)
    if (((s >> i) & 1U) == 0) out |= bit(powerset_element(s));
  return out;
}

/// Image of a normal form in B_n: meets become unions of generator opens and
/// the outer join becomes an intersection.
inline mask_t free_to_open(const FreeElement& x) {
  const std::size_t n = x.n();
  mask_t acc = full_mask((std::size_t{1} << n) - 1);
  for (auto comp : x.family()) {
    mask_t u = 0;
    for (gen_set r = comp; r != 0; r &= r - 1) u |= generator_open(n, static_cast<std::size_t>(std::countr_zero(r)));
    acc &= u;
  }
  return acc;
}

struct FreeIsoReport {
  AlgebraMap map;
  bool bijective = false;
  HomCheck hom;
  bool ok() const { return bijective && hom.ok; }
};

/// The isomorphism F_n -> B_n fixed by a_i |-> [n - {i}), with its
/// verification.
inline FreeIsoReport iso_to_bn(std::size_t n, std::size_t cap = 4) {
  if (n == 0 || n > cap)
    throw resource_error("iso_to_bn: n must be in 1.." + std::to_string(cap));
  const auto& fa = free_algebra(n, cap);
  auto b = bn(n);
  FreeIsoReport rep;
  rep.map = {fa.algebra, b, {}};
  for (const auto& x : fa.elements) {
    auto e = b->element_of_open(free_to_open(x));
    if (!e) throw precondition_error("image of " + render(x) + " is not open in B_n");
    rep.map.image.push_back(*e);
  }
  rep.bijective = is_bijective(rep.map);
  rep.hom = is_b_homomorphism(rep.map);
  return rep;
}

/// Whether a_i <= join of a_j over j in `others`; freeness says never.
inline bool independence_check(std::size_t n, std::size_t i, const std::vector<std::size_t>& others) {
  if (std::find(others.begin(), others.end(), i) != others.end())
    throw input_error("independence_check: generator " + std::to_string(i) + " is in the index set");
  FreeElement acc = FreeElement::bottom(n);
  for (auto j : others) acc = free_join(acc, FreeElement::generator(n, j));
  return free_leq(FreeElement::generator(n, i), acc);
}

struct GeneratorNegation {
  std::size_t index = 0;
  FreeElement neg;
  FreeElement negneg;
  bool neg_is_join_of_others = false;
  bool double_negation_fixed = false;
};

/// For each generator: its negation should be the join of the other
/// generators, and double negation should give the generator back.
inline std::vector<GeneratorNegation> generator_negations(std::size_t n) {
  if (n < 2) throw input_error("generator_negations needs n >= 2");
  std::vector<GeneratorNegation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto g = FreeElement::generator(n, i);
    GeneratorNegation row{i, free_neg(g), free_neg(free_neg(g)), false, false};
    FreeElement others = FreeElement::bottom(n);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others = free_join(others, FreeElement::generator(n, j));
    row.neg_is_join_of_others = row.neg == others;
    row.double_negation_fixed = row.negneg == g;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace medlat

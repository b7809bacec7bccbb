#pragma once

// Finite posets over dense element indices, their up-sets (open sets), width,
// and enumeration of posets up to isomorphism.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medlat/error.hpp"

namespace medlat {

/// Subset of a poset carrier; bit i stands for element i.
using mask_t = std::uint64_t;

inline constexpr std::size_t max_poset_elements = 64;

inline constexpr mask_t bit(std::size_t i) { return mask_t{1} << i; }

inline constexpr mask_t full_mask(std::size_t n) {
  return n >= 64 ? ~mask_t{0} : bit(n) - 1;
}

/// Checks the partial-order axioms of `leq` over `m` points and returns a
/// description of the first violation, if any.
template <class Leq>
std::optional<std::string> order_violation(std::size_t m, Leq&& leq) {
  for (std::size_t x = 0; x < m; ++x)
    if (!leq(x, x)) return "not reflexive at " + std::to_string(x);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      if (leq(x, y) && leq(y, x))
        return "not antisymmetric: " + std::to_string(x) + " and " +
               std::to_string(y) + " are mutually below each other";
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < m; ++z)
        if (leq(y, z) && !leq(x, z))
          return "not transitive: " + std::to_string(x) + " <= " + std::to_string(y) +
                 " <= " + std::to_string(z);
    }
  return std::nullopt;
}

class Poset {
 public:
  Poset() = default;

  /// Builds a poset from the listed pairs (i, j) meaning i <= j. Reflexive
  /// pairs are added; the result must already be antisymmetric and transitive.
  static Poset from_pairs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> le,
                          std::vector<std::string> labels = {}, std::string name = {}) {
    if (n == 0 || n > max_poset_elements)
      throw input_error("poset size must be in 1.." + std::to_string(max_poset_elements) +
                        ", got " + std::to_string(n));
    std::vector<mask_t> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = bit(x);
    for (auto [i, j] : le) {
      if (i >= n || j >= n)
        throw input_error("order pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for " + std::to_string(n) + " elements");
      up[i] |= bit(j);
    }
    return from_up_masks(std::move(up), std::move(labels), std::move(name));
  }

  /// `up[x]` is the set of elements above or equal to x.
  static Poset from_up_masks(std::vector<mask_t> up, std::vector<std::string> labels = {},
                             std::string name = {}) {
    const std::size_t n = up.size();
    if (n == 0 || n > max_poset_elements)
      throw input_error("poset size must be in 1.." + std::to_string(max_poset_elements));
    for (std::size_t x = 0; x < n; ++x) {
      if ((up[x] & ~full_mask(n)) != 0) throw input_error("order relation references unknown element");
      up[x] |= bit(x);
    }
    auto leq = [&](std::size_t x, std::size_t y) { return ((up[x] >> y) & 1U) != 0; };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (leq(x, y) && leq(y, x))
          throw input_error("order has a cycle through elements " + std::to_string(x) + " and " +
                            std::to_string(y));
    for (std::size_t x = 0; x < n; ++x)
      for (mask_t rest = up[x]; rest != 0; rest &= rest - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(rest));
        if ((up[y] & ~up[x]) != 0) {
          const auto z = static_cast<std::size_t>(std::countr_zero(up[y] & ~up[x]));
          throw input_error("order is not transitive: " + std::to_string(x) + " <= " +
                            std::to_string(y) + " <= " + std::to_string(z));
        }
      }
    if (labels.empty()) labels = default_labels(n);
    if (labels.size() != n) throw input_error("label count does not match poset size");
    Poset p;
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (mask_t rest = p.up_[x]; rest != 0; rest &= rest - 1)
        p.down_[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(x);
    p.labels_ = std::move(labels);
    p.name_ = std::move(name);
    return p;
  }

  static Poset chain(std::size_t n) {
    std::vector<mask_t> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = full_mask(n) & ~(bit(x) - 1);
    return from_up_masks(std::move(up), {}, std::to_string(n) + "-chain");
  }

  static Poset antichain(std::size_t n) {
    std::vector<mask_t> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = bit(x);
    return from_up_masks(std::move(up), {}, std::to_string(n) + "-antichain");
  }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
    return out;
  }

  std::size_t size() const { return up_.size(); }
  mask_t all() const { return full_mask(size()); }

  bool leq(std::size_t x, std::size_t y) const { return ((up_[x] >> y) & 1U) != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// [x): elements above or equal to x.
  mask_t up(std::size_t x) const { return up_[x]; }
  /// Elements below or equal to x.
  mask_t down(std::size_t x) const { return down_[x]; }

  const std::vector<mask_t>& up_masks() const { return up_; }

  mask_t minimal_elements() const {
    mask_t out = 0;
    for (std::size_t x = 0; x < size(); ++x)
      if (down_[x] == bit(x)) out |= bit(x);
    return out;
  }

  mask_t maximal_elements() const {
    mask_t out = 0;
    for (std::size_t x = 0; x < size(); ++x)
      if (up_[x] == bit(x)) out |= bit(x);
    return out;
  }

  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Pairs (i, j) with i < j strictly, in row order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (less(x, y)) out.emplace_back(x, y);
    return out;
  }

  /// Same carrier size and relation; labels and name are ignored.
  bool same_order(const Poset& other) const { return up_ == other.up_; }

 private:
  std::vector<mask_t> up_;
  std::vector<mask_t> down_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// An up-closed subset of a poset carrier.
struct UpSet {
  mask_t members = 0;
  std::size_t universe = 0;

  bool contains(std::size_t x) const { return ((members >> x) & 1U) != 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(members)); }
  friend bool operator==(const UpSet&, const UpSet&) = default;
  friend auto operator<=>(const UpSet&, const UpSet&) = default;
};

inline mask_t up_closure_mask(const Poset& p, mask_t seed) {
  mask_t out = 0;
  for (mask_t rest = seed; rest != 0; rest &= rest - 1)
    out |= p.up(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

inline mask_t down_closure_mask(const Poset& p, mask_t seed) {
  mask_t out = 0;
  for (mask_t rest = seed; rest != 0; rest &= rest - 1)
    out |= p.down(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

inline bool is_up_closed(const Poset& p, mask_t s) { return up_closure_mask(p, s) == s; }

/// Least up-closed superset of `seed`.
inline UpSet up_closure(const Poset& p, std::span<const std::size_t> seed) {
  mask_t m = 0;
  for (auto x : seed) {
    if (x >= p.size())
      throw input_error("element " + std::to_string(x) + " out of range for poset of size " +
                        std::to_string(p.size()));
    m |= bit(x);
  }
  return {up_closure_mask(p, m), p.size()};
}

inline UpSet up_closure(const Poset& p, std::initializer_list<std::size_t> seed) {
  return up_closure(p, std::span<const std::size_t>(seed.begin(), seed.size()));
}

/// Minimal elements of an up-set; their up-closure gives the set back.
inline mask_t minimal_generators(const Poset& p, mask_t open) {
  mask_t out = 0;
  for (mask_t rest = open; rest != 0; rest &= rest - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(rest));
    if ((p.down(x) & open) == bit(x)) out |= bit(x);
  }
  return out;
}

/// All up-sets of `p` by exhaustive subset filtering, sorted by membership
/// mask. Only feasible for small carriers, hence the cap.
inline std::vector<UpSet> open_sets(const Poset& p, std::size_t cap = 20) {
  if (p.size() > cap)
    throw resource_error("open_sets: poset has " + std::to_string(p.size()) +
                         " elements, cap is " + std::to_string(cap));
  std::vector<UpSet> out;
  for (mask_t s = 0; s <= p.all(); ++s)
    if (is_up_closed(p, s)) out.push_back({s, p.size()});
  return out;
}

/// All up-set masks of `p`, sorted ascending, by branching over a reverse
/// linear extension. Works for carriers too large to filter exhaustively.
inline std::vector<mask_t> up_set_masks(const Poset& p, std::size_t limit) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // strictly larger elements have strictly smaller up-sets
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(p.up(a)) < std::popcount(p.up(b));
  });
  std::vector<mask_t> out;
  auto rec = [&](auto&& self, std::size_t pos, mask_t chosen) -> void {
    if (pos == n) {
      if (out.size() >= limit)
        throw resource_error("poset has more than " + std::to_string(limit) + " up-sets");
      out.push_back(chosen);
      return;
    }
    const std::size_t x = order[pos];
    self(self, pos + 1, chosen);
    if ((p.up(x) & ~bit(x) & ~chosen) == 0) self(self, pos + 1, chosen | bit(x));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Down-set masks, sorted ascending.
inline std::vector<mask_t> down_set_masks(const Poset& p, std::size_t limit) {
  auto ups = up_set_masks(p, limit);
  for (auto& m : ups) m = p.all() & ~m;
  std::sort(ups.begin(), ups.end());
  return ups;
}

/// The nonempty subsets of {0..n-1} ordered by reverse inclusion. Element k
/// stands for the subset with bitmask k + 1, so the full set comes last and
/// is the unique minimum.
inline Poset powerset_poset(std::size_t n, std::size_t cap = 6) {
  if (n == 0 || n > cap)
    throw input_error("powerset_poset: n must be in 1.." + std::to_string(cap) + ", got " +
                      std::to_string(n));
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<mask_t> up(count);
  std::vector<std::string> labels(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t s = k + 1;
    for (std::size_t t = 1; t <= count; ++t)
      if ((t & ~s) == 0) up[k] |= bit(t - 1);
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1U) labels[k] += std::to_string(i);
  }
  return Poset::from_up_masks(std::move(up), std::move(labels),
                              "powerset(" + std::to_string(n) + ")");
}

/// Element index of a subset of {0..n-1} inside powerset_poset(n).
inline std::size_t powerset_element(std::uint32_t subset) { return subset - 1; }

// ---------------------------------------------------------------------------
// Isomorphism classes

struct CanonicalPoset {
  std::size_t size = 0;
  /// Row-major relation matrix of the relabelled poset, entry (0,0) in the
  /// most significant used bit; integer order is lexicographic matrix order.
  mask_t code = 0;
  /// permutation[position] = original element placed at that position.
  std::vector<std::size_t> permutation;
};

/// Canonical relabelling: elements are first grouped by (down-set size,
/// up-set size), then the lexicographically least relation matrix is taken
/// over all permutations within groups.
inline CanonicalPoset canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 8) throw resource_error("canonical_form supports at most 8 elements");
  using key_t = std::pair<int, int>;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto key = [&](std::size_t x) {
    return key_t{std::popcount(p.down(x)), std::popcount(p.up(x))};
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  auto encode = [&](const std::vector<std::size_t>& perm) {
    mask_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        code = (code << 1) | (p.leq(perm[i], perm[j]) ? 1U : 0U);
    return code;
  };
  CanonicalPoset best{n, ~mask_t{0}, order};
  std::vector<std::size_t> perm = order;
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      const mask_t c = encode(perm);
      if (c < best.code) {
        best.code = c;
        best.permutation = perm;
      }
      return;
    }
    auto [b, e] = groups[g];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(b), perm.begin() + static_cast<std::ptrdiff_t>(e));
    do {
      self(self, g + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(b),
                                   perm.begin() + static_cast<std::ptrdiff_t>(e)));
  };
  rec(rec, 0);
  return best;
}

/// The poset relabelled into its canonical order, with default labels.
inline Poset canonical_poset(const Poset& p) {
  const auto c = canonical_form(p);
  const std::size_t n = p.size();
  std::vector<mask_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(c.permutation[i], c.permutation[j])) up[i] |= bit(j);
  return Poset::from_up_masks(std::move(up));
}

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a).code == canonical_form(b).code;
}

/// One canonical representative per isomorphism class of n-element posets,
/// ordered by canonical code. Built by adding a new maximal element above
/// every down-set of each smaller representative.
inline std::vector<Poset> enumerate_posets(std::size_t n, std::size_t cap = 7) {
  if (n == 0) throw input_error("enumerate_posets: n must be positive");
  if (n > cap)
    throw resource_error("enumerate_posets: n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  std::vector<Poset> level{Poset::chain(1)};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<mask_t, Poset> next;
    for (const auto& q : level) {
      for (mask_t d : down_set_masks(q, std::size_t{1} << 20)) {
        std::vector<mask_t> up(q.up_masks());
        up.push_back(bit(k));
        for (mask_t rest = d; rest != 0; rest &= rest - 1)
          up[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(k);
        auto candidate = Poset::from_up_masks(std::move(up));
        const mask_t code = canonical_form(candidate).code;
        if (!next.contains(code)) next.emplace(code, canonical_poset(candidate));
      }
    }
    level.clear();
    for (auto& [code, poset] : next) level.push_back(std::move(poset));
  }
  for (std::size_t i = 0; i < level.size(); ++i)
    level[i].set_name("P" + std::to_string(n) + "." + std::to_string(i));
  return level;
}

// ---------------------------------------------------------------------------
// Width

/// Size of the largest antichain of an order already known to be partial.
/// Dilworth: width = m - maximum matching in the strict comparability graph,
/// found with Hopcroft-Karp.
template <class Leq>
std::size_t order_width(std::size_t m, Leq&& leq) {
  if (m == 0) return 0;
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && leq(x, y)) adj[x].push_back(static_cast<std::uint32_t>(y));
  constexpr std::uint32_t none = ~std::uint32_t{0};
  std::vector<std::uint32_t> match_l(m, none), match_r(m, none), dist(m);
  std::vector<std::uint32_t> queue(m);
  std::vector<std::size_t> it(m);
  auto bfs = [&] {
    std::size_t head = 0, tail = 0;
    bool found = false;
    for (std::size_t x = 0; x < m; ++x) {
      if (match_l[x] == none) {
        dist[x] = 0;
        queue[tail++] = static_cast<std::uint32_t>(x);
      } else {
        dist[x] = none;
      }
    }
    while (head < tail) {
      const auto x = queue[head++];
      for (auto y : adj[x]) {
        const auto z = match_r[y];
        if (z == none) {
          found = true;
        } else if (dist[z] == none) {
          dist[z] = dist[x] + 1;
          queue[tail++] = z;
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::uint32_t x) -> bool {
    for (auto& i = it[x]; i < adj[x].size(); ++i) {
      const auto y = adj[x][i];
      const auto z = match_r[y];
      if (z == none || (dist[z] == dist[x] + 1 && self(self, z))) {
        match_l[x] = y;
        match_r[y] = x;
        ++i;
        return true;
      }
    }
    dist[x] = none;
    return false;
  };
  std::size_t matching = 0;
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::size_t x = 0; x < m; ++x)
      if (match_l[x] == none && dfs(dfs, static_cast<std::uint32_t>(x))) ++matching;
  }
  return m - matching;
}

/// Largest pairwise-incomparable subset; the relation is validated first.
template <class Leq>
std::size_t max_antichain_size(std::size_t m, Leq&& leq) {
  if (auto bad = order_violation(m, leq)) throw input_error("max_antichain_size: " + *bad);
  return order_width(m, leq);
}

inline std::size_t max_antichain_size(const std::vector<std::vector<bool>>& leq) {
  for (const auto& row : leq)
    if (row.size() != leq.size()) throw input_error("order relation must be a square matrix");
  return max_antichain_size(leq.size(), [&](std::size_t x, std::size_t y) { return leq[x][y]; });
}

inline std::size_t max_antichain_size(const Poset& p) {
  return order_width(p.size(), [&](std::size_t x, std::size_t y) { return p.leq(x, y); });
}

}  // namespace medlat

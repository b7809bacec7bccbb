#pragma once

// Textual algebra selectors:
//
//   bn:<n> | free:<n> | chain:<m> | poset:<file>
//   interval:<selector>,<a>,<b> | factor:<selector>,<a>
//
// Elements are given by index, by rendered label, or as "top" / "bottom".

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"
#include "medlat/freedist.hpp"
#include "medlat/io.hpp"

namespace medlat {

namespace detail {

/// Splits on commas outside {} [] ().
inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw input_error(std::string(what) + ": expected a number, got '" + std::string(s) + "'");
  return v;
}

inline std::string join_parts(const std::vector<std::string>& parts, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) out += (i ? "," : "") + parts[i];
  return out;
}

}  // namespace detail

/// Resolves an element argument. An index that is also the label of a
/// different element is rejected rather than guessed.
inline elem resolve_element(const BrouwerAlgebra& a, std::string_view text) {
  const std::string t(text);
  if (t == "top") return a.top();
  if (t == "bottom") return a.bottom();
  std::optional<elem> by_index;
  if (!t.empty() && t.find_first_not_of("0123456789") == std::string::npos) {
    const auto i = detail::parse_count(t, "element index");
    if (i >= a.size())
      throw input_error("element index " + t + " out of range for " + a.provenance() + " (size " +
                        std::to_string(a.size()) + ")");
    by_index = static_cast<elem>(i);
  }
  const auto by_label = a.find_label(t);
  if (by_index && by_label && *by_index != *by_label)
    throw input_error("element '" + t + "' is ambiguous: index " + t + " and label of element " +
                      std::to_string(*by_label));
  if (by_index) return *by_index;
  if (by_label) return *by_label;
  throw input_error("no element '" + t + "' in " + a.provenance());
}

inline AlgebraPtr resolve_algebra(std::string_view text, unsigned workers = 1) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw input_error("algebra selector '" + std::string(text) +
                      "' must be one of bn:<n>, free:<n>, chain:<m>, poset:<file>, "
                      "interval:<sel>,<a>,<b>, factor:<sel>,<a>");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "bn") return bn(detail::parse_count(rest, "bn"), workers);
  if (kind == "free") return free_algebra(detail::parse_count(rest, "free")).algebra;
  if (kind == "chain") {
    const auto m = detail::parse_count(rest, "chain");
    if (m == 0 || m > max_algebra_elements) throw input_error("chain length out of range");
    return chain_algebra(m);
  }
  if (kind == "poset") {
    auto p = std::make_shared<const Poset>(load_poset(std::string(rest)));
    return from_poset(p, 8000, workers, "poset:" + std::string(rest));
  }
  if (kind == "interval" || kind == "factor") {
    const auto parts = detail::split_top_level(rest);
    const std::size_t nargs = kind == "interval" ? 2 : 1;
    if (parts.size() < nargs + 1)
      throw input_error(std::string(kind) + " needs " + (nargs == 2 ? "<sel>,<a>,<b>" : "<sel>,<a>"));
    const auto base = resolve_algebra(detail::join_parts(parts, parts.size() - nargs), workers);
    if (kind == "factor") return factor_by_principal_filter(base, resolve_element(*base, parts.back())).algebra;
    const elem lo = resolve_element(*base, parts[parts.size() - 2]);
    const elem hi = resolve_element(*base, parts.back());
    return interval(base, lo, hi);
  }
  throw input_error("unknown algebra kind '" + std::string(kind) + "'");
}

}  // namespace medlat

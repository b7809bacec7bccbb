#pragma once

// Propositional formulas over T, F, and the connectives & | -> ~.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "medlat/error.hpp"

namespace medlat {

enum class Connective : std::uint8_t { var, truth, falsity, conj, disj, imp, neg };

class Formula {
 public:
  static Formula var(std::string name) { return Formula(Connective::var, std::move(name), {}); }
  static Formula truth() { return Formula(Connective::truth, {}, {}); }
  static Formula falsity() { return Formula(Connective::falsity, {}, {}); }
  static Formula conj(Formula a, Formula b) { return Formula(Connective::conj, {}, {std::move(a), std::move(b)}); }
  static Formula disj(Formula a, Formula b) { return Formula(Connective::disj, {}, {std::move(a), std::move(b)}); }
  static Formula implies(Formula a, Formula b) { return Formula(Connective::imp, {}, {std::move(a), std::move(b)}); }
  static Formula negate(Formula a) { return Formula(Connective::neg, {}, {std::move(a)}); }

  Connective kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  /// Left operand, or the operand of a negation.
  const Formula& lhs() const { return node_->args.at(0); }
  const Formula& rhs() const { return node_->args.at(1); }
  const std::vector<Formula>& operands() const { return node_->args; }
  bool binary() const { return node_->args.size() == 2; }

  std::size_t depth() const { return node_->depth; }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& a : operands()) n += a.node_count();
    return n;
  }

  /// Sorted, without duplicates.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    collect(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.name() == b.name() && a.operands() == b.operands();
  }

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> args;
    std::size_t depth = 1;
  };

  Formula(Connective k, std::string name, std::vector<Formula> args) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(name);
    std::size_t d = 0;
    for (const auto& a : args) d = std::max(d, a.depth());
    n->depth = d + 1;
    n->args = std::move(args);
    node_ = std::move(n);
  }

  void collect(std::vector<std::string>& out) const {
    if (kind() == Connective::var) out.push_back(name());
    for (const auto& a : operands()) a.collect(out);
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline int precedence(Connective k) {
  switch (k) {
    case Connective::imp: return 1;
    case Connective::disj: return 2;
    case Connective::conj: return 3;
    case Connective::neg: return 4;
    default: return 5;
  }
}

struct Symbols {
  const char* truth;
  const char* falsity;
  const char* conj;
  const char* disj;
  const char* imp;
  const char* neg;
};

inline constexpr Symbols ascii_symbols{"T", "F", " & ", " | ", " -> ", "~"};
inline constexpr Symbols unicode_symbols{"⊤", "⊥", " ∧ ", " ∨ ", " → ", "¬"};

inline void render_into(const Formula& f, const Symbols& sym, std::string& out) {
  auto child = [&](const Formula& c, int min_prec) {
    if (precedence(c.kind()) < min_prec) {
      out += '(';
      render_into(c, sym, out);
      out += ')';
    } else {
      render_into(c, sym, out);
    }
  };
  switch (f.kind()) {
    case Connective::var: out += f.name(); break;
    case Connective::truth: out += sym.truth; break;
    case Connective::falsity: out += sym.falsity; break;
    case Connective::neg:
      out += sym.neg;
      child(f.lhs(), 4);
      break;
    case Connective::imp:  // right associative
      child(f.lhs(), 2);
      out += sym.imp;
      child(f.rhs(), 1);
      break;
    case Connective::disj:  // left associative
      child(f.lhs(), 2);
      out += sym.disj;
      child(f.rhs(), 3);
      break;
    case Connective::conj:
      child(f.lhs(), 3);
      out += sym.conj;
      child(f.rhs(), 4);
      break;
  }
}

}  // namespace detail

/// ASCII rendering with the fewest parentheses that reparse to the same tree.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, detail::ascii_symbols, out);
  return out;
}

inline std::string render_unicode(const Formula& f) {
  std::string out;
  detail::render_into(f, detail::unicode_symbols, out);
  return out;
}

}  // namespace medlat

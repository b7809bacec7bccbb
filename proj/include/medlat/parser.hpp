#pragma once

// Recursive-descent parser for the formula grammar
//
//   formula := imp
//   imp     := or [ "->" imp ]
//   or      := and { "|" and }
//   and     := not { "&" not }
//   not     := { "~" } atom
//   atom    := variable | "T" | "F" | "(" formula ")"
//
// with Unicode aliases ¬ ∧ ∨ → ⊤ ⊥ accepted on input.

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "medlat/error.hpp"
#include "medlat/formula.hpp"

namespace medlat {

class parse_error : public input_error {
 public:
  parse_error(std::size_t position, std::set<std::string> expected, const std::string& found)
      : input_error(describe(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  /// Byte offset into the input.
  std::size_t position() const { return position_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string describe(std::size_t pos, const std::set<std::string>& expected,
                              const std::string& found) {
    std::string out = "syntax error at position " + std::to_string(pos) + ": found " + found +
                      ", expected one of";
    for (const auto& e : expected) out += " " + e;
    return out;
  }

  std::size_t position_;
  std::set<std::string> expected_;
};

inline constexpr std::size_t max_formula_depth = 256;

namespace detail {

enum class Tok { var, truth, falsity, lparen, rparen, neg, conj, disj, imp, end, bad };

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = parse_imp(0);
    if (tok_ != Tok::end) fail({"'->'", "'|'", "'&'", "')'", "end of input"});
    return f;
  }

 private:
  static inline const std::set<std::string> atom_start{"variable", "'T'", "'F'", "'('", "'~'"};

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    start_ = pos_;
    if (pos_ >= text_.size()) {
      tok_ = Tok::end;
      return;
    }
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    struct Sym {
      std::string_view text;
      Tok tok;
    };
    static constexpr Sym symbols[] = {
        {"->", Tok::imp},  {"|", Tok::disj},   {"&", Tok::conj},      {"~", Tok::neg},
        {"(", Tok::lparen}, {")", Tok::rparen}, {"→", Tok::imp},  {"∨", Tok::disj},
        {"∧", Tok::conj}, {"¬", Tok::neg}, {"⊤", Tok::truth}, {"⊥", Tok::falsity}};
    for (const auto& s : symbols)
      if (starts(s.text)) {
        tok_ = s.tok;
        pos_ += s.text.size();
        return;
      }
    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      name_ = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      tok_ = Tok::var;
      return;
    }
    if (c == 'T' || c == 'F') {
      const std::size_t end = pos_ + 1;
      if (end >= text_.size() ||
          !(std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        tok_ = c == 'T' ? Tok::truth : Tok::falsity;
        pos_ = end;
        return;
      }
    }
    tok_ = Tok::bad;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string found;
    if (tok_ == Tok::end) {
      found = "end of input";
    } else {
      const std::size_t len = tok_ == Tok::bad ? 1 : pos_ - start_;
      found = "'" + std::string(text_.substr(start_, len)) + "'";
    }
    throw parse_error(start_, std::move(expected), found);
  }

  void enter(std::size_t depth) const {
    if (depth > max_formula_depth)
      throw input_error("formula nesting exceeds depth " + std::to_string(max_formula_depth));
  }

  Formula parse_imp(std::size_t depth) {
    enter(depth);
    Formula lhs = parse_or(depth);
    if (tok_ == Tok::imp) {
      advance();
      return Formula::implies(std::move(lhs), parse_imp(depth + 1));
    }
    return lhs;
  }

  Formula parse_or(std::size_t depth) {
    Formula lhs = parse_and(depth);
    while (tok_ == Tok::disj) {
      advance();
      lhs = Formula::disj(std::move(lhs), parse_and(depth));
    }
    return lhs;
  }

  Formula parse_and(std::size_t depth) {
    Formula lhs = parse_not(depth);
    while (tok_ == Tok::conj) {
      advance();
      lhs = Formula::conj(std::move(lhs), parse_not(depth));
    }
    return lhs;
  }

  Formula parse_not(std::size_t depth) {
    enter(depth);
    if (tok_ == Tok::neg) {
      advance();
      return Formula::negate(parse_not(depth + 1));
    }
    return parse_atom(depth);
  }

  Formula parse_atom(std::size_t depth) {
    enter(depth);
    switch (tok_) {
      case Tok::var: {
        auto f = Formula::var(name_);
        advance();
        return f;
      }
      case Tok::truth:
        advance();
        return Formula::truth();
      case Tok::falsity:
        advance();
        return Formula::falsity();
      case Tok::lparen: {
        advance();
        Formula f = parse_imp(depth + 1);
        if (tok_ != Tok::rparen) fail({"')'", "'->'", "'|'", "'&'"});
        advance();
        return f;
      }
      default:
        fail(atom_start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Tok tok_ = Tok::end;
  std::string name_;
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::FormulaParser(text).parse(); }

}  // namespace medlat

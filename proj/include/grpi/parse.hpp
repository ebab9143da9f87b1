#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "grpi/polynomial.hpp"

namespace grpi {

namespace detail {

template <Field F>
class PolyParser {
 public:
  using value_type = typename F::value_type;

  PolyParser(std::string_view text, std::shared_ptr<const GroupTable> group, F field)
      : text_(text), group_(std::move(group)), field_(std::move(field)) {}

  Polynomial<F> parse_sum(bool lie) {
    Polynomial<F> result(group_, field_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      auto t = parse_term(lie);
      result += negative ? -t : t;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = get() == '-';
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string digits() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial<F> parse_term(bool lie) {
    auto coeff = field_.one();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string c = digits();
      if (peek() == '/') {
        ++pos_;
        c += "/" + digits();
      }
      coeff = field_.parse(c);
      if (peek() != '*') return Polynomial<F>::monomial(group_, field_, Word{}, coeff);
      ++pos_;
    }
    auto term = Polynomial<F>::monomial(group_, field_, Word{}, coeff);
    term = term * parse_factor(lie);
    while (peek() == '*') {
      ++pos_;
      term = term * parse_factor(lie);
    }
    return term;
  }

  Polynomial<F> parse_factor(bool lie) {
    if (lie && peek() == '[') {
      ++pos_;
      auto a = parse_factor(true);
      expect(',');
      auto b = parse_factor(true);
      expect(']');
      return a * b - b * a;
    }
    return Polynomial<F>::monomial(group_, field_, Word{parse_variable()});
  }

  Variable parse_variable() {
    Variable v;
    switch (get()) {
      case 'x': v.family = Family::X; break;
      case 'y': v.family = Family::Y; break;
      case 'z': v.family = Family::Z; break;
      default: --pos_; fail("expected variable x, y or z");
    }
    auto idx = digits();
    if (idx.size() > 9 || std::stoul(idx) == 0) fail("variable index must be a positive integer");
    v.index = static_cast<std::uint32_t>(std::stoul(idx));
    expect('{');
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
    std::string label(text_.substr(start, pos_ - start));
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
    auto g = group_->find(label);
    if (!g) {
      pos_ = start;
      fail("unknown degree label '" + label + "'");
    }
    expect('}');
    v.degree = *g;
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::shared_ptr<const GroupTable> group_;
  F field_;
};

}  // namespace detail

/// Parses the textual polynomial grammar, e.g. "x1{0}*x2{0} - 2/3*x2{0}*x1{0}".
/// Degree labels resolve against the group's element labels.
template <Field F = RationalField>
Polynomial<F> parse_poly(std::string_view text, std::shared_ptr<const GroupTable> group, F field = F{}) {
  return detail::PolyParser<F>(text, std::move(group), std::move(field)).parse_sum(false);
}

/// Like parse_poly, but factors may also be Lie brackets "[a,b]", expanded
/// as ab - ba.
template <Field F = RationalField>
Polynomial<F> parse_lie(std::string_view text, std::shared_ptr<const GroupTable> group, F field = F{}) {
  return detail::PolyParser<F>(text, std::move(group), std::move(field)).parse_sum(true);
}

inline std::string format_variable(const Variable& v, const GroupTable& group) {
  return family_letter(v.family) + std::to_string(v.index) + "{" + group.label(v.degree) + "}";
}

inline std::string format_word(const Word& w, const GroupTable& group) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += format_variable(w[i], group);
  }
  return s;
}

/// Canonical text form; terms appear in canonical word order.
template <Field F>
std::string print_poly(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    std::string coeff = f.field().format(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    out += format_word(w, f.group());
  }
  return out;
}

}  // namespace grpi

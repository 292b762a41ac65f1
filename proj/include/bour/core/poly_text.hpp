#pragma once

#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bour/core/calculus.hpp"
#include "bour/core/polynomial.hpp"

namespace bour {

/// "x^3*y*z^2" with ^1 omitted; empty for the unit monomial.
inline std::string monomial_text(const Monomial& m, const VariableRegistry& reg) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += reg.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

/// Bit-exact text form: terms strictly descending in `order`, signs folded
/// into the separators for real coefficients, Q(i) coefficients as "(a+b*i)".
inline std::string canonical_text(const Polynomial& p,
                                  const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(p, order)) {
    const std::string mono = monomial_text(t.monomial, p.registry());
    std::string body;
    bool negative = false;
    if (t.coefficient.is_real()) {
      negative = sgn(t.coefficient.re()) < 0;
      ExactRational mag = abs(t.coefficient.re());
      if (mono.empty()) body = to_string(mag);
      else if (mag == 1) body = mono;
      else body = to_string(mag) + "*" + mono;
    } else {
      body = to_string(t.coefficient);
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

namespace detail {

struct Token {
  enum class Kind { number, ident, op, end } kind;
  std::string text;
  std::size_t column;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t line) : text_(text), line_(line) { tokenize(); }

  /// Variable names in order of first appearance.
  std::vector<std::string> identifiers() const {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < tokens_.size(); ++k) {
      const auto& t = tokens_[k];
      if (t.kind != Token::Kind::ident || t.text == "i") continue;
      if (std::find(names.begin(), names.end(), t.text) == names.end()) names.push_back(t.text);
    }
    return names;
  }

  Polynomial parse(const VariableRegistry& reg) {
    reg_ = &reg;
    pos_ = 0;
    std::vector<Polynomial::Term> terms;
    bool negate = false;
    if (is_op("-") || is_op("+")) negate = next().text == "-";
    terms.push_back(term(negate));
    while (peek().kind != Token::Kind::end) {
      if (!is_op("+") && !is_op("-")) fail("expected '+' or '-'");
      negate = next().text == "-";
      terms.push_back(term(negate));
    }
    return Polynomial::from_terms(reg, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = tokens_[std::min(pos_, tokens_.size() - 1)];
    throw ParseError(line_, t.column, t.kind == Token::Kind::end ? "<end>" : t.text, what);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool is_op(std::string_view op) const {
    return peek().kind == Token::Kind::op && peek().text == op;
  }
  void expect(std::string_view op) {
    if (!is_op(op)) fail("expected '" + std::string(op) + "'");
    ++pos_;
  }

  ExactRational rational() {
    if (peek().kind != Token::Kind::number) fail("expected a number");
    BigInt num(next().text);
    if (is_op("/")) {
      ++pos_;
      if (peek().kind != Token::Kind::number) fail("expected a denominator");
      BigInt den(next().text);
      if (den == 0) {
        --pos_;
        fail("zero denominator");
      }
      return make_rational(num, den);
    }
    return ExactRational(num);
  }

  unsigned small_integer() {
    if (peek().kind != Token::Kind::number) fail("expected an exponent");
    const std::string& s = peek().text;
    if (s.size() > 5 || std::stoul(s) > Monomial::kMaxExponent) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(next().text));
  }

  // "(a+b*i)", "(a-b*i)", "(b*i)", "(i)", "(a)", each part optionally signed
  GaussianRational gaussian() {
    expect("(");
    GaussianRational value;
    bool any = false;
    while (!is_op(")")) {
      bool neg = false;
      if (is_op("+") || is_op("-")) neg = next().text == "-";
      else if (any) fail("expected '+', '-' or ')'");
      GaussianRational part;
      if (peek().kind == Token::Kind::ident && peek().text == "i") {
        ++pos_;
        part = GaussianRational::i();
      } else {
        part = GaussianRational(rational());
        if (is_op("*")) {
          ++pos_;
          if (!(peek().kind == Token::Kind::ident && peek().text == "i")) fail("expected 'i'");
          ++pos_;
          part *= GaussianRational::i();
        }
      }
      value += neg ? -part : part;
      any = true;
      if (peek().kind == Token::Kind::end) fail("unterminated coefficient");
    }
    if (!any) fail("empty coefficient");
    expect(")");
    return value;
  }

  Polynomial::Term term(bool negate) {
    GaussianRational coeff(1);
    Monomial mono(reg_->size());
    bool first = true;
    do {
      if (!first) ++pos_;  // consume '*'
      first = false;
      const Token& t = peek();
      if (t.kind == Token::Kind::number) {
        coeff *= GaussianRational(rational());
      } else if (is_op("(")) {
        coeff *= gaussian();
      } else if (t.kind == Token::Kind::ident) {
        if (t.text == "i") fail("'i' is only allowed inside a parenthesised coefficient");
        auto idx = reg_->index_of(t.text);
        if (!idx) fail("unknown variable");
        ++pos_;
        unsigned e = 1;
        if (is_op("^")) {
          ++pos_;
          e = small_integer();
        }
        mono.set(*idx, mono[*idx] + e);
      } else {
        fail("expected a coefficient or variable");
      }
    } while (is_op("*"));
    return {mono, negate ? -coeff : coeff};
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tokens_.push_back({Token::Kind::number, std::string(text_.substr(i, j - i)), i + 1});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::ident, std::string(text_.substr(i, j - i)), i + 1});
        i = j;
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        tokens_.push_back({Token::Kind::op, std::string(1, c), i + 1});
        ++i;
      } else {
        throw ParseError(line_, i + 1, std::string(1, c), "unexpected character");
      }
    }
    tokens_.push_back({Token::Kind::end, "", text_.size() + 1});
  }

  std::string_view text_;
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VariableRegistry* reg_ = nullptr;
};

}  // namespace detail

inline Polynomial poly_parse(std::string_view text, const VariableRegistry& reg, std::size_t line = 1) {
  return detail::PolyParser(text, line).parse(reg);
}

/// Parses with a registry made of the variables in order of first appearance.
inline Polynomial poly_parse(std::string_view text) {
  detail::PolyParser parser(text, 1);
  VariableRegistry reg(parser.identifiers());
  return parser.parse(reg);
}

/// The ".poly" document: "vars: x,y,z" line, then the canonical polynomial line.
inline std::string poly_document(const Polynomial& p,
                                 const MonomialOrder& order = MonomialOrder::grevlex()) {
  return "vars: " + p.registry().joined() + "\n" + canonical_text(p, order) + "\n";
}

inline Polynomial parse_poly_document(std::string_view text) {
  auto nl = text.find('\n');
  std::string_view header = text.substr(0, nl);
  if (header.substr(0, 5) != "vars:") throw ParseError(1, 1, std::string(header.substr(0, 5)), "expected 'vars:' header");
  std::vector<std::string> names;
  std::string_view list = header.substr(5);
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) names.emplace_back(item);
    else if (comma != std::string_view::npos || !names.empty())
      throw ParseError(1, 6 + start, ",", "empty variable name");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  VariableRegistry reg(std::move(names));
  if (nl == std::string_view::npos) throw ParseError(2, 1, "<end>", "missing polynomial line");
  std::string_view body = text.substr(nl + 1);
  auto nl2 = body.find('\n');
  if (nl2 != std::string_view::npos) {
    std::string_view rest = body.substr(nl2 + 1);
    if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos)
      throw ParseError(3, 1, std::string(rest.substr(0, 10)), "unexpected content after polynomial");
    body = body.substr(0, nl2);
  }
  return poly_parse(body, reg, 2);
}

inline void write_poly_file(const std::filesystem::path& path, const Polynomial& p,
                            const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << poly_document(p, order);
  if (!out) throw InputError("write failed for " + path.string());
}

inline Polynomial read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poly_document(ss.str());
}

}  // namespace bour

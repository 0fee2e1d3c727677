#include "aluffi/parse.hpp"

#include <cctype>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column)
      : ring_(ring), text_(text), line_(line), column_(column) {}

  Polynomial parse_all() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_ + pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  bool starts_factor() const {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial term() {
    skip_ws();
    // Unary minus inside a product, e.g. "2*-x", is accepted.
    if (peek() == '-') {
      ++pos_;
      return -term();
    }
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        skip_ws();
        if (peek() == '-') {
          ++pos_;
          acc = -(acc * factor());
        } else {
          acc = acc * factor();
        }
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc = Rational(1 / d.leading_coefficient()) * acc;
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(std::stoi(std::string(digits)));
      skip_ws();
      if (peek() == '^') fail("chained exponent");
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Rational value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

std::vector<std::string> split_names(std::string_view s, std::size_t line, std::size_t col) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::size_t off = start;
      auto name = trim(s.substr(start, i - start), &off);
      if (name.empty()) throw ParseError("empty variable name", line, col + off);
      if (!std::isalpha(static_cast<unsigned char>(name[0])))
        throw ParseError("variable names must start with a letter", line, col + off);
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError("invalid character in variable name", line, col + off);
      out.emplace_back(name);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column) {
  return PolyParser(ring, text, line, column).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text, std::size_t line,
                                              std::size_t column) {
  std::vector<Polynomial> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::size_t off = start;
      auto piece = trim(text.substr(start, i - start), &off);
      if (piece.empty()) throw ParseError("empty list entry", line, column + off);
      out.push_back(parse_polynomial(ring, piece, line, column + off));
      start = i + 1;
    }
  }
  return out;
}

MonomialOrder parse_order(std::string_view text, std::size_t nvars) {
  auto t = trim(text);
  if (t == "grevlex") return MonomialOrder::grevlex(nvars);
  if (t == "lex") return MonomialOrder::lex(nvars);
  for (std::string_view prefix : {"weighted(", "weighted-grevlex("}) {
    if (t.starts_with(prefix) && t.ends_with(")")) {
      auto inner = t.substr(prefix.size(), t.size() - prefix.size() - 1);
      std::vector<int> w;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || inner[i] == ',') {
          auto piece = trim(inner.substr(start, i - start));
          try {
            w.push_back(std::stoi(std::string(piece)));
          } catch (const std::exception&) {
            throw DomainError("invalid weight '" + std::string(piece) + "'");
          }
          start = i + 1;
        }
      }
      if (w.size() != nvars) throw DomainError("weight vector arity does not match ring");
      return MonomialOrder::weighted_grevlex(std::move(w));
    }
  }
  throw DomainError("unknown monomial order '" + std::string(t) + "'");
}

RingPtr parse_ring_header(std::string_view text, std::size_t line) {
  std::vector<std::string> vars, params;
  std::string order_text = "grevlex";
  bool have_ring = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != '|') continue;
    std::size_t off = start;
    auto field = trim(text.substr(start, i - start), &off);
    start = i + 1;
    auto colon = field.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value' in ring header", line, off + 1);
    auto key = trim(field.substr(0, colon));
    std::size_t voff = off + colon + 1;
    auto value = trim(field.substr(colon + 1), &voff);
    if (key == "ring") {
      vars = split_names(value, line, voff + 1);
      have_ring = true;
    } else if (key == "params") {
      if (!value.empty()) params = split_names(value, line, voff + 1);
    } else if (key == "order") {
      order_text = std::string(value);
    } else {
      throw ParseError("unknown ring header field '" + std::string(key) + "'", line, off + 1);
    }
  }
  if (!have_ring) throw ParseError("ring header lacks 'ring:' field", line, 1);
  std::vector<std::string> names = vars;
  names.insert(names.end(), params.begin(), params.end());
  std::vector<Ring::Block> bl;
  Ring::Block geom{std::string(blocks::kGeom), {}};
  for (std::size_t i = 0; i < vars.size(); ++i) geom.vars.push_back(static_cast<int>(i));
  if (!geom.vars.empty()) bl.push_back(std::move(geom));
  if (!params.empty()) {
    Ring::Block par{std::string(blocks::kParam), {}};
    for (std::size_t i = 0; i < params.size(); ++i) par.vars.push_back(static_cast<int>(vars.size() + i));
    bl.push_back(std::move(par));
  }
  MonomialOrder order;
  try {
    order = parse_order(order_text, names.size());
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line, 1);
  }
  try {
    return Ring::make(std::move(names), std::move(bl), std::move(order));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

}  // namespace aluffi

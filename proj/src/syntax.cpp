#include "qlat/syntax.hpp"

#include "qlat/errors.hpp"

namespace qlat {

void Cursor::skip_space() {
  while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
}

bool Cursor::consume(char c) {
  if (peek() != c || at_end()) return false;
  ++pos_;
  return true;
}

void Cursor::expect(char c) {
  if (!consume(c)) error(std::string("expected '") + c + "'");
}

void Cursor::expect_end() {
  if (!at_end()) error(std::string("unexpected '") + peek() + "'");
}

void Cursor::error(const std::string& message) const { throw ParseError(message, pos_); }

std::string_view Cursor::take_until(char stop) {
  std::size_t start = pos_;
  int depth = 0;
  while (!at_end()) {
    char ch = text_[pos_];
    if (depth == 0 && ch == stop) break;
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') {
      if (depth == 0) break;
      --depth;
    }
    ++pos_;
  }
  return text_.substr(start, pos_ - start);
}

namespace {

Element parse_element_at(const Monoid& m, Cursor& c, char stop) {
  std::size_t start = c.pos();
  auto body = c.take_until(stop);
  try {
    return m.parse(body);
  } catch (const ParseError& e) {
    // Re-anchor the position to the full input.
    std::string msg = e.what();
    auto colon = msg.find(": ");
    throw ParseError(colon == std::string::npos ? msg : msg.substr(colon + 2), start + e.position());
  }
}

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

// rational := digits ["/" digits]
Rational parse_unsigned_rational(Cursor& c) {
  std::string digits;
  while (is_digit(c.peek())) {
    digits += c.peek();
    c.consume(c.peek());
  }
  if (digits.empty()) c.error("expected a number");
  if (c.consume('/')) {
    std::string den;
    while (is_digit(c.peek())) {
      den += c.peek();
      c.consume(c.peek());
    }
    if (den.empty() || den.find_first_not_of('0') == std::string::npos) c.error("bad denominator");
    digits += "/" + den;
  }
  Rational q(digits, 10);
  q.canonicalize();
  return q;
}

// Real or imaginary number without sign: "3/2", "i", "2i".
Scalar parse_unsigned_number(Cursor& c) {
  if (c.consume('i')) return Scalar(0, 1);
  Rational q = parse_unsigned_rational(c);
  if (c.consume('i')) return Scalar(0, q);
  return Scalar(q);
}

Scalar parse_scalar_at(Cursor& c) {
  if (c.consume('(')) {
    c.skip_space();
    bool neg = c.consume('-');
    if (!neg) c.consume('+');
    c.skip_space();
    Scalar s = parse_unsigned_number(c);
    if (neg) s = -s;
    c.skip_space();
    while (c.peek() == '+' || c.peek() == '-') {
      bool minus = c.peek() == '-';
      c.consume(c.peek());
      c.skip_space();
      Scalar t = parse_unsigned_number(c);
      s += minus ? -t : t;
      c.skip_space();
    }
    c.expect(')');
    return s;
  }
  return parse_unsigned_number(c);
}

}  // namespace

Monomial parse_monomial_at(const Monoid& m, Cursor& c) {
  c.skip_space();
  c.expect('V');
  c.skip_space();
  c.expect('(');
  Element s = parse_element_at(m, c, ',');
  c.expect(',');
  Element t = parse_element_at(m, c, ')');
  c.expect(')');
  return Monomial(std::move(s), std::move(t));
}

Scalar parse_scalar(std::string_view text) {
  Cursor c(text);
  c.skip_space();
  bool neg = c.consume('-');
  c.skip_space();
  Scalar s = parse_scalar_at(c);
  c.skip_space();
  c.expect_end();
  return neg ? -s : s;
}

AlgebraElement parse_algebra(const MonoidPtr& m, std::string_view text) {
  AlgebraElement out(m);
  Cursor c(text);
  c.skip_space();
  if (c.at_end()) c.error("empty expression");
  bool first = true;
  while (!c.at_end()) {
    Scalar sign = 1;
    if (c.consume('-')) {
      sign = -1;
    } else if (!c.consume('+') && !first) {
      c.error("expected '+' or '-'");
    }
    first = false;
    c.skip_space();
    Scalar coeff = 1;
    bool has_coeff = false;
    if (c.peek() != 'V') {
      coeff = parse_scalar_at(c);
      has_coeff = true;
      c.skip_space();
      if (c.consume('*')) c.skip_space();
    }
    if (c.peek() == 'V') {
      out.add_term(parse_monomial_at(*m, c), sign * coeff);
    } else if (has_coeff) {
      out.add_term(Monomial(m->identity(), m->identity()), sign * coeff);
    } else {
      c.error("expected a term");
    }
    c.skip_space();
  }
  return out;
}

std::vector<Element> parse_element_list(const Monoid& m, std::string_view text) {
  Cursor c(text);
  c.skip_space();
  bool braced = c.consume('{');
  std::vector<Element> out;
  c.skip_space();
  if (braced && c.consume('}')) return out;
  while (true) {
    out.push_back(parse_element_at(m, c, ','));
    if (!c.consume(',')) break;
  }
  if (braced) c.expect('}');
  c.skip_space();
  c.expect_end();
  return out;
}

}  // namespace qlat

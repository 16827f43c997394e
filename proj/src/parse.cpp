#include "stablegb/parse.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "stablegb/error.hpp"

namespace stablegb {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingContext& ring, int line, int column_offset)
      : text_(text), ring_(ring), line_(line), offset_(column_offset) {}

  Polynomial parse() {
    std::vector<Monomial> monomials;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Monomial m = parse_monomial();
      if (sign < 0) m.coeff = -m.coeff;
      monomials.push_back(std::move(m));
      first = false;
      skip_space();
    }
    return Polynomial(ring_.n(), std::move(monomials));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  BigInt parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial parse_monomial() {
    Rational coeff(1);
    std::vector<int> exps(static_cast<std::size_t>(ring_.n()), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        BigInt num = parse_integer();
        BigInt den = 1;
        skip_space();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_space();
          den = parse_integer();
          if (den == 0) fail("zero denominator");
        }
        Rational c(num, den);
        c.canonicalize();
        coeff *= c;
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        int index = ring_.index_of(name);
        if (index < 0) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          BigInt big = parse_integer();
          if (big > 0xFFFF) fail("exponent too large");
          e = static_cast<int>(big.get_si());
        }
        exps[static_cast<std::size_t>(index)] += e;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    return {coeff, Term(ring_.n(), exps)};
  }

  std::string_view text_;
  const RingContext& ring_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring, int line) {
  return PolynomialParser(text, ring, line, 0).parse();
}

IdealInput parse_ideal(std::string_view text) {
  std::optional<RingContext> ring;
  std::vector<Polynomial> generators;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (is_blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (!ring) {
      auto colon = line.find(':');
      std::size_t first = line.find_first_not_of(" \t\r");
      if (colon == std::string_view::npos || line.substr(first, colon - first) != "ring") {
        throw ParseError("expected 'ring: <variables>'", line_no, static_cast<int>(first) + 1);
      }
      std::vector<std::string> names;
      std::istringstream in{std::string(line.substr(colon + 1))};
      for (std::string name; in >> name;) names.push_back(name);
      if (names.empty()) throw ParseError("ring declares no variables", line_no, static_cast<int>(colon) + 2);
      try {
        ring.emplace(std::move(names));
      } catch (const UsageError& e) {
        throw ParseError(e.what(), line_no, static_cast<int>(colon) + 2);
      }
    } else {
      Polynomial f = PolynomialParser(line, *ring, line_no, 0).parse();
      if (f.is_zero()) throw ParseError("zero generator", line_no, 1);
      generators.push_back(std::move(f));
    }
    if (end == text.size()) break;
  }
  if (!ring) throw ParseError("missing ring declaration", line_no, 1);
  return {*ring, std::move(generators)};
}

IdealInput read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal(buffer.str());
}

std::string format_rational(const Rational& c) { return c.get_str(); }

std::string format_term(const Term& t, const RingContext& ring) {
  if (t.is_one()) return "1";
  std::string out;
  for (int i = 0; i < t.arity(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

std::string format_polynomial(const Polynomial& f, const RingContext& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : f.terms()) {
    Rational c = m.coeff;
    if (first) {
      if (sgn(c) < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (m.term.is_one()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += format_term(m.term, ring);
    } else {
      out += format_rational(c) + '*' + format_term(m.term, ring);
    }
    first = false;
  }
  return out;
}

std::string format_ideal(const IdealInput& ideal) {
  std::string out = "ring:";
  for (const auto& name : ideal.ring.names()) out += ' ' + name;
  out += '\n';
  for (const auto& f : ideal.generators) out += format_polynomial(f, ideal.ring) + '\n';
  return out;
}

}  // namespace stablegb

#include "mkb/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace mkb {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + what);
  }

  std::string read_digits() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected digits");
    std::string d = s.substr(i, j - i);
    i = j;
    return d;
  }

  int read_exponent() {
    if (peek() != '^') return 1;
    ++i;
    return std::stoi(read_digits());
  }
};

struct Factor {
  enum Kind { Number, Var, Param } kind;
  Rational num;
  int var = 0;
  Sym sym = 0;
  int exp = 1;
};

Factor read_factor(Cursor& c) {
  Factor f;
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    std::string num = c.read_digits();
    if (c.peek() == '/') {
      ++c.i;
      num += "/" + c.read_digits();
    }
    f.kind = Factor::Number;
    f.num = rational_from_string(num);
    f.exp = c.read_exponent();
    return f;
  }
  if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
    // x followed by digits is a variable and stops at the first non-digit,
    // so x1x4 reads as x1*x4; anything else is a parameter symbol
    if (ch == 'x' && c.i + 1 < c.s.size() &&
        std::isdigit(static_cast<unsigned char>(c.s[c.i + 1]))) {
      ++c.i;
      f.kind = Factor::Var;
      f.var = std::stoi(c.read_digits());
      f.exp = c.read_exponent();
      return f;
    }
    size_t j = c.i;
    while (j < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[j])) || c.s[j] == '_'))
      ++j;
    f.kind = Factor::Param;
    f.sym = intern(c.s.substr(c.i, j - c.i));
    c.i = j;
    f.exp = c.read_exponent();
    return f;
  }
  c.fail(std::string("unexpected character '") + ch + "'");
}

}  // namespace

PPoly parse_poly(const std::string& text, int nvars) {
  Cursor c{text};
  std::vector<PPoly::Entry> entries;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coef(sign);
    Term mono(nvars);
    PMono params;
    bool saw_factor = false;
    for (;;) {
      char nx = c.peek();
      if (nx == '\0' || nx == '+' || nx == '-') break;
      if (nx == '*') {
        ++c.i;
        continue;
      }
      Factor f = read_factor(c);
      saw_factor = true;
      switch (f.kind) {
        case Factor::Number:
          for (int k = 0; k < f.exp; ++k) coef *= f.num;
          break;
        case Factor::Var:
          if (f.var > nvars)
            c.fail("variable x" + std::to_string(f.var) + " outside ambient x1..x" +
                   std::to_string(nvars));
          mono.set_exp(f.var, mono.exp(f.var) + f.exp);
          break;
        case Factor::Param:
          params = pmono_mul(params, PMono{{f.sym, static_cast<std::uint32_t>(f.exp)}});
          break;
      }
    }
    if (!saw_factor) c.fail("empty term");
    ParamPoly cp;
    if (!is_zero(coef)) cp = ParamPoly(Rational(1)).times(params, coef);
    entries.emplace_back(mono, cp);
  }
  return PPoly::from_entries(nvars, std::move(entries));
}

QPoly parse_rational_poly(const std::string& text, int nvars) {
  return to_rational_poly(parse_poly(text, nvars));
}

static std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == '\n') {
      if (cur.find_first_not_of(" \t\r") != std::string::npos) parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (cur.find_first_not_of(" \t\r") != std::string::npos) parts.push_back(cur);
  return parts;
}

std::vector<PPoly> parse_poly_list(const std::string& text, int nvars) {
  std::vector<PPoly> out;
  for (auto& part : split_list(text)) out.push_back(parse_poly(part, nvars));
  return out;
}

std::vector<QPoly> parse_rational_poly_list(const std::string& text, int nvars) {
  std::vector<QPoly> out;
  for (auto& part : split_list(text)) out.push_back(parse_rational_poly(part, nvars));
  return out;
}

Term parse_term(const std::string& text, int nvars) {
  QPoly p = parse_rational_poly(text, nvars);
  if (p.term_count() != 1 || p.lead().second != 1)
    throw std::invalid_argument("not a monic term: " + text);
  return p.lead().first;
}

}  // namespace mkb

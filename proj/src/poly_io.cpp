#include "fourfold/poly_io.hpp"

#include <cctype>

#include "fourfold/error.hpp"

namespace fourfold {

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
  char take() {
    skip_ws();
    return s[i++];
  }
};

std::string read_digits(Cursor& c) {
  c.skip_ws();
  std::string d;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) d.push_back(c.s[c.i++]);
  return d;
}

}  // namespace

QPoly parse_poly(const std::string& text, int nvars) {
  check(nvars >= 1 && nvars <= kMaxVars, Err::Usage, "parse_poly: bad variable count");
  QPoly f(nvars);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      while (!c.done() && (c.peek() == '+' || c.peek() == '-'))
        if (c.take() == '-') sign = -sign;
    } else {
      check(first, Err::Usage, "parse_poly: expected '+' or '-' between terms");
    }
    first = false;

    Rat coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string num = read_digits(c);
      std::string den;
      if (c.peek() == '/') {
        c.take();
        den = read_digits(c);
        check(!den.empty(), Err::Usage, "parse_poly: missing denominator");
      }
      auto r = rat_parse(den.empty() ? num : num + "/" + den);
      check(r.has_value() && (den.empty() || *r != 0 || num == "0"), Err::Usage,
            "parse_poly: bad coefficient");
      coeff = *r;
      saw_coeff = true;
    }

    Mono m;
    bool saw_var = false;
    while (true) {
      if (c.peek() == '*') {
        c.take();
        continue;
      }
      if (c.peek() != 'x') break;
      c.take();
      std::string idx = read_digits(c);
      check(idx.size() == 1, Err::Usage, "parse_poly: bad variable name");
      int v = idx[0] - '0';
      check(v >= 0 && v < nvars, Err::Usage, "parse_poly: variable out of range");
      int k = 1;
      if (c.peek() == '^') {
        c.take();
        std::string e = read_digits(c);
        check(!e.empty() && e.size() <= 2, Err::Usage, "parse_poly: bad exponent");
        k = std::stoi(e);
      }
      int s = m.e[v] + k;
      check(s < 256, Err::Usage, "parse_poly: exponent too large");
      m.e[v] = static_cast<uint8_t>(s);
      saw_var = true;
    }
    check(saw_coeff || saw_var, Err::Usage, "parse_poly: empty term");
    f.add_term(m, sign < 0 ? Rat(-coeff) : coeff);
  }
  return f;
}

std::string mono_str(const Mono& m) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (m.e[i] > 1) out += "^" + std::to_string(static_cast<int>(m.e[i]));
  }
  if (out.empty()) out = "1";
  return out;
}

namespace {

void append_term(std::string& out, const std::string& coeff, bool neg, const Mono& m) {
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  bool trivial_coeff = coeff == "1";
  if (!trivial_coeff || m.is_one()) out += coeff;
  if (!m.is_one()) {
    if (!trivial_coeff) out += "*";
    out += mono_str(m);
  }
}

}  // namespace

std::string poly_str(const QPoly& f) {
  std::string out;
  for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
    Rat c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    append_term(out, rat_str(c), neg, it->first);
  }
  return out.empty() ? "0" : out;
}

std::string f2poly_str(const F2Poly& f) {
  std::string out;
  for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) append_term(out, "1", false, *it);
  return out.empty() ? "0" : out;
}

}  // namespace fourfold

#include "schubert/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schubert {

std::string var_name(VarSpace vs, int i) {
  switch (vs.tag) {
    case 'a':
      return "a" + std::to_string(i);
    case 'l':
      return "l" + std::to_string(i);
    case 'h':
      return "h" + std::to_string(i);
    case 'x':  // auxiliary pair used by the Hecke identity checks
      return i == 1 ? "x" : "y";
    case 'd':
      return "d" + std::to_string(i);
    default:
      return std::string(1, vs.tag) + std::to_string(i);
  }
}

std::string to_string(const Rat& c) { return c.get_str(); }

namespace {

// Descending graded lex: higher total degree first, then larger exponent
// vector lexicographically.
template <class Vec>
bool grlex_desc(const Vec& a, const Vec& b) {
  long da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da > db;
  return a > b;
}

void append_coeff(std::ostream& os, const Rat& c, bool leading, bool with_monomial) {
  Rat a = c < 0 ? Rat(-c) : c;
  if (leading) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (!with_monomial) {
    os << a.get_str();
  } else if (a != 1) {
    os << a.get_str() << "*";
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Expo, Rat>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](auto& x, auto& y) { return grlex_desc(x.first, y.first); });
  std::ostringstream os;
  bool leading = true;
  for (auto& [e, c] : ts) {
    bool has_vars = false;
    for (int v : e) has_vars |= v != 0;
    append_coeff(os, c, leading, has_vars);
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << "*";
      os << var_name(p.varspace(), (int)i + 1);
      if (e[i] > 1) os << "^" << e[i];
      first = false;
    }
    leading = false;
  }
  return os.str();
}

std::string format_exponent(VarSpace vs, const Coords& mu) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    long a = mu[i] < 0 ? -mu[i] : mu[i];
    if (first) {
      if (mu[i] < 0) os << "-";
    } else {
      os << (mu[i] < 0 ? "-" : "+");
    }
    if (a != 1) os << a;
    os << var_name(vs, (int)i + 1);
    first = false;
  }
  return os.str();
}

std::string to_string(const Char& c) {
  if (c.is_zero()) return "0";
  std::vector<std::pair<Coords, Rat>> ts(c.terms().begin(), c.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](auto& x, auto& y) { return grlex_desc(x.first, y.first); });
  std::ostringstream os;
  bool leading = true;
  for (auto& [mu, coeff] : ts) {
    bool is_exp = !coords_zero(mu);
    append_coeff(os, coeff, leading, is_exp);
    if (is_exp) os << "e^{" << format_exponent(c.varspace(), mu) << "}";
    leading = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= s.size()) throw error("unexpected end of expression");
    return s[pos++];
  }
  void expect(char c) {
    if (take() != c) throw error("malformed expression near position " + std::to_string(pos));
  }
};

long parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  while (c.pos < c.s.size() && std::isdigit((unsigned char)c.s[c.pos])) ++c.pos;
  if (c.pos == start) throw error("expected integer");
  return std::stol(c.s.substr(start, c.pos - start));
}

Rat parse_rational(Cursor& c) {
  long num = parse_integer(c);
  if (c.peek() == '/') {
    c.take();
    long den = parse_integer(c);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  return Rat(num);
}

// Matches a variable of the given space, returning its 1-based index.
int parse_variable(Cursor& c, VarSpace vs) {
  c.skip_ws();
  for (int i = 1; i <= vs.count; ++i) {
    const std::string name = var_name(vs, i);
    if (c.s.compare(c.pos, name.size(), name) == 0) {
      // Avoid matching "a1" against "a12".
      size_t end = c.pos + name.size();
      if (end < c.s.size() && std::isdigit((unsigned char)c.s[end])) continue;
      c.pos = end;
      return i;
    }
  }
  throw error("unknown variable near position " + std::to_string(c.pos));
}

Coords parse_exponent_body(Cursor& c, VarSpace vs) {
  Coords mu(vs.count, 0);
  bool first = true;
  while (true) {
    c.skip_ws();
    long sign = 1;
    if (c.peek() == '+') {
      c.take();
    } else if (c.peek() == '-') {
      c.take();
      sign = -1;
    } else if (!first) {
      break;
    }
    long mult = 1;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit((unsigned char)c.s[c.pos])) mult = parse_integer(c);
    int var = parse_variable(c, vs);
    mu[var - 1] += sign * mult;
    first = false;
    if (c.peek() == '}') break;
  }
  return mu;
}

}  // namespace

Poly parse_poly(const std::string& text, VarSpace vs) {
  Cursor c{text};
  Poly out(vs);
  if (c.eof()) throw error("empty polynomial");
  bool first = true;
  while (!c.eof()) {
    Rat sign(1);
    if (c.peek() == '+') {
      c.take();
    } else if (c.peek() == '-') {
      c.take();
      sign = -1;
    } else if (!first) {
      throw error("expected + or - between terms");
    }
    Rat coeff(1);
    bool saw_coeff = false;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit((unsigned char)c.s[c.pos])) {
      coeff = parse_rational(c);
      saw_coeff = true;
    }
    Expo e(vs.count, 0);
    bool has_vars = false;
    if (!saw_coeff || c.peek() == '*') {
      if (saw_coeff) c.take();  // '*'
      while (true) {
        int var = parse_variable(c, vs);
        int pw = 1;
        if (c.peek() == '^') {
          c.take();
          pw = (int)parse_integer(c);
        }
        e[var - 1] += pw;
        has_vars = true;
        if (c.peek() == '*') {
          c.take();
          continue;
        }
        break;
      }
    }
    (void)has_vars;
    out.add_term(e, sign * coeff);
    first = false;
  }
  return out;
}

Char parse_char(const std::string& text, VarSpace vs) {
  Cursor c{text};
  Char out(vs);
  if (c.eof()) throw error("empty character");
  bool first = true;
  while (!c.eof()) {
    Rat sign(1);
    if (c.peek() == '+') {
      c.take();
    } else if (c.peek() == '-') {
      c.take();
      sign = -1;
    } else if (!first) {
      throw error("expected + or - between terms");
    }
    Rat coeff(1);
    bool saw_coeff = false;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit((unsigned char)c.s[c.pos])) {
      coeff = parse_rational(c);
      saw_coeff = true;
    }
    Coords mu(vs.count, 0);
    if (c.peek() == '*' || c.peek() == 'e') {
      if (saw_coeff && c.peek() == '*') c.take();
      c.expect('e');
      c.expect('^');
      c.expect('{');
      mu = parse_exponent_body(c, vs);
      c.expect('}');
    }
    out.add_term(mu, sign * coeff);
    first = false;
  }
  return out;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = token.find_last_not_of(" \t");
    out.push_back(std::stoi(token.substr(a, b - a + 1)));
  }
  return out;
}

}  // namespace schubert

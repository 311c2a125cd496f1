#include "opdef/polynomial.hpp"

#include <cctype>
#include <functional>

namespace opdef {

unsigned degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned max_degree) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  // exponents with fixed total degree d, filled left to right so g_1-heavy come first
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      fill(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  for (unsigned d = 0; d <= max_degree; ++d) {
    if (n == 0) {
      if (d == 0) out.push_back(cur);
      continue;
    }
    fill(0, d);
  }
  return out;
}

Polynomial Polynomial::monomial(const Monomial& m, Scalar c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

unsigned Polynomial::low_degree() const { return terms_.empty() ? 0 : degree(terms_.begin()->first); }

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars_) throw InputError("monomial has the wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_)
    if (degree(m) <= max_degree) p.terms_.emplace(m, c);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  if (r.nvars_ == 0 && r.terms_.empty()) r.nvars_ = b.nvars_;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Scalar(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial operator*(const Scalar& s, const Polynomial& a) {
  Polynomial r(a.nvars_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
  return r;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p(names_.size());
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Scalar coeff = 1;
      Monomial m(names_.size(), 0);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          factor(m);
        }
      } else {
        factor(m);
      }
      skip();
      while (peek() == '*') {
        ++pos_;
        skip();
        factor(m);
        skip();
      }
      p.add_term(m, sign * coeff);
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  Scalar number() {
    std::string t = digits();
    if (peek() == '/') {
      ++pos_;
      t += "/" + digits();
    }
    return parse_scalar(t);
  }
  void factor(Monomial& m) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) fail("expected a variable");
    std::size_t v = 0;
    while (v < names_.size() && names_[v] != name) ++v;
    if (v == names_.size()) fail("unknown variable '" + name + "'");
    skip();
    unsigned e = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      e = static_cast<unsigned>(std::stoul(digits()));
    }
    m[v] += e;
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).parse();
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const Scalar a = neg ? Scalar(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = degree(m) == 0;
    if (a != 1 || unit) {
      out += to_string(a);
      if (!unit) out += "*";
    }
    if (!unit) out += monomial_string(m, names);
  }
  return out;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("g" + std::to_string(i + 1));
  return out;
}

}  // namespace opdef

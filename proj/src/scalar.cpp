#include "opdef/scalar.hpp"

#include <cctype>

namespace opdef {

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw InputError("malformed rational literal '" + s + "'");
    return Scalar(mpz_class(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Scalar q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& a) {
  Vector r(a);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

}  // namespace opdef

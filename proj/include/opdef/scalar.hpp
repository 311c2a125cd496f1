#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opdef {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (reduced, positive denominator) after each arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Malformed user input: bad shapes, unparsable files, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that violates its precondition
/// (e.g. cohomology of something that is not a P-algebra).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& a);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

}  // namespace opdef

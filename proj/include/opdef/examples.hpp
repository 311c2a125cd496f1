#pragma once

#include <cstddef>
#include <string>

#include "opdef/palgebra.hpp"

namespace opdef::examples {

/// Algebra whose E-family is generated by one product m (n x n^2): for a
/// one-dimensional E the family is {m}; for the regular S_2-module it is
/// {m, m^op}. Other generator modules are rejected.
PAlgebra from_product(const OperadPresentation& operad, const Matrix& m);

/// n x n^2 product matrix with m(v_i, v_j) = v_l set by `entries` {i, j, l, coeff}.
struct Entry {
  std::size_t i, j, l;
  int coeff;
};
Matrix product(std::size_t n, std::initializer_list<Entry> entries);

PAlgebra sl2();                           // Lie: [h,e]=2e, [h,f]=-2f, [e,f]=h
PAlgebra heisenberg();                    // Lie: [x,y]=z
PAlgebra abelian(const std::string& operad, std::size_t n);
PAlgebra truncated_polynomial(const std::string& operad, std::size_t n);  // k[t]/(t^n), Ass or Com
PAlgebra upper_triangular();              // Ass: 2x2 upper triangular matrices
PAlgebra leibniz_nilpotent();             // Leib: [x,x]=y on span(x, y)

/// Transported structure a'(x, y) = P^-1 a(Px, Py); P must be invertible.
PAlgebra change_basis(const PAlgebra& a, const Matrix& p);

}  // namespace opdef::examples

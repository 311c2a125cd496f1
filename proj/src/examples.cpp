#include "opdef/examples.hpp"

namespace opdef::examples {

namespace {

Matrix opposite(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix out(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out(l, i * n + j) = m(l, j * n + i);
  return out;
}

}  // namespace

PAlgebra from_product(const OperadPresentation& operad, const Matrix& m) {
  const std::size_t d = operad.generators().dim();
  if (d == 1) return PAlgebra(operad, {m});
  if (d == 2 && operad.generators().generators().front() == RightSModule::regular(2).generators().front())
    return PAlgebra(operad, {m, opposite(m)});
  throw InputError("from_product needs a one-dimensional or regular generator module");
}

Matrix product(std::size_t n, std::initializer_list<Entry> entries) {
  Matrix m(n, n * n);
  for (const auto& e : entries) m(e.l, e.i * n + e.j) += e.coeff;
  return m;
}

PAlgebra sl2() {
  // basis h, e, f
  return from_product(preset("Lie"), product(3, {{0, 1, 1, 2},
                                                 {1, 0, 1, -2},
                                                 {0, 2, 2, -2},
                                                 {2, 0, 2, 2},
                                                 {1, 2, 0, 1},
                                                 {2, 1, 0, -1}}));
}

PAlgebra heisenberg() { return from_product(preset("Lie"), product(3, {{0, 1, 2, 1}, {1, 0, 2, -1}})); }

PAlgebra abelian(const std::string& operad, std::size_t n) {
  const auto p = preset(operad);
  return PAlgebra(p, zero_bilinear(p.generators().dim(), n));
}

PAlgebra truncated_polynomial(const std::string& operad, std::size_t n) {
  // basis 1, t, .., t^{n-1}
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) m(i + j, i * n + j) = 1;
  return from_product(preset(operad), m);
}

PAlgebra upper_triangular() {
  // basis E11, E12, E22
  return from_product(preset("Ass"), product(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}));
}

PAlgebra leibniz_nilpotent() { return from_product(preset("Leib"), product(2, {{0, 0, 1, 1}})); }

PAlgebra change_basis(const PAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  LinearSolver inv(p);
  if (p.rows() != n || p.cols() != n || inv.rank() != n) throw InputError("basis change must be an invertible dim x dim matrix");
  Bilinear out;
  for (const auto& m : a.structure()) {
    Matrix t(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector v = *inv.solve(apply_bilinear(m, p.column(i), p.column(j)));
        for (std::size_t l = 0; l < n; ++l) t(l, i * n + j) = v[l];
      }
    out.push_back(std::move(t));
  }
  return PAlgebra(a.operad(), std::move(out));
}

}  // namespace opdef::examples

#include "opdef/palgebra.hpp"

#include <utility>

namespace opdef {

Vector apply_bilinear(const Matrix& op, const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out(op.rows());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t l = 0; l < op.rows(); ++l) {
        const Scalar& e = op(l, i * n + j);
        if (sgn(e) != 0) out[l] += c * e;
      }
    }
  }
  return out;
}

bool is_equivariant(const RightSModule& e, const Bilinear& f) {
  const Matrix& t = e.action(Perm::adjacent(2, 0));
  const std::size_t d = e.dim();
  if (f.size() != d) return false;
  const std::size_t n = d == 0 ? 0 : f[0].rows();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs = 0;
          for (std::size_t c = 0; c < d; ++c)
            if (sgn(t(c, k)) != 0) lhs += t(c, k) * f[c](l, i * n + j);
          if (lhs != f[k](l, j * n + i)) return false;
        }
  return true;
}

Bilinear zero_bilinear(std::size_t edim, std::size_t n) { return Bilinear(edim, Matrix(n, n * n)); }

PAlgebra::PAlgebra(OperadPresentation operad, Bilinear structure)
    : operad_(std::move(operad)), dim_(0), structure_(std::move(structure)) {
  const std::size_t d = operad_.generators().dim();
  if (structure_.size() != d) throw InputError("algebra needs one structure matrix per generator of E");
  dim_ = structure_.front().rows();
  for (const auto& m : structure_)
    if (m.rows() != dim_ || m.cols() != dim_ * dim_) throw InputError("structure matrices must be dim x dim^2");
  if (!is_equivariant(operad_.generators(), structure_))
    throw InputError("structure constants are not S_2-equivariant for operad '" + operad_.name() + "'");
}

PAlgebra PAlgebra::from_constants(OperadPresentation operad,
                                  const std::vector<std::vector<std::vector<Vector>>>& c) {
  Bilinear s;
  for (const auto& ck : c) {
    const std::size_t n = ck.size();
    Matrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ck[i].size() != n) throw InputError("structure constants must be a dim x dim x dim array");
      for (std::size_t j = 0; j < n; ++j) {
        if (ck[i][j].size() != n) throw InputError("structure constants must be a dim x dim x dim array");
        for (std::size_t l = 0; l < n; ++l) m(l, i * n + j) = ck[i][j][l];
      }
    }
    s.push_back(std::move(m));
  }
  if (s.empty()) throw InputError("structure constants are empty");
  return PAlgebra(std::move(operad), std::move(s));
}

Vector compose_at(const FreeArity3& f3, const Bilinear& outer, const Bilinear& inner, const Vector& tree_coords,
                  std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = outer.front().rows();
  const std::size_t idx[3] = {i, j, k};
  Vector out(n);
  for (std::size_t t = 0; t < tree_coords.size(); ++t) {
    if (sgn(tree_coords[t]) == 0) continue;
    const TreeTerm term = f3.tree_term(t);
    std::size_t xy[2];
    std::size_t c = 0;
    for (std::size_t p = 0; p < 3; ++p)
      if (p != term.free_slot) xy[c++] = p;
    const Matrix& in = inner[term.inner];
    const Matrix& op = outer[term.outer];
    const std::size_t col = idx[xy[0]] * n + idx[xy[1]];
    const std::size_t z = idx[term.free_slot];
    for (std::size_t u = 0; u < n; ++u) {
      const Scalar& w = in(u, col);
      if (sgn(w) == 0) continue;
      const Scalar cw = tree_coords[t] * w;
      for (std::size_t l = 0; l < n; ++l)
        if (sgn(op(l, u * n + z)) != 0) out[l] += cw * op(l, u * n + z);
    }
  }
  return out;
}

Matrix eval3(const PAlgebra& a, const Vector& x) {
  const auto& f3 = a.operad().free3();
  if (x.size() != f3.dim()) throw InputError("eval3: vector is not in F(E)(3)");
  const std::size_t n = a.dim();
  const Vector tree = f3.to_tree(x);
  Matrix out(n, n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = compose_at(f3, a.structure(), a.structure(), tree, i, j, k);
        for (std::size_t l = 0; l < n; ++l) out(l, (i * n + j) * n + k) = v[l];
      }
  return out;
}

AlgebraCheck check_algebra(const PAlgebra& a) {
  AlgebraCheck report;
  report.equivariance_ok = is_equivariant(a.operad().generators(), a.structure());
  const auto& rels = a.operad().relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    Matrix v = eval3(a, rels[r]);
    if (!v.is_zero()) report.violations.push_back({r, std::move(v)});
  }
  return report;
}

}  // namespace opdef

#include "opdef/cohomology.hpp"

#include <algorithm>
#include <utility>

namespace opdef {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

EquivariantHom::EquivariantHom(RightSModule module, std::size_t n) : module_(std::move(module)), n_(n) {
  const std::size_t k = module_.arity();
  const std::size_t m = module_.dim();
  tuple_count_ = ipow(n_, k);
  const auto perms = all_perms(k);
  orbit_of_.resize(tuple_count_);
  for (std::size_t t = 0; t < tuple_count_; ++t) {
    const Tuple x = tuple_at(t);
    Tuple sorted = x;
    std::sort(sorted.begin(), sorted.end());
    auto it = rep_index_.find(sorted);
    if (it == rep_index_.end()) {
      Rep rep{sorted, {}, {}, 0};
      std::vector<Vector> constraints;
      const Matrix id = Matrix::identity(m);
      for (const auto& h : perms) {
        if (act_on_tuple(h, sorted) != sorted) continue;
        const Matrix diff = module_.action(h) - id;
        for (std::size_t c = 0; c < m; ++c) constraints.push_back(diff.column(c));
      }
      const Matrix cm = Matrix::from_rows(constraints, m);
      const Rref rr = rref(cm);
      std::vector<bool> pivot(m, false);
      for (auto p : rr.pivots) pivot[p] = true;
      for (std::size_t c = 0; c < m; ++c)
        if (!pivot[c]) rep.free.push_back(c);
      rep.basis = kernel_basis(cm);
      rep.offset = dim_;
      dim_ += rep.free.size() * n_;
      it = rep_index_.emplace(sorted, reps_.size()).first;
      reps_.push_back(std::move(rep));
    }
    for (const auto& s : perms)
      if (act_on_tuple(s, sorted) == x) {
        orbit_of_[t] = Orbit{it->second, s};
        break;
      }
  }
}

std::size_t EquivariantHom::tuple_index(const Tuple& t) const {
  std::size_t idx = 0;
  for (auto v : t) idx = idx * n_ + v;
  return idx;
}

EquivariantHom::Tuple EquivariantHom::tuple_at(std::size_t index) const {
  Tuple t(module_.arity());
  for (std::size_t p = t.size(); p-- > 0;) {
    t[p] = index % n_;
    index /= n_;
  }
  return t;
}

EquivariantHom::Table EquivariantHom::expand(const Vector& coords) const {
  if (coords.size() != dim_) throw InputError("cochain has the wrong number of coordinates");
  const std::size_t m = module_.dim();
  // values at representatives: rep -> (module index j, output l)
  std::vector<Matrix> at_rep;
  for (const auto& rep : reps_) {
    Matrix v(m, n_);
    for (std::size_t l = 0; l < n_; ++l)
      for (std::size_t p = 0; p < rep.free.size(); ++p) {
        const Scalar& c = coords[rep.offset + l * rep.free.size() + p];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) v(j, l) += c * rep.basis[p][j];
      }
    at_rep.push_back(std::move(v));
  }
  Table table(m, Matrix(n_, tuple_count_));
  for (std::size_t t = 0; t < tuple_count_; ++t) {
    const Orbit& o = orbit_of_[t];
    const Matrix& a = module_.action(o.sigma);
    const Matrix& v = at_rep[o.rep];
    // f(r_j, s . x0) = f(r_j . s, x0) = sum_j' A(s)[j', j] f(r_j', x0)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t jp = 0; jp < m; ++jp) {
        const Scalar& w = a(jp, j);
        if (sgn(w) == 0) continue;
        for (std::size_t l = 0; l < n_; ++l)
          if (sgn(v(jp, l)) != 0) table[j](l, t) += w * v(jp, l);
      }
  }
  return table;
}

Vector EquivariantHom::coordinates_from(const std::function<Matrix(const Tuple&)>& value) const {
  Vector out(dim_);
  for (const auto& rep : reps_) {
    if (rep.free.empty()) continue;
    const Matrix v = value(rep.tuple);
    for (std::size_t l = 0; l < n_; ++l)
      for (std::size_t p = 0; p < rep.free.size(); ++p) out[rep.offset + l * rep.free.size() + p] = v(rep.free[p], l);
  }
  return out;
}

Vector EquivariantHom::coordinates(const Table& table) const {
  const std::size_t m = module_.dim();
  return coordinates_from([&](const Tuple& x) {
    Matrix v(m, n_);
    const std::size_t t = tuple_index(x);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < n_; ++l) v(j, l) = table[j](l, t);
    return v;
  });
}

bool EquivariantHom::is_equivariant(const Table& table) const {
  if (table.size() != module_.dim()) return false;
  return expand(coordinates(table)) == table;
}

CochainComplex::CochainComplex(PAlgebra algebra)
    : algebra_(std::move(algebra)),
      valid_(check_algebra(algebra_).ok()),
      c2_(algebra_.operad().generators(), algebra_.dim()),
      c3_(algebra_.operad().relation_action(), algebra_.dim()),
      d2_solver_(Matrix()) {
  const std::size_t n = algebra_.dim();
  for (const auto& r : algebra_.operad().relations()) relation_trees_.push_back(algebra_.operad().free3().to_tree(r));
  pi_ = c2_.coordinates(algebra_.structure());

  std::vector<Vector> cols;
  for (std::size_t e = 0; e < n * n; ++e) cols.push_back(d1(cochain1(unit_vector(n * n, e), n)));
  d1_ = Matrix::from_columns(cols, c2_.dim());
  cols.clear();
  for (std::size_t b = 0; b < c2_.dim(); ++b) cols.push_back(d2(unit_vector(c2_.dim(), b)));
  d2_ = Matrix::from_columns(cols, c3_.dim());
  d2_solver_ = LinearSolver(d2_);
  coker_ = coker_projection(d2_);
}

Matrix CochainComplex::cochain1(const Vector& coords, std::size_t n) {
  if (coords.size() != n * n) throw InputError("1-cochain must have dim^2 coordinates");
  Matrix f(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) f(r, c) = coords[r * n + c];
  return f;
}

Vector CochainComplex::cochain1_coordinates(const Matrix& f) {
  Vector v;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) v.push_back(f(r, c));
  return v;
}

Vector CochainComplex::d1(const Matrix& f) const {
  const std::size_t n = algebra_.dim();
  if (f.rows() != n || f.cols() != n) throw InputError("1-cochain shape does not match the algebra");
  const Bilinear& pi = algebra_.structure();
  const std::size_t d = pi.size();
  return c2_.coordinates_from([&](const EquivariantHom::Tuple& x) {
    const Vector a1 = unit_vector(n, x[0]), a2 = unit_vector(n, x[1]);
    const Vector fa1 = f.column(x[0]), fa2 = f.column(x[1]);
    Matrix v(d, n);
    for (std::size_t k = 0; k < d; ++k) {
      Vector val = add(apply_bilinear(pi[k], fa1, a2), apply_bilinear(pi[k], a1, fa2));
      val = sub(val, f.apply(pi[k].column(x[0] * n + x[1])));
      for (std::size_t l = 0; l < n; ++l) v(k, l) = val[l];
    }
    return v;
  });
}

Vector CochainComplex::star_tables(const EquivariantHom::Table& psi, const EquivariantHom::Table& phi) const {
  const auto& f3 = algebra_.operad().free3();
  const std::size_t n = algebra_.dim();
  return c3_.coordinates_from([&](const EquivariantHom::Tuple& x) {
    Matrix v(relation_trees_.size(), n);
    for (std::size_t j = 0; j < relation_trees_.size(); ++j) {
      const Vector val = compose_at(f3, psi, phi, relation_trees_[j], x[0], x[1], x[2]);
      for (std::size_t l = 0; l < n; ++l) v(j, l) = val[l];
    }
    return v;
  });
}

Vector CochainComplex::star(const Vector& psi, const Vector& phi) const {
  return star_tables(c2_.expand(psi), c2_.expand(phi));
}

Vector CochainComplex::d2(const Vector& psi) const {
  const auto t = c2_.expand(psi);
  const auto& pi = algebra_.structure();
  return scale(Scalar(-1), add(star_tables(t, pi), star_tables(pi, t)));
}

const CohomologyReport& CochainComplex::h2() const {
  if (!valid_) throw PreconditionError("cohomology requires a valid P-algebra; run check first");
  if (report_) return *report_;
  CohomologyReport rep;
  rep.dim_c1 = dim_c1();
  rep.dim_c2 = c2_.dim();
  rep.dim_c3 = c3_.dim();
  const auto z2 = kernel_basis(d2_);
  const auto b2 = image_basis(d1_);
  rep.dim_z2 = z2.size();
  rep.dim_b2 = b2.size();
  std::vector<Vector> span = b2;
  std::size_t r = span_rank(span, c2_.dim());
  for (const auto& z : z2) {
    span.push_back(z);
    const std::size_t r2 = span_rank(span, c2_.dim());
    if (r2 > r) {
      rep.representatives.push_back(z);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  rep.dim_h2 = rep.representatives.size();
  report_ = std::move(rep);
  return *report_;
}

std::optional<Vector> CochainComplex::h2_coordinates(const Vector& cocycle) const {
  const auto& rep = h2();
  if (!is_zero(d2(cocycle))) return std::nullopt;
  if (!h2_solver_) {
    std::vector<Vector> cols = rep.representatives;
    for (std::size_t c = 0; c < d1_.cols(); ++c) cols.push_back(d1_.column(c));
    h2_solver_.emplace(Matrix::from_columns(cols, c2_.dim()));
  }
  const auto sol = h2_solver_->solve(cocycle);
  if (!sol) return std::nullopt;
  return Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(rep.dim_h2));
}

Coker3 CochainComplex::coker3(const Vector& x) const {
  if (x.size() != c3_.dim()) throw InputError("3-cochain has the wrong number of coordinates");
  Coker3 out;
  out.cls = coker_.projection.apply(x);
  out.exact = is_zero(out.cls);
  if (out.exact) out.preimage = d2_solver_.solve(x);
  return out;
}

Vector CochainComplex::coker3_section(const Vector& cls) const {
  if (cls.size() != coker_.dim()) throw InputError("class has the wrong number of coordinates");
  Vector out(c3_.dim());
  for (std::size_t j = 0; j < cls.size(); ++j) out[coker_.complement[j]] = cls[j];
  return out;
}

}  // namespace opdef

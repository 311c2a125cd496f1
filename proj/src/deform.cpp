#include "opdef/deform.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace opdef {

namespace {

using Table = EquivariantHom::Table;

bool is_zero_table(const Table& t) {
  for (const auto& m : t)
    if (!m.is_zero()) return false;
  return true;
}

std::vector<Table> expanded(const DeformationSeries& l) {
  std::vector<Table> out(l.base.dim());
  out[0] = l.complex->algebra().structure();
  for (std::size_t a = 1; a < l.base.dim(); ++a) out[a] = l.complex->c2().expand(l.table[a]);
  return out;
}

// b_x * v for a coordinate vector v.
Vector times_basis(const LocalAlgebra& base, std::size_t x, const Vector& v) {
  Vector out(base.dim());
  for (std::size_t w = 0; w < v.size(); ++w)
    if (v[w] != 0) axpy(out, v[w], base.product(x, w));
  return out;
}

void add_scaled(Matrix& a, const Scalar& s, const Matrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) += s * b(r, c);
}

bool same_base(const LocalAlgebra& a, const LocalAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

std::vector<Vector> zero_table(const DeformationSeries& l, std::size_t dim) {
  return std::vector<Vector>(dim, zero_vector(l.complex->c2().dim()));
}

// Basis of M^L for L = 1, 2, ... until it vanishes.
std::vector<std::vector<Vector>> ideal_powers(const LocalAlgebra& base) {
  std::vector<std::vector<Vector>> powers;
  std::vector<Vector> cur;
  for (std::size_t a = 1; a < base.dim(); ++a) cur.push_back(unit_vector(base.dim(), a));
  while (!cur.empty()) {
    powers.push_back(cur);
    std::vector<Vector> next;
    for (const auto& v : cur)
      for (std::size_t a = 1; a < base.dim(); ++a) next.push_back(times_basis(base, a, v));
    cur = span_basis(next, base.dim());
  }
  return powers;
}

// Composition of base-linear maps of base (x) V given by tables over the base basis.
std::vector<Matrix> compose_linear(const LocalAlgebra& base, const std::vector<Matrix>& p, const std::vector<Matrix>& q) {
  const std::size_t n = p[0].rows();
  std::vector<Matrix> out(base.dim(), Matrix(n, n));
  for (std::size_t x = 0; x < base.dim(); ++x) {
    if (p[x].is_zero()) continue;
    for (std::size_t y = 0; y < base.dim(); ++y) {
      const Vector& c = base.product(x, y);
      if (q[y].is_zero() || is_zero(c)) continue;
      const Matrix m = p[x] * q[y];
      for (std::size_t g = 0; g < base.dim(); ++g)
        if (c[g] != 0) add_scaled(out[g], c[g], m);
    }
  }
  return out;
}

// exp(x) for x with coefficients in the maximal ideal (so x is nilpotent).
std::vector<Matrix> exp_linear(const LocalAlgebra& base, const std::vector<Matrix>& x) {
  const std::size_t n = x[0].rows();
  std::vector<Matrix> out(base.dim(), Matrix(n, n));
  out[0] = Matrix::identity(n);
  std::vector<Matrix> term = out;
  for (std::size_t k = 1; k < base.dim(); ++k) {
    term = compose_linear(base, term, x);
    bool zero = true;
    for (auto& m : term) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) m(r, col) /= k;
      zero = zero && m.is_zero();
    }
    if (zero) break;
    for (std::size_t a = 0; a < base.dim(); ++a) out[a] = out[a] + term[a];
  }
  return out;
}

Polynomial monomial_poly(std::size_t n, const Monomial& m) {
  Polynomial p(n);
  p.add_term(m, 1);
  return p;
}

Monomial generator_monomial(std::size_t n, std::size_t i) {
  Monomial m(n, 0);
  m[i] = 1;
  return m;
}

}  // namespace

DeformationSeries trivial_deformation(std::shared_ptr<const CochainComplex> complex, LocalAlgebra base) {
  DeformationSeries l{std::move(complex), std::move(base), {}};
  l.table = zero_table(l, l.base.dim());
  return l;
}

void validate_shape(const DeformationSeries& l) {
  if (!l.complex) throw InputError("deformation has no algebra");
  if (l.table.size() != l.base.dim()) throw InputError("deformation table does not match the base dimension");
  for (const auto& v : l.table)
    if (v.size() != l.complex->c2().dim()) throw InputError("deformation table entry is not a 2-cochain");
  if (!is_zero(l.table[0])) throw InputError("the unit of the base must carry the undeformed structure");
}

std::vector<Vector> mc_residual(const DeformationSeries& l) {
  validate_shape(l);
  const CochainComplex& c = *l.complex;
  const std::size_t d = l.base.dim();
  const auto t = expanded(l);
  std::vector<Vector> res(d, zero_vector(c.c3().dim()));
  res[0] = c.star_tables(t[0], t[0]);
  std::vector<bool> live(d, false);
  for (std::size_t g = 1; g < d; ++g) {
    live[g] = !is_zero(l.table[g]);
    if (live[g]) res[g] = scale(Scalar(-1), c.d2(l.table[g]));
  }
  for (std::size_t a = 1; a < d; ++a) {
    if (!live[a]) continue;
    for (std::size_t b = 1; b < d; ++b) {
      if (!live[b]) continue;
      const Vector& p = l.base.product(a, b);
      if (is_zero(p)) continue;
      const Vector s = c.star_tables(t[a], t[b]);
      for (std::size_t g = 1; g < d; ++g)
        if (p[g] != 0) axpy(res[g], p[g], s);
    }
  }
  return res;
}

bool is_deformation(const DeformationSeries& l) {
  for (const auto& v : mc_residual(l))
    if (!is_zero(v)) return false;
  return true;
}

bool is_base_homomorphism(const LocalAlgebra& source, const LocalAlgebra& target, const Matrix& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim()) return false;
  if (phi.column(0) != unit_vector(target.dim(), 0)) return false;
  for (std::size_t a = 1; a < source.dim(); ++a)
    if (phi(0, a) != 0) return false;
  for (std::size_t a = 1; a < source.dim(); ++a)
    for (std::size_t b = a; b < source.dim(); ++b)
      if (phi.apply(source.product(a, b)) != target.multiply(phi.column(a), phi.column(b))) return false;
  return true;
}

DeformationSeries pushout(const Matrix& phi, const DeformationSeries& l, const LocalAlgebra& target) {
  validate_shape(l);
  if (!is_base_homomorphism(l.base, target, phi)) throw InputError("base map is not a local algebra homomorphism");
  DeformationSeries out = trivial_deformation(l.complex, target);
  for (std::size_t b = 1; b < target.dim(); ++b)
    for (std::size_t a = 1; a < l.base.dim(); ++a)
      if (phi(b, a) != 0) axpy(out.table[b], phi(b, a), l.table[a]);
  return out;
}

InfinitesimalDifferential infinitesimal_differential(const DeformationSeries& l) {
  if (!is_deformation(l)) throw PreconditionError("the differential needs a deformation");
  const CochainComplex& c = *l.complex;
  const std::size_t d = l.base.dim();
  const auto coker = coker_projection(Matrix::from_columns(l.base.ideal_square(), d));
  InfinitesimalDifferential out;
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < coker.dim(); ++j) {
    if (coker.complement[j] == 0) continue;
    out.cotangent.push_back(coker.complement[j]);
    rows.push_back(coker.projection.row(j));
  }
  out.xi = Matrix::from_rows(rows, d);
  const std::size_t h = c.h2().dim_h2;
  std::vector<Vector> cols;
  for (const auto& xi : rows) {
    Vector alpha = zero_vector(c.c2().dim());
    for (std::size_t a = 1; a < d; ++a)
      if (xi[a] != 0) axpy(alpha, xi[a], l.table[a]);
    const auto cls = c.h2_coordinates(alpha);
    if (!cls) throw std::logic_error("linear part of a deformation is not a cocycle");
    cols.push_back(*cls);
  }
  out.map = Matrix::from_columns(cols, h);
  return out;
}

DeformationSeries infinitesimal_universal(std::shared_ptr<const CochainComplex> complex) {
  const auto& rep = complex->h2();
  const std::size_t h = rep.dim_h2;
  const LocalTruncation base(h, 1, {});
  DeformationSeries l = trivial_deformation(std::move(complex), base.algebra());
  for (std::size_t i = 0; i < h; ++i) l.table[base.basis_index(generator_monomial(h, i))] = rep.representatives[i];
  return l;
}

Matrix couniversal_map(const DeformationSeries& l) {
  if (!l.base.ideal_square().empty()) throw PreconditionError("the induced base map needs an infinitesimal base");
  const auto diff = infinitesimal_differential(l);
  const std::size_t h = l.complex->h2().dim_h2;
  const LocalTruncation c1(h, 1, {});
  Matrix phi(l.base.dim(), c1.dim());
  phi(0, 0) = 1;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t col = c1.basis_index(generator_monomial(h, i));
    for (std::size_t j = 0; j < diff.cotangent.size(); ++j) phi(diff.cotangent[j], col) = diff.map(i, j);
  }
  return phi;
}

std::vector<Vector> equivalence_defect(const DeformationSeries& l1, const DeformationSeries& l2,
                                       const std::vector<Matrix>& rho) {
  validate_shape(l1);
  validate_shape(l2);
  const LocalAlgebra& base = l1.base;
  const std::size_t d = base.dim();
  const std::size_t n = l1.complex->algebra().dim();
  const std::size_t edim = l1.complex->algebra().structure().size();
  if (rho.size() != d) throw InputError("automorphism table does not match the base");
  const auto t1 = expanded(l1);
  const auto t2 = expanded(l2);
  std::vector<bool> live1(d), live2(d), live_rho(d);
  for (std::size_t a = 0; a < d; ++a) {
    live1[a] = !is_zero_table(t1[a]);
    live2[a] = !is_zero_table(t2[a]);
    live_rho[a] = !rho[a].is_zero();
  }

  std::vector<Table> defect(d, Table(edim, Matrix(n, n * n)));
  // rho o lambda1
  for (std::size_t x = 0; x < d; ++x) {
    if (!live_rho[x]) continue;
    for (std::size_t y = 0; y < d; ++y) {
      if (!live1[y]) continue;
      const Vector& p = base.product(x, y);
      if (is_zero(p)) continue;
      for (std::size_t k = 0; k < edim; ++k) {
        const Matrix v = rho[x] * t1[y][k];
        for (std::size_t g = 0; g < d; ++g)
          if (p[g] != 0) add_scaled(defect[g][k], p[g], v);
      }
    }
  }
  // - lambda2 o (rho (x) rho)
  for (std::size_t y = 0; y < d; ++y) {
    if (!live_rho[y]) continue;
    for (std::size_t z = 0; z < d; ++z) {
      if (!live_rho[z]) continue;
      const Vector& pyz = base.product(y, z);
      if (is_zero(pyz)) continue;
      for (std::size_t x = 0; x < d; ++x) {
        if (!live2[x]) continue;
        const Vector p = times_basis(base, x, pyz);
        if (is_zero(p)) continue;
        for (std::size_t k = 0; k < edim; ++k) {
          Matrix v(n, n * n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              const Vector val = apply_bilinear(t2[x][k], rho[y].column(i), rho[z].column(j));
              for (std::size_t r = 0; r < n; ++r) v(r, i * n + j) = val[r];
            }
          for (std::size_t g = 0; g < d; ++g)
            if (p[g] != 0) add_scaled(defect[g][k], -p[g], v);
        }
      }
    }
  }
  std::vector<Vector> out;
  for (const auto& t : defect) out.push_back(l1.complex->c2().coordinates(t));
  return out;
}

std::optional<std::vector<Matrix>> equivalence_solve(const DeformationSeries& l1, const DeformationSeries& l2) {
  validate_shape(l1);
  validate_shape(l2);
  if (l1.complex != l2.complex && !(l1.complex->algebra().structure() == l2.complex->algebra().structure()))
    throw InputError("equivalence needs deformations of the same algebra");
  if (!same_base(l1.base, l2.base)) throw InputError("equivalence needs deformations over the same base");
  const CochainComplex& c = *l1.complex;
  const LocalAlgebra& base = l1.base;
  const std::size_t n = c.algebra().dim();
  const std::size_t d = base.dim();
  const std::size_t c2dim = c.c2().dim();
  std::vector<Matrix> rho(d, Matrix(n, n));
  rho[0] = Matrix::identity(n);

  std::vector<Matrix> derivations;
  for (const auto& v : kernel_basis(c.d1_matrix())) derivations.push_back(CochainComplex::cochain1(v, n));
  const auto powers = ideal_powers(base);
  std::vector<Vector> prev;  // complement used at the previous layer
  for (std::size_t layer = 0; layer < powers.size(); ++layer) {
    const auto defect = equivalence_defect(l1, l2, rho);
    bool zero = true;
    for (const auto& v : defect) zero = zero && is_zero(v);
    if (zero) return rho;

    // u_j: complement of M^{L+1} inside M^L
    const std::vector<Vector> deeper = layer + 1 < powers.size() ? powers[layer + 1] : std::vector<Vector>{};
    std::vector<Vector> cols = deeper;
    std::vector<Vector> u;
    std::size_t r = span_rank(cols, d);
    for (const auto& v : powers[layer]) {
      cols.push_back(v);
      const std::size_t r2 = span_rank(cols, d);
      if (r2 > r) {
        u.push_back(v);
        r = r2;
      } else {
        cols.pop_back();
      }
    }
    cols = u;
    cols.insert(cols.end(), deeper.begin(), deeper.end());
    const LinearSolver split(Matrix::from_columns(cols, d));
    // coefficients along u_j of a defect lying in M^L (x) C^2, stacked by j
    auto project = [&](const std::vector<Vector>& def) -> std::optional<Vector> {
      Vector out(u.size() * c2dim);
      for (std::size_t k = 0; k < c2dim; ++k) {
        Vector w(d);
        for (std::size_t g = 0; g < d; ++g) w[g] = def[g][k];
        const auto sol = split.solve(w);
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < u.size(); ++j) out[j * c2dim + k] = (*sol)[j];
      }
      return out;
    };
    const auto e = project(defect);
    if (!e) return std::nullopt;

    // rho o exp(b D) for derivations D and b in the previous layer keeps the
    // previous layers solved and moves this one affinely
    std::vector<std::vector<Matrix>> shifts;
    std::vector<Vector> shift_effect;
    for (const auto& b : prev)
      for (const auto& dm : derivations) {
        std::vector<Matrix> x(d, Matrix(n, n));
        for (std::size_t a = 1; a < d; ++a)
          if (b[a] != 0) add_scaled(x[a], b[a], dm);
        const auto moved = compose_linear(base, rho, exp_linear(base, x));
        const auto p = project(equivalence_defect(l1, l2, moved));
        if (!p) continue;
        shifts.push_back(x);
        shift_effect.push_back(sub(*p, *e));
      }

    // sum_j u_j d1(delta_j) - sum_s c_s effect_s = defect along this layer
    const std::size_t n2 = n * n;
    Matrix system(u.size() * c2dim, u.size() * n2 + shifts.size());
    const Matrix& d1 = c.d1_matrix();
    for (std::size_t j = 0; j < u.size(); ++j)
      for (std::size_t row = 0; row < c2dim; ++row)
        for (std::size_t col = 0; col < n2; ++col) system(j * c2dim + row, j * n2 + col) = d1(row, col);
    for (std::size_t s = 0; s < shifts.size(); ++s)
      for (std::size_t row = 0; row < system.rows(); ++row) system(row, u.size() * n2 + s) = -shift_effect[s][row];
    const auto sol = solve(system, *e);
    if (!sol) return std::nullopt;

    std::vector<Matrix> x(d, Matrix(n, n));
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      const Scalar& cs = (*sol)[u.size() * n2 + s];
      if (cs == 0) continue;
      for (std::size_t a = 0; a < d; ++a) add_scaled(x[a], cs, shifts[s][a]);
    }
    if (!shifts.empty()) rho = compose_linear(base, rho, exp_linear(base, x));
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Matrix step = CochainComplex::cochain1(Vector(sol->begin() + j * n2, sol->begin() + (j + 1) * n2), n);
      for (std::size_t a = 1; a < d; ++a)
        if (u[j][a] != 0) add_scaled(rho[a], u[j][a], step);
    }
    prev = u;
  }
  for (const auto& v : equivalence_defect(l1, l2, rho))
    if (!is_zero(v)) return std::nullopt;
  return rho;
}

ObstructionResult obstruction(const DeformationSeries& l, const CocycleTable& f, std::size_t m) {
  validate_shape(l);
  const Extension e = extension_from_cocycle(l.base, m, f);
  Matrix q(e.total.dim(), l.base.dim());
  for (std::size_t a = 0; a < l.base.dim(); ++a) q(a, a) = 1;
  return obstruction(l, e, q);
}

ObstructionResult obstruction(const DeformationSeries& l, const Extension& e, const Matrix& q) {
  validate_shape(l);
  if (!same_base(l.base, e.base)) throw InputError("extension is not an extension of the deformation base");
  if (q.rows() != e.total.dim() || q.cols() != e.base.dim() || !(e.projection * q == Matrix::identity(e.base.dim())) ||
      q.column(0) != unit_vector(e.total.dim(), 0))
    throw InputError("q is not a unital section of the extension");
  if (!is_deformation(l)) throw PreconditionError("obstructions need a deformation");
  const CochainComplex& c = *l.complex;
  const std::size_t d = l.base.dim();
  const std::size_t m = e.module_dim;
  const CocycleTable f = cocycle_from_splitting(e, q);
  const auto t = expanded(l);

  ObstructionResult out;
  out.cochains.assign(m, zero_vector(c.c3().dim()));
  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t b = 1; b < d; ++b) {
      const Vector& fab = f[a * d + b];
      if (is_zero(fab) || is_zero(l.table[a]) || is_zero(l.table[b])) continue;
      const Vector s = c.star_tables(t[a], t[b]);
      for (std::size_t k = 0; k < m; ++k)
        if (fab[k] != 0) axpy(out.cochains[k], fab[k], s);
    }
  out.extendable = true;
  std::vector<Vector> lifts;
  for (const auto& phi : out.cochains) {
    const Coker3 cls = c.coker3(phi);
    out.classes.push_back(cls.cls);
    out.extendable = out.extendable && cls.exact;
    if (cls.exact) lifts.push_back(*cls.preimage);
  }
  if (!out.extendable) return out;

  DeformationSeries ext = trivial_deformation(l.complex, e.total);
  for (std::size_t s = 1; s < e.total.dim(); ++s)
    for (std::size_t a = 1; a < d; ++a)
      if (q(s, a) != 0) axpy(ext.table[s], q(s, a), l.table[a]);
  for (std::size_t k = 0; k < m; ++k) {
    const Vector& col = e.inclusion.column(k);
    for (std::size_t s = 1; s < e.total.dim(); ++s)
      if (col[s] != 0) axpy(ext.table[s], col[s], lifts[k]);
  }
  out.extension = std::move(ext);
  return out;
}

VersalResult versal(std::shared_ptr<const CochainComplex> complex, unsigned order) {
  if (order == 0) throw InputError("versal order must be at least 1");
  const CochainComplex& c = *complex;
  VersalResult out;
  out.order = order;
  out.h2 = c.h2();
  const std::size_t h = out.h2.dim_h2;
  const auto names = default_names(h);
  const std::size_t c2dim = c.c2().dim();

  auto series_over = [&](const LocalTruncation& s, const std::map<Monomial, Vector>& psi) {
    DeformationSeries l = trivial_deformation(complex, s.algebra());
    for (const auto& [mono, v] : psi) {
      const std::size_t idx = s.basis_index(mono);
      if (idx >= s.dim()) throw std::logic_error("deformation table uses a non-standard monomial");
      l.table[idx] = v;
    }
    return l;
  };
  auto record = [&](unsigned d, const LocalTruncation& s, const DeformationSeries& l, std::size_t fresh) {
    VersalOrder o;
    o.order = d;
    o.base = s;
    o.base_dim = s.dim();
    o.new_relations = fresh;
    o.residual_zero = is_deformation(l);
    out.orders.push_back(o);
  };

  if (h == 0) {
    out.base = LocalTruncation(0, order, {});
    out.deformation = trivial_deformation(complex, out.base.algebra());
    for (unsigned d = 1; d <= order; ++d) record(d, out.base, out.deformation, 0);
  } else {
    LocalTruncation s(h, 1, {}, names);
    std::map<Monomial, Vector> psi;
    for (std::size_t i = 0; i < h; ++i) psi[generator_monomial(h, i)] = out.h2.representatives[i];
    record(1, s, series_over(s, psi), 0);

    for (unsigned d = 1; d < order; ++d) {
      // S-bar = k[[g]] / (M I + M^{d+2})
      std::vector<Polynomial> lifted;
      for (const auto& f : s.ideal())
        for (std::size_t i = 0; i < h; ++i) lifted.push_back(monomial_poly(h, generator_monomial(h, i)) * f);
      const LocalTruncation bar(h, d + 1, lifted, names);
      DeformationSeries lb = series_over(bar, psi);
      const auto res = mc_residual(lb);
      if (!is_zero(res[0])) throw std::logic_error("structure is not a P-algebra");

      // kernel of S-bar -> S
      Matrix p(s.dim(), bar.dim());
      for (std::size_t u = 0; u < bar.dim(); ++u) {
        const Vector col = s.reduce(monomial_poly(h, bar.basis()[u]));
        for (std::size_t r = 0; r < s.dim(); ++r) p(r, u) = col[r];
      }
      const auto kappa = kernel_basis(p);
      const LinearSolver in_kernel(Matrix::from_columns(kappa, bar.dim()));
      std::vector<Vector> obs(kappa.size(), zero_vector(c.c3().dim()));
      for (std::size_t k = 0; k < c.c3().dim(); ++k) {
        Vector w(bar.dim());
        for (std::size_t g = 0; g < bar.dim(); ++g) w[g] = res[g][k];
        const auto sol = in_kernel.solve(w);
        if (!sol) throw std::logic_error("residual does not vanish on the previous order");
        for (std::size_t j = 0; j < kappa.size(); ++j) obs[j][k] = (*sol)[j];
      }

      // exact parts become new table entries, classes become relations
      std::vector<Vector> rel(c.coker3_dim(), zero_vector(bar.dim()));
      for (std::size_t j = 0; j < kappa.size(); ++j) {
        const Vector cls = c.coker3(obs[j]).cls;
        const Coker3 exact = c.coker3(sub(obs[j], c.coker3_section(cls)));
        if (!exact.exact) throw std::logic_error("cokernel section is not a complement");
        for (std::size_t g = 1; g < bar.dim(); ++g)
          if (kappa[j][g] != 0) axpy(lb.table[g], kappa[j][g], *exact.preimage);
        for (std::size_t k = 0; k < cls.size(); ++k)
          if (cls[k] != 0) axpy(rel[k], cls[k], kappa[j]);
      }

      std::vector<Vector> nonzero;
      for (const auto& r : rel)
        if (!is_zero(r)) nonzero.push_back(r);
      std::vector<Polynomial> candidates;
      for (const auto& r : span_basis(nonzero, bar.dim())) candidates.push_back(bar.lift(r));
      const std::size_t fresh_count = candidates.size();
      candidates.insert(candidates.end(), lifted.begin(), lifted.end());
      std::vector<bool> keep(candidates.size(), false);
      std::vector<Polynomial> kept;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (LocalTruncation(h, d + 1, kept, names).contains(candidates[i])) continue;
        kept.push_back(candidates[i]);
        keep[i] = true;
      }
      for (std::size_t i = candidates.size(); i-- > 0;) {
        if (!keep[i]) continue;
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < candidates.size(); ++j)
          if (keep[j] && j != i) others.push_back(candidates[j]);
        if (LocalTruncation(h, d + 1, others, names).contains(candidates[i])) keep[i] = false;
      }
      kept.clear();
      std::size_t fresh = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        kept.push_back(candidates[i]);
        if (i < fresh_count) ++fresh;
      }
      LocalTruncation next(h, d + 1, kept, names);

      std::vector<Vector> pushed(next.dim(), zero_vector(c2dim));
      for (std::size_t v = 1; v < bar.dim(); ++v) {
        if (is_zero(lb.table[v])) continue;
        const Vector coords = next.reduce(monomial_poly(h, bar.basis()[v]));
        for (std::size_t u = 1; u < next.dim(); ++u)
          if (coords[u] != 0) axpy(pushed[u], coords[u], lb.table[v]);
      }
      psi.clear();
      for (std::size_t u = 1; u < next.dim(); ++u)
        if (!is_zero(pushed[u])) psi[next.basis()[u]] = pushed[u];
      s = std::move(next);
      record(d + 1, s, series_over(s, psi), fresh);
    }
    out.base = s;
    out.deformation = series_over(s, psi);
  }
  out.residual = mc_residual(out.deformation);
  out.certificate = true;
  for (const auto& o : out.orders) out.certificate = out.certificate && o.residual_zero;
  out.differential = infinitesimal_differential(out.deformation).map;
  return out;
}

}  // namespace opdef

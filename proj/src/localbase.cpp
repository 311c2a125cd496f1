#include "opdef/localbase.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace opdef {

// ---------------------------------------------------------------- LocalAlgebra

LocalAlgebra::LocalAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<Vector>> products)
    : names_(std::move(basis_names)), products_(std::move(products)) {
  const std::size_t d = names_.size();
  if (d == 0) throw InputError("a local algebra contains at least the unit");
  if (products_.size() != d) throw InputError("multiplication table has the wrong size");
  for (const auto& row : products_) {
    if (row.size() != d) throw InputError("multiplication table has the wrong size");
    for (const auto& v : row)
      if (v.size() != d) throw InputError("multiplication table entries have the wrong length");
  }
  for (std::size_t j = 0; j < d; ++j)
    if (products_[0][j] != unit_vector(d, j) || products_[j][0] != unit_vector(d, j))
      throw InputError("basis element 0 is not the unit");
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j) {
      if (products_[i][j] != products_[j][i]) throw InputError("local algebra is not commutative");
      if (sgn(products_[i][j][0]) != 0) throw InputError("maximal ideal is not closed under multiplication");
    }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t k = 1; k < d; ++k) {
        Vector left(d), right(d);
        for (std::size_t g = 1; g < d; ++g) {
          if (sgn(products_[i][j][g]) != 0) axpy(left, products_[i][j][g], products_[g][k]);
          if (sgn(products_[j][k][g]) != 0) axpy(right, products_[j][k][g], products_[i][g]);
        }
        if (left != right) throw InputError("local algebra is not associative");
      }
  // nilpotence of M: powers must reach zero
  std::vector<Vector> power;
  for (std::size_t i = 1; i < d; ++i) power.push_back(unit_vector(d, i));
  std::size_t prev = power.size();
  while (!power.empty()) {
    std::vector<Vector> next;
    for (const auto& p : power)
      for (std::size_t i = 1; i < d; ++i) next.push_back(multiply(p, unit_vector(d, i)));
    power = span_basis(next, d);
    if (power.size() >= prev && !power.empty()) throw InputError("maximal ideal is not nilpotent");
    prev = power.size();
  }
}

Vector LocalAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], products_[i][j]);
  }
  return out;
}

std::vector<Vector> LocalAlgebra::ideal_square() const {
  std::vector<Vector> prods;
  for (std::size_t i = 1; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) prods.push_back(products_[i][j]);
  return span_basis(prods, dim());
}

std::size_t LocalAlgebra::cotangent_dim() const { return ideal_dim() - ideal_square().size(); }

// ---------------------------------------------------------------- LocalTruncation

namespace {

LocalAlgebra build_algebra(const std::vector<Monomial>& basis, const std::vector<std::string>& names,
                           const std::function<Vector(const Polynomial&)>& reduce) {
  std::vector<std::string> bnames;
  for (const auto& m : basis) bnames.push_back(monomial_string(m, names));
  std::vector<std::vector<Vector>> prods(basis.size(), std::vector<Vector>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Monomial m = basis[a];
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += basis[b][i];
      prods[a][b] = reduce(Polynomial::monomial(m));
    }
  return LocalAlgebra(std::move(bnames), std::move(prods));
}

}  // namespace

LocalTruncation::LocalTruncation(std::size_t n, unsigned order, std::vector<Polynomial> ideal,
                                 std::vector<std::string> names)
    : n_(n), order_(order), ideal_(std::move(ideal)), names_(std::move(names)) {
  if (names_.empty()) names_ = default_names(n_);
  if (names_.size() != n_) throw InputError("number of generator names does not match");
  for (const auto& f : ideal_) {
    if (f.nvars() != n_ && !f.is_zero()) throw InputError("ideal generator uses the wrong number of variables");
    for (const auto& [m, c] : f.terms())
      if (degree(m) < 2) throw InputError("ideal generator " + to_string(f, names_) + " has a constant or linear term");
  }
  all_ = monomials_up_to(n_, order_);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < all_.size(); ++i) index[all_[i]] = i;
  std::vector<Vector> span;
  for (const auto& f : ideal_) {
    if (f.is_zero()) continue;
    const unsigned low = f.low_degree();
    if (low > order_) continue;
    for (const auto& m : monomials_up_to(n_, order_ - low)) {
      const Polynomial p = (Polynomial::monomial(m) * f).truncated(order_);
      Vector v(all_.size());
      for (const auto& [mm, c] : p.terms()) v[index.at(mm)] = c;
      span.push_back(std::move(v));
    }
  }
  if (!span.empty()) {
    const Rref r = rref(Matrix::from_rows(span, all_.size()));
    for (std::size_t i = 0; i < r.rank(); ++i) rows_.push_back(r.reduced.row(i));
    pivots_ = r.pivots;
  }
  std::vector<bool> pivot(all_.size(), false);
  for (auto p : pivots_) pivot[p] = true;
  for (std::size_t i = 0; i < all_.size(); ++i)
    if (!pivot[i]) {
      standard_.push_back(i);
      basis_.push_back(all_[i]);
    }
  algebra_ = build_algebra(basis_, names_, [this](const Polynomial& p) { return reduce(p); });
}

LocalTruncation LocalTruncation::artinian(std::size_t n, std::vector<Polynomial> ideal, std::vector<std::string> names,
                                          unsigned max_order) {
  for (unsigned N = 0; N <= max_order; ++N) {
    const LocalTruncation next(n, N + 1, ideal, names);
    bool all_zero = true;
    for (const auto& m : monomials_up_to(n, N + 1))
      if (degree(m) == N + 1 && !next.contains(Polynomial::monomial(m))) {
        all_zero = false;
        break;
      }
    if (all_zero) return LocalTruncation(n, N, std::move(ideal), std::move(names));
  }
  throw InputError("quotient is not finite-dimensional up to order " + std::to_string(max_order) +
                   "; give an explicit truncation order");
}

Vector LocalTruncation::reduce(const Polynomial& p) const {
  if (p.nvars() != n_ && !p.is_zero()) throw InputError("polynomial uses the wrong number of variables");
  Vector v(all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) v[i] = p.coefficient(all_[i]);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (sgn(c) != 0) axpy(v, -c, rows_[r]);
  }
  Vector out(standard_.size());
  for (std::size_t i = 0; i < standard_.size(); ++i) out[i] = v[standard_[i]];
  return out;
}

Polynomial LocalTruncation::lift(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw InputError("coordinate vector does not match the quotient basis");
  Polynomial p(n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) p.add_term(basis_[i], coords[i]);
  return p;
}

std::size_t LocalTruncation::basis_index(const Monomial& m) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == m) return i;
  return basis_.size();
}

std::string LocalTruncation::describe() const {
  if (n_ == 0 || dim() == 1) return "k";
  std::string out = "k[[";
  for (std::size_t i = 0; i < n_; ++i) out += (i ? "," : "") + names_[i];
  out += "]]/(";
  bool first = true;
  for (const auto& f : ideal_) {
    if (f.is_zero()) continue;
    out += (first ? "" : ", ") + to_string(f, names_);
    first = false;
  }
  out += std::string(first ? "" : ", ") + "M^" + std::to_string(order_ + 1) + ")";
  return out;
}

LocalTruncation parse_base(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "k") return LocalTruncation(0, 0, {});
  const bool series = s.rfind("k[[", 0) == 0;
  if (s.size() < 3 || s.substr(0, 2) != "k[") throw InputError("base must look like k[x,y]/(f1, f2)");
  const std::size_t open = series ? 3 : 2;
  const auto close = s.find(series ? "]]" : "]");
  if (close == std::string::npos) throw InputError("missing closing bracket in base '" + s + "'");
  std::vector<std::string> names;
  std::string cur;
  for (char c : s.substr(open, close - open)) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  names.push_back(cur);
  for (const auto& nm : names)
    if (nm.empty() || !std::isalpha(static_cast<unsigned char>(nm[0])) || nm == "M")
      throw InputError("bad variable name in base '" + s + "'");
  std::vector<Polynomial> ideal;
  std::optional<unsigned> order;
  const std::string rest = s.substr(close + (series ? 2 : 1));
  if (!rest.empty()) {
    if (rest.size() < 3 || rest.substr(0, 2) != "/(" || rest.back() != ')')
      throw InputError("expected '/(...)' after the generators in '" + s + "'");
    const std::string body = rest.substr(2, rest.size() - 3);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i)
      if (i == body.size() || body[i] == ',') {
        const std::string item = body.substr(start, i - start);
        start = i + 1;
        // M^d truncates at total degree d - 1
        if (item.rfind("M^", 0) == 0) {
          unsigned d = 0;
          try {
            d = static_cast<unsigned>(std::stoul(item.substr(2)));
          } catch (const std::exception&) {
            throw InputError("bad truncation '" + item + "' in base '" + s + "'");
          }
          if (d == 0) throw InputError("truncation M^0 in base '" + s + "' kills the unit");
          order = order ? std::min(*order, d - 1) : d - 1;
          continue;
        }
        ideal.push_back(parse_polynomial(item, names));
      }
  }
  if (order) return LocalTruncation(names.size(), *order, std::move(ideal), names);
  return LocalTruncation::artinian(names.size(), std::move(ideal), names);
}

// ---------------------------------------------------------------- Harrison

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// tuple of 0-based ideal indices (0..r-1)
std::vector<std::size_t> chain_tuple(std::size_t idx, std::size_t r, std::size_t q) {
  std::vector<std::size_t> t(q);
  for (std::size_t p = q; p-- > 0;) {
    t[p] = idx % r;
    idx /= r;
  }
  return t;
}

std::size_t chain_index(const std::vector<std::size_t>& t, std::size_t r) {
  std::size_t idx = 0;
  for (auto v : t) idx = idx * r + v;
  return idx;
}

Matrix kron_identity(const Matrix& a, std::size_t m) {
  Matrix out(a.rows() * m, a.cols() * m);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0)
        for (std::size_t k = 0; k < m; ++k) out(i * m + k, j * m + k) = a(i, j);
  return out;
}

// Basis of Harrison p-cochains with values in k^m, as columns.
Matrix harrison_cochains(const LocalAlgebra& a, std::size_t p, std::size_t m) {
  const std::size_t cd = chain_dim(a, p);
  const auto sh = shuffle_span(a, p);
  std::vector<Vector> basis;
  if (sh.empty()) {
    for (std::size_t i = 0; i < cd; ++i) basis.push_back(unit_vector(cd, i));
  } else {
    basis = kernel_basis(Matrix::from_rows(sh, cd));
  }
  return kron_identity(Matrix::from_columns(basis, cd), m);
}

}  // namespace

std::size_t chain_dim(const LocalAlgebra& a, std::size_t q) { return ipow(a.ideal_dim(), q); }

Matrix bar_boundary(const LocalAlgebra& a, std::size_t q) {
  const std::size_t r = a.ideal_dim();
  if (q == 0) throw InputError("bar boundary needs q >= 1");
  Matrix b(q == 1 ? 1 : chain_dim(a, q - 1), chain_dim(a, q));
  if (q == 1) return b;
  for (std::size_t idx = 0; idx < chain_dim(a, q); ++idx) {
    const auto t = chain_tuple(idx, r, q);
    for (std::size_t i = 0; i + 1 < q; ++i) {
      const Vector& prod = a.product(t[i] + 1, t[i + 1] + 1);
      const int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} with 0-based i
      for (std::size_t g = 1; g < a.dim(); ++g) {
        if (sgn(prod[g]) == 0) continue;
        std::vector<std::size_t> u;
        for (std::size_t k = 0; k < i; ++k) u.push_back(t[k]);
        u.push_back(g - 1);
        for (std::size_t k = i + 2; k < q; ++k) u.push_back(t[k]);
        b(chain_index(u, r), idx) += sign * prod[g];
      }
    }
  }
  return b;
}

std::vector<Vector> shuffle_span(const LocalAlgebra& a, std::size_t q) {
  const std::size_t r = a.ideal_dim();
  const std::size_t cd = chain_dim(a, q);
  std::vector<Vector> out;
  auto e = [&](std::initializer_list<std::size_t> t) { return chain_index(std::vector<std::size_t>(t), r); };
  if (q == 2) {
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) {
        Vector v(cd);
        v[e({x, y})] += 1;
        v[e({y, x})] -= 1;
        if (!is_zero(v)) out.push_back(std::move(v));
      }
  } else if (q == 3) {
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z) {
          Vector s1(cd), s2(cd);
          // (x) sh (y, z) and (x, y) sh (z)
          s1[e({x, y, z})] += 1;
          s1[e({y, x, z})] -= 1;
          s1[e({y, z, x})] += 1;
          s2[e({x, y, z})] += 1;
          s2[e({x, z, y})] -= 1;
          s2[e({z, x, y})] += 1;
          out.push_back(std::move(s1));
          out.push_back(std::move(s2));
        }
  } else if (q > 3) {
    throw InputError("shuffles are implemented for q <= 3");
  }
  return out;
}

bool shuffles_form_subcomplex(const LocalAlgebra& a, std::size_t qmax) {
  for (std::size_t q = 2; q <= qmax; ++q) {
    const Matrix b = bar_boundary(a, q);
    const auto lower = shuffle_span(a, q - 1);
    std::vector<Vector> both = lower;
    for (const auto& s : shuffle_span(a, q)) both.push_back(b.apply(s));
    if (span_rank(both, b.rows()) != span_rank(lower, b.rows())) return false;
  }
  return true;
}

HarrisonResult harrison(const LocalAlgebra& a, std::size_t q, std::size_t m) {
  if (q != 1 && q != 2) throw InputError("Harrison cohomology is available for q = 1, 2");
  HarrisonResult res;
  res.q = q;
  res.coefficient_dim = m;
  const Matrix kq = harrison_cochains(a, q, m);
  const Matrix dq = kron_identity(bar_boundary(a, q + 1).transpose(), m);
  const Matrix zq = dq * kq;
  std::vector<Vector> cocycles;
  for (const auto& y : kernel_basis(zq)) cocycles.push_back(kq.apply(y));
  std::vector<Vector> bounds;
  if (q == 2) {
    const Matrix k1 = harrison_cochains(a, 1, m);
    const Matrix d1 = kron_identity(bar_boundary(a, 2).transpose(), m);
    bounds = image_basis(d1 * k1);
  }
  const std::size_t len = kq.rows();
  std::vector<Vector> span = bounds;
  std::size_t rk = span_rank(span, len);
  for (const auto& z : cocycles) {
    span.push_back(z);
    const std::size_t r2 = span_rank(span, len);
    if (r2 > rk) {
      res.representatives.push_back(z);
      rk = r2;
    } else {
      span.pop_back();
    }
  }
  res.dim = res.representatives.size();
  return res;
}

// ---------------------------------------------------------------- I/MI

IdealGenerators ideal_generators_mod_mi(std::size_t n, const std::vector<Polynomial>& ideal, unsigned order,
                                        std::vector<std::string> names) {
  if (names.empty()) names = default_names(n);
  const unsigned top = order + 1;
  for (const auto& f : ideal)
    for (const auto& [m, c] : f.terms())
      if (degree(m) < 2) throw InputError("ideal is not contained in M^2: " + to_string(f, names));
  const auto all = monomials_up_to(n, top);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  auto vec = [&](const Polynomial& p) {
    Vector v(all.size());
    const Polynomial t = p.truncated(top);
    for (const auto& [m, c] : t.terms()) v[index.at(m)] = c;
    return v;
  };
  std::vector<Vector> mi;
  for (const auto& f : ideal) {
    if (f.is_zero() || f.low_degree() + 1 > top) continue;
    for (const auto& m : monomials_up_to(n, top - f.low_degree()))
      if (degree(m) >= 1) mi.push_back(vec(Polynomial::monomial(m) * f));
  }
  std::vector<Polynomial> candidates;
  for (const auto& f : ideal)
    if (!f.truncated(top).is_zero()) candidates.push_back(f.truncated(top));
  for (const auto& m : all)
    if (degree(m) == top) candidates.push_back(Polynomial::monomial(m));
  IdealGenerators res{{}, LocalTruncation(0, 0, {})};
  std::size_t rk = span_rank(mi, all.size());
  for (const auto& c : candidates) {
    mi.push_back(vec(c));
    const std::size_t r2 = span_rank(mi, all.size());
    if (r2 > rk) {
      res.basis.push_back(c);
      rk = r2;
    } else {
      mi.pop_back();
    }
  }
  std::vector<Polynomial> mgens;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial g(n, 0);
    g[i] = 1;
    for (const auto& f : ideal) mgens.push_back(Polynomial::monomial(g) * f);
  }
  res.extension = LocalTruncation(n, top, std::move(mgens), names);
  return res;
}

// ---------------------------------------------------------------- extensions

bool is_cocycle(const LocalAlgebra& a, const CocycleTable& f, std::size_t m) {
  const std::size_t d = a.dim();
  if (f.size() != d * d) return false;
  auto fval = [&](const Vector& x, std::size_t z) {  // f(x, b_z) for x in coordinates
    Vector out(m);
    for (std::size_t g = 0; g < d; ++g)
      if (sgn(x[g]) != 0) axpy(out, x[g], f[g * d + z]);
    return out;
  };
  auto fval_r = [&](std::size_t x, const Vector& z) {
    Vector out(m);
    for (std::size_t g = 0; g < d; ++g)
      if (sgn(z[g]) != 0) axpy(out, z[g], f[x * d + g]);
    return out;
  };
  for (std::size_t x = 1; x < d; ++x)
    for (std::size_t y = 1; y < d; ++y)
      for (std::size_t z = 1; z < d; ++z)
        if (fval(a.product(x, y), z) != fval_r(x, a.product(y, z))) return false;
  return true;
}

CocycleTable coboundary(const LocalAlgebra& a, const std::vector<Vector>& g, std::size_t m) {
  const std::size_t d = a.dim();
  if (g.size() != d) throw InputError("1-cochain needs one value per basis element");
  CocycleTable f(d * d, Vector(m));
  for (std::size_t x = 1; x < d; ++x)
    for (std::size_t y = 1; y < d; ++y) {
      const Vector& p = a.product(x, y);
      for (std::size_t c = 1; c < d; ++c)
        if (sgn(p[c]) != 0) axpy(f[x * d + y], -p[c], g[c]);
    }
  return f;
}

Extension extension_from_cocycle(const LocalAlgebra& base, std::size_t m, const CocycleTable& f) {
  const std::size_t d = base.dim();
  if (f.size() != d * d) throw InputError("cocycle table must have dim^2 entries");
  for (const auto& v : f)
    if (v.size() != m) throw InputError("cocycle values have the wrong length");
  for (std::size_t x = 0; x < d; ++x) {
    if (!is_zero(f[x]) || !is_zero(f[x * d])) throw InputError("cocycle must vanish when an argument is the unit");
    for (std::size_t y = 0; y < d; ++y)
      if (f[x * d + y] != f[y * d + x]) throw InputError("cocycle is not symmetric");
  }
  if (!is_cocycle(base, f, m)) throw InputError("f is not a 2-cocycle: the extension product is not associative");
  const std::size_t t = d + m;
  std::vector<std::string> names = base.names();
  for (std::size_t k = 0; k < m; ++k) names.push_back("n" + std::to_string(k + 1));
  std::vector<std::vector<Vector>> prods(t, std::vector<Vector>(t, Vector(t)));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      Vector& v = prods[i][j];
      if (i < d && j < d) {
        for (std::size_t c = 0; c < d; ++c) v[c] = base.product(i, j)[c];
        for (std::size_t k = 0; k < m; ++k) v[d + k] = f[i * d + j][k];
      } else if (i == 0) {
        v[j] = 1;
      } else if (j == 0) {
        v[i] = 1;
      }
    }
  Extension e;
  e.base = base;
  e.module_dim = m;
  e.cocycle = f;
  e.total = LocalAlgebra(std::move(names), std::move(prods));
  e.inclusion = Matrix(t, m);
  for (std::size_t k = 0; k < m; ++k) e.inclusion(d + k, k) = 1;
  e.projection = Matrix(d, t);
  for (std::size_t c = 0; c < d; ++c) e.projection(c, c) = 1;
  return e;
}

CocycleTable cocycle_from_splitting(const Extension& e, const Matrix& q) {
  const std::size_t d = e.base.dim(), t = e.total.dim();
  if (q.rows() != t || q.cols() != d) throw InputError("splitting must be a total x base matrix");
  if (!(e.projection * q == Matrix::identity(d))) throw InputError("splitting is not a section of the projection");
  if (q.column(0) != unit_vector(t, 0)) throw InputError("splitting must send 1 to 1");
  LinearSolver inc(e.inclusion);
  CocycleTable f(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector diff = sub(e.total.multiply(q.column(a), q.column(b)), q.apply(e.base.product(a, b)));
      const auto k = inc.solve(diff);
      if (!k) throw std::logic_error("splitting defect does not lie in the kernel");
      f[a * d + b] = *k;
    }
  return f;
}

}  // namespace opdef

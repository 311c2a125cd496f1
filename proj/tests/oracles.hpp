#pragma once
// Brute-force reference computations used to derive expected values in tests.
// Nothing here calls into the library's linear algebra beyond plain storage.

#include <array>
#include <functional>
#include <random>
#include <vector>

#include "opdef/matrix.hpp"
#include "opdef/scalar.hpp"

namespace oracle {

using opdef::Scalar;
using opdef::Vector;

// Permutation of {0,1,2}, one-line.
using P3 = std::array<int, 3>;

inline std::vector<P3> s3() {
  return {P3{0, 1, 2}, P3{0, 2, 1}, P3{1, 0, 2}, P3{1, 2, 0}, P3{2, 0, 1}, P3{2, 1, 0}};
}

inline P3 inv(const P3& p) {
  P3 r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return r;
}

// Bilinear operation on k^n: table[i][j] = coordinates of op(v_i, v_j).
using Bilinear = std::vector<std::vector<Vector>>;

inline Vector apply(const Bilinear& op, const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t l = 0; l < n; ++l) out[l] += c * op[i][j][l];
    }
  }
  return out;
}

inline Bilinear opposite(const Bilinear& op) {
  Bilinear out = op;
  for (std::size_t i = 0; i < op.size(); ++i)
    for (std::size_t j = 0; j < op.size(); ++j) out[i][j] = op[j][i];
  return out;
}

inline Bilinear random_bilinear(std::size_t n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Bilinear op(n, std::vector<Vector>(n, Vector(n)));
  for (auto& row : op)
    for (auto& v : row)
      for (auto& x : v) x = d(rng);
  return op;
}

// Value of the label basis element (e_a o_1 e_b) . rho on inputs (x1, x2, x3),
// computed straight from the definition
//   ((f) . rho)(x) = f(x_{rho^-1(1)}, x_{rho^-1(2)}, x_{rho^-1(3)}),
//   (e_a o_1 e_b)(y1, y2, y3) = e_a(e_b(y1, y2), y3).
inline Vector eval_label(const std::vector<Bilinear>& ops, std::size_t a, std::size_t b, const P3& rho,
                         const std::array<Vector, 3>& x) {
  const P3 ri = inv(rho);
  return apply(ops[a], apply(ops[b], x[ri[0]], x[ri[1]]), x[ri[2]]);
}

// Label-order cosets: id, (1 2 3), (1 3 2).
inline std::array<P3, 3> cosets() { return {P3{0, 1, 2}, P3{1, 2, 0}, P3{2, 0, 1}}; }

// Evaluate a label-coordinate vector of F(E)(3) on unit inputs (v_i, v_j, v_k).
inline Vector eval_free(const std::vector<Bilinear>& ops, const Vector& coords, std::size_t i, std::size_t j,
                        std::size_t k, std::size_t n) {
  const std::size_t d = ops.size();
  std::array<Vector, 3> x{opdef::unit_vector(n, i), opdef::unit_vector(n, j), opdef::unit_vector(n, k)};
  Vector out(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t r = 0; r < 3; ++r) {
        const Scalar& c = coords[(a * d + b) * 3 + r];
        if (sgn(c) == 0) continue;
        const Vector v = eval_label(ops, a, b, cosets()[r], x);
        for (std::size_t l = 0; l < n; ++l) out[l] += c * v[l];
      }
  return out;
}

// Flattened trilinear table of a label vector: all n^3 inputs, n outputs each.
inline Vector trilinear_table(const std::vector<Bilinear>& ops, const Vector& coords, std::size_t n) {
  Vector out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = eval_free(ops, coords, i, j, k, n);
        out.insert(out.end(), v.begin(), v.end());
      }
  return out;
}

// Same table with inputs permuted: entry at (x1,x2,x3) is f(sigma . x).
inline Vector permuted_table(const Vector& table, const P3& sigma, std::size_t n) {
  const P3 si = inv(sigma);
  Vector out(table.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::array<std::size_t, 3> x{i, j, k};
        const std::array<std::size_t, 3> y{x[si[0]], x[si[1]], x[si[2]]};
        const std::size_t src = ((y[0] * n + y[1]) * n + y[2]) * n;
        for (std::size_t l = 0; l < n; ++l) out[pos + l] = table[src + l];
        pos += n;
      }
  return out;
}

}  // namespace oracle

namespace oracle {

// Product given as nested coordinates: mult[i][j] = v_i v_j.
using Mult = std::vector<std::vector<Vector>>;

inline Vector mul(const Mult& m, const Vector& x, const Vector& y) { return apply(m, x, y); }

inline Vector lin(const std::vector<Vector>& f, const Vector& x) {  // f[i] = image of v_i
  Vector out(f.empty() ? 0 : f[0].size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0)
      for (std::size_t l = 0; l < out.size(); ++l) out[l] += x[i] * f[i][l];
  return out;
}

inline Vector e(std::size_t n, std::size_t i) { return opdef::unit_vector(n, i); }

// Hochschild: (df)(a,b) = a f(b) - f(ab) + f(a) b; result[a][b].
inline std::vector<std::vector<Vector>> hochschild_d1(const Mult& m, const std::vector<Vector>& f) {
  const std::size_t n = m.size();
  std::vector<std::vector<Vector>> out(n, std::vector<Vector>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = mul(m, e(n, a), f[b]);
      const Vector t1 = lin(f, mul(m, e(n, a), e(n, b)));
      const Vector t2 = mul(m, f[a], e(n, b));
      for (std::size_t l = 0; l < n; ++l) v[l] += t2[l] - t1[l];
      out[a][b] = v;
    }
  return out;
}

// (dg)(a,b,c) = a g(b,c) - g(ab,c) + g(a,bc) - g(a,b) c, with g bilinear (g[i][j]).
inline Vector hochschild_d2_at(const Mult& m, const Mult& g, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = m.size();
  const Vector A = e(n, a), B = e(n, b), C = e(n, c);
  Vector v = mul(m, A, apply(g, B, C));
  const Vector t1 = apply(g, mul(m, A, B), C);
  const Vector t2 = apply(g, A, mul(m, B, C));
  const Vector t3 = mul(m, apply(g, A, B), C);
  for (std::size_t l = 0; l < n; ++l) v[l] += t2[l] - t1[l] - t3[l];
  return v;
}

// Chevalley-Eilenberg with adjoint coefficients.
// (df)(x,y) = [x, f y] - [y, f x] - f[x,y]
inline Vector ce_d1_at(const Mult& br, const std::vector<Vector>& f, std::size_t x, std::size_t y) {
  const std::size_t n = br.size();
  Vector v = mul(br, e(n, x), f[y]);
  const Vector t1 = mul(br, e(n, y), f[x]);
  const Vector t2 = lin(f, mul(br, e(n, x), e(n, y)));
  for (std::size_t l = 0; l < n; ++l) v[l] -= t1[l] + t2[l];
  return v;
}

// (dg)(x,y,z) = [x,g(y,z)] - [y,g(x,z)] + [z,g(x,y)] - g([x,y],z) + g([x,z],y) - g([y,z],x)
inline Vector ce_d2_at(const Mult& br, const Mult& g, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t n = br.size();
  const Vector X = e(n, x), Y = e(n, y), Z = e(n, z);
  const Vector terms[6] = {mul(br, X, apply(g, Y, Z)), mul(br, Y, apply(g, X, Z)), mul(br, Z, apply(g, X, Y)),
                           apply(g, mul(br, X, Y), Z), apply(g, mul(br, X, Z), Y), apply(g, mul(br, Y, Z), X)};
  const int signs[6] = {1, -1, 1, -1, 1, -1};
  Vector v(n);
  for (int t = 0; t < 6; ++t)
    for (std::size_t l = 0; l < n; ++l) v[l] += signs[t] * terms[t][l];
  return v;
}

struct CeDims {
  std::size_t c2, c3, z2, b2, h2;
};

// Brute-force CE dimensions from the alternating bases {v_i ^ v_j (x) v_l}.
inline CeDims ce_dims(const Mult& br) {
  const std::size_t n = br.size();
  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.push_back({i, j});
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
    }
  // d1 columns: f = E_{l,i} (f v_i = v_l); rows: (pair, out)
  std::vector<Vector> d1cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<Vector> f(n, Vector(n));
      f[i][l] = 1;
      Vector col;
      for (const auto& p : pairs) {
        const Vector v = ce_d1_at(br, f, p[0], p[1]);
        col.insert(col.end(), v.begin(), v.end());
      }
      d1cols.push_back(col);
    }
  std::vector<Vector> d2cols;
  for (const auto& p : pairs)
    for (std::size_t l = 0; l < n; ++l) {
      Mult g(n, std::vector<Vector>(n, Vector(n)));
      g[p[0]][p[1]][l] = 1;
      g[p[1]][p[0]][l] = -1;
      Vector col;
      for (const auto& t : triples) {
        const Vector v = ce_d2_at(br, g, t[0], t[1], t[2]);
        col.insert(col.end(), v.begin(), v.end());
      }
      d2cols.push_back(col);
    }
  CeDims out{};
  out.c2 = pairs.size() * n;
  out.c3 = triples.size() * n;
  const std::size_t r1 = opdef::span_rank(d1cols, out.c2);
  const std::size_t r2 = d2cols.empty() ? 0 : opdef::span_rank(d2cols, out.c3);
  out.z2 = out.c2 - r2;
  out.b2 = r1;
  out.h2 = out.z2 - out.b2;
  return out;
}

}  // namespace oracle

namespace oracle {

// Multilinear map V^p -> V stored on basis tuples: values[tuple index] (base n, first slot most significant).
struct Multi {
  std::size_t n = 0, arity = 0;
  std::vector<Vector> values;
  const Vector& at(const std::vector<std::size_t>& t) const {
    std::size_t idx = 0;
    for (auto v : t) idx = idx * n + v;
    return values[idx];
  }
};

inline Multi multi_from(std::size_t n, std::size_t arity, const std::function<Vector(const std::vector<std::size_t>&)>& f) {
  Multi m{n, arity, {}};
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) count *= n;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<std::size_t> t(arity);
    std::size_t r = idx;
    for (std::size_t p = arity; p-- > 0;) {
      t[p] = r % n;
      r /= n;
    }
    m.values.push_back(f(t));
  }
  return m;
}

// Multilinear evaluation of F with some slot fed a general vector.
inline Vector eval_with(const Multi& f, std::vector<std::size_t> t, std::size_t slot, const Vector& x) {
  Vector out(f.n);
  for (std::size_t u = 0; u < f.n; ++u) {
    if (sgn(x[u]) == 0) continue;
    t[slot] = u;
    const Vector& v = f.at(t);
    for (std::size_t l = 0; l < f.n; ++l) out[l] += x[u] * v[l];
  }
  return out;
}

// Gerstenhaber circle product: sum_i (-1)^{(i-1)(q-1)} f o_i g.
inline Multi circle(const Multi& f, const Multi& g) {
  const std::size_t p = f.arity, q = g.arity, n = f.n;
  return multi_from(n, p + q - 1, [&](const std::vector<std::size_t>& t) {
    Vector out(n);
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<std::size_t> inner(t.begin() + static_cast<std::ptrdiff_t>(i),
                                     t.begin() + static_cast<std::ptrdiff_t>(i + q));
      const Vector gv = g.at(inner);
      std::vector<std::size_t> outer;
      for (std::size_t k = 0; k < i; ++k) outer.push_back(t[k]);
      outer.push_back(0);
      for (std::size_t k = i + q; k < t.size(); ++k) outer.push_back(t[k]);
      const Vector v = eval_with(f, outer, i, gv);
      const int s = ((i % 2) * ((q - 1) % 2)) ? -1 : 1;
      for (std::size_t l = 0; l < n; ++l) out[l] += s * v[l];
    }
    return out;
  });
}

inline Multi minus(const Multi& a, const Multi& b) {
  Multi r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    for (std::size_t l = 0; l < r.n; ++l) r.values[i][l] -= b.values[i][l];
  return r;
}

}  // namespace oracle

namespace oracle {

// Harrison H^2(A; k) of a commutative local algebra given by its table on the
// maximal ideal (prod[x][y] = coordinates of m_x m_y in the basis m_1..m_r),
// counted as symmetric bilinear forms with f(xy, z) = f(x, yz) modulo the forms
// g(xy) for linear g.
inline std::size_t harrison2_dim(const std::vector<std::vector<Vector>>& prod) {
  const std::size_t r = prod.size();
  if (r == 0) return 0;
  // unknowns: f(x,y) for x <= y
  std::vector<std::vector<std::size_t>> var(r, std::vector<std::size_t>(r));
  std::size_t nv = 0;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) var[x][y] = var[y][x] = nv++;
  std::vector<Vector> eqs;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z) {
        Vector eq(nv);
        for (std::size_t g = 0; g < r; ++g) {
          eq[var[g][z]] += prod[x][y][g];
          eq[var[x][g]] -= prod[y][z][g];
        }
        if (!opdef::is_zero(eq)) eqs.push_back(eq);
      }
  const std::size_t z2 = nv - (eqs.empty() ? 0 : opdef::span_rank(eqs, nv));
  std::vector<Vector> bounds;
  for (std::size_t g = 0; g < r; ++g) {
    Vector b(nv);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = x; y < r; ++y) b[var[x][y]] = prod[x][y][g];
    bounds.push_back(b);
  }
  return z2 - opdef::span_rank(bounds, nv);
}

// Table of k[x]/(x^n) on m_1 = x, .., m_{n-1} = x^{n-1}.
inline std::vector<std::vector<Vector>> truncated_line(std::size_t n) {
  const std::size_t r = n - 1;
  std::vector<std::vector<Vector>> t(r, std::vector<Vector>(r, Vector(r)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (a + b + 2 <= r) t[a][b][a + b + 1] = 1;
  return t;
}

// A family of operations over a commutative base B with basis b_0 = 1, b_1..:
// lambda_k(v_i, v_j) = sum_a b_a psi[a][k](v_i, v_j), extended B-bilinearly to
// B (x) V (index x * n + i). Returns the values of every relation on all triples
// of inputs 1 (x) v; the deformation is a P_B-algebra iff all of them vanish.
inline std::vector<Vector> relations_over_base(const std::vector<std::vector<Vector>>& base_mult,
                                               const std::vector<std::vector<Bilinear>>& psi,
                                               const std::vector<Vector>& relations, std::size_t n) {
  const std::size_t d = base_mult.size();
  const std::size_t edim = psi[0].size();
  const std::size_t big = d * n;
  std::vector<Bilinear> ops(edim, Bilinear(big, std::vector<Vector>(big, Vector(big))));
  for (std::size_t k = 0; k < edim; ++k)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t a = 0; a < d; ++a) {
          // b_x b_y b_a
          Vector c(d);
          for (std::size_t w = 0; w < d; ++w)
            if (sgn(base_mult[x][y][w]) != 0)
              for (std::size_t g = 0; g < d; ++g) c[g] += base_mult[x][y][w] * base_mult[w][a][g];
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t l = 0; l < n; ++l) {
                const Scalar& v = psi[a][k][i][j][l];
                if (sgn(v) == 0) continue;
                for (std::size_t g = 0; g < d; ++g) ops[k][x * n + i][y * n + j][g * n + l] += c[g] * v;
              }
        }
  std::vector<Vector> out;
  for (const auto& r : relations)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out.push_back(eval_free(ops, r, i, j, k, big));
  return out;
}

inline bool all_zero(const std::vector<Vector>& vs) {
  for (const auto& v : vs)
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
  return true;
}

}  // namespace oracle

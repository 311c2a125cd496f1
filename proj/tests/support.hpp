#pragma once
// Random inputs for property tests.

#include <random>
#include <string>

#include "opdef/cohomology.hpp"
#include "opdef/deform.hpp"
#include "opdef/examples.hpp"

namespace support {

using namespace opdef;

inline Scalar small(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  Vector v(n);
  for (auto& x : v) x = small(rng, lo, hi);
  return v;
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small(rng, lo, hi);
  return m;
}

inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix p = random_matrix(n, n, rng, -2, 2);
    if (rank(p) == n) return p;
  }
}

/// V = U + W with dim U = u; products map U x U to W and vanish otherwise, so
/// every composite of two operations is zero and all relations hold.
inline PAlgebra random_nilpotent(const std::string& operad, std::size_t n, std::size_t u, std::mt19937_64& rng) {
  const auto p = preset(operad);
  EquivariantHom c2(p.generators(), n);
  auto table = c2.expand(random_vector(c2.dim(), rng));
  for (auto& m : table)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (l < u || i >= u || j >= u) m(l, i * n + j) = 0;
  return PAlgebra(p, table);
}

/// A valid algebra of dimension <= 4 over the preset, chosen from library
/// examples in a random basis or random two-step nilpotent structures.
inline PAlgebra random_valid(const std::string& operad, std::mt19937_64& rng) {
  const int pick = static_cast<int>(rng() % 3);
  if (pick == 0) {
    const std::size_t n = 2 + rng() % 3;
    return random_nilpotent(operad, n, 1 + rng() % (n - 1), rng);
  }
  PAlgebra base = examples::abelian(operad, 2);
  if (operad == "Lie") base = pick == 1 ? examples::sl2() : examples::heisenberg();
  if (operad == "Ass") base = pick == 1 ? examples::upper_triangular() : examples::truncated_polynomial("Ass", 3);
  if (operad == "Com") base = examples::truncated_polynomial("Com", pick == 1 ? 3 : 4);
  if (operad == "Leib") base = examples::leibniz_nilpotent();
  return examples::change_basis(base, random_invertible(base.dim(), rng));
}

/// Random element of Z^2 as a combination of the kernel basis of d2.
inline Vector random_cocycle(const CochainComplex& c, std::mt19937_64& rng) {
  Vector v = zero_vector(c.c2().dim());
  for (const auto& z : kernel_basis(c.d2_matrix())) axpy(v, small(rng), z);
  return v;
}

/// Random element of B^2.
inline Vector random_coboundary(const CochainComplex& c, std::mt19937_64& rng) {
  const std::size_t n = c.algebra().dim();
  return c.d1(CochainComplex::cochain1(random_vector(n * n, rng), n));
}

/// k + k^t with all products of the ideal zero.
inline LocalAlgebra square_zero(std::size_t t) { return LocalTruncation(t, 1, {}).algebra(); }

/// Infinitesimal deformation with a random cocycle at every ideal basis element.
inline DeformationSeries random_infinitesimal(std::shared_ptr<const CochainComplex> c, std::size_t t,
                                              std::mt19937_64& rng) {
  DeformationSeries l = trivial_deformation(c, square_zero(t));
  for (std::size_t a = 1; a <= t; ++a) l.table[a] = random_cocycle(*c, rng);
  return l;
}

/// Random symmetric normalised Harrison 2-cocycle of `base` with values in k^m:
/// a random combination of class representatives plus a random coboundary.
inline CocycleTable random_harrison_cocycle(const LocalAlgebra& base, std::size_t m, std::mt19937_64& rng) {
  const std::size_t d = base.dim(), r = base.ideal_dim();
  CocycleTable f(d * d, Vector(m));
  for (const auto& rep : harrison(base, 2, m).representatives) {
    const Scalar c = small(rng);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t k = 0; k < m; ++k) f[(x + 1) * d + y + 1][k] += c * rep[(x * r + y) * m + k];
  }
  std::vector<Vector> g(d, Vector(m));
  for (std::size_t a = 1; a < d; ++a) g[a] = random_vector(m, rng);
  const auto dg = coboundary(base, g, m);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = add(f[i], dg[i]);
  return f;
}

}  // namespace support

#include <doctest.h>

#include <random>

#include "opdef/cohomology.hpp"
#include "opdef/examples.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace opdef;

namespace {

oracle::Mult as_mult(const Matrix& m) {
  const std::size_t n = m.rows();
  oracle::Mult b(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) b[i][j][l] = m(l, i * n + j);
  return b;
}

std::vector<Vector> columns_of(const Matrix& f) { return f.column_list(); }

// Value of a C^3 element on the relation vector r at (a, b, c).
Vector c3_value(const CochainComplex& cx, const Vector& x, const Vector& r, std::size_t a, std::size_t b,
                std::size_t c) {
  const auto t = cx.c3().expand(x);
  const Vector coeff = cx.algebra().operad().relation_coordinates(r);
  const std::size_t n = cx.algebra().dim();
  Vector out(n);
  for (std::size_t j = 0; j < coeff.size(); ++j)
    for (std::size_t l = 0; l < n; ++l) out[l] += coeff[j] * t[j](l, (a * n + b) * n + c);
  return out;
}

Vector associator(const FreeArity3& f) {
  const Vector m{1, 0};
  return sub(f.compose2(1, m, m), f.compose2(2, m, m));
}

Vector jacobi(const FreeArity3& f) {
  const Vector ll = f.compose2(1, Vector{1}, Vector{1});
  return add(add(ll, f.act(ll, Perm::one_line({2, 3, 1}))), f.act(ll, Perm::one_line({3, 1, 2})));
}

}  // namespace

TEST_CASE("equivariant hom coordinates round trip") {
  std::mt19937_64 rng(31);
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const RightSModule* m : {&p.generators(), &p.relation_action()}) {
        EquivariantHom h(*m, n);
        const Vector x = support::random_vector(h.dim(), rng);
        const auto t = h.expand(x);
        CHECK(h.coordinates(t) == x);
        CHECK(h.is_equivariant(t));
        // brute-force equivariance f(r . s, x) = f(r, s . x)
        for (const auto& s : all_perms(m->arity()))
          for (std::size_t idx = 0; idx < h.tuple_count(); ++idx) {
            const auto tup = h.tuple_at(idx);
            const std::size_t moved = h.tuple_index(act_on_tuple(s, tup));
            for (std::size_t j = 0; j < m->dim(); ++j)
              for (std::size_t l = 0; l < n; ++l) {
                Scalar lhs = 0;
                for (std::size_t jp = 0; jp < m->dim(); ++jp) lhs += m->action(s)(jp, j) * t[jp](l, idx);
                CHECK(lhs == t[j](l, moved));
              }
          }
      }
    }
  }
  // Hom_{S_2}(sgn (x) V^2, V) on a line vanishes; Hom(V^2, V) for the regular module
  CHECK(EquivariantHom(RightSModule::sign(2), 1).dim() == 0);
  CHECK(EquivariantHom(RightSModule::regular(2), 3).dim() == 27);
  CHECK(EquivariantHom(RightSModule::trivial(2), 3).dim() == 18);
  CHECK(EquivariantHom(RightSModule::regular(3), 2).dim() == 16);
}

TEST_CASE("complex property on random valid algebras") {
  std::mt19937_64 rng(32);
  for (const auto& name : preset_names())
    for (int trial = 0; trial < 4; ++trial) {
      const CochainComplex cx(support::random_valid(name, rng));
      REQUIRE(cx.algebra_valid());
      CHECK((cx.d2_matrix() * cx.d1_matrix()).is_zero());
      CHECK(is_zero(cx.star(cx.structure_cochain(), cx.structure_cochain())));
      CHECK(cx.d1(Matrix::identity(cx.algebra().dim())) == cx.structure_cochain());
      CHECK(is_zero(cx.d1(Matrix(cx.algebra().dim(), cx.algebra().dim()))));
    }
}

TEST_CASE("d1 and d2 agree with the Hochschild differential") {
  std::mt19937_64 rng(33);
  const PAlgebra algs[] = {examples::truncated_polynomial("Ass", 2),
                           examples::change_basis(examples::upper_triangular(), support::random_invertible(3, rng))};
  for (const auto& a : algs) {
    const CochainComplex cx(a);
    const std::size_t n = a.dim();
    const auto m = as_mult(a.structure()[0]);
    const Vector assoc = associator(a.operad().free3());
    CHECK(cx.c2().dim() == n * n * n);
    CHECK(cx.c3().dim() == n * n * n * n);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix f = support::random_matrix(n, n, rng);
      const auto expected = oracle::hochschild_d1(m, columns_of(f));
      const auto got = cx.c2().expand(cx.d1(f))[0];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(got.column(i * n + j) == expected[i][j]);

      const Vector psi = support::random_vector(cx.c2().dim(), rng);
      const auto g = as_mult(cx.c2().expand(psi)[0]);
      const Vector d2 = cx.d2(psi);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(c3_value(cx, d2, assoc, i, j, k) == oracle::hochschild_d2_at(m, g, i, j, k));
    }
  }
}

TEST_CASE("d1 and d2 agree with the Chevalley-Eilenberg differential") {
  std::mt19937_64 rng(34);
  for (const auto& a : {examples::sl2(), examples::heisenberg()}) {
    const CochainComplex cx(a);
    const std::size_t n = a.dim();
    const auto br = as_mult(a.structure()[0]);
    const auto dims = oracle::ce_dims(br);
    CHECK(cx.c2().dim() == dims.c2);
    CHECK(cx.c3().dim() == dims.c3);
    const auto& rep = cx.h2();
    CHECK(rep.dim_z2 == dims.z2);
    CHECK(rep.dim_b2 == dims.b2);
    CHECK(rep.dim_h2 == dims.h2);
    const Vector jac = jacobi(a.operad().free3());
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix f = support::random_matrix(n, n, rng);
      const auto got = cx.c2().expand(cx.d1(f))[0];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(got.column(i * n + j) == oracle::ce_d1_at(br, columns_of(f), i, j));
      const Vector psi = support::random_vector(cx.c2().dim(), rng);
      const auto g = as_mult(cx.c2().expand(psi)[0]);
      const Vector d2 = cx.d2(psi);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(c3_value(cx, d2, jac, i, j, k) == oracle::ce_d2_at(br, g, i, j, k));
    }
  }
  CHECK(CochainComplex(examples::sl2()).h2().dim_h2 == 0);
}

TEST_CASE("inner derivations are cocycles") {
  const auto a = examples::sl2();
  const CochainComplex cx(a);
  Matrix adh(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector v = apply_bilinear(a.structure()[0], unit_vector(3, 0), unit_vector(3, i));
    for (std::size_t l = 0; l < 3; ++l) adh(l, i) = v[l];
  }
  CHECK(is_zero(cx.d1(adh)));
}

TEST_CASE("one-dimensional abelian Lie algebra has no 2-cochains") {
  const CochainComplex cx(examples::abelian("Lie", 1));
  const auto& r = cx.h2();
  CHECK(r.dim_c1 == 1);
  CHECK(r.dim_c2 == 0);
  CHECK(r.dim_h2 == 0);
}

TEST_CASE("representatives, H2 coordinates and coker3") {
  std::mt19937_64 rng(35);
  for (const auto& name : preset_names())
    for (int trial = 0; trial < 3; ++trial) {
      const CochainComplex cx(support::random_valid(name, rng));
      const auto& rep = cx.h2();
      CHECK(rep.dim_h2 == rep.dim_z2 - rep.dim_b2);
      for (std::size_t i = 0; i < rep.dim_h2; ++i) {
        CHECK(is_zero(cx.d2(rep.representatives[i])));
        // representative plus a coboundary has the same coordinates
        const Vector z = add(rep.representatives[i], cx.d1(support::random_matrix(cx.algebra().dim(), cx.algebra().dim(), rng)));
        CHECK(*cx.h2_coordinates(z) == unit_vector(rep.dim_h2, i));
      }
      const Vector psi = support::random_vector(cx.c2().dim(), rng);
      const Vector x = cx.d2(psi);
      const Coker3 c = cx.coker3(x);
      CHECK(c.exact);
      REQUIRE(c.preimage.has_value());
      CHECK(cx.d2(*c.preimage) == x);
      CHECK(cx.coker3(zero_vector(cx.c3().dim())).exact);
      if (cx.coker3_dim() > 0) {
        // a cochain outside B^3
        Vector y = zero_vector(cx.c3().dim());
        for (std::size_t k = 0; k < y.size(); ++k) {
          y = unit_vector(y.size(), k);
          if (!LinearSolver(cx.d2_matrix()).in_image(y)) break;
        }
        CHECK_FALSE(cx.coker3(y).exact);
      }
    }
}

TEST_CASE("invalid algebras have no cohomology report") {
  auto s = examples::sl2().structure();
  s[0](1, 5) += 1;
  s[0](1, 7) -= 1;
  const CochainComplex cx(PAlgebra(preset("Lie"), s));
  CHECK_FALSE(cx.algebra_valid());
  CHECK_THROWS_AS(cx.h2(), PreconditionError);
}

TEST_CASE("star product is bilinear and d2 is its linearisation at pi") {
  std::mt19937_64 rng(36);
  for (const auto& name : preset_names()) {
    const CochainComplex cx(support::random_valid(name, rng));
    const Vector a = support::random_vector(cx.c2().dim(), rng);
    const Vector b = support::random_vector(cx.c2().dim(), rng);
    CHECK(cx.star(add(a, b), b) == add(cx.star(a, b), cx.star(b, b)));
    CHECK(cx.star(a, scale(Scalar(3), b)) == scale(Scalar(3), cx.star(a, b)));
    const Vector& pi = cx.structure_cochain();
    CHECK(cx.d2(a) == scale(Scalar(-1), add(cx.star(a, pi), cx.star(pi, a))));
  }
}

TEST_CASE("pre-Lie identity through the associator") {
  // For Ass the star product read on the associator is the Gerstenhaber circle
  // product; its associator (f*g)*h - f*(g*h) is antisymmetric in g, h.
  std::mt19937_64 rng(37);
  const PAlgebra a = examples::change_basis(examples::truncated_polynomial("Ass", 2), support::random_invertible(2, rng));
  const CochainComplex cx(a);
  const std::size_t n = a.dim();
  const Vector assoc = associator(a.operad().free3());
  auto binary = [&](const Vector& psi) {
    const Matrix m = cx.c2().expand(psi)[0];
    return oracle::multi_from(n, 2, [&](const std::vector<std::size_t>& t) { return m.column(t[0] * n + t[1]); });
  };
  auto ternary = [&](const Vector& x) {
    return oracle::multi_from(n, 3, [&](const std::vector<std::size_t>& t) { return c3_value(cx, x, assoc, t[0], t[1], t[2]); });
  };
  for (int trial = 0; trial < 3; ++trial) {
    const Vector f = support::random_vector(cx.c2().dim(), rng);
    const Vector g = support::random_vector(cx.c2().dim(), rng);
    const Vector h = support::random_vector(cx.c2().dim(), rng);
    // star agrees with the brute-force circle product
    CHECK(ternary(cx.star(f, g)).values == oracle::circle(binary(f), binary(g)).values);
    auto assoc_of = [&](const Vector& x, const Vector& y, const Vector& z) {
      return oracle::minus(oracle::circle(ternary(cx.star(x, y)), binary(z)), oracle::circle(binary(x), ternary(cx.star(y, z))));
    };
    const auto lhs = assoc_of(f, g, h);
    const auto rhs = assoc_of(f, h, g);
    for (std::size_t i = 0; i < lhs.values.size(); ++i) CHECK(lhs.values[i] == scale(Scalar(-1), rhs.values[i]));
  }
}

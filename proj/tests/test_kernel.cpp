#include <doctest.h>

#include <random>

#include "opdef/matrix.hpp"
#include "opdef/perm.hpp"
#include "oracles.hpp"

using namespace opdef;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int sparsity = 3) {
  std::uniform_int_distribution<int> d(-4, 4), z(0, sparsity);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) != 0) m(i, j) = Scalar(d(rng)) / (1 + (z(rng) % 3));
  return m;
}

}  // namespace

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(to_string(Scalar(-3, 2)) == "-3/2");
  CHECK(to_string(Scalar(4) / 2) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("1.5"), InputError);
  CHECK_THROWS_AS(parse_scalar(""), InputError);
}

TEST_CASE("rank-nullity and solve on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Matrix a = random_matrix(r, c, rng, 1 + static_cast<int>(trial % 4));
    const auto ker = kernel_basis(a);
    CHECK(rank(a) + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero(a.apply(v)));
    CHECK(span_rank(ker, c) == ker.size());
    CHECK(image_basis(a).size() == rank(a));
    // a consistent right-hand side
    Vector x(c);
    for (auto& e : x) e = static_cast<int>(rng() % 5) - 2;
    const Vector b = a.apply(x);
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
    LinearSolver ls(a);
    CHECK(ls.rank() == rank(a));
    CHECK(a.apply(*ls.solve(b)) == b);
    const auto cp = coker_projection(a);
    CHECK(cp.dim() == r - rank(a));
    CHECK(is_zero(cp.projection.apply(b)));
    for (std::size_t k : cp.complement) {
      CHECK_FALSE(ls.in_image(unit_vector(r, k)));
      CHECK_FALSE(is_zero(cp.projection.apply(unit_vector(r, k))));
    }
  }
}

TEST_CASE("inconsistent systems are reported") {
  Matrix a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  CHECK_FALSE(solve(a, Vector{1, 2}).has_value());
  CHECK_FALSE(LinearSolver(a).solve(Vector{1, 2}).has_value());
}

TEST_CASE("S3 multiplication table matches direct composition") {
  const auto ps = all_perms(3);
  REQUIRE(ps.size() == 6);
  for (const auto& s : ps)
    for (const auto& t : ps) {
      const Perm st = compose(s, t);
      for (std::size_t i = 0; i < 3; ++i) CHECK(st(i) == s(static_cast<std::size_t>(t(i))));
      CHECK(st.sign() == s.sign() * t.sign());
    }
  CHECK(Perm::one_line({2, 3, 1}).cycle_string() == "(1 2 3)");
  CHECK(Perm::one_line({3, 1, 2}).cycle_string() == "(1 3 2)");
  CHECK(Perm::identity(3).cycle_string() == "id");
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), InputError);
}

TEST_CASE("regular, trivial and sign modules are right modules") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(RightSModule::trivial(n).check_contravariance());
    const auto sg = RightSModule::sign(n);
    for (const auto& s : all_perms(n)) CHECK(sg.action(s)(0, 0) == s.sign());
    const auto reg = RightSModule::regular(n);
    CHECK(reg.dim() == all_perms(n).size());
    CHECK(reg.check_contravariance());
  }
}

TEST_CASE("malformed action matrices are rejected") {
  Matrix m(1, 1);
  m(0, 0) = 2;
  CHECK_THROWS_AS(RightSModule(2, {m}), InputError);
  Matrix a(2, 2), b(2, 2);
  a(0, 1) = a(1, 0) = 1;  // swap
  b(0, 0) = 1;
  b(1, 1) = -1;           // does not satisfy the braid relation with a
  CHECK_THROWS_AS(RightSModule(3, {a, b}), InputError);
}

TEST_CASE("left action on tuples composes contravariantly with the right action") {
  const std::vector<std::size_t> x{10, 20, 30};
  for (const auto& s : all_perms(3))
    for (const auto& t : all_perms(3))
      CHECK(act_on_tuple(compose(s, t), x) == act_on_tuple(s, act_on_tuple(t, x)));
  CHECK(act_on_tuple(Perm::one_line({2, 3, 1}), x) == std::vector<std::size_t>{30, 10, 20});
}

#include "opdef/operad.hpp"

#include <utility>

namespace opdef {

const std::array<Perm, 3>& coset_representatives() {
  static const std::array<Perm, 3> reps{Perm::identity(3), Perm::one_line({2, 3, 1}), Perm::one_line({3, 1, 2})};
  return reps;
}

namespace {

RightSModule check_binary(RightSModule e) {
  if (e.arity() != 2) throw InputError("generators of a quadratic operad must form an arity-2 module");
  return e;
}

}  // namespace

FreeArity3::FreeArity3(RightSModule generators)
    : generators_(check_binary(std::move(generators))), action_(RightSModule::trivial(3)) {
  const std::size_t d = generator_dim();
  const std::size_t n = dim();
  label_to_tree_ = Matrix(n, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t r = 0; r < 3; ++r) {
        // (e_a o_1 e_b) . rho  =  tree(a, b, slot 2) acted on by rho
        const Vector base = unit_vector(n, tree_index(a, b, 2));
        const Vector col = tree_action(coset_representatives()[r]).apply(base);
        for (std::size_t k = 0; k < n; ++k) label_to_tree_(k, label_index(a, b, r)) = col[k];
      }
  LinearSolver inv(label_to_tree_);
  if (inv.rank() != n) throw InputError("label basis of F(E)(3) is degenerate");
  tree_to_label_ = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector col = *inv.solve(unit_vector(n, k));
    for (std::size_t i = 0; i < n; ++i) tree_to_label_(i, k) = col[i];
  }
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < 2; ++i) gens.push_back(tree_to_label_ * tree_action(Perm::adjacent(3, i)) * label_to_tree_);
  action_ = RightSModule(3, std::move(gens));
}

std::size_t FreeArity3::label_index(std::size_t outer, std::size_t inner, std::size_t coset) const {
  const std::size_t d = generator_dim();
  if (outer >= d || inner >= d || coset >= 3) throw InputError("free operad label out of range");
  return (outer * d + inner) * 3 + coset;
}

FreeLabel FreeArity3::label(std::size_t index) const {
  const std::size_t d = generator_dim();
  return FreeLabel{index / 3 / d, (index / 3) % d, index % 3};
}

std::string FreeArity3::label_name(std::size_t index) const {
  const auto l = label(index);
  return "(e" + std::to_string(l.outer + 1) + " o1 e" + std::to_string(l.inner + 1) + ")." +
         coset_representatives()[l.coset].cycle_string();
}

std::size_t FreeArity3::tree_index(std::size_t outer, std::size_t inner, std::size_t free_slot) const {
  const std::size_t d = generator_dim();
  return (outer * d + inner) * 3 + free_slot;
}

TreeTerm FreeArity3::tree_term(std::size_t index) const {
  const std::size_t d = generator_dim();
  return TreeTerm{index / 3 / d, (index / 3) % d, index % 3};
}

Vector FreeArity3::tree_from_composite(std::size_t outer, const Vector& inner, std::size_t x, std::size_t y,
                                       std::size_t z) const {
  // e_outer(inner(a_x, a_y), a_z); if x > y use f(u, v) = (f . t)(v, u).
  Vector nu = inner;
  if (x > y) nu = generators_.action(Perm::adjacent(2, 0)).apply(inner);
  Vector out(dim());
  for (std::size_t b = 0; b < nu.size(); ++b)
    if (sgn(nu[b]) != 0) out[tree_index(outer, b, z)] += nu[b];
  return out;
}

Matrix FreeArity3::tree_action(const Perm& sigma) const {
  // (T . sigma)(a) = T(sigma . a), and (sigma . a)_p = a_{sigma^-1(p)}.
  const Perm inv = sigma.inverse();
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const TreeTerm t = tree_term(k);
    std::size_t xy[2];
    std::size_t c = 0;
    for (std::size_t p = 0; p < 3; ++p)
      if (p != t.free_slot) xy[c++] = p;
    const Vector col =
        tree_from_composite(t.outer, unit_vector(generator_dim(), t.inner), static_cast<std::size_t>(inv(xy[0])),
                            static_cast<std::size_t>(inv(xy[1])), static_cast<std::size_t>(inv(t.free_slot)));
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

Vector FreeArity3::act(const Vector& x, const Perm& sigma) const { return action_.action(sigma).apply(x); }

Vector FreeArity3::compose2(int i, const Vector& mu, const Vector& nu) const {
  const std::size_t d = generator_dim();
  if (mu.size() != d || nu.size() != d) throw InputError("compose2: operands must have dim(E) coordinates");
  Vector out(dim());
  if (i == 1) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (sgn(mu[a]) != 0 && sgn(nu[b]) != 0) out[label_index(a, b, 0)] += mu[a] * nu[b];
    return out;
  }
  if (i != 2) throw InputError("compose2: slot must be 1 or 2");
  // mu(a_1, nu(a_2, a_3)) = (mu . t)(nu(a_2, a_3), a_1)
  const Vector mu_t = generators_.action(Perm::adjacent(2, 0)).apply(mu);
  Vector tree(dim());
  for (std::size_t a = 0; a < d; ++a)
    if (sgn(mu_t[a]) != 0) axpy(tree, mu_t[a], tree_from_composite(a, nu, 1, 2, 0));
  return from_tree(tree);
}

OperadPresentation::OperadPresentation(std::string name, RightSModule generators,
                                       const std::vector<Vector>& relations)
    : name_(std::move(name)), free3_(std::move(generators)), relation_action_(RightSModule::trivial(3)) {
  const std::size_t n = free3_.dim();
  for (const auto& r : relations)
    if (r.size() != n) throw InputError("relation vector has wrong length for F(E)(3)");
  if (!relations.empty()) {
    const Rref rr = rref(Matrix::from_rows(relations, n));
    for (std::size_t i = 0; i < rr.rank(); ++i) relations_.push_back(rr.reduced.row(i));
    relation_pivots_ = rr.pivots;
  }
  // Stability: rank([R; R.s]) == rank(R) for each generator s.
  for (std::size_t g = 0; g < 2; ++g) {
    std::vector<Vector> both(relations_);
    for (const auto& r : relations_) both.push_back(free3_.act(r, Perm::adjacent(3, g)));
    if (span_rank(both, n) != relations_.size()) throw InputError("relation space of '" + name_ + "' is not S_3-stable");
  }
  const std::size_t m = relations_.size();
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < 2; ++g) {
    Matrix a(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const Vector c = relation_coordinates(free3_.act(relations_[j], Perm::adjacent(3, g)));
      for (std::size_t i = 0; i < m; ++i) a(i, j) = c[i];
    }
    gens.push_back(std::move(a));
  }
  relation_action_ = RightSModule(3, std::move(gens));
}

Vector OperadPresentation::relation_coordinates(const Vector& x) const {
  Vector c(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i) c[i] = x.at(relation_pivots_[i]);
  return c;
}

RightSModule dual_module(const RightSModule& e) {
  std::vector<Matrix> gens;
  for (const auto& g : e.generators()) {
    Matrix m = g.transpose();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
    gens.push_back(std::move(m));
  }
  return RightSModule(e.arity(), std::move(gens));
}

std::vector<Vector> annihilator_of(const std::vector<Vector>& space, const Matrix& pairing) {
  // x with x^T G r = 0 for all r: kernel of (G r_j)^T stacked.
  const std::size_t n = pairing.rows();
  if (space.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    return all;
  }
  std::vector<Vector> rows;
  for (const auto& r : space) rows.push_back(pairing.apply(r));
  return kernel_basis(Matrix::from_rows(rows, n));
}

std::vector<Vector> double_annihilator(const std::vector<Vector>& dual_space, const Matrix& pairing) {
  return annihilator_of(dual_space, pairing.transpose());
}

KoszulData koszul_dual(const OperadPresentation& p) {
  RightSModule edual = dual_module(p.generators());
  FreeArity3 free3_dual(edual);
  Matrix pairing = Matrix::identity(p.free3().dim());
  auto rperp = annihilator_of(p.relations(), pairing);
  KoszulData k{std::move(edual), std::move(free3_dual), std::move(rperp), std::move(pairing)};
  if (!pairing_is_equivariant(k, p.free3()))
    throw std::logic_error("Koszul pairing is not S_3-compatible");
  return k;
}

bool pairing_is_equivariant(const KoszulData& k, const FreeArity3& free3) {
  for (const auto& s : all_perms(3)) {
    const Matrix lhs = k.free3_dual.action().action(s).transpose() * k.pairing;
    Matrix rhs = k.pairing * free3.action().action(s.inverse());
    if (s.sign() < 0)
      for (std::size_t r = 0; r < rhs.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) = -rhs(r, c);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

OperadPresentation koszul_dual_presentation(const OperadPresentation& p) {
  KoszulData k = koszul_dual(p);
  return OperadPresentation(p.name() + "!", k.edual, k.rperp);
}

namespace {

std::vector<Vector> orbit(const FreeArity3& f, const Vector& x) {
  std::vector<Vector> out;
  for (const auto& s : all_perms(3)) out.push_back(f.act(x, s));
  return out;
}

}  // namespace

OperadPresentation preset(const std::string& name) {
  if (name == "Com") {
    FreeArity3 f(RightSModule::trivial(2));
    const Vector m{1};
    const Vector assoc = sub(f.compose2(1, m, m), f.compose2(2, m, m));
    return OperadPresentation("Com", RightSModule::trivial(2), orbit(f, assoc));
  }
  if (name == "Ass") {
    FreeArity3 f(RightSModule::regular(2));
    const Vector m{1, 0};
    const Vector assoc = sub(f.compose2(1, m, m), f.compose2(2, m, m));
    return OperadPresentation("Ass", RightSModule::regular(2), orbit(f, assoc));
  }
  if (name == "Lie") {
    FreeArity3 f(RightSModule::sign(2));
    const Vector l{1};
    const Vector ll = f.compose2(1, l, l);
    Vector jacobi = ll;
    for (std::size_t r = 1; r < 3; ++r) jacobi = add(jacobi, f.act(ll, coset_representatives()[r]));
    return OperadPresentation("Lie", RightSModule::sign(2), orbit(f, jacobi));
  }
  if (name == "Leib") {
    // [[a1,a2],a3] - [a1,[a2,a3]] - [[a1,a3],a2]
    FreeArity3 f(RightSModule::regular(2));
    const Vector m{1, 0};
    const Vector ll = f.compose2(1, m, m);
    const Vector leib = sub(sub(ll, f.compose2(2, m, m)), f.act(ll, Perm::one_line({1, 3, 2})));
    return OperadPresentation("Leib", RightSModule::regular(2), orbit(f, leib));
  }
  throw InputError("unknown operad preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"Com", "Ass", "Lie", "Leib"}; }

}  // namespace opdef

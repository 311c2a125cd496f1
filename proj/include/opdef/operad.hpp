#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "opdef/matrix.hpp"
#include "opdef/perm.hpp"

namespace opdef {

/// Coset representatives of S_3 / <(1 2)> used by the label basis, in the
/// fixed order id, (1 2 3), (1 3 2).
const std::array<Perm, 3>& coset_representatives();

/// Label of a basis element of F(E)(3): (e_outer o_1 e_inner) . rho.
struct FreeLabel {
  std::size_t outer;
  std::size_t inner;
  std::size_t coset;  // index into coset_representatives()
};

/// Tree monomial  (a_1, a_2, a_3) |-> e_outer(e_inner(a_x, a_y), a_z)  with x < y
/// and z = free_slot; the second coordinate system of F(E)(3).
struct TreeTerm {
  std::size_t outer;
  std::size_t inner;
  std::size_t free_slot;  // 0-based position of the input attached to the root
};

/// Arity-3 component of the free operad on a right S_2-module E.
///
/// Public coordinates use the label basis (e_a o_1 e_b) . rho, ordered
/// lexicographically in a, then b, then rho in coset_representatives() order.
/// Internally every element is also available in tree-monomial coordinates,
/// where the S_3 action is a signed permutation of inputs and the S_2
/// relations at each vertex are resolved through the transposition matrix of E.
class FreeArity3 {
 public:
  explicit FreeArity3(RightSModule generators);

  const RightSModule& generators() const { return generators_; }
  std::size_t generator_dim() const { return generators_.dim(); }
  std::size_t dim() const { return 3 * generator_dim() * generator_dim(); }

  std::size_t label_index(std::size_t outer, std::size_t inner, std::size_t coset) const;
  FreeLabel label(std::size_t index) const;
  std::string label_name(std::size_t index) const;

  std::size_t tree_index(std::size_t outer, std::size_t inner, std::size_t free_slot) const;
  TreeTerm tree_term(std::size_t index) const;

  /// S_3 action on label coordinates.
  const RightSModule& action() const { return action_; }
  Vector act(const Vector& x, const Perm& sigma) const;

  /// mu o_i nu for i in {1, 2}; mu, nu are coordinate vectors in E.
  Vector compose2(int i, const Vector& mu, const Vector& nu) const;

  Vector to_tree(const Vector& labels) const { return label_to_tree_.apply(labels); }
  Vector from_tree(const Vector& trees) const { return tree_to_label_.apply(trees); }

 private:
  Vector tree_from_composite(std::size_t outer, const Vector& inner, std::size_t x, std::size_t y,
                             std::size_t z) const;
  Matrix tree_action(const Perm& sigma) const;

  RightSModule generators_;
  Matrix label_to_tree_;
  Matrix tree_to_label_;
  RightSModule action_;
};

/// Finitely generated quadratic operad P(k, E, R).
class OperadPresentation {
 public:
  /// `relations` may be any spanning set of R; it is replaced by its RREF basis.
  /// Throws InputError if span(R) is not S_3-stable.
  OperadPresentation(std::string name, RightSModule generators, const std::vector<Vector>& relations);

  const std::string& name() const { return name_; }
  const FreeArity3& free3() const { return free3_; }
  const RightSModule& generators() const { return free3_.generators(); }
  /// RREF basis of span(R) in label coordinates.
  const std::vector<Vector>& relations() const { return relations_; }
  std::size_t relation_dim() const { return relations_.size(); }
  /// S_3 action on span(R) in the basis relations().
  const RightSModule& relation_action() const { return relation_action_; }
  /// Coordinates of x in span(R) with respect to relations(); x must lie in the span.
  Vector relation_coordinates(const Vector& x) const;

 private:
  std::string name_;
  FreeArity3 free3_;
  std::vector<Vector> relations_;
  std::vector<std::size_t> relation_pivots_;
  RightSModule relation_action_;
};

/// Koszul dual data: E^v = Hom(E, k) (x) sgn_2, R^perp and the pairing
/// F(E^v)(3) x F(E)(3) -> k (the identity matrix on label bases).
struct KoszulData {
  RightSModule edual;
  FreeArity3 free3_dual;
  std::vector<Vector> rperp;
  Matrix pairing;
};

/// E^v action: phi . t = -(T^T) phi, from (phi . s)(x) = sgn(s) phi(x . s^-1).
RightSModule dual_module(const RightSModule& e);

KoszulData koszul_dual(const OperadPresentation& p);
/// <x . s, y> == sgn(s) <x, y . s^-1> for all s in S_3.
bool pairing_is_equivariant(const KoszulData& k, const FreeArity3& free3);
/// Annihilator of `space` under a pairing matrix (rows index the dual side).
std::vector<Vector> annihilator_of(const std::vector<Vector>& space, const Matrix& pairing);
/// Vectors y with <x, y> = 0 for all x in `dual_space`.
std::vector<Vector> double_annihilator(const std::vector<Vector>& dual_space, const Matrix& pairing);

/// Presentation of the Koszul dual operad P^!.
OperadPresentation koszul_dual_presentation(const OperadPresentation& p);

/// Built-in presentations: "Com", "Ass", "Lie", "Leib".
OperadPresentation preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace opdef

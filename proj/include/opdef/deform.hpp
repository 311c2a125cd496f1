#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "opdef/cohomology.hpp"
#include "opdef/localbase.hpp"
#include "opdef/matrix.hpp"
#include "opdef/polynomial.hpp"

namespace opdef {

/// lambda = 1 (x) pi + sum_a b_a (x) psi_a over a local base with basis b_0 = 1, b_1..b_r.
/// table[a] holds the C^2 coordinates of psi_a; table[0] is always zero.
struct DeformationSeries {
  std::shared_ptr<const CochainComplex> complex;
  LocalAlgebra base;
  std::vector<Vector> table;
};

/// The trivial deformation 1 (x) pi over `base`.
DeformationSeries trivial_deformation(std::shared_ptr<const CochainComplex> complex, LocalAlgebra base);

/// Throws InputError if the table does not match the base or the complex.
void validate_shape(const DeformationSeries& l);

/// Coefficients of lambda * lambda in base (x) C^3: entry 0 is pi * pi and entry
/// g >= 1 is -d2(psi_g) + sum over ordered pairs a, b >= 1 of c^g_ab psi_a * psi_b,
/// where b_a b_b = sum_g c^g_ab b_g. lambda is a deformation iff every entry is zero.
std::vector<Vector> mc_residual(const DeformationSeries& l);
bool is_deformation(const DeformationSeries& l);

/// phi is a target.dim() x source.dim() matrix. True iff it is unital,
/// multiplicative and maps the maximal ideal into the maximal ideal.
bool is_base_homomorphism(const LocalAlgebra& source, const LocalAlgebra& target, const Matrix& phi);

/// phi_* lambda: psi'_b = sum_a phi[b, a] psi_a. Throws InputError if phi is not a
/// base homomorphism.
DeformationSeries pushout(const Matrix& phi, const DeformationSeries& l, const LocalAlgebra& target);

struct InfinitesimalDifferential {
  /// Base indices k_j with b_{k_j} spanning a complement of M^2 in M; xi_j is
  /// the dual functional, vanishing on M^2.
  std::vector<std::size_t> cotangent;
  Matrix xi;   // t x dim(base), row j is xi_j
  Matrix map;  // dim H^2 x t, column j holds the class of sum_a xi_j(b_a) psi_a
};

/// Throws PreconditionError unless lambda is a deformation.
InfinitesimalDifferential infinitesimal_differential(const DeformationSeries& l);

/// eta_1 over k[[g_1..g_h]]/M^2, h = dim H^2, with table g_i -> i-th representative.
DeformationSeries infinitesimal_universal(std::shared_ptr<const CochainComplex> complex);

/// Base map Id + a'_lambda: C_1 -> base for an infinitesimal lambda (M^2 = 0),
/// sending g_i to sum_j map[i, j] b_{k_j}. Throws PreconditionError if M^2 != 0.
Matrix couniversal_map(const DeformationSeries& l);

/// rho = id + sum_a b_a (x) rho_a with rho o lambda1 = lambda2 o (rho (x) rho), solved
/// layer by layer along M > M^2 > ... with deterministic choices. Each layer is a
/// linear system in the new terms of rho and in a derivation correction of the
/// previous layer (rho -> rho o exp(b D)). Entry 0 of the result is the identity.
/// Returns nullopt when some layer is inconsistent; on bases with M^2 = 0 or
/// M^3 = 0 this decides equivalence, deeper bases may need corrections the
/// layer systems do not see.
std::optional<std::vector<Matrix>> equivalence_solve(const DeformationSeries& l1, const DeformationSeries& l2);

/// Coefficients of rho o lambda1 - lambda2 o (rho (x) rho) in base (x) C^2.
std::vector<Vector> equivalence_defect(const DeformationSeries& l1, const DeformationSeries& l2,
                                       const std::vector<Matrix>& rho);

struct ObstructionResult {
  std::vector<Vector> cochains;  // Phi_k in C^3, k < m
  std::vector<Vector> classes;   // Phi_k in C^3 / B^3
  bool extendable = false;
  /// Extension of lambda over the total algebra when every class vanishes.
  std::optional<DeformationSeries> extension;
};

/// Phi_k = sum_{a, b >= 1} f_k(b_a, b_b) psi_a * psi_b for the extension of the base
/// by k^m with cocycle f. Throws InputError unless f is a symmetric normalised cocycle.
ObstructionResult obstruction(const DeformationSeries& l, const CocycleTable& f, std::size_t m);
/// Same, using the cocycle f_q of the splitting q (total x base matrix) of e; the
/// extension table is q(lambda) + sum_k n_k phi_k.
ObstructionResult obstruction(const DeformationSeries& l, const Extension& e, const Matrix& q);

struct VersalOrder {
  unsigned order = 0;
  LocalTruncation base{0, 0, {}};
  std::size_t base_dim = 0;
  std::size_t new_relations = 0;
  bool residual_zero = false;
};

struct VersalResult {
  unsigned order = 0;
  CohomologyReport h2;
  LocalTruncation base{0, 0, {}};  // k[[g]]/(I + M^{N+1})
  DeformationSeries deformation;
  std::vector<VersalOrder> orders;
  std::vector<Vector> residual;  // mc_residual over the final base
  bool certificate = false;      // residual zero at every order
  Matrix differential;           // of the order-1 truncation
};

/// Order-by-order versal base and deformation up to M^{N+1}. Throws
/// PreconditionError if the algebra is invalid and InputError if N == 0.
VersalResult versal(std::shared_ptr<const CochainComplex> complex, unsigned order);

}  // namespace opdef

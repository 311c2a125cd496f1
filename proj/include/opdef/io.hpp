#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "opdef/deform.hpp"
#include "opdef/localbase.hpp"
#include "opdef/operad.hpp"
#include "opdef/palgebra.hpp"

namespace opdef::io {

/// Key order is insertion order, so emitted documents are stable.
using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);
/// Parse errors are reported as InputError with the source name, line and column.
Json parse_json(std::string_view text, const std::string& source);
Json read_json(const std::filesystem::path& path);
/// 64-bit FNV-1a of the bytes as 16 hex digits.
std::string fnv1a(std::string_view bytes);

/// Rationals are written as "p/q" strings; integers and such strings are accepted.
Json scalar_json(const Scalar& x);
Scalar scalar_from(const Json& j, const std::string& where);
Json vector_json(const Vector& v);
Vector vector_from(const Json& j, const std::string& where, std::size_t size);
Json matrix_json(const Matrix& m);  // list of rows

/// OperadFile: {name, E: {dim, transposition}, relations}. `transposition` is the
/// matrix of (1 2) on E (coordinates of x . (1 2) are T x); relations are label
/// coordinate vectors in the FreeArity3 order.
Json operad_json(const OperadPresentation& p);
OperadPresentation operad_from(const Json& j, const std::string& where);
bool same_presentation(const OperadPresentation& a, const OperadPresentation& b);
/// Preset name when `p` equals that preset, otherwise the inline OperadFile.
Json operad_reference(const OperadPresentation& p);
/// A preset name, a path (relative to `dir`) to an OperadFile, or an inline object.
OperadPresentation resolve_operad(const Json& ref, const std::filesystem::path& dir);

/// AlgebraFile: {operad, dim, constants}, constants[k][i][j] the coordinates of
/// a(e_k)(v_i, v_j). Equivariance is checked, the relations are not.
Json algebra_json(const PAlgebra& a);
PAlgebra algebra_from(const Json& j, const std::filesystem::path& dir);
/// An inline AlgebraFile object or a path to one.
PAlgebra resolve_algebra(const Json& ref, const std::filesystem::path& dir);
/// Bilinear family as constants[k][i][j][l].
Json constants_json(const Bilinear& f);

/// Deformation file: {algebra, base, constants}. `base` is a base spec such as
/// "k[t]/(t^3)"; constants[k][i][j][l] are polynomials in the base variables whose
/// reduction at the unit must be the algebra's structure constants.
struct DeformationInput {
  LocalTruncation base{0, 0, {}};
  DeformationSeries series;
};
DeformationInput deformation_from(const Json& j, const std::filesystem::path& dir);
DeformationInput resolve_deformation(const Json& ref, const std::filesystem::path& dir);
/// Polynomial structure constants pi + sum_a b_a psi_a.
Json polynomial_constants(const DeformationSeries& l, const LocalTruncation& base);
/// A self-contained deformation file (algebra inlined).
Json deformation_json(const DeformationSeries& l, const LocalTruncation& base);

/// {generators, order, ideal, dim, spec}; spec re-parses with parse_base.
Json base_json(const LocalTruncation& base);
/// Names of the base basis monomials ("1", "t", "t^2", ..).
std::vector<std::string> basis_names(const LocalTruncation& base);

}  // namespace opdef::io

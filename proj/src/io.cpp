#include "opdef/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "opdef/polynomial.hpp"

namespace opdef::io {

namespace {

std::string field(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string item(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

const Json& list(const Json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (size && j.size() != *size)
    throw InputError(where + ": expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::size_t count_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Polynomial polynomial_from(const Json& j, const std::string& where, const std::vector<std::string>& names) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else {
    throw InputError(where + ": expected a polynomial string");
  }
  try {
    Polynomial p = parse_polynomial(text, names);
    if (p.is_zero()) return Polynomial(names.size());
    return p;
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::filesystem::path resolve_path(const Json& ref, const std::filesystem::path& dir) {
  const std::filesystem::path p = ref.get<std::string>();
  return p.is_absolute() ? p : dir / p;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; turn it into line and column
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": invalid JSON");
  }
}

Json read_json(const std::filesystem::path& path) { return parse_json(read_file(path), path.string()); }

std::string fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

Json scalar_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from(const Json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else if (j.is_number_float()) {
    throw InputError(where + ": write non-integers as \"p/q\" strings");
  } else {
    throw InputError(where + ": expected a rational");
  }
  try {
    return parse_scalar(text);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Vector vector_from(const Json& j, const std::string& where, std::size_t size) {
  list(j, where, size);
  Vector v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(scalar_from(j[i], item(where, i)));
  return v;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

// ---------------------------------------------------------------- operads

Json operad_json(const OperadPresentation& p) {
  Json e;
  e["dim"] = p.generators().dim();
  e["transposition"] = matrix_json(p.generators().generators().at(0));
  Json rel = Json::array();
  for (const auto& r : p.relations()) rel.push_back(vector_json(r));
  Json out;
  out["name"] = p.name();
  out["E"] = e;
  out["relations"] = rel;
  return out;
}

OperadPresentation operad_from(const Json& j, const std::string& where) {
  const auto& name = member(j, "name", where);
  if (!name.is_string()) throw InputError(field(where, "name") + ": expected a string");
  const auto& e = member(j, "E", where);
  const std::string ew = field(where, "E");
  const std::size_t d = count_from(member(e, "dim", ew), field(ew, "dim"));
  if (d == 0) throw InputError(field(ew, "dim") + ": E must be nonzero");
  const std::string tw = field(ew, "transposition");
  const auto& t = list(member(e, "transposition", ew), tw, d);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < d; ++r) rows.push_back(vector_from(t[r], item(tw, r), d));
  const std::string rw = field(where, "relations");
  const auto& rel = list(member(j, "relations", where), rw);
  std::vector<Vector> relations;
  for (std::size_t i = 0; i < rel.size(); ++i) relations.push_back(vector_from(rel[i], item(rw, i), 3 * d * d));
  try {
    return OperadPresentation(name.get<std::string>(), RightSModule(2, {Matrix::from_rows(rows, d)}), relations);
  } catch (const InputError& ex) {
    throw InputError((where.empty() ? std::string("operad") : where) + ": " + ex.what());
  }
}

bool same_presentation(const OperadPresentation& a, const OperadPresentation& b) {
  return a.generators().dim() == b.generators().dim() &&
         a.generators().generators().at(0) == b.generators().generators().at(0) && a.relations() == b.relations();
}

Json operad_reference(const OperadPresentation& p) {
  for (const auto& name : preset_names())
    if (name == p.name() && same_presentation(preset(name), p)) return name;
  return operad_json(p);
}

OperadPresentation resolve_operad(const Json& ref, const std::filesystem::path& dir) {
  if (ref.is_object()) return operad_from(ref, "operad");
  if (!ref.is_string()) throw InputError("operad: expected a preset name, a path or an object");
  const std::string s = ref.get<std::string>();
  for (const auto& name : preset_names())
    if (name == s) return preset(name);
  const auto path = resolve_path(ref, dir);
  return operad_from(read_json(path), path.string());
}

// ---------------------------------------------------------------- algebras

Json constants_json(const Bilinear& f) {
  Json out = Json::array();
  for (const auto& m : f) {
    const std::size_t n = m.rows();
    Json per_k = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json per_i = Json::array();
      for (std::size_t j = 0; j < n; ++j) per_i.push_back(vector_json(m.column(i * n + j)));
      per_k.push_back(per_i);
    }
    out.push_back(per_k);
  }
  return out;
}

Json algebra_json(const PAlgebra& a) {
  Json out;
  out["operad"] = operad_reference(a.operad());
  out["dim"] = a.dim();
  out["constants"] = constants_json(a.structure());
  return out;
}

PAlgebra algebra_from(const Json& j, const std::filesystem::path& dir) {
  const std::string where = "algebra";
  OperadPresentation operad = resolve_operad(member(j, "operad", where), dir);
  const std::size_t n = count_from(member(j, "dim", where), "algebra.dim");
  if (n == 0) throw InputError("algebra.dim: the algebra must be nonzero");
  const std::size_t edim = operad.generators().dim();
  const std::string cw = "algebra.constants";
  const auto& c = list(member(j, "constants", where), cw, edim);
  std::vector<std::vector<std::vector<Vector>>> consts(edim);
  for (std::size_t k = 0; k < edim; ++k) {
    const auto& ck = list(c[k], item(cw, k), n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ci = list(ck[i], item(item(cw, k), i), n);
      consts[k].emplace_back();
      for (std::size_t jj = 0; jj < n; ++jj) consts[k][i].push_back(vector_from(ci[jj], item(item(item(cw, k), i), jj), n));
    }
  }
  try {
    return PAlgebra::from_constants(std::move(operad), consts);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

PAlgebra resolve_algebra(const Json& ref, const std::filesystem::path& dir) {
  if (ref.is_object()) return algebra_from(ref, dir);
  if (!ref.is_string()) throw InputError("algebra: expected a path or an object");
  const auto path = resolve_path(ref, dir);
  return algebra_from(read_json(path), path.parent_path());
}

// ---------------------------------------------------------------- deformations

std::vector<std::string> basis_names(const LocalTruncation& base) {
  std::vector<std::string> out;
  for (const auto& m : base.basis()) out.push_back(monomial_string(m, base.variable_names()));
  return out;
}

Json base_json(const LocalTruncation& base) {
  Json gens = Json::array();
  for (const auto& g : base.variable_names()) gens.push_back(g);
  Json ideal = Json::array();
  for (const auto& f : base.ideal())
    if (!f.is_zero()) ideal.push_back(to_string(f, base.variable_names()));
  Json out;
  out["generators"] = gens;
  out["order"] = base.order();
  out["ideal"] = ideal;
  out["dim"] = base.dim();
  out["basis"] = basis_names(base);
  out["spec"] = base.describe();
  return out;
}

DeformationInput deformation_from(const Json& j, const std::filesystem::path& dir) {
  const std::string where = "deformation";
  auto complex = std::make_shared<const CochainComplex>(resolve_algebra(member(j, "algebra", where), dir));
  const auto& spec = member(j, "base", where);
  if (!spec.is_string()) throw InputError("deformation.base: expected a base spec string");
  DeformationInput out;
  try {
    out.base = parse_base(spec.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(std::string("deformation.base: ") + e.what());
  }
  out.series = trivial_deformation(complex, out.base.algebra());
  const auto it = j.find("constants");
  if (it == j.end()) return out;

  const PAlgebra& a = complex->algebra();
  const std::size_t n = a.dim(), edim = a.operad().generators().dim(), d = out.base.dim();
  const auto& names = out.base.variable_names();
  // tables[b][k] is the coefficient of basis element b
  std::vector<Bilinear> tables(d, zero_bilinear(edim, n));
  const std::string cw = "deformation.constants";
  list(*it, cw, edim);
  for (std::size_t k = 0; k < edim; ++k) {
    const auto& ck = list((*it)[k], item(cw, k), n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ci = list(ck[i], item(item(cw, k), i), n);
      for (std::size_t jj = 0; jj < n; ++jj) {
        const std::string w = item(item(item(cw, k), i), jj);
        const auto& cij = list(ci[jj], w, n);
        for (std::size_t l = 0; l < n; ++l) {
          const Vector coords = out.base.reduce(polynomial_from(cij[l], item(w, l), names));
          for (std::size_t b = 0; b < d; ++b) tables[b][k](l, i * n + jj) = coords[b];
        }
      }
    }
  }
  for (std::size_t k = 0; k < edim; ++k)
    if (!(tables[0][k] == a.structure()[k]))
      throw InputError(cw + ": constant terms differ from the algebra's structure constants");
  for (std::size_t b = 1; b < d; ++b) {
    if (!complex->c2().is_equivariant(tables[b]))
      throw InputError(cw + ": coefficient of " + basis_names(out.base)[b] + " is not S_2-equivariant");
    out.series.table[b] = complex->c2().coordinates(tables[b]);
  }
  return out;
}

DeformationInput resolve_deformation(const Json& ref, const std::filesystem::path& dir) {
  if (ref.is_object()) return deformation_from(ref, dir);
  if (!ref.is_string()) throw InputError("deformation: expected a path or an object");
  const auto path = resolve_path(ref, dir);
  return deformation_from(read_json(path), path.parent_path());
}

Json polynomial_constants(const DeformationSeries& l, const LocalTruncation& base) {
  const PAlgebra& a = l.complex->algebra();
  const std::size_t n = a.dim(), edim = a.operad().generators().dim();
  std::vector<Bilinear> tables;
  tables.push_back(a.structure());
  for (std::size_t b = 1; b < l.table.size(); ++b) tables.push_back(l.complex->c2().expand(l.table[b]));
  Json out = Json::array();
  for (std::size_t k = 0; k < edim; ++k) {
    Json per_k = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json per_i = Json::array();
      for (std::size_t j = 0; j < n; ++j) {
        Json slot = Json::array();
        for (std::size_t o = 0; o < n; ++o) {
          Vector coords(tables.size());
          for (std::size_t b = 0; b < tables.size(); ++b) coords[b] = tables[b][k](o, i * n + j);
          slot.push_back(to_string(base.lift(coords), base.variable_names()));
        }
        per_i.push_back(slot);
      }
      per_k.push_back(per_i);
    }
    out.push_back(per_k);
  }
  return out;
}

Json deformation_json(const DeformationSeries& l, const LocalTruncation& base) {
  Json out;
  out["algebra"] = algebra_json(l.complex->algebra());
  out["base"] = base.describe();
  out["constants"] = polynomial_constants(l, base);
  return out;
}

}  // namespace opdef::io

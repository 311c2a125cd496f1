#include "opdef/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "opdef/cohomology.hpp"
#include "opdef/deform.hpp"
#include "opdef/io.hpp"
#include "opdef/localbase.hpp"

namespace opdef::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Outcome {
  int code = kHolds;
  Json result = Json::object();
  Json certificate = Json::object();
};

/// Records every input the command reads, with its digest.
class Inputs {
 public:
  Json load(const std::string& role, const std::string& path) {
    const std::string bytes = io::read_file(path);
    record(role, path, bytes);
    return io::parse_json(bytes, path);
  }
  void record(const std::string& role, const std::string& source, std::string_view bytes) {
    Json e;
    e["role"] = role;
    e["source"] = source;
    e["fnv1a"] = io::fnv1a(bytes);
    list_.push_back(e);
  }
  const Json& list() const { return list_; }

 private:
  Json list_ = Json::array();
};

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

std::shared_ptr<const CochainComplex> valid_complex(PAlgebra a) {
  auto c = std::make_shared<const CochainComplex>(std::move(a));
  if (!c->algebra_valid()) throw PreconditionError("the structure constants violate the operad's relations; run check");
  return c;
}

Json coords_list(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::vector_json(v));
  return out;
}

Json cohomology_dims(const CochainComplex& c) {
  const auto& r = c.h2();
  Json d;
  d["C1"] = r.dim_c1;
  d["C2"] = r.dim_c2;
  d["C3"] = r.dim_c3;
  d["H1"] = kernel_basis(c.d1_matrix()).size();
  d["Z2"] = r.dim_z2;
  d["B2"] = r.dim_b2;
  d["H2"] = r.dim_h2;
  return d;
}

bool infinitesimal_base(const LocalTruncation& b) { return b.algebra().ideal_square().empty(); }

// M^3 = 0, where the layered equivalence solve decides equivalence
bool cube_zero(const LocalTruncation& b) {
  for (const auto& m : monomials_up_to(b.generators(), 3))
    if (degree(m) == 3 && !b.contains(Polynomial::monomial(m))) return false;
  return true;
}

Json generator_images(const Matrix& phi, const LocalTruncation& source, const LocalTruncation& target) {
  Json out;
  for (std::size_t i = 0; i < source.generators(); ++i) {
    Monomial m(source.generators(), 0);
    m[i] = 1;
    out[source.variable_names()[i]] = to_string(target.lift(phi.column(source.basis_index(m))), target.variable_names());
  }
  return out;
}

// ---------------------------------------------------------------- commands

Outcome cmd_check(Inputs& in, const std::string& file) {
  const PAlgebra a = io::algebra_from(in.load("algebra", file), dir_of(file));
  const AlgebraCheck check = check_algebra(a);
  const std::size_t n = a.dim();
  Json violations = Json::array();
  for (const auto& v : check.violations) {
    Json values = Json::array();
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t col = 0; col < n * n * n; ++col)
        if (sgn(v.value(l, col)) != 0) {
          Json e;
          e["inputs"] = {col / (n * n), (col / n) % n, col % n};
          e["output"] = l;
          e["value"] = io::scalar_json(v.value(l, col));
          values.push_back(e);
        }
    Json e;
    e["relation"] = v.index;
    e["coordinates"] = io::vector_json(a.operad().relations()[v.index]);
    e["nonzero_values"] = values;
    violations.push_back(e);
  }
  Outcome o;
  o.result["operad"] = a.operad().name();
  o.result["dim"] = n;
  o.result["relations_checked"] = a.operad().relation_dim();
  o.result["equivariance_ok"] = check.equivariance_ok;
  o.result["violations"] = violations;
  o.certificate["algebra"] = check.ok() ? "pass" : "fail";
  o.code = check.ok() ? kHolds : kFails;
  return o;
}

Outcome cmd_cohomology(Inputs& in, const std::string& file, int deg) {
  if (deg != 1 && deg != 2) throw InputError("--deg must be 1 or 2");
  const auto c = valid_complex(io::algebra_from(in.load("algebra", file), dir_of(file)));
  const auto& r = c->h2();
  const std::size_t n = c->algebra().dim();
  Outcome o;
  o.result["operad"] = c->algebra().operad().name();
  o.result["dims"] = cohomology_dims(*c);
  Json reps = Json::array();
  if (deg == 1) {
    for (const auto& v : kernel_basis(c->d1_matrix())) reps.push_back(io::matrix_json(CochainComplex::cochain1(v, n)));
    o.result["derivations"] = reps;
  } else {
    for (const auto& v : r.representatives) {
      Json e;
      e["coordinates"] = io::vector_json(v);
      e["constants"] = io::constants_json(c->c2().expand(v));
      reps.push_back(e);
    }
    o.result["representatives"] = reps;
  }
  bool cocycles = true;
  for (const auto& v : r.representatives) cocycles = cocycles && is_zero(c->d2(v));
  std::vector<Vector> span = image_basis(c->d1_matrix());
  span.insert(span.end(), r.representatives.begin(), r.representatives.end());
  const bool independent = span_rank(span, r.dim_c2) == r.dim_b2 + r.dim_h2;
  const bool square = (c->d2_matrix() * c->d1_matrix()).is_zero();
  o.certificate["d2_after_d1_zero"] = square;
  o.certificate["representatives_are_cocycles"] = cocycles;
  o.certificate["representatives_independent_mod_B2"] = independent;
  o.code = square && cocycles && independent ? kHolds : kInternalError;
  return o;
}

Outcome cmd_infinitesimal(Inputs& in, const std::string& file) {
  const Json j = in.load("input", file);
  Outcome o;
  if (!j.contains("base")) {
    // an algebra: emit the universal infinitesimal deformation
    const auto c = valid_complex(io::algebra_from(j, dir_of(file)));
    const DeformationSeries eta = infinitesimal_universal(c);
    const LocalTruncation base(c->h2().dim_h2, 1, {});
    const auto diff = infinitesimal_differential(eta);
    const bool identity = diff.map == Matrix::identity(c->h2().dim_h2);
    o.result["dims"] = cohomology_dims(*c);
    o.result["base"] = io::base_json(base);
    o.result["deformation"] = io::deformation_json(eta, base);
    o.certificate["residual"] = is_deformation(eta) ? "zero" : "nonzero";
    o.certificate["differential_identity"] = identity;
    o.code = is_deformation(eta) && identity ? kHolds : kInternalError;
    return o;
  }
  const auto d = io::deformation_from(j, dir_of(file));
  const auto& l = d.series;
  if (!l.complex->algebra_valid()) throw PreconditionError("the algebra violates the operad's relations; run check");
  if (!is_deformation(l)) {
    o.result["base"] = io::base_json(d.base);
    o.certificate["residual"] = "nonzero";
    o.code = kFails;
    return o;
  }
  const auto diff = infinitesimal_differential(l);
  const auto names = io::basis_names(d.base);
  Json cot = Json::array();
  for (auto k : diff.cotangent) cot.push_back(names[k]);
  o.result["base"] = io::base_json(d.base);
  o.result["dims"] = cohomology_dims(*l.complex);
  o.result["cotangent"] = cot;
  o.result["differential"] = io::matrix_json(diff.map);
  o.certificate["residual"] = "zero";
  if (infinitesimal_base(d.base)) {
    const Matrix phi = couniversal_map(l);
    const std::size_t h = l.complex->h2().dim_h2;
    const LocalTruncation c1(h, 1, {});
    const DeformationSeries induced = pushout(phi, infinitesimal_universal(l.complex), d.base.algebra());
    const bool equivalent = equivalence_solve(induced, l).has_value();
    o.result["couniversal_map"] = generator_images(phi, c1, d.base);
    o.certificate["pushout_of_universal_equivalent"] = equivalent;
    o.code = equivalent ? kHolds : kInternalError;
  }
  return o;
}

Outcome cmd_versal(Inputs& in, const std::string& file, unsigned order) {
  const auto c = valid_complex(io::algebra_from(in.load("algebra", file), dir_of(file)));
  const VersalResult v = versal(c, order);
  const std::size_t h = v.h2.dim_h2;

  Json rels = Json::array();
  for (const auto& f : v.base.ideal()) {
    if (f.is_zero()) continue;
    Json e;
    e["generator"] = to_string(f, v.base.variable_names());
    e["leading_degree"] = f.low_degree();
    rels.push_back(e);
  }
  Json orders = Json::array();
  bool tangent = true;
  for (const auto& s : v.orders) {
    const std::size_t h1 = harrison(s.base.algebra(), 1).dim;
    tangent = tangent && h1 == h;
    Json e;
    e["order"] = s.order;
    e["base"] = s.base.describe();
    e["base_dim"] = s.base_dim;
    e["new_relations"] = s.new_relations;
    e["residual_zero"] = s.residual_zero;
    e["harrison_H1"] = h1;
    orders.push_back(e);
  }
  bool residual_zero = true;
  for (const auto& r : v.residual) residual_zero = residual_zero && is_zero(r);
  const bool identity = v.differential == Matrix::identity(h);

  Outcome o;
  Json h2;
  h2["dims"] = cohomology_dims(*c);
  h2["representatives"] = coords_list(v.h2.representatives);
  o.result["H2"] = h2;
  o.result["base"] = io::base_json(v.base);
  o.result["relations"] = rels;
  o.result["orders"] = orders;
  o.result["differential"] = io::matrix_json(v.differential);
  o.result["deformation"] = io::deformation_json(v.deformation, v.base);
  o.certificate["residual"] = residual_zero ? "zero" : "nonzero";
  o.certificate["modulo"] = "I + M^" + std::to_string(order + 1);
  o.certificate["residual_zero_at_every_order"] = v.certificate;
  o.certificate["differential_identity"] = identity;
  o.certificate["tangent_dim_matches_H2"] = tangent;
  o.code = residual_zero && v.certificate && identity && tangent ? kHolds : kFails;
  return o;
}

Outcome cmd_pushout(Inputs& in, const std::string& file, const std::string& target_spec,
                    const std::vector<std::string>& images) {
  const auto d = io::deformation_from(in.load("deformation", file), dir_of(file));
  in.record("target", "--target", target_spec);
  const LocalTruncation target = parse_base(target_spec);
  const std::size_t g = d.base.generators();
  if (images.size() != g)
    throw InputError("--map needs " + std::to_string(g) + " image(s), one per generator of " + d.base.describe());
  std::vector<Polynomial> p;
  for (const auto& s : images) {
    in.record("map", "--map", s);
    const Polynomial q = parse_polynomial(s, target.variable_names());
    p.push_back(q.is_zero() ? Polynomial(target.generators()) : q);
  }
  if (!is_deformation(d.series)) throw PreconditionError("input is not a deformation (nonzero residual)");
  Matrix phi(target.dim(), d.base.dim());
  for (std::size_t a = 0; a < d.base.dim(); ++a) {
    Polynomial img = Polynomial::monomial(Monomial(target.generators(), 0));
    for (std::size_t i = 0; i < g; ++i)
      for (unsigned e = 0; e < d.base.basis()[a][i]; ++e) img = (img * p[i]).truncated(target.order());
    const Vector col = target.reduce(img);
    for (std::size_t r = 0; r < target.dim(); ++r) phi(r, a) = col[r];
  }
  const DeformationSeries out = pushout(phi, d.series, target.algebra());
  Outcome o;
  o.result["source_base"] = d.base.describe();
  o.result["target_base"] = target.describe();
  o.result["base_map"] = io::matrix_json(phi);
  o.result["deformation"] = io::deformation_json(out, target);
  const bool valid = is_deformation(out);
  o.certificate["residual"] = valid ? "zero" : "nonzero";
  o.code = valid ? kHolds : kInternalError;
  return o;
}

Outcome cmd_equiv(Inputs& in, const std::string& f1, const std::string& f2) {
  const auto d1 = io::deformation_from(in.load("first", f1), dir_of(f1));
  const auto d2 = io::deformation_from(in.load("second", f2), dir_of(f2));
  if (!io::same_presentation(d1.series.complex->algebra().operad(), d2.series.complex->algebra().operad()))
    throw InputError("the deformations are over different operads");
  if (d1.base.basis() != d2.base.basis() || d1.base.describe() != d2.base.describe())
    throw InputError("the deformations have different bases: " + d1.base.describe() + " and " + d2.base.describe());
  for (const auto* d : {&d1, &d2})
    if (!is_deformation(d->series)) throw PreconditionError("input is not a deformation (nonzero residual)");
  const auto rho = equivalence_solve(d1.series, d2.series);
  const bool same_diff =
      infinitesimal_differential(d1.series).map == infinitesimal_differential(d2.series).map;
  Outcome o;
  o.result["base"] = d1.base.describe();
  o.result["differentials_equal"] = same_diff;
  if (!rho) {
    o.result["verdict"] = cube_zero(d1.base) ? "not equivalent" : "no equivalence found";
    o.certificate["decided"] = cube_zero(d1.base);
    o.code = kFails;
    return o;
  }
  bool identity = true;
  for (std::size_t a = 1; a < rho->size(); ++a) identity = identity && (*rho)[a].is_zero();
  const std::size_t n = d1.series.complex->algebra().dim();
  Json m = Json::array();
  for (std::size_t r = 0; r < n; ++r) {
    Json row = Json::array();
    for (std::size_t col = 0; col < n; ++col) {
      Vector coords(rho->size());
      for (std::size_t a = 0; a < rho->size(); ++a) coords[a] = (*rho)[a](r, col);
      row.push_back(to_string(d1.base.lift(coords), d1.base.variable_names()));
    }
    m.push_back(row);
  }
  bool defect_zero = true;
  for (const auto& v : equivalence_defect(d1.series, d2.series, *rho)) defect_zero = defect_zero && is_zero(v);
  o.result["verdict"] = identity ? "equivalent (identity)" : "equivalent";
  o.result["rho"] = m;
  o.certificate["defect"] = defect_zero ? "zero" : "nonzero";
  o.code = defect_zero ? kHolds : kInternalError;
  return o;
}

Outcome cmd_harrison(Inputs& in, const std::string& spec, std::size_t m) {
  in.record("base", "argument", spec);
  if (m == 0) throw InputError("--coefficients must be positive");
  const LocalTruncation base = parse_base(spec);
  const LocalAlgebra& a = base.algebra();
  const auto h1 = harrison(a, 1, m);
  const auto h2 = harrison(a, 2, m);
  std::vector<Polynomial> gens;
  for (const auto& f : base.ideal())
    if (!f.is_zero()) gens.push_back(f);
  const std::size_t mi = ideal_generators_mod_mi(base.generators(), gens, base.order(), base.variable_names()).basis.size();
  Outcome o;
  o.result["base"] = io::base_json(base);
  o.result["coefficients"] = m;
  o.result["cotangent_dim"] = a.cotangent_dim();
  o.result["H1"] = h1.dim;
  o.result["H2"] = h2.dim;
  o.result["I_over_MI"] = mi;
  o.certificate["H1_equals_cotangent"] = h1.dim == m * a.cotangent_dim();
  o.certificate["H2_equals_I_over_MI"] = h2.dim == m * mi;
  o.certificate["shuffles_subcomplex"] = shuffles_form_subcomplex(a);
  const bool ok = h1.dim == m * a.cotangent_dim() && h2.dim == m * mi && shuffles_form_subcomplex(a);
  o.code = ok ? kHolds : kInternalError;
  return o;
}

Outcome cmd_obstruction(Inputs& in, const std::string& file) {
  const Json j = in.load("obstruction", file);
  if (!j.is_object() || !j.contains("deformation")) throw InputError("obstruction: missing field 'deformation'");
  const auto d = io::resolve_deformation(j["deformation"], dir_of(file));
  if (!j.contains("module_dim")) throw InputError("obstruction: missing field 'module_dim'");
  const auto& md = j["module_dim"];
  if (!md.is_number_integer() || md.get<long long>() <= 0) throw InputError("obstruction.module_dim: expected a positive integer");
  const std::size_t m = md.get<std::size_t>();
  const auto names = io::basis_names(d.base);
  const std::size_t dim = d.base.dim();
  CocycleTable f(dim * dim, Vector(m, Scalar(0)));
  if (!j.contains("cocycle") || !j["cocycle"].is_array()) throw InputError("obstruction: 'cocycle' must be an array");
  const auto index_of = [&](const Json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": expected a basis monomial name");
    const auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) throw InputError(where + ": '" + v.get<std::string>() + "' is not a basis monomial of " + d.base.describe());
    return static_cast<std::size_t>(it - names.begin());
  };
  for (std::size_t e = 0; e < j["cocycle"].size(); ++e) {
    const auto& entry = j["cocycle"][e];
    const std::string w = "obstruction.cocycle[" + std::to_string(e) + "]";
    if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") || !entry.contains("value"))
      throw InputError(w + ": expected {left, right, value}");
    const std::size_t a = index_of(entry["left"], w + ".left"), b = index_of(entry["right"], w + ".right");
    f[a * dim + b] = io::vector_from(entry["value"], w + ".value", m);
  }
  if (!is_deformation(d.series)) throw PreconditionError("input is not a deformation (nonzero residual)");
  const ObstructionResult r = obstruction(d.series, f, m);

  Outcome o;
  o.result["base"] = d.base.describe();
  o.result["module_dim"] = m;
  o.result["cochains"] = coords_list(r.cochains);
  o.result["classes"] = coords_list(r.classes);
  o.result["extendable"] = r.extendable;
  if (r.extension) {
    const auto& ext = *r.extension;
    Json table;
    for (std::size_t b = 0; b < ext.base.dim(); ++b)
      table[ext.base.name(b)] = io::constants_json(ext.complex->c2().expand(ext.table[b]));
    o.result["extension"] = table;
    const bool valid = is_deformation(ext);
    o.certificate["extension_residual"] = valid ? "zero" : "nonzero";
    o.code = valid ? kHolds : kInternalError;
  } else {
    o.code = kFails;
  }
  o.certificate["verdict"] = r.extendable ? "extends" : "obstructed";
  return o;
}

Outcome cmd_operad(Inputs& in, const std::string& ref) {
  const auto names = preset_names();
  const bool is_preset = std::find(names.begin(), names.end(), ref) != names.end();
  std::optional<OperadPresentation> p;
  if (is_preset) {
    in.record("operad", "preset", ref);
    p = preset(ref);
  } else {
    p = io::operad_from(in.load("operad", ref), ref);
  }
  const auto k = koszul_dual(*p);
  const bool roundtrip = io::same_presentation(io::operad_from(io::operad_json(*p), "operad"), *p);
  const std::size_t e = p->generators().dim();
  Outcome o;
  o.result["operad"] = io::operad_json(*p);
  o.result["koszul_dual_relations"] = k.rperp.size();
  o.certificate["round_trip"] = roundtrip;
  o.certificate["dual_dimension"] = k.rperp.size() + p->relation_dim() == 3 * e * e;
  o.certificate["double_annihilator"] = same_span(double_annihilator(k.rperp, k.pairing), p->relations(), 3 * e * e);
  const bool ok = roundtrip && k.rperp.size() + p->relation_dim() == 3 * e * e;
  o.code = ok ? kHolds : kInternalError;
  return o;
}

// ---------------------------------------------------------------- text output

bool is_leaf(const Json& j) {
  if (!j.is_structured()) return true;
  if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured(); });
  return false;
}

std::string leaf_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + leaf_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  const auto entry = [&](const std::string& key, const Json& v) {
    if (is_leaf(v)) {
      out << indent << key << ": " << leaf_text(v) << "\n";
    } else {
      out << indent << key << ":\n";
      render(v, out, indent + "  ");
    }
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) entry(k, v);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) entry("[" + std::to_string(i) + "]", j[i]);
  } else {
    out << indent << leaf_text(j) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operadic cohomology and versal deformations of finite-dimensional algebras", "opdef"};
  std::string format = "json";
  std::optional<long long> seed;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized self-tests; the commands here use no randomness");
  app.require_subcommand(1);
  app.fallthrough();

  std::string file, file2, spec, target;
  std::vector<std::string> images;
  int deg = 2;
  unsigned order = 0;
  std::size_t coefficients = 1;
  Json echo;

  auto* check = app.add_subcommand("check", "Verify that an algebra file satisfies the operad's relations");
  check->add_option("algebra", file, "Algebra file")->required();
  auto* coh = app.add_subcommand("cohomology", "Cochain dimensions, H^1 or H^2 with representatives");
  coh->add_option("algebra", file, "Algebra file")->required();
  coh->add_option("--deg", deg, "Degree (1 or 2)");
  auto* inf = app.add_subcommand("infinitesimal",
                                 "Universal infinitesimal deformation of an algebra, or the differential of a deformation");
  inf->add_option("file", file, "Algebra or deformation file")->required();
  auto* ver = app.add_subcommand("versal", "Versal base and deformation up to a given order");
  ver->add_option("algebra", file, "Algebra file")->required();
  ver->add_option("--order", order, "Truncation order N (base modulo M^{N+1})")->required();
  auto* push = app.add_subcommand("pushout", "Push a deformation forward along a base homomorphism");
  push->add_option("deformation", file, "Deformation file")->required();
  push->add_option("--target", target, "Target base, e.g. k[s]/(s^3)")->required();
  push->add_option("--map", images, "Images of the source generators, in order")->required();
  auto* eq = app.add_subcommand("equiv", "Decide equivalence of two deformations over the same base");
  eq->add_option("first", file, "Deformation file")->required();
  eq->add_option("second", file2, "Deformation file")->required();
  auto* har = app.add_subcommand("harrison", "Harrison H^1 and H^2 of a local base");
  har->add_option("base", spec, "Base spec, e.g. k[x]/(x^3)")->required();
  har->add_option("--coefficients", coefficients, "Dimension m of the coefficient module k^m");
  auto* obs = app.add_subcommand("obstruction", "Obstruction to extending a deformation along a square-zero extension");
  obs->add_option("file", file, "Obstruction file {deformation, module_dim, cocycle}")->required();
  auto* op = app.add_subcommand("operad", "Emit an operad presentation file with Koszul dual checks");
  op->add_option("operad", spec, "Preset name or operad file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  echo["name"] = sub->get_name();
  Json argv = Json::array();
  for (const auto& a : args) argv.push_back(a);
  echo["args"] = argv;
  echo["format"] = format;
  echo["seed"] = seed ? Json(*seed) : Json(nullptr);

  Inputs inputs;
  Outcome o;
  Json error;
  try {
    if (sub == check) o = cmd_check(inputs, file);
    else if (sub == coh) o = cmd_cohomology(inputs, file, deg);
    else if (sub == inf) o = cmd_infinitesimal(inputs, file);
    else if (sub == ver) o = cmd_versal(inputs, file, order);
    else if (sub == push) o = cmd_pushout(inputs, file, target, images);
    else if (sub == eq) o = cmd_equiv(inputs, file, file2);
    else if (sub == har) o = cmd_harrison(inputs, spec, coefficients);
    else if (sub == obs) o = cmd_obstruction(inputs, file);
    else o = cmd_operad(inputs, spec);
  } catch (const InputError& e) {
    error["kind"] = "input";
    error["message"] = e.what();
    o.code = kInputError;
  } catch (const PreconditionError& e) {
    error["kind"] = "precondition";
    error["message"] = e.what();
    o.code = kFails;
  } catch (const std::exception& e) {
    error["kind"] = "internal";
    error["message"] = e.what();
    o.code = kInternalError;
  }

  Json report;
  report["command"] = echo;
  report["inputs"] = inputs.list();
  if (error.is_null()) {
    report["result"] = o.result;
    report["certificate"] = o.certificate;
  } else {
    report["error"] = error;
    err << "error: " << error["message"].get<std::string>() << "\n";
  }
  report["exit_code"] = o.code;
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    render(report, out, "");
  }
  return o.code;
}

}  // namespace opdef::cli

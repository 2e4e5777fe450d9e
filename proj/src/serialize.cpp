#include "resonax/serialize.hpp"

#include <cmath>
#include <limits>

#include "resonax/error.hpp"

namespace resonax::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

std::int64_t as_int64(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()) {
      fail(where, "integer out of int64 range");
    }
    return v.get<std::int64_t>();
  }
  fail(where, "expected an integer, got " + std::string(v.type_name()));
}

BigInt as_bigint(const Json& v, const std::string& where) {
  if (v.is_string()) {
    const Rational r = parse_rational(v.get<std::string>());
    if (r.get_den() != 1) fail(where, "expected an integer");
    return r.get_num();
  }
  return from_int64(as_int64(v, where));
}

Rational as_rational(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InvalidInput& e) {
      fail(where, e.what());
    }
  }
  return Rational(from_int64(as_int64(v, where)));
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<double> as_doubles(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(where + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::vector<std::int64_t> parse_int_vector(const Json& j, const char* what) {
  if (!j.is_array()) fail(what, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int64(j[i], std::string(what) + "[" + std::to_string(i) + "]"));
  return out;
}

ValidatedMatrix parse_weight_matrix(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "rows", "weights") : j;
  if (!rows.is_array()) fail("weights.rows", "expected an array of rows");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "weights.rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) fail(where, "expected an array of integers");
    out.push_back(parse_int_vector(rows[i], where.c_str()));
  }
  return validate_weight_matrix(std::move(out));
}

Character parse_character(const Json& j) {
  if (!j.is_array()) fail("character", "expected an array of integers");
  Character k;
  for (std::size_t i = 0; i < j.size(); ++i) k.push_back(as_bigint(j[i], "character[" + std::to_string(i) + "]"));
  return k;
}

Polynomial parse_polynomial(const Json& j, std::size_t variables) {
  if (!j.is_array()) fail("polynomial", "expected an array of terms");
  Polynomial p(variables);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string where = "polynomial[" + std::to_string(t) + "]";
    const Json& exp = field(j[t], "exp", where);
    if (!exp.is_array() || exp.size() != variables) {
      fail(where + ".exp", "expected " + std::to_string(variables) + " exponents");
    }
    MultiIndex alpha = MultiIndex::zero(variables);
    for (std::size_t i = 0; i < variables; ++i) {
      const std::int64_t e = as_int64(exp[i], where + ".exp");
      if (e < 0 || e > std::numeric_limits<std::uint32_t>::max()) fail(where + ".exp", "exponent out of range");
      alpha[i] = static_cast<std::uint32_t>(e);
    }
    const Rational re = as_rational(field(j[t], "re", where), where + ".re");
    const Rational im = j[t].contains("im") ? as_rational(j[t]["im"], where + ".im") : Rational(0);
    p.add_term(alpha, GaussianRational(re, im));
  }
  return p;
}

PolyMap parse_polymap(const Json& j, std::size_t variables) {
  if (!j.is_array() || j.empty()) fail("map", "expected a nonempty array of polynomials");
  const std::size_t n = variables ? variables : j.size();
  std::vector<Polynomial> components;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      components.push_back(parse_polynomial(j[i], n));
    } catch (const InvalidInput& e) {
      fail("map[" + std::to_string(i) + "]", e.what());
    }
  }
  return PolyMap(std::move(components));
}

DomainSpec parse_domain(const Json& j) {
  const Json& kind_json = field(j, "kind", "domain");
  if (!kind_json.is_string()) fail("domain.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "unit-ball") {
    const std::int64_t n = as_int64(field(j, "n", "domain"), "domain.n");
    if (n < 1) fail("domain.n", "must be >= 1");
    return DomainSpec::unit_ball(static_cast<std::size_t>(n));
  }
  if (kind == "polydisc") return DomainSpec::polydisc(as_doubles(field(j, "radii", "domain"), "domain.radii"));
  if (kind == "weighted-ellipsoid") {
    return DomainSpec::weighted_ellipsoid(as_doubles(field(j, "coefficients", "domain"), "domain.coefficients"),
                                          as_doubles(field(j, "exponents", "domain"), "domain.exponents"));
  }
  if (kind == "shear-image") {
    const DomainSpec base = parse_domain(field(j, "base", "domain"));
    if (j.contains("shear")) {
      const std::int64_t k = as_int64(j["shear"], "domain.shear");
      if (k < 1 || k > std::numeric_limits<std::uint32_t>::max()) fail("domain.shear", "must be a positive integer");
      return DomainSpec::shear_image(base, static_cast<std::uint32_t>(k));
    }
    const std::size_t n = base.dimension();
    return DomainSpec::shear_image(base, parse_polymap(field(j, "map", "domain"), n),
                                   parse_polymap(field(j, "inverse", "domain"), n));
  }
  fail("domain.kind", "unknown kind \"" + kind + "\"");
}

Json to_json(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const Character& k) {
  Json out = Json::array();
  for (const auto& v : k) out.push_back(to_json(v));
  return out;
}

Json to_json(const MultiIndex& alpha) { return alpha.exponents; }

Json to_json(const WeightMatrix& a) { return {{"rows", a.rows()}}; }

Json to_json(const ValidatedMatrix& v) {
  Json out = to_json(v.matrix);
  out["n"] = v.matrix.n();
  out["r"] = v.matrix.r();
  out["rank"] = v.matrix.rank();
  out["warnings"] = v.warnings;
  return out;
}

Json to_json(const AdmissibilityCertificate& cert) {
  Json out;
  out["verdict"] = cert.admissible() ? "admissible" : "inadmissible";
  if (cert.positive_functional) {
    Json l = Json::array();
    for (const auto& x : *cert.positive_functional) l.push_back(to_json(x));
    out["positive_functional"] = l;
  } else {
    out["positive_functional"] = nullptr;
  }
  out["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
  return out;
}

Json to_json(const WeightSpace& space) {
  Json basis = Json::array();
  for (const auto& alpha : space.basis) basis.push_back(to_json(alpha));
  return {{"character", to_json(space.character)},
          {"basis", basis},
          {"dimension", space.dimension()},
          {"min_degree", space.min_degree},
          {"max_degree", space.max_degree}};
}

Json to_json(const ResonanceReport& report) {
  Json sets = Json::array();
  for (const auto& e : report.resonance_sets) {
    Json s = Json::array();
    for (const auto& alpha : e) s.push_back(to_json(alpha));
    sets.push_back(s);
  }
  Json linear = Json::array();
  for (const auto& k : report.linear_characters) linear.push_back(to_json(k));
  return {{"resonance_sets", sets},
          {"orders", report.orders},
          {"order", report.order},
          {"linear_characters", linear}};
}

Json to_json(const QuasiResonanceReport& report) {
  Json sets = Json::array();
  for (const auto& set : report.sets) {
    Json s = Json::array();
    for (const auto& e : set) {
      s.push_back({{"character", to_json(e.character)}, {"min_degree", e.min_degree}, {"max_degree", e.max_degree}});
    }
    sets.push_back(s);
  }
  return {{"source", to_json(report.source)},
          {"target", to_json(report.target)},
          {"target_orders", report.target_orders},
          {"quasi_resonance_sets", sets},
          {"orders", report.orders},
          {"order", report.order},
          {"degree_bounds", report.orders}};
}

Json to_json(const CartanVerdict& v) {
  return {{"linear", v.linear},
          {"source_order", v.source_order},
          {"target_order", v.target_order},
          {"explanation", v.explanation}};
}

Json to_json(const QuasiCircularBound& b) {
  return {{"kind", "quasi-circular"},
          {"source_permutation", b.source_permutation},
          {"target_permutation", b.target_permutation},
          {"coarse", to_json(b.coarse)},
          {"coarse_degree", to_json(b.coarse_degree)},
          {"exact", b.exact},
          {"holds", Rational(static_cast<unsigned long>(b.exact)) <= b.coarse}};
}

Json to_json(const NonnegWeightBound& b) {
  Json sums = Json::array(), bounds = Json::array();
  bool holds = true;
  for (std::size_t i = 0; i < b.bounds.size(); ++i) {
    sums.push_back(to_json(b.row_sums[i]));
    bounds.push_back(to_json(b.bounds[i]));
    holds = holds && Rational(static_cast<unsigned long>(b.exact[i])) <= b.bounds[i];
  }
  return {{"kind", "nonnegative-weights"},
          {"permutation", b.permutation},
          {"row_sums", sums},
          {"bounds", bounds},
          {"global_bound", to_json(b.global_bound)},
          {"exact", b.exact},
          {"exact_global", b.exact_global},
          {"holds", holds}};
}

Json to_json(const GaussianRational& c) { return {{"re", to_json(c.re())}, {"im", to_json(c.im())}}; }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    out.push_back({{"exp", to_json(alpha)}, {"re", to_json(c.re())}, {"im", to_json(c.im())}});
  }
  return out;
}

Json to_json(const PolyMap& f) {
  Json out = Json::array();
  for (const auto& p : f.components()) out.push_back(to_json(p));
  return out;
}

Json to_json(const ComplianceReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json bad = Json::array();
    for (const auto& m : c.offending) {
      bad.push_back({{"exp", to_json(m.exponent)},
                     {"character", to_json(m.character)},
                     {"min_degree", m.min_degree ? Json(*m.min_degree) : Json(nullptr)}});
    }
    comps.push_back({{"offending_monomials", bad},
                     {"degree", c.degree.is_negative_infinity() ? Json("-inf") : Json(c.degree.value())},
                     {"degree_bound", c.degree_bound},
                     {"degree_ok", c.degree_ok},
                     {"pass", c.pass()}});
  }
  return {{"pass", r.pass()},
          {"origin_fixed", r.origin_fixed},
          {"nonzero_constant_terms", r.nonzero_constant_terms},
          {"jacobian_constant", r.jacobian_constant},
          {"jacobian_value", r.jacobian_value ? to_json(*r.jacobian_value) : Json(nullptr)},
          {"jacobian", to_json(r.jacobian)},
          {"components", comps},
          {"quasi_resonance", to_json(r.quasi)},
          {"note", "necessary conditions only; passing does not certify a biholomorphism"}};
}

Json to_json(const DomainSpec& spec) {
  Json out;
  switch (spec.kind()) {
    case DomainKind::unit_ball:
      out = {{"kind", "unit-ball"}, {"n", spec.dimension()}};
      break;
    case DomainKind::polydisc:
      out = {{"kind", "polydisc"}, {"radii", spec.radii()}};
      break;
    case DomainKind::weighted_ellipsoid:
      out = {{"kind", "weighted-ellipsoid"}, {"coefficients", spec.coefficients()}, {"exponents", spec.exponents()}};
      break;
    case DomainKind::shear_image:
      out = {{"kind", "shear-image"},
             {"base", to_json(spec.base())},
             {"map", to_json(spec.map())},
             {"inverse", to_json(spec.inverse())}};
      break;
  }
  out["bounding_radii"] = spec.bounding_radii();
  return out;
}

Json to_json(const MCEstimate& e) {
  return {{"value", complex_json(e.value)},
          {"stderr", {e.stderr_re, e.stderr_im}},
          {"samples", e.samples},
          {"candidates", e.candidates},
          {"seed", e.seed}};
}

Json to_json(const OrthogonalityReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"alpha", to_json(p.alpha)},
                     {"beta", to_json(p.beta)},
                     {"alpha_character", to_json(p.alpha_character)},
                     {"beta_character", to_json(p.beta_character)},
                     {"estimate", to_json(p.estimate)},
                     {"z", finite_or_null(p.z)},
                     {"pass", p.pass}});
  }
  return {{"task", "orthogonality"},
          {"pass", r.pass()},
          {"pairs", pairs},
          {"tests", r.tests},
          {"threshold_sigma", r.threshold},
          {"family_error_bound", r.family_error},
          {"worst_z", finite_or_null(r.worst_z)},
          {"seed", r.seed},
          {"samples", r.samples},
          {"acceptance_ratio", r.acceptance_ratio},
          {"tolerance_policy", "|estimate| <= threshold * stderr per component; threshold = max(4, Bonferroni z at 1% family error)"}};
}

Json to_json(const ChangeOfVariablesReport& r) {
  return {{"task", "change-of-variables"},
          {"pass", r.pass},
          {"source_jacobian", to_json(r.source_jacobian)},
          {"target_jacobian", to_json(r.target_jacobian)},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"difference", complex_json(r.lhs.value - r.rhs.value)},
          {"tolerance", {r.tolerance_re, r.tolerance_im}},
          {"tolerance_policy", "|lhs - rhs| <= 4 (stderr_lhs + stderr_rhs) per component"}};
}

Json to_json(const InvarianceReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    Json point = Json::array(), image = Json::array();
    for (auto z : r.witness->point) point.push_back(complex_json(z));
    for (auto z : r.witness->image) image.push_back(complex_json(z));
    witness = {{"point", point}, {"angles", r.witness->angles}, {"image", image}, {"defining_value", r.witness->value}};
  }
  return {{"task", "invariance"},
          {"pass", r.pass()},
          {"checked", r.checked},
          {"violations", r.violations},
          {"max_defining_value", r.max_value},
          {"slack", kInvarianceSlack},
          {"witness", witness},
          {"seed", r.seed}};
}

}  // namespace resonax::io

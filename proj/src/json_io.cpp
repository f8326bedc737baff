// SPDX-License-Identifier: Apache-2.0
#include "json_io.hpp"

#include <fstream>

namespace polycal::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("malformed ") + what);
  }
}

Json point_json(const Point& p) { return std::vector<double>(p.data(), p.data() + p.size()); }

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

// --- complexes --------------------------------------------------------------

ComplexDocument parse_complex(const Json& j) {
  const int n = get<int>(field(j, "ambient_dim"), "ambient_dim");
  if (n < 1 || n > kMaxAmbientDim) fail("ambient_dim must be in [1, 12]");
  std::vector<Point> vertices;
  for (const Json& v : field(j, "vertices")) {
    const auto xs = get<std::vector<double>>(v, "vertex");
    if (static_cast<int>(xs.size()) != n) fail("vertex has the wrong number of coordinates");
    vertices.push_back(Eigen::Map<const Point>(xs.data(), n));
  }
  const auto simplices = get<std::vector<SimplexTuple>>(field(j, "simplices"), "simplices");
  ComplexDocument doc{EmbeddedComplex::build(std::move(vertices), simplices), {}};
  if (j.contains("gamma_faces")) doc.gamma_faces = get<std::vector<SimplexTuple>>(j.at("gamma_faces"), "gamma_faces");
  return doc;
}

Json complex_json(const EmbeddedComplex& K, const std::vector<SimplexTuple>& gamma_faces) {
  Json j;
  j["ambient_dim"] = K.ambient_dim();
  Json verts = Json::array();
  for (const Point& p : K.vertices()) verts.push_back(point_json(p));
  j["vertices"] = std::move(verts);
  Json simplices = Json::array();
  for (const auto& [d, id] : K.maximal_simplices()) simplices.push_back(K.simplex(d, id));
  j["simplices"] = std::move(simplices);
  if (!gamma_faces.empty()) j["gamma_faces"] = gamma_faces;
  return j;
}

BoundaryRegion gamma_region(const ComplexDocument& doc, int m) {
  for (const auto& t : doc.gamma_faces)
    if (static_cast<int>(t.size()) != m) fail("gamma faces must be (m-1)-simplices");
  return make_boundary_region(*doc.complex, m - 1, doc.gamma_faces);
}

std::vector<SimplexTuple> gamma_tuples(const EmbeddedComplex& K, const BoundaryRegion& gamma) {
  std::vector<SimplexTuple> out;
  for (int id : gamma.face_ids) out.push_back(K.simplex(gamma.dimension, id));
  return out;
}

// --- groups -----------------------------------------------------------------

GroupPtr parse_group(const Json& j) {
  const auto kind = get<std::string>(field(j, "kind"), "group kind");
  if (kind == "real") return std::make_shared<RealGroup>();
  if (kind == "integer") return std::make_shared<IntegerGroup>();
  if (kind == "multivector")
    return std::make_shared<MultivectorGroup>(get<int>(field(j, "ambient_dim"), "ambient_dim"),
                                              get<int>(field(j, "grade"), "grade"));
  if (kind == "subgroup") {
    GroupPtr ambient = parse_group(field(j, "ambient"));
    if (ambient->kind() == GroupKind::subgroup || ambient->kind() == GroupKind::integer)
      fail("subgroup ambient must be real or multivector");
    std::vector<GroupElement> gens;
    for (const Json& g : field(j, "generators")) gens.push_back(parse_element(*ambient, g));
    auto H = std::make_shared<SubgroupWithNorm>(ambient, std::move(gens));
    if (j.contains("generator_norms")) {
      const auto norms = get<std::vector<double>>(j.at("generator_norms"), "generator_norms");
      if (norms.size() != H->rank()) fail("generator_norms has the wrong length");
      for (std::size_t i = 0; i < norms.size(); ++i)
        if (std::abs(norms[i] - H->generator_norms()[i]) > 1e-9 * std::max(1.0, norms[i]))
          fail("generator_norms disagree with the ambient norm");
    }
    return H;
  }
  fail("unknown group kind '" + kind + "'");
}

Json group_json(const CoefficientGroup& G) {
  switch (G.kind()) {
    case GroupKind::real: return {{"kind", "real"}};
    case GroupKind::integer: return {{"kind", "integer"}};
    case GroupKind::multivector: {
      const auto& mv = static_cast<const MultivectorGroup&>(G);
      return {{"kind", "multivector"}, {"ambient_dim", mv.ambient_dim()}, {"grade", mv.grade()}};
    }
    case GroupKind::subgroup: {
      const auto& H = static_cast<const SubgroupWithNorm&>(G);
      Json gens = Json::array();
      for (const auto& g : H.generators()) gens.push_back(element_json(*H.ambient(), g));
      return {{"kind", "subgroup"},
              {"ambient", group_json(*H.ambient())},
              {"generators", gens},
              {"generator_norms", H.generator_norms()}};
    }
  }
  fail("unknown group");
}

GroupElement parse_element(const CoefficientGroup& G, const Json& j) {
  GroupElement g;
  if (G.kind() == GroupKind::subgroup) {
    const auto& H = static_cast<const SubgroupWithNorm&>(G);
    const auto coords = get<std::vector<std::int64_t>>(field(j, "coords"), "coords");
    if (coords.size() != H.rank()) fail("coords has the wrong length");
    g = H.element(coords);
    if (j.contains("value")) {
      GroupElement stated = parse_element(*H.ambient(), j.at("value"));
      if (!H.ambient()->equal(stated, g)) fail("subgroup value disagrees with its coords");
    }
  } else if (j.is_number()) {
    g = GroupElement::scalar(j.get<double>());
  } else {
    g.value = get<std::vector<double>>(j, "coefficient");
  }
  try {
    G.validate(g);
  } catch (const Error& e) {
    fail(e.what());
  }
  return g;
}

Json element_json(const CoefficientGroup& G, const GroupElement& g) {
  if (G.kind() == GroupKind::subgroup) {
    const auto& H = static_cast<const SubgroupWithNorm&>(G);
    return {{"coords", g.coords}, {"value", element_json(*H.ambient(), g)}};
  }
  if (G.kind() == GroupKind::multivector) return g.value;
  return g.value.at(0);
}

// --- chains and varifolds ---------------------------------------------------

Chain parse_chain(const Json& j, const ComplexPtr& K) {
  const int m = get<int>(field(j, "dimension"), "dimension");
  GroupPtr G = parse_group(field(j, "group"));
  std::vector<OrientedTerm> terms;
  for (const Json& t : field(j, "terms"))
    terms.push_back({get<SimplexTuple>(field(t, "simplex"), "simplex"), parse_element(*G, field(t, "coeff"))});
  return make_chain(K, m, G, terms);
}

Json chain_json(const Chain& a) {
  Json terms = Json::array();
  for (const auto& [id, g] : a.terms())
    terms.push_back({{"simplex", a.complex()->simplex(a.dimension(), id)}, {"coeff", element_json(*a.group(), g)}});
  return {{"dimension", a.dimension()}, {"group", group_json(*a.group())}, {"terms", terms}};
}

PolyhedralVarifold parse_varifold(const Json& j, const ComplexPtr& K) {
  const int m = get<int>(field(j, "dimension"), "dimension");
  std::vector<WeightedSimplex> terms;
  for (const Json& t : field(j, "weights"))
    terms.push_back({get<SimplexTuple>(field(t, "simplex"), "simplex"), get<double>(field(t, "c"), "weight")});
  return make_varifold(K, m, terms);
}

Json varifold_json(const PolyhedralVarifold& V) {
  Json weights = Json::array();
  for (const auto& [id, c] : V.weights())
    weights.push_back({{"simplex", V.complex()->simplex(V.dimension(), id)}, {"c", c}});
  return {{"dimension", V.dimension()}, {"weights", weights}};
}

SolverConfig parse_solver_config(const Json& j) {
  SolverConfig c;
  if (!j.is_object()) fail("solver config must be an object");
  if (j.contains("max_iter")) c.max_iter = get<int>(j.at("max_iter"), "max_iter");
  if (j.contains("primal_tol")) c.primal_tol = get<double>(j.at("primal_tol"), "primal_tol");
  if (j.contains("obj_tol")) c.obj_tol = get<double>(j.at("obj_tol"), "obj_tol");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j.at("seed"), "seed");
  if (c.max_iter < 1 || !(c.primal_tol > 0.0) || !(c.obj_tol > 0.0)) fail("solver config out of range");
  return c;
}

Json solver_config_json(const SolverConfig& c) {
  return {{"max_iter", c.max_iter}, {"primal_tol", c.primal_tol}, {"obj_tol", c.obj_tol}, {"seed", c.seed}};
}

// --- reports ----------------------------------------------------------------

Json report_json(const GeometryReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"a", {x.dim_a, x.id_a}}, {"b", {x.dim_b, x.id_b}}, {"depth", x.depth}});
  return {{"valid", r.valid}, {"pairs_checked", r.pairs_checked}, {"violations", v}};
}

Json report_json(const StationarityReport& r, const EmbeddedComplex& K, int m) {
  Json faces = Json::array();
  for (const FaceBalance& f : r.faces) {
    Json incident = Json::array();
    for (const auto& s : f.incident)
      incident.push_back({{"simplex", K.simplex(m, s.simplex)}, {"c", s.weight}, {"conormal", point_json(s.conormal)}});
    faces.push_back({{"face", K.simplex(m - 1, f.face)},
                     {"residual", point_json(f.residual)},
                     {"residual_norm", f.residual_norm},
                     {"boundary_norm", f.boundary_norm},
                     {"duality_gap", f.duality_gap},
                     {"incident", incident}});
  }
  return {{"stationary", r.stationary},
          {"tol", r.tol},
          {"max_residual", r.max_residual},
          {"max_duality_gap", r.max_duality_gap},
          {"faces", faces}};
}

Json report_json(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& x : c.checks)
    checks.push_back({{"name", x.name}, {"pass", x.pass}, {"residual", x.residual}, {"tol", x.tol}});
  Json j = {{"subject", c.subject},
            {"checks", checks},
            {"conclusion", to_string(c.conclusion)},
            {"mass", c.mass},
            {"phi", c.phi},
            {"provenance",
             {{"complex_hash", c.provenance.complex_hash},
              {"group", c.provenance.group},
              {"tol", c.provenance.tol},
              {"solver_ran", c.provenance.solver_ran},
              {"seed", c.provenance.seed},
              {"competitors", c.provenance.competitors}}}};
  if (c.worst_face >= 0) j["worst_face"] = {{"id", c.worst_face}, {"boundary_norm", c.worst_boundary_norm}};
  return j;
}

Certificate parse_certificate(const Json& j) {
  Certificate c;
  c.subject = get<std::string>(field(j, "subject"), "subject");
  for (const Json& x : field(j, "checks"))
    c.checks.push_back({get<std::string>(field(x, "name"), "check name"), get<bool>(field(x, "pass"), "pass"),
                        get<double>(field(x, "residual"), "residual"), get<double>(field(x, "tol"), "tol")});
  const auto conclusion = get<std::string>(field(j, "conclusion"), "conclusion");
  bool known = false;
  for (Conclusion k : {Conclusion::calibrated_minimizer, Conclusion::not_calibrated,
                       Conclusion::boundary_not_in_gamma, Conclusion::inconclusive})
    if (to_string(k) == conclusion) {
      c.conclusion = k;
      known = true;
    }
  if (!known) fail("unknown conclusion '" + conclusion + "'");
  c.mass = get<double>(field(j, "mass"), "mass");
  c.phi = get<double>(field(j, "phi"), "phi");
  const Json& p = field(j, "provenance");
  c.provenance = {get<std::string>(field(p, "complex_hash"), "complex_hash"),
                  get<std::string>(field(p, "group"), "group"),
                  get<double>(field(p, "tol"), "tol"),
                  get<bool>(field(p, "solver_ran"), "solver_ran"),
                  get<std::uint64_t>(field(p, "seed"), "seed"),
                  get<std::string>(field(p, "competitors"), "competitors")};
  if (j.contains("worst_face")) {
    c.worst_face = get<int>(field(j.at("worst_face"), "id"), "worst face");
    c.worst_boundary_norm = get<double>(field(j.at("worst_face"), "boundary_norm"), "boundary norm");
  }
  return c;
}

Json report_json(const SolveResult& r) {
  return {{"status", to_string(r.status)},
          {"objective", r.objective},
          {"primal_residual", r.primal_residual},
          {"dual_bound", r.dual_bound},
          {"iterations", r.iterations},
          {"chain", chain_json(r.chain)}};
}

Json report_json(const FlatNormResult& r) {
  return {{"status", to_string(r.status)},
          {"value", r.value},
          {"iterations", r.iterations},
          {"filling", chain_json(r.filling)},
          {"remainder", chain_json(r.remainder)}};
}

Json report_json(const DeformReport& r) {
  return {{"pass", r.pass},
          {"trials", r.trials},
          {"accepted", r.accepted},
          {"rejected", r.rejected},
          {"base_mass", r.base_mass},
          {"min_ratio", r.min_ratio},
          {"max_ratio", r.max_ratio},
          {"seed", r.seed},
          {"magnitude", r.magnitude},
          {"ratios", r.ratios}};
}

Json report_json(const StokesReport& r) {
  return {{"pass", r.pass}, {"trials", r.trials}, {"max_residual", r.max_residual}, {"tol", r.tol}, {"seed", r.seed}};
}

Json report_json(const FlatBoundReport& r) {
  return {{"pass", r.pass},     {"phi", r.phi}, {"flat", r.flat},
          {"mass", r.mass},     {"tol", r.tol}, {"status", to_string(r.status)},
          {"flat_is_upper_bound", true}};
}

}  // namespace polycal::io

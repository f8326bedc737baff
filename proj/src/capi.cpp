// SPDX-License-Identifier: Apache-2.0
#include "polycal/polycal.h"

#include <cstring>
#include <new>

#include "json_io.hpp"

using namespace polycal;
using io::Json;

struct polycal_complex {
  io::ComplexDocument doc;
};

struct polycal_varifold {
  PolyhedralVarifold v;
  BoundaryRegion gamma;
};

struct polycal_chain {
  Chain a;
};

struct polycal_group {
  GroupPtr g;
};

namespace {

thread_local std::string last_error;

polycal_status code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return POLYCAL_E_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return POLYCAL_E_DIMENSION;
    case ErrorCode::degenerate: return POLYCAL_E_DEGENERATE;
    case ErrorCode::not_found: return POLYCAL_E_NOT_FOUND;
    case ErrorCode::parse: return POLYCAL_E_PARSE;
    case ErrorCode::precondition: return POLYCAL_E_PRECONDITION;
    case ErrorCode::solver: return POLYCAL_E_SOLVER;
  }
  return POLYCAL_E_INTERNAL;
}

template <class F>
polycal_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return POLYCAL_E_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return POLYCAL_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POLYCAL_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

Json parse_text(const char* text) {
  require(text, "json");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  require(out, "output");
  *out = dup(j.dump());
}

SolverConfig config_of(const char* text) { return text == nullptr ? SolverConfig{} : io::parse_solver_config(parse_text(text)); }

polycal_status verdict(bool pass) { return pass ? POLYCAL_OK : POLYCAL_CHECK_FAILED; }

}  // namespace

extern "C" {

const char* polycal_version(void) { return "0.1.0"; }

const char* polycal_last_error(void) { return last_error.c_str(); }

void polycal_string_free(char* s) { std::free(s); }

// --- complexes ---------------------------------------------------------------

polycal_status polycal_complex_from_json(const char* json, polycal_complex** out) {
  return guard([&] {
    require(out, "output");
    *out = new polycal_complex{io::parse_complex(parse_text(json))};
    return POLYCAL_OK;
  });
}

polycal_status polycal_complex_to_json(const polycal_complex* k, char** out) {
  return guard([&] {
    require(k, "complex");
    emit(out, io::complex_json(*k->doc.complex, k->doc.gamma_faces));
    return POLYCAL_OK;
  });
}

void polycal_complex_free(polycal_complex* k) { delete k; }

polycal_status polycal_complex_hash(const polycal_complex* k, char** out) {
  return guard([&] {
    require(k, "complex");
    require(out, "output");
    *out = dup(k->doc.complex->hash());
    return POLYCAL_OK;
  });
}

polycal_status polycal_complex_validate(const polycal_complex* k, double tol, char** report) {
  return guard([&] {
    require(k, "complex");
    const GeometryReport r = validate_geometry(*k->doc.complex, tol);
    emit(report, io::report_json(r));
    return verdict(r.valid);
  });
}

// --- varifolds ---------------------------------------------------------------

polycal_status polycal_varifold_from_json(const polycal_complex* k, const char* json, polycal_varifold** out) {
  return guard([&] {
    require(k, "complex");
    require(out, "output");
    PolyhedralVarifold v = io::parse_varifold(parse_text(json), k->doc.complex);
    BoundaryRegion gamma = io::gamma_region(k->doc, v.dimension());
    *out = new polycal_varifold{std::move(v), std::move(gamma)};
    return POLYCAL_OK;
  });
}

polycal_status polycal_varifold_to_json(const polycal_varifold* v, char** out) {
  return guard([&] {
    require(v, "varifold");
    emit(out, io::varifold_json(v->v));
    return POLYCAL_OK;
  });
}

void polycal_varifold_free(polycal_varifold* v) { delete v; }

polycal_status polycal_varifold_complex(const polycal_varifold* v, polycal_complex** out) {
  return guard([&] {
    require(v, "varifold");
    require(out, "output");
    *out = new polycal_complex{{v->v.complex(), io::gamma_tuples(*v->v.complex(), v->gamma)}};
    return POLYCAL_OK;
  });
}

polycal_status polycal_varifold_mass(const polycal_varifold* v, double* out) {
  return guard([&] {
    require(v, "varifold");
    require(out, "output");
    *out = v->v.mass();
    return POLYCAL_OK;
  });
}

polycal_status polycal_varifold_refine(const polycal_varifold* v, int levels, polycal_varifold** out) {
  return guard([&] {
    require(v, "varifold");
    require(out, "output");
    if (levels < 0) throw Error(ErrorCode::invalid_argument, "refinement level must be >= 0");
    PolyhedralVarifold V = v->v;
    BoundaryRegion gamma = v->gamma;
    for (int i = 0; i < levels; ++i) {
      const Subdivision sub = subdivide(V.complex(), SubdivisionRule::barycentric());
      V = transport(V, sub);
      gamma = transport(gamma, sub);
    }
    *out = new polycal_varifold{std::move(V), std::move(gamma)};
    return POLYCAL_OK;
  });
}

polycal_status polycal_stationarity(const polycal_varifold* v, double tol, char** report) {
  return guard([&] {
    require(v, "varifold");
    const StationarityReport r = stationarity(v->v, v->gamma, tol);
    emit(report, io::report_json(r, *v->v.complex(), v->v.dimension()));
    return verdict(r.stationary);
  });
}

polycal_status polycal_chainify(const polycal_varifold* v, polycal_chain** out) {
  return guard([&] {
    require(v, "varifold");
    require(out, "output");
    *out = new polycal_chain{chainify(v->v)};
    return POLYCAL_OK;
  });
}

polycal_status polycal_certify(const polycal_varifold* v, double tol, int with_solver, const char* solver_config,
                               char** certificate) {
  return guard([&] {
    require(v, "varifold");
    const Certificate c = minimality_certificate(v->v, v->gamma, tol, with_solver != 0, config_of(solver_config));
    Json j = io::report_json(c);
    if (c.worst_face >= 0) j["worst_face"]["simplex"] = v->v.complex()->simplex(v->v.dimension() - 1, c.worst_face);
    emit(certificate, j);
    return verdict(c.conclusion == Conclusion::calibrated_minimizer);
  });
}

polycal_status polycal_deform(const polycal_varifold* v, int trials, double magnitude, uint64_t seed, double tol,
                              char** report) {
  return guard([&] {
    require(v, "varifold");
    const DeformReport r = deform_experiment(v->v, v->gamma, trials, magnitude, seed, tol);
    emit(report, io::report_json(r));
    return verdict(r.pass);
  });
}

polycal_status polycal_minimize_varifold(const polycal_varifold* v, int refinement, const char* solver_config,
                                         char** result) {
  return guard([&] {
    require(v, "varifold");
    if (refinement < 0) throw Error(ErrorCode::invalid_argument, "refinement level must be >= 0");
    Chain reference = chainify(v->v);
    for (int i = 0; i < refinement; ++i)
      reference = transport(reference, subdivide(reference.complex(), SubdivisionRule::barycentric()));
    const SolveResult r = min_mass_fixed_boundary(boundary_problem(reference, config_of(solver_config)));
    Json j = io::report_json(r);
    j["reference_mass"] = mass(reference);
    j["phi_reference"] = phi(reference);
    emit(result, {{"complex", io::complex_json(*reference.complex())}, {"result", j}});
    return verdict(r.status == SolveStatus::converged);
  });
}

// --- chains ----------------------------------------------------------------

polycal_status polycal_chain_from_json(const polycal_complex* k, const char* json, polycal_chain** out) {
  return guard([&] {
    require(k, "complex");
    require(out, "output");
    *out = new polycal_chain{io::parse_chain(parse_text(json), k->doc.complex)};
    return POLYCAL_OK;
  });
}

polycal_status polycal_chain_to_json(const polycal_chain* a, char** out) {
  return guard([&] {
    require(a, "chain");
    emit(out, io::chain_json(a->a));
    return POLYCAL_OK;
  });
}

void polycal_chain_free(polycal_chain* a) { delete a; }

polycal_status polycal_chain_boundary(const polycal_chain* a, polycal_chain** out) {
  return guard([&] {
    require(a, "chain");
    require(out, "output");
    *out = new polycal_chain{boundary(a->a)};
    return POLYCAL_OK;
  });
}

polycal_status polycal_chain_mass(const polycal_chain* a, double* out) {
  return guard([&] {
    require(a, "chain");
    require(out, "output");
    *out = mass(a->a);
    return POLYCAL_OK;
  });
}

polycal_status polycal_chain_phi(const polycal_chain* a, double* out) {
  return guard([&] {
    require(a, "chain");
    require(out, "output");
    *out = phi(a->a);
    return POLYCAL_OK;
  });
}

polycal_status polycal_certify_chain(const polycal_chain* a, double tol, char** certificate) {
  return guard([&] {
    require(a, "chain");
    const Certificate c = certify_calibrated(a->a, tol);
    emit(certificate, io::report_json(c));
    return verdict(c.conclusion == Conclusion::calibrated_minimizer);
  });
}

polycal_status polycal_minimize(const polycal_chain* b, const char* solver_config, char** result) {
  return guard([&] {
    require(b, "boundary chain");
    const SolveResult r =
        min_mass_fixed_boundary({b->a.complex(), b->a.dimension() + 1, b->a, config_of(solver_config)});
    emit(result, io::report_json(r));
    return verdict(r.status == SolveStatus::converged);
  });
}

polycal_status polycal_flatnorm(const polycal_chain* a, const char* solver_config, char** result) {
  return guard([&] {
    require(a, "chain");
    const FlatNormResult r = flat_norm_solve(a->a, config_of(solver_config));
    Json j = io::report_json(r);
    j["mass"] = mass(a->a);
    emit(result, j);
    return verdict(r.status == SolveStatus::converged);
  });
}

// --- groups ----------------------------------------------------------------

polycal_status polycal_group_from_json(const char* json, polycal_group** out) {
  return guard([&] {
    require(out, "output");
    *out = new polycal_group{io::parse_group(parse_text(json))};
    return POLYCAL_OK;
  });
}

void polycal_group_free(polycal_group* g) { delete g; }

polycal_status polycal_group_norm(const polycal_group* g, const char* element_json, double* out) {
  return guard([&] {
    require(g, "group");
    require(out, "output");
    *out = g->g->norm(io::parse_element(*g->g, parse_text(element_json)));
    return POLYCAL_OK;
  });
}

polycal_status polycal_norm_ball(const polycal_group* g, double lambda, char** out) {
  return guard([&] {
    require(g, "group");
    const auto* H = dynamic_cast<const SubgroupWithNorm*>(g->g.get());
    if (H == nullptr) throw Error(ErrorCode::invalid_argument, "norm balls need a finitely generated subgroup");
    Json ball = Json::array();
    for (const BallElement& e : norm_ball(*H, lambda))
      ball.push_back({{"element", io::element_json(*H, e.element)}, {"norm", e.norm}});
    emit(out, ball);
    return POLYCAL_OK;
  });
}

polycal_status polycal_integrality_check(const polycal_group* g, int* integral) {
  return guard([&] {
    require(g, "group");
    require(integral, "output");
    const auto* H = dynamic_cast<const SubgroupWithNorm*>(g->g.get());
    if (H == nullptr) throw Error(ErrorCode::invalid_argument, "integrality applies to finitely generated subgroups");
    *integral = integrality_check(*H) ? 1 : 0;
    return POLYCAL_OK;
  });
}

polycal_status polycal_retag(const polycal_chain* a, const polycal_group* h, polycal_chain** out) {
  return guard([&] {
    require(a, "chain");
    require(h, "group");
    require(out, "output");
    auto H = std::dynamic_pointer_cast<const SubgroupWithNorm>(h->g);
    if (!H) throw Error(ErrorCode::invalid_argument, "retagging needs a finitely generated subgroup");
    *out = new polycal_chain{retag_chain(a->a, H)};
    return POLYCAL_OK;
  });
}

// --- catalog -----------------------------------------------------------------

polycal_status polycal_demo(const char* name, const char* params, char** out) {
  return guard([&] {
    require(name, "name");
    ExampleParams p;
    if (params != nullptr) {
      const Json j = parse_text(params);
      if (!j.is_object()) throw Error(ErrorCode::parse, "demo parameters must be an object");
      p.radius = j.value("radius", p.radius);
      p.refinement = j.value("refinement", p.refinement);
      if (j.contains("directions"))
        for (const auto& d : j.at("directions").get<std::vector<std::vector<double>>>())
          p.directions.push_back(Eigen::Map<const Point>(d.data(), static_cast<Eigen::Index>(d.size())));
      if (j.contains("cells")) p.cells = j.at("cells").get<std::vector<SimplexTuple>>();
      if (j.contains("weights")) p.weights = j.at("weights").get<std::vector<double>>();
    }
    const CatalogExample ex = generate_example(name, p);
    emit(out, {{"name", ex.name},
               {"radius", p.radius},
               {"refinement", p.refinement},
               {"complex", io::complex_json(*ex.complex, io::gamma_tuples(*ex.complex, ex.gamma))},
               {"varifold", io::varifold_json(ex.varifold)}});
    return POLYCAL_OK;
  });
}

}  // extern "C"

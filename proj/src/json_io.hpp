// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycal/calibration.hpp"
#include "polycal/deformation.hpp"

namespace polycal::io {

using Json = nlohmann::json;

/// {"ambient_dim", "vertices", "simplices", "gamma_faces"?}
struct ComplexDocument {
  ComplexPtr complex;
  std::vector<SimplexTuple> gamma_faces;
};

ComplexDocument parse_complex(const Json& j);
Json complex_json(const EmbeddedComplex& K, const std::vector<SimplexTuple>& gamma_faces = {});

/// Region of (m-1)-faces for an m-dimensional object; an empty face list
/// gives an empty region.
BoundaryRegion gamma_region(const ComplexDocument& doc, int m);
std::vector<SimplexTuple> gamma_tuples(const EmbeddedComplex& K, const BoundaryRegion& gamma);

/// {"kind": "real" | "integer" | "multivector" | "subgroup", ...}
GroupPtr parse_group(const Json& j);
Json group_json(const CoefficientGroup& G);

GroupElement parse_element(const CoefficientGroup& G, const Json& j);
Json element_json(const CoefficientGroup& G, const GroupElement& g);

/// {"dimension", "group", "terms": [{"simplex", "coeff"}]}
Chain parse_chain(const Json& j, const ComplexPtr& K);
Json chain_json(const Chain& a);

/// {"dimension", "weights": [{"simplex", "c"}]}
PolyhedralVarifold parse_varifold(const Json& j, const ComplexPtr& K);
Json varifold_json(const PolyhedralVarifold& V);

/// {"max_iter", "primal_tol", "obj_tol", "seed"}, all optional.
SolverConfig parse_solver_config(const Json& j);
Json solver_config_json(const SolverConfig& c);

Certificate parse_certificate(const Json& j);

Json report_json(const GeometryReport& r);
Json report_json(const StationarityReport& r, const EmbeddedComplex& K, int m);
Json report_json(const Certificate& c);
Json report_json(const SolveResult& r);
Json report_json(const FlatNormResult& r);
Json report_json(const DeformReport& r);
Json report_json(const StokesReport& r);
Json report_json(const FlatBoundReport& r);

/// Reads and parses a JSON file; parse and I/O failures raise Error(parse).
Json read_file(const std::string& path);

}  // namespace polycal::io

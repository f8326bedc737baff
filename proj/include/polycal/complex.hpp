// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycal/exterior_algebra.hpp"

namespace polycal {

/// Strictly increasing vertex ids; the canonical orientation of a simplex.
using SimplexTuple = std::vector<int>;

/// A (d-1)-face of a d-simplex (or a (d+1)-coface of a d-simplex) together
/// with the incidence sign (-1)^i, i being the position of the removed vertex.
struct Incidence {
  int id;
  int sign;
};

/// Finite simplicial complex with vertex coordinates in R^N. Immutable after
/// construction; every face of a listed simplex is listed, and ids within a
/// dimension follow the lexicographic order of the sorted vertex tuples.
/// Vertex i is the 0-simplex with id i.
class EmbeddedComplex {
 public:
  /// Closes `simplices` under the face relation. Each input tuple may be
  /// given in any vertex order; repeated vertices, out-of-range ids,
  /// duplicate simplices and degenerate input simplices are rejected.
  static std::shared_ptr<const EmbeddedComplex> build(std::vector<Point> vertices,
                                                      const std::vector<SimplexTuple>& simplices,
                                                      double tol = kDefaultTol);

  /// Same combinatorics with new coordinates. Degenerate simplices are
  /// allowed here and get volume 0.
  std::shared_ptr<const EmbeddedComplex> with_vertices(std::vector<Point> vertices) const;

  int ambient_dim() const { return ambient_dim_; }
  int top_dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int id) const { return vertices_.at(static_cast<std::size_t>(id)); }

  /// Number of d-simplices (0 when d is out of range).
  std::size_t count(int d) const;
  const SimplexTuple& simplex(int d, int id) const;
  std::optional<int> find(const SimplexTuple& sorted) const;

  /// (d-1)-faces of a d-simplex with signs; empty for d = 0.
  std::span<const Incidence> faces(int d, int id) const;
  /// (d+1)-simplices having the d-simplex as a face, with the same signs.
  std::span<const Incidence> cofaces(int d, int id) const;

  OrientedSimplex geometry(int d, int id) const;
  double volume(int d, int id) const;
  bool is_degenerate(int d, int id) const { return volume(d, id) == 0.0 && d > 0; }
  double tolerance() const { return tol_; }

  /// Simplices that are not a face of any other simplex, as (d, id) pairs.
  std::vector<std::pair<int, int>> maximal_simplices() const;

  /// Stable 64-bit FNV-1a digest of coordinates and combinatorics, as hex.
  std::string hash() const;

 private:
  EmbeddedComplex() = default;
  void finalize();

  int ambient_dim_ = 0;
  double tol_ = kDefaultTol;
  std::vector<Point> vertices_;
  std::vector<std::vector<SimplexTuple>> simplices_;
  std::vector<std::map<SimplexTuple, int>> index_;
  std::vector<std::vector<std::vector<Incidence>>> faces_;
  std::vector<std::vector<std::vector<Incidence>>> cofaces_;
  std::vector<std::vector<double>> volumes_;
};

using ComplexPtr = std::shared_ptr<const EmbeddedComplex>;

/// Sort a vertex tuple; returns the parity (+1 even, -1 odd) of the sorting
/// permutation, or 0 when a vertex repeats.
int sort_with_parity(SimplexTuple& tuple);

/// A designated set of faces of one dimension where boundary is permitted.
struct BoundaryRegion {
  int dimension = 0;
  std::vector<int> face_ids;  // sorted, unique

  bool contains(int id) const;
};

BoundaryRegion make_boundary_region(const EmbeddedComplex& K, int dimension,
                                    const std::vector<SimplexTuple>& faces);

/// Vertex ids touched by the region.
std::vector<int> region_vertices(const EmbeddedComplex& K, const BoundaryRegion& gamma);

/// All (m-1)-simplices of K outside gamma.
std::vector<int> interior_faces(const EmbeddedComplex& K, int m, const BoundaryRegion& gamma);

struct GeometryViolation {
  int dim_a, id_a, dim_b, id_b;
  double depth;  // barycentric weight of the intersection outside the common face
};

struct GeometryReport {
  bool valid = true;
  std::size_t pairs_checked = 0;
  std::vector<GeometryViolation> violations;
};

/// Verifies that every pair of maximal simplices meets in a common face (or
/// not at all), within tolerance.
GeometryReport validate_geometry(const EmbeddedComplex& K, double tol = kDefaultTol);

struct SubdivisionRule {
  enum class Kind { barycentric, edge_midpoint };
  Kind kind = Kind::barycentric;
  std::array<int, 2> edge{0, 0};  // vertex ids, for edge_midpoint

  static SubdivisionRule barycentric() { return {}; }
  static SubdivisionRule midpoint(int a, int b) { return {Kind::edge_midpoint, {a, b}}; }
};

/// A child d-simplex in the refined complex, with the sign relating its
/// canonical orientation to the parent's.
struct Child {
  int id;
  int sign;
};

struct Subdivision {
  ComplexPtr parent;
  ComplexPtr refined;
  /// children[d][parent id] lists the d-simplices covering that parent.
  std::vector<std::vector<std::vector<Child>>> children;
};

/// Refines K. Original vertices keep their ids in the refined complex.
Subdivision subdivide(const ComplexPtr& K, const SubdivisionRule& rule);

/// Transports a region to the refined complex.
BoundaryRegion transport(const BoundaryRegion& gamma, const Subdivision& sub);

/// A piecewise-linear map given by vertex images.
struct VertexMap {
  std::vector<Point> images;
  std::vector<int> frozen;  // vertex ids that must map to themselves
};

/// Image complex of a PL map. Frozen vertices must be fixed and distinct
/// vertices must have distinct images.
ComplexPtr apply_vertex_map(const ComplexPtr& K, const VertexMap& f, double tol = kDefaultTol);

}  // namespace polycal

// SPDX-License-Identifier: Apache-2.0
#include "polycal/complex.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "lp.hpp"

namespace polycal {
namespace {

std::string tuple_string(const SimplexTuple& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ']';
  return os.str();
}

}  // namespace

int sort_with_parity(SimplexTuple& tuple) {
  int parity = 1;
  // Insertion sort; tuples are short.
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      parity = -parity;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1]) return 0;
  return parity;
}

ComplexPtr EmbeddedComplex::build(std::vector<Point> vertices,
                                  const std::vector<SimplexTuple>& simplices, double tol) {
  if (vertices.empty()) throw Error(ErrorCode::invalid_argument, "complex has no vertices");
  const auto n = vertices.front().size();
  if (n < 1 || n > kMaxAmbientDim)
    throw Error(ErrorCode::dimension_mismatch, "ambient dimension outside [1, 12]");
  for (const auto& v : vertices)
    if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "vertex coordinates differ in length");

  const int nv = static_cast<int>(vertices.size());
  std::vector<std::set<SimplexTuple>> all(1);
  std::set<SimplexTuple> listed;
  for (const auto& input : simplices) {
    SimplexTuple s = input;
    if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty simplex");
    for (int v : s)
      if (v < 0 || v >= nv)
        throw Error(ErrorCode::invalid_argument,
                    "vertex index " + std::to_string(v) + " out of range in " + tuple_string(input));
    if (sort_with_parity(s) == 0)
      throw Error(ErrorCode::invalid_argument, "repeated vertex in " + tuple_string(input));
    if (static_cast<Eigen::Index>(s.size()) > n + 1)
      throw Error(ErrorCode::dimension_mismatch, "simplex " + tuple_string(input) + " exceeds ambient dimension");
    if (!listed.insert(s).second)
      throw Error(ErrorCode::invalid_argument, "duplicate simplex " + tuple_string(s));
    std::vector<Point> pts;
    for (int v : s) pts.push_back(vertices[static_cast<std::size_t>(v)]);
    if (polycal::is_degenerate(OrientedSimplex(pts), tol))
      throw Error(ErrorCode::degenerate, "degenerate simplex " + tuple_string(s));

    const int d = static_cast<int>(s.size()) - 1;
    if (static_cast<int>(all.size()) <= d) all.resize(static_cast<std::size_t>(d) + 1);
    const std::uint32_t full = (1u << s.size()) - 1;
    for (std::uint32_t sub = 1; sub <= full; ++sub) {
      SimplexTuple face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (sub & (1u << i)) face.push_back(s[i]);
      all[face.size() - 1].insert(std::move(face));
    }
  }
  for (int v = 0; v < nv; ++v) all[0].insert(SimplexTuple{v});

  std::shared_ptr<EmbeddedComplex> K(new EmbeddedComplex());
  K->ambient_dim_ = static_cast<int>(n);
  K->tol_ = tol;
  K->vertices_ = std::move(vertices);
  for (auto& level : all) K->simplices_.emplace_back(level.begin(), level.end());
  K->finalize();
  return K;
}

void EmbeddedComplex::finalize() {
  const std::size_t levels = simplices_.size();
  index_.assign(levels, {});
  faces_.assign(levels, {});
  cofaces_.assign(levels, {});
  for (std::size_t d = 0; d < levels; ++d) {
    for (std::size_t i = 0; i < simplices_[d].size(); ++i)
      index_[d].emplace(simplices_[d][i], static_cast<int>(i));
    faces_[d].resize(simplices_[d].size());
    cofaces_[d].resize(simplices_[d].size());
  }
  for (std::size_t d = 1; d < levels; ++d) {
    for (std::size_t id = 0; id < simplices_[d].size(); ++id) {
      const SimplexTuple& s = simplices_[d][id];
      for (std::size_t i = 0; i < s.size(); ++i) {
        SimplexTuple face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        const int face_id = index_[d - 1].at(face);
        const int sign = (i % 2 == 0) ? 1 : -1;
        faces_[d][id].push_back({face_id, sign});
        cofaces_[d - 1][static_cast<std::size_t>(face_id)].push_back({static_cast<int>(id), sign});
      }
    }
  }
  volumes_.assign(levels, {});
  for (std::size_t d = 0; d < levels; ++d) {
    volumes_[d].resize(simplices_[d].size());
    for (std::size_t id = 0; id < simplices_[d].size(); ++id)
      volumes_[d][id] = simplex_volume(geometry(static_cast<int>(d), static_cast<int>(id)), tol_);
  }
}

ComplexPtr EmbeddedComplex::with_vertices(std::vector<Point> vertices) const {
  if (vertices.size() != vertices_.size())
    throw Error(ErrorCode::dimension_mismatch, "vertex count differs from complex");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != ambient_dim_)
      throw Error(ErrorCode::dimension_mismatch, "vertex image has wrong dimension");
  std::shared_ptr<EmbeddedComplex> K(new EmbeddedComplex(*this));
  K->vertices_ = std::move(vertices);
  for (std::size_t d = 0; d < K->simplices_.size(); ++d)
    for (std::size_t id = 0; id < K->simplices_[d].size(); ++id)
      K->volumes_[d][id] =
          simplex_volume(K->geometry(static_cast<int>(d), static_cast<int>(id)), tol_);
  return K;
}

std::size_t EmbeddedComplex::count(int d) const {
  if (d < 0 || d >= static_cast<int>(simplices_.size())) return 0;
  return simplices_[static_cast<std::size_t>(d)].size();
}

const SimplexTuple& EmbeddedComplex::simplex(int d, int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= count(d))
    throw Error(ErrorCode::not_found,
                "no " + std::to_string(d) + "-simplex with id " + std::to_string(id));
  return simplices_[static_cast<std::size_t>(d)][static_cast<std::size_t>(id)];
}

std::optional<int> EmbeddedComplex::find(const SimplexTuple& sorted) const {
  if (sorted.empty()) return std::nullopt;
  const std::size_t d = sorted.size() - 1;
  if (d >= index_.size()) return std::nullopt;
  auto it = index_[d].find(sorted);
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

std::span<const Incidence> EmbeddedComplex::faces(int d, int id) const {
  simplex(d, id);
  return faces_[static_cast<std::size_t>(d)][static_cast<std::size_t>(id)];
}

std::span<const Incidence> EmbeddedComplex::cofaces(int d, int id) const {
  simplex(d, id);
  return cofaces_[static_cast<std::size_t>(d)][static_cast<std::size_t>(id)];
}

OrientedSimplex EmbeddedComplex::geometry(int d, int id) const {
  std::vector<Point> pts;
  for (int v : simplex(d, id)) pts.push_back(vertices_[static_cast<std::size_t>(v)]);
  return OrientedSimplex(std::move(pts));
}

double EmbeddedComplex::volume(int d, int id) const {
  simplex(d, id);
  return volumes_[static_cast<std::size_t>(d)][static_cast<std::size_t>(id)];
}

std::vector<std::pair<int, int>> EmbeddedComplex::maximal_simplices() const {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= top_dimension(); ++d)
    for (std::size_t id = 0; id < count(d); ++id)
      if (cofaces_[static_cast<std::size_t>(d)][id].empty()) out.emplace_back(d, static_cast<int>(id));
  return out;
}

std::string EmbeddedComplex::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  mix(&ambient_dim_, sizeof ambient_dim_);
  for (const auto& v : vertices_) mix(v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
  for (const auto& level : simplices_)
    for (const auto& s : level) {
      const auto len = static_cast<int>(s.size());
      mix(&len, sizeof len);
      mix(s.data(), sizeof(int) * s.size());
    }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

bool BoundaryRegion::contains(int id) const {
  return std::binary_search(face_ids.begin(), face_ids.end(), id);
}

BoundaryRegion make_boundary_region(const EmbeddedComplex& K, int dimension,
                                    const std::vector<SimplexTuple>& faces) {
  BoundaryRegion gamma;
  gamma.dimension = dimension;
  for (SimplexTuple t : faces) {
    if (static_cast<int>(t.size()) != dimension + 1)
      throw Error(ErrorCode::dimension_mismatch,
                  "boundary face " + tuple_string(t) + " is not " + std::to_string(dimension) + "-dimensional");
    if (sort_with_parity(t) == 0) throw Error(ErrorCode::invalid_argument, "repeated vertex in boundary face");
    auto id = K.find(t);
    if (!id) throw Error(ErrorCode::not_found, "boundary face " + tuple_string(t) + " is not in the complex");
    gamma.face_ids.push_back(*id);
  }
  std::sort(gamma.face_ids.begin(), gamma.face_ids.end());
  gamma.face_ids.erase(std::unique(gamma.face_ids.begin(), gamma.face_ids.end()), gamma.face_ids.end());
  return gamma;
}

std::vector<int> region_vertices(const EmbeddedComplex& K, const BoundaryRegion& gamma) {
  std::set<int> out;
  for (int id : gamma.face_ids)
    for (int v : K.simplex(gamma.dimension, id)) out.insert(v);
  return {out.begin(), out.end()};
}

std::vector<int> interior_faces(const EmbeddedComplex& K, int m, const BoundaryRegion& gamma) {
  if (gamma.dimension != m - 1 && !gamma.face_ids.empty())
    throw Error(ErrorCode::dimension_mismatch, "boundary region dimension differs from m - 1");
  std::vector<int> out;
  for (std::size_t id = 0; id < K.count(m - 1); ++id)
    if (!gamma.contains(static_cast<int>(id))) out.push_back(static_cast<int>(id));
  return out;
}

GeometryReport validate_geometry(const EmbeddedComplex& K, double tol) {
  struct Box {
    int d, id;
    Eigen::VectorXd lo, hi;
  };
  std::vector<Box> boxes;
  for (auto [d, id] : K.maximal_simplices()) {
    Box b{d, id, K.vertex(K.simplex(d, id)[0]), K.vertex(K.simplex(d, id)[0])};
    for (int v : K.simplex(d, id)) {
      b.lo = b.lo.cwiseMin(K.vertex(v));
      b.hi = b.hi.cwiseMax(K.vertex(v));
    }
    boxes.push_back(std::move(b));
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.lo(0) < b.lo(0); });

  const int n = K.ambient_dim();
  GeometryReport report;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size() && boxes[j].lo(0) <= boxes[i].hi(0) + tol; ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (((a.lo.array() - tol) > b.hi.array()).any() || ((b.lo.array() - tol) > a.hi.array()).any())
        continue;
      ++report.pairs_checked;
      const SimplexTuple& sa = K.simplex(a.d, a.id);
      const SimplexTuple& sb = K.simplex(b.d, b.id);
      const int na = static_cast<int>(sa.size());
      const int nb = static_cast<int>(sb.size());
      // Barycentric weights (lambda on a, mu on b) of a common point; maximize
      // the weight lambda puts outside the shared vertices.
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 2, na + nb);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 2);
      Eigen::VectorXd c = Eigen::VectorXd::Zero(na + nb);
      for (int k = 0; k < na; ++k) {
        A.block(0, k, n, 1) = K.vertex(sa[static_cast<std::size_t>(k)]);
        A(n, k) = 1.0;
        if (!std::binary_search(sb.begin(), sb.end(), sa[static_cast<std::size_t>(k)])) c(k) = 1.0;
      }
      for (int k = 0; k < nb; ++k) {
        A.block(0, na + k, n, 1) = -K.vertex(sb[static_cast<std::size_t>(k)]);
        A(n + 1, na + k) = 1.0;
      }
      rhs(n) = 1.0;
      rhs(n + 1) = 1.0;
      const auto lp = detail::maximize(A, rhs, c);
      if (lp.status == detail::LpResult::Status::optimal && lp.value > tol) {
        report.valid = false;
        report.violations.push_back({a.d, a.id, b.d, b.id, lp.value});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const auto& x, const auto& y) {
    return std::tie(x.dim_a, x.id_a, x.dim_b, x.id_b) < std::tie(y.dim_a, y.id_a, y.dim_b, y.id_b);
  });
  return report;
}

namespace {

int orientation_sign(const EmbeddedComplex& refined, int d, int child,
                     const EmbeddedComplex& parent, int pid) {
  if (d == 0) return 1;
  const double dot = inner(unit_simple_vector(refined.geometry(d, child), refined.tolerance()),
                           unit_simple_vector(parent.geometry(d, pid), parent.tolerance()));
  return dot > 0 ? 1 : -1;
}

// Children tuples of a simplex under barycentric subdivision: one per flag of faces.
std::vector<SimplexTuple> barycentric_children(const EmbeddedComplex& K, int d, int id,
                                               const std::vector<int>& offset) {
  SimplexTuple perm = K.simplex(d, id);
  std::vector<SimplexTuple> out;
  do {
    SimplexTuple child;
    SimplexTuple face;
    for (int k = 0; k <= d; ++k) {
      face.push_back(perm[static_cast<std::size_t>(k)]);
      SimplexTuple sorted = face;
      std::sort(sorted.begin(), sorted.end());
      const int fid = *K.find(sorted);
      child.push_back(k == 0 ? fid : offset[static_cast<std::size_t>(k)] + fid);
    }
    std::sort(child.begin(), child.end());
    out.push_back(std::move(child));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SimplexTuple> midpoint_children(const SimplexTuple& s, int a, int b, int mid) {
  const bool has_a = std::binary_search(s.begin(), s.end(), a);
  const bool has_b = std::binary_search(s.begin(), s.end(), b);
  if (!(has_a && has_b)) return {s};
  std::vector<SimplexTuple> out;
  for (int replaced : {a, b}) {
    SimplexTuple child;
    for (int v : s) child.push_back(v == replaced ? mid : v);
    std::sort(child.begin(), child.end());
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

Subdivision subdivide(const ComplexPtr& K, const SubdivisionRule& rule) {
  const int top = K->top_dimension();
  std::vector<Point> vertices = K->vertices();
  std::vector<SimplexTuple> tops;
  std::function<std::vector<SimplexTuple>(int, int)> children_of;

  std::vector<int> offset(static_cast<std::size_t>(top) + 1, 0);
  int a = 0, b = 0, mid = 0;
  if (rule.kind == SubdivisionRule::Kind::barycentric) {
    int next = static_cast<int>(K->num_vertices());
    for (int d = 1; d <= top; ++d) {
      offset[static_cast<std::size_t>(d)] = next;
      for (std::size_t id = 0; id < K->count(d); ++id) {
        Point c = Point::Zero(K->ambient_dim());
        for (int v : K->simplex(d, static_cast<int>(id))) c += K->vertex(v);
        vertices.push_back(c / static_cast<double>(d + 1));
      }
      next += static_cast<int>(K->count(d));
    }
    children_of = [&](int d, int id) { return barycentric_children(*K, d, id, offset); };
  } else {
    a = std::min(rule.edge[0], rule.edge[1]);
    b = std::max(rule.edge[0], rule.edge[1]);
    if (!K->find({a, b}))
      throw Error(ErrorCode::not_found,
                  "edge [" + std::to_string(a) + "," + std::to_string(b) + "] is not in the complex");
    mid = static_cast<int>(K->num_vertices());
    vertices.push_back(0.5 * (K->vertex(a) + K->vertex(b)));
    children_of = [&](int d, int id) { return midpoint_children(K->simplex(d, id), a, b, mid); };
  }

  for (auto [d, id] : K->maximal_simplices())
    for (auto& child : children_of(d, id)) tops.push_back(std::move(child));

  Subdivision sub;
  sub.parent = K;
  sub.refined = EmbeddedComplex::build(std::move(vertices), tops, K->tolerance());
  sub.children.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& level = sub.children[static_cast<std::size_t>(d)];
    level.resize(K->count(d));
    for (std::size_t id = 0; id < K->count(d); ++id) {
      for (const auto& child : children_of(d, static_cast<int>(id))) {
        const int cid = *sub.refined->find(child);
        level[id].push_back({cid, orientation_sign(*sub.refined, d, cid, *K, static_cast<int>(id))});
      }
    }
  }
  return sub;
}

BoundaryRegion transport(const BoundaryRegion& gamma, const Subdivision& sub) {
  BoundaryRegion out;
  out.dimension = gamma.dimension;
  if (gamma.face_ids.empty()) return out;
  const auto& level = sub.children.at(static_cast<std::size_t>(gamma.dimension));
  for (int id : gamma.face_ids)
    for (const Child& c : level.at(static_cast<std::size_t>(id))) out.face_ids.push_back(c.id);
  std::sort(out.face_ids.begin(), out.face_ids.end());
  out.face_ids.erase(std::unique(out.face_ids.begin(), out.face_ids.end()), out.face_ids.end());
  return out;
}

ComplexPtr apply_vertex_map(const ComplexPtr& K, const VertexMap& f, double tol) {
  if (f.images.size() != K->num_vertices())
    throw Error(ErrorCode::dimension_mismatch, "vertex map must give one image per vertex");
  for (int v : f.frozen) {
    if (v < 0 || static_cast<std::size_t>(v) >= K->num_vertices())
      throw Error(ErrorCode::invalid_argument, "frozen vertex id out of range");
    if (f.images[static_cast<std::size_t>(v)].size() != K->ambient_dim() ||
        (f.images[static_cast<std::size_t>(v)] - K->vertex(v)).norm() > tol)
      throw Error(ErrorCode::precondition, "map moves frozen vertex " + std::to_string(v));
  }
  std::vector<int> order(f.images.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& p : f.images)
    if (p.size() != K->ambient_dim()) throw Error(ErrorCode::dimension_mismatch, "vertex image has wrong dimension");
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return f.images[static_cast<std::size_t>(x)](0) < f.images[static_cast<std::size_t>(y)](0);
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Point& p = f.images[static_cast<std::size_t>(order[i])];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Point& q = f.images[static_cast<std::size_t>(order[j])];
      if (q(0) - p(0) > tol) break;
      if ((p - q).norm() <= tol)
        throw Error(ErrorCode::invalid_argument, "vertex collision between " + std::to_string(order[i]) +
                                                     " and " + std::to_string(order[j]));
    }
  }
  return K->with_vertices(f.images);
}

}  // namespace polycal

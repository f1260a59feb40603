#include "toric/polytope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t> &)>
                         &fn) {
  if (k > n)
    return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

std::size_t affine_rank(const std::vector<RatVector> &points, std::size_t n) {
  if (points.size() < 2)
    return 0;
  RatMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      diffs(i - 1, j) = points[i][j] - points[0][j];
  return rank(diffs);
}

std::size_t normal_rank(const std::vector<Facet> &facets,
                        const std::vector<std::size_t> &which, std::size_t n) {
  std::vector<IntVector> rows;
  for (std::size_t f : which)
    rows.push_back(facets[f].normal);
  return rank(IntMatrix::from_rows(rows, n));
}

std::size_t check_points(const std::vector<RatVector> &points) {
  if (points.empty())
    throw NotFullDimensional("empty point list");
  const std::size_t n = points.front().size();
  if (n == 0)
    throw NotFullDimensional("ambient dimension must be positive");
  std::set<RatVector> seen;
  for (const auto &p : points) {
    if (p.size() != n)
      throw DimensionMismatch("points have differing dimensions");
    if (!seen.insert(p).second)
      throw DuplicatePoint("duplicate point " + to_string(p));
  }
  if (affine_rank(points, n) != n)
    throw NotFullDimensional("points do not affinely span R^" +
                             std::to_string(n));
  return n;
}

} // namespace

std::vector<std::size_t> LatticePolytope::facets_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (facet_vertices_[f].test(v))
      out.push_back(f);
  return out;
}

std::optional<std::size_t>
LatticePolytope::find_vertex(const RatVector &x) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == x)
      return v;
  return std::nullopt;
}

LatticePolytope facets_from_vertices(std::vector<RatVector> points) {
  const std::size_t n = check_points(points);

  std::vector<Facet> facets;
  std::set<IntVector> normals_seen;
  for_each_subset(points.size(), n, [&](const std::vector<std::size_t> &s) {
    RatMatrix m(n - 1, n);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i - 1, j) = points[s[i]][j] - points[s[0]][j];
    auto ker = kernel_basis(m);
    if (ker.size() != 1)
      return;
    IntVector a = primitive(ker.front());
    Rational b = dot(a, points[s[0]]);
    bool above = false, below = false;
    for (const auto &p : points) {
      int c = cmp(dot(a, p), b);
      above |= c > 0;
      below |= c < 0;
    }
    if (above && below)
      return;
    if (above) {
      for (auto &x : a)
        x = -x;
      b = -b;
    }
    if (normals_seen.insert(a).second)
      facets.push_back({std::move(a), std::move(b)});
  });

  // keep only extreme points: those cut out by n independent facets
  std::vector<RatVector> extreme;
  for (const auto &p : points) {
    std::vector<std::size_t> on;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (dot(facets[f].normal, p) == facets[f].offset)
        on.push_back(f);
    if (normal_rank(facets, on, n) == n)
      extreme.push_back(p);
  }

  LatticePolytope poly;
  poly.dim_ = n;
  poly.vertices_ = std::move(extreme);
  poly.facets_ = std::move(facets);
  for (const auto &f : poly.facets_) {
    IndexSet on(poly.vertices_.size());
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
      if (dot(f.normal, poly.vertices_[v]) == f.offset)
        on.set(v);
    poly.facet_vertices_.push_back(std::move(on));
  }
  return poly;
}

LatticePolytope with_facets(std::vector<RatVector> points,
                            std::vector<Facet> facets) {
  const std::size_t given = points.size();
  LatticePolytope poly = facets_from_vertices(std::move(points));
  if (poly.vertex_count() != given)
    throw InvalidPolytope("vertex list contains non-extreme points");
  if (facets.size() != poly.facet_count())
    throw InvalidPolytope("facet list has " + std::to_string(facets.size()) +
                          " entries, hull has " +
                          std::to_string(poly.facet_count()));
  std::vector<IndexSet> on;
  for (const auto &f : facets) {
    auto it = std::find(poly.facets_.begin(), poly.facets_.end(), f);
    if (it == poly.facets_.end())
      throw InvalidPolytope("facet " + to_string(f.normal) + " <= " +
                            to_string(f.offset) + " is not a facet of the hull");
    on.push_back(poly.facet_vertices_[it - poly.facets_.begin()]);
  }
  poly.facets_ = std::move(facets);
  poly.facet_vertices_ = std::move(on);
  return poly;
}

LatticePolytope vertices_from_facets(const std::vector<Facet> &inequalities,
                                     std::size_t n) {
  if (n == 0)
    throw NotFullDimensional("ambient dimension must be positive");
  std::vector<Facet> ineqs = inequalities;
  for (const auto &f : ineqs) {
    if (f.normal.size() != n)
      throw DimensionMismatch("inequality normal has wrong length");
    if (sgn(content(f.normal)) == 0)
      throw InvalidPolytope("inequality with zero normal");
  }
  std::vector<IntVector> normals;
  for (const auto &f : ineqs)
    normals.push_back(f.normal);
  const bool pointed = rank(IntMatrix::from_rows(normals, n)) == n;
  if (!pointed) {
    // The region is invariant along the common kernel; pin those directions
    // to decide emptiness, after which a nonempty region is unbounded.
    for (const auto &k : kernel_basis(to_rational(
             IntMatrix::from_rows(normals, n)))) {
      IntVector d = primitive(k);
      IntVector neg = d;
      for (auto &x : neg)
        x = -x;
      ineqs.push_back({d, 0});
      ineqs.push_back({neg, 0});
    }
  }

  auto feasible = [&](const RatVector &x) {
    return std::all_of(ineqs.begin(), ineqs.end(), [&](const Facet &f) {
      return dot(f.normal, x) <= f.offset;
    });
  };

  std::set<RatVector> found;
  for_each_subset(ineqs.size(), n, [&](const std::vector<std::size_t> &s) {
    RatMatrix a(n, n);
    RatVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = ineqs[s[i]].normal[j];
      b[i] = ineqs[s[i]].offset;
    }
    RatVector x;
    if (solve_square(a, b, x) && feasible(x))
      found.insert(std::move(x));
  });

  if (found.empty())
    throw EmptyPolytope("inequalities have no common solution");
  if (!pointed)
    throw Unbounded("inequalities leave a line of solutions");

  // bounded iff the recession cone {d : A d <= 0} has no extreme ray
  for_each_subset(ineqs.size(), n - 1,
                  [&](const std::vector<std::size_t> &s) {
                    RatMatrix a(n - 1, n);
                    for (std::size_t i = 0; i < n - 1; ++i)
                      for (std::size_t j = 0; j < n; ++j)
                        a(i, j) = ineqs[s[i]].normal[j];
                    auto ker = kernel_basis(a);
                    if (ker.size() != 1)
                      return;
                    for (int sign : {1, -1}) {
                      bool ray = true;
                      for (const auto &f : ineqs)
                        if (sign * dot(f.normal, ker.front()) > 0) {
                          ray = false;
                          break;
                        }
                      if (ray)
                        throw Unbounded("region has a recession direction " +
                                        to_string(ker.front()));
                    }
                  });

  std::vector<RatVector> verts(found.begin(), found.end());
  if (affine_rank(verts, n) != n)
    throw NotFullDimensional("solution set is not full-dimensional");
  return facets_from_vertices(std::move(verts));
}

// ---------------------------------------------------------------------------

FaceLattice::FaceLattice(LatticePolytope polytope)
    : polytope_(std::move(polytope)) {
  const LatticePolytope &p = polytope_;
  const std::size_t n = p.ambient_dim();
  const std::size_t nv = p.vertex_count();

  IndexSet all(nv);
  all.set();
  std::set<IndexSet> seen{all};
  std::deque<IndexSet> queue{all};
  while (!queue.empty()) {
    IndexSet cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
      IndexSet next = cur & p.facet_vertices(f);
      if (next.any() && seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }

  for (const auto &vs : seen) {
    Face face;
    face.vertices = vs;
    for (std::size_t f = 0; f < p.facet_count(); ++f)
      if (vs.is_subset_of(p.facet_vertices(f)))
        face.facets.push_back(f);
    face.dim = n - normal_rank(p.facets(), face.facets, n);
    faces_.push_back(std::move(face));
  }
  auto indices = [](const IndexSet &s) {
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i))
      out.push_back(i);
    return out;
  };
  std::sort(faces_.begin(), faces_.end(), [&](const Face &a, const Face &b) {
    if (a.dim != b.dim)
      return a.dim < b.dim;
    return indices(a.vertices) < indices(b.vertices);
  });

  covers_.resize(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == 1)
      edges_.push_back(i);
    for (std::size_t j = 0; j < faces_.size(); ++j)
      if (faces_[j].dim == faces_[i].dim + 1 &&
          faces_[i].vertices.is_subset_of(faces_[j].vertices))
        covers_[i].push_back(j);
  }
}

std::optional<std::size_t> FaceLattice::find(const IndexSet &vertices) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == vertices)
      return i;
  return std::nullopt;
}

bool FaceLattice::is_subface(std::size_t a, std::size_t b) const {
  return faces_.at(a).vertices.is_subset_of(faces_.at(b).vertices);
}

std::pair<std::size_t, std::size_t>
FaceLattice::endpoints(std::size_t edge) const {
  const IndexSet &vs = faces_.at(edge).vertices;
  if (faces_[edge].dim != 1 || vs.count() != 2)
    throw InvalidPolytope("face is not an edge");
  auto a = vs.find_first();
  return {a, vs.find_next(a)};
}

std::vector<std::size_t> FaceLattice::edges_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e : edges_)
    if (faces_[e].vertices.test(v))
      out.push_back(e);
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(ambient_dim() + 1, 0);
  for (const auto &face : faces_)
    ++f[face.dim];
  return f;
}

bool is_simple_vertex(const LatticePolytope &p, std::size_t v) {
  return p.facets_at(v).size() == p.ambient_dim();
}

bool is_simple(const LatticePolytope &p) {
  for (std::size_t v = 0; v < p.vertex_count(); ++v)
    if (!is_simple_vertex(p, v))
      return false;
  return true;
}

Fan normal_fan(const FaceLattice &lattice) {
  const LatticePolytope &p = lattice.polytope();
  Fan fan;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Cone c;
    for (std::size_t f : lattice.face(i).facets)
      c.generators.push_back(p.facet(f).normal);
    c.dim = c.generators.empty()
                ? 0
                : rank(IntMatrix::from_rows(c.generators, p.ambient_dim()));
    fan.cones.push_back(std::move(c));
    std::vector<std::size_t> sup;
    for (std::size_t j = 0; j < lattice.size(); ++j)
      if (j != i && lattice.is_subface(i, j))
        sup.push_back(j);
    fan.face_of.push_back(std::move(sup));
  }
  return fan;
}

IntVector edge_direction(const FaceLattice &lattice, std::size_t edge) {
  auto [v, w] = lattice.endpoints(edge);
  const auto &a = lattice.polytope().vertex(v);
  const auto &b = lattice.polytope().vertex(w);
  RatVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    d[i] = b[i] - a[i];
  return primitive(d);
}

} // namespace toric

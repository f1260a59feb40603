#pragma once

// Full-dimensional polytopes with rational vertices and primitive integer
// facet normals; their face lattices and normal fans.

#include "toric/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using IndexSet = boost::dynamic_bitset<>;

/// Half-space <normal, x> <= offset.
struct Facet {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Facet &, const Facet &) = default;
};

class LatticePolytope {
public:
  LatticePolytope() = default;

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t facet_count() const noexcept { return facets_.size(); }

  const std::vector<RatVector> &vertices() const noexcept { return vertices_; }
  const RatVector &vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Facet> &facets() const noexcept { return facets_; }
  const Facet &facet(std::size_t f) const { return facets_.at(f); }

  bool incident(std::size_t v, std::size_t f) const {
    return facet_vertices_[f].test(v);
  }
  /// Vertices lying on facet f.
  const IndexSet &facet_vertices(std::size_t f) const {
    return facet_vertices_.at(f);
  }
  /// Facets containing vertex v, ascending.
  std::vector<std::size_t> facets_at(std::size_t v) const;
  /// Index of the vertex with these coordinates, if any.
  std::optional<std::size_t> find_vertex(const RatVector &x) const;

  std::string name;

private:
  friend LatticePolytope facets_from_vertices(std::vector<RatVector> points);
  friend LatticePolytope with_facets(std::vector<RatVector> points,
                                     std::vector<Facet> facets);

  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<IndexSet> facet_vertices_;
};

/// Convex hull by brute-force hyperplane enumeration through n-subsets.
/// Non-extreme input points are dropped; the remaining order is kept.
LatticePolytope facets_from_vertices(std::vector<RatVector> points);

/// Intersection of half-spaces in R^n. Redundant inequalities are dropped
/// and vertices come out in lexicographic order.
LatticePolytope vertices_from_facets(const std::vector<Facet> &inequalities,
                                     std::size_t ambient_dim);

/// Hull of `points`, cross-checked against an explicit facet list whose
/// order is adopted. Throws InvalidPolytope on disagreement.
LatticePolytope with_facets(std::vector<RatVector> points,
                            std::vector<Facet> facets);

struct Face {
  IndexSet vertices;
  std::vector<std::size_t> facets;
  std::size_t dim = 0;
};

/// All nonempty faces, as the closure of facet vertex-sets under
/// intersection. Faces are sorted by (dim, vertex indices), so face v is
/// vertex v for v < vertex_count() and the last face is the polytope.
class FaceLattice {
public:
  explicit FaceLattice(LatticePolytope polytope);

  const LatticePolytope &polytope() const noexcept { return polytope_; }
  std::size_t ambient_dim() const noexcept { return polytope_.ambient_dim(); }
  std::size_t vertex_count() const noexcept { return polytope_.vertex_count(); }

  std::size_t size() const noexcept { return faces_.size(); }
  const Face &face(std::size_t i) const { return faces_.at(i); }
  const std::vector<Face> &faces() const noexcept { return faces_; }
  std::size_t top() const noexcept { return faces_.size() - 1; }
  std::size_t vertex_face(std::size_t v) const { return v; }

  std::optional<std::size_t> find(const IndexSet &vertices) const;
  /// True when face a is contained in face b.
  bool is_subface(std::size_t a, std::size_t b) const;
  /// Faces covering i, one dimension up.
  const std::vector<std::size_t> &covers(std::size_t i) const {
    return covers_.at(i);
  }

  /// Indices of the 1-dimensional faces.
  const std::vector<std::size_t> &edges() const noexcept { return edges_; }
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const;
  /// Edges through vertex v.
  std::vector<std::size_t> edges_at(std::size_t v) const;

  /// f_0 .. f_n, the last entry counting the polytope itself.
  std::vector<std::size_t> f_vector() const;

private:
  LatticePolytope polytope_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::size_t> edges_;
};

bool is_simple_vertex(const LatticePolytope &p, std::size_t v);
bool is_simple(const LatticePolytope &p);

struct Cone {
  std::vector<IntVector> generators;
  std::size_t dim = 0;
};

/// Normal fan indexed like the face lattice: cones[i] is generated by the
/// normals of the facets containing face i.
struct Fan {
  std::vector<Cone> cones;
  /// Cones having cones[i] as a face (faces of the polytope containing i).
  std::vector<std::vector<std::size_t>> face_of;

  /// Maximal cone of vertex v.
  const Cone &vertex_cone(std::size_t v) const { return cones.at(v); }
};

Fan normal_fan(const FaceLattice &lattice);

/// Primitive integer direction of an edge; the sign is not meaningful.
IntVector edge_direction(const FaceLattice &lattice, std::size_t edge);

} // namespace toric

#pragma once

// Equivariant cohomology and K-theory of toric orbifolds as algebras of
// compatible tuples on the fixed points: GKM divisibility checks, the
// piecewise-polynomial conditions on the normal fan, and graded dimensions.

#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"
#include "toric/retraction.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toric {

struct GKMEdge {
  std::size_t face = 0; ///< index of the edge in the face lattice
  std::size_t v = 0;
  std::size_t w = 0; ///< v < w
  IntVector weight;  ///< primitive, parallel to w - v
};

/// Fixed points are the polytope vertices; edges are its 1-skeleton.
struct GKMGraph {
  std::size_t vertex_count = 0;
  std::size_t ambient_dim = 0;
  std::vector<GKMEdge> edges;
};

/// Throws NotAlmostSimple when the polytope has no retraction sequence.
GKMGraph gkm_graph(const FaceLattice &lattice);

enum class Theory { H, K };

/// A tuple of (Laurent) polynomials, one per vertex. H-elements fill
/// `polys`, K-elements fill `laurent`.
struct PiecewiseElement {
  Theory theory = Theory::H;
  CoefficientRing ring = CoefficientRing::Q;
  std::vector<std::string> variables;
  std::vector<Polynomial> polys;
  std::vector<LaurentPolynomial> laurent;
  /// K-theory only: divisor on edge {v,w} becomes 1 - t^(m * weight).
  std::map<std::pair<std::size_t, std::size_t>, long> multipliers;

  std::size_t size() const {
    return theory == Theory::H ? polys.size() : laurent.size();
  }
  std::string value_string(std::size_t v) const;
};

/// H-element from polynomial texts in variables u1..un.
PiecewiseElement make_h_element(const std::vector<std::string> &values,
                                std::size_t n,
                                CoefficientRing ring = CoefficientRing::Q);

struct Violation {
  std::size_t v = 0;
  std::size_t w = 0;
  IntVector weight;
  std::string difference;
  std::string reason;

  /// "edge (v,w) weight=<vec>: <difference> not divisible"
  std::string to_string() const;
};

/// Divisibility of x_v - x_w by the edge weight, per edge. Empty means the
/// element passes. Throws InvalidElement on a theory or size mismatch.
std::vector<Violation> gkm_check_H(const GKMGraph &g, const PiecewiseElement &x,
                                   CoefficientRing ring);
std::vector<Violation> gkm_check_K(const GKMGraph &g, const PiecewiseElement &x);

/// Normal form of f modulo the linear forms vanishing on span(sigma).
Polynomial restriction_to_cone(const Polynomial &f, const Cone &sigma);

enum class PPMode { Walls, AllFaces };

/// Agreement of restrictions on the normal fan. Walls mode compares the two
/// vertex cones across each wall; AllFaces compares every pair of vertex
/// cones on each face they share.
std::vector<Violation> pp_check(const FaceLattice &lattice,
                                const PiecewiseElement &x, PPMode mode);

/// Basis of the degree-d homogeneous elements that pass the wall
/// conditions, over Q.
std::vector<std::vector<Polynomial>> homogeneous_basis(const FaceLattice &lattice,
                                                       long degree);

/// Dimensions of the graded pieces in degrees 0..max_degree.
std::vector<std::size_t> hilbert_function(const FaceLattice &lattice,
                                          long max_degree);

/// Numerator of the Hilbert series times (1 - t)^n. Needs dims up to degree
/// n at least; throws InconsistentSeries on a negative coefficient or a
/// nonzero one past degree n.
BettiVector poincare_from_hilbert(const std::vector<std::size_t> &dims,
                                  std::size_t ambient_dim);

} // namespace toric

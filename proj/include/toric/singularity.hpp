#pragma once

// Lattice data attached to each retraction step: the quotient of Z^n by the
// normals of the step's maximal face, the projected cutting normals, and the
// finite group they leave over.

#include "toric/retraction.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

struct StepProjection {
  /// k x n surjection killing the saturated span of the normals of E.
  IntMatrix projection;
  /// Facets F_i with E ∩ F_i the facets of E through the vertex, ascending.
  std::vector<std::size_t> cutting_facets;
  /// Images of the cutting normals, not re-primitivized.
  std::vector<IntVector> mus;
};

/// Throws DegenerateStep when the images are dependent or E does not have
/// exactly k facets through the vertex.
StepProjection step_projection(const FaceLattice &lattice,
                               const RetractionStep &step);

/// Z^k / <mu_1, ..., mu_k>.
FiniteAbelianGroup orbifold_group(const FaceLattice &lattice,
                                  const RetractionStep &step);

struct OrbifoldDatum {
  std::size_t j = 0; ///< stage label, from vertex_count() down to 1
  std::size_t vertex = 0;
  std::size_t k = 0;
  std::vector<std::size_t> cutting_facets;
  std::vector<IntVector> mus;
  FiniteAbelianGroup group;
};

struct SingularityReport {
  std::vector<OrbifoldDatum> steps;
  bool divisive_for_sequence = false;
  bool simple = false;
};

SingularityReport is_divisive_sequence(const FaceLattice &lattice,
                                       const RetractionSequence &seq);

struct DivisiveResult {
  bool divisive = false;
  std::optional<RetractionSequence> witness;
  SearchCertificate certificate;
};

/// Searches for a retraction sequence whose groups are all trivial. Throws
/// NotAlmostSimple if there is no retraction sequence at all.
DivisiveResult is_divisive(const FaceLattice &lattice);

} // namespace toric

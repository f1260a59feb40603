#pragma once

// Retraction sequences: repeatedly delete the star of a free vertex until a
// single vertex remains. A polytope admitting one is almost simple.

#include "toric/polytope.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Subface-closed set of faces of a face lattice. The lattice must outlive
/// the complex.
class PolytopalComplex {
public:
  /// The full polytope.
  explicit PolytopalComplex(const FaceLattice &lattice);
  PolytopalComplex(const FaceLattice &lattice, IndexSet faces);

  const FaceLattice &lattice() const noexcept { return *lattice_; }
  const IndexSet &faces() const noexcept { return faces_; }
  bool contains(std::size_t face) const { return faces_.test(face); }
  bool has_vertex(std::size_t v) const { return faces_.test(v); }

  std::vector<std::size_t> vertices() const;
  std::size_t vertex_count() const;
  /// Connected through the edges of the complex.
  bool is_connected() const;

  friend bool operator==(const PolytopalComplex &a,
                         const PolytopalComplex &b) {
    return a.lattice_ == b.lattice_ && a.faces_ == b.faces_;
  }

private:
  const FaceLattice *lattice_;
  IndexSet faces_;
};

/// Faces of c containing vertex v, as a set of face indices.
IndexSet star(const PolytopalComplex &c, std::size_t v);

/// A vertex whose star has a unique maximal face E of dimension k >= 1, in
/// which the vertex is simple.
struct FreeVertex {
  std::size_t vertex = 0;
  std::size_t max_face = 0;
  std::size_t k = 0;
};

std::optional<FreeVertex> free_vertex(const PolytopalComplex &c,
                                      std::size_t v);
std::vector<FreeVertex> free_vertices(const PolytopalComplex &c);

/// c minus the star of v.
PolytopalComplex delete_vertex(const PolytopalComplex &c, std::size_t v);

struct StepEdge {
  std::size_t edge = 0;  ///< face index of the edge
  std::size_t other = 0; ///< its endpoint other than the step vertex
};

struct RetractionStep {
  std::size_t vertex = 0;
  std::size_t max_face = 0;
  std::size_t k = 0;
  std::vector<StepEdge> edges;
};

/// Steps in removal order: the first entry acts on the whole polytope and
/// the last one is the remaining vertex with k = 0.
struct RetractionSequence {
  std::vector<RetractionStep> steps;

  std::vector<std::size_t> order() const;
  std::vector<std::size_t> k_sequence() const;
};

/// Bookkeeping of a backtracking search. When nothing is found and
/// `exhaustive` is set, every branch of free-vertex choices was ruled out.
struct SearchCertificate {
  std::size_t states_explored = 0;
  std::size_t dead_states = 0;
  bool exhaustive = false;
};

struct RetractionResult {
  std::optional<RetractionSequence> sequence;
  SearchCertificate certificate;

  bool found() const noexcept { return sequence.has_value(); }
};

/// Decides whether a step may be taken at the current stage; lets callers
/// prune the search (e.g. by orbifold group triviality).
using StepFilter =
    std::function<bool(const PolytopalComplex &, const RetractionStep &)>;

/// Depth-first search over free-vertex choices in vertex-index order, with
/// disconnected complexes pruned and dead complexes memoized.
RetractionResult search_retraction(const FaceLattice &lattice,
                                   const StepFilter &accept = {});

/// Like search_retraction, but a hint prefix is replayed first. Throws
/// InvalidHint when a hinted vertex is absent or not free at its stage.
RetractionResult
find_retraction(const FaceLattice &lattice,
                const std::optional<std::vector<std::size_t>> &order_hint = {});

/// Up to `limit` distinct sequences in deterministic depth-first order.
std::vector<RetractionSequence>
enumerate_retractions(const FaceLattice &lattice, std::size_t limit,
                      const StepFilter &accept = {});

/// Removes vertices by decreasing height <phi, v>. Requires a simple
/// polytope and a covector separating all vertices.
RetractionSequence height_retraction(const FaceLattice &lattice,
                                     const IntVector &phi);

/// Replays a sequence against the lattice; throws InvalidSequence with the
/// first failing step.
void validate_sequence(const FaceLattice &lattice,
                       const RetractionSequence &seq);

/// Builds the step for removing v from c, or nothing if v is not free (or
/// not the last vertex).
std::optional<RetractionStep> make_step(const PolytopalComplex &c,
                                        std::size_t v);

/// Even Betti numbers; b[k] is the rank in degree 2k.
struct BettiVector {
  std::vector<std::size_t> b;

  std::size_t total() const;
  /// "(b0,b2,...)"
  std::string to_string() const;
  friend bool operator==(const BettiVector &, const BettiVector &) = default;
};

/// b_{2k} = number of steps with k_j = k.
BettiVector betti_numbers(const RetractionSequence &seq,
                          std::size_t ambient_dim);

} // namespace toric

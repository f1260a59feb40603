#include "toric/singularity.hpp"

#include <algorithm>

namespace toric {

StepProjection step_projection(const FaceLattice &lattice,
                               const RetractionStep &step) {
  const LatticePolytope &p = lattice.polytope();
  const std::size_t n = p.ambient_dim();
  const Face &e = lattice.face(step.max_face);

  std::vector<IntVector> normals;
  for (std::size_t f : e.facets)
    normals.push_back(p.facet(f).normal);
  StepProjection out;
  out.projection = quotient_projection(saturate(normals, n), n);
  if (out.projection.rows() != step.k)
    throw DegenerateStep("quotient rank " +
                         std::to_string(out.projection.rows()) +
                         " differs from k = " + std::to_string(step.k));
  if (step.k == 0)
    return out;

  // facets G of E through the vertex; each is E ∩ F for facets F ⊇ G, F ⊉ E
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    const Face &face = lattice.face(g);
    if (face.dim + 1 != e.dim || !face.vertices.test(step.vertex) ||
        !lattice.is_subface(g, step.max_face))
      continue;
    auto it = std::find_if(face.facets.begin(), face.facets.end(),
                           [&](std::size_t f) {
                             return !std::binary_search(e.facets.begin(),
                                                        e.facets.end(), f);
                           });
    if (it == face.facets.end())
      throw DegenerateStep("no facet cuts out face " + std::to_string(g));
    out.cutting_facets.push_back(*it);
  }
  if (out.cutting_facets.size() != step.k)
    throw DegenerateStep("vertex " + std::to_string(step.vertex) + " lies on " +
                         std::to_string(out.cutting_facets.size()) +
                         " facets of its maximal face, expected " +
                         std::to_string(step.k));
  std::sort(out.cutting_facets.begin(), out.cutting_facets.end());
  for (std::size_t f : out.cutting_facets)
    out.mus.push_back(out.projection * p.facet(f).normal);
  if (rank(IntMatrix::from_columns(out.mus, step.k)) != step.k)
    throw DegenerateStep("projected normals at vertex " +
                         std::to_string(step.vertex) + " are dependent");
  return out;
}

FiniteAbelianGroup orbifold_group(const FaceLattice &lattice,
                                  const RetractionStep &step) {
  return abelian_quotient(step_projection(lattice, step).mus, step.k);
}

SingularityReport is_divisive_sequence(const FaceLattice &lattice,
                                       const RetractionSequence &seq) {
  SingularityReport r;
  r.simple = is_simple(lattice.polytope());
  r.divisive_for_sequence = true;
  const std::size_t l = seq.steps.size();
  for (std::size_t i = 0; i < l; ++i) {
    const RetractionStep &s = seq.steps[i];
    StepProjection sp = step_projection(lattice, s);
    OrbifoldDatum d;
    d.j = l - i;
    d.vertex = s.vertex;
    d.k = s.k;
    d.group = abelian_quotient(sp.mus, s.k);
    d.cutting_facets = std::move(sp.cutting_facets);
    d.mus = std::move(sp.mus);
    r.divisive_for_sequence &= d.group.is_trivial();
    r.steps.push_back(std::move(d));
  }
  return r;
}

DivisiveResult is_divisive(const FaceLattice &lattice) {
  if (!search_retraction(lattice).found())
    throw NotAlmostSimple("polytope admits no retraction sequence");
  RetractionResult r = search_retraction(
      lattice, [&](const PolytopalComplex &, const RetractionStep &step) {
        return orbifold_group(lattice, step).is_trivial();
      });
  return {r.found(), std::move(r.sequence), r.certificate};
}

} // namespace toric

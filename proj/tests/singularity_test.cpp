#include "oracles.hpp"

#include "toric/io.hpp"
#include "toric/singularity.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

LatticePolytope raw(const std::string &name) {
  return load_polytope(oracle::data(name + ".json"));
}

FaceLattice load(const std::string &name) { return FaceLattice(raw(name)); }

std::size_t vertex(const FaceLattice &l, std::initializer_list<long> xs) {
  RatVector p;
  for (long x : xs)
    p.emplace_back(x);
  return *l.polytope().find_vertex(p);
}

IntVector ints(std::initializer_list<long> xs) {
  return IntVector(xs.begin(), xs.end());
}

RetractionSequence replay(const FaceLattice &l, std::vector<std::size_t> order) {
  RetractionResult r = find_retraction(l, order);
  EXPECT_TRUE(r.found());
  EXPECT_EQ(r.sequence->order(), order);
  return *r.sequence;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

TEST(StepProjection, GelfandZetlinFirstTwoSteps) {
  FaceLattice gz = load("gz3");
  RetractionSequence seq = replay(
      gz, {vertex(gz, {0, 2, 2}), vertex(gz, {1, 2, 2}), vertex(gz, {1, 2, 1}),
           vertex(gz, {0, 1, 1}), vertex(gz, {0, 2, 0}), vertex(gz, {0, 1, 0}),
           vertex(gz, {1, 1, 1})});

  StepProjection first = step_projection(gz, seq.steps[0]);
  EXPECT_EQ(oracle::invariant_factors(first.projection), ints({1, 1, 1}));
  EXPECT_EQ(abs(determinant(first.projection)), 1);
  std::set<IntVector> normals;
  for (std::size_t f : first.cutting_facets)
    normals.insert(gz.polytope().facet(f).normal);
  EXPECT_EQ(normals, (std::set<IntVector>{ints({-1, 0, 0}), ints({0, 1, 0}),
                                          ints({0, -1, 1})}));
  EXPECT_TRUE(orbifold_group(gz, seq.steps[0]).is_trivial());

  // second step lives in the facet x = 1; the projection kills (1,0,0)
  StepProjection second = step_projection(gz, seq.steps[1]);
  ASSERT_EQ(second.projection.rows(), 2u);
  EXPECT_EQ(second.projection * ints({1, 0, 0}), ints({0, 0}));
  EXPECT_EQ(oracle::invariant_factors(second.projection), ints({1, 1}));
  EXPECT_TRUE(orbifold_group(gz, seq.steps[1]).is_trivial());
}

TEST(StepProjection, KillsNormalsOfTheMaximalFace) {
  for (const char *name : {"gz3", "cube", "pyramid", "triangle_2_3"}) {
    FaceLattice l = load(name);
    for (const auto &seq : enumerate_retractions(l, 20))
      for (const auto &step : seq.steps) {
        StepProjection sp = step_projection(l, step);
        for (std::size_t f : l.face(step.max_face).facets)
          for (const auto &x : sp.projection * l.polytope().facet(f).normal)
            EXPECT_EQ(x, 0) << name;
      }
  }
}

TEST(StepProjection, SquareEdgeStep) {
  FaceLattice sq = load("square");
  // after (1,1) goes, (1,0) sits on the bottom edge; the cutting facet is x = 0
  RetractionSequence seq =
      replay(sq, {vertex(sq, {1, 1}), vertex(sq, {1, 0}), vertex(sq, {0, 1}),
                  vertex(sq, {0, 0})});
  StepProjection sp = step_projection(sq, seq.steps[1]);
  ASSERT_EQ(sp.mus.size(), 1u);
  EXPECT_EQ(abs(sp.mus[0][0]), 1);
}

TEST(OrbifoldGroup, Triangles) {
  FaceLattice t23 = load("triangle_2_3");
  RetractionSequence a = replay(t23, {vertex(t23, {2, 0}), vertex(t23, {0, 0}),
                                      vertex(t23, {0, 3})});
  EXPECT_EQ(orbifold_group(t23, a.steps[0]).to_string(), "[3]");

  FaceLattice t12 = load("triangle_1_2");
  RetractionSequence b = replay(t12, {vertex(t12, {1, 0}), vertex(t12, {0, 0}),
                                      vertex(t12, {0, 2})});
  EXPECT_EQ(orbifold_group(t12, b.steps[0]).to_string(), "[2]");
}

// |K| equals |det(mu)| whenever the step is full rank.
TEST(OrbifoldGroup, OrderIsDeterminant) {
  for (const char *name : {"gz3", "triangle_1_2", "triangle_2_3", "pyramid", "simplex3"}) {
    FaceLattice l = load(name);
    for (const auto &seq : enumerate_retractions(l, 50))
      for (const auto &step : seq.steps) {
        if (step.k == 0)
          continue;
        StepProjection sp = step_projection(l, step);
        std::vector<std::vector<Integer>> m;
        for (std::size_t i = 0; i < step.k; ++i) {
          m.emplace_back();
          for (const auto &mu : sp.mus)
            m.back().push_back(mu[i]);
        }
        EXPECT_EQ(abelian_quotient(sp.mus, step.k).order(), abs(oracle::cofactor_det(m)))
            << name;
      }
  }
}

TEST(DivisiveSequence, GelfandZetlinCoordinateOrder) {
  FaceLattice gz = load("gz3");
  RetractionSequence seq = replay(
      gz, {vertex(gz, {0, 2, 2}), vertex(gz, {1, 2, 2}), vertex(gz, {1, 2, 1}),
           vertex(gz, {0, 1, 1}), vertex(gz, {0, 2, 0}), vertex(gz, {0, 1, 0}),
           vertex(gz, {1, 1, 1})});
  SingularityReport r = is_divisive_sequence(gz, seq);
  EXPECT_TRUE(r.divisive_for_sequence);
  EXPECT_FALSE(r.simple);
  ASSERT_EQ(r.steps.size(), 7u);
  EXPECT_EQ(r.steps.front().j, 7u);
  EXPECT_EQ(r.steps.back().j, 1u);
}

TEST(DivisiveSequence, UnimodularPolytopesAlwaysDivisive) {
  for (const char *name : {"cube", "simplex3", "square"}) {
    FaceLattice l = load(name);
    for (const auto &seq : enumerate_retractions(l, 200))
      EXPECT_TRUE(is_divisive_sequence(l, seq).divisive_for_sequence) << name;
  }
}

TEST(DivisiveSequence, TriangleHypotenuseStep) {
  FaceLattice t = load("triangle_2_3");
  RetractionSequence seq = replay(t, {vertex(t, {0, 0}), vertex(t, {2, 0}),
                                      vertex(t, {0, 3})});
  SingularityReport r = is_divisive_sequence(t, seq);
  EXPECT_FALSE(r.divisive_for_sequence);
  EXPECT_EQ(r.steps[1].group.to_string(), "[3]");
}

TEST(IsDivisive, ExistentialAnswers) {
  FaceLattice t12 = load("triangle_1_2");
  DivisiveResult a = is_divisive(t12);
  ASSERT_TRUE(a.divisive);
  EXPECT_EQ(a.witness->order().back(), vertex(t12, {1, 0}));
  EXPECT_TRUE(is_divisive_sequence(t12, *a.witness).divisive_for_sequence);

  EXPECT_TRUE(is_divisive(load("gz3")).divisive);
  EXPECT_THROW(is_divisive(load("octahedron")), NotAlmostSimple);
}

// Oracle: replay each of the 3! orders and inspect every group.
TEST(IsDivisive, TriangleTwoThreeFailsEveryOrder) {
  FaceLattice t = load("triangle_2_3");
  for (const auto &order : permutations(3)) {
    RetractionSequence seq = replay(t, order);
    EXPECT_FALSE(is_divisive_sequence(t, seq).divisive_for_sequence);
  }
  DivisiveResult r = is_divisive(t);
  EXPECT_FALSE(r.divisive);
  EXPECT_TRUE(r.certificate.exhaustive);
}

TEST(Dilation, GroupsUnchanged) {
  LatticePolytope p = raw("triangle_2_3");
  std::vector<RatVector> scaled;
  for (const auto &v : p.vertices()) {
    RatVector w = v;
    for (auto &x : w)
      x *= 3;
    scaled.push_back(w);
  }
  FaceLattice a(p), b(facets_from_vertices(scaled));
  for (const auto &order : permutations(3)) {
    SingularityReport ra = is_divisive_sequence(a, replay(a, order));
    SingularityReport rb = is_divisive_sequence(b, replay(b, order));
    for (std::size_t i = 0; i < ra.steps.size(); ++i) {
      EXPECT_EQ(ra.steps[i].group, rb.steps[i].group);
      EXPECT_EQ(ra.steps[i].mus, rb.steps[i].mus);
    }
  }
}

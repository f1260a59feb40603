#include "oracles.hpp"

#include "toric/io.hpp"
#include "toric/retraction.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace toric;

namespace {

FaceLattice load(const std::string &name) {
  return FaceLattice(load_polytope(oracle::data(name + ".json")));
}

std::size_t vertex(const FaceLattice &l, std::initializer_list<long> xs) {
  RatVector p;
  for (long x : xs)
    p.emplace_back(x);
  return *l.polytope().find_vertex(p);
}

std::multiset<std::size_t> k_multiset(const RetractionSequence &s) {
  auto k = s.k_sequence();
  return {k.begin(), k.end()};
}

std::size_t edge_count(const FaceLattice &l) { return l.f_vector()[1]; }

const char *const kAlmostSimple[] = {"gz3",      "cube",     "square",
                                     "segment",  "simplex2", "simplex3",
                                     "pyramid",  "triangle_1_2", "triangle_2_3"};

} // namespace

TEST(Star, FaceCounts) {
  FaceLattice cube = load("cube");
  PolytopalComplex full(cube);
  EXPECT_EQ(star(full, 0).count(), 8u);
  FaceLattice gz = load("gz3");
  EXPECT_EQ(star(PolytopalComplex(gz), vertex(gz, {1, 1, 1})).count(), 10u);

  FaceLattice seg = load("segment");
  PolytopalComplex rest = delete_vertex(PolytopalComplex(seg), 0);
  EXPECT_EQ(rest.vertex_count(), 1u);
  EXPECT_EQ(star(rest, 1).count(), 1u);
}

TEST(FreeVertices, FullComplexes) {
  FaceLattice cube = load("cube");
  auto fv = free_vertices(PolytopalComplex(cube));
  EXPECT_EQ(fv.size(), 8u);
  for (const auto &f : fv)
    EXPECT_EQ(f.k, 3u);

  FaceLattice gz = load("gz3");
  auto g = free_vertices(PolytopalComplex(gz));
  EXPECT_EQ(g.size(), 6u);
  const std::size_t center = vertex(gz, {1, 1, 1});
  for (const auto &f : g)
    EXPECT_NE(f.vertex, center);

  EXPECT_TRUE(free_vertices(PolytopalComplex(load("octahedron"))).empty());
}

TEST(DeleteVertex, GelfandZetlinFirstStep) {
  FaceLattice gz = load("gz3");
  PolytopalComplex c = delete_vertex(PolytopalComplex(gz), vertex(gz, {0, 2, 2}));
  EXPECT_EQ(c.vertex_count(), 6u);
  std::size_t edges = 0, facets = 0;
  for (auto f = c.faces().find_first(); f != IndexSet::npos; f = c.faces().find_next(f)) {
    edges += gz.face(f).dim == 1;
    facets += gz.face(f).dim == 2;
  }
  EXPECT_EQ(edges, 8u);
  EXPECT_EQ(facets, 3u);
  EXPECT_FALSE(c.contains(gz.top()));
}

TEST(DeleteVertex, RemovesExactlyTheStar) {
  FaceLattice tri = load("simplex2");
  PolytopalComplex full(tri);
  PolytopalComplex c = delete_vertex(full, 0);
  EXPECT_EQ(c.vertex_count(), 2u);
  for (std::size_t f = 0; f < tri.size(); ++f)
    EXPECT_EQ(c.contains(f), !tri.face(f).vertices.test(0));
}

TEST(FindRetraction, GelfandZetlinHintOrder) {
  FaceLattice gz = load("gz3");
  std::vector<std::size_t> hint{
      vertex(gz, {0, 2, 2}), vertex(gz, {1, 2, 2}), vertex(gz, {1, 2, 1}),
      vertex(gz, {0, 1, 1}), vertex(gz, {0, 2, 0}), vertex(gz, {0, 1, 0}),
      vertex(gz, {1, 1, 1})};
  RetractionResult r = find_retraction(gz, hint);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.sequence->order(), hint);
  EXPECT_EQ(r.sequence->k_sequence(), (std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 0}));
  EXPECT_NO_THROW(validate_sequence(gz, *r.sequence));
}

TEST(FindRetraction, HintPrefixIsCompleted) {
  FaceLattice gz = load("gz3");
  RetractionResult r = find_retraction(gz, std::vector<std::size_t>{vertex(gz, {1, 2, 1})});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.sequence->order().front(), vertex(gz, {1, 2, 1}));
  EXPECT_EQ(r.sequence->steps.size(), 7u);
}

TEST(FindRetraction, InvalidHints) {
  FaceLattice gz = load("gz3");
  EXPECT_THROW(find_retraction(gz, std::vector<std::size_t>{vertex(gz, {1, 1, 1})}),
               InvalidHint);
  EXPECT_THROW(find_retraction(gz, std::vector<std::size_t>{99}), InvalidHint);
  EXPECT_THROW(find_retraction(gz, std::vector<std::size_t>{0, 0}), InvalidHint);
}

TEST(FindRetraction, OctahedronIsNotAlmostSimple) {
  RetractionResult r = find_retraction(load("octahedron"));
  EXPECT_FALSE(r.found());
  EXPECT_TRUE(r.certificate.exhaustive);
  EXPECT_TRUE(enumerate_retractions(load("octahedron"), 10).empty());
}

TEST(FindRetraction, Segment) {
  RetractionResult r = find_retraction(load("segment"));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.sequence->k_sequence(), (std::vector<std::size_t>{1, 0}));
}

TEST(EnumerateRetractions, SquareHasSixteenOrders) {
  // 4 choices for the first vertex, then either end of the remaining path,
  // then either end of the last edge
  auto all = enumerate_retractions(load("square"), 1000);
  EXPECT_EQ(all.size(), 16u);
  std::set<std::vector<std::size_t>> orders;
  for (const auto &s : all)
    orders.insert(s.order());
  EXPECT_EQ(orders.size(), all.size());
}

TEST(EnumerateRetractions, GelfandZetlinHasSeveral) {
  FaceLattice gz = load("gz3");
  auto some = enumerate_retractions(gz, 10);
  EXPECT_GE(some.size(), 2u);
  EXPECT_LE(some.size(), 10u);
}

// Every accepted sequence revalidates, removes one vertex per step, and uses
// each edge exactly once.
TEST(EnumerateRetractions, ValidityAndEdgeCount) {
  for (const char *name : kAlmostSimple) {
    FaceLattice l = load(name);
    for (const auto &seq : enumerate_retractions(l, 50)) {
      EXPECT_NO_THROW(validate_sequence(l, seq)) << name;
      EXPECT_EQ(seq.steps.size(), l.vertex_count());
      std::set<std::size_t> used;
      std::size_t ksum = 0;
      for (const auto &s : seq.steps) {
        ksum += s.k;
        EXPECT_EQ(s.edges.size(), s.k);
        for (const auto &e : s.edges)
          EXPECT_TRUE(used.insert(e.edge).second) << name;
      }
      EXPECT_EQ(ksum, edge_count(l)) << name;
      EXPECT_EQ(seq.steps.back().k, 0u);
    }
  }
}

TEST(HeightRetraction, CubeAndSquare) {
  FaceLattice cube = load("cube");
  RetractionSequence s = height_retraction(cube, {1, 2, 4});
  EXPECT_NO_THROW(validate_sequence(cube, s));
  EXPECT_EQ(k_multiset(s), (std::multiset<std::size_t>{3, 2, 2, 2, 1, 1, 1, 0}));
  EXPECT_EQ(s.order().front(), vertex(cube, {1, 1, 1}));

  FaceLattice sq = load("square");
  EXPECT_EQ(k_multiset(height_retraction(sq, {1, 2})),
            (std::multiset<std::size_t>{2, 1, 1, 0}));
}

TEST(HeightRetraction, Errors) {
  EXPECT_THROW(height_retraction(load("cube"), {1, 1, 1}), NotGeneric);
  EXPECT_THROW(height_retraction(load("gz3"), {1, 2, 4}), NotSimple);
}

TEST(ValidateSequence, RejectsTamperedSequences) {
  FaceLattice gz = load("gz3");
  RetractionSequence s = *find_retraction(gz).sequence;
  RetractionSequence swapped = s;
  std::swap(swapped.steps[0], swapped.steps.back());
  EXPECT_THROW(validate_sequence(gz, swapped), InvalidSequence);
  RetractionSequence wrong_k = s;
  wrong_k.steps[0].k = 1;
  EXPECT_THROW(validate_sequence(gz, wrong_k), InvalidSequence);
  RetractionSequence short_seq = s;
  short_seq.steps.pop_back();
  EXPECT_THROW(validate_sequence(gz, short_seq), InvalidSequence);
}

TEST(Betti, KnownVectors) {
  auto betti = [](const char *name) {
    FaceLattice l = load(name);
    return betti_numbers(*find_retraction(l).sequence, l.ambient_dim()).b;
  };
  using V = std::vector<std::size_t>;
  EXPECT_EQ(betti("gz3"), (V{1, 2, 3, 1}));
  EXPECT_EQ(betti("simplex3"), (V{1, 1, 1, 1}));
  EXPECT_EQ(betti("cube"), (V{1, 3, 3, 1}));
  EXPECT_EQ(betti("square"), (V{1, 2, 1}));
  BettiVector b{{1, 2, 3, 1}};
  EXPECT_EQ(b.to_string(), "(1,2,3,1)");
  EXPECT_EQ(b.total(), 7u);
}

// For simple polytopes the k-counts are the h-vector of the f-vector.
TEST(Betti, SimplePolytopesFollowHVector) {
  for (const char *name : {"cube", "square", "simplex2", "simplex3", "segment",
                           "triangle_1_2", "triangle_2_3"}) {
    FaceLattice l = load(name);
    ASSERT_TRUE(is_simple(l.polytope()));
    std::vector<Integer> h = oracle::h_vector(l.f_vector());
    for (const auto &seq : enumerate_retractions(l, 20)) {
      BettiVector b = betti_numbers(seq, l.ambient_dim());
      ASSERT_EQ(b.b.size(), h.size());
      for (std::size_t i = 0; i < h.size(); ++i)
        EXPECT_EQ(Integer(b.b[i]), h[i]) << name;
    }
  }
}

TEST(Betti, InvariantAcrossRetractions) {
  for (const char *name : kAlmostSimple) {
    FaceLattice l = load(name);
    auto all = enumerate_retractions(l, 100000);
    ASSERT_FALSE(all.empty()) << name;
    const BettiVector first = betti_numbers(all.front(), l.ambient_dim());
    for (const auto &seq : all)
      EXPECT_EQ(betti_numbers(seq, l.ambient_dim()), first) << name;
    EXPECT_EQ(first.total(), l.vertex_count());
    EXPECT_EQ(first.b.front(), 1u);
    EXPECT_EQ(first.b.back(), 1u);
  }
}

TEST(Pyramid, ApexCanBeLast) {
  FaceLattice pyr = load("pyramid");
  const std::size_t apex = vertex(pyr, {0, 0, 1});
  auto all = enumerate_retractions(pyr, 100000);
  ASSERT_FALSE(all.empty());
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const RetractionSequence &s) {
    return s.order().back() == apex;
  }));
}

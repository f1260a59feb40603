// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values are literals or come from the oracles in
// oracles.hpp; nothing here is tuned to the implementation's output.

#include "oracles.hpp"

#include "cli.hpp"
#include "toric/cohomology.hpp"
#include "toric/io.hpp"
#include "toric/singularity.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace toric;

namespace {

// Pinned limits. Verdicts are exact, so there is no numeric tolerance.
constexpr double kFastSeconds = 1.0;
constexpr double kHilbertSeconds = 10.0;
constexpr int kRandomTrials = 200;

class Criterion {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok && failures_.size() < 5)
      failures_.push_back(what);
    failed_ |= !ok;
  }
  bool passed() const { return !failed_; }
  std::string summary() const {
    std::string s;
    for (const auto &f : failures_)
      s += (s.empty() ? "" : "; ") + f;
    return s;
  }

private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string path(const std::string &name) { return oracle::data(name).string(); }

FaceLattice load(const std::string &name) {
  return FaceLattice(load_polytope(path(name + ".json")));
}

PiecewiseElement row(int i) {
  return load_element(path("table1_row" + std::to_string(i) + ".json"));
}

std::size_t vertex(const FaceLattice &l, std::initializer_list<long> xs) {
  RatVector p;
  for (long x : xs)
    p.emplace_back(x);
  return *l.polytope().find_vertex(p);
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

template <class T> std::string str(const std::vector<T> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string str(const std::vector<Integer> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

const char *const kAlmostSimple[] = {"gz3",      "cube",         "square",
                                     "segment",  "simplex2",     "simplex3",
                                     "pyramid",  "triangle_1_2", "triangle_2_3"};

PiecewiseElement h_element(std::vector<Polynomial> polys) {
  PiecewiseElement x;
  x.variables = default_variables("u", polys.front().num_vars());
  x.polys = std::move(polys);
  return x;
}

PiecewiseElement k_element(std::vector<LaurentPolynomial> laurent) {
  PiecewiseElement x;
  x.theory = Theory::K;
  x.variables = default_variables("t", laurent.front().num_vars());
  x.laurent = std::move(laurent);
  return x;
}

void gz_reproduction(Criterion &c) {
  Stopwatch clock;
  CliResult classify = cli({"classify", path("gz3.json")});
  c.expect(classify.code == 0, "classify exit code");
  c.expect(classify.out.starts_with("simple=no almost_simple=yes divisive=yes\n"),
           "classify line: " + classify.out.substr(0, classify.out.find('\n')));

  CliResult retract = cli({"retract", path("gz3.json"), "--order", "0,1,2,5,3,4,6"});
  c.expect(retract.code == 0, "retract exit code");
  c.expect(retract.out.find("k-sequence=(3,2,2,2,1,1,0)\n") != std::string::npos,
           "k-sequence");
  c.expect(retract.out.find("valid=yes\n") != std::string::npos, "validation");

  FaceLattice gz = load("gz3");
  std::vector<std::size_t> order{vertex(gz, {0, 2, 2}), vertex(gz, {1, 2, 2}),
                                 vertex(gz, {1, 2, 1}), vertex(gz, {0, 1, 1}),
                                 vertex(gz, {0, 2, 0}), vertex(gz, {0, 1, 0}),
                                 vertex(gz, {1, 1, 1})};
  RetractionResult r = find_retraction(gz, order);
  c.expect(r.found() && r.sequence->k_sequence() ==
                            std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 0},
           "library replay of the coordinate order");
  const double t = clock.seconds();
  c.expect(t < kFastSeconds, "runtime " + std::to_string(t) + " s");
}

void octahedron(Criterion &c) {
  Stopwatch clock;
  CliResult r = cli({"classify", path("octahedron.json")});
  c.expect(r.code == 0, "classify exit code");
  c.expect(r.out.find("almost_simple=no") != std::string::npos, "almost_simple=no");
  c.expect(r.out.find("certificate: exhaustive search") != std::string::npos,
           "certificate line");
  RetractionResult search = find_retraction(load("octahedron"));
  c.expect(!search.found() && search.certificate.exhaustive, "exhaustive certificate");
  const double t = clock.seconds();
  c.expect(t < kFastSeconds, "runtime " + std::to_string(t) + " s");
}

void reference_elements(Criterion &c) {
  FaceLattice gz = load("gz3");
  GKMGraph g = gkm_graph(gz);
  const Polynomial u1 = Polynomial::variable(3, 0);
  for (int i = 1; i <= 6; ++i) {
    const std::string name = "row " + std::to_string(i);
    PiecewiseElement x = row(i);
    c.expect(gkm_check_H(g, x, CoefficientRing::Q).empty(), name + " gkm Q");
    c.expect(gkm_check_H(g, x, CoefficientRing::Z).empty(), name + " gkm Z");
    c.expect(pp_check(gz, x, PPMode::Walls).empty(), name + " walls");
    c.expect(pp_check(gz, x, PPMode::AllFaces).empty(), name + " all_faces");
    for (const char *mode : {"gkm", "walls", "all"}) {
      CliResult r = cli({"check", path("gz3.json"),
                         path("table1_row" + std::to_string(i) + ".json"), "--mode", mode});
      c.expect(r.code == 0 && r.out == "PASS\n", name + " cli " + mode);
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
      PiecewiseElement bad = x;
      bad.polys[v] += u1;
      const std::string where = name + " +u1 at " + std::to_string(v);
      c.expect(!gkm_check_H(g, bad, CoefficientRing::Q).empty(), where + " gkm Q");
      c.expect(!gkm_check_H(g, bad, CoefficientRing::Z).empty(), where + " gkm Z");
      c.expect(!pp_check(gz, bad, PPMode::Walls).empty(), where + " walls");
      c.expect(!pp_check(gz, bad, PPMode::AllFaces).empty(), where + " all_faces");
    }
  }
}

void orbifold_groups(Criterion &c) {
  FaceLattice gz = load("gz3");
  auto all = enumerate_retractions(gz, 1000000);
  c.expect(!all.empty(), "GZ has retractions");
  for (const auto &seq : all)
    for (const auto &step : seq.steps)
      c.expect(orbifold_group(gz, step).is_trivial(), "nontrivial K_j on GZ");

  FaceLattice t12 = load("triangle_1_2");
  DivisiveResult d = is_divisive(t12);
  c.expect(d.divisive, "triangle (1,2) divisive");
  c.expect(d.witness && d.witness->order().back() == vertex(t12, {1, 0}),
           "witness ends at (1,0)");
  bool saw_z2 = false;
  std::vector<std::size_t> order{0, 1, 2};
  do {
    SingularityReport r = is_divisive_sequence(t12, *find_retraction(t12, order).sequence);
    for (const auto &s : r.steps)
      saw_z2 |= s.group.to_string() == "[2]";
  } while (std::next_permutation(order.begin(), order.end()));
  c.expect(saw_z2, "a bad order of triangle (1,2) yields Z/2");

  FaceLattice t23 = load("triangle_2_3");
  order = {0, 1, 2};
  std::size_t orders = 0;
  do {
    RetractionResult r = find_retraction(t23, order);
    c.expect(r.found(), "every order of triangle (2,3) retracts");
    if (r.found()) {
      ++orders;
      c.expect(!is_divisive_sequence(t23, *r.sequence).divisive_for_sequence,
               "triangle (2,3) order divisive");
    }
  } while (std::next_permutation(order.begin(), order.end()));
  c.expect(orders == 6, "six orders of triangle (2,3)");
  c.expect(!is_divisive(t23).divisive, "triangle (2,3) not divisive");
}

void betti(Criterion &c) {
  using V = std::vector<std::size_t>;
  const std::pair<const char *, V> known[] = {
      {"gz3", {1, 2, 3, 1}}, {"cube", {1, 3, 3, 1}}, {"simplex3", {1, 1, 1, 1}}};
  for (const auto &[name, b] : known) {
    FaceLattice l = load(name);
    BettiVector got = betti_numbers(*find_retraction(l).sequence, l.ambient_dim());
    c.expect(got.b == b, std::string(name) + " betti " + got.to_string());
    if (is_simple(l.polytope())) {
      std::vector<Integer> h = oracle::h_vector(l.f_vector());
      c.expect(std::vector<Integer>(got.b.begin(), got.b.end()) == h,
               std::string(name) + " h-vector " + str(h));
    }
  }
  c.expect(find_retraction(load("pyramid")).found(), "pyramid retracts");
  for (const char *name : kAlmostSimple) {
    FaceLattice l = load(name);
    auto all = enumerate_retractions(l, 1000000);
    c.expect(!all.empty(), std::string(name) + " retracts");
    if (all.empty())
      continue;
    const BettiVector first = betti_numbers(all.front(), l.ambient_dim());
    c.expect(first.total() == l.vertex_count(), std::string(name) + " total");
    for (const auto &seq : all)
      c.expect(betti_numbers(seq, l.ambient_dim()) == first,
               std::string(name) + " betti differs across retractions");
  }
}

void hilbert(Criterion &c) {
  using V = std::vector<std::size_t>;
  const std::pair<const char *, V> expected[] = {{"gz3", {1, 3, 8, 16, 30}},
                                                 {"square", {1, 4, 8, 12, 16}}};
  for (const auto &[name, dims] : expected) {
    FaceLattice l = load(name);
    const std::size_t n = l.ambient_dim();
    BettiVector b = betti_numbers(*find_retraction(l).sequence, n);
    Stopwatch clock;
    V got = hilbert_function(l, 4);
    const double t = clock.seconds();
    const V formula = oracle::free_module_dims(b.b, n, 4);
    c.expect(got == dims, std::string(name) + " hilbert " + str(got) + " vs expected " +
                              str(dims));
    c.expect(formula == dims, std::string(name) + " free-module formula " +
                                  str(formula) + " vs expected " + str(dims));
    c.expect(got == formula, std::string(name) + " hilbert vs free-module formula");
    c.expect(poincare_from_hilbert(got, n) == b, std::string(name) + " poincare");
    c.expect(t < kHilbertSeconds, std::string(name) + " runtime " + std::to_string(t));
  }
}

// Passing tuples are a global polynomial plus a vertex-supported multiple of
// the product of the edge forms at that vertex; odd trials add a bump.
void equivalence(Criterion &c, oracle::Rng &rng) {
  for (const char *name : kAlmostSimple) {
    FaceLattice l = load(name);
    GKMGraph g = gkm_graph(l);
    const std::size_t n = g.ambient_dim, m = g.vertex_count;
    for (int trial = 0; trial < kRandomTrials; ++trial) {
      std::vector<Polynomial> polys(m, rng.polynomial<false>(n, rng.uniform(0, 3), 2));
      const std::size_t v = rng.uniform(0, m - 1);
      Polynomial local = rng.polynomial<false>(n, rng.uniform(1, 2), 1);
      for (const auto &e : g.edges)
        if (e.v == v || e.w == v)
          local = local * LinearForm(e.weight).to_polynomial();
      polys[v] += local;
      if (trial % 2 == 1) {
        Exponent mono(n, 0);
        if (trial % 4 == 1)
          mono[rng.uniform(0, n - 1)] = rng.uniform(1, 2);
        Polynomial bump(n);
        bump.add_term(mono, Rational(rng.uniform(1, 3)));
        polys[rng.uniform(0, m - 1)] += bump;
      }
      PiecewiseElement x = h_element(polys);
      const bool gkm = gkm_check_H(g, x, CoefficientRing::Q).empty();
      const bool walls = pp_check(l, x, PPMode::Walls).empty();
      const bool all = pp_check(l, x, PPMode::AllFaces).empty();
      c.expect(gkm == walls && walls == all, std::string(name) + " equivalence");
      if (trial % 2 == 0)
        c.expect(gkm, std::string(name) + " constructed element fails");
    }
  }
}

void properties(Criterion &c) {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    IntMatrix a = rng.matrix(rng.uniform(1, 4), rng.uniform(1, 4), trial % 3 ? 9 : 2);
    SNFDecomposition s = snf(a);
    c.expect(s.U * a * s.V == s.D, "SNF identity");
    c.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "SNF unimodular");
    c.expect(s.diagonal() == oracle::invariant_factors(a), "SNF invariant factors");
  }

  equivalence(c, rng);

  for (int trial = 0; trial < kRandomTrials; ++trial) {
    IntVector lambda = rng.nonzero_vector(3, 3);
    Polynomial q = rng.polynomial<false>(3, rng.uniform(1, 4), 3);
    Polynomial g = LinearForm(lambda).to_polynomial() * q;
    auto got = divides_linear(LinearForm(lambda), g, CoefficientRing::Q);
    c.expect(got && *got == q, "divides_linear on a product");
    Polynomial bad = g + rng.polynomial<false>(3, 1, 2);
    auto verdict = divides_linear(LinearForm(lambda), bad, CoefficientRing::Q);
    if (verdict)
      c.expect(LinearForm(lambda).to_polynomial() * *verdict == bad, "quotient check");
    else
      c.expect(oracle::nonzero_on_hyperplane(bad, lambda, 4), "non-divisibility witness");
  }
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    IntVector a = rng.nonzero_vector(2, 3);
    LaurentPolynomial binom = LaurentPolynomial::constant(2, 1);
    binom.add_term({a[0].get_si(), a[1].get_si()}, -1);
    LaurentPolynomial q = rng.polynomial<true>(2, rng.uniform(1, 4), 2, -2);
    auto got = divides_binomial(a, binom * q);
    c.expect(got && binom * *got == binom * q, "divides_binomial on a product");
    LaurentPolynomial bad = binom * q;
    bad.add_term({rng.uniform(-3, 3), rng.uniform(-3, 3)}, Rational(rng.uniform(1, 5)));
    c.expect(!divides_binomial(a, bad), "divides_binomial after a monomial bump");
  }

  // scaling edge weights: invisible over Q, visible over Z
  FaceLattice gz = load("gz3");
  GKMGraph g = gkm_graph(gz), scaled = g;
  for (auto &e : scaled.edges)
    for (auto &x : e.weight)
      x *= 3;
  for (int i = 1; i <= 6; ++i)
    c.expect(gkm_check_H(g, row(i), CoefficientRing::Q).empty() ==
                 gkm_check_H(scaled, row(i), CoefficientRing::Q).empty(),
             "Q scale invariance");
  GKMGraph seg = gkm_graph(load("segment"));
  PiecewiseElement witness = h_element({Polynomial::variable(1, 0), Polynomial(1)});
  c.expect(gkm_check_H(seg, witness, CoefficientRing::Z).empty(), "Z witness unscaled");
  seg.edges[0].weight[0] *= 2;
  c.expect(!gkm_check_H(seg, witness, CoefficientRing::Z).empty(), "Z witness scaled");
  c.expect(gkm_check_H(seg, witness, CoefficientRing::Q).empty(), "Q witness scaled");

  const auto u = default_variables("u", 3), t = default_variables("t", 2);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    Polynomial p = rng.polynomial<false>(3, rng.uniform(0, 6), 3);
    c.expect(parse_polynomial(p.to_string(u), u) == p, "polynomial round trip");
    LaurentPolynomial l = rng.polynomial<true>(2, rng.uniform(0, 6), 3, -3);
    c.expect(parse_laurent(l.to_string(t), t) == l, "Laurent round trip");
  }
}

void k_theory(Criterion &c) {
  GKMGraph seg = gkm_graph(load("segment"));
  c.expect(gkm_check_K(seg, load_element(path("segment_k_pass.json"))).empty(),
           "segment (1 - t1, 0) passes");
  c.expect(!gkm_check_K(seg, load_element(path("segment_k_fail.json"))).empty(),
           "segment (t1, 0) fails");

  FaceLattice sq = load("square");
  GKMGraph g = gkm_graph(sq);
  std::vector<LaurentPolynomial> chars;
  for (const auto &p : sq.polytope().vertices()) {
    LaurentPolynomial m(2);
    m.add_term({p[0].get_num().get_si(), p[1].get_num().get_si()}, 1);
    chars.push_back(m);
  }
  c.expect(gkm_check_K(g, k_element(chars)).empty(), "square character tuple passes");
  std::vector<LaurentPolynomial> bad(4, LaurentPolynomial(2));
  bad[vertex(sq, {0, 0})] = LaurentPolynomial::variable(2, 0);
  c.expect(!gkm_check_K(g, k_element(bad)).empty(), "square t1 at the origin fails");

  for (const char *name : kAlmostSimple) {
    GKMGraph h = gkm_graph(load(name));
    for (long k : {-3L, 0L, 1L, 5L})
      c.expect(gkm_check_K(h, k_element(std::vector<LaurentPolynomial>(
                                  h.vertex_count,
                                  LaurentPolynomial::constant(h.ambient_dim, k))))
                   .empty(),
               std::string(name) + " constant tuple");
  }
}

} // namespace

int main() {
  const std::pair<const char *, std::function<void(Criterion &)>> criteria[] = {
      {"GZ classification and retraction replay", gz_reproduction},
      {"octahedron is not almost simple", octahedron},
      {"GZ element suite in every mode and perturbations", reference_elements},
      {"orbifold groups", orbifold_groups},
      {"Betti numbers", betti},
      {"Hilbert function cross-check", hilbert},
      {"property suites", properties},
      {"K-theory smoke suite", k_theory},
  };
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first;
    if (!c.passed())
      std::cout << " [" << c.summary() << "]";
    std::cout << '\n';
    failed += !c.passed();
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria)
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

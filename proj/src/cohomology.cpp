#include "toric/cohomology.hpp"

#include <algorithm>

namespace toric {

GKMGraph gkm_graph(const FaceLattice &lattice) {
  if (!search_retraction(lattice).found())
    throw NotAlmostSimple("polytope admits no retraction sequence");
  GKMGraph g;
  g.vertex_count = lattice.vertex_count();
  g.ambient_dim = lattice.ambient_dim();
  for (std::size_t e : lattice.edges()) {
    auto [v, w] = lattice.endpoints(e);
    g.edges.push_back({e, std::min(v, w), std::max(v, w), {}});
    g.edges.back().weight = edge_direction(lattice, e);
    if (v > w)
      for (auto &c : g.edges.back().weight)
        c = -c;
  }
  return g;
}

std::string PiecewiseElement::value_string(std::size_t v) const {
  return theory == Theory::H ? polys.at(v).to_string(variables)
                             : laurent.at(v).to_string(variables);
}

PiecewiseElement make_h_element(const std::vector<std::string> &values,
                                std::size_t n, CoefficientRing ring) {
  PiecewiseElement x;
  x.ring = ring;
  x.variables = default_variables("u", n);
  for (const auto &s : values)
    x.polys.push_back(parse_polynomial(s, x.variables));
  return x;
}

std::string Violation::to_string() const {
  return "edge (" + std::to_string(v) + "," + std::to_string(w) +
         ") weight=" + toric::to_string(weight) + ": " + difference + " " +
         reason;
}

namespace {

void check_shape(const PiecewiseElement &x, Theory theory,
                 std::size_t vertices, std::size_t n) {
  if (x.theory != theory)
    throw InvalidElement(theory == Theory::H ? "expected an H-theory element"
                                             : "expected a K-theory element");
  if (x.size() != vertices)
    throw InvalidElement("element has " + std::to_string(x.size()) +
                         " entries for " + std::to_string(vertices) +
                         " vertices");
  if (x.variables.size() != n)
    throw InvalidElement("element has " + std::to_string(x.variables.size()) +
                         " variables in dimension " + std::to_string(n));
}

} // namespace

std::vector<Violation> gkm_check_H(const GKMGraph &g, const PiecewiseElement &x,
                                   CoefficientRing ring) {
  check_shape(x, Theory::H, g.vertex_count, g.ambient_dim);
  std::vector<Violation> out;
  for (const GKMEdge &e : g.edges) {
    const Polynomial diff = x.polys[e.v] - x.polys[e.w];
    if (!divides_linear(LinearForm(e.weight), diff, ring))
      out.push_back({e.v, e.w, e.weight, diff.to_string(x.variables),
                     "not divisible"});
  }
  return out;
}

std::vector<Violation> gkm_check_K(const GKMGraph &g,
                                   const PiecewiseElement &x) {
  check_shape(x, Theory::K, g.vertex_count, g.ambient_dim);
  std::vector<Violation> out;
  for (const GKMEdge &e : g.edges) {
    IntVector a = e.weight;
    if (auto it = x.multipliers.find({e.v, e.w}); it != x.multipliers.end())
      for (auto &c : a)
        c *= it->second;
    const LaurentPolynomial diff = x.laurent[e.v] - x.laurent[e.w];
    if (!divides_binomial(a, diff))
      out.push_back({e.v, e.w, a, diff.to_string(x.variables),
                     "not divisible"});
  }
  return out;
}

Polynomial restriction_to_cone(const Polynomial &f, const Cone &sigma) {
  const std::size_t n = f.num_vars();
  // linear forms vanishing on the cone, in reduced echelon form
  std::vector<RatVector> ann = kernel_basis(
      to_rational(IntMatrix::from_rows(sigma.generators, n)));
  if (ann.empty())
    return f;
  RowEchelon e = rref(RatMatrix::from_rows(ann, n));

  // u_p = -sum_{j non-pivot} R(i,j) u_j modulo the ideal
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Polynomial::variable(n, i));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    Polynomial img(n);
    for (std::size_t j = 0; j < n; ++j)
      if (j != e.pivots[i] && sgn(e.R(i, j)) != 0) {
        Exponent x(n, 0);
        x[j] = 1;
        img.add_term(x, Rational(-e.R(i, j)));
      }
    images[e.pivots[i]] = std::move(img);
  }
  return substitute(f, images);
}

std::vector<Violation> pp_check(const FaceLattice &lattice,
                                const PiecewiseElement &x, PPMode mode) {
  const std::size_t n = lattice.ambient_dim();
  check_shape(x, Theory::H, lattice.vertex_count(), n);
  const Fan fan = normal_fan(lattice);
  const LatticePolytope &p = lattice.polytope();
  std::vector<Violation> out;

  auto compare = [&](std::size_t v, std::size_t w, std::size_t face) {
    const Cone &tau = fan.cones[face];
    const Polynomial rv = restriction_to_cone(x.polys[v], tau);
    const Polynomial rw = restriction_to_cone(x.polys[w], tau);
    if (rv == rw)
      return;
    IntVector dir;
    if (lattice.face(face).dim == 1) {
      dir = edge_direction(lattice, face);
    } else {
      RatVector d(n);
      for (std::size_t i = 0; i < n; ++i)
        d[i] = p.vertex(w)[i] - p.vertex(v)[i];
      dir = primitive(d);
    }
    out.push_back({v, w, dir, (x.polys[v] - x.polys[w]).to_string(x.variables),
                   "restrictions differ on face " + std::to_string(face)});
  };

  if (mode == PPMode::Walls) {
    for (std::size_t e : lattice.edges()) {
      auto [v, w] = lattice.endpoints(e);
      compare(std::min(v, w), std::max(v, w), e);
    }
    return out;
  }
  for (std::size_t v = 0; v < lattice.vertex_count(); ++v)
    for (std::size_t w = v + 1; w < lattice.vertex_count(); ++w)
      for (std::size_t f = 0; f < lattice.size(); ++f) {
        const IndexSet &vs = lattice.face(f).vertices;
        if (vs.test(v) && vs.test(w))
          compare(v, w, f);
      }
  return out;
}

namespace {

/// Exponents of total degree d in n variables, in descending graded-lex order.
std::vector<Exponent> monomials(std::size_t n, long d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0)
      out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  auto rec = [&](auto &self, std::size_t i, long left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (long k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

} // namespace

std::vector<std::vector<Polynomial>> homogeneous_basis(const FaceLattice &lattice,
                                                       long degree) {
  const GKMGraph g = gkm_graph(lattice);
  const std::size_t n = g.ambient_dim;
  const std::size_t nv = g.vertex_count;
  const std::vector<Exponent> mons = monomials(n, degree);
  const std::size_t m = mons.size();
  const std::vector<Exponent> wall_mons = monomials(n - 1, degree);

  // Each edge: restrict to the hyperplane weight^perp through u = B s, and
  // require equal coefficients in s.
  std::vector<RatVector> rows;
  for (const GKMEdge &e : g.edges) {
    std::vector<IntVector> perp;
    for (const RatVector &k :
         kernel_basis(to_rational(IntMatrix::from_rows({e.weight}, n))))
      perp.push_back(primitive(k));
    const std::vector<IntVector> basis = saturate(perp, n);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial img(n - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (sgn(basis[j][i]) != 0) {
          Exponent x(n - 1, 0);
          x[j] = 1;
          img.add_term(x, Rational(basis[j][i]));
        }
      images.push_back(std::move(img));
    }
    std::vector<Polynomial> restricted;
    for (const Exponent &mon : mons)
      restricted.push_back(substitute(Polynomial::monomial(n, mon), images));
    for (const Exponent &s : wall_mons) {
      RatVector row(nv * m);
      for (std::size_t c = 0; c < m; ++c) {
        const Rational coef = restricted[c].coefficient(s);
        row[e.v * m + c] = coef;
        row[e.w * m + c] = -coef;
      }
      rows.push_back(std::move(row));
    }
  }

  std::vector<RatVector> kernel =
      kernel_basis(RatMatrix::from_rows(rows, nv * m));
  std::vector<std::vector<Polynomial>> out;
  for (const RatVector &k : kernel) {
    std::vector<Polynomial> elem(nv, Polynomial(n));
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t c = 0; c < m; ++c)
        elem[v].add_term(mons[c], k[v * m + c]);
    out.push_back(std::move(elem));
  }
  return out;
}

std::vector<std::size_t> hilbert_function(const FaceLattice &lattice,
                                          long max_degree) {
  std::vector<std::size_t> dims;
  for (long d = 0; d <= max_degree; ++d)
    dims.push_back(homogeneous_basis(lattice, d).size());
  return dims;
}

BettiVector poincare_from_hilbert(const std::vector<std::size_t> &dims,
                                  std::size_t ambient_dim) {
  if (dims.size() <= ambient_dim)
    throw InconsistentSeries("need dimensions up to degree " +
                             std::to_string(ambient_dim));
  // multiply by (1 - t) once per dimension
  std::vector<Integer> h(dims.begin(), dims.end());
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (std::size_t i = h.size(); i-- > 1;)
      h[i] -= h[i - 1];
  BettiVector b;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h[i]) < 0)
      throw InconsistentSeries("negative coefficient in degree " +
                               std::to_string(i));
    if (i > ambient_dim && sgn(h[i]) != 0)
      throw InconsistentSeries("nonzero coefficient in degree " +
                               std::to_string(i) + " past the dimension");
    if (i <= ambient_dim)
      b.b.push_back(h[i].get_ui());
  }
  return b;
}

} // namespace toric

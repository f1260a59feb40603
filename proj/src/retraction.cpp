#include "toric/retraction.hpp"

#include <algorithm>
#include <set>

namespace toric {

PolytopalComplex::PolytopalComplex(const FaceLattice &lattice)
    : lattice_(&lattice), faces_(lattice.size()) {
  faces_.set();
}

PolytopalComplex::PolytopalComplex(const FaceLattice &lattice, IndexSet faces)
    : lattice_(&lattice), faces_(std::move(faces)) {
  if (faces_.size() != lattice.size())
    throw DimensionMismatch("face set does not match the lattice");
}

std::vector<std::size_t> PolytopalComplex::vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < lattice_->vertex_count(); ++v)
    if (faces_.test(v))
      out.push_back(v);
  return out;
}

std::size_t PolytopalComplex::vertex_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < lattice_->vertex_count(); ++v)
    n += faces_.test(v);
  return n;
}

bool PolytopalComplex::is_connected() const {
  const auto verts = vertices();
  if (verts.size() <= 1)
    return true;
  IndexSet reached(lattice_->vertex_count());
  std::vector<std::size_t> stack{verts.front()};
  reached.set(verts.front());
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : lattice_->edges_at(v)) {
      if (!faces_.test(e))
        continue;
      auto [a, b] = lattice_->endpoints(e);
      std::size_t w = a == v ? b : a;
      if (!reached.test(w)) {
        reached.set(w);
        stack.push_back(w);
      }
    }
  }
  return reached.count() == verts.size();
}

IndexSet star(const PolytopalComplex &c, std::size_t v) {
  const FaceLattice &l = c.lattice();
  IndexSet s(l.size());
  for (auto i = c.faces().find_first(); i != IndexSet::npos;
       i = c.faces().find_next(i))
    if (l.face(i).vertices.test(v))
      s.set(i);
  return s;
}

std::optional<FreeVertex> free_vertex(const PolytopalComplex &c,
                                      std::size_t v) {
  if (!c.has_vertex(v))
    return std::nullopt;
  const FaceLattice &l = c.lattice();
  const IndexSet s = star(c, v);
  std::optional<std::size_t> max_face;
  for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) {
    bool maximal = true;
    for (std::size_t j : l.covers(i))
      if (s.test(j)) {
        maximal = false;
        break;
      }
    if (!maximal)
      continue;
    if (max_face)
      return std::nullopt;
    max_face = i;
  }
  const Face &e = l.face(*max_face);
  if (e.dim == 0)
    return std::nullopt;
  std::size_t edges = 0;
  for (std::size_t edge : l.edges_at(v))
    edges += l.is_subface(edge, *max_face);
  if (edges != e.dim)
    return std::nullopt;
  return FreeVertex{v, *max_face, e.dim};
}

std::vector<FreeVertex> free_vertices(const PolytopalComplex &c) {
  std::vector<FreeVertex> out;
  for (std::size_t v : c.vertices())
    if (auto fv = free_vertex(c, v))
      out.push_back(*fv);
  return out;
}

PolytopalComplex delete_vertex(const PolytopalComplex &c, std::size_t v) {
  if (!c.has_vertex(v))
    throw InvalidSequence("vertex " + std::to_string(v) +
                          " is not in the complex");
  return PolytopalComplex(c.lattice(), c.faces() - star(c, v));
}

std::optional<RetractionStep> make_step(const PolytopalComplex &c,
                                        std::size_t v) {
  if (!c.has_vertex(v))
    return std::nullopt;
  if (c.vertex_count() == 1)
    return RetractionStep{v, c.lattice().vertex_face(v), 0, {}};
  auto fv = free_vertex(c, v);
  if (!fv)
    return std::nullopt;
  RetractionStep step{v, fv->max_face, fv->k, {}};
  const FaceLattice &l = c.lattice();
  for (std::size_t e : l.edges_at(v))
    if (l.is_subface(e, fv->max_face)) {
      auto [a, b] = l.endpoints(e);
      step.edges.push_back({e, a == v ? b : a});
    }
  return step;
}

std::vector<std::size_t> RetractionSequence::order() const {
  std::vector<std::size_t> out;
  for (const auto &s : steps)
    out.push_back(s.vertex);
  return out;
}

std::vector<std::size_t> RetractionSequence::k_sequence() const {
  std::vector<std::size_t> out;
  for (const auto &s : steps)
    out.push_back(s.k);
  return out;
}

namespace {

class Searcher {
public:
  Searcher(const StepFilter &accept, std::size_t limit)
      : accept_(accept), limit_(limit) {}

  // Returns true if some completion from c was accepted.
  bool run(const PolytopalComplex &c) {
    ++cert.states_explored;
    if (c.vertex_count() == 1) {
      auto step = make_step(c, c.vertices().front());
      if (accept_ && !accept_(c, *step))
        return mark_dead(c);
      path_.push_back(std::move(*step));
      results.push_back(RetractionSequence{path_});
      path_.pop_back();
      return true;
    }
    if (!c.is_connected() || dead_.count(c.faces()))
      return mark_dead(c);
    bool any = false;
    for (const auto &fv : free_vertices(c)) {
      auto step = make_step(c, fv.vertex);
      if (accept_ && !accept_(c, *step))
        continue;
      path_.push_back(std::move(*step));
      any |= run(delete_vertex(c, fv.vertex));
      path_.pop_back();
      if (results.size() >= limit_)
        return true;
    }
    return any ? true : mark_dead(c);
  }

  std::vector<RetractionSequence> results;
  SearchCertificate cert;
  std::vector<RetractionStep> path_;

private:
  bool mark_dead(const PolytopalComplex &c) {
    if (dead_.insert(c.faces()).second)
      ++cert.dead_states;
    return false;
  }

  const StepFilter &accept_;
  std::size_t limit_;
  std::set<IndexSet> dead_;
};

} // namespace

RetractionResult search_retraction(const FaceLattice &lattice,
                                   const StepFilter &accept) {
  Searcher s(accept, 1);
  s.run(PolytopalComplex(lattice));
  RetractionResult r;
  r.certificate = s.cert;
  if (!s.results.empty())
    r.sequence = std::move(s.results.front());
  else
    r.certificate.exhaustive = true;
  return r;
}

RetractionResult
find_retraction(const FaceLattice &lattice,
                const std::optional<std::vector<std::size_t>> &order_hint) {
  if (!order_hint)
    return search_retraction(lattice);
  PolytopalComplex c(lattice);
  std::vector<RetractionStep> prefix;
  for (std::size_t v : *order_hint) {
    if (v >= lattice.vertex_count() || !c.has_vertex(v))
      throw InvalidHint("hinted vertex " + std::to_string(v) +
                        " is not present at stage " +
                        std::to_string(prefix.size() + 1));
    auto step = make_step(c, v);
    if (!step)
      throw InvalidHint("hinted vertex " + std::to_string(v) +
                        " is not free at stage " +
                        std::to_string(prefix.size() + 1));
    prefix.push_back(std::move(*step));
    c = delete_vertex(c, v);
  }
  RetractionResult r;
  if (c.vertex_count() == 0) {
    r.sequence = RetractionSequence{std::move(prefix)};
    r.certificate.states_explored = r.sequence->steps.size();
    return r;
  }
  StepFilter none;
  Searcher s(none, 1);
  s.path_ = prefix;
  s.run(c);
  r.certificate = s.cert;
  if (!s.results.empty())
    r.sequence = std::move(s.results.front());
  else
    r.certificate.exhaustive = true;
  return r;
}

std::vector<RetractionSequence>
enumerate_retractions(const FaceLattice &lattice, std::size_t limit,
                      const StepFilter &accept) {
  if (limit == 0)
    return {};
  Searcher s(accept, limit);
  s.run(PolytopalComplex(lattice));
  return std::move(s.results);
}

RetractionSequence height_retraction(const FaceLattice &lattice,
                                     const IntVector &phi) {
  const LatticePolytope &p = lattice.polytope();
  if (phi.size() != p.ambient_dim())
    throw DimensionMismatch("height covector has wrong length");
  if (!is_simple(p))
    throw NotSimple("height retractions need a simple polytope");
  std::vector<std::pair<Rational, std::size_t>> heights;
  for (std::size_t v = 0; v < p.vertex_count(); ++v)
    heights.emplace_back(dot(phi, p.vertex(v)), v);
  std::sort(heights.begin(), heights.end(),
            [](const auto &a, const auto &b) { return a.first > b.first; });
  for (std::size_t i = 0; i + 1 < heights.size(); ++i)
    if (heights[i].first == heights[i + 1].first)
      throw NotGeneric("vertices " + std::to_string(heights[i].second) +
                       " and " + std::to_string(heights[i + 1].second) +
                       " have equal height");
  RetractionSequence seq;
  PolytopalComplex c(lattice);
  for (const auto &[h, v] : heights) {
    auto step = make_step(c, v);
    if (!step)
      throw InvalidSequence("highest vertex " + std::to_string(v) +
                            " is not free");
    seq.steps.push_back(std::move(*step));
    c = delete_vertex(c, v);
  }
  return seq;
}

void validate_sequence(const FaceLattice &lattice,
                       const RetractionSequence &seq) {
  if (seq.steps.size() != lattice.vertex_count())
    throw InvalidSequence("sequence has " + std::to_string(seq.steps.size()) +
                          " steps for " +
                          std::to_string(lattice.vertex_count()) + " vertices");
  PolytopalComplex c(lattice);
  std::size_t k_total = 0;
  for (std::size_t j = 0; j < seq.steps.size(); ++j) {
    const RetractionStep &s = seq.steps[j];
    auto expect = make_step(c, s.vertex);
    if (!expect || expect->max_face != s.max_face || expect->k != s.k)
      throw InvalidSequence("step " + std::to_string(j + 1) + " at vertex " +
                            std::to_string(s.vertex) + " is not a free move");
    const std::size_t before = c.vertex_count();
    c = delete_vertex(c, s.vertex);
    if (c.vertex_count() + 1 != before)
      throw InvalidSequence("step removed more than one vertex");
    k_total += s.k;
  }
  if (k_total != lattice.edges().size())
    throw InvalidSequence("k values do not add up to the edge count");
}

std::size_t BettiVector::total() const {
  std::size_t t = 0;
  for (auto x : b)
    t += x;
  return t;
}

std::string BettiVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

BettiVector betti_numbers(const RetractionSequence &seq,
                          std::size_t ambient_dim) {
  BettiVector out{std::vector<std::size_t>(ambient_dim + 1, 0)};
  for (const auto &s : seq.steps) {
    if (s.k > ambient_dim)
      throw InvalidSequence("step dimension exceeds the ambient dimension");
    ++out.b[s.k];
  }
  return out;
}

} // namespace toric

#include "cli.hpp"

#include "toric/cohomology.hpp"
#include "toric/io.hpp"
#include "toric/singularity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace toric::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::string polytope;
  std::string element;
  std::string matrix;
  std::string expect;
  std::string order;
  std::size_t all = 0;
  std::string mode = "gkm";
  long max_deg = -1;
};

/// Output sink for one command: plain lines, or a JSON object flushed at the
/// end. Warnings go to stderr in text mode and into the report otherwise.
class Report {
public:
  Report(std::string command, bool as_json, std::ostream &out,
         std::ostream &err)
      : as_json_(as_json), out_(out), err_(err) {
    doc_["command"] = std::move(command);
  }

  bool json_mode() const { return as_json_; }
  json &doc() { return doc_; }

  void line(const std::string &s) {
    if (!as_json_)
      out_ << s << '\n';
  }
  void warn(const std::string &s) {
    if (as_json_)
      doc_["warnings"].push_back(s);
    else
      err_ << "warning: " << s << '\n';
  }
  void finish() {
    if (as_json_)
      out_ << doc_.dump(2) << '\n';
  }

private:
  bool as_json_;
  std::ostream &out_;
  std::ostream &err_;
  json doc_ = json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string coords(const FaceLattice &l, std::size_t v) {
  return to_string(l.polytope().vertex(v));
}

json to_json(const IntVector &v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return a;
}

json to_json(const RatVector &v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(x.get_str());
  return a;
}

json to_json(const IntMatrix &m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    a.push_back(to_json(m.row(i)));
  return a;
}

template <class T> std::string join(const std::vector<T> &v, const char *sep) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i)
    ss << (i ? sep : "") << v[i];
  return ss.str();
}

std::vector<std::size_t> parse_order(const std::string &text) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("bad vertex index \"" + tok + "\" in --order");
    order.push_back(std::stoul(tok));
  }
  return order;
}

json sequence_json(const FaceLattice &l, const RetractionSequence &seq) {
  json steps = json::array();
  const std::size_t len = seq.steps.size();
  for (std::size_t i = 0; i < len; ++i) {
    const RetractionStep &s = seq.steps[i];
    std::vector<std::size_t> face_vertices, edges_to;
    const IndexSet &fv = l.face(s.max_face).vertices;
    for (auto v = fv.find_first(); v != IndexSet::npos; v = fv.find_next(v))
      face_vertices.push_back(v);
    for (const StepEdge &e : s.edges)
      edges_to.push_back(e.other);
    steps.push_back({{"j", len - i},
                     {"vertex", s.vertex},
                     {"coords", to_json(l.polytope().vertex(s.vertex))},
                     {"k", s.k},
                     {"max_face_vertices", std::move(face_vertices)},
                     {"edges_to", std::move(edges_to)}});
  }
  return {{"order", seq.order()},
          {"k_sequence", seq.k_sequence()},
          {"steps", std::move(steps)}};
}

json certificate_json(const SearchCertificate &c) {
  return {{"states_explored", c.states_explored},
          {"dead_states", c.dead_states},
          {"exhaustive", c.exhaustive}};
}

std::string certificate_line(const SearchCertificate &c) {
  return "certificate: " +
         std::string(c.exhaustive ? "exhaustive" : "partial") +
         " search, states=" + std::to_string(c.states_explored) +
         " dead=" + std::to_string(c.dead_states);
}

/// A retraction from --order when given, else the first one found. Throws
/// NotAlmostSimple when there is none.
RetractionSequence retraction_for(const FaceLattice &l,
                                  const std::string &order) {
  std::optional<std::vector<std::size_t>> hint;
  if (!order.empty())
    hint = parse_order(order);
  RetractionResult r = find_retraction(l, hint);
  if (!r.found())
    throw NotAlmostSimple("polytope admits no retraction sequence");
  return std::move(*r.sequence);
}

// ---------------------------------------------------------------------------

int cmd_classify(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  const bool simple = is_simple(l.polytope());
  RetractionResult any = search_retraction(l);
  const bool almost = any.found();
  std::optional<DivisiveResult> div;
  if (almost)
    div = is_divisive(l);

  json &d = rep.doc();
  d["polytope"] = l.polytope().name;
  d["simple"] = simple;
  d["almost_simple"] = almost;
  d["divisive"] = div ? json(div->divisive) : json(nullptr);
  std::string summary = "simple=" + yes_no(simple) +
                        " almost_simple=" + yes_no(almost);
  if (div)
    summary += " divisive=" + yes_no(div->divisive);
  rep.line(summary);

  if (!almost) {
    d["certificate"] = certificate_json(any.certificate);
    rep.line(certificate_line(any.certificate));
  } else if (div->divisive) {
    d["witness"] = sequence_json(l, *div->witness);
    rep.line("witness order=" + join(div->witness->order(), ",") + " k=(" +
             join(div->witness->k_sequence(), ",") + ")");
  } else {
    d["certificate"] = certificate_json(div->certificate);
    rep.line("witness order=" + join(any.sequence->order(), ",") + " k=(" +
             join(any.sequence->k_sequence(), ",") + ")");
    rep.line(certificate_line(div->certificate) + " for trivial groups");
  }

  if (o.expect.empty())
    return kOk;
  const bool met = o.expect == "simple"   ? simple
                   : o.expect == "almost" ? almost
                                          : div && div->divisive;
  d["expect"] = o.expect;
  d["expectation_met"] = met;
  if (!met)
    rep.line("expectation " + o.expect + " not met");
  return met ? kOk : kPropertyFalse;
}

int cmd_retract(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  json &d = rep.doc();
  d["polytope"] = l.polytope().name;

  if (o.all > 0) {
    std::vector<RetractionSequence> all = enumerate_retractions(l, o.all);
    if (all.empty())
      throw NotAlmostSimple("polytope admits no retraction sequence");
    d["sequences"] = json::array();
    for (const auto &seq : all) {
      d["sequences"].push_back(sequence_json(l, seq));
      rep.line("order=" + join(seq.order(), ",") + " k=(" +
               join(seq.k_sequence(), ",") + ")");
    }
    d["count"] = all.size();
    rep.line("count=" + std::to_string(all.size()));
    return kOk;
  }

  RetractionSequence seq = retraction_for(l, o.order);
  validate_sequence(l, seq);
  const std::size_t len = seq.steps.size();
  for (std::size_t i = 0; i < len; ++i) {
    const RetractionStep &s = seq.steps[i];
    rep.line("j=" + std::to_string(len - i) + " v=" + std::to_string(s.vertex) +
             " " + coords(l, s.vertex) + " k=" + std::to_string(s.k));
  }
  rep.line("k-sequence=(" + join(seq.k_sequence(), ",") + ")");
  rep.line("valid=yes");
  d["sequence"] = sequence_json(l, seq);
  d["valid"] = true;
  return kOk;
}

int cmd_orbifold(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  RetractionSequence seq = retraction_for(l, o.order);
  SingularityReport r = is_divisive_sequence(l, seq);
  json &d = rep.doc();
  d["polytope"] = l.polytope().name;
  d["steps"] = json::array();
  for (const OrbifoldDatum &s : r.steps) {
    rep.line("j=" + std::to_string(s.j) + " v=" + coords(l, s.vertex) +
             " k=" + std::to_string(s.k) + " K=" + s.group.to_string());
    json mus = json::array();
    for (const auto &mu : s.mus)
      mus.push_back(to_json(mu));
    d["steps"].push_back({{"j", s.j},
                          {"vertex", s.vertex},
                          {"coords", to_json(l.polytope().vertex(s.vertex))},
                          {"k", s.k},
                          {"cutting_facets", s.cutting_facets},
                          {"mus", std::move(mus)},
                          {"group", to_json(s.group.invariant_factors())}});
  }
  rep.line("divisive(sequence)=" + yes_no(r.divisive_for_sequence));
  d["divisive_for_sequence"] = r.divisive_for_sequence;
  return kOk;
}

int cmd_gkm(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  GKMGraph g = gkm_graph(l);
  json &d = rep.doc();
  d["polytope"] = l.polytope().name;
  d["vertices"] = g.vertex_count;
  d["edges"] = json::array();
  rep.line("vertices=" + std::to_string(g.vertex_count) +
           " edges=" + std::to_string(g.edges.size()));
  for (const GKMEdge &e : g.edges) {
    rep.line("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
             ") weight=" + to_string(e.weight));
    d["edges"].push_back({{"v", e.v}, {"w", e.w}, {"weight", to_json(e.weight)}});
  }
  return kOk;
}

int cmd_betti(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  RetractionSequence seq = retraction_for(l, "");
  BettiVector b = betti_numbers(seq, l.ambient_dim());
  rep.doc()["polytope"] = l.polytope().name;
  rep.doc()["betti"] = b.b;
  rep.line("betti=" + b.to_string());
  return kOk;
}

int cmd_check(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  PiecewiseElement x = load_element(o.element);
  json &d = rep.doc();
  d["polytope"] = l.polytope().name;
  d["mode"] = o.mode;

  std::vector<Violation> violations;
  if (x.theory == Theory::K) {
    if (o.mode != "gkm")
      throw FormatError("K-theory elements support only --mode gkm");
    violations = gkm_check_K(gkm_graph(l), x);
  } else if (o.mode == "gkm") {
    GKMGraph g = gkm_graph(l);
    if (x.ring == CoefficientRing::Z && !is_divisive(l).divisive)
      rep.warn("integral check on a polytope that is not divisive");
    violations = gkm_check_H(g, x, x.ring);
  } else {
    if (x.ring == CoefficientRing::Z)
      rep.warn("piecewise conditions are checked over Q");
    violations = pp_check(l, x, o.mode == "walls" ? PPMode::Walls
                                                  : PPMode::AllFaces);
  }

  d["pass"] = violations.empty();
  d["violations"] = json::array();
  for (const Violation &v : violations) {
    rep.line(v.to_string());
    d["violations"].push_back({{"v", v.v},
                               {"w", v.w},
                               {"weight", to_json(v.weight)},
                               {"difference", v.difference},
                               {"reason", v.reason}});
  }
  if (violations.empty())
    rep.line("PASS");
  return violations.empty() ? kOk : kPropertyFalse;
}

int cmd_hilbert(const Options &o, Report &rep) {
  FaceLattice l(load_polytope(o.polytope));
  const std::vector<std::size_t> dims = hilbert_function(l, o.max_deg);
  json &d = rep.doc();
  d["polytope"] = l.polytope().name;
  d["hilbert"] = dims;
  rep.line("hilbert=(" + join(dims, ",") + ")");
  if (dims.size() > l.ambient_dim()) {
    BettiVector b = poincare_from_hilbert(dims, l.ambient_dim());
    d["poincare"] = b.b;
    rep.line("poincare=" + b.to_string());
  }
  return kOk;
}

int cmd_snf(const Options &o, Report &rep) {
  IntMatrix a = load_matrix(o.matrix);
  SNFDecomposition s = snf(a);
  json &d = rep.doc();
  d["rank"] = s.rank();
  d["diagonal"] = to_json(s.diagonal());
  d["U"] = to_json(s.U);
  d["D"] = to_json(s.D);
  d["V"] = to_json(s.V);
  rep.line("rank=" + std::to_string(s.rank()));
  rep.line("diagonal=" + to_string(s.diagonal()));
  for (const auto &[name, m] : {std::pair{"U", &s.U}, {"D", &s.D}, {"V", &s.V}}) {
    std::ostringstream ss;
    ss << *m;
    rep.line(std::string(name) + ":");
    std::string body = ss.str();
    if (!body.empty() && body.back() == '\n')
      body.pop_back();
    if (!body.empty())
      rep.line(body);
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Combinatorics and equivariant cohomology of toric orbifolds"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");

  auto poly_arg = [&](CLI::App *sub) {
    sub->add_option("polytope", o.polytope, "Polytope JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->fallthrough();
  };

  CLI::App *classify = app.add_subcommand("classify", "Simple, almost simple, divisive");
  poly_arg(classify);
  classify->add_option("--expect", o.expect, "Exit 1 unless the property holds")
      ->check(CLI::IsMember({"simple", "almost", "divisive"}));

  CLI::App *retract = app.add_subcommand("retract", "Find or replay a retraction sequence");
  poly_arg(retract);
  retract->add_option("--order", o.order, "Comma-separated vertex indices");
  retract->add_option("--all", o.all, "List up to N sequences")
      ->check(CLI::PositiveNumber);

  CLI::App *orbifold = app.add_subcommand("orbifold", "Local groups along a retraction");
  poly_arg(orbifold);
  orbifold->add_option("--order", o.order, "Comma-separated vertex indices");

  CLI::App *gkm = app.add_subcommand("gkm", "GKM graph");
  poly_arg(gkm);

  CLI::App *betti = app.add_subcommand("betti", "Even Betti numbers");
  poly_arg(betti);

  CLI::App *check = app.add_subcommand("check", "Membership of a piecewise element");
  poly_arg(check);
  check->add_option("element", o.element, "Element JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--mode", o.mode, "gkm, walls or all")
      ->check(CLI::IsMember({"gkm", "walls", "all"}));

  CLI::App *hilbert = app.add_subcommand("hilbert", "Graded dimensions");
  poly_arg(hilbert);
  hilbert->add_option("--max-deg", o.max_deg, "Largest degree")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App *snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", o.matrix, "Whitespace-separated matrix file")
      ->required()
      ->check(CLI::ExistingFile);
  snf_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kBadInput;
  }

  CLI::App *sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Report rep(name, o.json, out, err);
  try {
    int code = kOk;
    if (name == "classify")
      code = cmd_classify(o, rep);
    else if (name == "retract")
      code = cmd_retract(o, rep);
    else if (name == "orbifold")
      code = cmd_orbifold(o, rep);
    else if (name == "gkm")
      code = cmd_gkm(o, rep);
    else if (name == "betti")
      code = cmd_betti(o, rep);
    else if (name == "check")
      code = cmd_check(o, rep);
    else if (name == "hilbert")
      code = cmd_hilbert(o, rep);
    else
      code = cmd_snf(o, rep);
    rep.finish();
    return code;
  } catch (const NotAlmostSimple &e) {
    err << "error: not almost simple: " << e.what() << '\n';
    return kNotAlmostSimple;
  } catch (const InvalidHint &e) {
    err << "error: invalid order: " << e.what() << '\n';
    return kPropertyFalse;
  } catch (const SyntaxError &e) {
    err << "error: syntax at position " << e.position() << ": " << e.what()
        << '\n';
    return kBadInput;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

} // namespace toric::cli

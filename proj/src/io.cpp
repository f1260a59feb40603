#include "toric/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const json &field(const json &obj, const char *key) {
  if (!obj.is_object() || !obj.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Rational number(const json &j) {
  if (j.is_number_integer())
    return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  throw FormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer(const json &j) {
  Rational q = number(j);
  if (q.get_den() != 1)
    throw FormatError("expected an integer, got " + j.dump());
  return q.get_num();
}

std::size_t vertex_index(const std::string &key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError("bad vertex index \"" + key + "\"");
  return std::stoul(key);
}

} // namespace

namespace {

LatticePolytope polytope_from_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const json &verts = field(doc, "vertices");
  if (!verts.is_array() || verts.empty())
    throw FormatError("\"vertices\" must be a nonempty array");
  std::size_t n = doc.contains("ambient_dim")
                      ? doc.at("ambient_dim").get<std::size_t>()
                      : verts.front().size();
  std::vector<RatVector> points;
  for (const json &v : verts) {
    if (!v.is_array() || v.size() != n)
      throw FormatError("vertex " + v.dump() + " does not have " +
                        std::to_string(n) + " coordinates");
    RatVector x;
    for (const json &c : v)
      x.push_back(number(c));
    points.push_back(std::move(x));
  }

  LatticePolytope p;
  if (doc.contains("facets")) {
    std::vector<Facet> facets;
    for (const json &f : doc.at("facets")) {
      Facet facet;
      for (const json &c : field(f, "normal"))
        facet.normal.push_back(integer(c));
      if (facet.normal.size() != n)
        throw FormatError("facet normal " + f.at("normal").dump() +
                          " has the wrong length");
      facet.offset = number(field(f, "offset"));
      facets.push_back(std::move(facet));
    }
    p = with_facets(std::move(points), std::move(facets));
  } else {
    p = facets_from_vertices(std::move(points));
  }
  if (doc.contains("name"))
    p.name = doc.at("name").get<std::string>();
  return p;
}

PiecewiseElement element_from_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  PiecewiseElement x;
  const std::string theory = field(doc, "theory").get<std::string>();
  if (theory == "H")
    x.theory = Theory::H;
  else if (theory == "K")
    x.theory = Theory::K;
  else
    throw FormatError("theory must be \"H\" or \"K\"");
  const std::string ring = doc.value("ring", std::string("Q"));
  if (ring == "Q")
    x.ring = CoefficientRing::Q;
  else if (ring == "Z")
    x.ring = CoefficientRing::Z;
  else
    throw FormatError("ring must be \"Q\" or \"Z\"");
  if (x.theory == Theory::K && x.ring == CoefficientRing::Z)
    throw FormatError("K-theory elements are over Q only");
  x.variables = field(doc, "variables").get<std::vector<std::string>>();

  std::map<std::size_t, std::string> texts;
  for (const auto &[key, value] : field(doc, "assignments").items())
    texts[vertex_index(key)] = value.get<std::string>();
  std::size_t expected = 0;
  for (const auto &[v, text] : texts) {
    if (v != expected++)
      throw FormatError("assignments must cover vertices 0.." +
                        std::to_string(texts.size() - 1));
    if (x.theory == Theory::H)
      x.polys.push_back(parse_polynomial(text, x.variables));
    else
      x.laurent.push_back(parse_laurent(text, x.variables));
  }

  if (doc.contains("multipliers")) {
    for (const auto &[key, value] : doc.at("multipliers").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        throw FormatError("multiplier key must be \"v,w\"");
      std::size_t v = vertex_index(key.substr(0, comma));
      std::size_t w = vertex_index(key.substr(comma + 1));
      if (v > w)
        std::swap(v, w);
      const long m = value.get<long>();
      if (m == 0)
        throw FormatError("multiplier must be nonzero");
      x.multipliers[{v, w}] = m;
    }
  }
  return x;
}

} // namespace

// Type errors from the JSON library surface as FormatError.
LatticePolytope parse_polytope(std::string_view json_text) {
  try {
    return polytope_from_json(json_text);
  } catch (const json::exception &e) {
    throw FormatError(e.what());
  }
}

PiecewiseElement parse_element(std::string_view json_text) {
  try {
    return element_from_json(json_text);
  } catch (const json::exception &e) {
    throw FormatError(e.what());
  }
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<IntVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    IntVector row;
    std::string tok;
    while (ls >> tok) {
      Rational q = parse_rational(tok);
      if (q.get_den() != 1)
        throw FormatError("matrix entry \"" + tok + "\" is not an integer");
      row.push_back(q.get_num());
    }
    if (row.empty())
      continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw FormatError("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LatticePolytope load_polytope(const std::filesystem::path &path) {
  LatticePolytope p = parse_polytope(read_file(path));
  if (p.name.empty())
    p.name = path.stem().string();
  return p;
}

PiecewiseElement load_element(const std::filesystem::path &path) {
  return parse_element(read_file(path));
}

IntMatrix load_matrix(const std::filesystem::path &path) {
  return parse_matrix(read_file(path));
}

} // namespace toric

#include "muso/io.hpp"

#include <algorithm>

namespace muso {

namespace {

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object at top level");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

int read_n(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw FormatError("field \"n\" must be an integer");
  const int value = n.get<int>();
  if (value < 1 || value > kMaxDim) throw FormatError("field \"n\" out of range [1, 20]");
  return value;
}

int read_dim(const Json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where + ": expected an integer dimension");
  const int d = v.get<int>();
  if (d < 1 || d > n) throw FormatError(where + ": dimension " + std::to_string(d) + " outside [1, n]");
  return d - 1;
}

Json subset_to_json(Subset s) {
  Json arr = Json::array();
  for (int d = 0; d < 32; ++d) {
    if (contains(s, d)) arr.push_back(d + 1);
  }
  return arr;
}

Rational read_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw FormatError(where + ": expected a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("JSON syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

Json to_json(const Orientation& o) {
  Json outmaps = Json::array();
  for (Subset v = 0; v < static_cast<Subset>(o.vertex_count()); ++v) outmaps.push_back(subset_to_json(o[v]));
  return Json{{"n", o.dim()}, {"outmaps", outmaps}};
}

Orientation orientation_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& outmaps = field(j, "outmaps");
  if (!outmaps.is_array()) throw FormatError("field \"outmaps\" must be an array");
  if (outmaps.size() != (std::size_t{1} << n)) {
    throw FormatError("field \"outmaps\" has " + std::to_string(outmaps.size()) + " entries, expected " +
                      std::to_string(std::size_t{1} << n));
  }
  std::vector<Subset> table(outmaps.size());
  for (std::size_t v = 0; v < outmaps.size(); ++v) {
    const std::string where = "outmaps[" + std::to_string(v) + "]";
    if (!outmaps[v].is_array()) throw FormatError(where + ": expected a list of dimensions");
    for (const Json& d : outmaps[v]) table[v] |= bit(read_dim(d, n, where));
  }
  return Orientation(n, std::move(table));
}

Json to_json(const InfluenceGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  return Json{{"n", g.size()}, {"edges", edges}};
}

InfluenceGraph graph_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw FormatError("field \"edges\" must be an array");
  std::vector<std::pair<int, int>> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!edges[k].is_array() || edges[k].size() != 2) throw FormatError(where + ": expected a pair [d, d']");
    list.emplace_back(read_dim(edges[k][0], n, where), read_dim(edges[k][1], n, where));
  }
  return InfluenceGraph::from_edges(n, list);
}

Json to_json(const CyclicExtension& ext) {
  Json order = Json::array();
  for (Element e : ext.order()) {
    if (e == ext.q()) {
      order.push_back("q");
    } else {
      order.push_back(e + 1);
    }
  }
  Json flipped = Json::array();
  for (Element e = 0; e < 2 * ext.n(); ++e) {
    if (ext.is_flipped(e)) flipped.push_back(e + 1);
  }
  return Json{{"n", ext.n()}, {"order", order}, {"F", flipped}};
}

CyclicExtension extension_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& order_json = field(j, "order");
  if (!order_json.is_array()) throw FormatError("field \"order\" must be an array");
  std::vector<Element> order;
  for (std::size_t k = 0; k < order_json.size(); ++k) {
    const Json& t = order_json[k];
    const std::string where = "order[" + std::to_string(k) + "]";
    if (t.is_string() && t.get<std::string>() == "q") {
      order.push_back(2 * n);
    } else if (t.is_number_integer() && t.get<int>() >= 1 && t.get<int>() <= 2 * n) {
      order.push_back(t.get<int>() - 1);
    } else {
      throw FormatError(where + ": expected an element 1..2n or \"q\"");
    }
  }
  const Json& f_json = field(j, "F");
  if (!f_json.is_array()) throw FormatError("field \"F\" must be an array");
  ElementSet flipped = 0;
  for (std::size_t k = 0; k < f_json.size(); ++k) {
    const Json& t = f_json[k];
    if (!t.is_number_integer() || t.get<int>() < 1 || t.get<int>() > 2 * n) {
      throw FormatError("F[" + std::to_string(k) + "]: expected an element 1..2n");
    }
    flipped |= element_bit(t.get<int>() - 1);
  }
  try {
    return CyclicExtension(n, std::move(order), flipped);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("field \"order\": ") + e.what());
  }
}

Json to_json(const PLCPInstance& inst) {
  Json m = Json::array();
  for (int r = 0; r < inst.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < inst.size(); ++c) row.push_back(format_rational(inst.M(r, c)));
    m.push_back(row);
  }
  Json q = Json::array();
  for (const Rational& x : inst.q) q.push_back(format_rational(x));
  return Json{{"n", inst.size()}, {"M", m}, {"q", q}};
}

PLCPInstance plcp_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& m = field(j, "M");
  const Json& q = field(j, "q");
  if (!m.is_array() || m.size() != static_cast<std::size_t>(n)) throw FormatError("field \"M\" must have n rows");
  if (!q.is_array() || q.size() != static_cast<std::size_t>(n)) throw FormatError("field \"q\" must have n entries");
  PLCPInstance inst{RationalMatrix(n, n), std::vector<Rational>(n)};
  for (int r = 0; r < n; ++r) {
    if (!m[r].is_array() || m[r].size() != static_cast<std::size_t>(n)) {
      throw FormatError("M[" + std::to_string(r) + "]: expected n entries");
    }
    for (int c = 0; c < n; ++c) {
      inst.M(r, c) = read_rational(m[r][c], "M[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    inst.q[r] = read_rational(q[r], "q[" + std::to_string(r) + "]");
  }
  return inst;
}

Json to_json(const ForbiddenWitness& w) {
  return Json{{"kind", to_string(w.kind)},
              {"vertices", Json::array({w.vertices[0] + 1, w.vertices[1] + 1, w.vertices[2] + 1})}};
}

}  // namespace muso

#include "evenpan/witness.hpp"

#include <algorithm>
#include <sstream>

namespace evenpan {

namespace {

VertexSet set_of(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

std::string join(const Digraph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += g.name(vs[i]);
  }
  return out;
}

std::optional<std::string> check_sequence(const Digraph& g, const std::vector<Vertex>& vs,
                                           bool closed) {
  VertexSet seen = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) return "vertex index " + std::to_string(v) + " out of range";
    if (contains(seen, v)) return "vertex " + g.name(v) + " repeated";
    seen |= bit(v);
  }
  const std::size_t arcs = closed ? vs.size() : vs.size() - 1;
  for (std::size_t i = 0; i < arcs; ++i) {
    const Vertex tail = vs[i];
    const Vertex head = vs[(i + 1) % vs.size()];
    if (!g.has_arc(tail, head)) return "missing arc " + g.name(tail) + " " + g.name(head);
  }
  return std::nullopt;
}

}  // namespace

VertexSet Cycle::vertex_set() const noexcept { return set_of(vertices); }

bool Cycle::contains(Vertex v) const noexcept {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

VertexSet Path::vertex_set() const noexcept { return set_of(vertices); }

Cycle canonical_rotation(Cycle c) {
  if (!c.vertices.empty()) {
    auto smallest = std::min_element(c.vertices.begin(), c.vertices.end());
    std::rotate(c.vertices.begin(), smallest, c.vertices.end());
  }
  return c;
}

std::optional<std::string> check_cycle(const Digraph& g, const Cycle& c) {
  if (c.length() < 2) return "cycle needs at least two vertices";
  if (auto defect = check_sequence(g, c.vertices, true)) return defect;
  // In a bipartite host the arc checks already force alternation; this
  // restates it independently of add_arc's layout enforcement.
  if (g.is_bipartite()) {
    if (c.length() % 2 != 0) return "odd cycle in bipartite digraph";
    for (int i = 0; i < c.length(); ++i)
      if (g.side_of(c.vertices[i]) == g.side_of(c.vertices[(i + 1) % c.length()]))
        return "sides do not alternate";
  }
  return std::nullopt;
}

std::optional<std::string> check_path(const Digraph& g, const Path& p) {
  if (p.vertices.empty()) return "empty path";
  return check_sequence(g, p.vertices, false);
}

std::string to_text(const Digraph& g, const Cycle& c) { return join(g, c.vertices); }
std::string to_text(const Digraph& g, const Path& p) { return join(g, p.vertices); }

std::vector<Vertex> parse_vertex_sequence(const Digraph& g, std::string_view text) {
  std::vector<Vertex> result;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto id = parse_vertex_name(token);
    if (!id) throw GraphError(ErrorCode::UnknownVertex, token);
    result.push_back(g.index_of(*id));
  }
  return result;
}

}  // namespace evenpan

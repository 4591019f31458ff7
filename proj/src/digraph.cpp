#include "evenpan/digraph.hpp"

#include <charconv>

namespace evenpan {

std::string to_string(VertexId v) {
  const char prefix = v.side == Side::X ? 'x' : v.side == Side::Y ? 'y' : 'v';
  return prefix + std::to_string(v.index);
}

std::optional<VertexId> parse_vertex_name(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  VertexId id;
  switch (name.front()) {
    case 'x': id.side = Side::X; break;
    case 'y': id.side = Side::Y; break;
    case 'v': id.side = Side::General; break;
    default: return std::nullopt;
  }
  const auto digits = name.substr(1);
  // Reject signs and leading zeros so every vertex has exactly one spelling.
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, id.index);
  if (ec != std::errc{} || ptr != end || id.index < 0) return std::nullopt;
  return id;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WithinSideArc: return "WithinSideArc";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SideSizeMismatch: return "SideSizeMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
  }
  return "Unknown";
}

namespace {

std::string format_error(ErrorCode code, const std::string& what, int line) {
  std::string msg(to_string(code));
  if (line > 0) msg += " at line " + std::to_string(line);
  if (!what.empty()) msg += ": " + what;
  return msg;
}

}  // namespace

GraphError::GraphError(ErrorCode code, const std::string& what, int line)
    : std::runtime_error(format_error(code, what, line)), code_(code), line_(line) {}

Digraph::Digraph(int n, bool bipartite) : n_(n), bipartite_(bipartite) {}

Digraph Digraph::general(int n) {
  if (n < 0) throw GraphError(ErrorCode::BadParams, "negative order");
  if (n > kMaxVertices)
    throw GraphError(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxVertices));
  return Digraph(n, false);
}

Digraph Digraph::bipartite(int a) {
  if (a < 1) throw GraphError(ErrorCode::BadParams, "side size must be at least 1");
  if (2 * a > kMaxVertices)
    throw GraphError(ErrorCode::TooLarge, "order " + std::to_string(2 * a) + " exceeds " +
                                              std::to_string(kMaxVertices));
  return Digraph(2 * a, true);
}

VertexSet Digraph::side_set(Side s) const {
  if (!bipartite_) return s == Side::General ? vertices() : 0;
  const int a = side_size();
  switch (s) {
    case Side::X: return first_n(a);
    case Side::Y: return first_n(a) << a;
    case Side::General: return 0;
  }
  return 0;
}

Side Digraph::side_of(Vertex v) const noexcept {
  if (!bipartite_) return Side::General;
  return v < side_size() ? Side::X : Side::Y;
}

Vertex Digraph::index_of(VertexId id) const {
  if (bipartite_) {
    const int a = side_size();
    if (id.side == Side::General || id.index >= a)
      throw GraphError(ErrorCode::UnknownVertex, to_string(id));
    return id.side == Side::X ? id.index : a + id.index;
  }
  if (id.side != Side::General || id.index >= n_)
    throw GraphError(ErrorCode::UnknownVertex, to_string(id));
  return id.index;
}

VertexId Digraph::id_of(Vertex v) const {
  check_vertex(v);
  if (!bipartite_) return {Side::General, v};
  const int a = side_size();
  return v < a ? VertexId{Side::X, v} : VertexId{Side::Y, v - a};
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw GraphError(ErrorCode::UnknownVertex, "index " + std::to_string(v));
}

void Digraph::add_arc(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw GraphError(ErrorCode::Loop, name(tail) + " " + name(head));
  if (bipartite_ && side_of(tail) == side_of(head))
    throw GraphError(ErrorCode::WithinSideArc, name(tail) + " " + name(head));
  if (has_arc(tail, head))
    throw GraphError(ErrorCode::DuplicateArc, name(tail) + " " + name(head));
  out_[tail] |= bit(head);
  in_[head] |= bit(tail);
  ++arcs_;
}

bool Digraph::remove_arc(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  if (!has_arc(tail, head)) return false;
  out_[tail] &= ~bit(head);
  in_[head] &= ~bit(tail);
  --arcs_;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(static_cast<std::size_t>(arcs_));
  for (Vertex u = 0; u < n_; ++u)
    for (VertexSet s = out_[u]; s; s &= s - 1) result.emplace_back(u, lowest(s));
  return result;
}

bool operator==(const Digraph& lhs, const Digraph& rhs) {
  if (lhs.n_ != rhs.n_ || lhs.bipartite_ != rhs.bipartite_ || lhs.arcs_ != rhs.arcs_)
    return false;
  for (Vertex v = 0; v < lhs.n_; ++v)
    if (lhs.out_[v] != rhs.out_[v]) return false;
  return true;
}

std::optional<BipartiteDigraph> BipartiteDigraph::from(const Digraph& g) {
  if (!g.is_bipartite()) return std::nullopt;
  return BipartiteDigraph(g);
}

BipartiteDigraph validate_bipartite(const RawBipartite& raw) {
  if (raw.x_count != raw.y_count)
    throw GraphError(ErrorCode::SideSizeMismatch, "|X| = " + std::to_string(raw.x_count) +
                                                      ", |Y| = " + std::to_string(raw.y_count));
  BipartiteDigraph g(raw.x_count);
  for (std::size_t i = 0; i < raw.arcs.size(); ++i) {
    const int line = i < raw.lines.size() ? raw.lines[i] : 0;
    const auto& [tail_name, head_name] = raw.arcs[i];
    try {
      const auto tail = parse_vertex_name(tail_name);
      const auto head = parse_vertex_name(head_name);
      if (!tail) throw GraphError(ErrorCode::UnknownVertex, tail_name);
      if (!head) throw GraphError(ErrorCode::UnknownVertex, head_name);
      g.add_arc(*tail, *head);
    } catch (const GraphError& e) {
      if (line > 0 && e.line() == 0) {
        // Strip the code prefix so the message is not doubled.
        std::string what = e.what();
        const auto colon = what.find(": ");
        throw GraphError(e.code(), colon == std::string::npos ? "" : what.substr(colon + 2),
                         line);
      }
      throw;
    }
  }
  return g;
}

Degree degree(const Digraph& g, Vertex v) {
  Degree d;
  d.out = count(g.out(v));
  d.in = count(g.in(v));
  d.total = d.out + d.in;
  return d;
}

Degree degree(const Digraph& g, VertexId v) { return degree(g, g.index_of(v)); }

int restricted_degree(const Digraph& g, Vertex v, VertexSet s) {
  return count(g.out(v) & s) + count(g.in(v) & s);
}

int restricted_degree(const Digraph& g, VertexId v, std::span<const VertexId> s) {
  VertexSet mask = 0;
  for (const auto& id : s) mask |= bit(g.index_of(id));
  return restricted_degree(g, g.index_of(v), mask);
}

namespace {

template <typename Neighbours>
std::vector<DominatingPair> pairs_sharing(const Digraph& g, Neighbours neighbours) {
  std::vector<DominatingPair> result;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet nu = neighbours(u);
    if (!nu) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (const VertexSet common = nu & neighbours(v)) result.push_back({u, v, lowest(common)});
    }
  }
  return result;
}

}  // namespace

std::vector<DominatingPair> dominating_pairs(const Digraph& g) {
  return pairs_sharing(g, [&g](Vertex v) { return g.out(v); });
}

std::vector<DominatingPair> common_in_neighbor_pairs(const Digraph& g) {
  return pairs_sharing(g, [&g](Vertex v) { return g.in(v); });
}

VertexSet reachable_from(const Digraph& g, Vertex from, VertexSet within) {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.out(lowest(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

namespace {

VertexSet reaching(const Digraph& g, Vertex to, VertexSet within) {
  VertexSet seen = bit(to);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.in(lowest(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool underlying_connected(const Digraph& g, VertexSet within) {
  if (!within) return true;
  VertexSet seen = bit(lowest(within));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) {
      const Vertex v = lowest(s);
      next |= g.out(v) | g.in(v);
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

}  // namespace

bool is_strong(const Digraph& g) {
  if (g.order() <= 1) return true;
  const VertexSet all = g.vertices();
  return reachable_from(g, 0, all) == all && reaching(g, 0, all) == all;
}

bool underlying_two_connected(const Digraph& g) {
  if (g.order() < 3)
    throw GraphError(ErrorCode::TooSmall, "order " + std::to_string(g.order()) + " < 3");
  const VertexSet all = g.vertices();
  if (!underlying_connected(g, all)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!underlying_connected(g, all & ~bit(v))) return false;
  return true;
}

}  // namespace evenpan

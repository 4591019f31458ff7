#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evenpan {

/// Dense vertex index inside a Digraph, 0 <= v < order().
/// Bipartite layouts place x0..x{a-1} at 0..a-1 and y0..y{a-1} at a..2a-1,
/// so index order coincides with the canonical (side, index) order.
using Vertex = int;

/// Set of vertices as a bitmask over dense indices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }

enum class Side : std::uint8_t { X, Y, General };

/// External vertex name: x<i>, y<i> on bipartite digraphs, v<i> on general ones.
struct VertexId {
  Side side = Side::General;
  int index = 0;

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(VertexId v);
std::optional<VertexId> parse_vertex_name(std::string_view name);

enum class ErrorCode {
  WithinSideArc,
  DuplicateArc,
  Loop,
  UnknownVertex,
  SideSizeMismatch,
  SyntaxError,
  TooSmall,
  TooLarge,
  BadLength,
  BadParams,
  BadConfig,
  InvalidCycle,
  PreconditionUnmet,
};

std::string_view to_string(ErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& what, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  /// 1-based input line for parse errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

/// Loop-free simple digraph stored as out/in adjacency bitmasks.
///
/// The layout is fixed at construction: either a balanced bipartite digraph
/// with side size a (order 2a, arcs only between sides) or a general digraph
/// of order n. add_arc enforces the layout, so a Digraph never holds a loop,
/// a duplicate arc, or a within-side arc.
class Digraph {
 public:
  static Digraph general(int n);
  static Digraph bipartite(int a);

  Digraph() = default;

  bool is_bipartite() const noexcept { return bipartite_; }
  int order() const noexcept { return n_; }
  /// Side size a; only meaningful on bipartite layouts.
  int side_size() const noexcept { return bipartite_ ? n_ / 2 : 0; }

  VertexSet vertices() const noexcept { return first_n(n_); }
  /// X or Y part of a bipartite layout.
  VertexSet side_set(Side s) const;
  Side side_of(Vertex v) const noexcept;

  Vertex index_of(VertexId id) const;
  VertexId id_of(Vertex v) const;
  std::string name(Vertex v) const { return to_string(id_of(v)); }

  void add_arc(Vertex tail, Vertex head);
  void add_arc(VertexId tail, VertexId head) { add_arc(index_of(tail), index_of(head)); }
  /// Removes an arc if present; returns whether it was present.
  bool remove_arc(Vertex tail, Vertex head);

  bool has_arc(Vertex tail, Vertex head) const noexcept { return contains(out_[tail], head); }
  VertexSet out(Vertex v) const noexcept { return out_[v]; }
  VertexSet in(Vertex v) const noexcept { return in_[v]; }
  int arc_count() const noexcept { return arcs_; }

  /// Arcs in canonical order (tail index, then head index).
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  friend bool operator==(const Digraph& lhs, const Digraph& rhs);

 private:
  Digraph(int n, bool bipartite);
  void check_vertex(Vertex v) const;

  int n_ = 0;
  bool bipartite_ = false;
  int arcs_ = 0;
  std::array<VertexSet, kMaxVertices> out_{};
  std::array<VertexSet, kMaxVertices> in_{};
};

/// A Digraph whose layout is known to be balanced bipartite.
class BipartiteDigraph {
 public:
  explicit BipartiteDigraph(int a) : graph_(Digraph::bipartite(a)) {}

  static std::optional<BipartiteDigraph> from(const Digraph& g);

  int side_size() const noexcept { return graph_.side_size(); }
  const Digraph& graph() const noexcept { return graph_; }
  operator const Digraph&() const noexcept { return graph_; }

  void add_arc(Vertex tail, Vertex head) { graph_.add_arc(tail, head); }
  void add_arc(VertexId tail, VertexId head) { graph_.add_arc(tail, head); }
  bool remove_arc(Vertex tail, Vertex head) { return graph_.remove_arc(tail, head); }

  friend bool operator==(const BipartiteDigraph&, const BipartiteDigraph&) = default;

 private:
  explicit BipartiteDigraph(Digraph g) : graph_(std::move(g)) {}
  Digraph graph_;
};

/// Unvalidated bipartite description over vertex names.
struct RawBipartite {
  int x_count = 0;
  int y_count = 0;
  std::vector<std::pair<std::string, std::string>> arcs;
  /// Optional per-arc source line numbers, reported in diagnostics.
  std::vector<int> lines;
};

/// Builds a BipartiteDigraph or throws GraphError naming the first violated
/// invariant (WithinSideArc, DuplicateArc, Loop, UnknownVertex,
/// SideSizeMismatch).
BipartiteDigraph validate_bipartite(const RawBipartite& raw);

struct Degree {
  int out = 0;
  int in = 0;
  int total = 0;

  friend bool operator==(const Degree&, const Degree&) = default;
};

Degree degree(const Digraph& g, Vertex v);
Degree degree(const Digraph& g, VertexId v);
inline int total_degree(const Digraph& g, Vertex v) {
  return count(g.out(v)) + count(g.in(v));
}

/// d(v, S) = d+(v, S) + d-(v, S).
int restricted_degree(const Digraph& g, Vertex v, VertexSet s);
int restricted_degree(const Digraph& g, VertexId v, std::span<const VertexId> s);

/// Unordered pair {u, v} (u < v) with a common out-neighbour (or, for
/// common_in_neighbor_pairs, a common in-neighbour) recorded as witness.
struct DominatingPair {
  Vertex u = 0;
  Vertex v = 0;
  Vertex witness = 0;

  friend bool operator==(const DominatingPair&, const DominatingPair&) = default;
};

/// All dominating pairs in lexicographic (u, v) order; the witness is the
/// smallest common out-neighbour.
std::vector<DominatingPair> dominating_pairs(const Digraph& g);

/// Pairs sharing an in-neighbour, same ordering and witness rule.
std::vector<DominatingPair> common_in_neighbor_pairs(const Digraph& g);

/// Vertices reachable from `from` along arcs, restricted to `within`.
VertexSet reachable_from(const Digraph& g, Vertex from, VertexSet within);

bool is_strong(const Digraph& g);

/// Whether the underlying undirected graph is connected and has no cut
/// vertex. Throws TooSmall when order < 3.
bool underlying_two_connected(const Digraph& g);

}  // namespace evenpan

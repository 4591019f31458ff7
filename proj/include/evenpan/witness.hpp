#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenpan/digraph.hpp"

namespace evenpan {

/// Cycle v_1 v_2 ... v_m v_1 over dense vertex indices of a host digraph.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const noexcept;
  bool contains(Vertex v) const noexcept;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Path v_1 ... v_k; its length is the number of arcs, k - 1.
struct Path {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  VertexSet vertex_set() const noexcept;

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Rotation of the cycle that starts at its smallest vertex. Every witness
/// the engine returns is in this form.
Cycle canonical_rotation(Cycle c);

// Validators return std::nullopt when the witness is sound in `g`, or a
// description of the first defect.
std::optional<std::string> check_cycle(const Digraph& g, const Cycle& c);
std::optional<std::string> check_path(const Digraph& g, const Path& p);
inline bool is_valid_cycle(const Digraph& g, const Cycle& c) { return !check_cycle(g, c); }
inline bool is_valid_path(const Digraph& g, const Path& p) { return !check_path(g, p); }

/// Single-line rendering, e.g. "x1 y1 x2 y3 x3 y0".
std::string to_text(const Digraph& g, const Cycle& c);
std::string to_text(const Digraph& g, const Path& p);

/// Parses a whitespace separated vertex sequence against `g`.
/// Throws GraphError(UnknownVertex) on a bad name.
std::vector<Vertex> parse_vertex_sequence(const Digraph& g, std::string_view text);

}  // namespace evenpan

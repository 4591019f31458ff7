#include "evenpan/cycles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

namespace evenpan {

std::vector<int> CycleSpectrum::lengths() const {
  std::vector<int> result;
  for (const auto& [length, cycle] : achievable) result.push_back(length);
  return result;
}

namespace {

// Bit (L - 1) of a LengthSet stands for cycle length L.
using LengthSet = std::uint64_t;

constexpr LengthSet length_bit(int length) { return LengthSet{1} << (length - 1); }

// Lengths lo..hi inclusive (clamped to 1..64).
constexpr LengthSet length_range(int lo, int hi) {
  lo = std::max(lo, 1);
  hi = std::min(hi, 64);
  if (lo > hi) return 0;
  const LengthSet upto_hi = hi == 64 ? ~LengthSet{0} : (LengthSet{1} << hi) - 1;
  const LengthSet below_lo = (LengthSet{1} << (lo - 1)) - 1;
  return upto_hi & ~below_lo;
}

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

// Depth-first search for cycles of wanted lengths.
//
// Cycles are enumerated by their smallest vertex s, in increasing s, and
// from each s by extending the path with out-neighbours larger than s in
// increasing order. Preorder over this prefix tree visits vertex sequences
// in lexicographic order, so the first cycle found for a length is the
// canonical witness for it. A branch is cut when no still-wanted length
// lies between the shortest possible return to s and the number of
// vertices left.
class CycleSearch {
 public:
  CycleSearch(const Digraph& g, VertexSet allowed, LengthSet wanted,
              std::optional<Vertex> through)
      : g_(g), allowed_(allowed), wanted_(wanted), through_(through) {}

  std::map<int, Cycle> run() {
    for (VertexSet starts = allowed_; starts && wanted_; starts &= starts - 1) {
      const Vertex s = lowest(starts);
      if (through_ && s > *through_) break;
      search_from(s);
    }
    return std::move(found_);
  }

 private:
  void search_from(Vertex s) {
    start_ = s;
    pool_ = allowed_ & ~first_n(s);
    compute_distances_to_start();
    path_.assign(1, s);
    visited_ = bit(s);
    extend(s);
  }

  // dist_[v] = fewest arcs from v back to start_ inside pool_.
  void compute_distances_to_start() {
    dist_.fill(kUnreachable);
    dist_[start_] = 0;
    VertexSet seen = bit(start_);
    VertexSet frontier = seen;
    for (int d = 1; frontier; ++d) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g_.in(lowest(f));
      next &= pool_ & ~seen;
      for (VertexSet f = next; f; f &= f - 1) dist_[lowest(f)] = d;
      seen |= next;
      frontier = next;
    }
  }

  // Returns true once every wanted length has been found.
  bool extend(Vertex v) {
    const int depth = static_cast<int>(path_.size());
    if (depth >= 2 && g_.has_arc(v, start_) && (wanted_ & length_bit(depth)) &&
        (!through_ || contains(visited_, *through_))) {
      found_.emplace(depth, Cycle{path_});
      wanted_ &= ~length_bit(depth);
      if (!wanted_) return true;
    }
    const VertexSet free = pool_ & ~visited_;
    const int spare = count(free) - 1;
    for (VertexSet next = g_.out(v) & free; next; next &= next - 1) {
      const Vertex w = lowest(next);
      if (dist_[w] == kUnreachable) continue;
      // Cycles through w have at least depth + dist(w) and at most
      // depth + 1 + spare vertices.
      if (!(wanted_ & length_range(depth + dist_[w], depth + 1 + spare))) continue;
      path_.push_back(w);
      visited_ |= bit(w);
      const bool done = extend(w);
      visited_ &= ~bit(w);
      path_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Digraph& g_;
  VertexSet allowed_;
  LengthSet wanted_;
  std::optional<Vertex> through_;

  Vertex start_ = 0;
  VertexSet pool_ = 0;
  VertexSet visited_ = 0;
  std::vector<Vertex> path_;
  std::array<int, kMaxVertices> dist_{};
  std::map<int, Cycle> found_;
};

LengthSet to_length_set(const std::vector<int>& lengths, int order) {
  LengthSet wanted = 0;
  for (int m : lengths)
    if (m >= 2 && m <= order) wanted |= length_bit(m);
  return wanted;
}

void check_limits(const Digraph& g, const EngineLimits& limits) {
  if (g.order() > limits.max_order)
    throw GraphError(ErrorCode::TooLarge, "order " + std::to_string(g.order()) +
                                              " exceeds the certified bound " +
                                              std::to_string(limits.max_order));
}

// Position of each cycle vertex, -1 for off-cycle vertices.
std::array<int, kMaxVertices> positions(const Cycle& c) {
  std::array<int, kMaxVertices> pos;
  pos.fill(-1);
  for (int i = 0; i < c.length(); ++i) pos[c.vertices[i]] = i;
  return pos;
}

void check_host_cycle(const Digraph& g, const Cycle& c) {
  if (auto defect = check_cycle(g, c)) throw GraphError(ErrorCode::InvalidCycle, *defect);
}

}  // namespace

std::optional<Cycle> find_cycle_of_length(const Digraph& g, int m) {
  if (m < 2 || m > g.order())
    throw GraphError(ErrorCode::BadLength, "length " + std::to_string(m) + " outside [2, " +
                                               std::to_string(g.order()) + "]");
  if (g.is_bipartite() && m % 2 != 0) return std::nullopt;
  auto found = CycleSearch(g, g.vertices(), length_bit(m), std::nullopt).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.begin()->second);
}

std::map<int, Cycle> find_cycles_of_lengths(const Digraph& g, const std::vector<int>& lengths) {
  LengthSet wanted = to_length_set(lengths, g.order());
  if (g.is_bipartite()) {
    for (int m = 1; m <= g.order(); m += 2) wanted &= ~length_bit(m);
  }
  if (!wanted) return {};
  return CycleSearch(g, g.vertices(), wanted, std::nullopt).run();
}

CycleSpectrum cycle_spectrum(const Digraph& g, const EngineLimits& limits) {
  check_limits(g, limits);
  std::vector<int> lengths;
  const int step = g.is_bipartite() ? 2 : 1;
  for (int m = 2; m <= g.order(); m += step) lengths.push_back(m);
  return CycleSpectrum{g.order(), find_cycles_of_lengths(g, lengths)};
}

std::optional<Cycle> find_hamiltonian_cycle(const Digraph& g) {
  if (g.order() < 2) return std::nullopt;
  if (!is_strong(g)) return std::nullopt;
  return find_cycle_of_length(g, g.order());
}

std::optional<Cycle> longest_non_hamiltonian_cycle(const Digraph& g, const EngineLimits& limits) {
  check_limits(g, limits);
  const int step = g.is_bipartite() ? 2 : 1;
  int m = g.order() - 1;
  if (g.is_bipartite() && m % 2 != 0) --m;
  for (; m >= 2; m -= step)
    if (auto c = find_cycle_of_length(g, m)) return c;
  return std::nullopt;
}

std::vector<Bypass> all_bypasses(const Digraph& g, const Cycle& c) {
  check_host_cycle(g, c);
  if (c.length() >= g.order())
    throw GraphError(ErrorCode::InvalidCycle, "cycle covers every vertex");
  const auto pos = positions(c);
  const VertexSet on_cycle = c.vertex_set();
  const VertexSet off_cycle = g.vertices() & ~on_cycle;

  std::vector<Bypass> result;
  std::vector<Vertex> path;
  // Plain exhaustive DFS: entry on C, interior off C, exit on C.
  auto dfs = [&](auto&& self, Vertex v, VertexSet used) -> void {
    for (VertexSet next = g.out(v); next; next &= next - 1) {
      const Vertex w = lowest(next);
      if (contains(off_cycle, w) && !contains(used, w)) {
        path.push_back(w);
        self(self, w, used | bit(w));
        path.pop_back();
      } else if (contains(on_cycle, w) && path.size() >= 2 && w != path.front()) {
        path.push_back(w);
        const int gap = (pos[w] - pos[path.front()] + c.length()) % c.length();
        result.push_back(Bypass{Path{path}, c, gap});
        path.pop_back();
      }
    }
  };
  for (Vertex u : c.vertices) {
    path.assign(1, u);
    dfs(dfs, u, 0);
  }
  std::sort(result.begin(), result.end(), [](const Bypass& lhs, const Bypass& rhs) {
    return std::tie(lhs.gap, lhs.path.vertices) < std::tie(rhs.gap, rhs.path.vertices);
  });
  return result;
}

std::optional<Bypass> find_bypass(const Digraph& g, const Cycle& c) {
  check_host_cycle(g, c);
  if (c.length() >= g.order())
    throw GraphError(ErrorCode::InvalidCycle, "cycle covers every vertex");
  const auto pos = positions(c);
  const VertexSet off_cycle = g.vertices() & ~c.vertex_set();
  const int len = c.length();

  // Exit vertices reachable from each entry through at least one off-cycle
  // vertex. Reachability suffices: any such walk contains a simple path.
  std::optional<std::tuple<int, Vertex, Vertex>> best;  // (gap, entry, exit)
  for (Vertex u : c.vertices) {
    VertexSet interior = 0;
    for (VertexSet first = g.out(u) & off_cycle; first; first &= first - 1)
      interior |= reachable_from(g, lowest(first), off_cycle);
    VertexSet exits = 0;
    for (VertexSet s = interior; s; s &= s - 1) exits |= g.out(lowest(s));
    exits &= c.vertex_set() & ~bit(u);
    for (VertexSet s = exits; s; s &= s - 1) {
      const Vertex v = lowest(s);
      const int gap = (pos[v] - pos[u] + len) % len;
      const auto candidate = std::make_tuple(gap, u, v);
      if (!best || candidate < *best) best = candidate;
    }
  }
  if (!best) return std::nullopt;
  const auto [gap, entry, exit] = *best;

  // Lexicographically smallest simple path: repeatedly take the smallest
  // next vertex that still admits a completion. An off-cycle vertex w
  // qualifies when the exit is reachable from w avoiding the path so far;
  // the exit itself qualifies once the path has an interior vertex.
  std::vector<Vertex> path{entry};
  VertexSet used = 0;
  Vertex v = entry;
  while (true) {
    Vertex next = -1;
    for (VertexSet s = g.out(v) & off_cycle & ~used; s; s &= s - 1) {
      const Vertex w = lowest(s);
      if (g.in(exit) & reachable_from(g, w, off_cycle & ~used)) {
        next = w;
        break;
      }
    }
    const bool can_close = path.size() >= 2 && g.has_arc(v, exit);
    if (can_close && (next < 0 || exit < next)) {
      path.push_back(exit);
      break;
    }
    path.push_back(next);
    used |= bit(next);
    v = next;
  }
  return Bypass{Path{std::move(path)}, c, gap};
}

std::map<int, Cycle> cycles_through_vertex(const Digraph& g, const Cycle& c, Vertex x) {
  check_host_cycle(g, c);
  if (c.length() % 2 != 0) throw GraphError(ErrorCode::InvalidCycle, "cycle length is odd");
  if (!g.is_bipartite())
    throw GraphError(ErrorCode::PreconditionUnmet, "host digraph is not bipartite");
  if (x < 0 || x >= g.order()) throw GraphError(ErrorCode::UnknownVertex, std::to_string(x));
  if (c.contains(x))
    throw GraphError(ErrorCode::PreconditionUnmet, g.name(x) + " lies on the cycle");
  const int b = c.length() / 2;
  const int d = restricted_degree(g, x, c.vertex_set());
  if (d < b + 1)
    throw GraphError(ErrorCode::PreconditionUnmet,
                     "d(" + g.name(x) + ", V(C)) = " + std::to_string(d) + " < b + 1 = " +
                         std::to_string(b + 1));
  LengthSet wanted = 0;
  for (int m = 2; m <= 2 * b; m += 2) wanted |= length_bit(m);
  return CycleSearch(g, c.vertex_set() | bit(x), wanted, x).run();
}

}  // namespace evenpan

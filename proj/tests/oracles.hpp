#pragma once

// Slow reference implementations over a plain adjacency matrix. They share
// no code with the library beyond reading a Digraph's arc list.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "evenpan/digraph.hpp"

namespace oracle {

struct Matrix {
  int n = 0;
  int a = 0;  // side size, 0 for general layouts
  std::vector<std::vector<char>> adj;

  bool arc(int u, int v) const { return adj[u][v] != 0; }
  int side(int v) const { return v < a ? 0 : 1; }
};

Matrix from(const evenpan::Digraph& g);

using Seq = std::vector<int>;

/// Every simple cycle once, rotated to start at its minimum vertex, in
/// lexicographic order.
std::vector<Seq> all_cycles(const Matrix& m);
/// Lexicographically smallest cycle of each length.
std::map<int, Seq> smallest_cycles(const Matrix& m);
std::set<int> spectrum(const Matrix& m);

bool strong(const Matrix& m);
bool two_connected(const Matrix& m);
int degree(const Matrix& m, int v);

struct Pair {
  int u, v, witness;
  friend bool operator==(const Pair&, const Pair&) = default;
};
std::vector<Pair> dominating_pairs(const Matrix& m);
bool condition_B(const Matrix& m, int k);

/// Isomorphism by trying all n! bijections.
bool isomorphic(const Matrix& lhs, const Matrix& rhs);

struct Bypass {
  int gap;
  Seq path;
  friend auto operator<=>(const Bypass&, const Bypass&) = default;
};
/// All C-bypasses sorted by (gap, path).
std::vector<Bypass> bypasses(const Matrix& m, const Seq& cycle);

/// Lengths of cycles through x using only vertices of `allowed`.
std::set<int> lengths_through(const Matrix& m, int x, const std::vector<int>& allowed);

/// Checks a vertex sequence is a cycle of m.
bool is_cycle(const Matrix& m, const Seq& c);

}  // namespace oracle

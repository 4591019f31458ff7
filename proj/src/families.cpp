#include "evenpan/families.hpp"

#include "evenpan/conditions.hpp"
#include "evenpan/cycles.hpp"

namespace evenpan {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::D8, "d8"},
    {Family::D6, "d6"},
    {Family::D6Prime, "d6prime"},
    {Family::DirectedCycle, "cycle"},
    {Family::Hmm, "hmm"},
    {Family::Hm_m1_1, "hm-m1-1"},
    {Family::H2m, "h2m"},
    {Family::CompleteBipartite, "complete"},
};

std::string_view name_of(Family f) {
  for (const auto& entry : kNames)
    if (entry.family == f) return entry.name;
  return "?";
}

void require(bool ok, const FamilySpec& spec, std::string_view range) {
  if (!ok)
    throw GraphError(ErrorCode::BadParams,
                     std::string(name_of(spec.family)) + " requires " + std::string(range) +
                         ", got " + std::to_string(spec.param));
}

// Ordered-pair completeness of `s`.
void add_complete(Digraph& g, VertexSet s) {
  for (VertexSet i = s; i; i &= i - 1)
    for (VertexSet j = s; j; j &= j - 1)
      if (lowest(i) != lowest(j)) g.add_arc(lowest(i), lowest(j));
}

bool is_complete(const Digraph& g, VertexSet s) {
  for (VertexSet i = s; i; i &= i - 1)
    if ((g.out(lowest(i)) & s) != (s & ~bit(lowest(i)))) return false;
  return true;
}

// Arcs with tail in `from` and head in `to`.
bool has_arcs_between(const Digraph& g, VertexSet from, VertexSet to) {
  for (VertexSet i = from; i; i &= i - 1)
    if (g.out(lowest(i)) & to) return true;
  return false;
}

bool all_arcs_between(const Digraph& g, VertexSet from, VertexSet to) {
  for (VertexSet i = from; i; i &= i - 1)
    if ((g.out(lowest(i)) & to) != (to & ~bit(lowest(i)))) return false;
  return true;
}

// Vertex ranges [lo, lo + len).
constexpr VertexSet range(int lo, int len) { return first_n(len) << lo; }

Digraph make_d8() {
  Digraph g = Digraph::bipartite(4);
  auto x = [](int i) { return VertexId{Side::X, i}; };
  auto y = [](int i) { return VertexId{Side::Y, i}; };
  auto two_cycle = [&](VertexId u, VertexId v) {
    g.add_arc(u, v);
    g.add_arc(v, u);
  };
  g.add_arc(y(0), x(1));
  g.add_arc(y(1), x(0));
  g.add_arc(x(2), y(3));
  g.add_arc(x(3), y(2));
  for (int i = 0; i < 4; ++i) two_cycle(x(i), y(i));
  two_cycle(y(0), x(2));
  two_cycle(y(0), x(3));
  two_cycle(y(1), x(2));
  two_cycle(y(1), x(3));
  return g;
}

Digraph make_d6(bool prime) {
  // x1..x5 -> v0..v4, x -> v5.
  Digraph g = Digraph::general(6);
  auto xi = [](int i) { return i - 1; };
  constexpr Vertex x = 5;
  for (int i = 1; i <= 4; ++i) g.add_arc(xi(i), xi(i + 1));
  for (int i = 1; i <= 3; ++i) g.add_arc(x, xi(i));
  g.add_arc(xi(1), xi(5));
  g.add_arc(xi(2), xi(5));
  g.add_arc(xi(5), xi(1));
  g.add_arc(xi(5), xi(4));
  g.add_arc(xi(3), xi(2));
  g.add_arc(xi(3), x);
  g.add_arc(xi(4), xi(1));
  g.add_arc(xi(4), x);
  if (prime) g.add_arc(xi(2), xi(4));
  return g;
}

}  // namespace

std::string to_string(const FamilySpec& spec) {
  std::string out(name_of(spec.family));
  switch (spec.family) {
    case Family::D8:
    case Family::D6:
    case Family::D6Prime:
      break;
    default:
      out += "(" + std::to_string(spec.param) + ")";
  }
  if (spec.alternate) out += "[alt]";
  return out;
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& entry : kNames)
    if (entry.name == name) return entry.family;
  return std::nullopt;
}

Digraph generate(const FamilySpec& spec) {
  const int m = spec.param;
  switch (spec.family) {
    case Family::D8:
      return make_d8();
    case Family::D6:
      return make_d6(false);
    case Family::D6Prime:
      return make_d6(true);
    case Family::DirectedCycle: {
      require(m >= 1 && 2 * m <= kMaxVertices, spec, "1 <= a <= 32");
      Digraph g = Digraph::bipartite(m);
      for (int i = 0; i < m; ++i) {
        g.add_arc(VertexId{Side::X, i}, VertexId{Side::Y, i});
        g.add_arc(VertexId{Side::Y, i}, VertexId{Side::X, (i + 1) % m});
      }
      return g;
    }
    case Family::CompleteBipartite: {
      require(m >= 1 && 2 * m <= kMaxVertices, spec, "1 <= a <= 32");
      Digraph g = Digraph::bipartite(m);
      const VertexSet xs = g.side_set(Side::X);
      const VertexSet ys = g.side_set(Side::Y);
      for (VertexSet i = xs; i; i &= i - 1)
        for (VertexSet j = ys; j; j &= j - 1) {
          g.add_arc(lowest(i), lowest(j));
          g.add_arc(lowest(j), lowest(i));
        }
      return g;
    }
    case Family::Hmm: {
      require(m >= 2 && 2 * m <= kMaxVertices, spec, "2 <= m <= 32");
      Digraph g = Digraph::general(2 * m);
      add_complete(g, range(0, m));
      add_complete(g, range(m, m));
      for (int i = 0; i < m; ++i) g.add_arc(i, m + i);
      return g;
    }
    case Family::Hm_m1_1: {
      require(m >= 2 && 2 * m <= kMaxVertices, spec, "2 <= m <= 32");
      Digraph g = Digraph::general(2 * m);
      const VertexSet a_side = range(0, m);
      const VertexSet b_side = range(m, m - 1);
      const Vertex a = 2 * m - 1;
      // <B + a> complete covers B -> a and a -> B.
      add_complete(g, b_side | bit(a));
      for (VertexSet i = a_side; i; i &= i - 1)
        for (VertexSet j = b_side; j; j &= j - 1) {
          g.add_arc(lowest(i), lowest(j));
          g.add_arc(lowest(j), lowest(i));
        }
      for (VertexSet i = a_side; i; i &= i - 1) {
        if (spec.alternate) {
          g.add_arc(lowest(i), a);  // N^+(a) = B, A in N^-(a)
        } else {
          g.add_arc(a, lowest(i));  // N^-(a) = B, A in N^+(a)
        }
      }
      return g;
    }
    case Family::H2m: {
      require(m >= 2 && 2 * m <= kMaxVertices, spec, "2 <= m <= 32");
      Digraph g = Digraph::general(2 * m);
      const VertexSet a_side = range(0, m - 1);
      const Vertex x = m - 1;
      const VertexSet b_side = range(m, m - 1);
      const Vertex y = 2 * m - 1;
      add_complete(g, a_side | bit(x));
      add_complete(g, b_side | bit(y));
      for (VertexSet i = a_side; i; i &= i - 1) g.add_arc(y, lowest(i));
      for (VertexSet i = b_side; i; i &= i - 1) g.add_arc(lowest(i), x);
      g.add_arc(x, y);
      if (spec.alternate) g.add_arc(y, x);
      return g;
    }
  }
  throw GraphError(ErrorCode::BadParams, "unknown family");
}

std::string FamilyProperty::describe() const {
  auto list = [this] {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(values[i]);
    }
    return out + "}";
  };
  auto param = [this] { return values.empty() ? std::string("?") : std::to_string(values[0]); };
  switch (kind) {
    case Kind::Strong: return "strong";
    case Kind::SatisfiesB1: return "satisfies_B1";
    case Kind::Hamiltonian: return "hamiltonian";
    case Kind::NotHamiltonian: return "not_hamiltonian";
    case Kind::HasCycleOfLength: return "has_cycle_of_length(" + param() + ")";
    case Kind::SpectrumEquals: return "spectrum=" + list();
    case Kind::DirectedCycle: return "directed_cycle";
    case Kind::HmmStructure: return "in_H(m,m) m=" + param();
    case Kind::Hm_m1_1Structure: return "in_H(m,m-1,1) m=" + param();
    case Kind::H2mStructure: return "in_H(2m) m=" + param();
  }
  return "?";
}

std::vector<FamilyProperty> family_properties(const FamilySpec& spec) {
  using K = FamilyProperty::Kind;
  generate(spec);  // parameter validation
  const int m = spec.param;
  switch (spec.family) {
    case Family::D8:
      return {{K::Strong, {}}, {K::SatisfiesB1, {}}, {K::NotHamiltonian, {}},
              {K::SpectrumEquals, {2, 4, 6}}};
    case Family::D6:
    case Family::D6Prime:
      return {{K::NotHamiltonian, {}}, {K::HasCycleOfLength, {5}}};
    case Family::DirectedCycle:
      return {{K::Strong, {}}, {K::DirectedCycle, {}}, {K::SatisfiesB1, {}},
              {K::SpectrumEquals, {2 * m}}};
    case Family::CompleteBipartite: {
      std::vector<int> all;
      for (int len = 2; len <= 2 * m; len += 2) all.push_back(len);
      return {{K::Strong, {}}, {K::Hamiltonian, {}}, {K::SpectrumEquals, all}};
    }
    case Family::Hmm:
      return {{K::HmmStructure, {m}}, {K::NotHamiltonian, {}}};
    case Family::Hm_m1_1:
      return {{K::Hm_m1_1Structure, {m}, spec.alternate}, {K::NotHamiltonian, {}}};
    case Family::H2m:
      return {{K::H2mStructure, {m}, spec.alternate}, {K::NotHamiltonian, {}}};
  }
  return {};
}

bool replay(const Digraph& g, const FamilyProperty& property) {
  using K = FamilyProperty::Kind;
  const int param = property.values.empty() ? 0 : property.values[0];
  switch (property.kind) {
    case K::Strong:
      return is_strong(g);
    case K::SatisfiesB1: {
      const auto bg = BipartiteDigraph::from(g);
      return bg && check_Bk(*bg, 1).holds;
    }
    case K::Hamiltonian:
      return find_hamiltonian_cycle(g).has_value();
    case K::NotHamiltonian:
      return !find_hamiltonian_cycle(g).has_value();
    case K::HasCycleOfLength:
      return param >= 2 && param <= g.order() && find_cycle_of_length(g, param).has_value();
    case K::SpectrumEquals:
      return cycle_spectrum(g, EngineLimits{kMaxVertices}).lengths() == property.values;
    case K::DirectedCycle:
      return is_directed_cycle(g);
    case K::HmmStructure:
      return in_Hmm(g, param);
    case K::Hm_m1_1Structure:
      return in_Hm_m1_1(g, param);
    case K::H2mStructure:
      return in_H2m(g, param);
  }
  return false;
}

bool in_Hmm(const Digraph& g, int m) {
  if (m < 2 || g.is_bipartite() || g.order() != 2 * m) return false;
  const VertexSet a_side = range(0, m);
  const VertexSet b_side = range(m, m);
  if (!is_complete(g, a_side) || !is_complete(g, b_side)) return false;
  if (has_arcs_between(g, b_side, a_side)) return false;
  for (VertexSet i = a_side; i; i &= i - 1)
    if (!(g.out(lowest(i)) & b_side)) return false;  // d+(x, B) >= 1
  for (VertexSet i = b_side; i; i &= i - 1)
    if (!(g.in(lowest(i)) & a_side)) return false;  // d-(y, A) >= 1
  return true;
}

bool in_Hm_m1_1(const Digraph& g, int m) {
  if (m < 2 || g.is_bipartite() || g.order() != 2 * m) return false;
  const VertexSet a_side = range(0, m);
  const VertexSet b_side = range(m, m - 1);
  const Vertex a = 2 * m - 1;
  if (has_arcs_between(g, a_side, a_side)) return false;
  if (!all_arcs_between(g, a_side, b_side) || !all_arcs_between(g, b_side, a_side)) return false;
  const bool in_from_b = g.in(a) == b_side && (g.out(a) & a_side) == a_side;
  const bool out_to_b = g.out(a) == b_side && (g.in(a) & a_side) == a_side;
  return in_from_b || out_to_b;
}

bool in_H2m(const Digraph& g, int m) {
  if (m < 2 || g.is_bipartite() || g.order() != 2 * m) return false;
  const VertexSet a_side = range(0, m - 1);
  const Vertex x = m - 1;
  const VertexSet b_side = range(m, m - 1);
  const Vertex y = 2 * m - 1;
  const VertexSet left = a_side | bit(x);
  const VertexSet right = b_side | bit(y);
  if (!is_complete(g, left) || !is_complete(g, right)) return false;
  if (has_arcs_between(g, a_side, b_side) || has_arcs_between(g, b_side, a_side)) return false;
  // Crossing arcs are exactly y -> A, B -> x, x -> y and optionally y -> x.
  for (VertexSet i = left; i; i &= i - 1) {
    const Vertex v = lowest(i);
    const VertexSet expected = v == x ? bit(y) : 0;
    if ((g.out(v) & right) != expected) return false;
  }
  for (VertexSet i = b_side; i; i &= i - 1)
    if ((g.out(lowest(i)) & left) != bit(x)) return false;
  const VertexSet y_left = g.out(y) & left;
  return y_left == a_side || y_left == (a_side | bit(x));
}

}  // namespace evenpan

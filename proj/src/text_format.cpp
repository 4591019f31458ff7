#include "evenpan/text_format.hpp"

#include <charconv>
#include <vector>

namespace evenpan {

std::string serialize(const Digraph& g) {
  std::string out = g.is_bipartite() ? "bipartite a=" + std::to_string(g.side_size())
                                     : "general n=" + std::to_string(g.order());
  out += '\n';
  for (const auto& [tail, head] : g.arcs()) {
    out += g.name(tail);
    out += ' ';
    out += g.name(head);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Digraph parse_header(std::string_view line, int line_no) {
  const auto tokens = split_ws(line);
  auto fail = [&] {
    return GraphError(ErrorCode::SyntaxError,
                      "expected 'bipartite a=<int>' or 'general n=<int>'", line_no);
  };
  if (tokens.size() != 2) throw fail();
  const bool bipartite = tokens[0] == "bipartite";
  if (!bipartite && tokens[0] != "general") throw fail();
  const std::string_view key = bipartite ? "a=" : "n=";
  if (!tokens[1].starts_with(key)) throw fail();
  const auto digits = tokens[1].substr(2);
  int value = -1;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end || value < 0) throw fail();
  try {
    return bipartite ? Digraph::bipartite(value) : Digraph::general(value);
  } catch (const GraphError& e) {
    throw GraphError(e.code(), std::string(line), line_no);
  }
}

}  // namespace

Digraph parse(std::string_view text) {
  std::optional<Digraph> g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!g) {
      g = parse_header(line, line_no);
      continue;
    }
    if (tokens.size() != 2)
      throw GraphError(ErrorCode::SyntaxError, "expected '<tail> <head>'", line_no);
    const auto tail = parse_vertex_name(tokens[0]);
    const auto head = parse_vertex_name(tokens[1]);
    try {
      if (!tail) throw GraphError(ErrorCode::UnknownVertex, std::string(tokens[0]));
      if (!head) throw GraphError(ErrorCode::UnknownVertex, std::string(tokens[1]));
      g->add_arc(*tail, *head);
    } catch (const GraphError& e) {
      throw GraphError(e.code(), std::string(tokens[0]) + " " + std::string(tokens[1]),
                       line_no);
    }
  }
  if (!g) throw GraphError(ErrorCode::SyntaxError, "missing header", line_no > 0 ? line_no : 1);
  return *g;
}

}  // namespace evenpan

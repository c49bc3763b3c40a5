#include "adjointlab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "adjointlab/errors.hpp"

namespace adjointlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on blanks; rejects anything that is not a plain non-negative integer.
std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    const auto token = line.substr(i, j - i);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError("malformed token '" + std::string(token) + "'", line_no);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.emplace_back(line_no, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header line 'n m'");

  const auto header = parse_ints(lines[0].second, lines[0].first);
  if (header.size() != 2) throw ParseError("header must be 'n m'", lines[0].first);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("vertex count must be in 1.." + std::to_string(kMaxVertices), lines[0].first);
  }
  if (m > n * (n - 1) / 2) throw ParseError("edge count exceeds n(n-1)/2", lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int where = lines.size() - 1 > static_cast<std::size_t>(m) ? lines[m + 1].first : line_no;
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1),
                     where);
  }

  std::vector<Edge> edges;
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [no, line] = lines[k];
    const auto uv = parse_ints(line, no);
    if (uv.size() != 2) throw ParseError("edge line must be 'u v'", no);
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) throw ParseError("vertex out of range 1.." + std::to_string(n), no);
    if (uv[0] == uv[1]) throw ParseError("loop at vertex " + std::to_string(uv[0]), no);
    const Edge e(static_cast<int>(uv[0] - 1), static_cast<int>(uv[1] - 1));
    const auto key = static_cast<std::size_t>(e.u * n + e.v);
    if (seen[key]) throw ParseError("duplicate edge " + to_string(e), no);
    seen[key] = true;
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(std::string("graph6: character outside alphabet: '") + c + "'");
  }
  const int n = text[0] - 63;
  if (n < 1 || n > kMaxVertices) throw ParseError("graph6: only 1 <= n <= 62 supported");
  const int bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != body + 1) {
    throw ParseError("graph6: expected length " + std::to_string(body + 1) + " for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < static_cast<int>(body) * 6; ++k) {
    if (((text[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  const int bits = n * (n - 1) / 2;
  std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), '\0');
  out[0] = static_cast<char>(n + 63);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (std::size_t c = 1; c < out.size(); ++c) out[c] = static_cast<char>(out[c] + 63);
  return out;
}

GraphFormat parse_format_name(const std::string& name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "el" || name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  throw ParseError("unknown graph format '" + name + "'");
}

Graph parse_graph_text(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      const auto line = trim(text.substr(start, end - start));
      if (!line.empty() && line.front() != '#') {
        if (line.find_first_of(" \t") != std::string_view::npos) format = GraphFormat::edge_list;
        break;
      }
      start = end + 1;
    }
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  // First non-empty line only.
  const auto line = trim(text.substr(0, text.find('\n')));
  return parse_graph6(line);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == GraphFormat::automatic) {
    auto ends_with = [&](std::string_view s) {
      return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".g6")) format = GraphFormat::graph6;
    if (ends_with(".el")) format = GraphFormat::edge_list;
  }
  return parse_graph_text(buf.str(), format);
}

}  // namespace adjointlab

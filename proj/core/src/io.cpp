#include "islide/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "islide/error.hpp"

namespace islide {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error("line " + std::to_string(line_no) + ": expected an integer, got '" +
                std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (!g) {
      if (tokens.size() != 1) parse_error("line " + std::to_string(line_no) + ": expected vertex count");
      int n = parse_int(tokens[0], line_no);
      if (n < 1 || n > kMaxVertices) {
        parse_error("vertex count " + std::to_string(n) + " outside 1..64");
      }
      g.emplace(n);
      continue;
    }
    if (tokens.size() != 2) parse_error("line " + std::to_string(line_no) + ": expected 'u v'");
    int u = parse_int(tokens[0], line_no);
    int v = parse_int(tokens[1], line_no);
    const int n = g->order();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      parse_error("line " + std::to_string(line_no) + ": vertex index out of range");
    }
    if (u == v) parse_error("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    if (g->has_edge(u, v)) {
      parse_error("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) +
                  " " + std::to_string(v));
    }
    g->add_edge(u, v);
  }
  if (!g) parse_error("empty edge list");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.size() > 1 && text.substr(0, 2) == ">>") parse_error("graph6 header not supported");
  if (text.empty()) parse_error("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) parse_error("graph6 character out of range");
  }
  if (text[0] == 126) parse_error("graph6 multi-byte size form not supported (n > 62)");
  const int n = text[0] - 63;
  if (n < 1) parse_error("graph6 graph must have at least one vertex");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() != chars + 1) {
    parse_error("graph6 length " + std::to_string(text.size()) + " does not match n = " +
                std::to_string(n));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < chars * 6; ++k) {
    int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) parse_error("graph6 padding bits are not zero");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error(ErrorKind::Capacity, "graph6 one-byte form needs n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph_text(std::string_view text) {
  auto t = trim(text);
  bool g6 = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= 63 && c <= 126; });
  return g6 ? from_graph6(t) : from_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, std::string_view name) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
  }
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) {
      std::string escaped;
      for (char c : labels[v]) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
      }
      out << " [label=\"" << escaped << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace islide

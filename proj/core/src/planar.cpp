#include "islide/planar.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "islide/error.hpp"
#include "islide/generators.hpp"

namespace islide {

namespace {

[[noreturn]] void bad_rotation(const std::string& what) {
  throw Error(ErrorKind::InvalidRotation, what);
}

int position_in(const std::vector<int>& cyc, int x) {
  auto it = std::find(cyc.begin(), cyc.end(), x);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

// Dart ids: dart u->v is stored at index (u * 64 + v).
int dart(int u, int v) { return u * kMaxVertices + v; }

}  // namespace

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.order.size() != static_cast<std::size_t>(g.order())) {
    bad_rotation("rotation has " + std::to_string(rot.order.size()) + " entries for " +
                 std::to_string(g.order()) + " vertices");
  }
  for (int v = 0; v < g.order(); ++v) {
    VertexSet seen;
    for (int w : rot.order[v]) {
      if (w < 0 || w >= g.order() || !g.has_edge(v, w)) {
        bad_rotation("vertex " + std::to_string(v) + ": " + std::to_string(w) + " is not a neighbour");
      }
      if (seen.contains(w)) {
        bad_rotation("vertex " + std::to_string(v) + ": edge to " + std::to_string(w) + " repeated");
      }
      seen.insert(w);
    }
    if (seen != g.neighbors(v)) {
      bad_rotation("vertex " + std::to_string(v) + ": rotation misses incident edges");
    }
  }
}

std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  std::vector<char> used(kMaxVertices * kMaxVertices, 0);
  std::vector<std::vector<int>> faces;
  for (auto [a, b] : g.edges()) {
    for (auto [u0, v0] : {std::pair{a, b}, std::pair{b, a}}) {
      if (used[dart(u0, v0)]) continue;
      std::vector<int> face;
      int u = u0;
      int v = v0;
      while (!used[dart(u, v)]) {
        used[dart(u, v)] = 1;
        face.push_back(u);
        const auto& cyc = rot.order[v];
        int w = cyc[(position_in(cyc, u) + 1) % cyc.size()];
        u = v;
        v = w;
      }
      if (u != u0 || v != v0) bad_rotation("face tracing did not close");
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

PlanarDual planar_dual_embedding(const Graph& g, const RotationSystem& rot) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "primal graph is not connected");
  auto faces = trace_faces(g, rot);
  const int f = static_cast<int>(faces.size());
  if (g.order() - g.size() + f != 2) {
    throw Error(ErrorKind::NotPlanar, "rotation is not a plane embedding: V - E + F = " +
                                          std::to_string(g.order() - g.size() + f));
  }
  if (f < 2) throw Error(ErrorKind::NonSimpleDual, "embedding has a single face");
  if (f > kMaxVertices) throw Error(ErrorKind::Capacity, "dual would exceed 64 vertices");

  // Face to the left of each dart, in the order darts are traced.
  std::vector<int> face_of(kMaxVertices * kMaxVertices, -1);
  for (int i = 0; i < f; ++i) {
    const auto& cyc = faces[i];
    for (std::size_t p = 0; p < cyc.size(); ++p) {
      face_of[dart(cyc[p], cyc[(p + 1) % cyc.size()])] = i;
    }
  }

  Graph dual(f);
  for (auto [u, v] : g.edges()) {
    int a = face_of[dart(u, v)];
    int b = face_of[dart(v, u)];
    if (a == b) {
      throw Error(ErrorKind::NonSimpleDual,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " borders one face twice");
    }
    if (dual.has_edge(a, b)) {
      throw Error(ErrorKind::NonSimpleDual,
                  "faces " + std::to_string(a) + " and " + std::to_string(b) + " share two edges");
    }
    dual.add_edge(a, b);
  }

  RotationSystem drot;
  drot.order.resize(f);
  for (int i = 0; i < f; ++i) {
    const auto& cyc = faces[i];
    for (std::size_t p = 0; p < cyc.size(); ++p) {
      int u = cyc[p];
      int v = cyc[(p + 1) % cyc.size()];
      drot.order[i].push_back(face_of[dart(v, u)]);
    }
  }
  return {dual, std::move(drot), std::move(faces)};
}

Graph planar_dual(const Graph& g, const RotationSystem& rot) {
  return planar_dual_embedding(g, rot).dual;
}

RotationSystem parse_rotation(std::string_view text, const Graph& g) {
  RotationSystem rot;
  rot.order.resize(g.order());
  std::vector<char> given(g.order(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::Parse, "rotation line " + std::to_string(line_no) +
                                        ": bad integer '" + std::string(s) + "'");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::Parse, "rotation line " + std::to_string(line_no) + ": missing ':'");
    }
    std::string head = line.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    int v = parse_int(head);
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorKind::Parse, "rotation line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (given[v]) {
      throw Error(ErrorKind::Parse, "rotation for vertex " + std::to_string(v) + " given twice");
    }
    given[v] = 1;
    std::istringstream edges(line.substr(colon + 1));
    std::string token;
    while (edges >> token) {
      auto dash = token.find('-');
      if (dash == std::string::npos) {
        throw Error(ErrorKind::Parse, "rotation line " + std::to_string(line_no) +
                                          ": edge token '" + token + "' lacks '-'");
      }
      int a = parse_int(std::string_view(token).substr(0, dash));
      int b = parse_int(std::string_view(token).substr(dash + 1));
      if (a >= b) {
        throw Error(ErrorKind::Parse, "rotation line " + std::to_string(line_no) + ": edge '" +
                                          token + "' must list the smaller endpoint first");
      }
      if (a != v && b != v) {
        bad_rotation("rotation line " + std::to_string(line_no) + ": edge " + token +
                     " is not incident to " + std::to_string(v));
      }
      rot.order[v].push_back(a == v ? b : a);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!given[v] && g.degree(v) > 0) bad_rotation("no rotation given for vertex " + std::to_string(v));
  }
  validate_rotation(g, rot);
  return rot;
}

std::string format_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << v << ':';
    for (int w : rot.order[v]) {
      int a = std::min<int>(static_cast<int>(v), w);
      int b = std::max<int>(static_cast<int>(v), w);
      out << ' ' << a << '-' << b;
    }
    out << '\n';
  }
  return out.str();
}

RotationSystem k4_rotation() {
  // Vertex 3 at the centre of triangle 0,1,2 (counterclockwise).
  return {{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}};
}

RotationSystem cube_rotation() {
  // Outer square 0,1,3,2 and inner square 4,5,7,6 drawn inside it.
  return {{{1, 4, 2}, {3, 5, 0}, {0, 6, 3}, {2, 7, 1},
           {6, 0, 5}, {4, 1, 7}, {7, 2, 4}, {5, 3, 6}}};
}

RotationSystem hexagonal_prism_rotation() {
  RotationSystem rot;
  rot.order.resize(12);
  for (int i = 0; i < 6; ++i) {
    int next = (i + 1) % 6;
    int prev = (i + 5) % 6;
    rot.order[i] = {next, 6 + i, prev};
    rot.order[6 + i] = {6 + prev, i, 6 + next};
  }
  return rot;
}

}  // namespace islide

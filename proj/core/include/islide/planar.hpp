#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

/// Combinatorial embedding: order[v] lists the neighbours of v in cyclic order.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

/// Throws Error(InvalidRotation) unless every rotation is a permutation of
/// the vertex's neighbourhood in `g`.
void validate_rotation(const Graph& g, const RotationSystem& rot);

/// Faces as cyclic vertex sequences. The face after dart u->v continues with
/// v->w, where w follows u in the rotation at v.
std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& rot);

struct PlanarDual {
  Graph dual;
  RotationSystem rotation;                // embedding of the dual
  std::vector<std::vector<int>> faces;    // primal face i = dual vertex i
};

/// Throws InvalidRotation, NotConnected, NotPlanar (Euler's formula fails for
/// the traced faces) or NonSimpleDual (a loop or parallel edge would appear).
PlanarDual planar_dual_embedding(const Graph& g, const RotationSystem& rot);
Graph planar_dual(const Graph& g, const RotationSystem& rot);

/// Rotation file: one line per vertex, "v: a-b c-d ...", each edge written as
/// its endpoints with the smaller first. '#' starts a comment line.
RotationSystem parse_rotation(std::string_view text, const Graph& g);
std::string format_rotation(const RotationSystem& rot);

/// Standard embeddings of a few fixtures.
RotationSystem k4_rotation();
RotationSystem cube_rotation();
RotationSystem hexagonal_prism_rotation();

}  // namespace islide

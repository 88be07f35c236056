#pragma once

#include "eulerchi/core.hpp"

#include <optional>
#include <vector>

namespace eulerchi::orient {

// A triangle with a chosen cyclic vertex order. Stored as the sorted triangle
// plus a parity bit: flipped=false means the order (t0,t1,t2) with t0<t1<t2,
// flipped=true means the reverse cycle.
struct OrientedTriangle {
  Tri tri;
  bool flipped = false;

  // The induced order as a concrete vertex sequence.
  std::array<Vertex, 3> order() const {
    return flipped ? std::array<Vertex, 3>{tri[2], tri[1], tri[0]} : tri;
  }
};

// An edge with a sign: +1 if the triangle's induced traversal runs first->second
// of the canonical (sorted) storage, -1 if it runs second->first.
struct SignedEdge {
  Edge edge;
  int sign = 1;  // +1 or -1
};

// Boundary of an oriented triangle: the three edges with induced signs
// (+[a1,a2], -[a0,a2], +[a0,a1] for induced order a0,a1,a2).
std::array<SignedEdge, 3> induced_boundary(const OrientedTriangle& t);

// Two orientations of distinct edge-adjacent triangles are compatible when
// the shared edge receives opposite signs from the two induced boundaries.
// Throws Error("NotSharedFace") when `shared` is not a common face of two
// distinct triangles.
bool compatible(const OrientedTriangle& a, const OrientedTriangle& b,
                const Edge& shared);

struct OrientabilityResult {
  bool orientable = false;
  // When orientable: one consistent orientation per triangle.
  std::vector<OrientedTriangle> orientation;
  // When not: two chains of oriented triangles, each internally compatible
  // step by step, starting at the same triangle with the same orientation and
  // ending at the same triangle with opposite orientations.
  std::vector<OrientedTriangle> chain_a;
  std::vector<OrientedTriangle> chain_b;
};

// Decides orientability by propagating orientations across shared edges.
// Requires every edge on at most 2 triangles; throws
// Error("NonPseudomanifold") otherwise. Deterministic: BFS from the
// lowest-id triangle of each component, neighbors visited in ascending
// shared-edge order.
OrientabilityResult check_orientable(const Complex2& c);

}  // namespace eulerchi::orient

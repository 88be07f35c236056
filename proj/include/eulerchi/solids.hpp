#pragma once

#include "eulerchi/core.hpp"
#include "eulerchi/planar.hpp"

#include <string>
#include <vector>

namespace eulerchi::solids {

// A convex polyhedron given by its vertices and polygonal faces (each face a
// cyclic vertex sequence, consistently oriented outward).
struct ConvexPolyhedron {
  std::map<Vertex, Vec3> coords;
  std::vector<std::vector<Vertex>> faces;

  CountVector counts() const;               // n0, n1 (distinct edges), n2 (faces)
  long long euler_characteristic() const;   // n0 - n1 + n2
};

// Checks: faces at least triangles, all vertices used, every edge on exactly
// two faces with opposite traversal, faces planar and simple (no repeated
// vertices), vertex coordinates present.
ValidationReport validate_polyhedron(const ConvexPolyhedron& p);

struct AngleSum {
  double total_right_angles = 0.0;  // sum of all face angles, in right angles
  double expected = 0.0;            // 4 * (n0 - 2)
  double defect = 0.0;              // |total - expected|
};

// Sum of interior face angles over all corners, measured in right angles,
// against the closed-form count. Throws Error("DegenerateAngle") if a face
// corner has a zero-length side.
AngleSum descartes_angle_sum(const ConvexPolyhedron& p);

// Planar projection through face `face_index`: viewpoint just outside that
// face, every other face drawn inside its outline. Output is a polygonal-mode
// planar drawing (faces kept as polygons, no identifications). Retries with a
// farther viewpoint on overlap; throws Error("ProjectionOverlap") after 10
// doublings.
planar::PlanarPolygon schlegel(const ConvexPolyhedron& p, int face_index);

// Triangulate every interior face of a polygonal planar drawing by fanning
// from the face's lowest-id vertex, falling back to ear clipping when the fan
// would degenerate. Keeps n0 and the alternating sum; already-triangulated
// input is returned unchanged. Throws Error("NonSimpleFace") on faces that
// cannot be ear-clipped.
planar::PlanarPolygon triangulate_faces(const planar::PlanarPolygon& k);

// Built-in solids: "tetrahedron", "cube", "octahedron". Throws
// Error("UnknownSurface") otherwise.
ConvexPolyhedron make_solid(const std::string& name);

// Random convex polyhedron: convex hull of `n` points sampled on a sphere and
// radially perturbed, seeded deterministically.
ConvexPolyhedron random_convex(int n, unsigned seed);

}  // namespace eulerchi::solids

#pragma once

#include "eulerchi/core.hpp"
#include "eulerchi/planar.hpp"
#include "eulerchi/solids.hpp"

#include <string>
#include <variant>
#include <vector>

namespace eulerchi::sc2 {

// Plain-text exchange format. Sections, each introduced by a header line:
//   # vertices    lines: id [x y [z]]
//   # triangles   lines: v1 v2 v3
//   # identify    lines: e a1 b1 a2 b2 [rev]   (boundary edge pairing)
//                        v a1 a2                (bare vertex identification)
//   # faces       lines: cyclic vertex lists (polyhedra / polygonal drawings)
// '#'-introduced section headers only; blank lines ignored.
struct Document {
  enum class Kind { Complex, Planar, Polyhedron };

  struct VertexRow {
    Vertex id = 0;
    int dim = 0;  // 0 = bare id, 2 or 3 = coordinates present
    Vec3 xyz{0.0, 0.0, 0.0};
  };

  Kind kind = Kind::Complex;
  std::vector<VertexRow> vertices;   // document order
  std::vector<Tri> triangles;        // document order (defines triangle ids)
  planar::IdentificationScheme scheme;
  std::vector<std::vector<Vertex>> faces;
};

// Kind inference: a `# faces` section with 3D coordinates → Polyhedron;
// 2D coordinates → Planar (a `# faces` section then means a polygonal,
// not-yet-triangulated drawing); otherwise → Complex.
// Throws Error("SyntaxError", "line N: ...") on malformed text and
// Error("SemanticError", ...) on well-formed text that violates the format's
// rules (duplicate ids, unknown vertex references, identify on non-boundary
// edges is reported by the planar checks instead).
Document parse(const std::string& text);

std::string print(const Document& d);

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double x);

Document from_complex(const Complex2& c);
Document from_planar(const planar::PlanarPolygon& k);
Document from_polyhedron(const solids::ConvexPolyhedron& p);

Complex2 to_complex(const Document& d);
// Requires 2D coordinates; faces section is kept as polygonal faces.
planar::PlanarPolygon to_planar(const Document& d);
solids::ConvexPolyhedron to_polyhedron(const Document& d);

// Read and parse a file; IO failures surface as Error("SyntaxError", ...)
// naming the path.
Document load_file(const std::string& path);
void save_file(const std::string& path, const Document& d);

}  // namespace eulerchi::sc2

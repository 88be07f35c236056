#pragma once

#include "eulerchi/core.hpp"

#include <optional>
#include <vector>

namespace eulerchi::planar {

// One boundary-edge pairing: edge (a1,b1) is glued to edge (a2,b2).
// Endpoint correspondence is a1<->a2, b1<->b2; `reversed` swaps it to
// a1<->b2, b1<->a2 (the flag mirrors the file syntax so documents round-trip).
struct EdgePairing {
  Vertex a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  bool reversed = false;

  Edge first() const { return make_edge(a1, b1); }
  Edge second() const { return make_edge(a2, b2); }
  // endpoint correspondence as two generator pairs
  std::pair<Vertex, Vertex> gen1() const { return {a1, reversed ? b2 : a2}; }
  std::pair<Vertex, Vertex> gen2() const { return {b1, reversed ? a2 : b2}; }
};

struct IdentificationScheme {
  std::vector<EdgePairing> pairs;
  // Bare vertex identifications for singular points (pinch vertices); not
  // induced by any edge pairing.
  std::vector<std::pair<Vertex, Vertex>> vertex_pairs;

  bool empty() const { return pairs.empty() && vertex_pairs.empty(); }
};

// A triangulated disk in the plane plus an identification scheme on its
// boundary. `faces` holds polygonal interior faces for drawings that are not
// yet triangulated (projection output); after triangulation it is empty and
// `complex.triangles` carries the faces.
struct PlanarPolygon {
  Complex2 complex;
  std::vector<std::vector<Vertex>> faces;  // cyclic; empty once triangulated
  IdentificationScheme scheme;
  // Triangles in document/emission order; index+1 is the triangle's id for
  // explicit removal orders. Defaults to sorted order when never set.
  std::vector<Tri> tri_order;

  bool triangulated() const { return faces.empty(); }
  std::vector<Tri> ids_or_sorted() const;
};

// Disk checks: connected, exactly one boundary cycle, chi = 1, straight-line
// embedding non-crossing, every interior face a triangle (or `faces` forming
// a disk subdivision in polygonal mode).
ValidationReport validate_polygon(const PlanarPolygon& k);

// Admissibility of the identification scheme, reported as diagnostics:
// pairs reference boundary edges, each boundary edge in at most one pair,
// and the quotient has no loop edges, no duplicate simplices, no edge in
// more than 2 triangles, and no undeclared edge merges.
ValidationReport validate_scheme(const PlanarPolygon& k);

// Union-find over the scheme's vertex identifications; maps every vertex of
// the polygon to its class representative (smallest id in the class).
std::map<Vertex, Vertex> vertex_classes(const PlanarPolygon& k);

// Quotient complex under the scheme. Throws Error("InadmissibleScheme", ...)
// naming the first forbidden pattern found.
Complex2 build_quotient(const PlanarPolygon& k);

// n0 - n1 of the quotient of the boundary cycle alone (the boundary's Euler
// characteristic after identifications). Throws Error("InadmissibleScheme").
long long boundary_chi(const PlanarPolygon& k);

// The polygon's boundary cycle as a vertex sequence (deterministic: starts at
// the smallest boundary vertex, walks toward its smaller neighbor).
std::vector<Vertex> boundary_cycle(const PlanarPolygon& k);

}  // namespace eulerchi::planar

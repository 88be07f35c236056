#pragma once

#include "eulerchi/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eulerchi::refine {

// A point on a triangle: either one of its vertices or an interior point of
// one of its edges at parameter t in (0,1) from the edge's smaller endpoint.
struct Locus {
  enum class Kind { AtVertex, OnEdge } kind = Kind::AtVertex;
  Vertex vertex = 0;  // AtVertex
  Edge edge{0, 0};    // OnEdge
  double t = 0.0;     // OnEdge: position from edge.first toward edge.second

  static Locus at_vertex(Vertex v) { return {Kind::AtVertex, v, {0, 0}, 0.0}; }
  static Locus on_edge(Edge e, double t) { return {Kind::OnEdge, 0, e, t}; }
};

// One transversal crossing of a curve through one triangle: where it enters
// and where it leaves.
struct CurveEvent {
  Tri tri;
  Locus entry;
  Locus exit;
};

struct CurveTrace {
  std::vector<CurveEvent> events;
  bool closed = false;  // closed loop vs. open arc ending on the complex
};

struct SubdivisionResult {
  Complex2 complex;
  CountVector delta;  // counts after minus counts before
  // Vertices created along the curve, in trace order (one per minted point).
  std::vector<Vertex> curve_vertices;
};

// Split a single triangle of `c` along the straight segment between two loci
// on it. Handles: two points interior to distinct edges (chord), a vertex to
// the interior of the opposite edge, and rejects degenerate cuts (parameter 0
// or 1, vertex to an incident edge, vertex to vertex) with
// Error("DegenerateCut"). Triangles sharing a split edge are subdivided too,
// keeping the complex face-to-face. Requires 2D or 3D coordinates for the
// minted points when `c` carries coordinates.
SubdivisionResult split_triangle(const Complex2& c, const Tri& t,
                                 const Locus& p, const Locus& q);

// Subdivide along a full curve trace so that afterwards the curve is a
// subcomplex (every arc an edge, every crossing point a vertex). Each event
// must be transversal for its triangle; a trace visiting a triangle twice is
// rejected with Error("NonTransversalTrace"). Throws Error("DegenerateCut")
// on events whose loci coincide or touch illegally.
SubdivisionResult subdivide_along_curve(const Complex2& c,
                                        const CurveTrace& trace);

// The per-event count deltas of the subdivision, for auditing: deltas[i] is
// the count change attributed to processing event i.
struct SubdivisionAudit {
  SubdivisionResult result;
  std::vector<CountVector> per_event;
};
SubdivisionAudit subdivide_with_audit(const Complex2& c,
                                      const CurveTrace& trace);

struct CutResult {
  Complex2 complex;
  // For every vertex that was duplicated: the original vertex and the new
  // copies minted for it (original id stays for one side).
  std::map<Vertex, std::vector<Vertex>> copies;
};

// Cut the complex open along a set of edges already present as a subcomplex.
// Every cut edge must be interior (on exactly 2 triangles); throws
// Error("EdgeOnBoundary") otherwise. Vertices of the cut set are duplicated
// once per connected component of their triangle fan minus the cut edges.
CutResult cut_along(const Complex2& c, const std::vector<Edge>& gamma);

// Undo a cut: identify each copy back with its original. Returns the glued
// complex (equal to the pre-cut complex up to the original vertex ids).
Complex2 glue(const Complex2& c,
              const std::map<Vertex, std::vector<Vertex>>& copies);

}  // namespace eulerchi::refine

#pragma once
// 2-dimensional abstract simplicial complexes: representation, validation,
// counting, Euler characteristic, boundary extraction, genus.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerchi {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;    // always stored with first < second
using Tri = std::array<Vertex, 3>;         // always stored sorted ascending

Edge make_edge(Vertex a, Vertex b);
Tri make_tri(Vertex a, Vertex b, Vertex c);

// Library error with a stable machine-readable kind ("NotClosedSurface", ...).
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string kind_, const std::string& message)
      : std::runtime_error(kind_ + ": " + message), kind(std::move(kind_)) {}
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

// Abstract 2-complex. Simplices are canonical sorted id tuples; geometry is an
// optional side table (embed_dim 0 = abstract, 2 or 3 otherwise). Ordered sets
// give ascending-id iteration everywhere, which keeps all output deterministic.
struct Complex2 {
  std::set<Vertex> vertices;
  std::set<Edge> edges;
  std::set<Tri> triangles;
  std::map<Vertex, Vec3> coords;
  int embed_dim = 0;

  void add_vertex(Vertex v) { vertices.insert(v); }
  void add_edge(Vertex a, Vertex b);           // inserts endpoints too
  void add_triangle(Vertex a, Vertex b, Vertex c);  // inserts faces too
  bool has_edge(Vertex a, Vertex b) const { return edges.count(make_edge(a, b)) > 0; }
  bool has_triangle(const Tri& t) const { return triangles.count(t) > 0; }
};

struct CountVector {
  long long n0 = 0, n1 = 0, n2 = 0;
  bool operator==(const CountVector&) const = default;
};

struct Defect {
  std::string kind;     // "missing-face", "duplicate-simplex", "degenerate-simplex", ...
  std::string detail;
};

struct ValidationReport {
  std::vector<Defect> defects;
  bool connected = true;  // informational: the paper never requires connectivity
  bool valid() const { return defects.empty(); }
  std::string summary() const;
};

// Checks closure (every face present), degeneracy, and — when an embedding is
// present — that straight-line realizations meet only in common faces.
ValidationReport validate(const Complex2& c);

CountVector counts(const Complex2& c);
long long euler_characteristic(const Complex2& c);

// Partitions boundary edges (triangle-incidence exactly 1) into maximal simple
// cycles, each reported starting at its smallest vertex, walking toward the
// smaller neighbor; cycles ordered by smallest vertex. Throws
// Error("NonManifoldBoundary") naming the vertex where >2 boundary edges meet.
std::vector<std::vector<Vertex>> boundary_cycles(const Complex2& c);

// Genus of a closed connected surface: (2−χ)/2 when orientable, 2−χ otherwise.
// Throws Error("NotClosedSurface") / Error("OddDefect").
long long compute_genus(const Complex2& c, bool orientable);

// --- incidence helpers shared by the other modules ---

// edge -> sorted list of incident triangles
std::map<Edge, std::vector<Tri>> edge_triangle_incidence(const Complex2& c);
// true iff the triangle-adjacency graph (shared edges) is connected and the
// complex has no stray vertices/edges outside the triangulated part.
bool triangle_graph_connected(const Complex2& c);
// connectivity of the 1-skeleton (vertices + edges)
bool skeleton_connected(const Complex2& c);

std::string tri_str(const Tri& t);
std::string edge_str(const Edge& e);

}  // namespace eulerchi

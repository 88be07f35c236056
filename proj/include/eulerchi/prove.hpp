#pragma once

#include "eulerchi/core.hpp"
#include "eulerchi/planar.hpp"
#include "eulerchi/reduce.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eulerchi::prove {

// How interior vertices are ranked into a strict total order.
enum class LevelMode { Euclidean, Combinatorial };

std::string mode_name(LevelMode m);
std::optional<LevelMode> mode_from_name(const std::string& s);

// rank 0: the three seed vertices; 1..n: interior vertices, each its own
// level; n+1: every original boundary vertex.
struct LevelAssignment {
  std::map<Vertex, int> rank;
  int n = 0;  // number of ranked interior vertices
  Tri seed{0, 0, 0};
  LevelMode mode = LevelMode::Combinatorial;
  double epsilon = 0.0;  // euclidean: tie-break step actually applied
};

// Lexicographically smallest triangle with no boundary vertex. Throws
// Error("SeedOnBoundary") when the polygon has none.
Tri default_seed(const planar::PlanarPolygon& k);

// Euclidean mode ranks interior vertices by distance from the seed centroid,
// breaking exact ties by adding k*epsilon to the k-th tied vertex in id
// order, epsilon = 2^-30 times the smallest nonzero distance gap.
// Combinatorial mode ranks by (edge-graph distance from the seed's vertices,
// vertex id). Throws Error("SeedOnBoundary") if the seed touches the
// boundary.
LevelAssignment assign_levels(const planar::PlanarPolygon& k, const Tri& seed,
                              LevelMode mode);

// The refined polygon in which every level curve exists as a subcomplex.
struct Subdivision {
  planar::PlanarPolygon polygon;  // carries the input's identification scheme
  std::map<Vertex, int> level;    // integer level of every vertex
  Tri seed{0, 0, 0};
  int n = 0;
  double epsilon = 0.0;
};

// Insert a vertex on every edge at each integer level strictly between its
// endpoint ranks and join the crossing points inside each triangle, so that
// every edge of the result spans at most one level. Preserves the Euler
// characteristic.
Subdivision build_level_subdivision(const planar::PlanarPolygon& k,
                                    const LevelAssignment& levels);

// curves[i] = the edges of level curve B_i (both endpoints at level i),
// for i in 0..n. B_0 is the seed's boundary; B_{n+1} (the polygon boundary)
// is not stored.
struct LevelCurves {
  std::vector<std::vector<Edge>> curves;
};

LevelCurves level_curves(const Subdivision& s);

struct CurveDefect {
  int level = 0;
  std::string kind;  // "multiple-point" | "disconnected"
};

// Each B_i must be a single simple cycle: every curve vertex on exactly two
// curve edges and the curve connected. Returns the first defect found.
std::optional<CurveDefect> verify_level_curves(const Subdivision& s,
                                               const LevelCurves& curves);

struct ScheduledStep {
  Tri tri{0, 0, 0};
  reduce::OpKind op = reduce::OpKind::I;
};

// The removal order for the strip between B_i and B_{i+1}, given the current
// hole state (whose hole boundary must be B_i plus nothing of the strip).
// First triangle by operation I, the rest by I/II, final two by II. Throws
// Error("StripHasInteriorVertex") if a vertex of the strip lies strictly
// between the curves, Error("ProofFailure") if no legal I/II step exists.
std::vector<ScheduledStep> strip_schedule(const Subdivision& s,
                                          const reduce::HoleState& state,
                                          int i);

struct TheoremCertificate {
  reduce::Trace trace;  // kind = Proof, header fields filled
  long long chi_K = 0;   // Euler characteristic of the identified quotient
  long long chi_K0 = 0;  // n0 - n1 of the identified boundary
  Subdivision subdivision;
};

// The constructive proof: subdivide along level curves, verify them, remove
// the seed triangle, consume strips 0..n with operations I/II, check the
// terminal state is the bare polygon boundary, and independently recount
// chi_K == chi_K0 + 1 on the quotient. Throws Error("ProofFailure") wrapping
// the first defect; never falls back silently.
TheoremCertificate prove_theorem(const planar::PlanarPolygon& k,
                                 LevelMode mode);

// Re-run a proof trace: rebuild the subdivision from the header, re-apply
// every step verifying op kinds and deltas, and re-check the chi assertion.
reduce::ReplayReport replay_certificate(const reduce::Trace& t,
                                        const planar::PlanarPolygon& k);

// Reduction strategy that delegates to the elongation machinery: subdivides
// the polygon along level curves and consumes the strips outside-in, ending
// at the seed triangle.
class PyramidStrategy final : public reduce::Strategy {
 public:
  explicit PyramidStrategy(LevelMode mode);
  ~PyramidStrategy() override;
  std::string name() const override { return "pyramid"; }
  planar::PlanarPolygon prepare(const planar::PlanarPolygon& k) override;
  void stamp(reduce::Trace& t) const override;
  std::optional<Tri> next(const reduce::HoleState& s) override;
  std::string why_stopped() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace eulerchi::prove

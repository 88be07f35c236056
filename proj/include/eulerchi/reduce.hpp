#pragma once

#include "eulerchi/core.hpp"
#include "eulerchi/planar.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eulerchi::reduce {

// The three hole-extension operations. Each preserves n0 - n1 + n2:
//   I   removes a triangle and 1 hole edge            delta (0,-1,-1)
//   II  removes a triangle, 2 hole edges, 1 vertex    delta (-1,-2,-1)
//   III removes a triangle, 3 hole edges, 2 vertices  delta (-2,-3,-1)
enum class OpKind { I, II, III };

const char* op_name(OpKind k);
std::optional<OpKind> op_from_name(const std::string& s);
CountVector op_delta(OpKind k);

// Live complex plus the current hole boundary. The hole is kept as an
// explicit edge set rather than recomputed from boundary cycles: while the
// hole is eating the outermost strip it shares vertices with the original
// polygon boundary, where a cycle walk would see a non-manifold vertex.
// Original-boundary edges never become hole edges; once their last triangle
// is removed they stay as bare edges of the live complex.
struct HoleState {
  Complex2 live;
  std::set<Edge> hole;      // current hole-boundary edges
  std::set<Edge> original;  // the polygon's original boundary edges
  long long removed_triangles = 0;

  // incidence indexes kept in sync by apply_removal
  std::map<Edge, std::vector<Tri>> tris_of_edge;
  std::map<Vertex, std::set<Edge>> edges_at;
  std::map<Vertex, std::set<Tri>> tris_at;

  // Initial state for a reduction: hole = the polygon's entire boundary.
  static HoleState from_polygon(const planar::PlanarPolygon& k);
  // Initial state with an empty hole (the caller seeds it), e.g. for a proof
  // run where the hole starts at an interior triangle.
  static HoleState fresh(const Complex2& c,
                         const std::set<Edge>& original_boundary);

  // The hole boundary as closed vertex cycles. Original-boundary edges with
  // no remaining triangle close the curve where the hole has reached the
  // polygon's rim, so the result is a union of simple cycles at every legal
  // state.
  std::vector<std::vector<Vertex>> hole_cycles() const;

  long long live_triangle_count() const {
    return static_cast<long long>(live.triangles.size());
  }
};

// Outcome of classifying one triangle against the current hole.
struct RemovalCheck {
  enum class Verdict { LegalI, LegalII, LegalIII, NotAdjacentToHole, Illegal };
  Verdict verdict = Verdict::NotAdjacentToHole;
  OpKind op = OpKind::I;             // meaningful for the Legal* verdicts
  CountVector delta;                 // legal: op delta; illegal: would-be delta
  std::string reason;                // illegal: what forbids the removal
  std::vector<Vertex> removed_vertices;  // legal: vertices the op deletes
  std::vector<Edge> removed_edges;       // legal: edges the op deletes
};

// Classify the removal of t from the hole's point of view:
//   I   exactly one edge of t on the hole, opposite vertex not on the hole
//   II  exactly two edges on the hole, their shared vertex on no other live
//       simplex
//   III all three edges on the hole, exactly two vertices on no other live
//       simplex
// Anything else is NotAdjacentToHole (no edge on the hole) or Illegal with a
// description of the forbidden pattern and the delta the removal would have
// caused.
RemovalCheck classify_removal(const HoleState& s, const Tri& t);

struct RemovalStep {
  OpKind op = OpKind::I;
  Tri tri{0, 0, 0};
  CountVector delta;
};

// Apply the classified removal, updating live complex, hole, and indexes.
// Throws Error("NotAdjacentToHole") or Error("IllegalRemoval", reason); op
// III additionally requires allow_op3.
RemovalStep apply_removal(HoleState& s, const Tri& t, bool allow_op3);

// A replayable removal log. Plain reductions have no header; pyramid-strategy
// reductions record the seed triangle and ranking mode (replay re-runs the
// same subdivision); proof traces additionally record the chi assertion.
struct Trace {
  enum class Kind { Plain, Pyramid, Proof };
  Kind kind = Kind::Plain;
  long long chi_K = 0;   // Proof: Euler characteristic of the quotient
  long long chi_K0 = 0;  // Proof: n0 - n1 of the identified boundary
  std::string mode;      // Proof/Pyramid: "euclidean" | "combinatorial"
  Tri seed{0, 0, 0};     // Proof/Pyramid
  double epsilon = 0.0;  // euclidean tie-break perturbation actually used
  std::vector<RemovalStep> steps;
};

std::string print_trace(const Trace& t);
// Throws Error("SyntaxError", ...) with a line number on malformed input.
Trace parse_trace(const std::string& text);

// Pluggable removal orders. prepare() lets a strategy transform the input
// polygon before the run (the pyramid strategy subdivides it); stamp() lets
// it add header fields to the resulting trace.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual planar::PlanarPolygon prepare(const planar::PlanarPolygon& k) {
    return k;
  }
  virtual void stamp(Trace&) const {}
  // Next triangle to remove, or nullopt when the strategy has nothing left
  // to propose. `why_stopped` is the failure reason when stopping early.
  virtual std::optional<Tri> next(const HoleState& s) = 0;
  virtual std::string why_stopped() const { return "order exhausted"; }
};

// Removes triangles in exactly the given order (stops when one triangle
// remains). Construct from triangles or from 1-based ids into the input
// polygon's triangle order.
class ExplicitOrder final : public Strategy {
 public:
  explicit ExplicitOrder(std::vector<Tri> order);
  static ExplicitOrder from_ids(const planar::PlanarPolygon& k,
                                const std::vector<int>& ids);
  std::string name() const override { return "order"; }
  std::optional<Tri> next(const HoleState& s) override;
  std::string why_stopped() const override;

 private:
  std::vector<Tri> order_;
  std::size_t at_ = 0;
};

// Always prefers operation II when some triangle admits it, otherwise takes
// operation I (then III when enabled); ties broken by lowest triangle id in
// the input order. Deliberately fallible: the greedy-trap polygon defeats it.
class GreedyPreferII final : public Strategy {
 public:
  GreedyPreferII(const planar::PlanarPolygon& k, bool allow_op3);
  std::string name() const override { return "kirk"; }
  std::optional<Tri> next(const HoleState& s) override;
  std::string why_stopped() const override;

 private:
  std::vector<Tri> by_id_;
  bool allow_op3_ = false;
};

struct ReduceOutcome {
  bool success = false;
  Trace trace;
  Tri terminal{0, 0, 0};
  int terminal_id = -1;  // 1-based id in the input polygon's triangle order
  int failed_step = 0;   // 1-based step index of the failure
  Tri failed_tri{0, 0, 0};
  int failed_tri_id = -1;
  std::string reason;
};

// Run the strategy until one triangle remains (success) or a step is illegal
// / the strategy gives up (failure; the outcome carries step, triangle, and
// reason). Operation III is refused unless allow_op3.
ReduceOutcome reduce(const planar::PlanarPolygon& k, Strategy& strategy,
                     bool allow_op3);

struct ReplayReport {
  bool ok = false;
  long long steps = 0;
  int failed_step = 0;
  std::string error;
};

// Re-apply a Plain or Pyramid trace against the polygon, verifying each
// step's op kind and delta exactly. Pyramid traces are replayed against the
// recorded subdivision (rebuilt deterministically from the header).
ReplayReport replay(const Trace& t, const planar::PlanarPolygon& k);

}  // namespace eulerchi::reduce

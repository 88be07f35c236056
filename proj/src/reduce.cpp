#include "eulerchi/reduce.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace eulerchi::reduce {

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::I: return "I";
    case OpKind::II: return "II";
    default: return "III";
  }
}

std::optional<OpKind> op_from_name(const std::string& s) {
  if (s == "I") return OpKind::I;
  if (s == "II") return OpKind::II;
  if (s == "III") return OpKind::III;
  return std::nullopt;
}

CountVector op_delta(OpKind k) {
  switch (k) {
    case OpKind::I: return {0, -1, -1};
    case OpKind::II: return {-1, -2, -1};
    default: return {-2, -3, -1};
  }
}

namespace {

std::array<Edge, 3> sides(const Tri& t) {
  return {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])};
}

void build_indexes(HoleState& s) {
  s.tris_of_edge.clear();
  s.edges_at.clear();
  s.tris_at.clear();
  for (const Tri& t : s.live.triangles) {
    for (const Edge& e : sides(t)) s.tris_of_edge[e].push_back(t);
    for (Vertex v : t) s.tris_at[v].insert(t);
  }
  for (const Edge& e : s.live.edges) {
    s.edges_at[e.first].insert(e);
    s.edges_at[e.second].insert(e);
    s.tris_of_edge.try_emplace(e);  // bare edges get an (empty) entry too
  }
}

}  // namespace

HoleState HoleState::from_polygon(const planar::PlanarPolygon& k) {
  if (!k.triangulated() || k.complex.triangles.empty())
    throw Error("UsageError", "reduction needs a triangulated polygon");
  HoleState s;
  s.live = k.complex;
  build_indexes(s);
  for (const auto& [e, ts] : s.tris_of_edge)
    if (ts.size() == 1) {
      s.hole.insert(e);
      s.original.insert(e);
    }
  return s;
}

HoleState HoleState::fresh(const Complex2& c, const std::set<Edge>& original_boundary) {
  HoleState s;
  s.live = c;
  s.original = original_boundary;
  build_indexes(s);
  return s;
}

std::vector<std::vector<Vertex>> HoleState::hole_cycles() const {
  std::set<Edge> rim = hole;
  for (const Edge& e : original) {
    auto it = tris_of_edge.find(e);
    if (live.edges.count(e) && (it == tris_of_edge.end() || it->second.empty()))
      rim.insert(e);  // original edge whose triangles are all gone
  }
  std::map<Vertex, std::vector<Vertex>> nbr;
  for (const Edge& e : rim) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  for (auto& [v, ns] : nbr) {
    if (ns.size() != 2)
      throw Error("NonManifoldBoundary", std::to_string(ns.size()) +
                                             " hole edges meet at vertex " +
                                             std::to_string(v));
    std::sort(ns.begin(), ns.end());
  }
  std::vector<std::vector<Vertex>> cycles;
  std::set<Vertex> done;
  for (const auto& [start, ns] : nbr) {
    if (done.count(start)) continue;
    std::vector<Vertex> cycle{start};
    done.insert(start);
    Vertex prev = start, cur = ns[0];
    while (cur != start) {
      cycle.push_back(cur);
      done.insert(cur);
      const auto& nn = nbr.at(cur);
      Vertex nxt = nn[0] == prev ? nn[1] : nn[0];
      prev = cur;
      cur = nxt;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

RemovalCheck classify_removal(const HoleState& s, const Tri& t) {
  RemovalCheck out;
  if (!s.live.triangles.count(t)) {
    out.verdict = RemovalCheck::Verdict::Illegal;
    out.reason = "triangle " + tri_str(t) + " is not in the live complex";
    return out;
  }

  std::vector<Edge> on_hole, off_hole;
  for (const Edge& e : sides(t))
    (s.hole.count(e) ? on_hole : off_hole).push_back(e);
  const std::size_t h = on_hole.size();

  auto is_free = [&](Vertex v) {
    auto te = s.tris_at.find(v);
    auto ee = s.edges_at.find(v);
    return te != s.tris_at.end() && te->second.size() == 1 &&
           ee != s.edges_at.end() && ee->second.size() == 2;
  };
  auto on_hole_vertex = [&](Vertex v) {
    auto ee = s.edges_at.find(v);
    if (ee == s.edges_at.end()) return false;
    for (const Edge& e : ee->second)
      if (s.hole.count(e)) return true;
    return false;
  };

  if (h == 0) {
    out.verdict = RemovalCheck::Verdict::NotAdjacentToHole;
    out.reason = "triangle " + tri_str(t) + " has no edge on the hole";
    return out;
  }

  if (h == 1) {
    const Edge& e = on_hole[0];
    Vertex opp = t[0] != e.first && t[0] != e.second
                     ? t[0]
                     : (t[1] != e.first && t[1] != e.second ? t[1] : t[2]);
    if (on_hole_vertex(opp)) {
      out.verdict = RemovalCheck::Verdict::Illegal;
      out.delta = {0, -1, -1};
      out.reason = "removal disconnects and is not op I/II";
      return out;
    }
    out.verdict = RemovalCheck::Verdict::LegalI;
    out.op = OpKind::I;
    out.delta = op_delta(OpKind::I);
    out.removed_edges = {e};
    return out;
  }

  if (h == 2) {
    Vertex shared = on_hole[0].first == on_hole[1].first ||
                            on_hole[0].first == on_hole[1].second
                        ? on_hole[0].first
                        : on_hole[0].second;
    if (!is_free(shared)) {
      out.verdict = RemovalCheck::Verdict::Illegal;
      out.delta = {0, -2, -1};
      out.reason =
          "two edges on the hole but their shared vertex is still attached; "
          "the removed part would have alternating sum 0-2+1 = -1";
      return out;
    }
    out.verdict = RemovalCheck::Verdict::LegalII;
    out.op = OpKind::II;
    out.delta = op_delta(OpKind::II);
    out.removed_edges = {on_hole[0], on_hole[1]};
    out.removed_vertices = {shared};
    return out;
  }

  // h == 3
  std::vector<Vertex> free_vs;
  for (Vertex v : t)
    if (is_free(v)) free_vs.push_back(v);
  if (free_vs.size() == 2) {
    out.verdict = RemovalCheck::Verdict::LegalIII;
    out.op = OpKind::III;
    out.delta = op_delta(OpKind::III);
    out.removed_edges = {on_hole[0], on_hole[1], on_hole[2]};
    out.removed_vertices = free_vs;
    return out;
  }
  out.verdict = RemovalCheck::Verdict::Illegal;
  out.delta = {-static_cast<long long>(free_vs.size()), -3, -1};
  if (free_vs.size() == 3)
    out.reason = "removing the last triangle would empty the complex";
  else
    out.reason = "all three edges on the hole but only " +
                 std::to_string(free_vs.size()) +
                 (free_vs.size() == 1 ? " vertex is" : " vertices are") +
                 " free; the removed part would have alternating sum " +
                 std::to_string(free_vs.size()) + "-3+1 = " +
                 std::to_string(static_cast<long long>(free_vs.size()) - 2);
  return out;
}

RemovalStep apply_removal(HoleState& s, const Tri& t, bool allow_op3) {
  RemovalCheck check = classify_removal(s, t);
  if (check.verdict == RemovalCheck::Verdict::NotAdjacentToHole)
    throw Error("NotAdjacentToHole", check.reason);
  if (check.verdict == RemovalCheck::Verdict::Illegal)
    throw Error("IllegalRemoval", check.reason);
  if (check.verdict == RemovalCheck::Verdict::LegalIII && !allow_op3)
    throw Error("IllegalRemoval",
                "operation III is needed but not enabled for this run");

  // triangle leaves the complex and the indexes
  s.live.triangles.erase(t);
  ++s.removed_triangles;
  for (const Edge& e : sides(t)) {
    auto& ts = s.tris_of_edge[e];
    ts.erase(std::remove(ts.begin(), ts.end(), t), ts.end());
  }
  for (Vertex v : t) {
    auto it = s.tris_at.find(v);
    if (it != s.tris_at.end()) it->second.erase(t);
  }

  // removed edges disappear outright
  for (const Edge& e : check.removed_edges) {
    s.live.edges.erase(e);
    s.hole.erase(e);
    s.tris_of_edge.erase(e);
    for (Vertex v : {e.first, e.second}) {
      auto it = s.edges_at.find(v);
      if (it != s.edges_at.end()) it->second.erase(e);
    }
  }
  for (Vertex v : check.removed_vertices) {
    s.live.vertices.erase(v);
    s.live.coords.erase(v);
    s.edges_at.erase(v);
    s.tris_at.erase(v);
  }

  // surviving edges of t: newly exposed interior edges join the hole;
  // original-boundary edges that lost their last triangle stay as bare edges
  for (const Edge& e : sides(t)) {
    if (!s.live.edges.count(e)) continue;     // removed with the triangle
    if (s.tris_of_edge[e].empty()) continue;  // dead rim edge: bare, not hole
    if (!s.original.count(e)) s.hole.insert(e);
  }

  return RemovalStep{check.op, t, check.delta};
}

std::string print_trace(const Trace& t) {
  std::ostringstream os;
  auto tri_csv = [](const Tri& x) {
    return std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]);
  };
  auto dbl = [](double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
  };
  if (t.kind == Trace::Kind::Proof) {
    os << "chi_K=" << t.chi_K << " chi_K0=" << t.chi_K0 << " mode=" << t.mode
       << "\n";
    os << "seed=" << tri_csv(t.seed);
    if (t.mode == "euclidean") os << " epsilon=" << dbl(t.epsilon);
    os << "\n";
  } else if (t.kind == Trace::Kind::Pyramid) {
    os << "seed=" << tri_csv(t.seed) << " levels=" << t.mode << "\n";
  }
  long long i = 1;
  for (const RemovalStep& st : t.steps) {
    os << "step=" << i++ << " op=" << op_name(st.op) << " tri=" << tri_csv(st.tri)
       << " dn0=" << st.delta.n0 << " dn1=" << st.delta.n1
       << " dn2=" << st.delta.n2 << "\n";
  }
  return os.str();
}

namespace {

struct KV {
  std::string key, value;
};

std::vector<KV> split_kv(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<KV> out;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("SyntaxError", "line " + std::to_string(lineno) +
                                     ": expected key=value, got '" + tok + "'");
    out.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
  }
  return out;
}

long long parse_ll(const std::string& s, int lineno, const std::string& what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error("SyntaxError", "line " + std::to_string(lineno) + ": bad " +
                                   what + " '" + s + "'");
  return v;
}

Tri parse_tri_csv(const std::string& s, int lineno) {
  Vertex v[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = i < 2 ? s.find(',', pos) : s.size();
    if (end == std::string::npos)
      throw Error("SyntaxError",
                  "line " + std::to_string(lineno) + ": bad triangle '" + s + "'");
    v[i] = static_cast<Vertex>(parse_ll(s.substr(pos, end - pos), lineno, "vertex"));
    pos = end + 1;
  }
  return make_tri(v[0], v[1], v[2]);
}

}  // namespace

Trace parse_trace(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream is(text);
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      lines.push_back({n, line});
    }
  }
  Trace t;
  std::size_t at = 0;
  if (!lines.empty() && lines[0].second.rfind("chi_K=", 0) == 0) {
    t.kind = Trace::Kind::Proof;
    auto kv = split_kv(lines[0].second, lines[0].first);
    if (kv.size() != 3 || kv[0].key != "chi_K" || kv[1].key != "chi_K0" ||
        kv[2].key != "mode")
      throw Error("SyntaxError", "line " + std::to_string(lines[0].first) +
                                     ": expected chi_K= chi_K0= mode=");
    t.chi_K = parse_ll(kv[0].value, lines[0].first, "chi_K");
    t.chi_K0 = parse_ll(kv[1].value, lines[0].first, "chi_K0");
    t.mode = kv[2].value;
    if (lines.size() < 2 || lines[1].second.rfind("seed=", 0) != 0)
      throw Error("SyntaxError", "line " +
                                     std::to_string(lines.size() < 2
                                                        ? lines[0].first + 1
                                                        : lines[1].first) +
                                     ": expected seed= line");
    auto kv2 = split_kv(lines[1].second, lines[1].first);
    t.seed = parse_tri_csv(kv2[0].value, lines[1].first);
    if (kv2.size() > 1) {
      if (kv2[1].key != "epsilon")
        throw Error("SyntaxError", "line " + std::to_string(lines[1].first) +
                                       ": unexpected token after seed");
      const std::string& s = kv2[1].value;
      double eps = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), eps);
      if (ec != std::errc() || p != s.data() + s.size())
        throw Error("SyntaxError", "line " + std::to_string(lines[1].first) +
                                       ": bad epsilon '" + s + "'");
      t.epsilon = eps;
    }
    at = 2;
  } else if (!lines.empty() && lines[0].second.rfind("seed=", 0) == 0) {
    t.kind = Trace::Kind::Pyramid;
    auto kv = split_kv(lines[0].second, lines[0].first);
    if (kv.size() != 2 || kv[1].key != "levels")
      throw Error("SyntaxError", "line " + std::to_string(lines[0].first) +
                                     ": expected seed=<v,v,v> levels=<mode>");
    t.seed = parse_tri_csv(kv[0].value, lines[0].first);
    t.mode = kv[1].value;
    at = 1;
  }

  long long expect = 1;
  for (; at < lines.size(); ++at) {
    auto [lineno, line] = lines[at];
    auto kv = split_kv(line, lineno);
    if (kv.size() != 6 || kv[0].key != "step" || kv[1].key != "op" ||
        kv[2].key != "tri" || kv[3].key != "dn0" || kv[4].key != "dn1" ||
        kv[5].key != "dn2")
      throw Error("SyntaxError",
                  "line " + std::to_string(lineno) +
                      ": expected step= op= tri= dn0= dn1= dn2=");
    if (parse_ll(kv[0].value, lineno, "step index") != expect)
      throw Error("SyntaxError", "line " + std::to_string(lineno) +
                                     ": expected step " + std::to_string(expect));
    ++expect;
    auto op = op_from_name(kv[1].value);
    if (!op)
      throw Error("SyntaxError", "line " + std::to_string(lineno) +
                                     ": unknown op '" + kv[1].value + "'");
    RemovalStep st;
    st.op = *op;
    st.tri = parse_tri_csv(kv[2].value, lineno);
    st.delta = {parse_ll(kv[3].value, lineno, "dn0"),
                parse_ll(kv[4].value, lineno, "dn1"),
                parse_ll(kv[5].value, lineno, "dn2")};
    t.steps.push_back(st);
  }
  return t;
}

ExplicitOrder::ExplicitOrder(std::vector<Tri> order) : order_(std::move(order)) {}

ExplicitOrder ExplicitOrder::from_ids(const planar::PlanarPolygon& k,
                                      const std::vector<int>& ids) {
  std::vector<Tri> all = k.ids_or_sorted();
  std::vector<Tri> order;
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(all.size()))
      throw Error("UsageError", "triangle id " + std::to_string(id) +
                                    " out of range 1.." +
                                    std::to_string(all.size()));
    order.push_back(all[id - 1]);
  }
  return ExplicitOrder(std::move(order));
}

std::optional<Tri> ExplicitOrder::next(const HoleState&) {
  if (at_ >= order_.size()) return std::nullopt;
  return order_[at_++];
}

std::string ExplicitOrder::why_stopped() const { return "order exhausted"; }

GreedyPreferII::GreedyPreferII(const planar::PlanarPolygon& k, bool allow_op3)
    : by_id_(k.ids_or_sorted()), allow_op3_(allow_op3) {}

std::optional<Tri> GreedyPreferII::next(const HoleState& s) {
  std::optional<Tri> fallback_i, fallback_iii;
  for (const Tri& t : by_id_) {
    if (!s.live.triangles.count(t)) continue;
    RemovalCheck c = classify_removal(s, t);
    if (c.verdict == RemovalCheck::Verdict::LegalII) return t;
    if (c.verdict == RemovalCheck::Verdict::LegalI && !fallback_i) fallback_i = t;
    if (c.verdict == RemovalCheck::Verdict::LegalIII && !fallback_iii)
      fallback_iii = t;
  }
  if (fallback_i) return fallback_i;
  if (allow_op3_ && fallback_iii) return fallback_iii;
  return std::nullopt;
}

std::string GreedyPreferII::why_stopped() const {
  return "no triangle admits a legal operation";
}

ReduceOutcome reduce(const planar::PlanarPolygon& k, Strategy& strategy,
                     bool allow_op3) {
  planar::PlanarPolygon prepared = strategy.prepare(k);
  HoleState state = HoleState::from_polygon(prepared);

  std::vector<Tri> input_order = k.ids_or_sorted();
  auto id_of = [&](const Tri& t) {
    auto it = std::find(input_order.begin(), input_order.end(), t);
    return it == input_order.end()
               ? -1
               : static_cast<int>(it - input_order.begin()) + 1;
  };

  ReduceOutcome out;
  while (state.live_triangle_count() > 1) {
    std::optional<Tri> pick = strategy.next(state);
    int step = static_cast<int>(out.trace.steps.size()) + 1;
    if (!pick) {
      out.failed_step = step;
      out.reason = strategy.why_stopped();
      return out;
    }
    Tri t = make_tri((*pick)[0], (*pick)[1], (*pick)[2]);
    RemovalCheck check = classify_removal(state, t);
    bool legal = check.verdict == RemovalCheck::Verdict::LegalI ||
                 check.verdict == RemovalCheck::Verdict::LegalII ||
                 (check.verdict == RemovalCheck::Verdict::LegalIII && allow_op3);
    if (!legal) {
      out.failed_step = step;
      out.failed_tri = t;
      out.failed_tri_id = id_of(t);
      out.reason = check.verdict == RemovalCheck::Verdict::LegalIII
                       ? "operation III is needed but not enabled for this run"
                       : check.reason;
      return out;
    }
    out.trace.steps.push_back(apply_removal(state, t, allow_op3));
  }

  out.success = true;
  out.terminal = *state.live.triangles.begin();
  out.terminal_id = id_of(out.terminal);
  strategy.stamp(out.trace);
  return out;
}

// replay() is implemented with the elongation code: pyramid traces need the
// deterministic level subdivision rebuilt from their header.

}  // namespace eulerchi::reduce

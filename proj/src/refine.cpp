#include "eulerchi/refine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eulerchi::refine {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dot2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

// Planar coordinates for guard checks. For 2D complexes this is the
// identity; for 3D ones, points are projected into the plane of a reference
// triangle (regions never leave their original triangle's plane).
struct Frame {
  bool have = false;
  bool planar = true;
  Vec3 origin, u, v;

  static Frame from(const Complex2& c, const Tri& t) {
    Frame f;
    if (c.coords.count(t[0]) + c.coords.count(t[1]) + c.coords.count(t[2]) < 3)
      return f;
    f.have = true;
    if (c.embed_dim <= 2) return f;
    f.planar = false;
    Vec3 a = c.coords.at(t[0]), b = c.coords.at(t[1]), d = c.coords.at(t[2]);
    auto sub = [](Vec3 p, Vec3 q) { return Vec3{p.x - q.x, p.y - q.y, p.z - q.z}; };
    auto dot = [](Vec3 p, Vec3 q) { return p.x * q.x + p.y * q.y + p.z * q.z; };
    auto scale = [](Vec3 p, double s) { return Vec3{p.x * s, p.y * s, p.z * s}; };
    f.origin = a;
    Vec3 e1 = sub(b, a);
    double n1 = std::sqrt(dot(e1, e1));
    f.u = scale(e1, 1.0 / n1);
    Vec3 e2 = sub(d, a);
    double along = dot(e2, f.u);
    Vec3 perp{e2.x - along * f.u.x, e2.y - along * f.u.y, e2.z - along * f.u.z};
    double n2 = std::sqrt(dot(perp, perp));
    f.v = scale(perp, 1.0 / n2);
    return f;
  }

  Vec2 flat(const Vec3& p) const {
    if (planar) return {p.x, p.y};
    Vec3 d{p.x - origin.x, p.y - origin.y, p.z - origin.z};
    return {d.x * u.x + d.y * u.y + d.z * u.z,
            d.x * v.x + d.y * v.y + d.z * v.z};
  }
};

Vec3 lerp3(const Vec3& a, const Vec3& b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

bool tri_has_vertex(const Tri& t, Vertex v) {
  return t[0] == v || t[1] == v || t[2] == v;
}

bool tri_has_edge(const Tri& t, const Edge& e) {
  return tri_has_vertex(t, e.first) && tri_has_vertex(t, e.second);
}

Vertex opposite_vertex(const Tri& t, const Edge& e) {
  for (Vertex v : t)
    if (v != e.first && v != e.second) return v;
  return t[0];
}

Vertex max_vertex(const Complex2& c) {
  return c.vertices.empty() ? -1 : *c.vertices.rbegin();
}

// Shared fan triangulator. Picks the lowest-id polygon corner whose fan (a)
// introduces no diagonal already present in the complex, (b) has no polygon
// corner sitting in the interior of a diagonal, and (c) only produces
// triangles of positive signed area in the polygon's own orientation.
// Guards (b) and (c) need coordinates and are skipped without them.
void fan_polygon(Complex2& work, const std::vector<Vertex>& poly,
                 const Frame& frame) {
  const std::size_t n = poly.size();
  if (n < 3) throw Error("DegenerateCut", "region polygon has fewer than 3 corners");
  if (n == 3) {
    work.add_triangle(poly[0], poly[1], poly[2]);
    return;
  }
  std::vector<Vec2> pts;
  double orient = 0.0;
  if (frame.have) {
    pts.reserve(n);
    for (Vertex v : poly) pts.push_back(frame.flat(work.coords.at(v)));
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = pts[i];
      const Vec2& b = pts[(i + 1) % n];
      orient += a.x * b.y - a.y * b.x;
    }
    orient = orient >= 0 ? 1.0 : -1.0;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return poly[a] < poly[b]; });

  for (std::size_t pos : order) {
    bool ok = true;
    for (std::size_t k = 2; k + 1 < n && ok; ++k) {  // diagonals
      Vertex d = poly[(pos + k) % n];
      if (work.has_edge(poly[pos], d)) ok = false;
      if (ok && frame.have) {
        const Vec2& a = pts[pos];
        const Vec2& b = pts[(pos + k) % n];
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (j == pos || j == (pos + k) % n) continue;
          const Vec2& q = pts[j];
          double cr = cross2(a, b, q);
          double span = std::abs(b.x - a.x) + std::abs(b.y - a.y) + 1.0;
          if (std::abs(cr) <= 1e-9 * span * span) {
            double d1 = dot2(a, b, q), d2 = dot2(b, a, q);
            if (d1 > 0 && d2 > 0) ok = false;  // corner inside the diagonal
          }
        }
      }
    }
    for (std::size_t k = 1; k + 1 < n && ok && frame.have; ++k) {
      double a2 = cross2(pts[pos], pts[(pos + k) % n], pts[(pos + k + 1) % n]);
      if (orient * a2 <= 0.0) ok = false;
    }
    if (!ok) continue;
    for (std::size_t k = 1; k + 1 < n; ++k)
      work.add_triangle(poly[pos], poly[(pos + k) % n], poly[(pos + k + 1) % n]);
    return;
  }
  throw Error("DegenerateCut", "region cannot be fanned from any corner");
}

// Subdivision points accumulated on the original edges, ordered by the
// parameter measured from the edge's smaller endpoint.
struct Registry {
  std::map<Edge, std::vector<std::pair<double, Vertex>>> pts;

  const std::vector<std::pair<double, Vertex>>* on(const Edge& e) const {
    auto it = pts.find(e);
    return it == pts.end() ? nullptr : &it->second;
  }
};

// Cyclic region polygon of an original triangle: its corners plus every
// registered point on its sides, in geometric order.
std::vector<Vertex> region_polygon(const Tri& t, const Registry& reg) {
  std::vector<Vertex> poly;
  auto side = [&](Vertex a, Vertex b) {  // walk a -> b, excluding b
    poly.push_back(a);
    Edge e = make_edge(a, b);
    const auto* v = reg.on(e);
    if (!v) return;
    if (e.first == a)
      for (const auto& [s, id] : *v) poly.push_back(id);
    else
      for (auto it = v->rbegin(); it != v->rend(); ++it) poly.push_back(it->second);
  };
  side(t[0], t[1]);
  side(t[1], t[2]);
  side(t[2], t[0]);
  return poly;
}

struct Machine {
  Complex2 work;
  const Complex2& original;
  Registry reg;
  Vertex next_id;
  bool have_coords;
  std::vector<Vertex> minted;

  explicit Machine(const Complex2& c)
      : work(c), original(c), next_id(max_vertex(c) + 1) {
    have_coords = !c.coords.empty();
  }

  // Mint (or find) the vertex for an on-edge locus; replaces the current
  // sub-edge containing it so the edge set tracks the subdivision.
  Vertex resolve_on_edge(const Edge& e, double t, bool may_mint) {
    auto& v = reg.pts[e];
    auto it = std::lower_bound(
        v.begin(), v.end(), t,
        [](const std::pair<double, Vertex>& p, double s) { return p.first < s; });
    if (it != v.end() && it->first == t) return it->second;
    if (!may_mint)
      throw Error("NonTransversalTrace",
                  "entry point does not continue the previous event");
    Vertex pred = it == v.begin() ? e.first : std::prev(it)->second;
    Vertex succ = it == v.end() ? e.second : it->second;
    Vertex id = next_id++;
    work.add_vertex(id);
    if (have_coords)
      work.coords[id] = lerp3(work.coords.at(e.first), work.coords.at(e.second), t);
    work.edges.erase(make_edge(pred, succ));
    work.edges.insert(make_edge(pred, id));
    work.edges.insert(make_edge(id, succ));
    v.insert(it, {t, id});
    minted.push_back(id);
    return id;
  }

  Vertex mint_interior(const Vec3& at) {
    Vertex id = next_id++;
    work.add_vertex(id);
    if (have_coords) work.coords[id] = at;
    minted.push_back(id);
    return id;
  }

  // Rebuild one original triangle's region. `via` is the routed interior
  // vertex (or -1), `a`/`b` the curve's entry and exit on the polygon; pass
  // a = b = -1 for a conforming rebuild without a curve chord.
  void rebuild(const Tri& t, Vertex a, Vertex b, Vertex via) {
    std::vector<Vertex> poly = region_polygon(t, reg);
    Frame frame = have_coords ? Frame::from(work, t) : Frame{};
    work.triangles.erase(t);
    if (a < 0) {
      fan_polygon(work, poly, frame);
      return;
    }
    auto ipos = std::find(poly.begin(), poly.end(), a) - poly.begin();
    auto jpos = std::find(poly.begin(), poly.end(), b) - poly.begin();
    if (ipos == static_cast<long>(poly.size()) ||
        jpos == static_cast<long>(poly.size()))
      throw Error("NonTransversalTrace", "curve point is not on its region");
    const std::size_t n = poly.size();
    std::vector<Vertex> one, two;
    for (std::size_t k = ipos;; k = (k + 1) % n) {
      one.push_back(poly[k]);
      if (k == static_cast<std::size_t>(jpos)) break;
    }
    for (std::size_t k = jpos;; k = (k + 1) % n) {
      two.push_back(poly[k]);
      if (k == static_cast<std::size_t>(ipos)) break;
    }
    if (via >= 0) {
      work.add_edge(a, via);
      work.add_edge(via, b);
      one.push_back(via);
      two.push_back(via);
    } else {
      work.add_edge(a, b);
    }
    fan_polygon(work, one, frame);
    fan_polygon(work, two, frame);
  }
};

void check_locus(const Tri& t, const Locus& l) {
  if (l.kind == Locus::Kind::AtVertex) {
    if (!tri_has_vertex(t, l.vertex))
      throw Error("NonTransversalTrace",
                  "vertex " + std::to_string(l.vertex) + " is not on triangle " +
                      tri_str(t));
    return;
  }
  Edge e = make_edge(l.edge.first, l.edge.second);
  if (!tri_has_edge(t, e))
    throw Error("NonTransversalTrace",
                "edge " + edge_str(e) + " is not a side of triangle " + tri_str(t));
  if (!(l.t > 0.0 && l.t < 1.0))
    throw Error("DegenerateCut", "edge parameter must lie strictly between 0 and 1");
}

bool same_locus(const Locus& a, const Locus& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Locus::Kind::AtVertex) return a.vertex == b.vertex;
  return make_edge(a.edge.first, a.edge.second) ==
             make_edge(b.edge.first, b.edge.second) &&
         a.t == b.t;
}

// The original edge whose closure contains both loci, if there is one; a
// curve segment between two such points must be routed through the interior.
std::optional<Edge> common_closure_edge(const Tri& t, const Locus& p,
                                        const Locus& q) {
  auto on_closure = [&](const Locus& l, const Edge& e) {
    if (l.kind == Locus::Kind::OnEdge)
      return make_edge(l.edge.first, l.edge.second) == e;
    return l.vertex == e.first || l.vertex == e.second;
  };
  const Edge sides[3] = {make_edge(t[0], t[1]), make_edge(t[1], t[2]),
                         make_edge(t[0], t[2])};
  for (const Edge& e : sides)
    if (on_closure(p, e) && on_closure(q, e)) return e;
  return std::nullopt;
}

Vec3 locus_point(const Complex2& c, const Locus& l) {
  if (l.kind == Locus::Kind::AtVertex) return c.coords.at(l.vertex);
  Edge e = make_edge(l.edge.first, l.edge.second);
  return lerp3(c.coords.at(e.first), c.coords.at(e.second), l.t);
}

}  // namespace

SubdivisionResult split_triangle(const Complex2& c, const Tri& t,
                                 const Locus& p, const Locus& q) {
  Tri tt = make_tri(t[0], t[1], t[2]);
  if (!c.has_triangle(tt[0], tt[1], tt[2]))
    throw Error("DegenerateCut", "triangle " + tri_str(tt) + " is not in the complex");
  auto bad = [&](const std::string& why) { return Error("DegenerateCut", why); };
  auto in_open = [](double s) { return s > 0.0 && s < 1.0; };

  for (const Locus* l : {&p, &q}) {
    if (l->kind == Locus::Kind::AtVertex) {
      if (!tri_has_vertex(tt, l->vertex))
        throw bad("vertex locus is not a corner of the triangle");
    } else {
      Edge e = make_edge(l->edge.first, l->edge.second);
      if (!tri_has_edge(tt, e)) throw bad("edge locus is not a side of the triangle");
      if (!in_open(l->t)) throw bad("edge parameter must lie strictly between 0 and 1");
    }
  }

  Complex2 work = c;
  const bool have_coords = !c.coords.empty();
  Vertex next = max_vertex(c) + 1;
  std::vector<Vertex> minted;

  auto mint_on = [&](const Edge& e, double s) {
    Vertex id = next++;
    work.add_vertex(id);
    if (have_coords)
      work.coords[id] = lerp3(work.coords.at(e.first), work.coords.at(e.second), s);
    minted.push_back(id);
    return id;
  };
  auto other_triangle = [&](const Edge& e) -> std::optional<Tri> {
    for (const Tri& u : c.triangles)
      if (u != tt && tri_has_edge(u, e)) return u;
    return std::nullopt;
  };
  auto split_neighbor = [&](const Edge& e, Vertex m) {
    if (auto u = other_triangle(e)) {
      Vertex d = opposite_vertex(*u, e);
      work.triangles.erase(*u);
      work.add_triangle(e.first, m, d);
      work.add_triangle(m, e.second, d);
    }
  };

  if (p.kind == Locus::Kind::OnEdge && q.kind == Locus::Kind::OnEdge) {
    Edge ep = make_edge(p.edge.first, p.edge.second);
    Edge eq = make_edge(q.edge.first, q.edge.second);
    if (ep == eq) throw bad("both cut points lie on the same side");
    Vertex shared = tri_has_vertex(tt, ep.first) && (eq.first == ep.first || eq.second == ep.first)
                        ? ep.first
                        : ep.second;
    Vertex bp = ep.first == shared ? ep.second : ep.first;  // far end of p's side
    Vertex bq = eq.first == shared ? eq.second : eq.first;  // far end of q's side
    Vertex P = mint_on(ep, p.t);
    Vertex Q = mint_on(eq, q.t);
    work.triangles.erase(tt);
    work.edges.erase(ep);
    work.edges.erase(eq);
    work.add_triangle(shared, P, Q);
    work.add_triangle(P, bp, bq);  // quad split along (first minted, far corner)
    work.add_triangle(P, bq, Q);
    split_neighbor(ep, P);
    split_neighbor(eq, Q);
  } else if (p.kind != q.kind) {
    const Locus& lv = p.kind == Locus::Kind::AtVertex ? p : q;
    const Locus& le = p.kind == Locus::Kind::AtVertex ? q : p;
    Edge e = make_edge(le.edge.first, le.edge.second);
    if (lv.vertex == e.first || lv.vertex == e.second)
      throw bad("cut runs from a corner to one of its own sides");
    Vertex M = mint_on(e, le.t);
    work.triangles.erase(tt);
    work.edges.erase(e);
    work.add_triangle(lv.vertex, e.first, M);
    work.add_triangle(lv.vertex, M, e.second);
    split_neighbor(e, M);
  } else {
    throw bad("cut between two corners is degenerate");
  }

  SubdivisionResult out;
  out.delta = CountVector{counts(work).n0 - counts(c).n0,
                          counts(work).n1 - counts(c).n1,
                          counts(work).n2 - counts(c).n2};
  out.complex = std::move(work);
  out.curve_vertices = std::move(minted);
  return out;
}

SubdivisionAudit subdivide_with_audit(const Complex2& c, const CurveTrace& trace) {
  if (trace.events.empty())
    throw Error("DegenerateCut", "curve trace has no events");

  std::set<Tri> seen;
  for (const CurveEvent& ev : trace.events) {
    Tri t = make_tri(ev.tri[0], ev.tri[1], ev.tri[2]);
    if (!c.has_triangle(t[0], t[1], t[2]))
      throw Error("NonTransversalTrace",
                  "trace visits " + tri_str(t) + " which is not in the complex");
    if (!seen.insert(t).second)
      throw Error("NonTransversalTrace",
                  "trace visits triangle " + tri_str(t) + " more than once");
  }

  Machine m(c);
  const auto& evs = trace.events;
  const std::size_t n = evs.size();
  std::vector<CountVector> per_event(n, CountVector{0, 0, 0});

  auto snapshot = [&]() { return counts(m.work); };
  auto diff = [](const CountVector& a, const CountVector& b) {
    return CountVector{a.n0 - b.n0, a.n1 - b.n1, a.n2 - b.n2};
  };

  // Continuity of the polygonal path.
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!same_locus(evs[i].exit, evs[i + 1].entry))
      throw Error("NonTransversalTrace",
                  "event " + std::to_string(i + 1) +
                      " does not enter where the previous event left");
  if (trace.closed && !same_locus(evs.back().exit, evs.front().entry))
    throw Error("NonTransversalTrace",
                "closed trace does not return to its starting point");

  CountVector carried{0, 0, 0};  // closed traces: first entry, charged to the end
  if (trace.closed && evs.front().entry.kind == Locus::Kind::OnEdge) {
    Tri t0 = make_tri(evs[0].tri[0], evs[0].tri[1], evs[0].tri[2]);
    check_locus(t0, evs.front().entry);
    CountVector before = snapshot();
    Edge e = make_edge(evs[0].entry.edge.first, evs[0].entry.edge.second);
    m.resolve_on_edge(e, evs[0].entry.t, true);
    carried = diff(snapshot(), before);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Tri t = make_tri(evs[i].tri[0], evs[i].tri[1], evs[i].tri[2]);
    check_locus(t, evs[i].entry);
    check_locus(t, evs[i].exit);
    if (same_locus(evs[i].entry, evs[i].exit))
      throw Error("DegenerateCut",
                  "event " + std::to_string(i) + " enters and leaves at the same point");

    CountVector before = snapshot();
    auto resolve = [&](const Locus& l, bool may_mint) {
      if (l.kind == Locus::Kind::AtVertex) return l.vertex;
      return m.resolve_on_edge(make_edge(l.edge.first, l.edge.second), l.t, may_mint);
    };
    Vertex a = resolve(evs[i].entry, i == 0);
    Vertex b = resolve(evs[i].exit, true);

    Vertex via = -1;
    if (common_closure_edge(t, evs[i].entry, evs[i].exit)) {
      if (!m.have_coords)
        throw Error("DegenerateCut",
                    "routing a segment along a side needs coordinates");
      Vec3 pa = locus_point(c, evs[i].entry), pb = locus_point(c, evs[i].exit);
      Vec3 g{(c.coords.at(t[0]).x + c.coords.at(t[1]).x + c.coords.at(t[2]).x) / 3.0,
             (c.coords.at(t[0]).y + c.coords.at(t[1]).y + c.coords.at(t[2]).y) / 3.0,
             (c.coords.at(t[0]).z + c.coords.at(t[1]).z + c.coords.at(t[2]).z) / 3.0};
      via = m.mint_interior(
          Vec3{(pa.x + pb.x + g.x) / 3.0, (pa.y + pb.y + g.y) / 3.0,
               (pa.z + pb.z + g.z) / 3.0});
    }

    m.rebuild(t, a, b, via);
    per_event[i] = diff(snapshot(), before);
  }
  per_event.back() = CountVector{per_event.back().n0 + carried.n0,
                                 per_event.back().n1 + carried.n1,
                                 per_event.back().n2 + carried.n2};

  // Conforming pass: neighbors that received side points but were never
  // themselves crossed are refanned against the subdivided sides.
  std::vector<Tri> pending;
  for (const Tri& t : c.triangles) {
    if (seen.count(t)) continue;
    for (const Edge& e :
         {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])})
      if (m.reg.on(e)) {
        pending.push_back(t);
        break;
      }
  }
  for (const Tri& t : pending) m.rebuild(t, -1, -1, -1);

  SubdivisionAudit audit;
  audit.result.delta = diff(counts(m.work), counts(c));
  audit.result.complex = std::move(m.work);
  audit.result.curve_vertices = std::move(m.minted);
  audit.per_event = std::move(per_event);
  return audit;
}

SubdivisionResult subdivide_along_curve(const Complex2& c, const CurveTrace& trace) {
  return subdivide_with_audit(c, trace).result;
}

CutResult cut_along(const Complex2& c, const std::vector<Edge>& gamma) {
  std::set<Edge> cut;
  auto incidence = edge_triangle_incidence(c);
  for (const Edge& raw : gamma) {
    Edge e = make_edge(raw.first, raw.second);
    auto it = incidence.find(e);
    std::size_t uses = it == incidence.end() ? 0 : it->second.size();
    if (!c.edges.count(e) || uses != 2)
      throw Error("EdgeOnBoundary",
                  "cut edge " + edge_str(e) + " is not an interior edge");
    cut.insert(e);
  }

  // Components of each cut vertex's triangle fan with the cut edges removed.
  std::set<Vertex> cut_vertices;
  for (const Edge& e : cut) {
    cut_vertices.insert(e.first);
    cut_vertices.insert(e.second);
  }

  std::map<Vertex, std::map<Tri, Vertex>> assignment;  // per vertex: tri -> new id
  std::map<Vertex, std::vector<Vertex>> copies;
  Vertex next = max_vertex(c) + 1;

  for (Vertex v : cut_vertices) {
    std::vector<Tri> fan;
    for (const Tri& t : c.triangles)
      if (tri_has_vertex(t, v)) fan.push_back(t);
    // union by shared non-cut edges at v
    std::map<Tri, int> comp;
    int nc = 0;
    for (const Tri& t : fan)
      if (!comp.count(t)) {
        std::vector<Tri> stack{t};
        comp[t] = nc;
        while (!stack.empty()) {
          Tri u = stack.back();
          stack.pop_back();
          for (Vertex w : u) {
            if (w == v) continue;
            Edge e = make_edge(v, w);
            if (cut.count(e)) continue;
            for (const Tri& nb : incidence[e])
              if (!comp.count(nb)) {
                comp[nb] = nc;
                stack.push_back(nb);
              }
          }
        }
        ++nc;
      }
    if (nc <= 1) continue;
    // the component holding the smallest triangle keeps the original id
    std::vector<Tri> smallest(nc, fan.empty() ? Tri{} : fan.front());
    std::vector<bool> seen(nc, false);
    for (const Tri& t : fan) {
      int k = comp[t];
      if (!seen[k] || t < smallest[k]) smallest[k] = t, seen[k] = true;
    }
    std::vector<int> order(nc);
    for (int k = 0; k < nc; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return smallest[x] < smallest[y]; });
    std::map<int, Vertex> ids;
    ids[order[0]] = v;
    for (int k = 1; k < nc; ++k) {
      ids[order[k]] = next++;
      copies[v].push_back(ids[order[k]]);
    }
    for (const Tri& t : fan) assignment[v][t] = ids[comp[t]];
  }

  CutResult out;
  out.complex.embed_dim = c.embed_dim;
  for (const Tri& t : c.triangles) {
    Vertex mapped[3];
    for (int k = 0; k < 3; ++k) {
      Vertex v = t[k];
      auto it = assignment.find(v);
      mapped[k] = it != assignment.end() && it->second.count(t) ? it->second.at(t) : v;
    }
    out.complex.add_triangle(mapped[0], mapped[1], mapped[2]);
  }
  for (const Edge& e : c.edges)  // edges carried by no triangle survive as-is
    if (incidence[e].empty()) out.complex.add_edge(e.first, e.second);
  for (Vertex v : c.vertices) out.complex.add_vertex(v);
  for (const auto& [v, p] : c.coords) out.complex.coords[v] = p;
  for (const auto& [v, list] : copies)
    for (Vertex w : list)
      if (c.coords.count(v)) out.complex.coords[w] = c.coords.at(v);
  out.copies = std::move(copies);
  return out;
}

Complex2 glue(const Complex2& c, const std::map<Vertex, std::vector<Vertex>>& copies) {
  std::map<Vertex, Vertex> back;
  for (const auto& [orig, list] : copies)
    for (Vertex w : list) back[w] = orig;
  auto rename = [&](Vertex v) {
    auto it = back.find(v);
    return it == back.end() ? v : it->second;
  };
  Complex2 out;
  out.embed_dim = c.embed_dim;
  for (Vertex v : c.vertices) out.add_vertex(rename(v));
  for (const Edge& e : c.edges) out.add_edge(rename(e.first), rename(e.second));
  for (const Tri& t : c.triangles)
    out.add_triangle(rename(t[0]), rename(t[1]), rename(t[2]));
  for (const auto& [v, p] : c.coords)
    if (!back.count(v)) out.coords[v] = p;
  return out;
}

}  // namespace eulerchi::refine

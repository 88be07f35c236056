#include "eulerchi/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace eulerchi {

Edge make_edge(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

Tri make_tri(Vertex a, Vertex b, Vertex c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

void Complex2::add_edge(Vertex a, Vertex b) {
  vertices.insert(a);
  vertices.insert(b);
  edges.insert(make_edge(a, b));
}

void Complex2::add_triangle(Vertex a, Vertex b, Vertex c) {
  add_edge(a, b);
  add_edge(b, c);
  add_edge(a, c);
  triangles.insert(make_tri(a, b, c));
}

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

std::string tri_str(const Tri& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "}";
}

std::string ValidationReport::summary() const {
  if (defects.empty()) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < defects.size(); ++i) {
    if (i) os << "\n";
    os << defects[i].kind << ": " << defects[i].detail;
  }
  return os.str();
}

namespace {

// 2D segment-intersection test used by the embedded-intersection check.
// Segments that merely share declared endpoints are fine.
struct P2 {
  double x, y;
};

double cross(P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(P2 a, P2 b, P2 p, double eps) {
  if (std::abs(cross(a, b, p)) > eps) return false;
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

// Proper or improper intersection of segments (a,b) and (c,d), excluding
// contact that happens exactly at shared endpoints.
bool segments_conflict(P2 a, P2 b, P2 c, P2 d, bool share_a_c, bool share_a_d,
                       bool share_b_c, bool share_b_d, double eps) {
  double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  bool proper = ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
                ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
  if (proper) return true;
  // collinear / endpoint-touching situations
  auto interior_contact = [&](P2 s0, P2 s1, P2 p, bool p_is_shared0, bool p_is_shared1) {
    if (p_is_shared0 || p_is_shared1) return false;
    return on_segment(s0, s1, p, eps);
  };
  if (interior_contact(c, d, a, share_a_c, share_a_d)) return true;
  if (interior_contact(c, d, b, share_b_c, share_b_d)) return true;
  if (interior_contact(a, b, c, share_a_c, share_b_c)) return true;
  if (interior_contact(a, b, d, share_a_d, share_b_d)) return true;
  return false;
}

}  // namespace

ValidationReport validate(const Complex2& c) {
  ValidationReport r;
  // degenerate simplices cannot be represented (Edge/Tri are sorted sets),
  // but parsed/quotient inputs funnel through here before canonicalization;
  // still check for safety.
  for (const auto& e : c.edges) {
    if (e.first == e.second)
      r.defects.push_back({"degenerate-simplex", "edge " + edge_str(e) + " has equal endpoints"});
  }
  for (const auto& t : c.triangles) {
    if (t[0] == t[1] || t[1] == t[2])
      r.defects.push_back({"degenerate-simplex", "triangle " + tri_str(t) + " repeats a vertex"});
  }
  // closure
  for (const auto& e : c.edges) {
    for (Vertex v : {e.first, e.second}) {
      if (!c.vertices.count(v))
        r.defects.push_back({"missing-face", "edge " + edge_str(e) + " lacks vertex " + std::to_string(v)});
    }
  }
  for (const auto& t : c.triangles) {
    const Edge faces[3] = {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])};
    for (const auto& e : faces) {
      if (!c.edges.count(e))
        r.defects.push_back({"missing-face", "triangle " + tri_str(t) + " lacks edge " + edge_str(e)});
    }
  }
  // embedded-intersection property (2D only: pairwise edge crossings).
  // 3D embeddings appear only on polyhedron surfaces, which are validated by
  // the polyhedron checks instead.
  if (c.embed_dim == 2) {
    const double eps = 1e-9;
    std::vector<Edge> es(c.edges.begin(), c.edges.end());
    auto pt = [&](Vertex v) {
      auto it = c.coords.find(v);
      return P2{it->second.x, it->second.y};
    };
    bool have_all = true;
    for (Vertex v : c.vertices)
      if (!c.coords.count(v)) {
        r.defects.push_back({"missing-coordinates", "vertex " + std::to_string(v)});
        have_all = false;
      }
    if (have_all) {
      for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
          const Edge &e1 = es[i], &e2 = es[j];
          bool sac = e1.first == e2.first, sad = e1.first == e2.second;
          bool sbc = e1.second == e2.first, sbd = e1.second == e2.second;
          if (segments_conflict(pt(e1.first), pt(e1.second), pt(e2.first), pt(e2.second),
                                sac, sad, sbc, sbd, eps)) {
            r.defects.push_back({"embedded-intersection",
                                 "edges " + edge_str(e1) + " and " + edge_str(e2) + " cross"});
          }
        }
      }
    }
  }
  r.connected = skeleton_connected(c);
  return r;
}

CountVector counts(const Complex2& c) {
  return CountVector{(long long)c.vertices.size(), (long long)c.edges.size(),
                     (long long)c.triangles.size()};
}

long long euler_characteristic(const Complex2& c) {
  auto n = counts(c);
  return n.n0 - n.n1 + n.n2;
}

std::map<Edge, std::vector<Tri>> edge_triangle_incidence(const Complex2& c) {
  std::map<Edge, std::vector<Tri>> inc;
  for (const auto& e : c.edges) inc[e];  // keep triangle-free edges visible
  for (const auto& t : c.triangles) {
    inc[make_edge(t[0], t[1])].push_back(t);
    inc[make_edge(t[1], t[2])].push_back(t);
    inc[make_edge(t[0], t[2])].push_back(t);
  }
  return inc;
}

std::vector<std::vector<Vertex>> boundary_cycles(const Complex2& c) {
  auto inc = edge_triangle_incidence(c);
  std::map<Vertex, std::vector<Vertex>> nbr;  // over boundary edges only
  for (const auto& [e, ts] : inc) {
    if (ts.size() == 1) {
      nbr[e.first].push_back(e.second);
      nbr[e.second].push_back(e.first);
    }
  }
  for (auto& [v, ns] : nbr) {
    if (ns.size() != 2)
      throw Error("NonManifoldBoundary",
                  std::to_string(ns.size()) + " boundary edges meet at vertex " + std::to_string(v));
    std::sort(ns.begin(), ns.end());
  }
  std::vector<std::vector<Vertex>> cycles;
  std::set<Vertex> seen;
  for (const auto& [start, ns] : nbr) {  // map order: smallest start first
    if (seen.count(start)) continue;
    std::vector<Vertex> cyc{start};
    seen.insert(start);
    Vertex prev = start, cur = ns[0];  // walk toward the smaller neighbor
    while (cur != start) {
      cyc.push_back(cur);
      seen.insert(cur);
      const auto& cn = nbr.at(cur);
      Vertex next = (cn[0] == prev) ? cn[1] : cn[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

long long compute_genus(const Complex2& c, bool orientable) {
  auto inc = edge_triangle_incidence(c);
  for (const auto& [e, ts] : inc) {
    if (ts.size() != 2)
      throw Error("NotClosedSurface", "edge " + edge_str(e) + " lies in " +
                                          std::to_string(ts.size()) + " triangles (need 2)");
  }
  if (c.triangles.empty()) throw Error("NotClosedSurface", "no triangles");
  if (!triangle_graph_connected(c)) throw Error("NotClosedSurface", "complex is not connected");
  long long chi = euler_characteristic(c);
  long long defect = 2 - chi;
  if (orientable) {
    if (defect % 2 != 0)
      throw Error("OddDefect", "2 - chi = " + std::to_string(defect) +
                                   " is odd; no orientable closed surface has this characteristic");
    return defect / 2;
  }
  return defect;
}

bool skeleton_connected(const Complex2& c) {
  if (c.vertices.empty()) return true;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : c.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<Vertex> seen;
  std::queue<Vertex> q;
  q.push(*c.vertices.begin());
  seen.insert(*c.vertices.begin());
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (Vertex w : it->second)
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == c.vertices.size();
}

bool triangle_graph_connected(const Complex2& c) {
  if (c.triangles.empty()) return c.vertices.empty();
  auto inc = edge_triangle_incidence(c);
  std::set<Tri> seen;
  std::queue<Tri> q;
  q.push(*c.triangles.begin());
  seen.insert(*c.triangles.begin());
  while (!q.empty()) {
    Tri t = q.front();
    q.pop();
    const Edge faces[3] = {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])};
    for (const auto& e : faces)
      for (const auto& u : inc.at(e))
        if (seen.insert(u).second) q.push(u);
  }
  if (seen.size() != c.triangles.size()) return false;
  // stray vertices/edges not carried by any triangle also break connectivity
  std::set<Vertex> carried;
  for (const auto& t : c.triangles) carried.insert(t.begin(), t.end());
  for (const auto& e : c.edges) {
    if (inc.at(e).empty()) return false;
  }
  return carried.size() == c.vertices.size();
}

}  // namespace eulerchi

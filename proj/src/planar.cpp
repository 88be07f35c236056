#include "eulerchi/planar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace eulerchi::planar {

namespace {

// Union-find whose class representative is the smallest vertex id.
struct UnionFind {
  std::map<Vertex, Vertex> parent;

  Vertex find(Vertex v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent.emplace(v, v);
      return v;
    }
    Vertex root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) {
      Vertex next = parent[v];
      parent[v] = root;
      v = next;
    }
    return root;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Edge -> number of cells using it, where a cell is a triangle (triangulated
// mode) or a polygonal face (drawing mode).
std::map<Edge, int> cell_edge_use(const PlanarPolygon& k) {
  std::map<Edge, int> use;
  if (k.triangulated()) {
    for (const Tri& t : k.complex.triangles) {
      ++use[make_edge(t[0], t[1])];
      ++use[make_edge(t[0], t[2])];
      ++use[make_edge(t[1], t[2])];
    }
  } else {
    for (const auto& f : k.faces) {
      if (f.size() < 3) continue;
      for (std::size_t i = 0; i < f.size(); ++i)
        ++use[make_edge(f[i], f[(i + 1) % f.size()])];
    }
  }
  return use;
}

std::set<Edge> boundary_edge_set(const PlanarPolygon& k) {
  std::set<Edge> out;
  for (const auto& [e, n] : cell_edge_use(k))
    if (n == 1) out.insert(e);
  return out;
}

UnionFind scheme_classes(const PlanarPolygon& k) {
  UnionFind uf;
  for (Vertex v : k.complex.vertices) uf.find(v);
  for (const EdgePairing& p : k.scheme.pairs) {
    auto g1 = p.gen1();
    auto g2 = p.gen2();
    uf.unite(g1.first, g1.second);
    uf.unite(g2.first, g2.second);
  }
  for (const auto& [a, b] : k.scheme.vertex_pairs) uf.unite(a, b);
  return uf;
}

}  // namespace

std::vector<Tri> PlanarPolygon::ids_or_sorted() const {
  if (!tri_order.empty()) return tri_order;
  return {complex.triangles.begin(), complex.triangles.end()};
}

std::vector<Vertex> boundary_cycle(const PlanarPolygon& k) {
  std::set<Edge> bd = boundary_edge_set(k);
  if (bd.empty())
    throw Error("SemanticError", "polygon has no boundary edges");
  std::map<Vertex, std::vector<Vertex>> nbr;
  for (const Edge& e : bd) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  for (const auto& [v, ns] : nbr)
    if (ns.size() != 2)
      throw Error("NonManifoldBoundary",
                  std::to_string(ns.size()) + " boundary edges meet at vertex " +
                      std::to_string(v));
  Vertex start = nbr.begin()->first;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = std::min(nbr[start][0], nbr[start][1]);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& ns = nbr[cur];
    Vertex next = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != nbr.size())
    throw Error("SemanticError", "expected a single boundary cycle, found " +
                                     std::to_string(nbr.size() - cycle.size()) +
                                     " extra boundary vertices");
  return cycle;
}

ValidationReport validate_polygon(const PlanarPolygon& k) {
  ValidationReport r = validate(k.complex);
  if (k.complex.embed_dim != 2)
    r.defects.push_back(
        {"missing-coordinates", "planar polygons need a 2D embedding"});

  if (k.triangulated()) {
    if (k.complex.triangles.empty()) {
      r.defects.push_back({"empty", "polygon has no triangles"});
      return r;
    }
    if (euler_characteristic(k.complex) != 1)
      r.defects.push_back(
          {"wrong-euler",
           "a disk needs n0-n1+n2 = 1, got " +
               std::to_string(euler_characteristic(k.complex))});
    try {
      auto cycles = boundary_cycles(k.complex);
      if (cycles.size() != 1)
        r.defects.push_back({"multiple-boundary-cycles",
                             std::to_string(cycles.size()) +
                                 " boundary cycles, a disk has exactly 1"});
    } catch (const Error& e) {
      r.defects.push_back({"non-manifold-boundary", e.what()});
    }
    if (!triangle_graph_connected(k.complex)) {
      r.defects.push_back(
          {"disconnected", "triangles do not form one edge-connected disk"});
      r.connected = false;
    }
  } else {
    if (!k.complex.triangles.empty())
      r.defects.push_back(
          {"mixed-mode",
           "polygonal drawing carries triangles outside its face list"});
    for (const auto& f : k.faces) {
      if (f.size() < 3) {
        r.defects.push_back({"bad-face", "face with fewer than 3 vertices"});
        continue;
      }
      std::set<Vertex> seen(f.begin(), f.end());
      if (seen.size() != f.size())
        r.defects.push_back({"bad-face", "face repeats a vertex"});
      for (std::size_t i = 0; i < f.size(); ++i) {
        Vertex a = f[i], b = f[(i + 1) % f.size()];
        if (!k.complex.vertices.count(a))
          r.defects.push_back(
              {"bad-face", "face uses unknown vertex " + std::to_string(a)});
        else if (!k.complex.has_edge(a, b))
          r.defects.push_back(
              {"bad-face", "face side " + edge_str(make_edge(a, b)) +
                               " is not an edge of the complex"});
      }
    }
    long long n0 = static_cast<long long>(k.complex.vertices.size());
    long long n1 = static_cast<long long>(k.complex.edges.size());
    long long chi = n0 - n1 + static_cast<long long>(k.faces.size());
    if (chi != 1)
      r.defects.push_back(
          {"wrong-euler",
           "a disk drawing needs n0-n1+faces = 1, got " + std::to_string(chi)});
    for (const auto& [e, n] : cell_edge_use(k))
      if (n > 2)
        r.defects.push_back(
            {"non-manifold-edge",
             edge_str(e) + " lies on " + std::to_string(n) + " faces"});
    try {
      boundary_cycle(k);
    } catch (const Error& e) {
      r.defects.push_back({"bad-boundary", e.what()});
    }
  }

  if (!k.tri_order.empty()) {
    std::multiset<Tri> a(k.tri_order.begin(), k.tri_order.end());
    std::multiset<Tri> b(k.complex.triangles.begin(),
                         k.complex.triangles.end());
    if (a != b)
      r.defects.push_back({"bad-triangle-order",
                           "triangle order does not list each triangle of the "
                           "complex exactly once"});
  }
  return r;
}

std::map<Vertex, Vertex> vertex_classes(const PlanarPolygon& k) {
  UnionFind uf = scheme_classes(k);
  std::map<Vertex, Vertex> out;
  for (Vertex v : k.complex.vertices) out[v] = uf.find(v);
  return out;
}

ValidationReport validate_scheme(const PlanarPolygon& k) {
  ValidationReport r;
  std::set<Edge> bd = boundary_edge_set(k);
  std::set<Vertex> bdv;
  for (const Edge& e : bd) {
    bdv.insert(e.first);
    bdv.insert(e.second);
  }

  // declared pairings reference distinct boundary edges, each at most once
  std::map<Edge, int> pair_use;
  std::set<std::pair<Edge, Edge>> declared;
  for (const EdgePairing& p : k.scheme.pairs) {
    bool ok = true;
    for (Vertex v : {p.a1, p.b1, p.a2, p.b2})
      if (!k.complex.vertices.count(v)) {
        r.defects.push_back({"identify-unknown-vertex",
                             "identification names vertex " +
                                 std::to_string(v) + " which does not exist"});
        ok = false;
      }
    if (!ok) continue;
    Edge e1 = p.first(), e2 = p.second();
    for (const Edge& e : {e1, e2})
      if (!bd.count(e)) {
        r.defects.push_back(
            {"identify-non-boundary",
             "identified edge " + edge_str(e) + " is not a boundary edge"});
        ok = false;
      }
    if (!ok) continue;
    if (e1 == e2) {
      r.defects.push_back({"self-identified-edge",
                           edge_str(e1) + " is identified with itself"});
      continue;
    }
    ++pair_use[e1];
    ++pair_use[e2];
    declared.insert({std::min(e1, e2), std::max(e1, e2)});
  }
  for (const auto& [e, n] : pair_use)
    if (n > 1)
      r.defects.push_back(
          {"edge-multiply-identified",
           edge_str(e) + " appears in " + std::to_string(n) + " pairings"});
  for (const auto& [a, b] : k.scheme.vertex_pairs) {
    for (Vertex v : {a, b})
      if (!k.complex.vertices.count(v))
        r.defects.push_back({"identify-unknown-vertex",
                             "identification names vertex " +
                                 std::to_string(v) + " which does not exist"});
      else if (!bdv.count(v))
        r.defects.push_back({"identify-non-boundary",
                             "identified vertex " + std::to_string(v) +
                                 " is not a boundary vertex"});
  }
  if (!r.defects.empty()) return r;

  // quotient admissibility
  UnionFind uf = scheme_classes(k);

  for (const Edge& e : k.complex.edges)
    if (uf.find(e.first) == uf.find(e.second))
      r.defects.push_back(
          {"loop-edge", edge_str(e) + " collapses to a loop at vertex " +
                            std::to_string(uf.find(e.first))});

  std::map<Edge, std::vector<Edge>> edge_images;
  for (const Edge& e : k.complex.edges) {
    Vertex a = uf.find(e.first), b = uf.find(e.second);
    if (a == b) continue;  // already reported as loop-edge
    edge_images[make_edge(a, b)].push_back(e);
  }
  for (const auto& [qe, pre] : edge_images) {
    if (pre.size() == 1) continue;
    if (pre.size() > 2) {
      r.defects.push_back({"edge-multiply-identified",
                           std::to_string(pre.size()) +
                               " edges collapse onto " + edge_str(qe)});
      continue;
    }
    if (!declared.count({std::min(pre[0], pre[1]), std::max(pre[0], pre[1])}))
      r.defects.push_back(
          {"undeclared-edge-merge", edge_str(pre[0]) + " and " +
                                        edge_str(pre[1]) +
                                        " collapse onto the same edge "
                                        "without being a declared pair"});
  }

  std::map<Tri, std::vector<Tri>> tri_images;
  for (const Tri& t : k.complex.triangles) {
    Vertex a = uf.find(t[0]), b = uf.find(t[1]), c = uf.find(t[2]);
    if (a == b || a == c || b == c) {
      r.defects.push_back({"degenerate-triangle",
                           tri_str(t) + " collapses onto a degenerate image"});
      continue;
    }
    tri_images[make_tri(a, b, c)].push_back(t);
  }
  for (const auto& [qt, pre] : tri_images)
    if (pre.size() > 1)
      r.defects.push_back({"duplicate-triangle",
                           std::to_string(pre.size()) +
                               " triangles collapse onto " + tri_str(qt)});

  std::map<Edge, int> q_incidence;
  for (const auto& [qt, pre] : tri_images) {
    ++q_incidence[make_edge(qt[0], qt[1])];
    ++q_incidence[make_edge(qt[0], qt[2])];
    ++q_incidence[make_edge(qt[1], qt[2])];
  }
  for (const auto& [qe, n] : q_incidence)
    if (n > 2)
      r.defects.push_back(
          {"overfolded-edge", edge_str(qe) + " would lie on " +
                                  std::to_string(n) + " triangles"});
  return r;
}

Complex2 build_quotient(const PlanarPolygon& k) {
  ValidationReport rep = validate_scheme(k);
  if (!rep.valid()) {
    const Defect& d = rep.defects.front();
    throw Error("InadmissibleScheme", d.kind + ": " + d.detail);
  }
  UnionFind uf = scheme_classes(k);
  Complex2 q;
  for (Vertex v : k.complex.vertices) q.add_vertex(uf.find(v));
  for (const Edge& e : k.complex.edges)
    q.add_edge(uf.find(e.first), uf.find(e.second));
  for (const Tri& t : k.complex.triangles)
    q.add_triangle(uf.find(t[0]), uf.find(t[1]), uf.find(t[2]));
  return q;
}

long long boundary_chi(const PlanarPolygon& k) {
  ValidationReport rep = validate_scheme(k);
  if (!rep.valid()) {
    const Defect& d = rep.defects.front();
    throw Error("InadmissibleScheme", d.kind + ": " + d.detail);
  }
  UnionFind uf = scheme_classes(k);
  std::set<Vertex> qv;
  std::set<Edge> qe;
  for (const Edge& e : boundary_edge_set(k)) {
    Vertex a = uf.find(e.first), b = uf.find(e.second);
    qv.insert(a);
    qv.insert(b);
    qe.insert(make_edge(a, b));
  }
  return static_cast<long long>(qv.size()) - static_cast<long long>(qe.size());
}

}  // namespace eulerchi::planar

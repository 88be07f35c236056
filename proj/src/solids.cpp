#include "eulerchi/solids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace eulerchi::solids {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 scale(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 face_centroid(const ConvexPolyhedron& p, const std::vector<Vertex>& f) {
  Vec3 g{0, 0, 0};
  for (Vertex v : f) g = add(g, p.coords.at(v));
  return scale(g, 1.0 / f.size());
}

Vec3 face_normal(const ConvexPolyhedron& p, const std::vector<Vertex>& f) {
  Vec3 n{0, 0, 0};  // Newell's method
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec3& a = p.coords.at(f[i]);
    const Vec3& b = p.coords.at(f[(i + 1) % f.size()]);
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

double diameter(const ConvexPolyhedron& p) {
  double d = 0;
  for (auto i = p.coords.begin(); i != p.coords.end(); ++i)
    for (auto j = std::next(i); j != p.coords.end(); ++j)
      d = std::max(d, norm(sub(i->second, j->second)));
  return d;
}

struct Pt2 {
  double x = 0, y = 0;
};

double cross2(const Pt2& o, const Pt2& a, const Pt2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Proper or improper crossing of two segments that share no endpoint.
bool segments_clash(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& d) {
  double span = std::abs(b.x - a.x) + std::abs(b.y - a.y) + std::abs(d.x - c.x) +
                std::abs(d.y - c.y) + 1.0;
  double eps = 1e-12 * span * span;
  double d1 = cross2(a, b, c), d2 = cross2(a, b, d);
  double d3 = cross2(c, d, a), d4 = cross2(c, d, b);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
      ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
    return true;
  auto between = [&](const Pt2& u, const Pt2& v, const Pt2& q, double cr) {
    if (std::abs(cr) > eps) return false;
    return std::min(u.x, v.x) - 1e-12 <= q.x && q.x <= std::max(u.x, v.x) + 1e-12 &&
           std::min(u.y, v.y) - 1e-12 <= q.y && q.y <= std::max(u.y, v.y) + 1e-12;
  };
  return between(a, b, c, d1) || between(a, b, d, d2) || between(c, d, a, d3) ||
         between(c, d, b, d4);
}

}  // namespace

CountVector ConvexPolyhedron::counts() const {
  std::set<Edge> edges;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i)
      edges.insert(make_edge(f[i], f[(i + 1) % f.size()]));
  return CountVector{static_cast<long long>(coords.size()),
                     static_cast<long long>(edges.size()),
                     static_cast<long long>(faces.size())};
}

long long ConvexPolyhedron::euler_characteristic() const {
  CountVector c = counts();
  return c.n0 - c.n1 + c.n2;
}

ValidationReport validate_polyhedron(const ConvexPolyhedron& p) {
  ValidationReport rep;
  auto flag = [&](const std::string& kind, const std::string& detail) {
    rep.defects.push_back(Defect{kind, detail});
  };

  std::set<Vertex> used;
  std::map<std::pair<Vertex, Vertex>, int> directed;
  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const auto& f = p.faces[fi];
    if (f.size() < 3) {
      flag("bad-face", "face " + std::to_string(fi) + " has fewer than 3 vertices");
      continue;
    }
    std::set<Vertex> once(f.begin(), f.end());
    if (once.size() != f.size())
      flag("bad-face", "face " + std::to_string(fi) + " repeats a vertex");
    for (Vertex v : f) {
      used.insert(v);
      if (!p.coords.count(v))
        flag("missing-coordinates", "vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i < f.size(); ++i)
      directed[{f[i], f[(i + 1) % f.size()]}]++;
  }
  for (const auto& [v, xyz] : p.coords)
    if (!used.count(v)) flag("unused-vertex", "vertex " + std::to_string(v));

  std::set<Edge> undirected;
  for (const auto& [de, cnt] : directed) {
    if (cnt > 1)
      flag("inconsistent-orientation", "directed edge " +
                                           std::to_string(de.first) + "-" +
                                           std::to_string(de.second) +
                                           " appears " + std::to_string(cnt) +
                                           " times");
    undirected.insert(make_edge(de.first, de.second));
  }
  for (const Edge& e : undirected) {
    int total = 0;
    auto a = directed.find({e.first, e.second});
    auto b = directed.find({e.second, e.first});
    if (a != directed.end()) total += a->second;
    if (b != directed.end()) total += b->second;
    if (total != 2)
      flag("non-manifold-edge",
           "edge " + edge_str(e) + " lies on " + std::to_string(total) + " faces");
    else if (a == directed.end() || b == directed.end())
      flag("inconsistent-orientation",
           "edge " + edge_str(e) + " is traversed twice in the same direction");
  }

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const auto& f = p.faces[fi];
    if (f.size() < 4) continue;
    bool have = true;
    for (Vertex v : f) have = have && p.coords.count(v);
    if (!have) continue;
    Vec3 n = face_normal(p, f);
    double ln = norm(n);
    if (ln == 0) {
      flag("non-planar-face", "face " + std::to_string(fi) + " has no normal");
      continue;
    }
    n = scale(n, 1.0 / ln);
    Vec3 g = face_centroid(p, f);
    double worst = 0, sc = 0;
    for (Vertex v : f) {
      worst = std::max(worst, std::abs(dot(sub(p.coords.at(v), g), n)));
      sc = std::max(sc, norm(sub(p.coords.at(v), g)));
    }
    if (worst > 1e-9 * std::max(1.0, sc))
      flag("non-planar-face", "face " + std::to_string(fi) + " deviates from its plane");
  }

  // connectivity over the face-adjacency graph
  if (!p.faces.empty()) {
    std::map<Edge, std::vector<std::size_t>> by_edge;
    for (std::size_t fi = 0; fi < p.faces.size(); ++fi)
      for (std::size_t i = 0; i < p.faces[fi].size(); ++i)
        by_edge[make_edge(p.faces[fi][i], p.faces[fi][(i + 1) % p.faces[fi].size()])]
            .push_back(fi);
    std::vector<bool> vis(p.faces.size(), false);
    std::vector<std::size_t> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < p.faces[f].size(); ++i)
        for (std::size_t g :
             by_edge[make_edge(p.faces[f][i], p.faces[f][(i + 1) % p.faces[f].size()])])
          if (!vis[g]) {
            vis[g] = true;
            stack.push_back(g);
          }
    }
    if (std::find(vis.begin(), vis.end(), false) != vis.end()) {
      rep.connected = false;
      flag("disconnected", "faces do not form a connected surface");
    }
  }
  return rep;
}

AngleSum descartes_angle_sum(const ConvexPolyhedron& p) {
  AngleSum out;
  for (const auto& f : p.faces) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& prev = p.coords.at(f[(i + n - 1) % n]);
      const Vec3& cur = p.coords.at(f[i]);
      const Vec3& next = p.coords.at(f[(i + 1) % n]);
      Vec3 a = sub(prev, cur), b = sub(next, cur);
      double la = norm(a), lb = norm(b);
      if (la == 0 || lb == 0)
        throw Error("DegenerateAngle",
                    "zero-length side at vertex " + std::to_string(f[i]));
      double c = std::clamp(dot(a, b) / (la * lb), -1.0, 1.0);
      out.total_right_angles += std::acos(c) / (std::numbers::pi / 2.0);
    }
  }
  out.expected = 4.0 * (static_cast<double>(p.coords.size()) - 2.0);
  out.defect = std::abs(out.total_right_angles - out.expected);
  return out;
}

planar::PlanarPolygon schlegel(const ConvexPolyhedron& p, int face_index) {
  if (face_index < 0 || face_index >= static_cast<int>(p.faces.size()))
    throw Error("UsageError", "face index " + std::to_string(face_index) +
                                  " out of range (polyhedron has " +
                                  std::to_string(p.faces.size()) + " faces)");
  const auto& removed = p.faces[face_index];
  Vec3 g = face_centroid(p, removed);
  Vec3 n = face_normal(p, removed);
  double ln = norm(n);
  if (ln == 0) throw Error("DegenerateAngle", "removed face has no normal");
  n = scale(n, 1.0 / ln);
  Vec3 u = sub(p.coords.at(removed[1]), p.coords.at(removed[0]));
  u = scale(u, 1.0 / norm(u));
  Vec3 w = cross(n, u);

  std::set<Edge> edges;
  for (const auto& f : p.faces)
    for (std::size_t i = 0; i < f.size(); ++i)
      edges.insert(make_edge(f[i], f[(i + 1) % f.size()]));

  double h = 2.0 * diameter(p);
  for (int attempt = 0; attempt <= 10; ++attempt, h /= 2.0) {
    Vec3 eye = add(g, scale(n, h));
    std::map<Vertex, Pt2> flat;
    bool degenerate = false;
    for (const auto& [v, x] : p.coords) {
      // ray eye -> x meets the removed face's plane
      double denom = dot(sub(x, eye), n);
      if (std::abs(denom) < 1e-15) {
        degenerate = true;
        break;
      }
      double s = dot(sub(g, eye), n) / denom;
      Vec3 hit = add(eye, scale(sub(x, eye), s));
      flat[v] = Pt2{dot(sub(hit, g), u), dot(sub(hit, g), w)};
    }
    if (degenerate) continue;

    bool overlap = false;
    for (auto i = edges.begin(); i != edges.end() && !overlap; ++i)
      for (auto j = std::next(i); j != edges.end() && !overlap; ++j) {
        if (i->first == j->first || i->first == j->second ||
            i->second == j->first || i->second == j->second)
          continue;
        if (segments_clash(flat[i->first], flat[i->second], flat[j->first],
                           flat[j->second]))
          overlap = true;
      }
    if (overlap) continue;

    planar::PlanarPolygon out;
    out.complex.embed_dim = 2;
    for (const auto& [v, q] : flat) {
      out.complex.add_vertex(v);
      out.complex.coords[v] = Vec3{q.x, q.y, 0.0};
    }
    for (const Edge& e : edges) out.complex.add_edge(e.first, e.second);
    for (std::size_t fi = 0; fi < p.faces.size(); ++fi)
      if (static_cast<int>(fi) != face_index) out.faces.push_back(p.faces[fi]);
    return out;
  }
  throw Error("ProjectionOverlap",
              "no crossing-free viewpoint found above the removed face");
}

planar::PlanarPolygon triangulate_faces(const planar::PlanarPolygon& k) {
  if (k.faces.empty()) return k;
  planar::PlanarPolygon out;
  out.complex = k.complex;
  out.scheme = k.scheme;

  for (std::size_t fi = 0; fi < k.faces.size(); ++fi) {
    const auto& f = k.faces[fi];
    const std::size_t n = f.size();
    if (n == 3) {
      out.complex.add_triangle(f[0], f[1], f[2]);
      out.tri_order.push_back(make_tri(f[0], f[1], f[2]));
      continue;
    }
    std::vector<Pt2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& c = k.complex.coords.at(f[i]);
      pts[i] = Pt2{c.x, c.y};
    }
    double area2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Pt2& a = pts[i];
      const Pt2& b = pts[(i + 1) % n];
      area2 += a.x * b.y - a.y * b.x;
    }
    double orient = area2 >= 0 ? 1.0 : -1.0;

    // fan from the lowest-id vertex when every fan triangle is positive and
    // no diagonal duplicates an existing edge
    std::size_t lo = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (f[i] < f[lo]) lo = i;
    bool fan_ok = true;
    for (std::size_t s = 2; s + 1 < n && fan_ok; ++s)
      if (out.complex.has_edge(f[lo], f[(lo + s) % n])) fan_ok = false;
    for (std::size_t s = 1; s + 1 < n && fan_ok; ++s)
      if (orient * cross2(pts[lo], pts[(lo + s) % n], pts[(lo + s + 1) % n]) <= 0)
        fan_ok = false;
    if (fan_ok) {
      for (std::size_t s = 1; s + 1 < n; ++s) {
        out.complex.add_triangle(f[lo], f[(lo + s) % n], f[(lo + s + 1) % n]);
        out.tri_order.push_back(make_tri(f[lo], f[(lo + s) % n], f[(lo + s + 1) % n]));
      }
      continue;
    }

    // ear clipping
    std::vector<std::size_t> ring(n);
    for (std::size_t i = 0; i < n; ++i) ring[i] = i;
    while (ring.size() > 3) {
      bool clipped = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        std::size_t ia = ring[(i + ring.size() - 1) % ring.size()];
        std::size_t ib = ring[i];
        std::size_t ic = ring[(i + 1) % ring.size()];
        if (orient * cross2(pts[ia], pts[ib], pts[ic]) <= 0) continue;
        bool empty = true;
        for (std::size_t j : ring) {
          if (j == ia || j == ib || j == ic) continue;
          double s1 = orient * cross2(pts[ia], pts[ib], pts[j]);
          double s2 = orient * cross2(pts[ib], pts[ic], pts[j]);
          double s3 = orient * cross2(pts[ic], pts[ia], pts[j]);
          if (s1 >= 0 && s2 >= 0 && s3 >= 0) {
            empty = false;
            break;
          }
        }
        if (!empty || out.complex.has_edge(f[ia], f[ic])) continue;
        out.complex.add_triangle(f[ia], f[ib], f[ic]);
        out.tri_order.push_back(make_tri(f[ia], f[ib], f[ic]));
        ring.erase(ring.begin() + i);
        clipped = true;
        break;
      }
      if (!clipped)
        throw Error("NonSimpleFace",
                    "face " + std::to_string(fi) + " cannot be triangulated");
    }
    out.complex.add_triangle(f[ring[0]], f[ring[1]], f[ring[2]]);
    out.tri_order.push_back(make_tri(f[ring[0]], f[ring[1]], f[ring[2]]));
  }
  return out;
}

ConvexPolyhedron make_solid(const std::string& name) {
  ConvexPolyhedron p;
  if (name == "tetrahedron") {
    p.coords = {{0, {1, 1, 1}}, {1, {1, -1, -1}}, {2, {-1, 1, -1}}, {3, {-1, -1, 1}}};
    p.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  } else if (name == "cube") {
    p.coords = {{0, {-1, -1, -1}}, {1, {1, -1, -1}}, {2, {1, 1, -1}},
                {3, {-1, 1, -1}},  {4, {-1, -1, 1}}, {5, {1, -1, 1}},
                {6, {1, 1, 1}},    {7, {-1, 1, 1}}};
    p.faces = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
               {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  } else if (name == "octahedron") {
    p.coords = {{0, {1, 0, 0}},  {1, {-1, 0, 0}}, {2, {0, 1, 0}},
                {3, {0, -1, 0}}, {4, {0, 0, 1}},  {5, {0, 0, -1}}};
    p.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
               {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  } else {
    throw Error("UnknownSurface", "no built-in solid named '" + name + "'");
  }
  return p;
}

ConvexPolyhedron random_convex(int n, unsigned seed) {
  if (n < 4) throw Error("UsageError", "a convex polyhedron needs at least 4 points");
  std::mt19937 rng(seed);
  auto unit = [&]() {  // deterministic uniform double in [0,1)
    return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
  };
  std::map<Vertex, Vec3> pts;
  for (int i = 0; i < n; ++i) {
    double z = 2.0 * unit() - 1.0;
    double phi = 2.0 * std::numbers::pi * unit();
    double r = 1.0 + 0.2 * unit();  // radial jitter keeps points in convex position
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    pts[i] = Vec3{r * s * std::cos(phi), r * s * std::sin(phi), r * z};
  }

  // brute-force hull facets: a triple is a facet when all other points lie
  // strictly on one side of its plane
  ConvexPolyhedron p;
  p.coords = pts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        double pos = 0, neg = 0;
        bool split = false;
        for (int m = 0; m < n && !split; ++m) {
          if (m == i || m == j || m == k) continue;
          double side = dot(sub(pts[m], pts[i]), nrm);
          pos = std::max(pos, side);
          neg = std::min(neg, side);
          if (pos > 0 && neg < 0) split = true;
        }
        if (split) continue;
        if (pos > 0)  // others on the positive side: flip to face outward
          p.faces.push_back({i, k, j});
        else
          p.faces.push_back({i, j, k});
      }
  return p;
}

}  // namespace eulerchi::solids

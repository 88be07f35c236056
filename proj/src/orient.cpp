#include "eulerchi/orient.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace eulerchi::orient {

namespace {

SignedEdge normalized(Vertex x, Vertex y, int sign) {
  if (x > y) {
    std::swap(x, y);
    sign = -sign;
  }
  return SignedEdge{Edge{x, y}, sign};
}

}  // namespace

std::array<SignedEdge, 3> induced_boundary(const OrientedTriangle& t) {
  const auto o = t.order();
  // boundary of [o0,o1,o2] = +[o1,o2] - [o0,o2] + [o0,o1]
  return {normalized(o[1], o[2], +1), normalized(o[0], o[2], -1),
          normalized(o[0], o[1], +1)};
}

bool compatible(const OrientedTriangle& a, const OrientedTriangle& b,
                const Edge& shared) {
  if (a.tri == b.tri)
    throw Error("NotSharedFace",
                "compatibility needs two distinct triangles, got " +
                    tri_str(a.tri) + " twice");
  auto sign_of = [&](const OrientedTriangle& t) -> int {
    for (const SignedEdge& se : induced_boundary(t))
      if (se.edge == shared) return se.sign;
    return 0;
  };
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sa == 0 || sb == 0)
    throw Error("NotSharedFace", edge_str(shared) +
                                     " is not a shared face of " +
                                     tri_str(a.tri) + " and " + tri_str(b.tri));
  return sa != sb;
}

OrientabilityResult check_orientable(const Complex2& c) {
  const auto incidence = edge_triangle_incidence(c);
  for (const auto& [e, ts] : incidence)
    if (ts.size() > 2)
      throw Error("NonPseudomanifold",
                  edge_str(e) + " lies on " + std::to_string(ts.size()) +
                      " triangles");

  std::map<Tri, bool> flipped;      // chosen orientation per visited triangle
  std::map<Tri, Tri> parent;        // BFS tree for witness chains
  OrientabilityResult result;
  result.orientable = true;

  auto required_flip = [&](const OrientedTriangle& from, const Tri& to,
                           const Edge& shared) {
    OrientedTriangle cand{to, false};
    return compatible(from, cand, shared) ? false : true;
  };

  auto chain_to_root = [&](const Tri& t) {
    std::vector<OrientedTriangle> chain;
    Tri cur = t;
    while (true) {
      chain.push_back({cur, flipped.at(cur)});
      auto it = parent.find(cur);
      if (it == parent.end()) break;
      cur = it->second;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  for (const Tri& root : c.triangles) {
    if (flipped.count(root)) continue;
    flipped[root] = false;
    std::deque<Tri> queue{root};
    while (!queue.empty()) {
      Tri u = queue.front();
      queue.pop_front();
      OrientedTriangle ou{u, flipped.at(u)};
      const Edge faces[3] = {make_edge(u[0], u[1]), make_edge(u[0], u[2]),
                             make_edge(u[1], u[2])};
      for (const Edge& e : faces) {
        for (const Tri& w : incidence.at(e)) {
          if (w == u) continue;
          bool need = required_flip(ou, w, e);
          auto it = flipped.find(w);
          if (it == flipped.end()) {
            flipped[w] = need;
            parent[w] = u;
            queue.push_back(w);
          } else if (it->second != need && result.orientable) {
            result.orientable = false;
            result.chain_a = chain_to_root(u);
            result.chain_a.push_back({w, need});
            result.chain_b = chain_to_root(w);
          }
        }
      }
      if (!result.orientable) break;
    }
    if (!result.orientable) break;
  }

  if (result.orientable)
    for (const Tri& t : c.triangles)
      result.orientation.push_back({t, flipped.at(t)});
  return result;
}

}  // namespace eulerchi::orient

#include "eulerchi/surfaces.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace eulerchi::surfaces {

namespace {

using planar::EdgePairing;
using planar::PlanarPolygon;

void put(PlanarPolygon& k, Vertex v, double x, double y) {
  k.complex.add_vertex(v);
  k.complex.coords[v] = Vec3{x, y, 0.0};
}

void tri(PlanarPolygon& k, Vertex a, Vertex b, Vertex c) {
  k.complex.add_triangle(a, b, c);
  k.tri_order.push_back(make_tri(a, b, c));
}

void pair_edges(PlanarPolygon& k, Vertex a1, Vertex b1, Vertex a2, Vertex b2) {
  k.scheme.pairs.push_back(EdgePairing{a1, b1, a2, b2, false});
}

// Fan an apex against a closed region polygon (apex strictly inside, region
// star-shaped from it).
void fan(PlanarPolygon& k, Vertex apex, const std::vector<Vertex>& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    tri(k, apex, poly[i], poly[(i + 1) % poly.size()]);
}

// Square [0,r]^2 zipped across its main diagonal: boundary point (x,y)
// identified with (y,x). Each half of the square is fanned from its own
// interior apex; the diagonal is subdivided at (k,k).
PlanarPolygon sphere_square(int r) {
  PlanarPolygon k;
  k.complex.embed_dim = 2;
  // boundary ids counterclockwise from the zip corner (0,0)
  auto bottom = [&](int x) { return x; };                    // (x,0), x=0..r
  auto right = [&](int y) { return y == 0 ? r : r + y; };    // (r,y)
  auto top = [&](int x) { return x == r ? 2 * r : 3 * r - x; };  // (x,r)
  auto left = [&](int y) { return y == 0 ? 0 : (y == r ? 3 * r : 4 * r - y); };
  auto diag = [&](int t) { return 4 * r - 1 + t; };          // (t,t), t=1..r-1
  const Vertex apex_low = 5 * r - 1, apex_up = 5 * r;

  for (int x = 0; x <= r; ++x) put(k, bottom(x), x, 0);
  for (int y = 1; y <= r; ++y) put(k, right(y), r, y);
  for (int x = r - 1; x >= 0; --x) put(k, top(x), x, r);
  for (int y = r - 1; y >= 1; --y) put(k, left(y), 0, y);
  for (int t = 1; t <= r - 1; ++t) put(k, diag(t), t, t);
  put(k, apex_low, 2.0 * r / 3.0, r / 3.0);
  put(k, apex_up, r / 3.0, 2.0 * r / 3.0);

  std::vector<Vertex> low_poly, up_poly;
  for (int x = 0; x <= r; ++x) low_poly.push_back(bottom(x));
  for (int y = 1; y <= r; ++y) low_poly.push_back(right(y));
  for (int t = r - 1; t >= 1; --t) low_poly.push_back(diag(t));
  for (int t = 0; t <= r - 1; ++t) up_poly.push_back(t == 0 ? 0 : diag(t));
  for (int x = r; x >= 0; --x) up_poly.push_back(top(x));
  for (int y = r - 1; y >= 1; --y) up_poly.push_back(left(y));
  fan(k, apex_low, low_poly);
  fan(k, apex_up, up_poly);

  for (int x = 0; x < r; ++x)  // (x,0)-(x+1,0) zipped onto (0,x)-(0,x+1)
    pair_edges(k, bottom(x), bottom(x + 1), left(x), left(x + 1));
  for (int y = 0; y < r; ++y)  // (r,y)-(r,y+1) zipped onto (y,r)-(y+1,r)
    pair_edges(k, right(y), right(y + 1), top(y), top(y + 1));
  return k;
}

// Lens with poles W, E: upper and lower boundary arcs identified pairwise,
// horizontal axis chord subdivided. Each half is fanned from one interior
// apex (the sphere), or split into two fanned sub-regions so that no apex
// neighbors both poles (the pinched torus, which also glues W to E).
PlanarPolygon lens(int r, bool pinched) {
  PlanarPolygon k;
  k.complex.embed_dim = 2;
  const Vertex W = 0, E = r;
  auto up = [&](int x) { return x == 0 ? W : (x == r ? E : x); };
  auto low = [&](int x) { return x == 0 ? W : (x == r ? E : r + x); };
  auto axis = [&](int x) { return x == 0 ? W : (x == r ? E : 2 * r - 1 + x); };

  put(k, W, 0, 0);
  for (int x = 1; x <= r - 1; ++x) put(k, up(x), x, x * (r - x));
  put(k, E, r, 0);
  for (int x = 1; x <= r - 1; ++x) put(k, low(x), x, -x * (r - x));
  for (int x = 1; x <= r - 1; ++x) put(k, axis(x), x, 0);

  auto centroid_put = [&](Vertex id, const std::vector<Vertex>& poly) {
    double sx = 0, sy = 0;
    for (Vertex v : poly) {
      sx += k.complex.coords[v].x;
      sy += k.complex.coords[v].y;
    }
    put(k, id, sx / poly.size(), sy / poly.size());
  };

  if (!pinched) {
    const Vertex apex_up = 3 * r - 1, apex_low = 3 * r;
    put(k, apex_up, r / 2.0, r * r / 8.0);
    put(k, apex_low, r / 2.0, -r * r / 8.0);
    std::vector<Vertex> up_poly, low_poly;
    for (int x = 0; x <= r; ++x) up_poly.push_back(up(x));
    for (int x = r - 1; x >= 1; --x) up_poly.push_back(axis(x));
    for (int x = 0; x <= r; ++x) low_poly.push_back(axis(x));
    for (int x = r - 1; x >= 1; --x) low_poly.push_back(low(x));
    fan(k, apex_up, up_poly);
    fan(k, apex_low, low_poly);
  } else {
    // chords (second arc point, first axis point) above and (first arc
    // point, second axis point) below keep the two chord images distinct
    // after the arcs are glued
    const Vertex pa = 3 * r - 1, pb = 3 * r, pc = 3 * r + 1, pd = 3 * r + 2;
    std::vector<Vertex> A{W, up(1), up(2), axis(1)};
    std::vector<Vertex> B{axis(1)};
    for (int x = 2; x <= r - 1; ++x) B.push_back(up(x));
    B.push_back(E);
    for (int x = r - 1; x >= 2; --x) B.push_back(axis(x));
    std::vector<Vertex> C{W, axis(1), axis(2), low(1)};
    std::vector<Vertex> D{low(1)};
    for (int x = 2; x <= r - 1; ++x) D.push_back(axis(x));
    D.push_back(E);
    for (int x = r - 1; x >= 2; --x) D.push_back(low(x));
    centroid_put(pa, A);
    centroid_put(pb, B);
    centroid_put(pc, C);
    centroid_put(pd, D);
    fan(k, pa, A);
    fan(k, pb, B);
    fan(k, pc, C);
    fan(k, pd, D);
  }

  for (int x = 0; x < r; ++x)
    pair_edges(k, up(x), up(x + 1), low(x), low(x + 1));
  if (pinched) k.scheme.vertex_pairs.emplace_back(W, E);
  return k;
}

// r x r grid with a SW-NE diagonal in every cell; `flip_tb` reverses the
// top-bottom pairing, `flip_lr` the left-right pairing.
PlanarPolygon grid_surface(int r, bool flip_tb, bool flip_lr) {
  PlanarPolygon k;
  k.complex.embed_dim = 2;
  auto id = [&](int i, int j) { return j * (r + 1) + i; };
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= r; ++i) put(k, id(i, j), i, j);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      tri(k, id(i, j), id(i + 1, j), id(i + 1, j + 1));
      tri(k, id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  for (int i = 0; i < r; ++i) {
    if (flip_tb)
      pair_edges(k, id(i, 0), id(i + 1, 0), id(r - i, r), id(r - i - 1, r));
    else
      pair_edges(k, id(i, 0), id(i + 1, 0), id(i, r), id(i + 1, r));
  }
  for (int j = 0; j < r; ++j) {
    if (flip_lr)
      pair_edges(k, id(0, j), id(0, j + 1), id(r, r - j), id(r, r - j - 1));
    else
      pair_edges(k, id(0, j), id(0, j + 1), id(r, j), id(r, j + 1));
  }
  return k;
}

// Regular 4g-gon, every side subdivided into r boundary edges, interior
// built from a central vertex plus a concentric inner 4g-gon ring; each
// ring slice is fanned from its two inner corners, split at the outer arc
// midpoint. No interior edge touches two identified arcs, so the quotient
// stays simplicial. Sides follow the word a1 b1 a1' b1' a2 b2 ...
PlanarPolygon genus_surface(int g, int r) {
  PlanarPolygon k;
  k.complex.embed_dim = 2;
  const int sides = 4 * g;
  const Vertex center = 0;
  auto ring = [&](int s) { return 1 + (s % sides); };
  auto bpt = [&](int s, int t) {  // side s, point t (t=0..r; t=r wraps)
    s = s % sides;
    if (t == r) return 1 + sides + ((s + 1) % sides) * r;
    return 1 + sides + s * r + t;
  };

  put(k, center, 0, 0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int s = 0; s < sides; ++s) {
    double a = two_pi * s / sides;
    put(k, ring(s), 2.0 * std::cos(a), 2.0 * std::sin(a));
  }
  for (int s = 0; s < sides; ++s) {
    double a0 = two_pi * s / sides, a1 = two_pi * (s + 1) / sides;
    double x0 = 4.0 * std::cos(a0), y0 = 4.0 * std::sin(a0);
    double x1 = 4.0 * std::cos(a1), y1 = 4.0 * std::sin(a1);
    for (int t = 0; t < r; ++t) {
      double w = static_cast<double>(t) / r;
      put(k, bpt(s, t), x0 + w * (x1 - x0), y0 + w * (y1 - y0));
    }
  }

  for (int s = 0; s < sides; ++s) tri(k, center, ring(s), ring(s + 1));
  const int m = r / 2;
  for (int s = 0; s < sides; ++s) {
    for (int t = 0; t < m; ++t) tri(k, ring(s), bpt(s, t), bpt(s, t + 1));
    tri(k, ring(s), ring(s + 1), bpt(s, m));
    for (int t = m; t < r; ++t) tri(k, ring(s + 1), bpt(s, t), bpt(s, t + 1));
  }

  for (int h = 0; h < g; ++h)
    for (int off : {0, 1}) {
      int s = 4 * h + off, s2 = s + 2;
      for (int t = 0; t < r; ++t)
        pair_edges(k, bpt(s, t), bpt(s, t + 1), bpt(s2, r - t),
                   bpt(s2, r - t - 1));
    }
  return k;
}

}  // namespace

planar::PlanarPolygon make_surface(const std::string& name, int r) {
  if (r < 3)
    throw Error("ResolutionTooSmall",
                "resolution must be at least 3, got " + std::to_string(r));
  if (name == "sphere_square") return sphere_square(r);
  if (name == "sphere_bigon") return lens(r, false);
  if (name == "pinched_torus") return lens(r, true);
  if (name == "torus") return grid_surface(r, false, false);
  if (name == "klein_bottle") return grid_surface(r, false, true);
  if (name == "projective_plane") return grid_surface(r, true, true);
  if (name.rfind("genus_", 0) == 0) {
    const std::string tail = name.substr(6);
    int g = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), g);
    if (ec == std::errc() && ptr == tail.data() + tail.size() && g >= 2)
      return genus_surface(g, r);
    throw Error("UnknownSurface",
                "genus surfaces need an integer genus of at least 2, got '" +
                    name + "'");
  }
  throw Error("UnknownSurface", "no catalog surface named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"sphere_square",    "sphere_bigon", "torus",        "genus_2",
          "genus_3",          "projective_plane", "klein_bottle",
          "pinched_torus"};
}

}  // namespace eulerchi::surfaces

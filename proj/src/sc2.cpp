#include "eulerchi/sc2.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace eulerchi::sc2 {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw Error("SyntaxError", "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void semantic_error(int line, const std::string& what) {
  throw Error("SemanticError", "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    syntax_error(line, "expected an integer, got '" + tok + "'");
  return value;
}

double parse_num(const std::string& tok, int line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    syntax_error(line, "expected a number, got '" + tok + "'");
  return value;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

Document parse(const std::string& text) {
  Document d;
  enum class Section { None, Vertices, Triangles, Identify, Faces };
  Section cur = Section::None;
  bool saw[5] = {false, false, false, false, false};

  std::set<Vertex> known;
  std::set<Tri> tri_seen;
  int vertex_dim = -1;  // -1: undecided

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string name = trim(line.substr(1));
      if (name == "vertices")
        cur = Section::Vertices;
      else if (name == "triangles")
        cur = Section::Triangles;
      else if (name == "identify")
        cur = Section::Identify;
      else if (name == "faces")
        cur = Section::Faces;
      else
        syntax_error(lineno, "unknown section '" + name + "'");
      if (saw[static_cast<int>(cur)])
        syntax_error(lineno, "duplicate section '" + name + "'");
      saw[static_cast<int>(cur)] = true;
      continue;
    }
    auto toks = tokenize(line);
    switch (cur) {
      case Section::None:
        syntax_error(lineno, "content before the first section header");
      case Section::Vertices: {
        if (toks.size() != 1 && toks.size() != 3 && toks.size() != 4)
          syntax_error(lineno, "vertex line needs 'id', 'id x y' or 'id x y z'");
        Document::VertexRow row;
        row.id = parse_int(toks[0], lineno);
        row.dim = static_cast<int>(toks.size()) - 1;
        if (row.dim >= 2) {
          row.xyz.x = parse_num(toks[1], lineno);
          row.xyz.y = parse_num(toks[2], lineno);
          if (row.dim == 3) row.xyz.z = parse_num(toks[3], lineno);
        }
        if (vertex_dim == -1)
          vertex_dim = row.dim;
        else if (vertex_dim != row.dim)
          semantic_error(lineno, "inconsistent vertex dimensions");
        if (!known.insert(row.id).second)
          semantic_error(lineno,
                         "duplicate vertex id " + std::to_string(row.id));
        d.vertices.push_back(row);
        break;
      }
      case Section::Triangles: {
        if (toks.size() != 3)
          syntax_error(lineno, "triangle line needs exactly 3 vertex ids");
        Vertex a = parse_int(toks[0], lineno);
        Vertex b = parse_int(toks[1], lineno);
        Vertex c = parse_int(toks[2], lineno);
        for (Vertex v : {a, b, c})
          if (!known.count(v))
            semantic_error(lineno, "unknown vertex " + std::to_string(v));
        if (a == b || a == c || b == c)
          semantic_error(lineno, "degenerate triangle");
        Tri t = make_tri(a, b, c);
        if (!tri_seen.insert(t).second)
          semantic_error(lineno, "duplicate triangle " + tri_str(t));
        d.triangles.push_back(t);
        break;
      }
      case Section::Identify: {
        if (toks.empty()) syntax_error(lineno, "empty identify line");
        if (toks[0] == "e") {
          bool rev = false;
          if (toks.size() == 6 && toks[5] == "rev")
            rev = true;
          else if (toks.size() != 5)
            syntax_error(lineno, "edge line needs 'e a1 b1 a2 b2 [rev]'");
          planar::EdgePairing p;
          p.a1 = parse_int(toks[1], lineno);
          p.b1 = parse_int(toks[2], lineno);
          p.a2 = parse_int(toks[3], lineno);
          p.b2 = parse_int(toks[4], lineno);
          p.reversed = rev;
          for (Vertex v : {p.a1, p.b1, p.a2, p.b2})
            if (!known.count(v))
              semantic_error(lineno, "unknown vertex " + std::to_string(v));
          if (p.a1 == p.b1 || p.a2 == p.b2)
            semantic_error(lineno, "identified edge is degenerate");
          d.scheme.pairs.push_back(p);
        } else if (toks[0] == "v") {
          if (toks.size() != 3)
            syntax_error(lineno, "vertex line needs 'v a1 a2'");
          Vertex a = parse_int(toks[1], lineno);
          Vertex b = parse_int(toks[2], lineno);
          for (Vertex v : {a, b})
            if (!known.count(v))
              semantic_error(lineno, "unknown vertex " + std::to_string(v));
          if (a == b) semantic_error(lineno, "vertex identified with itself");
          d.scheme.vertex_pairs.emplace_back(a, b);
        } else {
          syntax_error(lineno, "identify lines start with 'e' or 'v'");
        }
        break;
      }
      case Section::Faces: {
        if (toks.size() < 3)
          syntax_error(lineno, "face line needs at least 3 vertex ids");
        std::vector<Vertex> face;
        std::set<Vertex> dup;
        for (const auto& tok : toks) {
          Vertex v = parse_int(tok, lineno);
          if (!known.count(v))
            semantic_error(lineno, "unknown vertex " + std::to_string(v));
          if (!dup.insert(v).second)
            semantic_error(lineno, "face repeats vertex " + std::to_string(v));
          face.push_back(v);
        }
        d.faces.push_back(std::move(face));
        break;
      }
    }
  }

  if (vertex_dim == -1 && !d.vertices.empty()) vertex_dim = 0;
  if (vertex_dim < 0) vertex_dim = 0;

  const bool has_faces = !d.faces.empty();
  const bool has_tris = !d.triangles.empty();
  if (has_faces && has_tris)
    throw Error("SemanticError",
                "document mixes a triangles section with a faces section");
  if (has_faces && vertex_dim == 0)
    throw Error("SemanticError", "a faces section requires coordinates");

  if (vertex_dim == 2)
    d.kind = Document::Kind::Planar;
  else if (has_faces)
    d.kind = Document::Kind::Polyhedron;
  else
    d.kind = Document::Kind::Complex;

  if (d.kind != Document::Kind::Planar && !d.scheme.empty())
    throw Error("SemanticError",
                "an identify section requires a planar (2D) document");
  return d;
}

std::string print(const Document& d) {
  std::string out;
  out += "# vertices\n";
  for (const auto& row : d.vertices) {
    out += std::to_string(row.id);
    if (row.dim >= 2) {
      out += " " + format_double(row.xyz.x) + " " + format_double(row.xyz.y);
      if (row.dim == 3) out += " " + format_double(row.xyz.z);
    }
    out += "\n";
  }
  if (!d.triangles.empty()) {
    out += "# triangles\n";
    for (const Tri& t : d.triangles)
      out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
             std::to_string(t[2]) + "\n";
  }
  if (!d.scheme.empty()) {
    out += "# identify\n";
    for (const auto& p : d.scheme.pairs) {
      out += "e " + std::to_string(p.a1) + " " + std::to_string(p.b1) + " " +
             std::to_string(p.a2) + " " + std::to_string(p.b2);
      if (p.reversed) out += " rev";
      out += "\n";
    }
    for (const auto& [a, b] : d.scheme.vertex_pairs)
      out += "v " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  if (!d.faces.empty()) {
    out += "# faces\n";
    for (const auto& f : d.faces) {
      for (std::size_t i = 0; i < f.size(); ++i)
        out += (i ? " " : "") + std::to_string(f[i]);
      out += "\n";
    }
  }
  return out;
}

Document from_complex(const Complex2& c) {
  std::set<Edge> covered;
  for (const Tri& t : c.triangles) {
    covered.insert(make_edge(t[0], t[1]));
    covered.insert(make_edge(t[0], t[2]));
    covered.insert(make_edge(t[1], t[2]));
  }
  for (const Edge& e : c.edges)
    if (!covered.count(e))
      throw Error("SemanticError",
                  "edge " + edge_str(e) +
                      " lies on no triangle and cannot be serialized");
  Document d;
  d.kind = Document::Kind::Complex;
  for (Vertex v : c.vertices) {
    Document::VertexRow row;
    row.id = v;
    row.dim = c.embed_dim;
    if (c.embed_dim > 0) {
      auto it = c.coords.find(v);
      if (it != c.coords.end()) row.xyz = it->second;
    }
    d.vertices.push_back(row);
  }
  d.triangles.assign(c.triangles.begin(), c.triangles.end());
  if (c.embed_dim == 2) d.kind = Document::Kind::Planar;
  return d;
}

Document from_planar(const planar::PlanarPolygon& k) {
  Document d;
  d.kind = Document::Kind::Planar;
  for (Vertex v : k.complex.vertices) {
    Document::VertexRow row;
    row.id = v;
    row.dim = 2;
    auto it = k.complex.coords.find(v);
    if (it != k.complex.coords.end()) row.xyz = it->second;
    d.vertices.push_back(row);
  }
  if (k.triangulated())
    d.triangles = k.ids_or_sorted();
  else
    d.faces = k.faces;
  d.scheme = k.scheme;
  return d;
}

Document from_polyhedron(const solids::ConvexPolyhedron& p) {
  Document d;
  d.kind = Document::Kind::Polyhedron;
  for (const auto& [v, xyz] : p.coords) {
    Document::VertexRow row;
    row.id = v;
    row.dim = 3;
    row.xyz = xyz;
    d.vertices.push_back(row);
  }
  d.faces = p.faces;
  return d;
}

Complex2 to_complex(const Document& d) {
  if (d.kind == Document::Kind::Polyhedron)
    throw Error("SemanticError",
                "polyhedron document cannot be read as a triangulated complex");
  Complex2 c;
  c.embed_dim = d.vertices.empty() ? 0 : d.vertices.front().dim;
  for (const auto& row : d.vertices) {
    c.add_vertex(row.id);
    if (row.dim > 0) c.coords[row.id] = row.xyz;
  }
  for (const Tri& t : d.triangles) c.add_triangle(t[0], t[1], t[2]);
  return c;
}

planar::PlanarPolygon to_planar(const Document& d) {
  if (d.kind != Document::Kind::Planar)
    throw Error("SemanticError", "not a planar (2D) document");
  planar::PlanarPolygon k;
  k.complex.embed_dim = 2;
  for (const auto& row : d.vertices) {
    k.complex.add_vertex(row.id);
    k.complex.coords[row.id] = Vec3{row.xyz.x, row.xyz.y, 0.0};
  }
  if (!d.triangles.empty()) {
    for (const Tri& t : d.triangles) k.complex.add_triangle(t[0], t[1], t[2]);
    k.tri_order = d.triangles;
  } else {
    for (const auto& f : d.faces)
      for (std::size_t i = 0; i < f.size(); ++i)
        k.complex.add_edge(f[i], f[(i + 1) % f.size()]);
    k.faces = d.faces;
  }
  k.scheme = d.scheme;
  if (!k.scheme.empty()) {
    // identify lines must reference boundary simplices
    std::map<Edge, int> use;
    if (k.triangulated()) {
      for (const Tri& t : k.complex.triangles) {
        ++use[make_edge(t[0], t[1])];
        ++use[make_edge(t[0], t[2])];
        ++use[make_edge(t[1], t[2])];
      }
    } else {
      for (const auto& f : k.faces)
        for (std::size_t i = 0; i < f.size(); ++i)
          ++use[make_edge(f[i], f[(i + 1) % f.size()])];
    }
    auto is_boundary = [&](const Edge& e) {
      auto it = use.find(e);
      return it != use.end() && it->second == 1;
    };
    for (const auto& p : k.scheme.pairs) {
      for (const Edge& e : {p.first(), p.second()})
        if (!is_boundary(e))
          throw Error("SemanticError", "identify references edge " +
                                           edge_str(e) +
                                           " which is not a boundary edge");
    }
  }
  return k;
}

solids::ConvexPolyhedron to_polyhedron(const Document& d) {
  if (d.kind != Document::Kind::Polyhedron)
    throw Error("SemanticError", "not a polyhedron (3D faces) document");
  solids::ConvexPolyhedron p;
  for (const auto& row : d.vertices) p.coords[row.id] = row.xyz;
  p.faces = d.faces;
  return p;
}

Document load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("SyntaxError", "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void save_file(const std::string& path, const Document& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("SyntaxError", "cannot write file: " + path);
  out << print(d);
  if (!out) throw Error("SyntaxError", "cannot write file: " + path);
}

}  // namespace eulerchi::sc2

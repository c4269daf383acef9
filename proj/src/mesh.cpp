#include <ddrym/mesh.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace ddrym {

namespace {

// Signed area of the fan triangle (a,b,c) w.r.t. the normal n.
double tri_area(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& n) {
  return 0.5 * (b - a).cross(c - a).dot(n);
}

double tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.;
}

} // namespace

PolyMesh::PolyMesh(std::vector<Vec3> vertices,
                   std::vector<std::vector<std::size_t>> face_loops,
                   std::vector<std::vector<std::size_t>> cell_faces,
                   const std::vector<Vec3>* face_points,
                   const std::vector<Vec3>* cell_points)
    : m_vertices(std::move(vertices)) {
  m_faces.resize(face_loops.size());
  for (std::size_t f = 0; f < face_loops.size(); f++) {
    require(face_loops[f].size() >= 3, "face ", f, " has fewer than 3 vertices");
    for (std::size_t v : face_loops[f])
      require(v < m_vertices.size(), "face ", f, " references vertex ", v, " out of range");
    m_faces[f].loop = face_loops[f];
  }
  m_cells.resize(cell_faces.size());
  for (std::size_t c = 0; c < cell_faces.size(); c++) {
    require(cell_faces[c].size() >= 4, "cell ", c, " has fewer than 4 faces");
    for (std::size_t f : cell_faces[c])
      require(f < m_faces.size(), "cell ", c, " references face ", f, " out of range");
    m_cells[c].faces = cell_faces[c];
  }

  build_edges(face_loops);
  build_faces(face_points);
  build_cells(cell_points);
  validate();
}

void PolyMesh::build_edges(const std::vector<std::vector<std::size_t>>& loops) {
  std::map<std::array<std::size_t, 2>, std::size_t> index;
  for (std::size_t f = 0; f < loops.size(); f++) {
    const auto& loop = loops[f];
    Face& F = m_faces[f];
    for (std::size_t i = 0; i < loop.size(); i++) {
      std::size_t a = loop[i], b = loop[(i + 1) % loop.size()];
      require(a != b, "face ", f, " has a degenerate edge");
      std::array<std::size_t, 2> key = {std::min(a, b), std::max(a, b)};
      auto [it, inserted] = index.try_emplace(key, m_edges.size());
      if (inserted) {
        Edge E;
        E.v = key;
        Vec3 d = m_vertices[key[1]] - m_vertices[key[0]];
        E.length = d.norm();
        require(E.length > 0., "zero-length edge on face ", f);
        E.tangent = d / E.length;
        E.midpoint = 0.5 * (m_vertices[key[0]] + m_vertices[key[1]]);
        m_edges.push_back(E);
      }
      F.edges.push_back(it->second);
      F.edge_loop_dir.push_back(a == key[0] ? +1 : -1);
    }
  }
}

void PolyMesh::build_faces(const std::vector<Vec3>* face_points) {
  for (std::size_t f = 0; f < m_faces.size(); f++) {
    Face& F = m_faces[f];
    const std::size_t m = F.loop.size();

    // Newell normal; the loop order fixes its direction.
    Vec3 nraw = Vec3::Zero();
    for (std::size_t i = 0; i < m; i++) {
      const Vec3& p = m_vertices[F.loop[i]];
      const Vec3& q = m_vertices[F.loop[(i + 1) % m]];
      nraw += p.cross(q);
    }
    double nn = nraw.norm();
    require(nn > 0., "degenerate face normal on face ", f);
    F.normal = nraw / nn;

    F.diam = 0.;
    for (std::size_t i = 0; i < m; i++)
      for (std::size_t j = i + 1; j < m; j++)
        F.diam = std::max(F.diam, (m_vertices[F.loop[i]] - m_vertices[F.loop[j]]).norm());

    // Area and centroid from a fan around the vertex mean (signed areas make
    // this independent of the seed).
    Vec3 seed = Vec3::Zero();
    for (std::size_t v : F.loop) seed += m_vertices[v];
    seed /= double(m);
    double area = 0.;
    Vec3 c = Vec3::Zero();
    for (std::size_t i = 0; i < m; i++) {
      const Vec3& p = m_vertices[F.loop[i]];
      const Vec3& q = m_vertices[F.loop[(i + 1) % m]];
      double a = tri_area(seed, p, q, F.normal);
      area += a;
      c += a * (seed + p + q) / 3.;
    }
    require(area > 0., "face ", f, " has non-positive area");
    F.area = area;
    F.centroid = c / area;
    F.point = (face_points != nullptr) ? (*face_points)[f] : F.centroid;
  }
}

void PolyMesh::build_cells(const std::vector<Vec3>* cell_points) {
  for (std::size_t t = 0; t < m_cells.size(); t++) {
    Cell& T = m_cells[t];

    std::set<std::size_t> vs, es;
    for (std::size_t f : T.faces) {
      require(m_faces[f].cells[1] < 0, "face ", f, " shared by more than 2 cells (non-manifold)");
      if (m_faces[f].cells[0] < 0)
        m_faces[f].cells[0] = long(t);
      else
        m_faces[f].cells[1] = long(t);
      for (std::size_t v : m_faces[f].loop) vs.insert(v);
      for (std::size_t e : m_faces[f].edges) es.insert(e);
    }
    T.vertices.assign(vs.begin(), vs.end());
    T.edges.assign(es.begin(), es.end());

    T.diam = 0.;
    for (std::size_t i = 0; i < T.vertices.size(); i++)
      for (std::size_t j = i + 1; j < T.vertices.size(); j++)
        T.diam = std::max(T.diam, (m_vertices[T.vertices[i]] - m_vertices[T.vertices[j]]).norm());

    // Volume and centroid from tetrahedra over the face fans; per-face signs
    // are resolved through the vertex-mean seed (valid for star-shaped cells).
    Vec3 seed = Vec3::Zero();
    for (std::size_t v : T.vertices) seed += m_vertices[v];
    seed /= double(T.vertices.size());
    double vol = 0.;
    Vec3 c = Vec3::Zero();
    for (std::size_t f : T.faces) {
      const Face& F = m_faces[f];
      double vf = 0.;
      Vec3 cf = Vec3::Zero();
      for (std::size_t i = 0; i < F.loop.size(); i++) {
        const Vec3& p = m_vertices[F.loop[i]];
        const Vec3& q = m_vertices[F.loop[(i + 1) % F.loop.size()]];
        double v6 = tet_volume(seed, F.point, p, q);
        vf += v6;
        cf += v6 * (seed + F.point + p + q) / 4.;
      }
      vol += std::abs(vf);
      c += (vf >= 0. ? 1. : -1.) * cf;
    }
    require(vol > 0., "cell ", t, " has non-positive volume");
    T.volume = vol;
    T.centroid = c / vol;
    T.point = (cell_points != nullptr) ? (*cell_points)[t] : T.centroid;
  }

  m_h = 0.;
  for (const Cell& T : m_cells) m_h = std::max(m_h, T.diam);
}

void PolyMesh::validate() const {
  double reg = 1.;

  for (std::size_t f = 0; f < m_faces.size(); f++) {
    const Face& F = m_faces[f];
    require(F.cells[0] >= 0, "face ", f, " not used by any cell (dangling)");

    // Planarity.
    for (std::size_t v : F.loop)
      require(std::abs((m_vertices[v] - F.centroid).dot(F.normal)) <= 1e-12 * F.diam,
              "face ", f, " is not planar");

    // Star point inside: every fan triangle positively oriented.
    const std::size_t m = F.loop.size();
    for (std::size_t i = 0; i < m; i++) {
      double a = tri_area(F.point, m_vertices[F.loop[i]], m_vertices[F.loop[(i + 1) % m]], F.normal);
      require(a > 0., "star point of face ", f, " does not see the boundary (non-star-shaped fan)");
    }

    // Simplicity: non-adjacent loop segments must not intersect (checked in
    // the face chart).
    Vec3 u = (m_vertices[F.loop[0]] - F.centroid);
    u = (u - u.dot(F.normal) * F.normal).normalized();
    Vec3 w = F.normal.cross(u);
    auto chart = [&](std::size_t v) {
      Vec3 d = m_vertices[v] - F.centroid;
      return Eigen::Vector2d(d.dot(u), d.dot(w));
    };
    auto crosses = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                      const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
      auto orient = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q, const Eigen::Vector2d& r) {
        return (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x());
      };
      return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
    };
    for (std::size_t i = 0; i < m; i++) {
      for (std::size_t j = i + 2; j < m; j++) {
        if (i == 0 && j == m - 1) continue;
        if (crosses(chart(F.loop[i]), chart(F.loop[(i + 1) % m]),
                    chart(F.loop[j]), chart(F.loop[(j + 1) % m])))
          fail("face ", f, " is self-intersecting");
      }
    }

    // In-plane inscribed radius at the star point.
    for (std::size_t i = 0; i < m; i++) {
      const Edge& E = m_edges[F.edges[i]];
      Vec3 d = F.point - m_vertices[E.v[0]];
      double dist = (d - d.dot(E.tangent) * E.tangent).norm();
      reg = std::min(reg, dist / F.diam);
    }
  }

  for (std::size_t v = 0; v < m_vertices.size(); v++) {
    bool used = false;
    for (const Face& F : m_faces)
      if (std::find(F.loop.begin(), F.loop.end(), v) != F.loop.end()) { used = true; break; }
    require(used, "vertex ", v, " not used by any face (dangling)");
  }

  for (std::size_t t = 0; t < m_cells.size(); t++) {
    const Cell& T = m_cells[t];

    // Euler formula on the cell boundary.
    long euler = long(T.vertices.size()) - long(T.edges.size()) + long(T.faces.size());
    require(euler == 2, "cell ", t, " is not topologically trivial (V-E+F = ", euler, ")");

    // Star point inside: all cover tetrahedra on the correct side of each face.
    for (std::size_t f : T.faces) {
      const Face& F = m_faces[f];
      double side = F.normal.dot(F.point - T.point);
      require(std::abs(side) > 0., "star point of cell ", t, " lies on a face plane");
      for (std::size_t i = 0; i < F.loop.size(); i++) {
        const Vec3& p = m_vertices[F.loop[i]];
        const Vec3& q = m_vertices[F.loop[(i + 1) % F.loop.size()]];
        double v6 = tet_volume(F.point, p, q, T.point);
        require(v6 * side > 0., "star point of cell ", t, " does not see face ", f,
                " (non-star-shaped cover)");
      }
      reg = std::min(reg, std::abs(side) / T.diam);
    }
  }

  // The two cells of an interior face must lie on opposite sides.
  for (std::size_t f = 0; f < m_faces.size(); f++) {
    const Face& F = m_faces[f];
    if (F.cells[1] < 0) continue;
    double s0 = F.normal.dot(F.point - m_cells[F.cells[0]].point);
    double s1 = F.normal.dot(F.point - m_cells[F.cells[1]].point);
    require(s0 * s1 < 0., "cells ", F.cells[0], " and ", F.cells[1],
            " lie on the same side of face ", f);
  }

  const_cast<PolyMesh*>(this)->m_regularity = reg;
}

std::size_t PolyMesh::n_boundary_faces() const {
  std::size_t n = 0;
  for (const Face& F : m_faces) n += (F.cells[1] < 0) ? 1 : 0;
  return n;
}

OrientationTables orientations(const PolyMesh& mesh) {
  OrientationTables tab;
  tab.omega_TF.resize(mesh.n_cells());
  for (std::size_t t = 0; t < mesh.n_cells(); t++) {
    const Cell& T = mesh.cell(t);
    for (std::size_t f : T.faces) {
      const Face& F = mesh.face(f);
      double s = F.normal.dot(F.point - T.point);
      require(s != 0., "degenerate orientation of face ", f, " in cell ", t);
      tab.omega_TF[t].push_back(s > 0. ? +1 : -1);
    }
  }
  // The loop order is counter-clockwise w.r.t. the Newell normal, so an edge
  // whose tangent follows the loop runs counter-clockwise: omega_FE = -dir.
  tab.omega_FE.resize(mesh.n_faces());
  for (std::size_t f = 0; f < mesh.n_faces(); f++) {
    const Face& F = mesh.face(f);
    for (int dir : F.edge_loop_dir) tab.omega_FE[f].push_back(-dir);
  }
  tab.omega_EV.assign(mesh.n_edges(), {-1, +1});
  return tab;
}

SimplexCover simplex_cover(const PolyMesh& mesh) {
  SimplexCover cover;
  cover.face_tris.resize(mesh.n_faces());
  for (std::size_t f = 0; f < mesh.n_faces(); f++) {
    const Face& F = mesh.face(f);
    for (std::size_t i = 0; i < F.loop.size(); i++)
      cover.face_tris[f].push_back({F.point, mesh.vertex(F.loop[i]),
                                    mesh.vertex(F.loop[(i + 1) % F.loop.size()])});
  }
  cover.cell_tets.resize(mesh.n_cells());
  for (std::size_t t = 0; t < mesh.n_cells(); t++) {
    const Cell& T = mesh.cell(t);
    for (std::size_t f : T.faces)
      for (const auto& tri : cover.face_tris[f])
        cover.cell_tets[t].push_back({tri[0], tri[1], tri[2], T.point});
  }
  return cover;
}

PolyMesh load_polymesh(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open mesh file ", path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("parse error in ", path, ": ", e.what());
  }
  require(j.contains("vertices") && j.contains("faces") && j.contains("cells"),
          "mesh file ", path, " is missing vertices/faces/cells");

  std::vector<Vec3> vertices;
  for (const auto& v : j["vertices"]) {
    require(v.is_array() && v.size() == 3, "vertex entries must be [x,y,z]");
    vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
  }
  std::vector<std::vector<std::size_t>> loops;
  for (const auto& fj : j["faces"]) loops.push_back(fj.at("loop").get<std::vector<std::size_t>>());
  std::vector<std::vector<std::size_t>> cells;
  for (const auto& cj : j["cells"]) cells.push_back(cj.at("faces").get<std::vector<std::size_t>>());

  std::vector<Vec3> fpts, cpts;
  if (j.contains("face_points")) {
    for (const auto& v : j["face_points"]) fpts.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    require(fpts.size() == loops.size(), "face_points length mismatch");
  }
  if (j.contains("cell_points")) {
    for (const auto& v : j["cell_points"]) cpts.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    require(cpts.size() == cells.size(), "cell_points length mismatch");
  }
  return PolyMesh(std::move(vertices), std::move(loops), std::move(cells),
                  fpts.empty() ? nullptr : &fpts, cpts.empty() ? nullptr : &cpts);
}

void save_polymesh(const PolyMesh& mesh, const std::string& path) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Vec3& v : mesh.vertices()) j["vertices"].push_back({v.x(), v.y(), v.z()});
  j["faces"] = nlohmann::json::array();
  j["face_points"] = nlohmann::json::array();
  for (const Face& F : mesh.faces()) {
    j["faces"].push_back({{"loop", F.loop}});
    j["face_points"].push_back({F.point.x(), F.point.y(), F.point.z()});
  }
  j["cells"] = nlohmann::json::array();
  j["cell_points"] = nlohmann::json::array();
  for (const Cell& T : mesh.cells()) {
    j["cells"].push_back({{"faces", T.faces}});
    j["cell_points"].push_back({T.point.x(), T.point.y(), T.point.z()});
  }
  std::ofstream out(path);
  require(out.good(), "cannot write mesh file ", path);
  out << j.dump(1) << "\n";
}

PolyMesh generate_cubic_mesh(std::size_t n) {
  require(n >= 1, "generate_cubic_mesh: n must be >= 1");
  const double hx = 1. / double(n);
  auto vid = [&](std::size_t i, std::size_t j, std::size_t k) {
    return i + (n + 1) * (j + (n + 1) * k);
  };
  std::vector<Vec3> vertices;
  for (std::size_t k = 0; k <= n; k++)
    for (std::size_t j = 0; j <= n; j++)
      for (std::size_t i = 0; i <= n; i++) vertices.emplace_back(i * hx, j * hx, k * hx);

  // Faces with normals along +x, +y, +z.
  std::vector<std::vector<std::size_t>> loops;
  std::map<std::array<std::size_t, 4>, std::size_t> fid;
  auto add_face = [&](std::array<std::size_t, 4> loop) {
    auto key = loop;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = fid.try_emplace(key, loops.size());
    if (inserted) loops.push_back({loop[0], loop[1], loop[2], loop[3]});
    return it->second;
  };

  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t k = 0; k < n; k++)
    for (std::size_t j = 0; j < n; j++)
      for (std::size_t i = 0; i < n; i++) {
        std::vector<std::size_t> cf;
        // x = const faces (normal +x), y = const, z = const
        for (std::size_t s = 0; s <= 1; s++) {
          cf.push_back(add_face({vid(i + s, j, k), vid(i + s, j + 1, k),
                                 vid(i + s, j + 1, k + 1), vid(i + s, j, k + 1)}));
          cf.push_back(add_face({vid(i, j + s, k), vid(i, j + s, k + 1),
                                 vid(i + 1, j + s, k + 1), vid(i + 1, j + s, k)}));
          cf.push_back(add_face({vid(i, j, k + s), vid(i + 1, j, k + s),
                                 vid(i + 1, j + 1, k + s), vid(i, j + 1, k + s)}));
        }
        cells.push_back(cf);
      }
  return PolyMesh(std::move(vertices), std::move(loops), std::move(cells));
}

PolyMesh generate_tet_mesh(std::size_t n) {
  require(n >= 1, "generate_tet_mesh: n must be >= 1");
  const double hx = 1. / double(n);
  auto vid = [&](std::size_t i, std::size_t j, std::size_t k) {
    return i + (n + 1) * (j + (n + 1) * k);
  };
  std::vector<Vec3> vertices;
  for (std::size_t k = 0; k <= n; k++)
    for (std::size_t j = 0; j <= n; j++)
      for (std::size_t i = 0; i <= n; i++) vertices.emplace_back(i * hx, j * hx, k * hx);

  std::vector<std::vector<std::size_t>> loops;
  std::map<std::array<std::size_t, 3>, std::size_t> fid;
  auto add_face = [&](std::array<std::size_t, 3> tri) {
    auto key = tri;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = fid.try_emplace(key, loops.size());
    if (inserted) loops.push_back({tri[0], tri[1], tri[2]});
    return it->second;
  };

  // Kuhn split: one tet per axis permutation, all sharing the main diagonal.
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t k = 0; k < n; k++)
    for (std::size_t j = 0; j < n; j++)
      for (std::size_t i = 0; i < n; i++) {
        std::array<std::size_t, 3> base = {i, j, k};
        for (const auto& p : perms) {
          std::array<std::array<std::size_t, 3>, 4> corner;
          corner[0] = base;
          corner[1] = corner[0]; corner[1][p[0]]++;
          corner[2] = corner[1]; corner[2][p[1]]++;
          corner[3] = corner[2]; corner[3][p[2]]++;
          std::array<std::size_t, 4> v;
          for (int a = 0; a < 4; a++) v[a] = vid(corner[a][0], corner[a][1], corner[a][2]);
          cells.push_back({add_face({v[0], v[1], v[2]}), add_face({v[0], v[1], v[3]}),
                           add_face({v[0], v[2], v[3]}), add_face({v[1], v[2], v[3]})});
        }
      }
  return PolyMesh(std::move(vertices), std::move(loops), std::move(cells));
}

} // namespace ddrym

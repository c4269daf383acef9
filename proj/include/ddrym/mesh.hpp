#ifndef DDRYM_MESH_HPP
#define DDRYM_MESH_HPP

#include <ddrym/common.hpp>

#include <array>
#include <iosfwd>

namespace ddrym {

/// Oriented edge; vertices stored with v[0] < v[1], the unit tangent points
/// from v[0] to v[1].
struct Edge {
  std::array<std::size_t, 2> v;
  Vec3 tangent;
  Vec3 midpoint;
  double length = 0.;
};

/// Planar polygonal face. The vertex loop defines the unit normal (Newell),
/// the star point defaults to the area centroid.
struct Face {
  std::vector<std::size_t> loop;              ///< vertex indices, in loop order
  std::vector<std::size_t> edges;             ///< edge indices, edges[i] joins loop[i], loop[i+1]
  std::vector<int> edge_loop_dir;             ///< +1 if the edge tangent follows the loop at position i
  Vec3 normal;
  Vec3 centroid;
  Vec3 point;                                 ///< star point x_F
  double area = 0.;
  double diam = 0.;
  std::array<long, 2> cells = {-1, -1};       ///< incident cells (second is -1 on the boundary)
};

/// Polyhedral cell described by its faces.
struct Cell {
  std::vector<std::size_t> faces;
  std::vector<std::size_t> edges;             ///< derived, ascending
  std::vector<std::size_t> vertices;          ///< derived, ascending
  Vec3 centroid;
  Vec3 point;                                 ///< star point x_T
  double volume = 0.;
  double diam = 0.;
};

/// Relative orientations between incident mesh entities.
///
/// omega_TF[T][i] = +1 iff the normal of the i-th face of T points out of T.
/// omega_FE[F][i] = +1 iff the tangent of the i-th edge of F runs clockwise
/// along the boundary of F w.r.t. the face normal; with n_FE = n_F x t_E this
/// makes omega_FE * n_FE the outward in-plane normal on that edge.
/// omega_EV[E] = {-1, +1}: the tangent points towards the second vertex.
struct OrientationTables {
  std::vector<std::vector<int>> omega_TF;
  std::vector<std::vector<int>> omega_FE;
  std::vector<std::array<int, 2>> omega_EV;
};

/// Simplicial cover used for quadrature: triangle fans on faces (from x_F),
/// tetrahedra on cells (apex x_T over the face triangles).
struct SimplexCover {
  std::vector<std::vector<std::array<Vec3, 3>>> face_tris;
  std::vector<std::vector<std::array<Vec3, 4>>> cell_tets;
};

/// Immutable polyhedral mesh with oriented incidence and geometric metadata.
class PolyMesh {
public:
  /// Builds the mesh from raw vertex/face/cell data; edges are derived from
  /// the face loops. Validates planarity, manifoldness, Euler formula and
  /// star-shape of the default or overridden star points.
  PolyMesh(std::vector<Vec3> vertices,
           std::vector<std::vector<std::size_t>> face_loops,
           std::vector<std::vector<std::size_t>> cell_faces,
           const std::vector<Vec3>* face_points = nullptr,
           const std::vector<Vec3>* cell_points = nullptr);

  std::size_t n_vertices() const { return m_vertices.size(); }
  std::size_t n_edges() const { return m_edges.size(); }
  std::size_t n_faces() const { return m_faces.size(); }
  std::size_t n_cells() const { return m_cells.size(); }

  const Vec3& vertex(std::size_t i) const { return m_vertices[i]; }
  const Edge& edge(std::size_t i) const { return m_edges[i]; }
  const Face& face(std::size_t i) const { return m_faces[i]; }
  const Cell& cell(std::size_t i) const { return m_cells[i]; }

  const std::vector<Vec3>& vertices() const { return m_vertices; }
  const std::vector<Edge>& edges() const { return m_edges; }
  const std::vector<Face>& faces() const { return m_faces; }
  const std::vector<Cell>& cells() const { return m_cells; }

  bool face_is_boundary(std::size_t f) const { return m_faces[f].cells[1] < 0; }
  std::size_t n_boundary_faces() const;

  /// Unit vector n_FE with (t_E, n_FE, n_F) right-handed.
  Vec3 edge_normal_in_face(std::size_t f, std::size_t local_e) const {
    const Face& F = m_faces[f];
    return F.normal.cross(m_edges[F.edges[local_e]].tangent);
  }

  double h() const { return m_h; }

  /// min over entities of (distance from the star point to the boundary
  /// planes) / h_P; a crude inscribed-ball regularity measure.
  double regularity() const { return m_regularity; }

private:
  std::vector<Vec3> m_vertices;
  std::vector<Edge> m_edges;
  std::vector<Face> m_faces;
  std::vector<Cell> m_cells;
  double m_h = 0.;
  double m_regularity = 0.;

  void build_edges(const std::vector<std::vector<std::size_t>>& loops);
  void build_faces(const std::vector<Vec3>* face_points);
  void build_cells(const std::vector<Vec3>* cell_points);
  void validate() const;
};

OrientationTables orientations(const PolyMesh& mesh);
SimplexCover simplex_cover(const PolyMesh& mesh);

/// Reads a mesh from the PolyMesh-JSON format.
PolyMesh load_polymesh(const std::string& path);
/// Writes the PolyMesh-JSON representation (star points included).
void save_polymesh(const PolyMesh& mesh, const std::string& path);

/// n^3 unit subcubes of (0,1)^3.
PolyMesh generate_cubic_mesh(std::size_t n);
/// 6 n^3 tetrahedra: Kuhn split of each subcube along the main diagonal.
PolyMesh generate_tet_mesh(std::size_t n);

} // namespace ddrym

#endif

#ifndef DDRYM_QUADRATURE_HPP
#define DDRYM_QUADRATURE_HPP

#include <ddrym/common.hpp>
#include <ddrym/mesh.hpp>

namespace ddrym {

/// Quadrature nodes (3D points) and weights on a mesh entity.
struct QuadRule {
  std::vector<Vec3> points;
  std::vector<double> weights;
  int degree = 0; ///< guaranteed polynomial exactness

  std::size_t size() const { return points.size(); }
  double total_weight() const;
};

/// Largest supported exactness degree.
inline constexpr int kMaxQuadDegree = 20;

/// Gauss-Legendre nodes/weights on [0,1], exact to degree 2n-1.
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w);

/// Gauss-Jacobi nodes/weights on [0,1] for the weight (1-x)^alpha, integer
/// alpha >= 0; exact to degree 2n-1 against that weight.
void gauss_jacobi_01(int n, int alpha, std::vector<double>& x, std::vector<double>& w);

QuadRule edge_rule(const PolyMesh& mesh, std::size_t e, int degree);
QuadRule face_rule(const PolyMesh& mesh, const SimplexCover& cover, std::size_t f, int degree);
QuadRule cell_rule(const PolyMesh& mesh, const SimplexCover& cover, std::size_t t, int degree);

} // namespace ddrym

#endif

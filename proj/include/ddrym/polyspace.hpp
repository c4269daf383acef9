#ifndef DDRYM_POLYSPACE_HPP
#define DDRYM_POLYSPACE_HPP

#include <ddrym/common.hpp>
#include <ddrym/mesh.hpp>
#include <ddrym/quadrature.hpp>

#include <array>

namespace ddrym {

/// Local frame of a mesh entity: coordinates are axes^T (x - origin) / scale.
/// Edges use 1 axis (the tangent), faces 2 in-plane axes with
/// axes[0] x axes[1] = n_F, cells the canonical axes.
struct Chart {
  int dim = 3;
  Vec3 origin = Vec3::Zero();
  double scale = 1.;
  std::array<Vec3, 3> axes = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};

  Eigen::Vector3d local(const Vec3& x) const {
    Vec3 d = x - origin;
    Vec3 xi = Vec3::Zero();
    for (int a = 0; a < dim; a++) xi(a) = d.dot(axes[a]) / scale;
    return xi;
  }
};

Chart edge_chart(const PolyMesh& mesh, std::size_t e);
Chart face_chart(const PolyMesh& mesh, std::size_t f);
Chart cell_chart(const PolyMesh& mesh, std::size_t t);

/// L2-orthonormal scalar polynomial basis on an entity, backed by monomials in
/// the chart coordinates. Bases of lower degree are prefixes of higher ones.
class ScalarBasis {
public:
  ScalarBasis() = default;
  ScalarBasis(Chart chart, int maxdeg, const QuadRule& rule);

  int max_degree() const { return m_maxdeg; }
  int dim(int degree) const { return poly_dim(std::min(degree, m_maxdeg), m_chart.dim); }
  const Chart& chart() const { return m_chart; }

  /// Values of the first nf basis functions at the given points (npts x nf).
  MatrixXd values(const std::vector<Vec3>& pts, int nf) const;
  /// World-coordinate gradients, one matrix per component.
  std::array<MatrixXd, 3> gradients(const std::vector<Vec3>& pts, int nf) const;

  /// Max deviation of the basis Gram matrix from the identity (diagnostic).
  double gram_error() const { return m_gram_error; }

private:
  Chart m_chart;
  int m_maxdeg = -1;
  std::vector<std::array<int, 3>> m_exps;
  MatrixXd m_coeff; // function i = sum_m m_coeff(i,m) * monomial_m
  double m_gram_error = 0.;

  MatrixXd monomials(const std::vector<Vec3>& pts, int nm) const;
};

/// Number of vector components of the ambient polynomial space on a chart
/// (tangential on faces, full 3D on cells).
inline int n_components(const Chart& chart) { return chart.dim == 2 ? 2 : 3; }

/// Values of the ambient vector basis (scalar x axis, axis fastest), as three
/// world-component matrices of size npts x (nc * sdim).
std::array<MatrixXd, 3> vector_values(const ScalarBasis& s, const std::vector<Vec3>& pts, int sdim);

/// L2-orthonormal basis of a polynomial subspace, stored by its coefficients
/// over the ambient orthonormal vector basis of the same degree.
struct SubspaceBasis {
  MatrixXd Q;       ///< rows = subspace functions, cols = ambient coefficients
  int degree = -1;  ///< ambient polynomial degree
  int amb_sdim = 0; ///< scalar dimension of the ambient basis

  int dim() const { return int(Q.rows()); }
  /// Values at points: ambient values contracted with Q.
  std::array<MatrixXd, 3> values(const ScalarBasis& s, const std::vector<Vec3>& pts) const;
};

enum class SubspaceKind {
  RotGrad,    ///< R(F) = vrot P^{l+1}(F)
  Curl,       ///< R(T) = curl P^{l+1}(T)^3
  Grad,       ///< G(T) = grad P^{l+1}(T)
  KoszulScal, ///< Rc(P) = (x - x_P) P^{l-1}(P)
  KoszulCross ///< Gc(T) = (x - x_T) x P^{l-1}(T)^3
};

/// Builds the subspace basis by rank-revealing orthogonalization of the
/// Koszul/differential generators; throws on unexpected rank.
SubspaceBasis make_subspace(SubspaceKind kind, int l, const ScalarBasis& s, const QuadRule& rule);

/// Per-entity bases and quadrature for a degree-k complex.
struct EdgeBases {
  ScalarBasis scalar; // up to degree k+1
};
struct FaceBases {
  ScalarBasis scalar; // up to degree k+2
  SubspaceBasis R_km1, R_k, Rc_k, Rc_kp2;
};
struct CellBases {
  ScalarBasis scalar; // up to degree max(k+2, 2k)
  SubspaceBasis R_km1, R_k, Rc_k, Rc_kp2, G_km1, G_k, Gc_k, Gc_kp1;
};

struct EntityBases {
  int k = 0;
  std::vector<EdgeBases> edges;
  std::vector<FaceBases> faces;
  std::vector<CellBases> cells;
  std::vector<QuadRule> edge_rules, face_rules, cell_rules;

  static int edge_budget(int k) { return 2 * (k + 2); }
  static int face_budget(int k) { return std::max(2 * (k + 2), 3 * k); }
  static int cell_budget(int k) { return std::max(2 * (k + 2), 4 * k + 2); }

  double max_gram_error = 0.;     ///< worst orthonormality defect
  double max_split_cond = 0.;     ///< worst condition number of [R | Rc] / [G | Gc]
};

EntityBases make_bases(const PolyMesh& mesh, const SimplexCover& cover, int k);

/// Coefficients of the L2 projection of f onto the first nf functions of an
/// orthonormal scalar basis, using the given rule.
VectorXd l2_project_scalar(const std::function<double(const Vec3&)>& f, const ScalarBasis& s,
                           int nf, const QuadRule& rule);
/// Same on a vector subspace basis.
VectorXd l2_project_subspace(const std::function<Vec3(const Vec3&)>& f, const ScalarBasis& s,
                             const SubspaceBasis& sub, const QuadRule& rule);

} // namespace ddrym

#endif

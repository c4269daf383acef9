#include <ddrym/quadrature.hpp>

#include <cmath>

namespace ddrym {

double QuadRule::total_weight() const {
  double s = 0.;
  for (double w : weights) s += w;
  return s;
}

namespace {

// Golub-Welsch on the Jacobi matrix for the weight (1-x)^alpha on [-1,1]
// (beta = 0), then mapped to [0,1]. mu0 = integral of the weight = 2^(alpha+1)/(alpha+1).
void gauss_jacobi_sym(int n, int alpha, std::vector<double>& x, std::vector<double>& w) {
  require(n >= 1, "quadrature: need at least one node");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double a = alpha, b = 0.;
  const double s = a + b;
  for (int k = 0; k < n; k++) {
    double diag = (k == 0) ? (b - a) / (s + 2.)
                           : (b * b - a * a) / ((2. * k + s) * (2. * k + s + 2.));
    J(k, k) = diag;
    if (k >= 1) {
      double num = 4. * k * (k + a) * (k + b) * (k + s);
      double den = std::pow(2. * k + s, 2) * (2. * k + s + 1.) * (2. * k + s - 1.);
      double off = std::sqrt(num / den);
      J(k, k - 1) = J(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double mu0 = std::pow(2., s + 1.) / (s + 1.); // integer beta=0 case
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; i++) {
    x[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    w[i] = mu0 * v * v;
  }
}

} // namespace

void gauss_jacobi_01(int n, int alpha, std::vector<double>& x, std::vector<double>& w) {
  gauss_jacobi_sym(n, alpha, x, w);
  // Map [-1,1] with weight (1-x)^alpha to [0,1] with weight (1-t)^alpha:
  // x = 2t-1, (1-x)^alpha = (2(1-t))^alpha, dx = 2dt.
  const double scale = std::pow(0.5, alpha + 1);
  for (int i = 0; i < n; i++) {
    x[i] = 0.5 * (x[i] + 1.);
    w[i] *= scale;
  }
}

void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  gauss_jacobi_01(n, 0, x, w);
}

namespace {

int points_for_degree(int degree) {
  require(degree <= kMaxQuadDegree, "quadrature degree ", degree, " exceeds the supported cap ",
          kMaxQuadDegree);
  return std::max(1, (std::max(degree, 0) + 2) / 2); // 2n-1 >= degree
}

// Conical-product rule on the reference triangle {x,y >= 0, x+y <= 1}.
void reference_triangle(int degree, std::vector<Eigen::Vector2d>& pts, std::vector<double>& wts) {
  int n = points_for_degree(degree);
  std::vector<double> xu, wu, xv, wv;
  gauss_legendre_01(n, xu, wu);
  gauss_jacobi_01(n, 1, xv, wv);
  pts.clear();
  wts.clear();
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      pts.emplace_back(xu[i] * (1. - xv[j]), xv[j]);
      wts.push_back(wu[i] * wv[j]);
    }
}

// Conical-product rule on the reference tetrahedron.
void reference_tet(int degree, std::vector<Vec3>& pts, std::vector<double>& wts) {
  int n = points_for_degree(degree);
  std::vector<double> xu, wu, xv, wv, xw, ww;
  gauss_legendre_01(n, xu, wu);
  gauss_jacobi_01(n, 1, xv, wv);
  gauss_jacobi_01(n, 2, xw, ww);
  pts.clear();
  wts.clear();
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) {
        double z = xw[k];
        double y = xv[j] * (1. - z);
        double x = xu[i] * (1. - xv[j]) * (1. - z);
        pts.emplace_back(x, y, z);
        wts.push_back(wu[i] * wv[j] * ww[k]);
      }
}

} // namespace

QuadRule edge_rule(const PolyMesh& mesh, std::size_t e, int degree) {
  const Edge& E = mesh.edge(e);
  int n = points_for_degree(degree);
  std::vector<double> x, w;
  gauss_legendre_01(n, x, w);
  QuadRule rule;
  rule.degree = degree;
  const Vec3 p0 = mesh.vertex(E.v[0]);
  for (int i = 0; i < n; i++) {
    rule.points.push_back(p0 + x[i] * E.length * E.tangent);
    rule.weights.push_back(w[i] * E.length);
  }
  return rule;
}

QuadRule face_rule(const PolyMesh& mesh, const SimplexCover& cover, std::size_t f, int degree) {
  std::vector<Eigen::Vector2d> rp;
  std::vector<double> rw;
  reference_triangle(degree, rp, rw);
  QuadRule rule;
  rule.degree = degree;
  for (const auto& tri : cover.face_tris[f]) {
    const Vec3 d1 = tri[1] - tri[0], d2 = tri[2] - tri[0];
    const double jac = d1.cross(d2).norm(); // = 2 * area
    for (std::size_t q = 0; q < rp.size(); q++) {
      rule.points.push_back(tri[0] + rp[q].x() * d1 + rp[q].y() * d2);
      rule.weights.push_back(rw[q] * jac);
    }
  }
  return rule;
}

QuadRule cell_rule(const PolyMesh& mesh, const SimplexCover& cover, std::size_t t, int degree) {
  std::vector<Vec3> rp;
  std::vector<double> rw;
  reference_tet(degree, rp, rw);
  QuadRule rule;
  rule.degree = degree;
  for (const auto& tet : cover.cell_tets[t]) {
    const Vec3 d1 = tet[1] - tet[0], d2 = tet[2] - tet[0], d3 = tet[3] - tet[0];
    const double jac = std::abs(d1.cross(d2).dot(d3)); // = 6 * volume
    for (std::size_t q = 0; q < rp.size(); q++) {
      rule.points.push_back(tet[0] + rp[q].x() * d1 + rp[q].y() * d2 + rp[q].z() * d3);
      rule.weights.push_back(rw[q] * jac);
    }
  }
  return rule;
}

} // namespace ddrym

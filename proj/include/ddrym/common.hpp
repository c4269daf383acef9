#ifndef DDRYM_COMMON_HPP
#define DDRYM_COMMON_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddrym {

using Vec3 = Eigen::Vector3d;
using VectorXd = Eigen::VectorXd;
using MatrixXd = Eigen::MatrixXd;
using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Generic error for invalid inputs or degenerate configurations.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

template <typename... Args>
[[noreturn]] inline void fail(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw Error(os.str());
}

template <typename... Args>
inline void require(bool cond, const Args&... args) {
  if (!cond) fail(args...);
}

/// dim P^l in d variables; 0 for l < 0.
inline int poly_dim(int l, int d) {
  if (l < 0) return 0;
  long n = 1;
  for (int i = 1; i <= d; i++) n = n * (l + i) / i;
  return static_cast<int>(n);
}

inline int poly_dim_1d(int l) { return poly_dim(l, 1); }
inline int poly_dim_2d(int l) { return poly_dim(l, 2); }
inline int poly_dim_3d(int l) { return poly_dim(l, 3); }

} // namespace ddrym

#endif

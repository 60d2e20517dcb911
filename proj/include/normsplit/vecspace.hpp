#pragma once

// Dense real linear algebra used by the resolvent evaluators and the oracles.

#include <Eigen/Dense>

#include "normsplit/errors.hpp"

namespace normsplit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Absolute-plus-relative tolerance for linear-algebra residual checks.
inline constexpr double kTolLin = 1e-10;
/// Pivots smaller than this times the matrix scale count as zero.
inline constexpr double kPivotFloor = 1e-12;

void require_same_dim(const Vector& x, const Vector& y, const char* what);
void require_finite(const Vector& x, const char* what);
void require_finite(const Matrix& m, const char* what);

double dot(const Vector& x, const Vector& y);
double norm(const Vector& x);

/// LU factorization with partial pivoting, checked for singularity once at
/// construction so repeated solves stay cheap.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& m);

  Vector solve(const Vector& b) const;
  Eigen::Index dim() const { return lu_.rows(); }

 private:
  Eigen::PartialPivLU<Matrix> lu_;
};

/// Solves Mx = b for square nonsingular M. Throws SingularSystem.
Vector solve_linear(const Matrix& m, const Vector& b);

/// Minimum-norm solution of the consistent system Cy = d.
/// Throws InconsistentSystem if the residual exceeds kTolLin·(1+‖d‖).
Vector least_norm(const Matrix& c, const Vector& d);

/// Orthogonal projection of b onto the column space of M.
Vector project_range(const Matrix& m, const Vector& b);

/// Orthonormal basis (as columns) of the column space of M.
Matrix range_basis(const Matrix& m);

/// Orthonormal basis (as columns) of the nullspace of C.
Matrix null_basis(const Matrix& c);

/// Smallest eigenvalue of the symmetric part (M + Mᵀ)/2.
double min_symmetric_eigenvalue(const Matrix& m);

}  // namespace normsplit

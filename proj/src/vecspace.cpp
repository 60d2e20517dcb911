#include "normsplit/vecspace.hpp"

#include <cmath>
#include <string>

namespace normsplit {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Eigen::ColPivHouseholderQR<Matrix> pivoted_qr(const Matrix& m) {
  Eigen::ColPivHouseholderQR<Matrix> qr(m.rows(), m.cols());
  qr.setThreshold(kPivotFloor);
  qr.compute(m);
  return qr;
}

}  // namespace

void require_same_dim(const Vector& x, const Vector& y, const char* what) {
  if (x.size() != y.size()) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  }
}

void require_finite(const Vector& x, const char* what) {
  if (!x.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

double dot(const Vector& x, const Vector& y) {
  require_same_dim(x, y, "dot");
  return x.dot(y);
}

double norm(const Vector& x) { return x.norm(); }

LinearSolver::LinearSolver(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("solve_linear: matrix must be square and nonempty, got " + shape(m));
  }
  const double scale = m.cwiseAbs().maxCoeff();
  lu_.compute(m);
  const double smallest_pivot = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(scale > 0.0) || smallest_pivot < kPivotFloor * scale) {
    throw SingularSystem("solve_linear: pivot " + std::to_string(smallest_pivot) +
                         " below threshold for matrix scale " + std::to_string(scale));
  }
}

Vector LinearSolver::solve(const Vector& b) const {
  if (b.size() != lu_.rows()) {
    throw DimensionMismatch("solve_linear: rhs has dimension " + std::to_string(b.size()) +
                            ", system has " + std::to_string(lu_.rows()));
  }
  return lu_.solve(b);
}

Vector solve_linear(const Matrix& m, const Vector& b) { return LinearSolver(m).solve(b); }

Vector least_norm(const Matrix& c, const Vector& d) {
  if (c.rows() != d.size()) {
    throw DimensionMismatch("least_norm: " + shape(c) + " system with rhs of dimension " +
                            std::to_string(d.size()));
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(c.rows(), c.cols());
  cod.setThreshold(kPivotFloor);
  cod.compute(c);
  Vector y = cod.solve(d);
  const double residual = (c * y - d).norm();
  if (residual > kTolLin * (1.0 + d.norm())) {
    throw InconsistentSystem("least_norm: residual " + std::to_string(residual) +
                             " exceeds tolerance");
  }
  return y;
}

Matrix range_basis(const Matrix& m) {
  const auto qr = pivoted_qr(m);
  const Matrix q = qr.householderQ();
  return q.leftCols(qr.rank());
}

Matrix null_basis(const Matrix& c) {
  const Matrix ct = c.transpose();
  const auto qr = pivoted_qr(ct);
  const Matrix q = qr.householderQ();
  return q.rightCols(ct.rows() - qr.rank());
}

Vector project_range(const Matrix& m, const Vector& b) {
  if (m.rows() != b.size()) {
    throw DimensionMismatch("project_range: " + shape(m) + " matrix with vector of dimension " +
                            std::to_string(b.size()));
  }
  const Matrix q = range_basis(m);
  return q * (q.transpose() * b);
}

double min_symmetric_eigenvalue(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("symmetric part of non-square " + shape(m));
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

}  // namespace normsplit

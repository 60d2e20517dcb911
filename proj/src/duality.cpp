#include "normsplit/duality.hpp"

#include <string>

namespace normsplit {

OperatorPair dual_pair(const OperatorPair& pair) {
  return {OperatorSpec::flip_both(OperatorSpec::inverse(pair.a())),
          OperatorSpec::inverse(pair.b()), pair.dim()};
}

Certificates validate(const OperatorPair& pair, const PrimalDualPair& zk, double tol) {
  Certificates cert;
  cert.checked = true;
  cert.b_residual = membership_residual(pair.b(), zk.z, zk.k + zk.w);
  cert.a_residual = membership_residual(pair.a(), zk.z - zk.w, -zk.k);
  cert.b_side = cert.b_residual <= tol;
  cert.a_side = cert.a_residual <= tol;
  return cert;
}

Vector psi(const PrimalDualPair& zk) {
  require_same_dim(zk.z, zk.k, "psi");
  require_same_dim(zk.z, zk.w, "psi");
  return zk.z + zk.k + zk.w;
}

PrimalDualPair psi_inv(const OperatorPair& pair, const Vector& x, const Vector& w, double tol_fix,
                       double tol_cert) {
  if (x.size() != pair.dim() || w.size() != pair.dim()) {
    throw DimensionMismatch("psi_inv: expected vectors of dimension " + std::to_string(pair.dim()));
  }
  const double residual = (x - dr_apply(pair, x) - w).norm();
  if (residual > tol_fix) {
    throw PreconditionViolation("psi_inv: fixed-point residual " + std::to_string(residual) +
                                " exceeds tolerance");
  }
  Vector z = resolvent(pair.b(), x);
  Vector k = x - z - w;
  PrimalDualPair out{std::move(z), std::move(k), w};
  const Certificates cert = validate(pair, out, tol_cert);
  if (!cert.passed()) {
    throw CertificateFailure("psi_inv: membership certificates failed (B side " +
                             std::to_string(cert.b_residual) + ", A side " +
                             std::to_string(cert.a_residual) + ")");
  }
  return out;
}

}  // namespace normsplit

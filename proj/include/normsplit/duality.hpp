#pragma once

// Attouch–Théra duality: the dual pair (A^{−∨}, B⁻¹) shares the
// Douglas–Rachford operator of (A, B), and Ψ_w: (z, k) ↦ z + k + w maps
// certified primal–dual pairs of the w-perturbed problem onto the fixed
// points of x ↦ T x + w.

#include "normsplit/splitting.hpp"

namespace normsplit {

/// z solves w ∈ A(z − w) + Bz with witness k: k + w ∈ Bz and −k ∈ A(z − w).
struct PrimalDualPair {
  Vector z;
  Vector k;
  Vector w;
};

/// (FlipBoth(Inverse(A)), Inverse(B))
OperatorPair dual_pair(const OperatorPair& pair);

/// Re-runs both membership checks of the pair.
Certificates validate(const OperatorPair& pair, const PrimalDualPair& zk,
                      double tol = kTolCert);

/// z + k + w
Vector psi(const PrimalDualPair& zk);

/// Inverse of psi at a fixed point x of x ↦ T x + w: (J_B x, x − J_B x − w).
/// Throws PreconditionViolation when ‖x − T x − w‖ > tol_fix and
/// CertificateFailure when the resulting pair is not certified.
PrimalDualPair psi_inv(const OperatorPair& pair, const Vector& x, const Vector& w,
                       double tol_fix = SolverOptions{}.tol_fix, double tol_cert = kTolCert);

}  // namespace normsplit

"""Normal solutions of 0 in Ax + Bx through the Douglas-Rachford operator."""

from ._core import (
    CertificateFailure,
    DimensionMismatch,
    InconsistentSystem,
    Operator,
    OperatorPair,
    PrimalDualPair,
    PreconditionViolation,
    ProjectableSet,
    SingularSystem,
    SolverOptions,
    affine_qp_oracle,
    calculus_identity_pair,
    dr_apply,
    dr_map_shifted,
    dual_pair,
    estimate_v,
    make_scenario,
    psi,
    psi_inv,
    range_witness,
    scenario_names,
    solve_normal,
    solve_perturbed,
)

__all__ = [name for name in dir() if not name.startswith("_")]

import numpy as np
import pytest

import normsplit as ns


def balls(radius):
    return ns.OperatorPair(
        ns.Operator.normal_cone(ns.ProjectableSet.ball([0.0, 0.0], radius)),
        ns.Operator.normal_cone(ns.ProjectableSet.ball([3.0, 0.0], radius)),
    )


def test_resolvent_of_rotator():
    rot = ns.Operator.affine_monotone(np.array([[0.0, -1.0], [1.0, 0.0]]), np.zeros(2))
    np.testing.assert_allclose(rot.resolvent(np.array([1.0, 0.0])), [0.5, -0.5], atol=1e-15)
    np.testing.assert_allclose(rot.reflected_resolvent(np.array([1.0, 0.0])), [0.0, -1.0], atol=1e-15)
    assert repr(ns.Operator.inverse(rot)) == "Inverse(AffineMonotone)"


def test_disjoint_balls_normal_solution():
    report = ns.solve_normal(balls(1.0))
    assert report.status == "converged"
    assert report.certified
    np.testing.assert_allclose(report.v_estimate, [1.0, 0.0], atol=1e-6)
    np.testing.assert_allclose(report.normal_solution, [2.0, 0.0], atol=1e-6)


def test_estimate_v_and_duality():
    pair = ns.OperatorPair(
        ns.Operator.constant_valued(np.array([1.0, 2.0])),
        ns.Operator.constant_valued(np.array([3.0, 4.0])),
    )
    est = ns.estimate_v(pair, np.zeros(2))
    np.testing.assert_allclose(est.v, [4.0, 6.0], atol=1e-12)
    dual = ns.dual_pair(pair)
    x = np.array([0.3, -1.2])
    np.testing.assert_allclose(ns.dr_apply(pair, x), ns.dr_apply(dual, x), atol=1e-12)


def test_psi_round_trip():
    pair = balls(2.0)
    report = ns.solve_normal(pair)
    x = report.governing_point + report.w
    zk = ns.psi_inv(pair, x, report.w)
    np.testing.assert_allclose(ns.psi(zk), x, atol=1e-12)


def test_epigraph_has_no_normal_solution():
    report = ns.solve_normal(ns.make_scenario("epigraph").pair)
    assert report.status == "no_fixed_point_detected"
    assert report.normal_solution is None
    assert abs(np.linalg.norm(report.v_estimate) - 1.0) < 5e-2


def test_scenarios_match_oracles():
    for name in ns.scenario_names():
        if name == "epigraph":
            continue
        s = ns.make_scenario(name)
        oracle = s.oracle()
        report = ns.solve_normal(s.pair)
        assert np.linalg.norm(report.v_estimate - oracle["v"]) <= s.tolerance, name


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ns.Operator.affine_monotone(np.array([[-1.0, 0.0], [0.0, 1.0]]), np.zeros(2))
    with pytest.raises(ValueError):
        ns.dr_apply(balls(1.0), np.zeros(3))
    with pytest.raises(IndexError):
        ns.make_scenario("missing")

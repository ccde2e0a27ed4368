"""Tests for the lifted connection: lifts, flatness brackets, holonomy."""

import json
import math

import numpy as np
import pytest
from scipy.linalg import expm

from longeq import (
    DimensionCap,
    KZSystem,
    LoopSpec,
    PathTooClose,
    TensorOp2,
    connection_matrix,
    convergence_order,
    flatness_residuals,
    integrate_holonomy,
    lift,
    lift_exact,
    lift_float,
    make_pair,
    make_phi,
)
from longeq.jsonio import holonomy_to_json, loop_from_json, loop_to_json


def _float(mat):
    return np.array([[complex(x) for x in row] for row in mat], dtype=complex)


# ---------------------------------------------------------------------------
# Lifts
# ---------------------------------------------------------------------------


def test_lift_exact_matches_tensor_ops_lift(corpus):
    r = corpus["pair_235"]
    assert lift_exact(r, 0, 1, 3) == lift(r, 12).matrix
    assert lift_exact(r, 1, 2, 3) == lift(r, 23).matrix
    assert lift_exact(r, 0, 2, 3) == lift(r, 13).matrix


def test_lift_float_matches_lift_exact(corpus):
    r = corpus["conjugate"]
    rf = _float(r.matrix)
    for (i, j) in ((0, 1), (1, 0), (0, 2), (2, 1)):
        exact = _float(lift_exact(r, i, j, 3))
        assert np.max(np.abs(lift_float(rf, r.dim, i, j, 3) - exact)) == 0.0


def test_lift_exact_n2_identity_slots():
    r = make_phi(2, [1, 1])
    m = lift_exact(r, 0, 1, 2)
    assert m == r.matrix


# ---------------------------------------------------------------------------
# Flatness brackets
# ---------------------------------------------------------------------------


def test_flatness_identity_all_vanish():
    r = TensorOp2(2, np.eye(4, dtype=int).tolist())
    report = flatness_residuals(r, 4)
    assert len(report) == 10
    assert all(report.values())
    assert "[R12,R13+R23]" in report and "[R12,R34]" in report


def test_flatness_phi_n3():
    r = make_phi(3, [1, 1, 3])
    report = flatness_residuals(r, 3)
    assert len(report) == 6
    assert all(report.values())


def test_flatness_long_solution_includes_defining_bracket(corpus):
    # every solution of the two defining laws satisfies [R12, R13 + R23] = 0
    for key in ("pair_235", "conjugate", "graded_z2", "homothety"):
        assert flatness_residuals(corpus[key], 3)["[R12,R13+R23]"]


def test_flatness_reports_failures_for_generic_operator():
    entries = [[0, 1, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 1]]
    r = TensorOp2(2, entries)
    report = flatness_residuals(r, 3)
    assert not all(report.values())


# ---------------------------------------------------------------------------
# System construction and caps
# ---------------------------------------------------------------------------


def test_dimension_cap_parameter():
    r = make_phi(2, [1, 1])
    with pytest.raises(DimensionCap):
        KZSystem.from_op(r, 5, 0.1, dim_cap=16)
    KZSystem.from_op(r, 4, 0.1, dim_cap=16)


def test_dimension_cap_env(monkeypatch):
    r = make_phi(2, [1, 1])
    monkeypatch.setenv("LONGEQ_MAX_DIM", "8")
    with pytest.raises(DimensionCap):
        KZSystem.from_op(r, 4, 0.1)


def test_symmetric_flag(corpus):
    assert KZSystem.from_op(make_phi(2, [1, 1]), 2, 0.1).symmetric
    assert not KZSystem.from_op(corpus["pair_235"], 2, 0.1).symmetric


# ---------------------------------------------------------------------------
# Loop geometry
# ---------------------------------------------------------------------------


def test_circle_positions_close_and_start_on_base_ray():
    loop = LoopSpec([2.0, 0.0], "circle", steps=16, moving=0, center=1,
                    radius=0.5)
    z0 = loop.positions(0.0)
    # the start lies on the ray from the center through the base position
    assert abs(z0[0] - 0.5) < 1e-12
    assert abs(z0[0] - loop.positions(1.0)[0]) < 1e-12
    assert z0[1] == 0.0


def test_polygon_requires_closure_and_equal_lengths():
    sq = [1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j, 1 + 1j]
    with pytest.raises(ValueError):
        LoopSpec([1 + 1j, 0.0], "polygon", steps=8,
                 waypoints=[sq, [0.0, 0.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        LoopSpec([1 + 1j, 0.0], "polygon", steps=8,
                 waypoints=[sq[:-1], [0.0] * 4])


def test_path_too_close_guard():
    # the circle around an off-center point passes through the second
    # coordinate exactly
    with pytest.raises(PathTooClose):
        LoopSpec([1.0, 0.0, -1.0], "circle", steps=16, moving=0,
                 center=0.5 + 0.0j, radius=0.5)


# ---------------------------------------------------------------------------
# Holonomy
# ---------------------------------------------------------------------------


def _circle_system(h, radius=0.5, steps=64):
    r = make_phi(2, [1, 1])
    sys = KZSystem.from_op(r, 2, h)
    loop = LoopSpec([1.0, 0.0], "circle", steps=steps, moving=0, center=1,
                    radius=radius)
    return r, sys, loop


def test_holonomy_zero_coupling_is_exact_identity():
    _, sys, loop = _circle_system(0.0)
    w = integrate_holonomy(sys, loop)
    assert np.array_equal(w, np.eye(4, dtype=complex))
    assert convergence_order(sys, loop) == "exact"


@pytest.mark.parametrize("radius", [0.3, 0.8])
def test_holonomy_matches_exponential_oracle(radius):
    # For two points with only z^1 moving, A(t) is h * dot z / (z - z^2)
    # times a constant matrix, so the holonomy is exp(2 pi i h R^{12}).
    h = 0.05 + 0.02j
    r, sys, loop = _circle_system(h, radius=radius, steps=96)
    w = integrate_holonomy(sys, loop)
    oracle = expm(2j * math.pi * h * _float(lift_exact(r, 0, 1, 2)))
    assert np.max(np.abs(w - oracle)) < 1e-9


def test_holonomy_contractible_loop_is_identity():
    r = make_phi(2, [1, 1])
    sys = KZSystem.from_op(r, 2, 0.1)
    # circle around an explicit point that encloses no other coordinate
    loop = LoopSpec([3.0, 0.0], "circle", steps=96, moving=0,
                    center=3.5 + 0.0j, radius=0.25)
    w = integrate_holonomy(sys, loop)
    assert np.max(np.abs(w - np.eye(4))) < 1e-10


def test_holonomy_polygon_square_matches_circle_oracle():
    # a square around the fixed point is homotopic to the circle
    h = 0.05
    r = make_phi(2, [1, 1])
    sys = KZSystem.from_op(r, 2, h)
    sq = [1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j, 1 + 1j]
    loop = LoopSpec([1 + 1j, 0.0], "polygon", steps=256,
                    waypoints=[sq, [0.0] * 5])
    w = integrate_holonomy(sys, loop)
    oracle = expm(2j * math.pi * h * _float(lift_exact(r, 0, 1, 2)))
    assert np.max(np.abs(w - oracle)) < 1e-10


def test_convergence_order_is_fourth():
    _, sys, loop = _circle_system(0.1, steps=24)
    p = convergence_order(sys, loop)
    assert isinstance(p, float)
    assert 3.5 <= p <= 4.5


def test_coarse_integration_runs():
    _, sys, loop = _circle_system(0.1, steps=8)
    w = integrate_holonomy(sys, loop)
    assert w.shape == (4, 4)
    assert np.all(np.isfinite(w))


def test_connection_matrix_antisymmetry_of_pair_terms():
    # with both points moving oppositely the (i, j) and (j, i) terms add
    r = make_phi(2, [1, 1])
    sys = KZSystem.from_op(r, 2, 1.0)
    sq = [1 + 0j, 1j, -1 + 0j, -1j, 1 + 0j]
    opp = [-z for z in sq]
    loop = LoopSpec([1 + 0j, -1 + 0j], "polygon", steps=32,
                    waypoints=[sq, opp])
    a = connection_matrix(sys, loop, 0.1)
    assert a.shape == (4, 4)
    assert np.all(np.isfinite(a))


# ---------------------------------------------------------------------------
# JSON round trips
# ---------------------------------------------------------------------------


def test_loop_json_roundtrip_circle():
    loop = LoopSpec([1.0, 0.0], "circle", steps=32, moving=0, center=1,
                    radius=0.5)
    blob = json.dumps(loop_to_json(loop))
    back = loop_from_json(json.loads(blob))
    assert back.kind == "circle"
    assert back.moving == 0
    assert back.center == loop.center
    assert back.radius == loop.radius
    assert back.steps == 32
    for t in (0.0, 0.3, 0.7):
        assert back.positions(t) == loop.positions(t)


def test_loop_json_roundtrip_polygon():
    sq = [1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j, 1 + 1j]
    loop = LoopSpec([1 + 1j, 0.0], "polygon", steps=16,
                    waypoints=[sq, [0.0] * 5])
    back = loop_from_json(loop_to_json(loop))
    assert back.kind == "polygon"
    assert back.waypoints == loop.waypoints
    for t in (0.0, 0.45, 0.9):
        assert back.positions(t) == loop.positions(t)


def test_holonomy_json_shape():
    _, sys, loop = _circle_system(0.1, steps=16)
    w = integrate_holonomy(sys, loop)
    obj = holonomy_to_json(w, sys.h, sys.N, sys.n)
    assert obj["N"] == 2 and obj["n"] == 2
    assert obj["h"] == [0.1, 0.0]
    assert len(obj["matrix"]) == 4
    assert all(len(row) == 4 for row in obj["matrix"])

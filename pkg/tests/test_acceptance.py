"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import json
import time

import numpy as np
import pytest
from scipy.optimize import brentq

from kreinpert import ThetaMatrix, make_testbed
from kreinpert.curve import CurveModel, build_gamma_tilde, gamma_difference_residual
from kreinpert.dalembert import (
    Gaussian1D,
    Gaussian3D,
    LineConfig,
    MultiplierGrid,
    boost_covariance_check,
    free_resolvent_samples,
    gamma_symbol,
    line_resolvent_separable,
    symbol_difference_check,
)
from kreinpert.points import (
    PointConfig,
    PointKreinSystem,
    bound_states,
    eigenfunction_fd_residual,
)
from kreinpert.verify import (
    verify_adjoint,
    verify_gamma_difference,
    verify_gbreve_difference,
    verify_pseudo_resolvent,
)

ALPHA = -1.0 / (4.0 * np.pi)


def report(number, title, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number} ({title}): {detail}")
    assert ok, f"criterion {number}: {detail}"


def single_config(alpha=ALPHA):
    return PointConfig([[0.0, 0.0, 0.0]], ThetaMatrix.scalar(alpha))


def pair_config():
    return PointConfig([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]], ThetaMatrix.scalar(ALPHA, n=2))


def test_criterion_1_testbed_algebra():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240001)
    z, w = 1.0 + 1.0j, -0.5 + 2.0j
    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(6, 51))
        n = int(rng.integers(1, min(6, m)))
        tb = make_testbed(m, n, int(rng.integers(0, 2**32)))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        theta = ThetaMatrix(a + a.conj().T)
        worst = max(worst, verify_gamma_difference(tb, z, w))
        worst = max(worst, verify_gbreve_difference(tb, z, w, n_probes=3))
        gh = tb.gamma(z) - tb.gamma(np.conj(z)).conj().T
        worst = max(worst, float(np.linalg.norm(gh, 2)))
        worst = max(worst, verify_pseudo_resolvent(tb, theta, z, w, n_probes=3))
        worst = max(worst, verify_adjoint(tb, theta, z, n_probes=3))
    dt = time.perf_counter() - t0
    report(1, "testbed algebra", worst < 1e-12 and dt < 10.0,
           f"worst residual {worst:.3e} < 1e-12, runtime {dt:.2f}s < 10s")


def test_criterion_2_single_point_interaction():
    t0 = time.perf_counter()
    states = bound_states(single_config(), (0.1, 10.0))
    err = abs(states[0].z_star - 1.0) if len(states) == 1 else np.inf
    none_repulsive = bound_states(single_config(0.1), (0.01, 100.0)) == []
    dt = time.perf_counter() - t0
    report(2, "single point interaction",
           len(states) == 1 and err < 1e-10 and none_repulsive and dt < 1.0,
           f"one state, |z* - 1| = {err:.3e} < 1e-10, repulsive empty, runtime {dt:.2f}s < 1s")


def test_criterion_3_two_centers():
    t0 = time.perf_counter()
    s_star = brentq(lambda s: s - 1.0 - np.exp(-s), 0.5, 3.0, xtol=1e-14)
    states = bound_states(pair_config(), (0.01, 10.0))
    err = abs(states[0].z_star - s_star**2) if len(states) == 1 else np.inf
    c = states[0].coefficients
    symmetric = abs(c[0] - c[1]) < 1e-8
    dt = time.perf_counter() - t0
    report(3, "two centers",
           len(states) == 1 and err < 1e-8 and symmetric and dt < 1.0,
           f"one state (antisymmetric branch rootless), |z* - s*^2| = {err:.3e} < 1e-8, "
           f"symmetric vector, runtime {dt:.2f}s < 1s")


def test_criterion_4_scaling_law():
    base = bound_states(pair_config(), (0.01, 10.0))[0].z_star
    worst = 0.0
    for s in (0.5, 2.0):
        cfg = PointConfig(
            [[0.0, 0.0, 0.0], [s, 0.0, 0.0]], ThetaMatrix.scalar(ALPHA / s, n=2)
        )
        scaled = bound_states(cfg, (0.01 / s**2, 10.0 / s**2))[0].z_star
        worst = max(worst, abs(scaled - base / s**2))
    report(4, "scaling law", worst < 1e-8, f"worst |defect| = {worst:.3e} < 1e-8")


def test_criterion_5_difference_identity_quadrature():
    system = PointKreinSystem([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    point_res = verify_gamma_difference(system, 2.0 + 1.0j, 3.0 - 2.0j)
    c = CurveModel.circle(1.0, 64)
    r64 = gamma_difference_residual(1.0 + 1.0j, 2.0, c, 64)
    r128 = gamma_difference_residual(1.0 + 1.0j, 2.0, c, 128)
    ok = point_res < 1e-8 and r64 < 1e-5 and r128 < r64
    report(5, "difference identity", ok,
           f"point {point_res:.3e} < 1e-8; curve N=64 {r64:.3e} < 1e-5, N=128 {r128:.3e} decreasing")


def test_criterion_6_epsilon_independence():
    c = CurveModel.circle(1.0, 64)
    mats = [build_gamma_tilde(1.0, c, e).matrix for e in (c.L / 40, c.L / 20, c.L / 8)]
    spread = max(float(np.max(np.abs(mats[0] - m))) for m in mats[1:])
    report(6, "epsilon independence", spread < 1e-6, f"max spread {spread:.3e} < 1e-6")


def test_criterion_7_eigenfunction_residual():
    t0 = time.perf_counter()
    worst = 0.0
    for cfg in (single_config(), pair_config()):
        state = bound_states(cfg, (0.01, 10.0))[0]
        worst = max(worst, eigenfunction_fd_residual(state, cfg, spacing=0.01, exclusion=0.1))
    dt = time.perf_counter() - t0
    report(7, "eigenfunction residual", worst < 1e-3 and dt < 60.0,
           f"worst relative residual {worst:.3e} < 1e-3, runtime {dt:.1f}s < 60s")


def test_criterion_8_symbol_identity():
    zs = [1.0 + 1.0j, 2.0 - 0.5j, 0.5 + 3.0j, -1.0 + 2.0j, 4.0 + 0.25j]
    ws = [3.0 + 2.0j, -0.5 - 1.0j, 1.5 + 0.5j, 2.5 - 2.0j, 0.25 + 4.0j]
    hs = [0.0, 1.0, 2.5]
    worst = max(symbol_difference_check(h, z, w) for z in zs for w in ws for h in hs)
    conj = max(
        abs(gamma_symbol(h, np.conj(z)) - np.conj(gamma_symbol(h, z)))
        for z in zs for h in hs
    )
    phi, varphi, grid = Gaussian1D(0.0, 1.0), Gaussian3D(width=1.0), MultiplierGrid(1024, 0.05)
    z, x = 2.0j, (0.5, 0.0, 0.0)
    free = free_resolvent_samples(z, phi, varphi, grid, x)
    thetas = np.array([1e2, 1e4, 1e6])
    norms = [
        np.linalg.norm(line_resolvent_separable(z, LineConfig(theta=t), phi, varphi, grid, x) - free)
        for t in thetas
    ]
    slope = float(np.polyfit(np.log(thetas), np.log(norms), 1)[0])
    ok = worst < 1e-8 and conj <= 1e-15 and abs(slope + 1.0) < 0.05
    report(8, "symbol identity", ok,
           f"grid residual {worst:.3e} < 1e-8, conjugation {conj:.1e} <= 1e-15, "
           f"theta slope {slope:.4f} within -1 +/- 0.05")


def test_criterion_9_boost_covariance():
    phi, varphi, grid = Gaussian1D(0.0, 1.0), Gaussian3D(width=1.0), MultiplierGrid(1024, 0.05)
    rng = np.random.default_rng(3)
    pts = np.column_stack([
        rng.uniform(-1.5, 1.5, 16),
        rng.uniform(0.3, 1.5, 16) * rng.choice([-1.0, 1.0], 16),
    ])
    rest = boost_covariance_check(LineConfig(theta=0.7), 2.0j, phi, varphi, grid, pts)
    shifted = boost_covariance_check(
        LineConfig(y=(0.4, -0.6, 0.0, 0.0), theta=0.7), 2.0j, phi, varphi, grid, pts
    )
    moving = boost_covariance_check(
        LineConfig(v=(0.5, 0.0, 0.0), theta=0.7), 2.0j, phi, varphi, grid, pts
    )
    ok = rest < 1e-10 and shifted < 1e-10 and moving < 1e-4
    report(9, "boost covariance", ok,
           f"rest {rest:.1e} < 1e-10, translated {shifted:.3e} < 1e-10, v=0.5 {moving:.3e} < 1e-4")


def test_criterion_10_verify_all(tmp_path):
    from kreinpert.cli import main

    t0 = time.perf_counter()
    code = main(["verify", "all", "--out", str(tmp_path / "out")])
    dt = time.perf_counter() - t0
    report_data = json.loads((tmp_path / "out" / "report.json").read_text())
    listed = all(
        isinstance(c["residual"], float) and isinstance(c["tolerance"], float)
        for c in report_data["checks"]
    )
    ok = code == 0 and dt < 300.0 and listed and len(report_data["checks"]) >= 20
    report(10, "verify all", ok,
           f"exit {code}, runtime {dt:.1f}s < 300s, "
           f"{len(report_data['checks'])} identities listed with residual and tolerance")

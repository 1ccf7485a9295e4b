"""Command-line front end: verification suites and spectral computations.

Commands
--------
verify {testbed|points|curve|dalembert|all}
    Run a module's identity suite; exit 0 iff every residual is below its
    tolerance.  One line per identity, plus a JSON report.
points {bound-states|kernel|scan}
    Spectral computations for a point-interaction config.
curve / dalembert
    Scans, roots, and residual reports for the other two models.

Every run writes a manifest.json echoing the inputs; outputs are
deterministic given (command, config, seed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import GammaSingularError, KreinpertError
from .system import ThetaMatrix

#: default tolerances, overridable with --tol NAME=VALUE
DEFAULT_TOLERANCES = {
    "gamma-difference": 1e-12,
    "gamma-hat-hermitian": 1e-12,
    "pseudo-resolvent": 1e-12,
    "adjoint-symmetry": 1e-12,
    "gbreve-difference": 1e-12,
    "point-gamma-difference": 1e-8,
    "point-gamma-derivative": 1e-7,
    "point-single-bound-state": 1e-10,
    "point-pair-bound-state": 1e-8,
    "point-scaling-law": 1e-8,
    "curve-eps-independence": 1e-6,
    "curve-hermitian": 1e-10,
    "curve-difference-n64": 1e-5,
    "curve-difference-decrease": 1.0,
    "curve-derivative": 1e-5,
    "symbol-conjugation": 1e-15,
    "symbol-difference-grid": 1e-8,
    "dominant-theta-slope": 0.05,
    "boost-identity": 0.0,
    "boost-translation": 1e-10,
    "boost-moving": 1e-4,
    "line-pseudo-resolvent": 1e-4,
    "line-adjoint": 1e-5,
}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


class Reporter:
    def __init__(self, tolerances):
        self.tolerances = tolerances
        self.checks = []

    def add(self, name, residual):
        tol = self.tolerances[name]
        passed = residual <= tol
        self.checks.append(
            {"name": name, "residual": residual, "tolerance": tol, "passed": passed}
        )
        status = "pass" if passed else "FAIL"
        print(f"[{status}] {name}: residual {residual:.3e} (tolerance {tol:.3e})")
        return passed

    @property
    def passed(self):
        return all(c["passed"] for c in self.checks)


def _write_json(path: Path, data):
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _write_manifest(out: Path, args, extra=None):
    manifest = {
        "command": args.command,
        "config": getattr(args, "config", None),
        "out": str(out),
        "seed": getattr(args, "seed", None),
        "tolerance_overrides": getattr(args, "tol", None) or {},
        "version": __version__,
    }
    if extra:
        manifest.update(extra)
    _write_json(out / "manifest.json", manifest)


def _parse_grid(text, default):
    if text is None:
        return default
    try:
        a, b, n = text.split(":")
        return float(a), float(b), int(n)
    except ValueError as exc:
        raise KreinpertError(f"--grid expects a:b:n, got {text!r}") from exc


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise KreinpertError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise KreinpertError(f"config file is not valid JSON: {exc}") from exc


# -- verify suites -------------------------------------------------------


def _verify_testbed(rep, seed):
    from .testbed import make_testbed
    from .verify import (
        verify_adjoint,
        verify_gamma_difference,
        verify_gbreve_difference,
        verify_pseudo_resolvent,
    )

    z, w = 1.0 + 1.0j, -0.5 + 2.0j
    worst = dict.fromkeys(
        ["gamma-difference", "gamma-hat-hermitian", "pseudo-resolvent",
         "adjoint-symmetry", "gbreve-difference"], 0.0)
    rng = np.random.default_rng(np.uint64(seed))
    for _ in range(5):
        m = int(rng.integers(8, 30))
        n = int(rng.integers(1, 5))
        system = make_testbed(m, n, int(rng.integers(0, 2**32)))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        theta = ThetaMatrix(a + a.conj().T)
        worst["gamma-difference"] = max(
            worst["gamma-difference"], verify_gamma_difference(system, z, w))
        gh = system.gamma(z) - system.gamma(z.conjugate()).conj().T
        worst["gamma-hat-hermitian"] = max(
            worst["gamma-hat-hermitian"], float(np.linalg.norm(gh, 2)))
        worst["pseudo-resolvent"] = max(
            worst["pseudo-resolvent"],
            verify_pseudo_resolvent(system, theta, z, w, n_probes=4, seed=seed))
        worst["adjoint-symmetry"] = max(
            worst["adjoint-symmetry"],
            verify_adjoint(system, theta, z, n_probes=4, seed=seed))
        worst["gbreve-difference"] = max(
            worst["gbreve-difference"],
            verify_gbreve_difference(system, z, w, n_probes=4, seed=seed))
    for name, residual in worst.items():
        rep.add(name, residual)


def _default_point_config():
    from .points import PointConfig

    alpha = -1.0 / (4.0 * np.pi)
    return PointConfig([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]], ThetaMatrix.scalar(alpha, n=2))


def _verify_points(rep, config):
    from scipy.optimize import brentq

    from .points import (
        PointConfig,
        PointKreinSystem,
        bound_states,
        gamma_derivative_check,
    )
    from .verify import verify_gamma_difference

    system = PointKreinSystem(config.centers)
    rep.add("point-gamma-difference",
            verify_gamma_difference(system, 2.0 + 1.0j, 3.0 - 2.0j))
    rep.add("point-gamma-derivative", gamma_derivative_check(2.0 + 1.0j, config))

    alpha = -1.0 / (4.0 * np.pi)
    single = PointConfig([[0.0, 0.0, 0.0]], ThetaMatrix.scalar(alpha))
    roots = bound_states(single, (0.1, 10.0))
    res = abs(roots[0].z_star - 1.0) if len(roots) == 1 else np.inf
    rep.add("point-single-bound-state", res)

    pair = _default_point_config()
    s_star = brentq(lambda s: s - 1.0 - np.exp(-s), 0.5, 3.0, xtol=1e-14)
    roots = bound_states(pair, (0.01, 10.0))
    res = abs(roots[0].z_star - s_star**2) if len(roots) == 1 else np.inf
    rep.add("point-pair-bound-state", res)

    worst = 0.0
    for s in (0.5, 2.0):
        scaled = PointConfig(pair.centers * s, ThetaMatrix.scalar(alpha / s, n=2))
        sr = bound_states(scaled, (0.01 / s**2, 10.0 / s**2))
        worst = max(worst, abs(sr[0].z_star - roots[0].z_star / s**2))
    rep.add("point-scaling-law", worst)


def _verify_curve(rep, curve):
    from .curve import build_gamma_tilde, gamma_difference_residual

    z = 1.0
    eps_list = (curve.L / 40.0, curve.L / 20.0, curve.L / 8.0)
    mats = [build_gamma_tilde(z, curve, e).matrix for e in eps_list]
    spread = max(float(np.max(np.abs(mats[0] - m))) for m in mats[1:])
    rep.add("curve-eps-independence", spread)
    rep.add("curve-hermitian", float(np.max(np.abs(mats[1] - mats[1].conj().T))))

    r64 = gamma_difference_residual(1.0 + 1.0j, 2.0, curve, 64)
    r128 = gamma_difference_residual(1.0 + 1.0j, 2.0, curve, 128)
    rep.add("curve-difference-n64", r64)
    # strictly decreasing under mesh doubling; report the ratio
    rep.add("curve-difference-decrease", r128 / r64 if r64 > 0 else np.inf)

    h = 1e-5
    eps = curve.L / 20.0
    fd = (build_gamma_tilde(z + h, curve, eps).matrix
          - build_gamma_tilde(z - h, curve, eps).matrix) / (2.0 * h)
    d = np.linalg.norm(curve.points[:, None, :] - curve.points[None, :, :], axis=-1)
    sz = np.sqrt(z)
    analytic = curve.h * np.exp(-sz * d) / (8.0 * np.pi * sz)
    if curve.closed:
        # the matrix diagonal is an exact integral, the analytic kernel a
        # trapezoid weight; remove the |u|-kink quadrature defect
        analytic -= np.eye(curve.N) * curve.h**2 / (48.0 * np.pi)
    rep.add("curve-derivative", float(np.max(np.abs(fd - analytic))))


def _verify_dalembert(rep):
    from .dalembert import (
        Gaussian1D,
        Gaussian3D,
        LineConfig,
        MultiplierGrid,
        adjoint_pairing_residual,
        boost_covariance_check,
        free_resolvent_samples,
        gamma_symbol,
        line_resolvent_separable,
        pseudo_resolvent_residual,
        symbol_difference_check,
    )

    zs = [1.0 + 1.0j, 2.0 - 0.5j, 0.5 + 3.0j, -1.0 + 2.0j, 4.0 + 0.25j]
    ws = [3.0 + 2.0j, -0.5 - 1.0j, 1.5 + 0.5j, 2.5 - 2.0j, 0.25 + 4.0j]
    hs = [0.0, 1.0, 2.5]
    conj = max(
        abs(gamma_symbol(h, z.conjugate()) - gamma_symbol(h, z).conjugate())
        for z in zs for h in hs
    )
    rep.add("symbol-conjugation", float(conj))
    worst = max(
        symbol_difference_check(h, z, w) for z in zs for w in ws for h in hs
    )
    rep.add("symbol-difference-grid", float(worst))

    grid = MultiplierGrid(1024, 0.05)
    phi = Gaussian1D(0.0, 1.0)
    vp = Gaussian3D((0.0, 0.0, 0.0), 1.0)
    z = 2.0j
    x = (0.5, 0.0, 0.0)
    free = free_resolvent_samples(z, phi, vp, grid, x)
    thetas = (1e2, 1e4, 1e6)
    norms = [
        float(np.linalg.norm(line_resolvent_separable(z, LineConfig(theta=t), phi, vp, grid, x) - free))
        for t in thetas
    ]
    slope = float(np.polyfit(np.log(thetas), np.log(norms), 1)[0])
    rep.add("dominant-theta-slope", abs(slope + 1.0))

    rng = np.random.default_rng(3)
    pts = np.column_stack([
        rng.uniform(-1.5, 1.5, 16),
        rng.uniform(0.3, 1.5, 16) * rng.choice([-1.0, 1.0], 16),
    ])
    rep.add("boost-identity",
            boost_covariance_check(LineConfig(theta=0.7), z, phi, vp, grid, pts))
    rep.add("boost-translation",
            boost_covariance_check(LineConfig(y=(0.4, -0.6, 0, 0), theta=0.7), z, phi, vp, grid, pts))
    rep.add("boost-moving",
            boost_covariance_check(LineConfig(v=(0.5, 0, 0), theta=0.7), z, phi, vp, grid, pts))

    cfg = LineConfig(theta=0.7)
    rep.add("line-pseudo-resolvent",
            pseudo_resolvent_residual(2.0j, 1.0 + 1.0j, cfg, phi, vp, grid, (0.5, 0.1, 0.0)))
    rep.add("line-adjoint",
            adjoint_pairing_residual(2.0j, cfg, phi, vp,
                                     Gaussian1D(0.3, 0.8), Gaussian3D((0.0, 0.4, 0.0), 1.2), grid))


def cmd_verify(args, out: Path) -> int:
    tolerances = dict(DEFAULT_TOLERANCES)
    tolerances.update(args.tol or {})
    rep = Reporter(tolerances)
    scope = args.scope
    if scope in ("points", "all") and args.config:
        from .points import PointConfig

        point_config = PointConfig.from_dict(_load_json(args.config))
    else:
        point_config = _default_point_config()
    if scope in ("testbed", "all"):
        _verify_testbed(rep, args.seed)
    if scope in ("points", "all"):
        _verify_points(rep, point_config)
    if scope in ("curve", "all"):
        from .curve import CurveModel

        _verify_curve(rep, CurveModel.circle(1.0, 64))
    if scope in ("dalembert", "all"):
        _verify_dalembert(rep)
    _write_json(out / "report.json", {
        "scope": scope,
        "checks": rep.checks,
        "passed": rep.passed,
    })
    _write_manifest(out, args)
    print(("all checks passed" if rep.passed else "SOME CHECKS FAILED")
          + f" ({len(rep.checks)} identities)")
    return 0 if rep.passed else 1


# -- model commands ------------------------------------------------------


def _load_point_config(args):
    from .points import PointConfig

    if not args.config:
        raise KreinpertError("points commands require --config")
    return PointConfig.from_dict(_load_json(args.config))


def cmd_points(args, out: Path) -> int:
    from .points import bound_states, gamma_matrix, resolvent_kernel

    config = _load_point_config(args)
    data = _load_json(args.config)
    if args.subcommand == "bound-states":
        a, b, n = _parse_grid(args.grid, (0.01, 100.0, 64))
        states = bound_states(config, (a, b), int(n))
        _write_json(out / "bound_states.json", [
            {
                "z_star": s.z_star,
                "energy": -s.z_star,
                "multiplicity": s.multiplicity,
                "coefficients": [[c.real, c.imag] for c in s.coefficients],
            }
            for s in states
        ])
    elif args.subcommand == "scan":
        a, b, n = _parse_grid(args.grid, (0.01, 100.0, 64))
        lams = np.geomspace(a, b, int(n))
        rows = ["lambda," + ",".join(f"mu_{k}" for k in range(config.n))]
        for lam in lams:
            evs = np.linalg.eigvalsh(gamma_matrix(lam, config).real)
            rows.append(",".join(_fmt(v) for v in (lam, *evs)))
        (out / "scan.csv").write_text("\n".join(rows) + "\n")
    elif args.subcommand == "kernel":
        spec = data.get("kernel", {})
        x0 = np.asarray(spec.get("x0", [-1.0, 0.0, 0.0]), dtype=float)
        x1 = np.asarray(spec.get("x1", [1.0, 0.0, 0.0]), dtype=float)
        zre, zim = spec.get("z", [2.0, 1.0])
        z = complex(zre, zim)
        xp = np.asarray(spec.get("x_prime", [0.0, 0.5, 0.5]), dtype=float)
        _, _, n = _parse_grid(args.grid, (0.0, 1.0, 65))
        rows = ["s,x1,x2,x3,re,im,status"]
        for s in np.linspace(0.0, 1.0, int(n)):
            x = (1.0 - s) * x0 + s * x1
            try:
                val = resolvent_kernel(z, config, x, xp)
                rows.append(",".join([_fmt(s), *map(_fmt, x), _fmt(val.real), _fmt(val.imag), "ok"]))
            except (KreinpertError, GammaSingularError):
                rows.append(",".join([_fmt(s), *map(_fmt, x), "nan", "nan", "singular"]))
        (out / "kernel.csv").write_text("\n".join(rows) + "\n")
    _write_manifest(out, args, {"subcommand": args.subcommand})
    return 0


def _curve_from_config(data):
    from .curve import CurveModel

    kind = data.get("kind")
    n = int(data.get("N", 64))
    if kind == "circle":
        return CurveModel.circle(float(data["radius"]), n)
    if kind == "segment":
        return CurveModel.segment(float(data["length"]), n)
    if kind == "samples":
        return CurveModel.from_samples(data["points"], bool(data.get("closed", False)), n)
    raise KreinpertError(f"unknown curve kind: {kind!r}")


def cmd_curve(args, out: Path) -> int:
    from .curve import build_gamma_tilde, curve_bound_states

    if not args.config:
        raise KreinpertError("curve command requires --config")
    data = _load_json(args.config)
    curve = _curve_from_config(data)
    beta = float(data.get("beta", -1.0))
    a, b, n = _parse_grid(args.grid, (1.0, 1e6, 24))
    eps = float(data.get("epsilon", curve.L / 20.0))

    lams = np.geomspace(a, b, int(n))
    rows = ["lambda,min_eigenvalue"]
    for lam in lams:
        m = build_gamma_tilde(lam, curve, eps).matrix
        mu = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T).real)[0]) + beta
        rows.append(f"{_fmt(lam)},{_fmt(mu)}")
    (out / "scan.csv").write_text("\n".join(rows) + "\n")

    roots = curve_bound_states(curve, beta, (a, b), int(n))
    fine = curve_bound_states(curve.resample(2 * curve.N), beta, (a, b), int(n))
    report = []
    for s in roots:
        match = min((f.lam_star for f in fine), default=np.nan,
                    key=lambda lf: abs(lf - s.lam_star))
        report.append({
            "lambda_star": s.lam_star,
            "refined_lambda_star": match,
            "relative_shift": abs(match - s.lam_star) / s.lam_star,
            "vector": [[c.real, c.imag] for c in s.vector.astype(complex)],
        })
    _write_json(out / "roots.json", report)
    _write_manifest(out, args)
    return 0


def cmd_dalembert(args, out: Path) -> int:
    from .dalembert import (
        Gaussian1D,
        Gaussian3D,
        LineConfig,
        MultiplierGrid,
        gamma_symbol,
        line_resolvent_separable,
        symbol_difference_check,
    )

    data = _load_json(args.config) if args.config else {}
    cfg = LineConfig(
        y=tuple(data.get("y", (0.0, 0.0, 0.0, 0.0))),
        v=tuple(data.get("v", (0.0, 0.0, 0.0))),
        theta=float(data.get("theta", 1.0)),
    )
    phi_spec = data.get("phi", {})
    vp_spec = data.get("varphi", {})
    grid_spec = data.get("grid", {})
    phi = Gaussian1D(float(phi_spec.get("center", 0.0)), float(phi_spec.get("width", 1.0)))
    vp = Gaussian3D(width=float(vp_spec.get("width", 1.0)))
    grid = MultiplierGrid(int(grid_spec.get("n", 1024)), float(grid_spec.get("spacing", 0.05)))
    z = complex(*data.get("z", (0.0, 2.0)))
    x = tuple(data.get("x", (0.5, 0.0, 0.0)))

    checks = []
    zs = [1.0 + 1.0j, 2.0 - 0.5j, 0.5 + 3.0j]
    for h in (0.0, 1.0, 2.5):
        for zz in zs:
            checks.append({
                "name": f"symbol-difference h={h} z={zz}",
                "residual": symbol_difference_check(h, zz, 3.0 + 2.0j),
                "tolerance": 1e-8,
            })
            checks.append({
                "name": f"symbol-conjugation h={h} z={zz}",
                "residual": abs(gamma_symbol(h, zz.conjugate())
                                - gamma_symbol(h, zz).conjugate()),
                "tolerance": 1e-15,
            })
    for c in checks:
        c["passed"] = c["residual"] <= c["tolerance"]
    _write_json(out / "symbol_report.json", checks)

    if any(vi != 0.0 for vi in cfg.v):
        samples = None  # moving lines have no direct solver; boost checks cover them
    else:
        samples = line_resolvent_separable(z, cfg, phi, vp, grid, x)
        rows = ["t,re,im"]
        for t, val in zip(grid.t, samples):
            rows.append(f"{_fmt(t)},{_fmt(val.real)},{_fmt(val.imag)}")
        (out / "resolvent.csv").write_text("\n".join(rows) + "\n")
    _write_manifest(out, args)
    return 0 if all(c["passed"] for c in checks) else 1


# -- entry point ---------------------------------------------------------


def _tol_pair(text):
    name, _, value = text.partition("=")
    if not value:
        raise argparse.ArgumentTypeError(f"--tol expects NAME=VALUE, got {text!r}")
    return name, float(value)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kreinpert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="model config JSON")
        sp.add_argument("--out", default="kreinpert-run", help="output directory")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--tol", type=_tol_pair, action="append", metavar="NAME=VALUE")
        sp.add_argument("--grid", help="a:b:n range specification")

    sp = sub.add_parser("verify", help="run identity suites")
    sp.add_argument("scope", choices=["testbed", "points", "curve", "dalembert", "all"])
    common(sp)
    sp = sub.add_parser("points", help="point-interaction computations")
    sp.add_argument("subcommand", choices=["bound-states", "kernel", "scan"])
    common(sp)
    sp = sub.add_parser("curve", help="curve-perturbation computations")
    common(sp)
    sp = sub.add_parser("dalembert", help="line-perturbed d'Alembertian computations")
    common(sp)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.tol:
        args.tol = dict(args.tol)
        unknown = set(args.tol) - set(DEFAULT_TOLERANCES)
        if unknown:
            print(f"unknown tolerance names: {sorted(unknown)}", file=sys.stderr)
            return 2
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    handlers = {
        "verify": cmd_verify,
        "points": cmd_points,
        "curve": cmd_curve,
        "dalembert": cmd_dalembert,
    }
    try:
        return handlers[args.command](args, out)
    except KreinpertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

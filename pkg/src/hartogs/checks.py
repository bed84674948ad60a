"""Named verification checks over all modules, with machine-readable rows.

Each check produces a CheckRow carrying a stable identifier, a mathematical
claim string from the static registry below, the governing observed scalar,
the expected value or bound, the tolerance, and the pass verdict.  Report
serialization lives in :mod:`hartogs.reports`; the CLI composes these
runners.  All randomness is derived from the single seed in RunParams, so
identical parameters give identical rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import bergman, boundary, dbar, geometry, spectral
from .points import PolarPoint, angle_diff
from .quadrature import QuadratureSpec, integrate_T, sample_T_arrays

__all__ = ["CheckRow", "RunParams", "CLAIMS", "run_command", "poincare_field_check"]

CLAIMS = {
    "uniform.cone.length": "curve length <= (5+2*pi)*|p1-p2| between cone points; 5+2*pi < 12",
    "uniform.cone.cigar": "min(|p-p1|,|p-p2|) <= (5+2*pi)*dist(p, cone boundary) along the curve",
    "uniform.triangle.length": "curve length <= c*|p1-p2| on T, c = (1+4*sqrt2)*(5+2*pi+4*sqrt2)/sqrt2 < 80",
    "uniform.triangle.cigar": "min(|p-p1|,|p-p2|) <= c*dist(p, bT) along the curve, same c < 80",
    "uniform.cone.containment": "constructed curves keep a positive distance to the cone boundary",
    "uniform.triangle.containment": "constructed curves keep a positive distance to bT",
    "uniform.polar_bound": "|r1-r2|+|s1-s2|+min(r1,r2)*|da|+min(s1,s2)*|db| <= 3*|p1-p2| for wrapped angle differences",
    "adr.profile.origin": "unit-ball measure of the cone boundary at the apex equals 2*pi^2/3",
    "adr.profile.limit": "unit-ball measure of the cone boundary tends to 4*pi/3 far from the apex",
    "adr.dilation": "sigma(B_rho(p) cap cone boundary) = rho^3 * f(|p|/rho)",
    "adr.total": "sigma(bT) = (4*sqrt2/3 + 2)*pi^2, attained by any ball of radius diam T = 2*sqrt2",
    "adr.scan.min": "sigma(B_rho(p) cap bT)/rho^3 stays above the frozen window floor (lower regularity)",
    "adr.scan.max": "sigma(B_rho(p) cap bT)/rho^3 stays below the frozen window cap (upper regularity)",
    "adr.scan.refinement": "ratios sigma/rho^3 change by a factor in [1/16, 16] when rho is halved",
    "bergman.orthogonality": "the functions (z/w)^j * w^k are pairwise orthogonal in L^2(T)",
    "bergman.norms": "||(z/w)^j * w^k||^2 = pi^2/((j+1)*(k+2))",
    "bergman.projection.identity": "projection onto the block recovers block elements coefficient-exactly",
    "bergman.projection.antiholo": "the orthogonal projection onto the holomorphic block annihilates conj(z)",
    "bergman.kernel.hermitian": "truncated kernel satisfies K(p,q) = conj(K(q,p))",
    "dbar.norm.anchor": "||dbar u_1||_{L^2(T)} = pi/2 for u = 1/w",
    "dbar.scaling": "||dbar u_delta||^2 = delta * ||dbar u_1||^2 (squared norm linear in delta)",
    "dbar.gap.monotone": "||u_delta - u|| decreases strictly as delta halves from 1/2 to 2^-8",
    "dbar.gap.decay": "||u_delta - u|| -> 0: the delta=2^-8 gap is below 10% of the delta=1/2 gap",
    "dbar.cutoff.gradbound": "|d chi_delta| <= (15/8)/delta everywhere",
    "dbar.cutoff.cs": "int |dbar chi|^2 |f|^2 <= sqrt(int |dbar chi|^4) * sqrt(int |f|^4) on shared nodes",
    "dbar.cutoff.firstfactor": "int over B_{2 delta} cap T of |dbar chi_delta|^4 is independent of delta",
    "dbar.cutoff.decay.smooth": "for bounded f the shell energy int |dbar chi|^2 |f|^2 decays like delta^2",
    "dbar.cutoff.borderline": "for |f| = 1/|w| the shell energy is delta-independent; |f|^4 is not integrable",
    "spectrum.zero": "the (0,0) Neumann mode has eigenvalue 0 with constant eigenfunction",
    "spectrum.kernel": "the zero eigenvalue is simple: the second (0,0) eigenvalue stays away from 0",
    "spectrum.gap.stability": "the first nonzero Neumann eigenvalue is grid-stable between n and 2n",
    "spectrum.poincare": "||f - mean f||^2 <= C * ||df||^2 with C = 1/lambda_min over low modes",
    "spectrum.galerkin": "discrete Neumann solutions satisfy (du, dv) = (f - mean f, v) for all test vectors",
}


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    claim: str
    parameter_json: str
    observed: float
    expected: float
    tolerance: float
    passed: bool


def _row(check_id: str, params: dict, observed: float, expected: float, tolerance: float, passed: bool) -> CheckRow:
    return CheckRow(
        check_id=check_id,
        claim=CLAIMS[check_id],
        parameter_json=json.dumps(params, sort_keys=True),
        observed=float(observed),
        expected=float(expected),
        tolerance=float(tolerance),
        passed=bool(passed),
    )


@dataclass(frozen=True)
class RunParams:
    """Desk-scale defaults for the check battery; every knob CLI-exposed."""

    seed: int = 7
    level: int = 24
    surface_cells: int = 512
    shell_level: int = 96
    domain: str = "both"
    pairs: int = 2_000
    curve_samples: int = 256
    polar_pairs: int = 200_000
    centers: int = 16
    rho_set: tuple = (0.01, 0.1, 0.5, 1.0, 2.0)
    dilation_cases: int = 40
    jmax: int = 8
    kmax: int = 8
    deltas: tuple = (0.5, 0.1, 0.01)
    grid: int = 48
    count: int = 6
    mode_cut: int = 2
    poincare_grid: int = 64
    n_fields: int = 25

    def quad(self) -> QuadratureSpec:
        return QuadratureSpec(
            level=self.level,
            seed=self.seed,
            surface_cells=self.surface_cells,
            shell_level=self.shell_level,
        )


# ---------------------------------------------------------------- uniform --


def run_uniform(params: RunParams) -> list[CheckRow]:
    if params.domain not in ("T", "T_infinity", "both"):
        raise ValueError(f"domain must be 'T', 'T_infinity' or 'both', got {params.domain!r}")
    rows = []
    for domain, key, bound in (
        ("T_infinity", "cone", geometry.C_TINF),
        ("T", "triangle", geometry.C_T),
    ):
        if params.domain != "both" and domain != params.domain:
            continue
        rep = geometry.verify_uniform(domain, params.pairs, params.curve_samples, seed=params.seed)
        base = {"domain": domain, "pairs": params.pairs, "curve_samples": params.curve_samples, "seed": params.seed}
        rows.append(_row(f"uniform.{key}.length", base, rep.max_length_ratio, bound, 0.0, rep.max_length_ratio <= bound))
        rows.append(_row(f"uniform.{key}.cigar", base, rep.max_dist_ratio, bound, 0.0, rep.max_dist_ratio <= bound))
        rows.append(_row(f"uniform.{key}.containment", base, rep.min_boundary_dist, 0.0, 0.0,
                         rep.min_boundary_dist > 0.0))

    rng = np.random.default_rng(params.seed + 1)
    n = params.polar_pairs
    r1, r2 = rng.uniform(0.0, 2.0, (2, n))
    s1, s2 = rng.uniform(0.0, 2.0, (2, n))
    a1, a2, b1, b2 = rng.uniform(-np.pi, np.pi, (4, n))
    da = np.abs(angle_diff(a1, a2))
    db = np.abs(angle_diff(b1, b2))
    lhs = np.abs(r1 - r2) + np.abs(s1 - s2) + np.minimum(r1, r2) * da + np.minimum(s1, s2) * db
    dist = geometry._euclid(r1, a1, s1, b1, r2, a2, s2, b2)
    ratio = np.divide(lhs, 3.0 * dist, out=np.zeros_like(lhs), where=dist > 0)
    violations = int(np.sum(ratio > 1.0))
    rows.append(
        _row(
            "uniform.polar_bound",
            {"pairs": n, "seed": params.seed + 1, "violations": violations},
            float(ratio.max()),
            1.0,
            0.0,
            violations == 0,
        )
    )
    return rows


# -------------------------------------------------------------------- adr --


def run_adr(params: RunParams) -> list[CheckRow]:
    spec = params.quad()
    rows = []

    f0 = boundary.f_profile(0.0, spec)
    target0 = 2.0 * np.pi**2 / 3.0
    rows.append(
        _row("adr.profile.origin", {"t": 0.0, "cells": spec.surface_cells}, f0, target0, 1e-4,
             abs(f0 - target0) <= 1e-4 * target0)
    )
    f200 = boundary.f_profile(200.0, spec)
    limit = 4.0 * np.pi / 3.0
    rows.append(
        _row("adr.profile.limit", {"t": 200.0, "cells": spec.surface_cells}, f200, limit, 1e-2,
             abs(f200 - limit) <= 1e-2 * limit)
    )

    rng = np.random.default_rng(params.seed + 2)
    worst = 0.0
    for _ in range(params.dilation_cases):
        rc = rng.uniform(0.05, 2.0)
        rho = rng.uniform(0.05, 2.0)
        a, b = rng.uniform(-np.pi, np.pi, 2)
        p = PolarPoint(rc / np.sqrt(2.0), a, rc / np.sqrt(2.0), b)
        via_formula = boundary.sigma_ball_Tinf(p, rho, spec)
        direct = boundary.sigma_ball_Tinf_direct(p, rho, spec)
        worst = max(worst, abs(via_formula - direct) / max(direct, 1e-300))
    rows.append(
        _row("adr.dilation", {"cases": params.dilation_cases, "seed": params.seed + 2}, worst, 0.0, 1e-2, worst <= 1e-2)
    )

    p_cone = PolarPoint(0.25, 0.3, 0.25, -1.1)
    total = boundary.sigma_ball_bT(p_cone, boundary.DIAM_T, spec)
    rows.append(
        _row("adr.total", {"rho": boundary.DIAM_T}, total, boundary.SIGMA_BT_TOTAL, 1e-3,
             abs(total - boundary.SIGMA_BT_TOTAL) <= 1e-3 * boundary.SIGMA_BT_TOTAL)
    )

    rho_all = sorted(set(list(params.rho_set) + [x / 2.0 for x in params.rho_set]))
    report = boundary.adr_scan(params.centers, rho_all, params.seed + 3, spec)
    scan_params = {"centers": params.centers, "rho_set": rho_all, "seed": params.seed + 3}
    rows.append(_row("adr.scan.min", scan_params, report.min_ratio, report.window[0], 0.0,
                     report.min_ratio >= report.window[0]))
    rows.append(_row("adr.scan.max", scan_params, report.max_ratio, report.window[1], 0.0,
                     report.max_ratio <= report.window[1]))

    by_center: dict = {}
    for (p, rho, sig) in report.samples:
        by_center.setdefault(id(p), {})[rho] = sig / rho**3
    worst_factor = 1.0
    for ratios in by_center.values():
        for rho in params.rho_set:
            lo = rho / 2.0
            if rho in ratios and lo in ratios and ratios[lo] > 0:
                fac = ratios[rho] / ratios[lo]
                worst_factor = max(worst_factor, fac, 1.0 / fac)
    rows.append(_row("adr.scan.refinement", scan_params, worst_factor, 16.0, 0.0, worst_factor <= 16.0))
    return rows


# ---------------------------------------------------------------- bergman --


def run_bergman(params: RunParams) -> list[CheckRow]:
    spec = params.quad()
    rows = []
    idxs, G = bergman.basis_gram(params.jmax, params.kmax, spec)
    norms = np.sqrt(np.real(np.diag(G)))
    offdiag = np.abs(G) / np.outer(norms, norms)
    np.fill_diagonal(offdiag, 0.0)
    block = {"jmax": params.jmax, "kmax": params.kmax, "level": spec.level}
    rows.append(_row("bergman.orthogonality", block, float(offdiag.max()), 0.0, 1e-8, float(offdiag.max()) <= 1e-8))

    closed = np.array([bergman.v_norm_sq(i) for i in idxs])
    rel = np.abs(np.real(np.diag(G)) - closed) / closed
    rows.append(_row("bergman.norms", block, float(rel.max()), 0.0, 1e-6, float(rel.max()) <= 1e-6))

    target = bergman.LaurentIndex(min(2, params.jmax), min(3, params.kmax))
    coeffs = bergman.project(bergman.v_field(target), params.jmax, params.kmax, spec)
    err_self = abs(coeffs.get(target.j, target.k) - 1.0)
    err_cross = max(
        (abs(a) for (j, k), a in coeffs.entries.items() if (j, k) != (target.j, target.k)),
        default=0.0,
    )
    rows.append(_row("bergman.projection.identity", {**block, "target": [target.j, target.k]},
                     float(max(err_self, err_cross)), 0.0, 1e-6, max(err_self, err_cross) <= 1e-6))

    anti = bergman.project(lambda r, a, s, b: r * np.exp(-1j * a), params.jmax, params.kmax, spec)
    worst_anti = max(abs(v) for v in anti.entries.values())
    rows.append(_row("bergman.projection.antiholo", block, float(worst_anti), 0.0, 1e-8, worst_anti <= 1e-8))

    rng = np.random.default_rng(params.seed + 4)
    worst_sym = 0.0
    for _ in range(50):
        Rr = rng.uniform(0.05, 0.9, 2)
        pts = []
        for base in Rr:
            s = float(rng.uniform(base + 0.05, 1.0))
            pts.append(PolarPoint(base, float(rng.uniform(-np.pi, np.pi)), s, float(rng.uniform(-np.pi, np.pi))))
        p, q = pts
        kpq = bergman.kernel_truncated(p, q, params.jmax, params.kmax)
        kqp = bergman.kernel_truncated(q, p, params.jmax, params.kmax)
        worst_sym = max(worst_sym, abs(kpq - np.conj(kqp)))
    rows.append(_row("bergman.kernel.hermitian", {**block, "pairs": 50, "seed": params.seed + 4},
                     float(worst_sym), 0.0, 1e-12, worst_sym <= 1e-12))
    return rows


# ------------------------------------------------------------------- dbar --


def run_dbar(params: RunParams) -> list[CheckRow]:
    spec = params.quad()
    rows = []

    anchor = dbar.dbar_u_delta_norm(dbar.DeltaFamilySpec(j=0, delta=1.0), spec)
    rows.append(_row("dbar.norm.anchor", {"j": 0, "delta": 1.0}, anchor, np.pi / 2.0, 1e-9,
                     abs(anchor - np.pi / 2.0) <= 1e-9 * (np.pi / 2.0)))

    worst = 0.0
    for j in (0, 1, 2):
        n1 = dbar.dbar_u_delta_norm(dbar.DeltaFamilySpec(j=j, delta=1.0), spec)
        for delta in params.deltas:
            nd = dbar.dbar_u_delta_norm(dbar.DeltaFamilySpec(j=j, delta=delta), spec)
            worst = max(worst, abs(nd**2 / n1**2 - delta) / delta)
    rows.append(_row("dbar.scaling", {"deltas": list(params.deltas), "j": [0, 1, 2]}, worst, 0.0, 1e-6, worst <= 1e-6))

    gaps = [dbar.l2_gap(dbar.DeltaFamilySpec(j=0, delta=2.0**-k), spec) for k in range(1, 9)]
    ratios = [b / a for a, b in zip(gaps, gaps[1:])]
    rows.append(_row("dbar.gap.monotone", {"deltas": "2^-1..2^-8", "j": 0}, float(max(ratios)), 1.0, 0.0,
                     max(ratios) < 1.0))
    rows.append(_row("dbar.gap.decay", {"deltas": "2^-1..2^-8", "j": 0}, gaps[-1] / gaps[0], 0.1, 0.0,
                     gaps[-1] / gaps[0] < 0.1))

    xs = np.linspace(0.0, 3.0, 200_001)
    grad_max = float(dbar.smoothstep_deriv(xs).max())  # the delta-scaled bound
    rows.append(_row("dbar.cutoff.gradbound", {"scan_points": xs.size}, grad_max, 15.0 / 8.0, 1e-9,
                     grad_max <= 15.0 / 8.0 + 1e-9))

    fields = {
        "one": lambda r, a, s, b: np.ones(np.broadcast(r, s).shape),
        "winv": lambda r, a, s, b: bergman.v_eval_arrays(0, -1, r, a, s, b),
    }
    deltas = [2.0**-k for k in range(2, 9)]
    cs_worst = 0.0
    first = []
    lhs_by = {name: [] for name in fields}
    for delta in deltas:
        for name, f in fields.items():
            rep = dbar.cutoff_commutator_check(f, delta, spec)
            cs_worst = max(cs_worst, rep.lhs / rep.rhs)
            lhs_by[name].append(rep.lhs)
            if name == "one":
                first.append(rep.first_factor)
    rows.append(_row("dbar.cutoff.cs", {"deltas": "2^-2..2^-8", "fields": sorted(fields)}, cs_worst, 1.0, 0.0,
                     cs_worst <= 1.0))
    variation = max(first) / min(first) - 1.0
    rows.append(_row("dbar.cutoff.firstfactor", {"deltas": "2^-2..2^-8"}, variation, 0.0, 0.1, variation < 0.1))
    smooth_ratio = lhs_by["one"][4] / lhs_by["one"][0]  # delta = 2^-6 vs 2^-2
    rows.append(_row("dbar.cutoff.decay.smooth", {"ratio": "lhs(2^-6)/lhs(2^-2)"}, smooth_ratio, 2.0**-8, 0.05,
                     abs(smooth_ratio - 2.0**-8) <= 0.05 * 2.0**-8))
    border_var = max(lhs_by["winv"]) / min(lhs_by["winv"]) - 1.0
    rows.append(_row("dbar.cutoff.borderline", {"deltas": "2^-2..2^-8"}, border_var, 0.0, 0.1, border_var < 0.1))
    return rows


# --------------------------------------------------------------- spectrum --


def poincare_field_check(C: float, mode_cut: int, n_fields: int, seed, spec: QuadratureSpec, slack: float = 1.1):
    """Rayleigh validation of the Poincare estimate on random fields.

    Fields are real parts of random finite combinations of the holomorphic
    basis with k >= 0 (so first derivatives are square-integrable) and both
    angular modes within mode_cut.  Returns (worst_ratio, all_ok) where
    ratio = ||f - mean f||^2 / (C * ||df||^2); for a real part of a
    holomorphic g the energy is ||dg/dz||^2 + ||dg/dw||^2.
    """
    rng = np.random.default_rng(seed)
    pool = [
        (j, k)
        for j in range(0, mode_cut + 1)
        for k in range(max(0, j - mode_cut), j + mode_cut + 1)
        if (j, k) != (0, 0)
    ]
    worst = 0.0
    for _ in range(n_fields):
        size = int(rng.integers(2, 5))
        picks = rng.choice(len(pool), size=size, replace=False)
        coeffs = {pool[i]: complex(rng.normal(), rng.normal()) for i in picks}

        def g(r, a, s, b, table=coeffs):
            total = 0j
            for (j, k), c in table.items():
                total = total + c * bergman.v_eval_arrays(j, k, r, a, s, b)
            return total

        def energy_density(r, a, s, b, table=coeffs):
            gz = 0j
            gw = 0j
            for (j, k), c in table.items():
                if j > 0:
                    gz = gz + c * j * bergman.v_eval_arrays(j - 1, k - 1, r, a, s, b)
                if k != j:
                    gw = gw + c * (k - j) * bergman.v_eval_arrays(j, k - 1, r, a, s, b)
            return np.abs(gz) ** 2 + np.abs(gw) ** 2

        mean = complex(integrate_T(g, spec)).real / (np.pi**2 / 2.0)
        V = float(integrate_T(lambda r, a, s, b: (np.real(g(r, a, s, b)) - mean) ** 2, spec).real)
        E = float(integrate_T(energy_density, spec).real)
        if E > 0:
            worst = max(worst, V / (C * E))
    return worst, worst <= slack


def run_spectrum(params: RunParams) -> list[CheckRow]:
    rows = []
    res = spectral.neumann_spectrum(0, 0, params.grid, max(2, params.count))
    grid_params = {"l": 0, "m": 0, "n": params.grid, "count": max(2, params.count)}
    rows.append(_row("spectrum.zero", grid_params, res.eigenvalues[0], 0.0, 1e-8, res.eigenvalues[0] <= 1e-8))
    rows.append(_row("spectrum.kernel", grid_params, res.eigenvalues[1], 1.0, 0.0, res.eigenvalues[1] > 1.0))

    lam_n = res.eigenvalues[1]
    lam_2n = spectral.neumann_spectrum(0, 0, 2 * params.grid, 2).eigenvalues[1]
    drift = abs(lam_n - lam_2n) / lam_2n
    rows.append(_row("spectrum.gap.stability", {"n": params.grid, "2n": 2 * params.grid}, drift, 0.0, 0.01,
                     drift <= 0.01))

    C = spectral.poincare_constant(params.poincare_grid, params.mode_cut)
    spec = QuadratureSpec(level=max(12, params.level // 2), seed=params.seed)
    worst, ok = poincare_field_check(C, params.mode_cut, params.n_fields, params.seed + 5, spec)
    rows.append(_row("spectrum.poincare",
                     {"n": params.poincare_grid, "mode_cut": params.mode_cut, "fields": params.n_fields,
                      "C": C, "seed": params.seed + 5},
                     worst, 1.0, 0.1, ok))

    # Galerkin identity on random test vectors for a smooth source
    n = params.grid
    u = spectral.solve_neumann(lambda r, s: np.cos(np.pi * s) + r, 0, 0, n)
    problem = spectral.build_mode(0, 0, n)
    fhat = np.cos(np.pi * problem.s_centers) + problem.r_centers
    w = problem.mass.diagonal()
    fhat = fhat - float(w @ fhat) / float(w.sum())
    rng = np.random.default_rng(params.seed + 6)
    worst_gal = 0.0
    for _ in range(10):
        v = rng.normal(size=problem.size)
        lhs = float(v @ (problem.stiffness @ u))
        rhs = float(v @ (problem.mass @ fhat))
        worst_gal = max(worst_gal, abs(lhs - rhs) / max(abs(rhs), 1e-30))
    rows.append(_row("spectrum.galerkin", {"n": n, "tests": 10, "seed": params.seed + 6}, worst_gal, 0.0, 1e-6,
                     worst_gal <= 1e-6))
    return rows


_RUNNERS = {
    "uniform": run_uniform,
    "adr": run_adr,
    "bergman": run_bergman,
    "dbar": run_dbar,
    "spectrum": run_spectrum,
}


def run_command(command: str, params: RunParams) -> list[CheckRow]:
    """Execute one named battery, or all of them in a fixed order."""
    if command == "all":
        rows = []
        for name in ("uniform", "adr", "bergman", "dbar", "spectrum"):
            rows.extend(_RUNNERS[name](params))
        return rows
    if command not in _RUNNERS:
        raise ValueError(f"unknown command {command!r}")
    return _RUNNERS[command](params)

"""Uniform-domain geometry of the Hartogs triangle and its model cone.

Boundary distances (exact formulas):

    dist(p, bT_inf) = |s - r| / sqrt(2)                 on the cone |z| < |w|
    dist(p, bT)     = min{(s - r)/sqrt(2), 1 - s}       on T itself

Curve construction joining p1, p2 (polar data (r_j, alpha_j, s_j, beta_j),
angle differences wrapped to (-pi, pi]):

    r_* = min{r1, r2},   s^* = max{s1, s2} + |p1 - p2|,

central arc at constant radii (r_*, s^*) with both angles affine from
(alpha1, beta1) to (alpha2, beta2); endpoints q_j = (r_* e^{i alpha_j},
s^* e^{i beta_j}) joined to p_j by straight segments.  Because q_j keeps the
angles of p_j, each segment interpolates the two radii linearly at fixed
angles, so segment membership in the cone is exact (convex combinations
preserve r < s).  On T the arc is scaled by 1/(1 + 2|p1 - p2|), which pulls
s^* strictly below 1.

The construction certifies uniformity with explicit constants

    c = 5 + 2 pi < 12                                '' on T_inf
    c = (1 + 4 sqrt 2)(5 + 2 pi + 4 sqrt 2)/sqrt 2 < 80   on T

for both the length bound len(gamma) <= c |p1 - p2| and the cigar bound
min{|p - p1|, |p - p2|} <= c dist(p, boundary) along the curve.

The companion polar estimate used by the length bound:

    |r1-r2| + |s1-s2| + min(r1,r2)|a1-a2| + min(s1,s2)|b1-b2| <= 3 |p1-p2|

whenever |a1-a2|, |b1-b2| <= pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .points import PolarPoint, angle_diff
from .quadrature import sample_T_arrays

__all__ = [
    "C_TINF",
    "C_T",
    "Curve",
    "UniformityReport",
    "dist_bTinf",
    "dist_bT",
    "polar_lhs",
    "connect_Tinf",
    "connect_T",
    "verify_uniform",
]

C_TINF = 5.0 + 2.0 * np.pi
C_T = (1.0 + 4.0 * np.sqrt(2.0)) * (5.0 + 2.0 * np.pi + 4.0 * np.sqrt(2.0)) / np.sqrt(2.0)

_SQ2 = np.sqrt(2.0)


def dist_bTinf(p: PolarPoint) -> float:
    """Distance to the cone boundary {|z| = |w|}: |s - r|/sqrt(2)."""
    return abs(p.s - p.r) / _SQ2


def dist_bT(p: PolarPoint) -> float:
    """Distance to bT for p in T: min{(s - r)/sqrt(2), 1 - s}."""
    if not p.in_T():
        raise ValueError(f"point (r={p.r}, s={p.s}) is not in T")
    return min((p.s - p.r) / _SQ2, 1.0 - p.s)


def polar_lhs(p1: PolarPoint, p2: PolarPoint) -> float:
    """Polar upper-bound functional; always <= 3 |p1 - p2|.

    Angle differences are wrapped to (-pi, pi] before use.
    """
    da = abs(angle_diff(p1.alpha, p2.alpha))
    db = abs(angle_diff(p1.beta, p2.beta))
    return (
        abs(p1.r - p2.r)
        + abs(p1.s - p2.s)
        + min(p1.r, p2.r) * da
        + min(p1.s, p2.s) * db
    )


@dataclass(frozen=True)
class Curve:
    """Piecewise path p1 -> q1 -> (arc) -> q2 -> p2.

    The arc runs at constant radii (arc_r, arc_s); both angles vary affinely
    by the wrapped increments (dalpha, dbeta) from (alpha1, beta1).  The two
    segments interpolate radii linearly at the fixed angle pairs of their
    endpoints.
    """

    p1: PolarPoint
    p2: PolarPoint
    arc_r: float
    arc_s: float
    dalpha: float
    dbeta: float

    @property
    def q1(self) -> PolarPoint:
        return PolarPoint(self.arc_r, self.p1.alpha, self.arc_s, self.p1.beta)

    @property
    def q2(self) -> PolarPoint:
        return PolarPoint(self.arc_r, self.p2.alpha, self.arc_s, self.p2.beta)

    def arc_length(self) -> float:
        return float(np.hypot(self.arc_r * self.dalpha, self.arc_s * self.dbeta))

    def length(self) -> float:
        """Closed-form total length |p1-q1| + arc + |q2-p2|."""
        l1 = np.hypot(self.p1.r - self.arc_r, self.p1.s - self.arc_s)
        l2 = np.hypot(self.p2.r - self.arc_r, self.p2.s - self.arc_s)
        return float(l1 + self.arc_length() + l2)

    def sample(self, n_per_piece: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(r, alpha, s, beta) arrays of 3*n points, t equispaced per piece."""
        if n_per_piece < 2:
            raise ValueError("need at least 2 samples per piece")
        t = np.linspace(0.0, 1.0, n_per_piece)
        p1, p2 = self.p1, self.p2
        # segment 1: p1 -> q1 at angles (alpha1, beta1)
        r1 = p1.r + t * (self.arc_r - p1.r)
        s1 = p1.s + t * (self.arc_s - p1.s)
        a1 = np.full_like(t, p1.alpha)
        b1 = np.full_like(t, p1.beta)
        # arc: q1 -> q2
        ra = np.full_like(t, self.arc_r)
        sa = np.full_like(t, self.arc_s)
        aa = p1.alpha + t * self.dalpha
        ba = p1.beta + t * self.dbeta
        # segment 2: q2 -> p2
        r2 = self.arc_r + t * (p2.r - self.arc_r)
        s2 = self.arc_s + t * (p2.s - self.arc_s)
        a2 = np.full_like(t, p2.alpha)
        b2 = np.full_like(t, p2.beta)
        return (
            np.concatenate([r1, ra, r2]),
            np.concatenate([a1, aa, a2]),
            np.concatenate([s1, sa, s2]),
            np.concatenate([b1, ba, b2]),
        )


def _connect(p1: PolarPoint, p2: PolarPoint, rescale: bool) -> Curve:
    d = p1.dist(p2)
    if d == 0.0:
        raise ValueError("endpoints coincide; no curve to construct")
    r_star = min(p1.r, p2.r)
    s_star = max(p1.s, p2.s) + d
    kappa = 1.0 / (1.0 + 2.0 * d) if rescale else 1.0
    return Curve(
        p1=p1,
        p2=p2,
        arc_r=kappa * r_star,
        arc_s=kappa * s_star,
        dalpha=angle_diff(p2.alpha, p1.alpha),
        dbeta=angle_diff(p2.beta, p1.beta),
    )


def connect_Tinf(p1: PolarPoint, p2: PolarPoint) -> Curve:
    """Uniformity curve joining two points of the cone T_inf."""
    for p in (p1, p2):
        if not p.in_Tinf():
            raise ValueError(f"point (r={p.r}, s={p.s}) is not in T_inf")
    return _connect(p1, p2, rescale=False)


def connect_T(p1: PolarPoint, p2: PolarPoint) -> Curve:
    """Uniformity curve joining two points of T (arc rescaled into T)."""
    for p in (p1, p2):
        if not p.in_T():
            raise ValueError(f"point (r={p.r}, s={p.s}) is not in T")
    return _connect(p1, p2, rescale=True)


@dataclass(frozen=True)
class UniformityReport:
    domain: str
    n_pairs: int
    n_curve_samples: int
    max_length_ratio: float
    max_dist_ratio: float
    min_boundary_dist: float
    constant_bound: float
    passed: bool


def _euclid(r1, a1, s1, b1, r2, a2, s2, b2):
    dz2 = r1**2 + r2**2 - 2.0 * r1 * r2 * np.cos(a1 - a2)
    dw2 = s1**2 + s2**2 - 2.0 * s1 * s2 * np.cos(b1 - b2)
    return np.sqrt(np.maximum(dz2, 0.0) + np.maximum(dw2, 0.0))


def _piece_ratios(rr, aa, ss, bb, pair, use_cap):
    """Max cigar ratio and min boundary distance over sampled piece points.

    rr, aa, ss, bb: (npairs, m) sample coordinates; pair: the 8 endpoint
    coordinate arrays; use_cap: include the 1 - s distance term (domain T).
    """
    r1, a1, s1, b1, r2, a2, s2, b2 = [c[:, None] for c in pair]
    d1 = _euclid(rr, aa, ss, bb, r1, a1, s1, b1)
    d2 = _euclid(rr, aa, ss, bb, r2, a2, s2, b2)
    dmin = np.minimum(d1, d2)
    dist_b = (ss - rr) / _SQ2
    if use_cap:
        dist_b = np.minimum(dist_b, 1.0 - ss)
    ratio = np.where(dmin > 0.0, dmin / dist_b, 0.0)
    return float(ratio.max()), float(dist_b.min())


def verify_uniform(domain: str, n_pairs: int, n_curve_samples: int = 256, seed=0) -> UniformityReport:
    """Sample point pairs, build curves, certify both uniformity ratios.

    domain: "T" or "T_infinity".  Pairs are drawn uniformly on T, and for the
    cone additionally dilated by 2 (uniform on T_inf intersected with
    {|w| < 2}); the cone's ratios are dilation-invariant, so the window is
    only a parametrization choice.  Suprema are estimated from below by
    n_curve_samples equispaced parameters per piece.
    """
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    if n_curve_samples < 2:
        raise ValueError("n_curve_samples must be >= 2")
    if domain not in ("T", "T_infinity"):
        raise ValueError(f"unknown domain {domain!r}")
    use_cap = domain == "T"
    bound = C_T if use_cap else C_TINF

    r, a, s, b = sample_T_arrays(2 * n_pairs, seed)
    if not use_cap:
        r, s = 2.0 * r, 2.0 * s
    r1, a1, s1, b1 = r[:n_pairs], a[:n_pairs], s[:n_pairs], b[:n_pairs]
    r2, a2, s2, b2 = r[n_pairs:], a[n_pairs:], s[n_pairs:], b[n_pairs:]

    max_len = 0.0
    max_ratio = 0.0
    min_bdist = np.inf
    t = np.linspace(0.0, 1.0, n_curve_samples)[None, :]
    chunk = max(1, min(n_pairs, 2_000_000 // n_curve_samples))
    for lo in range(0, n_pairs, chunk):
        hi = min(lo + chunk, n_pairs)
        pair = (r1[lo:hi], a1[lo:hi], s1[lo:hi], b1[lo:hi], r2[lo:hi], a2[lo:hi], s2[lo:hi], b2[lo:hi])
        cr1, ca1, cs1, cb1, cr2, ca2, cs2, cb2 = pair
        d = _euclid(*pair)
        kappa = 1.0 / (1.0 + 2.0 * d) if use_cap else np.ones_like(d)
        R = kappa * np.minimum(cr1, cr2)
        S = kappa * (np.maximum(cs1, cs2) + d)
        dal = angle_diff(ca2, ca1)
        dbe = angle_diff(cb2, cb1)

        length = (
            np.hypot(cr1 - R, cs1 - S)
            + np.hypot(R * dal, S * dbe)
            + np.hypot(cr2 - R, cs2 - S)
        )
        max_len = max(max_len, float((length / d).max()))

        col = lambda x: x[:, None]
        pieces = (
            # segment 1: radii p1 -> (R, S) at angles (alpha1, beta1)
            (col(cr1) + t * col(R - cr1), np.broadcast_to(col(ca1), (hi - lo, n_curve_samples)),
             col(cs1) + t * col(S - cs1), np.broadcast_to(col(cb1), (hi - lo, n_curve_samples))),
            # arc at radii (R, S), both angles affine
            (np.broadcast_to(col(R), (hi - lo, n_curve_samples)), col(ca1) + t * col(dal),
             np.broadcast_to(col(S), (hi - lo, n_curve_samples)), col(cb1) + t * col(dbe)),
            # segment 2: radii (R, S) -> p2 at angles (alpha2, beta2)
            (col(R) + t * col(cr2 - R), np.broadcast_to(col(ca2), (hi - lo, n_curve_samples)),
             col(S) + t * col(cs2 - S), np.broadcast_to(col(cb2), (hi - lo, n_curve_samples))),
        )
        for rr, aa, ss, bb in pieces:
            ratio, bdist = _piece_ratios(rr, aa, ss, bb, pair, use_cap)
            max_ratio = max(max_ratio, ratio)
            min_bdist = min(min_bdist, bdist)

    passed = max_len <= bound and max_ratio <= bound
    return UniformityReport(
        domain=domain,
        n_pairs=n_pairs,
        n_curve_samples=n_curve_samples,
        max_length_ratio=max_len,
        max_dist_ratio=max_ratio,
        min_boundary_dist=float(min_bdist),
        constant_bound=float(bound),
        passed=bool(passed),
    )

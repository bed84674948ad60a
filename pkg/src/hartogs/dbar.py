"""Approximation families for the Cauchy-Riemann operator on T.

The u_delta family.  Fix u = v_{j,-1} (the basis elements with the w^{-1}
pole) and T_delta = {|z| < |w| < delta}.  Define

    u_delta = (|w|/delta)^delta * u   on T_delta,      u_delta = u  elsewhere.

u_delta is continuous across |w| = delta, |u_delta| <= |u| pointwise, and
u_delta -> u in L^2(T) as delta -> 0.  Since (|w|/delta)^delta is smooth in
w away from 0 and u is holomorphic,

    dbar u_delta = u * d/dwbar (|w|/delta)^delta
                 = u * (delta/2) (|w|/delta)^delta / wbar   on T_delta,

and 0 outside (derivation: d/dwbar (w wbar)^{delta/2} = (delta/2)
(w wbar)^{delta/2 - 1} w).  Reducing the squared norm in polar coordinates
(r-fiber integral s^2/(2j+2), then s-integral of s^{2 delta - 1}) gives

    ||dbar u_delta||^2_{L^2(T)} = pi^2 delta / (4 (j+1)),

so the squared norm is exactly linear in delta and the norm itself scales as
sqrt(delta); at delta = 1, j = 0 the norm is pi/2.  The quadrature here uses
the substitution s = delta e^{-y} because the radial profile s^{2 delta - 1}
is nearly 1/s for small delta and stalls a plain Gauss rule on (0, delta).

The chi_delta cutoff.  chi_delta(p) = S((|p| - delta)/delta) with S the
quintic smoothstep (S = 6x^5 - 15x^4 + 10x^3 on [0,1], clamped outside), so
chi_delta vanishes on B_delta(0), equals 1 outside B_{2 delta}(0), and its
differential obeys |d chi_delta| <= (15/8)/delta, the maximum of S' scaled
by the layer width.  For a real radial function |dbar chi| = |grad chi|/2.

The commutator estimate pairs the cutoff with a field f over the shell:

    int |dbar chi_delta|^2 |f|^2
        <= (int_{B cap T} |dbar chi_delta|^4)^{1/2} (int_{B cap T} |f|^4)^{1/2}.

Both sides are evaluated on one shared positive-weight node set, so the
discrete inequality is an instance of Cauchy-Schwarz and holds identically;
the interesting content is the size of the factors.  In shell coordinates
(r, s) = (t cos theta, t sin theta) the first factor's fourth-power integral
is independent of delta, and for f with |f| ~ |w|^{-1} the left side is also
delta-independent (|w|^{-1} is exactly borderline: its fourth power is not
integrable on T, which the report flags).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .points import PolarPoint
from .quadrature import QuadratureSpec, gauss_legendre, integrate_T, _gl_unit, _angular_nodes
from .bergman import v_eval_arrays

__all__ = [
    "DeltaFamilySpec",
    "CutoffReport",
    "u_delta_eval",
    "dbar_u_delta_eval",
    "dbar_u_delta_norm",
    "l2_gap",
    "w1_energy_u_delta",
    "w1_energy_u_raw",
    "smoothstep",
    "smoothstep_deriv",
    "chi_delta",
    "dchi_delta",
    "cutoff_commutator_check",
]


@dataclass(frozen=True)
class DeltaFamilySpec:
    """u = v_{j,-1} regularized at scale delta in (0, 1]."""

    j: int
    delta: float

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("j must be >= 0")
        if not 0.0 < self.delta <= 1.0:
            raise ValueError("delta must lie in (0, 1]")


def _weight_arrays(delta: float, s):
    s = np.asarray(s, dtype=float)
    return np.where(s < delta, (s / delta) ** delta, 1.0)


def u_delta_eval(fspec: DeltaFamilySpec, p: PolarPoint) -> complex:
    """Pointwise u_delta: (s/delta)^delta * v_{j,-1} below the interface."""
    if not p.in_T():
        raise ValueError("point must lie in T")
    base = v_eval_arrays(fspec.j, -1, p.r, p.alpha, p.s, p.beta)
    return complex(_weight_arrays(fspec.delta, p.s) * base)


def dbar_u_delta_eval(fspec: DeltaFamilySpec, p: PolarPoint) -> complex:
    """Closed-form dbar u_delta = u (delta/2)(s/delta)^delta / wbar on T_delta."""
    if not p.in_T():
        raise ValueError("point must lie in T")
    if p.s >= fspec.delta:
        return 0j
    base = v_eval_arrays(fspec.j, -1, p.r, p.alpha, p.s, p.beta)
    wbar = p.s * np.exp(-1j * p.beta)
    return complex(base * (fspec.delta / 2.0) * (p.s / fspec.delta) ** fspec.delta / wbar)


def _s_profile_integral(delta: float, n: int) -> float:
    """int_0^delta s^{2 delta - 1} delta^{-2 delta} ds by Gauss nodes in the
    log layer s = delta e^{-y}; truncation tail below 1e-17 relative."""
    tau, wt = _gl_unit(n)
    T = 40.0  # integral becomes int_0^T e^{-tau} dtau / (2 delta)
    return float(np.sum(np.exp(-T * tau) * wt) * T / (2.0 * delta))


def dbar_u_delta_norm(fspec: DeltaFamilySpec, quad: QuadratureSpec) -> float:
    """L^2(T) norm of dbar u_delta, by quadrature of the closed form.

    Radial fiber and log-layer substitutions as in the module docstring;
    the r-fiber integral of (r/s)^{2j} r uses Gauss nodes in x = r/s.
    """
    n = max(64, quad.shell_level)
    x, wx = _gl_unit(n)
    ix = float(np.sum(x ** (2 * fspec.j + 1) * wx))  # = 1/(2j+2)
    is_ = _s_profile_integral(fspec.delta, n)
    return float(np.sqrt((2.0 * np.pi) ** 2 * (fspec.delta / 2.0) ** 2 * ix * is_))


def l2_gap(fspec: DeltaFamilySpec, quad: QuadratureSpec) -> float:
    """||u_delta - u||_{L^2(T)}; the difference lives on T_delta.

    After r-reduction and s = delta*sigma the squared gap is
    (2 pi)^2 delta^2/(2j+2) * int_0^1 sigma ((sigma^delta - 1)^2 dsigma.
    """
    n = max(128, 2 * quad.shell_level)
    sig, wsig = _gl_unit(n)
    x, wx = _gl_unit(n)
    ix = float(np.sum(x ** (2 * fspec.j + 1) * wx))
    radial = float(np.sum(sig * (sig**fspec.delta - 1.0) ** 2 * wsig))
    return float(np.sqrt((2.0 * np.pi) ** 2 * fspec.delta**2 * ix * radial))


def w1_energy_u_delta(fspec: DeltaFamilySpec, quad: QuadratureSpec) -> float:
    """Energy int_T (|d/dz u_delta|^2 + |d/dw u_delta|^2 + |dbar u_delta|^2).

    Finite for every delta > 0: outside T_delta the integrand is that of
    u = v_{j,-1} cut at s > delta (a logarithm), inside it carries the
    regularizing weight (s/delta)^{2 delta}.
    """
    j, delta = fspec.j, fspec.delta
    n = max(64, quad.shell_level)
    four_pi2 = (2.0 * np.pi) ** 2

    # s > delta: |d/dz u|^2 + |d/dw u|^2 reduce to (j/2 + (j+1)/2)/s
    y, wy = _gl_unit(n)
    L = np.log(1.0 / delta)
    outer = four_pi2 * (j / 2.0 + (j + 1) / 2.0) * L * float(np.sum(np.ones_like(y) * wy))

    # s < delta: weights (s/delta)^{2 delta} s^{2 delta - 1} profiles
    is_ = _s_profile_integral(delta, n)
    cz = j / 2.0  # from j^2 * (r-fiber s^2/(2j))
    cw = (delta / 2.0 - 1.0 - j) ** 2 / (2.0 * j + 2.0)
    cbar = (delta / 2.0) ** 2 / (2.0 * j + 2.0)
    inner = four_pi2 * (cz + cw + cbar) * is_
    return float(outer + inner)


def w1_energy_u_raw(j: int, level: int) -> float:
    """Truncated quadrature of int_T |d u|^2 for u = v_{j,-1} at a level.

    The true integral diverges logarithmically (the integrand reduces to a
    multiple of 1/s); the returned value grows without bound as the level
    increases, which is exactly the divergence witness used in tests.
    """
    spec = QuadratureSpec(level=level)

    def energy(r, a, s, b):
        dw = (-1 - j) * v_eval_arrays(j, -2, r, a, s, b)
        total = np.abs(dw) ** 2
        if j > 0:
            dz = j * v_eval_arrays(j - 1, -2, r, a, s, b)
            total = total + np.abs(dz) ** 2
        return total

    return float(integrate_T(energy, spec).real)


def smoothstep(x):
    """Quintic smoothstep: 0 below 0, 1 above 1, 6x^5-15x^4+10x^3 between."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return x**3 * (x * (6.0 * x - 15.0) + 10.0)


def smoothstep_deriv(x):
    """Derivative of the quintic smoothstep; max 15/8 at x = 1/2."""
    x = np.asarray(x, dtype=float)
    inside = (x > 0.0) & (x < 1.0)
    xx = np.where(inside, x, 0.5)
    return np.where(inside, 30.0 * xx**2 * (1.0 - xx) ** 2, 0.0)


def chi_delta(delta: float, p: PolarPoint) -> float:
    """Radial cutoff: 0 on B_delta(0), 1 outside B_{2 delta}(0), C^2 joints."""
    if delta <= 0:
        raise ValueError("delta must be > 0")
    return float(smoothstep((p.norm() - delta) / delta))


def dchi_delta(delta: float, p: PolarPoint) -> np.ndarray:
    """Euclidean gradient of chi_delta as the real 4-vector
    (d/dRe z, d/dIm z, d/dRe w, d/dIm w); norm <= (15/8)/delta."""
    if delta <= 0:
        raise ValueError("delta must be > 0")
    t = p.norm()
    if t == 0.0:
        return np.zeros(4)
    g = smoothstep_deriv((t - delta) / delta) / delta
    z, w = p.to_cartesian()
    return (g / t) * np.array([z.real, z.imag, w.real, w.imag])


@dataclass(frozen=True)
class CutoffReport:
    """Both sides of the shell Cauchy-Schwarz estimate at one (f, delta)."""

    delta: float
    lhs: float
    rhs: float
    first_factor: float  # (int |dbar chi|^4)^(1/2)
    second_factor: float  # (int |f|^4)^(1/2) on the shared nodes
    l4_diverges: bool


def _shell_nodes(delta: float, nt: int, nth: int, nang: int):
    """Shared node set on B_{2 delta}(0) cap T in coordinates (t, theta, a, b);
    (r, s) = (t cos theta, t sin theta), weight t^3 sin cos dt dtheta."""
    t, wt = _gl_unit(nt)
    t, wt = 2.0 * delta * t, 2.0 * delta * wt
    th, wth = _gl_unit(nth)
    th, wth = np.pi / 4.0 + th * np.pi / 4.0, wth * np.pi / 4.0
    ang, wang = _angular_nodes(nang)
    T = t[:, None, None, None]
    TH = th[None, :, None, None]
    A = ang[None, None, :, None]
    B = ang[None, None, None, :]
    R = T * np.cos(TH)
    S = T * np.sin(TH)
    W = (
        (wt * t**3)[:, None, None, None]
        * (wth * np.sin(th) * np.cos(th))[None, :, None, None]
        * wang
        * wang
    )
    return T, R, A, S, B, np.broadcast_to(W, (nt, nth, nang, nang))


def cutoff_commutator_check(
    f, delta: float, quad: QuadratureSpec, strict: bool = False
) -> CutoffReport:
    """Evaluate lhs = int |dbar chi_delta|^2 |f|^2 and its Cauchy-Schwarz
    bound over B_{2 delta}(0) cap T on one shared node set.

    With shared nodes and positive weights, lhs <= rhs is the discrete
    Cauchy-Schwarz inequality and holds for every f; the report carries the
    factor sizes.  A refinement probe flags fields whose fourth power fails
    to be integrable (growth > 1% under node doubling); with strict=True
    such fields raise instead of being reported.
    """
    if not 0.0 < delta <= 0.5:
        raise ValueError("delta must lie in (0, 1/2] so the shell stays in T")
    nt, nth, nang = quad.shell_level, max(16, quad.shell_level // 3), 12

    def pieces(nt_, nth_, nang_):
        T, R, A, S, B, W = _shell_nodes(delta, nt_, nth_, nang_)
        dchi2 = (smoothstep_deriv((T - delta) / delta) / (2.0 * delta)) ** 2
        dchi2 = np.broadcast_to(dchi2, W.shape)
        f2 = np.abs(np.broadcast_to(np.asarray(f(R, A, S, B)), W.shape)) ** 2
        lhs = float(np.sum(dchi2 * f2 * W))
        quart = float(np.sum(dchi2**2 * W))
        fquart = float(np.sum(f2**2 * W))
        return lhs, quart, fquart

    lhs, quart, fquart = pieces(nt, nth, nang)
    _, _, fquart_fine = pieces(2 * nt, nth, nang)
    diverges = fquart_fine - fquart > 0.01 * max(fquart, 1e-300)
    if strict and diverges:
        raise ValueError("field has divergent fourth-power integral on the shell")
    first = np.sqrt(quart)
    second = np.sqrt(fquart)
    return CutoffReport(
        delta=float(delta),
        lhs=lhs,
        rhs=float(first * second),
        first_factor=float(first),
        second_factor=float(second),
        l4_diverges=bool(diverges),
    )

"""Deterministic quadrature and sampling on the Hartogs triangle.

Integrals over T = {|z| < |w| < 1} are computed in polar coordinates,

    integral_T f dV = int_0^1 int_0^s int_{-pi}^{pi} int_{-pi}^{pi}
                      f(r, alpha, s, beta) r s  dalpha dbeta dr ds,

with the inner radius mapped affinely to the fixed square, r = s*x for
x in (0,1).  That substitution turns the triangle {0 < r < s < 1} into a
tensor-product square with smooth weight x*s^3 and removes the corner at the
origin (the Jacobian weight rs vanishes there anyway).

Rule layout per axis, all sizes equal to ``QuadratureSpec.level``:

* x and s: Gauss-Legendre, exact for the polynomial radial profiles of the
  Laurent basis pairings (powers of r and s times the weight are polynomial
  in (x, s), including the |w|^{-2} pairing);
* alpha and beta: midpoint rule on equispaced periodic nodes, exact for
  trigonometric polynomials of degree < level.  This makes angular-mode
  orthogonality an identity of the discrete rule, not a tolerance race.

Randomness: ``sample_T`` rejection-samples the unit bidisk (accept |z| < |w|,
acceptance rate 1/2) using numpy's default_rng, i.e. the PCG64 generator.
The generator choice is part of the package contract: changing it changes
frozen expected values and requires a major version bump.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .points import PolarPoint

__all__ = [
    "QuadratureSpec",
    "NonFiniteIntegrandError",
    "gauss_legendre",
    "integrate_T",
    "sample_T",
    "sample_T_arrays",
]

#: Volume of T: int_T dV = (2 pi)^2 * int_0^1 s^3/2 ds = pi^2 / 2.
VOL_T = np.pi**2 / 2.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls every integral in the package; the determinism anchor.

    level: per-axis node count of the tensor rule on T.
    mc_samples: sample count for Monte Carlo style checks.
    seed: 64-bit seed for all random draws.
    surface_cells: per-axis midpoint cells for boundary-measure integrals
        (indicator-type integrands; Gauss rules are wrong for those).
    shell_level: per-axis Gauss nodes for the thin-shell cutoff integrals.
    """

    level: int = 32
    mc_samples: int = 100_000
    seed: int = 0
    surface_cells: int = 768
    shell_level: int = 96

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.mc_samples < 0:
            raise ValueError("mc_samples must be >= 0")
        if self.surface_cells < 8:
            raise ValueError("surface_cells must be >= 8")
        if self.shell_level < 4:
            raise ValueError("shell_level must be >= 4")


class NonFiniteIntegrandError(ValueError):
    """Integrand returned a non-finite sample; carries the offending node."""

    def __init__(self, node: tuple[float, float, float, float], value):
        self.node = node
        self.value = value
        r, alpha, s, beta = node
        super().__init__(
            f"non-finite integrand value {value!r} at node "
            f"(r={r:.6g}, alpha={alpha:.6g}, s={s:.6g}, beta={beta:.6g})"
        )


def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1].

    Nodes strictly increasing and symmetric about 0; weights positive and
    summing to 2.
    """
    if n < 1:
        raise ValueError("node count must be >= 1")
    nodes, weights = np.polynomial.legendre.leggauss(int(n))
    return nodes, weights


def _gl_unit(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule mapped to (0, 1)."""
    x, w = gauss_legendre(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _angular_nodes(n: int) -> tuple[np.ndarray, float]:
    """Equispaced midpoint nodes on (-pi, pi); exact for trig polynomials."""
    nodes = -np.pi + (np.arange(n) + 0.5) * (2.0 * np.pi / n)
    return nodes, 2.0 * np.pi / n


def integrate_T(f: Callable, spec: QuadratureSpec) -> complex:
    """Integrate f over T with respect to dV = r s dr ds dalpha dbeta.

    ``f`` is called as ``f(r, alpha, s, beta)`` on broadcastable arrays and
    must return values (numpy semantics).  The result is always complex;
    real-valued callers take the real part themselves.

    Raises NonFiniteIntegrandError if any sampled value is nan/inf, carrying
    the first offending node.
    """
    n = spec.level
    xs, wxs = _gl_unit(n)  # inner radius fraction x = r/s
    ss, wss = _gl_unit(n)  # outer radius s
    ang, wang = _angular_nodes(n)

    X = xs[:, None, None, None]
    S = ss[None, :, None, None]
    A = ang[None, None, :, None]
    B = ang[None, None, None, :]
    R = X * S

    vals = np.asarray(f(R, A, S, B), dtype=complex)
    vals = np.broadcast_to(vals, (n, n, n, n))
    finite = np.isfinite(vals.real) & np.isfinite(vals.imag)
    if not finite.all():
        i, j, k, l = np.argwhere(~finite)[0]
        node = (float(xs[i] * ss[j]), float(ang[k]), float(ss[j]), float(ang[l]))
        raise NonFiniteIntegrandError(node, vals[i, j, k, l])

    # weight: (x s^3) dx ds dalpha dbeta
    w_rad = (wxs * xs)[:, None] * (wss * ss**3)[None, :]
    radial = np.einsum("ijkl->ij", vals)  # angular sums first keeps memory flat
    # the angular rule has constant weight, so sum angles then weight radially
    total = np.sum(radial * w_rad) * wang * wang
    return complex(total)


def sample_T_arrays(count: int, seed) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized uniform sampler on T; returns (r, alpha, s, beta) arrays.

    Rejection from the unit bidisk: draw |z|, |w| with the area-uniform
    sqrt law, accept |z| < |w|.  Deterministic given the seed.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = np.random.default_rng(seed)
    r = np.empty(count)
    alpha = np.empty(count)
    s = np.empty(count)
    beta = np.empty(count)
    filled = 0
    while filled < count:
        chunk = max(1024, int(2.2 * (count - filled)))
        rz = np.sqrt(rng.random(chunk))
        rw = np.sqrt(rng.random(chunk))
        az = rng.uniform(-np.pi, np.pi, chunk)
        bw = rng.uniform(-np.pi, np.pi, chunk)
        keep = rz < rw
        k = min(int(keep.sum()), count - filled)
        sel = np.flatnonzero(keep)[:k]
        r[filled : filled + k] = rz[sel]
        alpha[filled : filled + k] = az[sel]
        s[filled : filled + k] = rw[sel]
        beta[filled : filled + k] = bw[sel]
        filled += k
    return r, alpha, s, beta


def sample_T(count: int, seed) -> list[PolarPoint]:
    """i.i.d. uniform points of T with respect to dV, as PolarPoint objects."""
    r, alpha, s, beta = sample_T_arrays(count, seed)
    return [PolarPoint(float(a), float(b), float(c), float(d)) for a, b, c, d in zip(r, alpha, s, beta)]

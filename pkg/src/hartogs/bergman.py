"""The orthogonal Laurent basis of the Bergman space of T.

Basis functions, indexed by j >= 0, k >= -1:

    v_jk(z, w) = (z/w)^j w^k = r^j s^{k-j} e^{i(j alpha + (k-j) beta)}.

Each v_jk is holomorphic on T and square-integrable; k = -1 contributes the
w^{-1} pole that distinguishes H(T) from functions smooth up to the origin.
Orthogonality is angular: distinct (j, k) have distinct mode pairs
(l, m) = (j, k-j).  Norms in L^2(T, dV):

    ||v_jk||^2 = (2 pi)^2 int_0^1 int_0^s r^{2j} s^{2(k-j)} r s dr ds
               = pi^2 / ((j+1)(k+2)).

Derivatives stay in the family: d/dz v_jk = j v_{j-1,k-1} and
d/dw v_jk = (k-j) v_{j,k-1}.

Evaluation uses the polar form (powers of r, s and one complex exponential)
to stay stable near w -> 0 for k = -1.  Inner products ride on the tensor
rule of :func:`hartogs.quadrature.integrate_T`; Gram blocks additionally use
the factorized form of the very same quadrature sum (angular geometric sums
times a radial reduction), which is exact for these integrands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .points import PolarPoint
from .quadrature import QuadratureSpec, integrate_T, _gl_unit, _angular_nodes

__all__ = [
    "LaurentIndex",
    "LaurentCoefficients",
    "v_eval",
    "v_eval_arrays",
    "v_field",
    "v_norm_sq",
    "inner_product",
    "basis_gram",
    "block_indices",
    "project",
    "reconstruct",
    "reconstruct_field",
    "kernel_truncated",
]


@dataclass(frozen=True)
class LaurentIndex:
    j: int
    k: int

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("j must be >= 0")
        if self.k < -1:
            raise ValueError("k must be >= -1")

    @property
    def modes(self) -> tuple[int, int]:
        """Angular mode pair (l, m) = (j, k - j)."""
        return (self.j, self.k - self.j)


def v_eval_arrays(j: int, k: int, r, alpha, s, beta):
    """v_jk on coordinate arrays; stable polar form r^j s^{k-j} e^{i(...)}."""
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0):
        raise ValueError("v_jk requires s > 0")
    return r**j * s ** (k - j) * np.exp(1j * (j * np.asarray(alpha) + (k - j) * np.asarray(beta)))


def v_eval(idx: LaurentIndex, p: PolarPoint) -> complex:
    """Evaluate v_jk at a point; requires s > 0."""
    return complex(v_eval_arrays(idx.j, idx.k, p.r, p.alpha, p.s, p.beta))


def v_field(idx: LaurentIndex) -> Callable:
    """v_jk as a field f(r, alpha, s, beta) for the quadrature routines."""
    j, k = idx.j, idx.k
    return lambda r, alpha, s, beta: v_eval_arrays(j, k, r, alpha, s, beta)


def v_norm_sq(idx: LaurentIndex) -> float:
    """Closed-form squared L^2(T) norm pi^2 / ((j+1)(k+2))."""
    return np.pi**2 / ((idx.j + 1) * (idx.k + 2))


def inner_product(f: Callable, g: Callable, spec: QuadratureSpec) -> complex:
    """L^2(T) pairing (f, g) = integral of f * conj(g)."""
    return integrate_T(lambda r, a, s, b: f(r, a, s, b) * np.conj(g(r, a, s, b)), spec)


def block_indices(jmax: int, kmax: int) -> list[LaurentIndex]:
    """The truncation rectangle j in [0, jmax], k in [-1, kmax]."""
    if jmax < 0 or kmax < -1:
        raise ValueError("need jmax >= 0 and kmax >= -1")
    return [LaurentIndex(j, k) for j in range(jmax + 1) for k in range(-1, kmax + 1)]


def basis_gram(jmax: int, kmax: int, spec: QuadratureSpec) -> tuple[list[LaurentIndex], np.ndarray]:
    """Gram matrix of the block under the tensor rule, factorized form.

    Returns (indices, G) with G[a, b] = (v_a, v_b) as the quadrature would
    produce it: the 4D tensor sum splits into two angular geometric sums and
    a radial Gauss sum, computed here without materializing the 4D grid.
    """
    idxs = block_indices(jmax, kmax)
    n = spec.level
    xs, wxs = _gl_unit(n)
    ss, wss = _gl_unit(n)
    ang, wang = _angular_nodes(n)
    W = (wxs * xs)[:, None] * (wss * ss**3)[None, :]

    def ang_sum(nu: int) -> complex:
        return complex(np.sum(np.exp(1j * nu * ang)) * wang)

    G = np.zeros((len(idxs), len(idxs)), dtype=complex)
    # radial profile of v_jk in (x, s): r^j s^{k-j} = x^j s^k
    for a, ia in enumerate(idxs):
        for b, ib in enumerate(idxs[: a + 1]):
            la, ma = ia.modes
            lb, mb = ib.modes
            ang_part = ang_sum(la - lb) * ang_sum(ma - mb)
            if ang_part == 0.0:
                val = 0.0
            else:
                rad = np.sum(xs[:, None] ** (ia.j + ib.j) * ss[None, :] ** (ia.k + ib.k) * W)
                val = ang_part * rad
            G[a, b] = val
            G[b, a] = np.conj(val)
    return idxs, G


@dataclass(frozen=True)
class LaurentCoefficients:
    """Finite map (j, k) -> complex coefficient over the basis block."""

    entries: dict
    jmax: int
    kmax: int
    f_norm_sq: float | None = None  # ||f||^2 when produced by project

    def __post_init__(self):
        for (j, k) in self.entries:
            if not (0 <= j <= self.jmax and -1 <= k <= self.kmax):
                raise ValueError(f"index ({j},{k}) outside declared block")

    def get(self, j: int, k: int) -> complex:
        return self.entries.get((j, k), 0j)

    def weighted_energy(self) -> float:
        """Sum of |a_jk|^2 ||v_jk||^2 (the Bessel sum)."""
        return float(
            sum(abs(a) ** 2 * v_norm_sq(LaurentIndex(j, k)) for (j, k), a in self.entries.items())
        )

    def bessel_residual(self) -> float | None:
        """||f||^2 - Bessel sum; nonnegative up to quadrature error."""
        if self.f_norm_sq is None:
            return None
        return self.f_norm_sq - self.weighted_energy()

    def to_records(self) -> list[dict]:
        return [
            {"j": j, "k": k, "re": float(a.real), "im": float(a.imag)}
            for (j, k), a in sorted(self.entries.items())
        ]

    @staticmethod
    def from_records(records, jmax: int, kmax: int) -> "LaurentCoefficients":
        entries = {(int(rec["j"]), int(rec["k"])): complex(rec["re"], rec["im"]) for rec in records}
        return LaurentCoefficients(entries=entries, jmax=jmax, kmax=kmax)


def project(f: Callable, jmax: int, kmax: int, spec: QuadratureSpec) -> LaurentCoefficients:
    """Orthogonal projection coefficients a_jk = (f, v_jk) / ||v_jk||^2.

    Evaluates f once on the tensor grid, takes the angular transform onto
    the block's mode pairs, then reduces radially; identical to the plain
    quadrature pairing, node for node.
    """
    idxs = block_indices(jmax, kmax)
    n = spec.level
    xs, wxs = _gl_unit(n)
    ss, wss = _gl_unit(n)
    ang, wang = _angular_nodes(n)

    X = xs[:, None, None, None]
    S = ss[None, :, None, None]
    A = ang[None, None, :, None]
    B = ang[None, None, None, :]
    vals = np.asarray(f(X * S, A, S, B), dtype=complex)
    vals = np.broadcast_to(vals, (n, n, n, n))
    if not np.isfinite(vals).all():
        raise ValueError("field returned non-finite values on T; cannot project")

    W = (wxs * xs)[:, None] * (wss * ss**3)[None, :]
    norm_sq = float(np.sum((np.abs(vals) ** 2).sum(axis=(2, 3)) * W) * wang * wang)

    ls = sorted({idx.modes[0] for idx in idxs})
    ms = sorted({idx.modes[1] for idx in idxs})
    El = np.exp(-1j * np.outer(ls, ang)) * wang  # (nl, n)
    Em = np.exp(-1j * np.outer(ms, ang)) * wang
    # F[l, m, x, s] = sum_ab f(x,s,a,b) e^{-i(l a + m b)} w_a w_b
    F = np.einsum("xsab,la,mb->lmxs", vals, El, Em, optimize=True)
    lpos = {l: i for i, l in enumerate(ls)}
    mpos = {m: i for i, m in enumerate(ms)}

    entries = {}
    for idx in idxs:
        l, m = idx.modes
        rad = xs[:, None] ** idx.j * ss[None, :] ** idx.k * W
        pairing = complex(np.sum(F[lpos[l], mpos[m]] * rad))
        entries[(idx.j, idx.k)] = pairing / v_norm_sq(idx)
    return LaurentCoefficients(entries=entries, jmax=jmax, kmax=kmax, f_norm_sq=norm_sq)


def reconstruct(coeffs: LaurentCoefficients, p: PolarPoint) -> complex:
    """Pointwise sum of the stored expansion at p."""
    total = 0j
    for (j, k), a in coeffs.entries.items():
        total += a * v_eval_arrays(j, k, p.r, p.alpha, p.s, p.beta)
    return complex(total)


def reconstruct_field(coeffs: LaurentCoefficients) -> Callable:
    """The expansion as a field usable by integrate_T / project."""

    def f(r, alpha, s, beta):
        total = np.zeros(np.broadcast(r, alpha, s, beta).shape, dtype=complex)
        for (j, k), a in coeffs.entries.items():
            total = total + a * v_eval_arrays(j, k, r, alpha, s, beta)
        return total

    return f


def kernel_truncated(p: PolarPoint, q: PolarPoint, jmax: int, kmax: int) -> complex:
    """Truncated reproducing kernel sum_jk v_jk(p) conj(v_jk(q)) / ||v_jk||^2."""
    total = 0j
    for idx in block_indices(jmax, kmax):
        vp = v_eval_arrays(idx.j, idx.k, p.r, p.alpha, p.s, p.beta)
        vq = v_eval_arrays(idx.j, idx.k, q.r, q.alpha, q.s, q.beta)
        total += vp * np.conj(vq) / v_norm_sq(idx)
    return complex(total)

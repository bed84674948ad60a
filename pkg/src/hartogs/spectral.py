"""Variational Neumann problem on T by Fourier-mode decoupling.

Writing a field on T as a sum of angular modes u = g(r, s) e^{i(l alpha +
m beta)}, the Dirichlet energy and L^2 norm decouple into independent 2D
problems on the triangle {0 < r < s < 1}:

    E_{l,m}(g) = (2 pi)^2 double-int [ |g_r|^2 + |g_s|^2
                 + (l^2/r^2 + m^2/s^2) |g|^2 ] r s dr ds,
    N(g)       = (2 pi)^2 double-int |g|^2 r s dr ds.

Discretization: cell-centered finite volumes on the uniform n x n grid,
active cells (i, j) with i < j, node coordinates ((i+1/2)/n, (j+1/2)/n).
The stiffness matrix sums edge terms w_e (g_a - g_b)^2 with w_e = (2 pi)^2
r_e s_e evaluated at the edge midpoint (so constants are annihilated
exactly in the (0, 0) mode) plus the diagonal potential; the mass matrix is
diagonal.  Cell-centering keeps the singular potentials l^2/r^2 and m^2/s^2
evaluated strictly inside the domain; no boundary condition is imposed,
which is the natural (Neumann) variational setting.

Eigenpairs come from shift-invert Lanczos on the generalized pencil
(stiffness, mass); the zero mode of (0, 0) is reproduced at roundoff level
and the Poincare constant is estimated as 1/lambda-hat with lambda-hat the
smallest nonzero eigenvalue over modes |l|, |m| <= mode_cut (modes enter
through l^2, m^2, so nonnegative l, m suffice).  The estimate is one-sided:
raising mode_cut or n can only refine it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

__all__ = [
    "ModeProblem",
    "SpectrumResult",
    "EigenSolverError",
    "build_mode",
    "neumann_spectrum",
    "poincare_constant",
    "solve_neumann",
]

_W4 = (2.0 * np.pi) ** 2


class EigenSolverError(RuntimeError):
    """Eigen- or linear-solver failure, with the (l, m, n) context."""


@dataclass
class ModeProblem:
    """Discrete forms of one angular mode on the triangle {0 < r < s < 1}."""

    l: int
    m: int
    n: int
    stiffness: sp.csr_matrix
    mass: sp.dia_matrix
    r_centers: np.ndarray
    s_centers: np.ndarray

    @property
    def size(self) -> int:
        return self.stiffness.shape[0]


def build_mode(l: int, m: int, n: int) -> ModeProblem:
    """Assemble stiffness and mass of mode (l, m) at grid resolution n."""
    if n < 8:
        raise ValueError("grid resolution must be >= 8")
    h = 1.0 / n
    ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    active = ii < jj
    index = -np.ones((n, n), dtype=np.int64)
    index[active] = np.arange(active.sum())
    ci, cj = ii[active], jj[active]
    rc = (ci + 0.5) * h
    sc = (cj + 0.5) * h
    N = ci.size

    mass = sp.diags(_W4 * rc * sc * h * h)

    rows, cols, vals = [], [], []

    def add_edges(ka, kb, w):
        rows.extend([ka, kb, ka, kb])
        cols.extend([ka, kb, kb, ka])
        vals.extend([w, w, -w, -w])

    # horizontal neighbors (i, j) - (i+1, j): edge midpoint ((i+1)h, s_j)
    ok = (ci + 1 < cj)  # neighbor must stay strictly below the diagonal
    ka = index[ci[ok], cj[ok]]
    kb = index[ci[ok] + 1, cj[ok]]
    add_edges(ka, kb, _W4 * (ci[ok] + 1.0) * h * sc[ok])
    # vertical neighbors (i, j) - (i, j+1): edge midpoint (r_i, (j+1)h)
    ok = cj + 1 < n
    ka = index[ci[ok], cj[ok]]
    kb = index[ci[ok], cj[ok] + 1]
    add_edges(ka, kb, _W4 * rc[ok] * (cj[ok] + 1.0) * h)

    pot = _W4 * (l * l / rc**2 + m * m / sc**2) * rc * sc * h * h
    rows = np.concatenate(rows + [np.arange(N)])
    cols = np.concatenate(cols + [np.arange(N)])
    vals = np.concatenate(vals + [pot])
    stiffness = sp.csr_matrix(sp.coo_matrix((vals, (rows, cols)), shape=(N, N)))
    return ModeProblem(l=l, m=m, n=n, stiffness=stiffness, mass=mass, r_centers=rc, s_centers=sc)


@dataclass(frozen=True)
class SpectrumResult:
    mode: tuple[int, int]
    eigenvalues: tuple[float, ...]
    grid: int
    converged: bool

    def to_rows(self) -> list[dict]:
        l, m = self.mode
        return [
            {"l": l, "m": m, "n": self.grid, "index": i, "eigenvalue": v, "converged": self.converged}
            for i, v in enumerate(self.eigenvalues)
        ]


def _lowest_eigenvalues(problem: ModeProblem, count: int) -> np.ndarray:
    if count < 1:
        raise ValueError("count must be >= 1")
    if count >= problem.size:
        raise ValueError("count must be smaller than the problem size")
    # fixed generic starting vector: ARPACK otherwise draws a random one per
    # call, which perturbs converged eigenvalues at the last-ulp level
    v0 = np.random.default_rng(1234).standard_normal(problem.size)
    try:
        vals = spla.eigsh(
            problem.stiffness,
            k=count,
            M=problem.mass,
            sigma=-0.5,
            which="LM",
            v0=v0,
            return_eigenvectors=False,
        )
    except Exception as exc:  # arpack failures carry little context
        raise EigenSolverError(
            f"eigensolver failed for mode ({problem.l},{problem.m}) at n={problem.n}: {exc}"
        ) from exc
    vals = np.sort(np.real(vals))
    # clamp roundoff-negative zero modes, never genuine negatives
    tiny = vals > -1e-8
    vals[tiny & (vals < 0.0)] = 0.0
    return vals


def neumann_spectrum(l: int, m: int, n: int, count: int) -> SpectrumResult:
    """Lowest eigenvalues of mode (l, m); converged compares n against 2n."""
    coarse = _lowest_eigenvalues(build_mode(l, m, n), count)
    fine = _lowest_eigenvalues(build_mode(l, m, 2 * n), count)
    atol = 1e-8
    converged = True
    for a, b in zip(coarse, fine):
        if abs(a) <= atol and abs(b) <= atol:
            continue
        if abs(a - b) > 0.01 * max(abs(a), abs(b)):
            converged = False
            break
    return SpectrumResult(mode=(l, m), eigenvalues=tuple(float(v) for v in coarse), grid=n, converged=bool(converged))


def poincare_constant(n: int, mode_cut: int) -> float:
    """One-sided Poincare estimate 1/lambda-hat over modes |l|,|m| <= cut.

    lambda-hat is the smallest nonzero eigenvalue: index 1 for (0, 0) whose
    kernel is the constants, index 0 for every other mode.
    """
    if mode_cut < 1:
        raise ValueError("mode_cut must be >= 1")
    lam = np.inf
    for l in range(mode_cut + 1):
        for m in range(mode_cut + 1):
            count = 2 if (l, m) == (0, 0) else 1
            vals = _lowest_eigenvalues(build_mode(l, m, n), count)
            lam = min(lam, float(vals[-1]))
    return 1.0 / lam


def solve_neumann(f, l: int, m: int, n: int, demean: bool = True) -> np.ndarray:
    """Solve stiffness u = mass f-hat for mode (l, m) on the n-grid.

    ``f`` is the mode amplitude: a callable f(r, s) evaluated at the cell
    centers, or a vector of nodal values.  For the (0, 0) mode the data is
    replaced by f - mean(f) (mass-weighted) and the solution is pinned to
    mean zero via a Lagrange multiplier; with demean=False, data with a
    nonzero mean makes the singular system inconsistent and raises.
    """
    problem = build_mode(l, m, n)
    if callable(f):
        fhat = np.asarray(f(problem.r_centers, problem.s_centers), dtype=float)
        fhat = np.broadcast_to(fhat, (problem.size,)).copy()
    else:
        fhat = np.asarray(f, dtype=float)
        if fhat.shape != (problem.size,):
            raise ValueError(f"expected {problem.size} nodal values, got {fhat.shape}")
    K = problem.stiffness
    M = problem.mass
    b = M @ fhat

    if (l, m) == (0, 0):
        w = M.diagonal()
        mean = float(w @ fhat) / float(w.sum())
        if not demean:
            scale = float(np.abs(b).max()) or 1.0
            if abs(mean) * float(w.sum()) > 1e-10 * scale:
                raise ValueError("(0,0) system inconsistent: data has nonzero mean")
        else:
            fhat = fhat - mean
            b = M @ fhat
        # bordered system pins (u, 1)_M = 0 while keeping symmetry
        one = w.reshape(-1, 1)
        A = sp.bmat([[K, one], [one.T, None]], format="csc")
        rhs = np.concatenate([b, [0.0]])
        try:
            sol = spla.spsolve(A, rhs)
        except Exception as exc:
            raise EigenSolverError(f"linear solve failed for mode (0,0) at n={n}: {exc}") from exc
        u = sol[:-1]
    else:
        try:
            u = spla.spsolve(sp.csc_matrix(K), b)
        except Exception as exc:
            raise EigenSolverError(f"linear solve failed for mode ({l},{m}) at n={n}: {exc}") from exc

    residual = float(np.linalg.norm(K @ u - (M @ fhat)))
    # absolute floor keeps a numerically-zero right-hand side (e.g. demeaned
    # constant data) from turning roundoff into a spurious relative failure
    scale = float(np.linalg.norm(M @ fhat))
    if residual > 1e-8 * scale + 1e-12:
        raise EigenSolverError(
            f"solver residual {residual:.3e} exceeds 1e-8 relative for mode ({l},{m})"
        )
    return u

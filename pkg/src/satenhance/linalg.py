"""Dense real SVD by one-sided (Hestenes) Jacobi rotations.

Columns of the working matrix are orthogonalized pairwise until every pair
satisfies ``|a_p . a_q| <= tol * |a_p| |a_q|``.  Pairs are visited in a fixed
round-robin tournament, so the n/2 disjoint rotations of one round are
applied together; the result is deterministic for a given input.

Sign convention: the largest-magnitude entry of every column of ``u`` is
non-negative (ties resolved to the first such entry), and ``v`` is flipped
to match.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "ConvergenceError",
    "SvdFactors",
    "svd",
    "reconstruct",
    "max_singular_value",
    "scale_singular_values",
]

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 60
_EPS = np.finfo(np.float64).eps


class ConvergenceError(RuntimeError):
    """The Jacobi sweeps did not converge within the iteration cap."""


@dataclass(eq=False)
class SvdFactors:
    """Thin factorization ``A = u @ diag(sigma) @ v.T``.

    ``u`` is m x k and ``v`` is n x k with k = min(m, n); ``sigma`` is sorted
    descending.  ``u`` is the hanger, ``v`` the aligner.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    sweeps: int = 0

    @property
    def m(self) -> int:
        return self.u.shape[0]

    @property
    def n(self) -> int:
        return self.v.shape[0]


@lru_cache(maxsize=64)
def _tournament(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule: n-1 (or n) rounds of disjoint column pairs."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        p, q = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a < n and b < n:
                p.append(min(a, b))
                q.append(max(a, b))
        if p:
            rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _jacobi_tall(a: np.ndarray, tol: float, max_sweeps: int):
    """One-sided Jacobi on a tall (m >= n) matrix; returns (W, V, sweeps, tiny)."""
    m, n = a.shape
    # columns stored as contiguous rows
    wt = np.array(a.T, order="C")
    vt = np.eye(n)
    frob = np.sqrt(np.sum(a * a))
    tiny = (max(m, n) * _EPS * frob) ** 2
    rounds = _tournament(n)

    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for p, q in rounds:
            wp = wt[p]
            wq = wt[q]
            alpha = np.einsum("ij,ij->i", wp, wp)
            beta = np.einsum("ij,ij->i", wq, wq)
            gamma = np.einsum("ij,ij->i", wp, wq)
            active = (
                (np.abs(gamma) > tol * np.sqrt(alpha * beta))
                & (alpha > tiny)
                & (beta > tiny)
            )
            if not active.any():
                continue
            rotated = True
            if not active.all():
                p, q = p[active], q[active]
                wp, wq = wp[active], wq[active]
                alpha, beta, gamma = alpha[active], beta[active], gamma[active]
            zeta = (beta - alpha) / (2.0 * gamma)
            t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = (1.0 / np.sqrt(1.0 + t * t))[:, None]
            s = c * t[:, None]
            wt[p] = c * wp - s * wq
            wt[q] = s * wp + c * wq
            vp = vt[p]
            vq = vt[q]
            vt[p] = c * vp - s * vq
            vt[q] = s * vp + c * vq
        if not rotated:
            return wt.T, vt.T, sweep, tiny
    raise ConvergenceError(
        f"one-sided Jacobi did not converge in {max_sweeps} sweeps for a {m}x{n} matrix"
    )


def _complete_columns(u: np.ndarray, filled: np.ndarray, candidates: dict[int, np.ndarray]) -> np.ndarray:
    """Fill columns where ``filled`` is False with unit vectors orthogonal to the rest.

    ``candidates`` maps a column to a preferred direction tried before the
    standard basis vectors.  Returns a mask of the columns that kept their
    preferred direction.
    """
    m = u.shape[0]
    kept = np.zeros(u.shape[1], dtype=bool)
    for j in np.flatnonzero(~filled):
        tries = []
        if j in candidates:
            tries.append(candidates[j])
        tries.extend(np.eye(m))
        for i, vec in enumerate(tries):
            basis = u[:, filled]
            x = vec.copy()
            for _ in range(2):
                x -= basis @ (basis.T @ x)
            norm = np.linalg.norm(x)
            if norm > 0.5:
                u[:, j] = x / norm
                filled[j] = True
                kept[j] = i == 0 and j in candidates
                break
    return kept


def _normalize_signs(u: np.ndarray, v: np.ndarray) -> None:
    rows = np.argmax(np.abs(u), axis=0)
    flip = u[rows, np.arange(u.shape[1])] < 0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0


def svd(matrix, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> SvdFactors:
    """Thin SVD of a finite real matrix.

    >>> f = svd([[3.0, 0.0], [4.0, 5.0]])
    >>> [round(float(s) ** 2, 9) for s in f.sigma]
    [45.0, 5.0]
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or min(a.shape) < 1:
        raise ValueError(f"svd needs a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("svd input contains non-finite values")

    wide = a.shape[0] < a.shape[1]
    work = a.T if wide else a
    w, v, sweeps, tiny = _jacobi_tall(work, tol, max_sweeps)

    sigma = np.sqrt(np.einsum("ij,ij->j", w, w))
    good = sigma ** 2 > tiny
    u = np.zeros_like(w)
    u[:, good] = w[:, good] / sigma[good]
    candidates = {int(j): w[:, j] / sigma[j] for j in np.flatnonzero(~good) if sigma[j] > 0}
    kept = _complete_columns(u, good.copy(), candidates)
    sigma = np.where(good | kept, sigma, 0.0)

    order = np.argsort(-sigma, kind="stable")
    u, sigma, v = u[:, order], sigma[order], v[:, order]
    if wide:
        u, v = v, u
    _normalize_signs(u, v)
    return SvdFactors(u=u, sigma=sigma, v=v, sweeps=sweeps)


def reconstruct(factors: SvdFactors) -> np.ndarray:
    u, sigma, v = factors.u, factors.sigma, factors.v
    if u.shape[1] != sigma.shape[0] or v.shape[1] != sigma.shape[0]:
        raise ValueError(
            f"factor shapes disagree: u {u.shape}, sigma {sigma.shape}, v {v.shape}"
        )
    return (u * sigma) @ v.T


def max_singular_value(matrix) -> float:
    """Largest singular value (spectral norm) of ``matrix``."""
    return float(svd(matrix).sigma[0])


def scale_singular_values(factors: SvdFactors, xi: float) -> np.ndarray:
    """Rebuild ``u @ diag(xi * sigma) @ v.T``."""
    if not xi > 0:
        raise ValueError(f"scale factor must be positive, got {xi}")
    return reconstruct(SvdFactors(u=factors.u, sigma=xi * factors.sigma, v=factors.v))

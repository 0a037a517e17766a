"""
Linking matrices of based link diagrams and minimization over orders.

Row and column x of M(D_a) belong to the x-th component in the order of a.
Off-diagonal entry (x, y) counts crossings of those two components where
the x-th goes under; the diagonal holds each component's own warping degree.
"""

from __future__ import annotations

import itertools

import numpy as np

from .diagram import BaseSequence, LinkDiagram, subdiagram
from .normalize import knot_warping_degree
from .warping import under_matrix

__all__ = [
    "build_matrix",
    "transposition",
    "conjugate",
    "ld_from_matrix",
    "d_from_matrix",
    "ld_min_matrix",
    "q_products",
    "ld_min_q",
    "parse_matrix",
]


def _as_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"linking matrix must be square, got shape {M.shape}")
    return M


def build_matrix(D: LinkDiagram, a: BaseSequence) -> np.ndarray:
    a.check(D)
    under = under_matrix(D)
    M = np.zeros((D.r, D.r), dtype=np.int64)
    for x, i in enumerate(a.order):
        for y, j in enumerate(a.order):
            if x == y:
                M[x, x] = knot_warping_degree(subdiagram(D, [i]))
            else:
                M[x, y] = under[i][j]
    return M


def transposition(r: int, k: int) -> np.ndarray:
    """P_k: the permutation matrix exchanging positions k and k+1 (1-based)."""
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must lie in 1..{r - 1}, got {k}")
    P = np.eye(r, dtype=np.int64)
    P[[k - 1, k]] = P[[k, k - 1]]
    return P


def conjugate(M, k: int) -> np.ndarray:
    M = _as_matrix(M)
    P = transposition(len(M), k)
    # P_k is its own inverse
    return P @ M @ P


def ld_from_matrix(M) -> int:
    return int(np.triu(_as_matrix(M), 1).sum())


def d_from_matrix(M) -> int:
    return int(np.triu(_as_matrix(M)).sum())


def ld_min_matrix(M) -> tuple:
    """(min over orders of the upper-triangular sum, lexicographically first order)."""
    M = _as_matrix(M)
    best = None
    for order in itertools.permutations(range(len(M))):
        v = ld_from_matrix(M[np.ix_(order, order)])
        if best is None or v < best[0]:
            best = (v, order)
    return best


def q_products(r: int):
    """Yield (k, Q_k) for every choice k_n in n..r, with Q = P^{r-1} ... P^1.

    P^n = P_n P_{n+1} ... P_{k_n}, or the identity when k_n = r.
    """
    ranges = [range(n, r + 1) for n in range(1, r)]
    for ks in itertools.product(*ranges):
        Q = np.eye(r, dtype=np.int64)
        for n, kn in enumerate(ks, 1):
            Pn = np.eye(r, dtype=np.int64)
            if kn < r:
                for k in range(n, kn + 1):
                    Pn = Pn @ transposition(r, k)
            Q = Pn @ Q
        yield ks, Q


def ld_min_q(M) -> tuple:
    """ld minimum via Q_k M Q_k^{-1} conjugates; returns (value, order)."""
    M = _as_matrix(M)
    best = None
    for _, Q in q_products(len(M)):
        order = tuple(int(c) for c in Q.argmax(axis=1))
        v = ld_from_matrix(Q @ M @ Q.T)
        if best is None or (v, order) < best:
            best = (v, order)
    return best


def parse_matrix(text: str) -> np.ndarray:
    """Rows separated by ';', entries by whitespace or commas."""
    rows = [r.replace(",", " ").split() for r in text.strip().split(";") if r.strip()]
    try:
        M = np.array([[int(x) for x in row] for row in rows], dtype=np.int64)
    except ValueError as exc:
        raise ValueError(f"malformed matrix literal {text!r}: {exc}") from exc
    if (M < 0).any():
        raise ValueError("linking matrix entries must be nonnegative")
    return _as_matrix(M)

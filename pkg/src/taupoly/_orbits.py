"""Vectorized reflection-group enumeration.

Group elements are visited once each by breadth-first search over the
orbit of the regular weight rho = (1, ..., 1): the stabilizer of rho is
trivial, so orbit points and group elements are in bijection.  Points are
stored in fundamental-weight coordinates (bounded by the Coxeter number,
so int8 is safe) and deduplicated through a packed int64 key.

Matrix ranks over the integers are needed in bulk by the absolute-order
enumeration.  They are computed by Gaussian elimination modulo one or two
primes just under 2**31.  A nonzero integer minor of the matrices in scope
is bounded by Hadamard's inequality well below the product of the primes,
so a minor vanishing modulo every prime used is genuinely zero and the
modular rank equals the rational rank.  This keeps the whole elimination
in vectorized int64 arithmetic.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator

import numpy as np

_P1 = 2147483647  # 2**31 - 1, prime
_P2 = 2147483629  # prime

_KEY_OFFSET = 32  # weight coordinates lie in [-(h-1), h-1], h <= 30


def simple_reflection_matrices(cartan: np.ndarray) -> list[np.ndarray]:
    """Reflection matrices acting on simple-root coordinates (column vectors)."""
    n = cartan.shape[0]
    mats = []
    for i in range(n):
        m = np.eye(n, dtype=np.int64)
        m[i, :] -= cartan[i, :]
        mats.append(m)
    return mats


def reflection_matrix_for_root(root: np.ndarray, cartan: np.ndarray) -> np.ndarray:
    """Matrix of the reflection in the given root (simple-root coordinates)."""
    a = np.asarray(root, dtype=np.int64)
    n = cartan.shape[0]
    return np.eye(n, dtype=np.int64) - np.outer(a, cartan @ a)


def positive_roots(cartan: np.ndarray) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates, by reflection closure."""
    C = np.asarray(cartan, dtype=np.int64)
    n = C.shape[0]
    simples = [tuple(int(v) for v in row) for row in np.eye(n, dtype=np.int64)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            vec = np.array(r, dtype=np.int64)
            for i in range(n):
                img = vec.copy()
                img[i] -= int(C[i] @ vec)
                t = tuple(int(x) for x in img)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(r for r in seen if min(r) >= 0 and max(r) > 0)


def _keys_of(points: np.ndarray) -> np.ndarray:
    n = points.shape[1]
    powers = (64 ** np.arange(n, dtype=np.int64))
    return ((points.astype(np.int64) + _KEY_OFFSET) * powers).sum(axis=1)


def orbit_levels(
    cartan: np.ndarray, *, with_matrices: bool = False
) -> Iterator[tuple[np.ndarray, np.ndarray | None]]:
    """Yield BFS levels of the rho-orbit as (points, matrices or None).

    Points are (k, n) int8 in fundamental-weight coordinates; matrices,
    when requested, are the group elements in simple-root coordinates
    (k, n, n) int16, aligned row-for-row with the points.  Applying the
    i-th simple reflection to a point prepends s_i to the group element,
    so the matrices are built by left multiplication in step.
    """
    C = np.asarray(cartan, dtype=np.int16)
    n = C.shape[0]
    simple_mats = [m.astype(np.int16) for m in simple_reflection_matrices(C.astype(np.int64))]

    pts = np.ones((1, n), dtype=np.int8)
    mats = np.eye(n, dtype=np.int16)[None, :, :] if with_matrices else None
    visited = np.sort(_keys_of(pts))

    while pts.shape[0]:
        yield pts, mats
        cand_pts = []
        cand_mats = []
        for i in range(n):
            nxt = pts.astype(np.int16).copy()
            nxt -= pts[:, i : i + 1].astype(np.int16) * C[i][None, :]
            cand_pts.append(nxt.astype(np.int8))
            if with_matrices:
                cand_mats.append(np.matmul(simple_mats[i], mats))
        allpts = np.concatenate(cand_pts, axis=0)
        keys = _keys_of(allpts)
        uniq_keys, first = np.unique(keys, return_index=True)
        pos = np.searchsorted(visited, uniq_keys)
        pos = np.minimum(pos, len(visited) - 1)
        fresh = visited[pos] != uniq_keys
        take = first[fresh]
        pts = allpts[take]
        if with_matrices:
            allmats = np.concatenate(cand_mats, axis=0)
            mats = allmats[take]
        visited = np.sort(np.concatenate([visited, uniq_keys[fresh]]))


def descent_distribution(cartan: np.ndarray, progress: Callable[[int], None] | None = None) -> list[int]:
    """Histogram of the number of negative coordinates over the rho-orbit.

    A coordinate of w(rho) is negative exactly when the corresponding
    simple reflection shortens w on the left, so this is the descent-count
    distribution over the whole group.
    """
    n = np.asarray(cartan).shape[0]
    hist = np.zeros(n + 1, dtype=object)
    total = 0
    for pts, _ in orbit_levels(cartan, with_matrices=False):
        counts = (pts < 0).sum(axis=1)
        binned = np.bincount(counts, minlength=n + 1)
        for j, v in enumerate(binned):
            hist[j] += int(v)
        total += pts.shape[0]
        if progress is not None:
            progress(total)
    return [int(v) for v in hist]


def _rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a batch of small integer matrices modulo a prime.

    Pivot rows are marked used instead of swapped, and elimination uses
    cross multiplication (row*pivot - factor*pivotrow) so no modular
    inverses are needed.  All products stay below p**2 < 2**63.
    """
    A = np.mod(mats.astype(np.int64), p)
    bsz, n, _ = A.shape
    rank = np.zeros(bsz, dtype=np.int64)
    used = np.zeros((bsz, n), dtype=bool)
    bidx = np.arange(bsz)
    for col in range(n):
        colv = A[:, :, col]
        eligible = ~used & (colv != 0)
        has = eligible.any(axis=1)
        piv = np.argmax(eligible, axis=1)
        pivot_val = colv[bidx, piv]
        pivot_row = A[bidx, piv, :]
        transform = ~used & has[:, None]
        transform[bidx, piv] = False
        factors = np.where(transform, colv, 0)
        scale = np.where(transform, pivot_val[:, None], 1)
        A *= scale[:, :, None]
        A -= factors[:, :, None] * pivot_row[:, None, :]
        np.mod(A, p, out=A)
        used[bidx, piv] |= has
        rank += has
    return rank


def _hadamard_bound(max_entry: int, n: int) -> int:
    norm_sq = n * max_entry * max_entry
    return math.isqrt(norm_sq**n) + 1


def batched_rank(mats: np.ndarray) -> np.ndarray:
    """Exact integer ranks of a batch of (B, n, n) small-entry matrices."""
    n = mats.shape[1]
    max_entry = int(np.abs(mats).max(initial=0))
    bound = _hadamard_bound(max_entry, n)
    ranks = _rank_mod_p(mats, _P1)
    if bound >= _P1:
        # one prime cannot certify; a minor could vanish mod P1 only
        if bound >= _P1 * _P2:
            raise ValueError("matrix entries too large for two-prime rank")
        ranks = np.maximum(ranks, _rank_mod_p(mats, _P2))
    return ranks


def interval_length_distribution(
    cartan: np.ndarray,
    coxeter_matrix: np.ndarray,
    *,
    chunk: int = 1 << 13,
    progress: Callable[[int], None] | None = None,
) -> list[int]:
    """Distribution of reflection length over the absolute-order interval.

    Enumerates the whole group; keeps elements w with
    ``rank(w - I) + rank(c - w) == n`` (the interval membership test, since
    ``rank(w^{-1}c - I) = rank(c - w)``), and histograms ``rank(w - I)``,
    the reflection length of w.
    """
    C = np.asarray(cartan)
    n = C.shape[0]
    eye = np.eye(n, dtype=np.int64)
    cox = coxeter_matrix.astype(np.int64)
    hist = [0] * (n + 1)
    total = 0
    for pts, mats in orbit_levels(C, with_matrices=True):
        assert mats is not None
        for start in range(0, mats.shape[0], chunk):
            block = mats[start : start + chunk].astype(np.int64)
            r1 = batched_rank(block - eye[None, :, :])
            # full reflection length forces w == c (the only element with
            # a zero complementary length); test that directly
            full = r1 == n
            if full.any():
                hist[n] += int((block[full] == cox).all(axis=(1, 2)).sum())
            partial = ~full
            if partial.any():
                sub = block[partial]
                r2 = batched_rank(cox[None, :, :] - sub)
                keep = r1[partial] + r2 == n
                if keep.any():
                    lengths, counts = np.unique(r1[partial][keep], return_counts=True)
                    for length, count in zip(lengths, counts):
                        hist[int(length)] += int(count)
        total += mats.shape[0]
        if progress is not None:
            progress(total)
    return hist


def group_order_by_orbit(cartan: np.ndarray) -> int:
    return sum(pts.shape[0] for pts, _ in orbit_levels(cartan))

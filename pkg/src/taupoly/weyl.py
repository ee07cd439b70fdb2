"""Descent and reflection-length statistics of finite reflection groups.

The two generating polynomials computed here are

* the descent-count distribution over the whole group (the h-vector of
  the Coxeter complex), and
* the reflection-length distribution over the absolute-order interval
  below a Coxeter element (the Fuss-Catalan / Narayana refinement).

Each statistic has at least two independent routes:

* type A descent counts come from the classical triangle recurrence, with
  direct enumeration of permutations as the oracle;
* type D descent counts come from the signed-permutation model with an
  even number of sign changes, cross-checked against the type B triangle
  identity and against a third model, breadth-first traversal of the
  orbit of the regular weight;
* type E descent counts can only be enumerated, via the weight orbit;
* type A Narayana numbers come from the closed binomial formula, while
  types D and E (and the type A oracle) enumerate the group as reflection
  matrices and use the codimension formula for reflection length.

Full E8 enumeration (696,729,600 elements) is feature gated; nothing in
the primary tables needs it.
"""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache

import numpy as np

from . import _orbits
from .dynkin import DynkinDiagram, as_union
from .errors import FeatureDisabled, RankTooLarge
from .polynomials import ONE, Polynomial

_EULERIAN_ORACLE_MAX_A = 9
_EULERIAN_ORACLE_MAX_D = 8
_NARAYANA_ORACLE_MAX = 8

_memo_lock = threading.Lock()
_eulerian_memo: dict[tuple[str, int], Polynomial] = {}
_narayana_memo: dict[tuple[str, int], Polynomial] = {}


def cartan_matrix(d: DynkinDiagram) -> np.ndarray:
    """Cartan matrix in the diagram's vertex order (symmetric, ADE)."""
    verts = d.vertices
    index = {v: i for i, v in enumerate(verts)}
    n = d.rank
    C = 2 * np.eye(n, dtype=np.int64)
    for a, b in d.edges:
        C[index[a], index[b]] = -1
        C[index[b], index[a]] = -1
    return C


# ---------------------------------------------------------------------------
# Descent statistics
# ---------------------------------------------------------------------------


def descent_count_permutation(w: tuple[int, ...]) -> int:
    """Number of positions i with w(i) > w(i+1)."""
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def descent_count_signed(w: tuple[int, ...]) -> int:
    """Type D descent count: positional descents plus one if w(1)+w(2) < 0."""
    des = sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])
    if len(w) >= 2 and w[0] + w[1] < 0:
        des += 1
    return des


@lru_cache(maxsize=None)
def _eulerian_sym(m: int) -> tuple[int, ...]:
    """Descent distribution over the symmetric group on m letters."""
    if m <= 1:
        return (1,)
    prev = _eulerian_sym(m - 1)

    def at(k: int) -> int:
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple((k + 1) * at(k) + (m - k) * at(k - 1) for k in range(m))


@lru_cache(maxsize=None)
def _eulerian_hyperoctahedral(m: int) -> tuple[int, ...]:
    """Descent distribution over all signed permutations of m letters."""
    if m == 0:
        return (1,)
    prev = _eulerian_hyperoctahedral(m - 1)

    def at(k: int) -> int:
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple((2 * k + 1) * at(k) + (2 * (m - k) + 1) * at(k - 1) for k in range(m + 1))


def _eulerian_even_signed(m: int) -> tuple[int, ...]:
    """Descent distribution over even-signed permutations of m letters.

    Subtracting m*2^(m-1)*t times the symmetric-group distribution from the
    full signed distribution is the classical identity relating the two;
    it is validated against direct enumeration in the test suite.
    """
    full = _eulerian_hyperoctahedral(m)
    sym = _eulerian_sym(m - 1) if m >= 1 else (1,)
    corr = m * 2 ** (m - 1)

    def at(k: int) -> int:
        return sym[k] if 0 <= k < len(sym) else 0

    out = [full[k] - corr * at(k - 1) for k in range(m + 1)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def eulerian_a_by_enumeration(rank: int) -> Polynomial:
    """Oracle: descent counts over all permutations of rank+1 letters."""
    if rank > _EULERIAN_ORACLE_MAX_A:
        raise RankTooLarge(f"A{rank} descent enumeration is over {rank + 1}! elements")
    if rank <= 0:
        return ONE
    hist = [0] * (rank + 1)
    for w in itertools.permutations(range(1, rank + 2)):
        hist[descent_count_permutation(w)] += 1
    return Polynomial(hist)


def eulerian_d_by_enumeration(rank: int) -> Polynomial:
    """Oracle: descent counts over signed permutations with even sign count."""
    if rank > _EULERIAN_ORACLE_MAX_D:
        raise RankTooLarge(f"D{rank} descent enumeration is over 2^{rank - 1}*{rank}! elements")
    hist = [0] * (rank + 1)
    base = range(1, rank + 1)
    for perm in itertools.permutations(base):
        for mask in range(1 << rank):
            if bin(mask).count("1") % 2:
                continue
            w = tuple(-perm[i] if (mask >> i) & 1 else perm[i] for i in range(rank))
            hist[descent_count_signed(w)] += 1
    return Polynomial(hist)


def eulerian_by_orbit(d: DynkinDiagram, *, enable_e8: bool = False) -> Polynomial:
    """Descent distribution via traversal of the regular-weight orbit.

    Works for every family; it is the only route for type E.  The E8
    orbit has 696,729,600 points and is opt-in.
    """
    if d.family == "E" and d.rank == 8 and not enable_e8:
        raise FeatureDisabled("full E8 descent enumeration requires enable_e8")
    return Polynomial(_orbits.descent_distribution(cartan_matrix(d)))


def _eulerian_connected(d: DynkinDiagram, enable_e8: bool) -> Polynomial:
    key = (d.family, d.rank)
    with _memo_lock:
        cached = _eulerian_memo.get(key)
    if cached is not None:
        return cached
    if d.family == "A":
        poly = Polynomial(_eulerian_sym(d.rank + 1))
    elif d.family == "D":
        poly = Polynomial(_eulerian_even_signed(d.rank))
    else:
        poly = eulerian_by_orbit(d, enable_e8=enable_e8)
    with _memo_lock:
        _eulerian_memo.setdefault(key, poly)
    return poly


def eulerian_poly(u, *, oracle: bool = False, enable_e8: bool = False) -> Polynomial:
    """Descent-count polynomial of a diagram or union (product over parts).

    >>> from taupoly.dynkin import parse_diagram
    >>> str(eulerian_poly(parse_diagram("A3")))
    't^3 + 11t^2 + 11t + 1'
    """
    union = as_union(u)
    result = ONE
    for comp in union:
        if oracle:
            if comp.family == "A":
                part = eulerian_a_by_enumeration(comp.rank)
            elif comp.family == "D":
                part = eulerian_d_by_enumeration(comp.rank)
            else:
                part = eulerian_by_orbit(comp, enable_e8=enable_e8)
        else:
            part = _eulerian_connected(comp, enable_e8)
        result = result * part
    return result


# ---------------------------------------------------------------------------
# Reflection length and the absolute-order interval
# ---------------------------------------------------------------------------


def absolute_length(matrix) -> int:
    """Reflection length of a group element given as an integer matrix.

    Equals the codimension of the fixed space, computed as the exact
    integer rank of (m - I).
    """
    rows = [list(map(int, row)) for row in matrix]
    n = len(rows)
    for i in range(n):
        rows[i][i] -= 1
    return _int_rank(rows)


def _int_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free integer elimination."""
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, m):
            f = rows[r][col]
            if f:
                rows[r] = [a * pivot - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def default_coxeter_order(d: DynkinDiagram) -> tuple[int, ...]:
    """Vertices in two-coloring order: an admissible order for the
    alternating orientation (every vertex a source or a sink)."""
    colors = {d.vertices[0]: 0}
    adjacency: dict[int, list[int]] = {v: [] for v in d.vertices}
    for a, b in d.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    stack = [d.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in colors:
                colors[w] = 1 - colors[v]
                stack.append(w)
    evens = sorted(v for v in d.vertices if colors[v] == 0)
    odds = sorted(v for v in d.vertices if colors[v] == 1)
    return tuple(evens + odds)


def coxeter_element_matrix(d: DynkinDiagram, order: tuple[int, ...] | None = None) -> np.ndarray:
    """Matrix of the product of all simple reflections in the given order.

    The first vertex in ``order`` acts last (word read left to right).
    """
    if order is None:
        order = default_coxeter_order(d)
    if sorted(order) != sorted(d.vertices):
        raise ValueError(f"order {order} is not a permutation of the vertices of {d}")
    index = {v: i for i, v in enumerate(d.vertices)}
    mats = _orbits.simple_reflection_matrices(cartan_matrix(d))
    out = np.eye(d.rank, dtype=np.int64)
    for v in order:
        out = out @ mats[index[v]]
    return out


def narayana_oracle(
    d: DynkinDiagram,
    *,
    coxeter_order: tuple[int, ...] | None = None,
    enable_e8: bool = False,
    progress=None,
) -> Polynomial:
    """Reflection-length distribution over the interval below a Coxeter element.

    Enumerates the whole group as matrices and keeps the elements w whose
    reflection lengths satisfy l(w) + l(w^{-1}c) = rank, the standard
    membership test for the absolute-order interval [id, c].
    """
    if d.family == "E" and d.rank == 8 and not enable_e8:
        raise FeatureDisabled("the E8 absolute-order oracle requires enable_e8")
    if d.rank > _NARAYANA_ORACLE_MAX:
        raise RankTooLarge(f"absolute-order oracle capped at rank {_NARAYANA_ORACLE_MAX}")
    cartan = cartan_matrix(d)
    cox = coxeter_element_matrix(d, coxeter_order)
    hist = _orbits.interval_length_distribution(cartan, cox, progress=progress)
    return Polynomial(hist)


@lru_cache(maxsize=None)
def narayana_a(rank: int) -> Polynomial:
    """Closed form for the type A Narayana polynomial.

    Coefficient j is binom(rank+1, j) * binom(rank+1, j+1) / (rank+1).
    """
    if rank <= 0:
        return ONE
    m = rank + 1
    return Polynomial(
        [_binom(m, j) * _binom(m, j + 1) // m for j in range(rank + 1)]
    )


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _narayana_connected(d: DynkinDiagram, enable_e8: bool) -> Polynomial:
    if d.family == "A":
        return narayana_a(d.rank)
    key = (d.family, d.rank)
    with _memo_lock:
        cached = _narayana_memo.get(key)
    if cached is not None:
        return cached
    poly = narayana_oracle(d, enable_e8=enable_e8)
    with _memo_lock:
        _narayana_memo.setdefault(key, poly)
    return poly


def narayana_poly(u, *, oracle: bool = False, enable_e8: bool = False) -> Polynomial:
    """Narayana polynomial of a diagram or union (product over parts).

    Type A components use the closed binomial formula unless ``oracle``
    forces the enumeration; D and E components always enumerate.

    >>> from taupoly.dynkin import parse_diagram
    >>> str(narayana_poly(parse_diagram("A3")))
    't^3 + 6t^2 + 6t + 1'
    """
    union = as_union(u)
    result = ONE
    for comp in union:
        if oracle:
            part = narayana_oracle(comp, enable_e8=enable_e8)
        else:
            part = _narayana_connected(comp, enable_e8)
        result = result * part
    return result


# ---------------------------------------------------------------------------
# Reflection-Cayley-graph oracle for reflection length
# ---------------------------------------------------------------------------


def reflection_length_table(d: DynkinDiagram) -> dict[bytes, int]:
    """Map every group element (matrix bytes) to its reflection length.

    Breadth-first search over the Cayley graph generated by *all*
    reflections; intended as an independent check of the codimension
    formula on small groups.
    """
    cartan = cartan_matrix(d)
    refls = [
        _orbits.reflection_matrix_for_root(np.array(r, dtype=np.int64), cartan)
        for r in _orbits.positive_roots(cartan)
    ]
    n = d.rank
    start = np.eye(n, dtype=np.int64)
    lengths = {start.tobytes(): 0}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for mat in frontier:
            for refl in refls:
                img = refl @ mat
                key = img.tobytes()
                if key not in lengths:
                    lengths[key] = depth
                    nxt.append(img)
        frontier = nxt
    return lengths


def all_group_matrices(d: DynkinDiagram) -> list[np.ndarray]:
    """Every element of a small group, as simple-root-basis matrices."""
    mats = _orbits.simple_reflection_matrices(cartan_matrix(d))
    n = d.rank
    start = np.eye(n, dtype=np.int64)
    seen = {start.tobytes(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for mat in frontier:
            for s in mats:
                img = s @ mat
                key = img.tobytes()
                if key not in seen:
                    seen[key] = img
                    nxt.append(img)
        frontier = nxt
    return list(seen.values())


def clear_memos() -> None:
    with _memo_lock:
        _eulerian_memo.clear()
        _narayana_memo.clear()

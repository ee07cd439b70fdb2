"""Lattice-path and sign-sequence models for submodule dimension totals.

Three combinatorial models, each with a closed formula and an exhaustive
enumeration oracle:

* rectangle paths with the area-below statistic (type A vertices);
* corner paths in a staircase region (type D, the two fork vertices);
* strictly decreasing signed sequences with a position-weight statistic
  (type D, the tail vertices).

The area conventions are anchored to concrete worked instances: in the
rectangle model the all-North-then-East path fills the whole rectangle
and the all-East-then-North path has area 0; in the corner model the
all-East path has area 0 and the all-North path fills the staircase.
Each enumeration also reports its path count so callers can check the
counting identities alongside the weighted sums.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator, NamedTuple

from .errors import MalformedPath, RankOutOfRange

East = 0
North = 1


class OracleSum(NamedTuple):
    total: int
    count: int


def rect_paths(s: int, t: int) -> Iterator[tuple[int, ...]]:
    """All monotone paths from (0,0) to (s,t), as step tuples."""
    for east_positions in itertools.combinations(range(s + t), s):
        path = [North] * (s + t)
        for pos in east_positions:
            path[pos] = East
        yield tuple(path)


def area_rect(path: tuple[int, ...], s: int, t: int) -> int:
    """Unit squares of [0,s] x [0,t] lying below the path.

    Each East step at height y covers y squares of its column.
    """
    if len(path) != s + t or sum(1 for p in path if p == East) != s:
        raise MalformedPath(f"path is not a ({s},{t}) rectangle path")
    height = 0
    area = 0
    for step in path:
        if step == North:
            height += 1
        else:
            area += height
    return area


def dim_orbit_ppa_A(n: int, ell: int) -> int:
    """Closed formula for the total area over all ({ell}, n-ell+1) paths.

    Equals the sum of dimensions of the submodules of the ell-th
    indecomposable projective over the type A preprojective algebra.
    """
    if not 1 <= ell <= n:
        raise RankOutOfRange(f"vertex {ell} not in A{n}")
    p, q = n - 1, n - ell
    return (p + 1) * (p + 2) // 2 * comb(p, q)


def dim_orbit_ppa_A_oracle(n: int, ell: int) -> OracleSum:
    """Enumerate the rectangle paths and sum their areas.

    The count equals binom(n+1, ell).
    """
    if not 1 <= ell <= n:
        raise RankOutOfRange(f"vertex {ell} not in A{n}")
    if n > 14:
        raise RankOutOfRange("rectangle enumeration capped at n = 14")
    s, t = ell, n - ell + 1
    total = 0
    count = 0
    for path in rect_paths(s, t):
        total += area_rect(path, s, t)
        count += 1
    return OracleSum(total, count)


def dim_orbit_ppa_D(n: int, ell: int) -> int:
    """Closed formula for type D submodule dimension totals per vertex.

    Vertices +1 and -1 give n(n-1)2^(n-3); a tail vertex ell in 2..n-1
    gives (n-ell)(n+ell-1) 2^(n-ell-1) binom(n, ell).
    """
    if n < 4:
        raise RankOutOfRange(f"D{n} needs n >= 4")
    if ell in (1, -1):
        return n * (n - 1) * 2 ** (n - 3)
    if 2 <= ell <= n - 1:
        return (n - ell) * (n + ell - 1) * 2 ** (n - ell - 1) * comb(n, ell)
    raise RankOutOfRange(f"vertex {ell} not in D{n}")


def corner_paths(length: int) -> Iterator[tuple[int, ...]]:
    """All 2**length step sequences of the given length."""
    return itertools.product((East, North), repeat=length)


def area_corner(path: tuple[int, ...], n: int) -> int:
    """Squares of the staircase {x,y >= 0, x+y <= n} below or right of the path.

    Row j (counted from the bottom) contributes one square for each
    column position from the path's x-coordinate at height j+1 out to the
    staircase boundary.  Rows the path never climbs to contribute none.
    """
    if len(path) != n - 1:
        raise MalformedPath(f"corner path must have length {n - 1}")
    area = 0
    x = 0
    j = 0
    for step in path:
        if step == East:
            x += 1
        else:
            area += (n - 1) - j - x
            j += 1
    return area


def dim_orbit_ppa_D_oracle_pm1(n: int) -> OracleSum:
    """Enumerate corner paths; the total must equal n(n-1)2^(n-3)."""
    if n < 2:
        raise RankOutOfRange("corner model needs n >= 2")
    if n > 20:
        raise RankOutOfRange("corner enumeration capped at n = 20")
    total = 0
    count = 0
    for path in corner_paths(n - 1):
        total += area_corner(path, n)
        count += 1
    return OracleSum(total, count)


def sign_sequences(n: int, ell: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing sequences of n-ell values with distinct
    absolute values drawn from {1..n}, each with either sign.

    There are 2^(n-ell) binom(n, ell) of them.
    """
    k = n - ell
    for absvals in itertools.combinations(range(1, n + 1), k):
        for signs in itertools.product((1, -1), repeat=k):
            yield tuple(sorted((a * s for a, s in zip(absvals, signs)), reverse=True))


def sequence_weight(u: tuple[int, ...], n: int) -> int:
    """The statistic sum_i (i + u_i*) with u* = u if u < 0 else u - 2.

    Positions run from n - len(u) + 1 up to n, pairing the largest entry
    with the smallest position.
    """
    ell = n - len(u)
    total = 0
    for offset, value in enumerate(u):
        i = ell + 1 + offset
        total += i + (value if value < 0 else value - 2)
    return total


def dim_orbit_ppa_D_oracle_mid(n: int, ell: int) -> OracleSum:
    """Enumerate the sign sequences; total must match dim_orbit_ppa_D."""
    if not 2 <= ell <= n - 1:
        raise RankOutOfRange(f"tail vertex {ell} not in 2..{n - 1}")
    if n > 14:
        raise RankOutOfRange("sign-sequence enumeration capped at n = 14")
    total = 0
    count = 0
    for u in sign_sequences(n, ell):
        total += sequence_weight(u, n)
        count += 1
    return OracleSum(total, count)


def dim_projective_ppa_A(n: int, ell: int) -> int:
    """Dimension of the ell-th indecomposable projective, type A: ell(n-ell+1)."""
    if not 1 <= ell <= n:
        raise RankOutOfRange(f"vertex {ell} not in A{n}")
    return ell * (n - ell + 1)


def dim_projective_ppa_D(n: int, ell: int) -> int:
    """Dimension of the ell-th indecomposable projective, type D."""
    if n < 4:
        raise RankOutOfRange(f"D{n} needs n >= 4")
    if ell in (1, -1):
        return n * (n - 1) // 2
    if 2 <= ell <= n - 1:
        return (n - ell) * (n + ell - 1)
    raise RankOutOfRange(f"vertex {ell} not in D{n}")

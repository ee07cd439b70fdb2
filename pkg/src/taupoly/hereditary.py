"""Brute-force ground truth for path algebras of Dynkin quivers.

Two independent engines live here:

* For type A quivers of arbitrary orientation (and disjoint unions of
  them), the full compatibility complex of rigid pairs is built from
  scratch.  Indecomposables of a type A quiver are the interval modules;
  morphism spaces between intervals are computed by solving the
  intertwiner equations, one scalar unknown per common support vertex,
  which keeps the code agnostic of the orientation.  Face counts of the
  complex give the face-count polynomial, dimension-weighted face counts
  give the dimension polynomial, with no closed formula anywhere.

* For any Dynkin quiver, the translate-orbit dimension sum is computed
  by iterating the inverse Coxeter transformation on the dimension
  vector of a projective until it leaves the positive orthant.  The sign
  and transpose conventions of the Coxeter matrix are pinned by a
  startup self-check on a rank 3 example, not by fiat.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._linalg import integer_inverse, integer_rank, mat_mul, row_times_mat
from .dynkin import DynkinDiagram
from .errors import (
    ConventionError,
    ImpurityError,
    NegativeExt,
    NotAModule,
    RankTooLarge,
    UsageError,
)
from .polynomials import Polynomial

Interval = tuple[int, ...]  # support vertices in path order


@dataclass(frozen=True)
class OrientedQuiver:
    """An acyclic orientation of a (union of) Dynkin diagram(s).

    Vertices are integers; arrows are (source, target) pairs.
    """

    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]

    @classmethod
    def line(cls, n: int, orientation: str | None = None) -> "OrientedQuiver":
        """Type A quiver on 1..n; orientation character i is '+' for the
        arrow i -> i+1 and '-' for i <- i+1.  Default: all '+'."""
        if orientation is None:
            orientation = "+" * (n - 1)
        if len(orientation) != n - 1 or any(c not in "+-" for c in orientation):
            raise UsageError(f"orientation for A{n} needs {n - 1} characters of +-")
        arrows = tuple(
            (i, i + 1) if c == "+" else (i + 1, i)
            for i, c in enumerate(orientation, start=1)
        )
        return cls(tuple(range(1, n + 1)), arrows)

    @classmethod
    def from_diagram(cls, d: DynkinDiagram, orientation: str | None = None) -> "OrientedQuiver":
        """Orient a Dynkin diagram edge by edge; '+' keeps the stored
        (a, b) direction of each edge, '-' flips it."""
        edges = d.edges
        if orientation is None:
            orientation = "+" * len(edges)
        if len(orientation) != len(edges) or any(c not in "+-" for c in orientation):
            raise UsageError(f"orientation for {d} needs {len(edges)} characters of +-")
        arrows = tuple(
            (a, b) if c == "+" else (b, a) for (a, b), c in zip(edges, orientation)
        )
        return cls(d.vertices, arrows)

    def disjoint_with(self, other: "OrientedQuiver") -> "OrientedQuiver":
        """Disjoint union, relabeling the second quiver above the first."""
        shift = (max(self.vertices) if self.vertices else 0) + 1 - min(other.vertices)
        verts = self.vertices + tuple(v + shift for v in other.vertices)
        arrows = self.arrows + tuple((a + shift, b + shift) for a, b in other.arrows)
        return OrientedQuiver(verts, arrows)

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def components(self) -> list[list[int]]:
        adjacency = {v: set() for v in self.vertices}
        for a, b in self.arrows:
            adjacency[a].add(b)
            adjacency[b].add(a)
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                cur = stack.pop()
                for nbr in adjacency[cur]:
                    if nbr not in comp:
                        comp.add(nbr)
                        stack.append(nbr)
            seen |= comp
            comps.append(sorted(comp))
        return comps

    def line_components(self) -> list[list[int]]:
        """Components as ordered paths; raises if any component branches."""
        adjacency = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            adjacency[a].append(b)
            adjacency[b].append(a)
        ordered = []
        for comp in self.components():
            if len(comp) == 1:
                ordered.append(comp)
                continue
            degrees = {v: len(adjacency[v]) for v in comp}
            if any(d > 2 for d in degrees.values()):
                raise UsageError("interval-module model needs type A components")
            start = min(v for v in comp if degrees[v] == 1)
            path = [start]
            prev = None
            while len(path) < len(comp):
                nxt = next(w for w in adjacency[path[-1]] if w != prev)
                prev = path[-1]
                path.append(nxt)
            ordered.append(path)
        return ordered


# ---------------------------------------------------------------------------
# Hom and Ext between interval modules
# ---------------------------------------------------------------------------


def hom_dim(m_support: Interval, n_support: Interval, q: OrientedQuiver) -> int:
    """Dimension of the morphism space between two thin modules.

    One unknown scalar per vertex in the common support, one linear
    equation per arrow touching either support; the morphism space is the
    kernel of that system.
    """
    ms, ns = set(m_support), set(n_support)
    common = sorted(ms & ns)
    if not common:
        return 0
    col = {v: i for i, v in enumerate(common)}
    rows = []
    for v, w in q.arrows:
        # scalar equation lambda_w * M_a - N_a * lambda_v = 0
        row = [0] * len(common)
        if v in ms and w in ms and w in ns:
            row[col[w]] += 1
        if v in ns and w in ns and v in ms:
            row[col[v]] -= 1
        if any(row):
            rows.append(row)
    return len(common) - integer_rank(rows)


def euler_form(dim_m: dict[int, int], dim_n: dict[int, int], q: OrientedQuiver) -> int:
    total = sum(dim_m.get(v, 0) * dim_n.get(v, 0) for v in q.vertices)
    total -= sum(dim_m.get(v, 0) * dim_n.get(w, 0) for v, w in q.arrows)
    return total


def ext_dim(m_support: Interval, n_support: Interval, q: OrientedQuiver) -> int:
    """dim Ext^1 between thin modules, via hom minus the Euler form."""
    dm = {v: 1 for v in m_support}
    dn = {v: 1 for v in n_support}
    value = hom_dim(m_support, n_support, q) - euler_form(dm, dn, q)
    if value < 0:
        raise NegativeExt(f"ext({m_support}, {n_support}) computed negative")
    return value


def projective_support(q: OrientedQuiver, ell: int) -> Interval:
    """Support of the indecomposable projective at a vertex: everything
    reachable along arrows."""
    reach = {ell}
    changed = True
    while changed:
        changed = False
        for a, b in q.arrows:
            if a in reach and b not in reach:
                reach.add(b)
                changed = True
    for comp in q.line_components():
        if ell in comp:
            positions = sorted(comp.index(v) for v in reach)
            if positions != list(range(positions[0], positions[-1] + 1)):
                raise RuntimeError("unreachable: projective support is not an interval")
            return tuple(comp[p] for p in positions)
    raise UsageError(f"vertex {ell} not in quiver")


# ---------------------------------------------------------------------------
# The compatibility complex
# ---------------------------------------------------------------------------

MODULE = "module"
SHIFTED_PROJECTIVE = "shifted-projective"


@dataclass(frozen=True)
class ComplexVertex:
    kind: str
    support: Interval  # interval support for modules, (ell,) for shifted projectives

    @property
    def dim(self) -> int:
        return len(self.support) if self.kind == MODULE else 0

    def __str__(self) -> str:
        if self.kind == MODULE:
            return "[" + ",".join(map(str, self.support)) + "]"
        return f"P{self.support[0]}[1]"


@dataclass(frozen=True)
class CompatibilityComplex:
    """Flag complex of pairwise-compatible rigid objects.

    ``adjacency[i]`` is the bitmask of vertices compatible with vertex i.
    Face counts and dimension-weighted face counts are precomputed per
    size; every maximal face was checked to have exactly ``rank``
    vertices during the census.
    """

    quiver: OrientedQuiver
    rank: int
    vertices: tuple[ComplexVertex, ...]
    adjacency: tuple[int, ...]
    face_counts: tuple[int, ...]
    face_dim_sums: tuple[int, ...]
    maximal_face_count: int

    def f_polynomial(self) -> Polynomial:
        n = self.rank
        return Polynomial(
            [self.face_counts[n - power] for power in range(n + 1)]
        )

    def h_polynomial(self) -> Polynomial:
        return self.f_polynomial().shifted(-1)

    def d_polynomial(self) -> Polynomial:
        n = self.rank
        return Polynomial(
            [self.face_dim_sums[n - power] for power in range(n + 1)]
        )

    def module_vertices(self) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.kind == MODULE]

    def link_f_polynomial(self, vertex_index: int) -> Polynomial:
        """Face-count polynomial of the link of a module vertex."""
        if self.vertices[vertex_index].kind != MODULE:
            raise NotAModule(f"{self.vertices[vertex_index]} is not a module vertex")
        neighbors = [
            j for j in range(len(self.vertices)) if (self.adjacency[vertex_index] >> j) & 1
        ]
        remap = {j: k for k, j in enumerate(neighbors)}
        sub_adj = []
        for j in neighbors:
            mask = 0
            for other in neighbors:
                if (self.adjacency[j] >> other) & 1:
                    mask |= 1 << remap[other]
            sub_adj.append(mask)
        counts, _, _ = _clique_census(sub_adj, [0] * len(neighbors), self.rank)
        n = self.rank - 1
        return Polynomial([counts[n - power] for power in range(n + 1)])


def _clique_census(adjacency: list[int], dims: list[int], max_size: int):
    """Count cliques by size, with dimension-weighted totals and
    maximal-clique sizes; raises if any clique exceeds max_size."""
    v_count = len(adjacency)
    counts = [0] * (max_size + 1)
    dim_sums = [0] * (max_size + 1)
    maximal = [0] * (max_size + 1)
    full = (1 << v_count) - 1

    def rec(common: int, candidates: int, size: int, dim_total: int) -> None:
        if size > max_size:
            raise ImpurityError("clique larger than the ambient rank")
        counts[size] += 1
        dim_sums[size] += dim_total
        if common == 0:
            maximal[size] += 1
        c = candidates
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c &= c - 1
            rec(common & adjacency[v], c & adjacency[v], size + 1, dim_total + dims[v])

    rec(full, full, 0, 0)
    return counts, dim_sums, maximal


_COMPLEX_RANK_CAP = 8


@lru_cache(maxsize=None)
def tau_rigid_complex(q: OrientedQuiver) -> CompatibilityComplex:
    """Build the full compatibility complex of a type A (forest) quiver.

    Vertices are all interval modules plus one shifted projective per
    quiver vertex.  Two modules are compatible when both extension spaces
    vanish; a shifted projective is compatible with a module not
    supported at its vertex, and with every other shifted projective.
    """
    if q.rank > _COMPLEX_RANK_CAP:
        raise RankTooLarge(f"complex enumeration capped at rank {_COMPLEX_RANK_CAP}")
    verts: list[ComplexVertex] = []
    for comp in q.line_components():
        k = len(comp)
        for i in range(k):
            for j in range(i, k):
                verts.append(ComplexVertex(MODULE, tuple(comp[i : j + 1])))
    for ell in q.vertices:
        verts.append(ComplexVertex(SHIFTED_PROJECTIVE, (ell,)))

    count = len(verts)
    adjacency = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            a, b = verts[i], verts[j]
            if a.kind == MODULE and b.kind == MODULE:
                ok = (
                    ext_dim(a.support, b.support, q) == 0
                    and ext_dim(b.support, a.support, q) == 0
                )
            elif a.kind == MODULE or b.kind == MODULE:
                mod, proj = (a, b) if a.kind == MODULE else (b, a)
                ok = proj.support[0] not in mod.support
            else:
                ok = True
            if ok:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    n = q.rank
    counts, dim_sums, maximal = _clique_census(adjacency, [v.dim for v in verts], n)
    if any(maximal[k] for k in range(n)):
        raise ImpurityError("complex is not pure: maximal face below full rank")
    return CompatibilityComplex(
        quiver=q,
        rank=n,
        vertices=tuple(verts),
        adjacency=tuple(adjacency),
        face_counts=tuple(counts),
        face_dim_sums=tuple(dim_sums),
        maximal_face_count=maximal[n],
    )


def poly_from_complex(c: CompatibilityComplex, kind: str) -> Polynomial:
    if kind == "f":
        return c.f_polynomial()
    if kind == "h":
        return c.h_polynomial()
    if kind == "d":
        return c.d_polynomial()
    raise UsageError(f"kind must be one of f, h, d; got {kind!r}")


def link_poly(c: CompatibilityComplex, vertex_index: int) -> Polynomial:
    return c.link_f_polynomial(vertex_index)


def disjoint_union_d_check(q1: OrientedQuiver, q2: OrientedQuiver) -> bool:
    """Product rule check: d of a disjoint union against the two factors."""
    if q1.rank + q2.rank > _COMPLEX_RANK_CAP:
        raise RankTooLarge("combined rank too large for the union check")
    union = q1.disjoint_with(q2)
    cu, c1, c2 = tau_rigid_complex(union), tau_rigid_complex(q1), tau_rigid_complex(q2)
    lhs = cu.d_polynomial()
    rhs = c1.d_polynomial() * c2.f_polynomial() + c1.f_polynomial() * c2.d_polynomial()
    return lhs == rhs


# ---------------------------------------------------------------------------
# Translate-orbit dimension sums via the Coxeter transformation
# ---------------------------------------------------------------------------


def path_cartan(q: OrientedQuiver) -> list[list[int]]:
    """Row i is the dimension vector of the projective at vertex i
    (entry j = number of paths i to j; 0 or 1 on a tree)."""
    index = {v: k for k, v in enumerate(q.vertices)}
    n = q.rank
    C = [[0] * n for _ in range(n)]
    for v in q.vertices:
        reach = {v}
        changed = True
        while changed:
            changed = False
            for a, b in q.arrows:
                if a in reach and b not in reach:
                    reach.add(b)
                    changed = True
        for w in reach:
            C[index[v]][index[w]] = 1
    return C


def _coxeter_inverse(q: OrientedQuiver) -> list[list[int]]:
    """Matrix of the inverse translate on dimension (row) vectors.

    The translate acts as dim tau M = dim M . Phi with Phi = -C^{-1} C^T;
    the inverse transformation is its matrix inverse.
    """
    C = path_cartan(q)
    c_inv = integer_inverse(C)
    c_t = [list(row) for row in zip(*C)]
    phi = [[-x for x in row] for row in mat_mul(c_inv, c_t)]
    return integer_inverse(phi)


_convention_checked = False


def _check_convention() -> None:
    global _convention_checked
    if _convention_checked:
        return
    probe = OrientedQuiver.line(3)
    for ell in (1, 2, 3):
        expected = ell * (3 - ell + 1)
        if _tau_orbit_total(probe, ell) != expected:
            raise ConventionError(
                "Coxeter transform convention failed the rank 3 self-check"
            )
    _convention_checked = True


def tau_orbit_vectors(q: OrientedQuiver, ell: int) -> list[tuple[int, ...]]:
    """Dimension vectors of the translate orbit of the projective at ell,
    in quiver vertex order, until the orbit leaves the positive orthant."""
    if ell not in q.vertices:
        raise UsageError(f"vertex {ell} not in quiver")
    index = {v: k for k, v in enumerate(q.vertices)}
    C = path_cartan(q)
    phi_inv = _coxeter_inverse(q)
    v = list(C[index[ell]])
    out = []
    while all(x >= 0 for x in v) and any(x > 0 for x in v):
        out.append(tuple(v))
        v = row_times_mat(v, phi_inv)
    if any(x > 0 for x in v):
        raise ConventionError("orbit left the positive orthant without turning negative")
    return out


def _tau_orbit_total(q: OrientedQuiver, ell: int) -> int:
    return sum(sum(vec) for vec in tau_orbit_vectors(q, ell))


def tau_orbit_dim(q: OrientedQuiver, ell: int) -> int:
    """Total dimension of the translate orbit of the projective at a vertex.

    Equals the dimension of the corresponding projective over the
    doubled-quiver algebra, independently of the orientation.
    """
    _check_convention()
    return _tau_orbit_total(q, ell)


def tau_orbit_dims_all(d: DynkinDiagram) -> dict[int, int]:
    """tau_orbit_dim for every vertex of a diagram, default orientation."""
    q = OrientedQuiver.from_diagram(d)
    return {ell: tau_orbit_dim(q, ell) for ell in d.vertices}

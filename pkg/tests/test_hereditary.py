from math import comb

import pytest

from taupoly.dynkin import DynkinDiagram
from taupoly.errors import NotAModule, RankTooLarge, UsageError
from taupoly.hereditary import (
    MODULE,
    OrientedQuiver,
    disjoint_union_d_check,
    ext_dim,
    hom_dim,
    link_poly,
    path_cartan,
    poly_from_complex,
    projective_support,
    tau_orbit_dim,
    tau_orbit_dims_all,
    tau_orbit_vectors,
    tau_rigid_complex,
)
from taupoly.polynomials import ONE, Polynomial
from taupoly.weyl import narayana_poly


def catalan(m):
    return comb(2 * m, m) // (m + 1)


def all_orientations(n):
    for bits in range(1 << (n - 1)):
        yield "".join("+" if (bits >> i) & 1 else "-" for i in range(n - 1))


def test_worked_example_rank_three():
    complex_ = tau_rigid_complex(OrientedQuiver.line(3))
    assert poly_from_complex(complex_, "f") == Polynomial([14, 21, 9, 1])
    assert poly_from_complex(complex_, "h") == Polynomial([1, 6, 6, 1])
    assert poly_from_complex(complex_, "d") == Polynomial([46, 46, 10])
    assert complex_.maximal_face_count == 14
    assert len(complex_.vertices) == 3 * 4 // 2 + 3
    with pytest.raises(UsageError):
        poly_from_complex(complex_, "g")


def test_rank_one():
    complex_ = tau_rigid_complex(OrientedQuiver.line(1))
    assert complex_.f_polynomial() == Polynomial([2, 1])
    assert complex_.d_polynomial() == ONE
    # the two vertices are incompatible
    assert complex_.maximal_face_count == 2


def test_rank_two_both_orientations():
    for orientation in ("+", "-"):
        complex_ = tau_rigid_complex(OrientedQuiver.line(2, orientation))
        assert complex_.d_polynomial() == Polynomial([8, 4])


def test_hom_directions_fixed_by_projectives():
    q = OrientedQuiver.line(3)  # 1 -> 2 -> 3
    # the smaller projective embeds in the bigger one; the quotient
    # direction vanishes in this representation convention
    assert hom_dim((2, 3), (1, 2, 3), q) == 1
    assert hom_dim((1, 2, 3), (2, 3), q) == 0
    assert hom_dim((1,), (3,), q) == 0
    # morphisms out of a projective see exactly the support vertex
    for ell in (1, 2, 3):
        p = projective_support(q, ell)
        for support in [(1,), (2,), (3,), (1, 2), (2, 3), (1, 2, 3)]:
            assert hom_dim(p, support, q) == (1 if ell in support else 0)


def test_interval_modules_are_bricks():
    for orientation in all_orientations(4):
        q = OrientedQuiver.line(4, orientation)
        for comp in q.line_components():
            for i in range(len(comp)):
                for j in range(i, len(comp)):
                    support = tuple(comp[i : j + 1])
                    assert hom_dim(support, support, q) == 1
                    assert ext_dim(support, support, q) == 0


def test_ext_on_the_two_vertex_quiver():
    q = OrientedQuiver.line(2, "+")  # 1 -> 2
    assert ext_dim((1,), (2,), q) == 1  # the nonsplit extension is [1,2]
    assert ext_dim((2,), (1,), q) == 0
    far = OrientedQuiver.line(4, "+++")
    assert ext_dim((1,), (3, 4), far) == 0
    assert ext_dim((3, 4), (1,), far) == 0


def test_orientation_independence_matches_closed_forms():
    from taupoly import formulas
    from taupoly.formulas import PATH, AlgebraSpec

    for n in range(1, 5):
        spec = AlgebraSpec(PATH, DynkinDiagram("A", n))
        expected = {
            "d": formulas.d_polynomial(spec),
            "f": formulas.f_polynomial(spec),
            "h": formulas.h_polynomial(spec),
        }
        for orientation in all_orientations(n):
            complex_ = tau_rigid_complex(OrientedQuiver.line(n, orientation))
            for kind, want in expected.items():
                assert poly_from_complex(complex_, kind) == want


def test_purity_and_counts():
    for n in range(1, 6):
        complex_ = tau_rigid_complex(OrientedQuiver.line(n))
        assert complex_.maximal_face_count == catalan(n + 1)
        assert len(complex_.vertices) == n * (n + 1) // 2 + n
        # face polynomial evaluates to the total face count at 1
        assert complex_.f_polynomial()(1) == sum(complex_.face_counts)


def test_h_polynomial_is_narayana():
    for n in range(1, 6):
        complex_ = tau_rigid_complex(OrientedQuiver.line(n))
        assert complex_.h_polynomial() == narayana_poly(DynkinDiagram("A", n))


def test_links():
    complex_ = tau_rigid_complex(OrientedQuiver.line(3))
    by_support = {
        v.support: i for i, v in enumerate(complex_.vertices) if v.kind == MODULE
    }
    # link of the big projective is the rank-2 complex of the quotient quiver
    link = link_poly(complex_, by_support[(1, 2, 3)])
    assert link == tau_rigid_complex(OrientedQuiver.line(2)).f_polynomial()
    # dimension-weighted link decomposition
    total = Polynomial()
    for support, idx in by_support.items():
        total = total + len(support) * link_poly(complex_, idx)
    assert total == complex_.d_polynomial()
    shifted_index = next(
        i for i, v in enumerate(complex_.vertices) if v.kind != MODULE
    )
    with pytest.raises(NotAModule):
        link_poly(complex_, shifted_index)


def test_link_in_rank_one():
    complex_ = tau_rigid_complex(OrientedQuiver.line(1))
    (module_index,) = complex_.module_vertices()
    assert link_poly(complex_, module_index) == ONE


def test_disjoint_union_product_rule():
    q1 = OrientedQuiver.line(1)
    q2 = OrientedQuiver.line(2)
    assert disjoint_union_d_check(q1, q1)
    assert disjoint_union_d_check(q1, q2)
    assert disjoint_union_d_check(q2, q2)
    union = q1.disjoint_with(q1)
    assert tau_rigid_complex(union).d_polynomial() == Polynomial([4, 2])


def test_complex_rank_cap():
    with pytest.raises(RankTooLarge):
        tau_rigid_complex(OrientedQuiver.line(9))


def test_path_cartan_counts_paths():
    q = OrientedQuiver.line(3, "+-")  # 1 -> 2 <- 3
    C = path_cartan(q)
    assert C == [[1, 1, 0], [0, 1, 0], [0, 1, 1]]


def test_tau_orbit_type_a():
    for orientation in ("+++", "-+-", "--+"):
        q = OrientedQuiver.line(4, orientation)
        assert [tau_orbit_dim(q, ell) for ell in (1, 2, 3, 4)] == [4, 6, 6, 4]


def test_tau_orbit_type_d_and_e():
    d4 = tau_orbit_dims_all(DynkinDiagram("D", 4))
    assert d4 == {-1: 6, 1: 6, 2: 10, 3: 6}
    e6 = tau_orbit_dims_all(DynkinDiagram("E", 6))
    assert tuple(e6.values()) == (16, 30, 42, 22, 30, 16)


def test_tau_orbit_enumerates_each_root_once():
    for diagram in (
        DynkinDiagram("A", 5),
        DynkinDiagram("D", 5),
        DynkinDiagram("E", 6),
        DynkinDiagram("E", 8),
    ):
        q = OrientedQuiver.from_diagram(diagram)
        seen = []
        for ell in diagram.vertices:
            seen.extend(tau_orbit_vectors(q, ell))
        assert len(seen) == len(set(seen)) == diagram.positive_root_count()
        total = sum(sum(v) for v in seen)
        if diagram.family == "A":
            n = diagram.rank
            assert total == n * (n + 1) * (n + 2) // 6
        if diagram.family == "D":
            n = diagram.rank
            assert total == n * (n - 1) * (2 * n - 1) // 3


def test_tau_orbit_orientation_independent_totals():
    diagram = DynkinDiagram("D", 5)
    totals = []
    for orientation in ("++++", "-+-+", "+--+"):
        q = OrientedQuiver.from_diagram(diagram, orientation)
        totals.append(sorted(tau_orbit_dim(q, v) for v in diagram.vertices))
    assert totals[0] == totals[1] == totals[2]

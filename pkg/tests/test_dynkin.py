import pytest

from taupoly.dynkin import (
    DiagramUnion,
    DynkinDiagram,
    delete_vertex,
    parse_diagram,
    parse_union,
    rank,
)
from taupoly.errors import NotAVertex, UsageError


def u(text):
    return parse_union(text)


def test_deletion_lists_for_e_family():
    # deleting vertex l of E_n, for l = 1..n
    expected_e6 = ["D5", "A1xA4", "A1xA2xA2", "A5", "A1xA4", "D5"]
    expected_e7 = ["D6", "A1xA5", "A1xA2xA3", "A6", "A2xA4", "A1xD5", "E6"]
    expected_e8 = ["D7", "A1xA6", "A1xA2xA4", "A7", "A3xA4", "A2xD5", "A1xE6", "E7"]
    for n, expected in ((6, expected_e6), (7, expected_e7), (8, expected_e8)):
        diagram = DynkinDiagram("E", n)
        got = [delete_vertex(diagram, ell) for ell in range(1, n + 1)]
        assert got == [u(text) for text in expected]


def test_deletion_type_a():
    a5 = DynkinDiagram("A", 5)
    assert delete_vertex(a5, 1) == u("A4")
    assert delete_vertex(a5, 3) == u("A2xA2")
    assert delete_vertex(DynkinDiagram("A", 1), 1) == DiagramUnion()


def test_deletion_type_d():
    d5 = DynkinDiagram("D", 5)
    assert delete_vertex(d5, 1) == u("A4")
    assert delete_vertex(d5, -1) == u("A4")
    # deleting the fork vertex isolates both short arms
    assert delete_vertex(d5, 2) == u("A1xA1xA2")
    assert rank(delete_vertex(d5, 2)) == 4
    # rank 3 remnant comes back as its path shape
    assert delete_vertex(d5, 3) == u("A3xA1")
    assert delete_vertex(d5, 4) == u("D4")
    d6 = DynkinDiagram("D", 6)
    assert delete_vertex(d6, 4) == u("D4xA1")
    assert delete_vertex(d6, 5) == u("D5")


def test_deletion_errors():
    with pytest.raises(NotAVertex):
        delete_vertex(DynkinDiagram("A", 3), 4)
    with pytest.raises(NotAVertex):
        delete_vertex(DynkinDiagram("D", 4), 4)  # D4 vertices are -1,1,2,3


def test_rank_of_unions():
    assert rank(DiagramUnion()) == 0
    assert rank(u("A2xA1xA2")) == 5
    assert rank(delete_vertex(DynkinDiagram("E", 6), 3)) == 5


def test_vertices_and_edges():
    a4 = DynkinDiagram("A", 4)
    assert a4.vertices == (1, 2, 3, 4)
    assert a4.edges == ((1, 2), (2, 3), (3, 4))
    d4 = DynkinDiagram("D", 4)
    assert set(d4.vertices) == {-1, 1, 2, 3}
    assert set(d4.edges) == {(1, 2), (-1, 2), (2, 3)}
    e6 = DynkinDiagram("E", 6)
    assert set(e6.edges) == {(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)}
    e8 = DynkinDiagram("E", 8)
    assert len(e8.edges) == 7


def test_group_orders_and_root_counts():
    assert DynkinDiagram("A", 4).group_order() == 120
    assert DynkinDiagram("D", 5).group_order() == 1920
    assert DynkinDiagram("E", 6).group_order() == 51840
    assert DynkinDiagram("E", 7).group_order() == 2903040
    assert DynkinDiagram("E", 8).group_order() == 696729600
    assert DynkinDiagram("A", 4).positive_root_count() == 10
    assert DynkinDiagram("D", 6).positive_root_count() == 30
    assert [DynkinDiagram("E", n).positive_root_count() for n in (6, 7, 8)] == [36, 63, 120]


def test_coxeter_numbers():
    assert DynkinDiagram("A", 5).coxeter_number() == 6
    assert DynkinDiagram("D", 4).coxeter_number() == 6
    assert DynkinDiagram("E", 8).coxeter_number() == 30


def test_parse():
    assert parse_diagram("a5") == DynkinDiagram("A", 5)
    assert parse_diagram(" E7 ") == DynkinDiagram("E", 7)
    assert parse_union("A2xA1xA2").rank == 5
    assert parse_union("d4*a1") == DiagramUnion((DynkinDiagram("D", 4), DynkinDiagram("A", 1)))
    assert parse_union("empty") == DiagramUnion()
    for bad in ("X9", "A0", "D3", "E5", "E9", "5A", ""):
        with pytest.raises(UsageError):
            parse_diagram(bad)


def test_union_is_order_insensitive():
    assert u("A1xD4") == u("D4xA1")
    assert hash(u("A1xD4")) == hash(u("D4xA1"))


def test_every_deletion_classifies():
    diagrams = (
        [DynkinDiagram("A", n) for n in range(1, 10)]
        + [DynkinDiagram("D", n) for n in range(4, 10)]
        + [DynkinDiagram("E", n) for n in (6, 7, 8)]
    )
    for diagram in diagrams:
        for v in diagram.vertices:
            union = delete_vertex(diagram, v)
            assert union.rank == diagram.rank - 1

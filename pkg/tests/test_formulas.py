import pytest

from taupoly.dynkin import DynkinDiagram, delete_vertex
from taupoly.errors import FeatureDisabled, RankOutOfRange, UsageError
from taupoly.formulas import (
    PATH,
    PREPROJECTIVE,
    AlgebraSpec,
    aggregate_dims,
    aggregate_totals_closed,
    catalan_count,
    d_polynomial,
    expected_aggregates,
    f_polynomial,
    golden_table,
    h_polynomial,
    orbit_dim_total,
    reproduce_table,
)
from taupoly.polynomials import Polynomial
from taupoly.tables import E_PPA_SUBMODULE_DIM_TOTALS, GROUP_ORDER_E


def spec(family, dfam, n):
    return AlgebraSpec(family, DynkinDiagram(dfam, n))


def test_worked_examples():
    assert d_polynomial(spec(PREPROJECTIVE, "A", 3)) == Polynomial([120, 120, 24])
    assert d_polynomial(spec(PATH, "A", 3)) == Polynomial([46, 46, 10])
    assert h_polynomial(spec(PATH, "A", 3)) == Polynomial([1, 6, 6, 1])
    assert h_polynomial(spec(PREPROJECTIVE, "A", 3)) == Polynomial([1, 11, 11, 1])
    assert h_polynomial(spec(PREPROJECTIVE, "A", 1)) == Polynomial([1, 1])
    assert f_polynomial(spec(PREPROJECTIVE, "A", 3)) == Polynomial([24, 36, 14, 1])
    assert f_polynomial(spec(PATH, "A", 3)) == Polynomial([14, 21, 9, 1])
    assert f_polynomial(spec(PATH, "A", 1)) == Polynomial([2, 1])
    assert d_polynomial(spec(PATH, "A", 1)) == Polynomial([1])


def test_path_d4_row():
    assert d_polynomial(spec(PATH, "D", 4)) == Polynomial([332, 498, 222, 28])


def test_degree_is_rank_minus_one():
    for family in (PREPROJECTIVE, PATH):
        for dfam, n in (("A", 5), ("D", 5), ("A", 1)):
            assert d_polynomial(spec(family, dfam, n)).degree == n - 1


def test_closed_tables_match_golden():
    # tables whose inputs are entirely closed-form (no big enumerations)
    for k in (1, 2, 4):
        assert reproduce_table(k) == golden_table(k)


def test_path_e6_row():
    rows = {
        6: tuple(
            d_polynomial(spec(PATH, "E", 6)).coefficient(5 - j) for j in range(6)
        )
    }
    assert rows[6] == golden_table(6)[6]


def test_e_table_identities_without_enumeration():
    # the embedded per-vertex totals re-derive both end columns of the
    # E-family grid through two different identities
    for rank in (6, 7, 8):
        diagram = DynkinDiagram("E", rank)
        dims = E_PPA_SUBMODULE_DIM_TOTALS[rank]
        golden = golden_table(3)[rank]
        assert sum(dims) == golden[0]
        weighted = 0
        for ell in diagram.vertices:
            union = delete_vertex(diagram, ell)
            order = 1
            for comp in union:
                order *= comp.group_order()
            weighted += dims[ell - 1] * order
        assert weighted == golden[rank - 1]


def test_aggregates_worked_examples():
    assert aggregate_dims(spec(PREPROJECTIVE, "A", 3)) == (24, 120)
    assert aggregate_dims(spec(PATH, "A", 3)) == (10, 46)
    assert aggregate_dims(spec(PATH, "D", 4)) == (28, 332)
    assert aggregate_totals_closed(spec(PATH, "D", 4)) == (28, 332)


def test_closed_aggregates_match_polynomial_route():
    for family, dfam, ranks in (
        (PREPROJECTIVE, "A", range(1, 8)),
        (PATH, "A", range(1, 8)),
        (PREPROJECTIVE, "D", range(4, 8)),
        (PATH, "D", range(4, 7)),
    ):
        for n in ranks:
            s = spec(family, dfam, n)
            assert aggregate_totals_closed(s) == aggregate_dims(s)
            expected = expected_aggregates(s)
            assert expected == aggregate_totals_closed(s)


def test_expected_aggregates_none_for_e():
    assert expected_aggregates(spec(PATH, "E", 6)) is None


def test_orbit_dim_totals():
    assert orbit_dim_total(spec(PREPROJECTIVE, "A", 4), 2) == 30
    assert orbit_dim_total(spec(PREPROJECTIVE, "D", 4), 2) == 120
    assert orbit_dim_total(spec(PREPROJECTIVE, "E", 6), 3) == 15120
    assert orbit_dim_total(spec(PATH, "A", 4), 2) == 6
    assert orbit_dim_total(spec(PATH, "D", 4), 2) == 10
    assert orbit_dim_total(spec(PATH, "E", 6), 3) == 42


def test_catalan_count():
    assert catalan_count(DynkinDiagram("A", 3)) == 14
    assert catalan_count(DynkinDiagram("D", 4)) == 50
    assert catalan_count(DynkinDiagram("E", 7)) == 4160


def test_rank_bounds_and_usage():
    with pytest.raises(RankOutOfRange):
        spec(PREPROJECTIVE, "A", 12)
    with pytest.raises(RankOutOfRange):
        spec(PATH, "D", 12)
    with pytest.raises(UsageError):
        AlgebraSpec("pth", DynkinDiagram("A", 2))
    with pytest.raises(UsageError):
        reproduce_table(7)


def test_e8_h_polynomial_is_gated():
    with pytest.raises(FeatureDisabled):
        h_polynomial(spec(PATH, "E", 8))
    with pytest.raises(FeatureDisabled):
        h_polynomial(spec(PREPROJECTIVE, "E", 8))


def test_group_order_table():
    for rank, order in GROUP_ORDER_E.items():
        assert DynkinDiagram("E", rank).group_order() == order

import pytest

from etgrs.algebra.matrix import as_matrix, rank
from etgrs.codes.distance import (
    AdaptiveDistance,
    BudgetExceededError,
    ColumnDependencyDistance,
    EnumerationDistance,
    column_distance,
    distance,
    dual_distance,
    min_distance,
    smallest_dependent_columns,
)
from etgrs.codes.linear import EmptyCodeError, LinearCode, grs_code


@pytest.mark.parametrize(
    "method", [EnumerationDistance, ColumnDependencyDistance], ids=["enumeration", "columns"]
)
@pytest.mark.parametrize("code_name", ["rs_5_2", "grs_7_3"])
def test_grs_codes_are_mds(request, method, code_name):
    code = request.getfixturevalue(code_name)
    assert method().compute(code) == code.length - code.dimension + 1


def test_strategies_agree_on_random_codes(gf13, rng):
    for _ in range(5):
        generator = gf13(rng.integers(0, 13, size=(3, 6)))
        if rank(generator) < 3:
            continue
        code = LinearCode(generator)
        assert min_distance(code) == column_distance(code)


def test_small_chunks_give_the_same_answer(grs_7_3):
    assert EnumerationDistance(chunk_size=7).compute(grs_7_3) == 5


def test_known_non_mds_code(gf13):
    # unit rows give weight-one codewords; the last column repeats the first
    code = LinearCode(as_matrix(gf13, [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]))
    assert min_distance(code) == 1
    assert column_distance(code) == 1
    assert dual_distance(code) == 2


def test_budget_is_enforced(rs_5_2):
    with pytest.raises(BudgetExceededError, match="budget 10"):
        EnumerationDistance(budget=10).compute(rs_5_2)
    with pytest.raises(BudgetExceededError):
        dual_distance(rs_5_2, budget=10)


def test_budget_from_environment(rs_5_2, monkeypatch):
    monkeypatch.setenv("ETGRS_BUDGET", "100")
    with pytest.raises(BudgetExceededError):
        min_distance(rs_5_2)


def test_adaptive_prefers_enumeration(gf13, rs_5_2):
    adaptive = AdaptiveDistance()
    assert adaptive.select_strategy(rs_5_2).name == "enumeration"
    wide = grs_code(gf13([1, 2, 3, 4, 5, 6]), gf13([1] * 6), 5)
    assert adaptive.select_strategy(wide).name == "enumeration"
    assert distance(wide) == (2, "enumeration")
    assert distance(rs_5_2) == (4, "enumeration")


def test_adaptive_falls_back_to_columns(gf13):
    # 13^5 codewords against 64 * (6 + 15) rank computations
    wide = grs_code(gf13([1, 2, 3, 4, 5, 6]), gf13([1] * 6), 5)
    assert AdaptiveDistance(budget=100_000).select_strategy(wide).name == "columns"
    assert distance(wide, budget=100_000) == (2, "columns")
    with pytest.raises(BudgetExceededError, match="columns distance"):
        distance(wide, budget=10)


def test_zero_code(gf13):
    zero = LinearCode(gf13.gf.Zeros((0, 4)))
    with pytest.raises(EmptyCodeError):
        min_distance(zero)
    assert dual_distance(zero) == 1


def test_dual_distance(rs_5_2, grs_7_3, gf13):
    assert dual_distance(rs_5_2) == 3
    assert dual_distance(grs_7_3) == 4
    with pytest.raises(EmptyCodeError):
        dual_distance(LinearCode(as_matrix(gf13, [[1, 0], [0, 1]])))


def test_smallest_dependent_columns(gf13):
    assert smallest_dependent_columns(as_matrix(gf13, [[1, 0, 2], [0, 0, 5]])) == 1
    assert smallest_dependent_columns(as_matrix(gf13, [[1, 2, 0], [1, 2, 1]])) == 2
    assert smallest_dependent_columns(as_matrix(gf13, [[1, 0], [0, 1]])) is None
    assert smallest_dependent_columns(as_matrix(gf13, [[1, 0, 1], [0, 1, 1]]), limit=2) is None

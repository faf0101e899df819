"""Census operations: exact counts, oracles, bounds, table serialization.

``leibniz_det`` is the independent check for the fraction-free determinant:
a direct sum over permutations, hopeless beyond 6x6 and therefore obviously
correct.
"""

import itertools

import pytest

from treecensus import (
    BoundsReport,
    BudgetExceeded,
    DomainError,
    census_table,
    count_partitions,
    exact_classes,
    kirchhoff_count,
    lower_bound,
    oracle_edge_subsets,
    scoins,
    upper_bound,
    upper_bound_lemma25,
    verify_corollaries,
)
from treecensus.census import _bareiss_det, to_csv, to_json
from treecensus import code_at, decode


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def test_bareiss_against_leibniz():
    import random

    rng = random.Random(11)
    for n in range(1, 6):
        for _ in range(40):
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            expected = leibniz_det(m)
            assert _bareiss_det([row[:] for row in m]) == expected


def test_bareiss_handles_zero_pivots():
    m = [[0, 1], [1, 0]]
    assert _bareiss_det([row[:] for row in m]) == -1
    assert _bareiss_det([[0, 0], [0, 0]]) == 0
    assert _bareiss_det([]) == 1


def test_scoins_values():
    assert scoins(2, 2) == 4
    assert scoins(2, 3) == 12
    assert scoins(3, 3) == 81
    for b in range(1, 9):
        assert scoins(1, b) == 1


def test_kirchhoff_small_values():
    assert kirchhoff_count(2, 2) == 4
    assert kirchhoff_count(2, 3) == 12
    assert kirchhoff_count(3, 3) == 81
    assert kirchhoff_count(1, 1) == 1


def test_kirchhoff_matches_scoins():
    for a in range(1, 7):
        for b in range(a, 11 - a):
            assert kirchhoff_count(a, b) == scoins(a, b), (a, b)


def test_kirchhoff_size_limit():
    with pytest.raises(BudgetExceeded):
        kirchhoff_count(40, 40, size_limit=64)
    assert kirchhoff_count(3, 4, size_limit=7) == scoins(3, 4)


def test_exact_classes_figures():
    assert exact_classes(2, 2)[0] == 1
    assert exact_classes(2, 3)[0] == 2
    assert exact_classes(3, 3)[0] == 3


def test_exact_classes_representatives_are_minimal_codes():
    for a, b in [(2, 3), (3, 3), (2, 4), (3, 4)]:
        count, reps = exact_classes(a, b)
        assert len(reps) == count
        # Recompute first occurrences directly.
        from treecensus import canonical_form, enumerate_labeled

        first = {}
        for i, tree in enumerate(enumerate_labeled(a, b)):
            first.setdefault(canonical_form(tree), i)
        expected = [decode(code_at(a, b, i), a, b)
                    for _, i in sorted(first.items())]
        assert reps == expected


def test_exact_classes_jobs_invariance():
    for jobs in (1, 2, 5):
        assert exact_classes(4, 5, jobs=jobs) == exact_classes(4, 5)


def test_exact_classes_budget():
    with pytest.raises(BudgetExceeded) as info:
        exact_classes(4, 5, budget=10)
    assert info.value.required == 32000
    assert info.value.budget == 10


def test_exact_classes_rejects_a_greater_than_b():
    with pytest.raises(ValueError):
        exact_classes(3, 2)


def test_exact_classes_trivial_cells():
    assert exact_classes(1, 1)[0] == 1
    assert exact_classes(1, 7)[0] == 1


def test_oracle_edge_subsets_values():
    assert oracle_edge_subsets(2, 2) == 1
    assert oracle_edge_subsets(2, 3) == 2
    assert oracle_edge_subsets(2, 4) == 2
    assert oracle_edge_subsets(3, 3) == 3


def test_oracle_agreement_up_to_eight():
    for a in range(2, 5):
        for b in range(a, 9 - a):
            assert oracle_edge_subsets(a, b) == exact_classes(a, b)[0]


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        oracle_edge_subsets(5, 6, budget=100)


def test_lower_bound_values():
    assert lower_bound(2, 3) == 2
    assert lower_bound(2, 2) == 1
    assert lower_bound(3, 3) == 3
    assert lower_bound(5, 5) == 15  # r = P_5(9) = 5
    with pytest.raises(ValueError):
        lower_bound(1, 3)


def test_upper_bound_values():
    assert upper_bound(2, 3) == 8
    assert upper_bound(2, 4) == 16
    assert upper_bound(3, 4) == 243
    with pytest.raises(DomainError):
        upper_bound(3, 3)
    with pytest.raises(ValueError):
        upper_bound(3, 2)


def test_upper_bound_lemma25_values():
    assert upper_bound_lemma25(2, 3, 1) == 2
    assert upper_bound_lemma25(2, 4, 1) == 4
    assert upper_bound_lemma25(3, 5, 3) == 27
    with pytest.raises(ValueError):
        upper_bound_lemma25(3, 3, 3)


def test_verify_corollaries():
    assert verify_corollaries(2, 3) == (True, None)
    assert verify_corollaries(2, 2) == (True, True)
    first, second = verify_corollaries(5, 5)
    assert first and second
    # And the raw numbers behind the (5,5) case.
    assert 5 ** 8 >= count_partitions(9, 5) ** 2
    assert 5 ** 8 >= 5 * 6 // 2


def test_corollaries_hold_everywhere_up_to_thirty():
    for a in range(2, 31):
        for b in range(a, 31):
            first, second = verify_corollaries(a, b)
            assert first
            assert second is None or second


def test_census_table_small():
    rows = census_table(5)
    assert [(r.a, r.b) for r in rows] == [(2, 2), (2, 3)]
    r22, r23 = rows
    assert r22.exact == 1 and r22.lower == 1 and r22.scoins == 4
    assert r22.upper_thm26 is None and r22.upper_lemma25 is None
    assert r23.exact == 2 and r23.lower == 2
    assert r23.upper_thm26 == 8 and r23.upper_lemma25 == 2
    assert all(r.sandwich_ok() for r in rows)


def test_census_table_tightness_at_three_three():
    rows = census_table(6)
    row33 = next(r for r in rows if (r.a, r.b) == (3, 3))
    assert row33.exact == row33.lower == 3


def test_census_table_budget_leaves_exact_absent():
    rows = census_table(10, budget=100)
    by_cell = {(r.a, r.b): r for r in rows}
    assert by_cell[(2, 2)].exact == 1
    assert by_cell[(2, 3)].exact == 2
    assert by_cell[(2, 4)].exact == 2
    assert by_cell[(4, 5)].exact is None  # 32000 > 100
    assert by_cell[(4, 5)].upper_lemma25 is None  # needs I_{4,4}, also over
    assert all(r.sandwich_ok() for r in rows)


def test_census_table_rejects_small_max_n():
    with pytest.raises(ValueError):
        census_table(3)


def test_lower_bound_never_exceeds_thm26_upper():
    rows = census_table(12, budget=0)
    for r in rows:
        if r.upper_thm26 is not None:
            assert r.lower <= r.upper_thm26


def test_csv_golden():
    rows = census_table(5)
    assert to_csv(rows) == (
        "a,b,P_a,P_b,lower,upper_thm26,upper_lemma25,scoins,exact,tight\n"
        "2,2,1,1,1,,,4,1,1\n"
        "2,3,2,1,2,8,2,12,2,1\n"
    )


def test_json_mirrors_csv_fields():
    import json

    rows = census_table(5)
    data = json.loads(to_json(rows))
    assert data[0] == {
        "a": 2, "b": 2, "P_a": 1, "P_b": 1, "lower": 1,
        "upper_thm26": None, "upper_lemma25": None, "scoins": 4,
        "exact": 1, "tight": True,
    }
    assert data[1]["upper_thm26"] == 8
    assert data[1]["tight"] is True


def test_bounds_report_sandwich_detects_violations():
    bad = BoundsReport(a=2, b=3, lower=5, upper_thm26=8, upper_lemma25=None,
                       scoins=12, exact=2, corollary_231_holds=True,
                       corollary_241_holds=None)
    assert not bad.sandwich_ok()
    absent = BoundsReport(a=2, b=3, lower=2, upper_thm26=8,
                          upper_lemma25=None, scoins=12, exact=None,
                          corollary_231_holds=True, corollary_241_holds=None)
    assert absent.sandwich_ok()


def test_nontriviality_of_thm26_bound():
    for a in range(2, 13):
        for b in range(a + 1, 13):
            assert upper_bound(a, b) < scoins(a, b)

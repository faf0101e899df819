"""Acceptance suite: the ten exit criteria, one test per criterion.

Everything here is exact arithmetic or exhaustive enumeration; there are no
tolerance bands anywhere.  Each test prints a single PASS line on success
(visible with ``pytest -s`` or in captured output); a failure is an ordinary
assertion failure.  Stated wall-clock limits are asserted where the
criterion names one.

Run with::

    pytest tests/test_acceptance.py -v
"""

import subprocess
import sys
import time

import pytest

from treecensus import (
    canonical_form,
    census_table,
    construct_tree,
    degrees,
    enumerate_labeled,
    enumerate_partitions,
    exact_classes,
    kirchhoff_count,
    lower_bound,
    oracle_edge_subsets,
    realize_all_pairs,
    scoins,
    upper_bound,
    verify_corollaries,
)
from treecensus import _kernel


def report(number: int, text: str) -> None:
    print(f"PASS criterion {number}: {text}")


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # Compile the enumeration kernels once so timed criteria measure the
    # algorithms, not the JIT.
    _kernel.census_range(2, 3, 0, 12)
    list(enumerate_labeled(2, 3))


def cells(max_order, lo=2):
    for a in range(lo, max_order):
        for b in range(a, max_order - a + 1):
            yield a, b


def test_criterion_1_figure_fixtures():
    start = time.perf_counter()
    got22 = exact_classes(2, 2)[0]
    got23 = exact_classes(2, 3)[0]
    elapsed = time.perf_counter() - start
    assert got22 == 1
    assert got23 == 2
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    report(1, f"classes(2,2) = 1 and classes(2,3) = 2 in {elapsed:.3f}s")


def test_criterion_2_scoins_triangle():
    start = time.perf_counter()
    checked = 0
    trees = 0
    for a, b in cells(12):
        produced = sum(1 for _ in enumerate_labeled(a, b))
        closed = scoins(a, b)
        determinant = kirchhoff_count(a, b)
        assert produced == closed == determinant, (a, b)
        checked += 1
        trees += produced
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0, f"took {elapsed:.1f}s"
    report(2, f"{trees} trees across {checked} cells (a+b <= 12) match the "
              f"closed form and the determinant in {elapsed:.1f}s")


def test_criterion_3_codec_bijectivity():
    from treecensus import code_at, code_space_size, decode, encode

    trees = 0
    for n in range(3, 10):
        for a in range(1, n // 2 + 1):
            b = n - a
            for index in range(code_space_size(a, b)):
                code = code_at(a, b, index)
                tree = decode(code, a, b)
                assert encode(tree) == code, (a, b, index)
                trees += 1
    report(3, f"decode/encode roundtrips on {trees} codes with a+b <= 9, "
              f"zero failures")


def test_criterion_4_construction_fidelity():
    start = time.perf_counter()
    pairs = 0
    for a in range(2, 10):
        for b in range(2, 12 - a):
            m = a + b - 1
            for s in enumerate_partitions(m, a):
                for t in enumerate_partitions(m, b):
                    tree = construct_tree(s, t)
                    da, db = degrees(tree)
                    assert da == s and db == t, (s.parts, t.parts)
                    pairs += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report(4, f"{pairs} ordered partition pairs with a+b <= 11 realized "
              f"exactly in {elapsed:.1f}s")


def test_criterion_5_witness_distinctness():
    pairs = 0
    for a in range(2, 10):
        for b in range(a + 1, 12 - a):
            seen = set()
            for s, t, tree in realize_all_pairs(a, b):
                fp = canonical_form(tree)
                assert fp not in seen, (a, b, s.parts, t.parts)
                seen.add(fp)
                pairs += 1
    report(5, f"{pairs} ordered pairs with a < b, a+b <= 11 gave pairwise "
              f"distinct classes, zero collisions")


def test_criterion_6_bound_sandwich():
    rows = census_table(12)
    populated = 0
    for r in rows:
        assert r.exact is not None, f"({r.a},{r.b}) exceeded default budget"
        assert r.lower <= r.exact <= r.scoins, (r.a, r.b)
        if r.upper_thm26 is not None:
            assert r.exact <= r.upper_thm26, (r.a, r.b)
        if r.upper_lemma25 is not None:
            assert r.exact <= r.upper_lemma25, (r.a, r.b)
        populated += 1
    row33 = next(r for r in rows if (r.a, r.b) == (3, 3))
    assert row33.exact == lower_bound(3, 3) == 3
    report(6, f"lower <= exact <= every upper bound on all {populated} "
              f"cells with a+b <= 12; the (3,3) bound is tight at 3")


def test_criterion_7_oracle_agreement():
    checked = 0
    for a, b in cells(8):
        via_codes = exact_classes(a, b)[0]
        via_subsets = oracle_edge_subsets(a, b)
        assert via_codes == via_subsets, (a, b)
        checked += 1
    report(7, f"code-space census equals edge-subset census on all "
              f"{checked} cells with a+b <= 8")


def test_criterion_8_corollary_arithmetic():
    start = time.perf_counter()
    for a in range(2, 31):
        for b in range(a, 31):
            first, second = verify_corollaries(a, b)
            assert first, (a, b)
            if a == b:
                assert second, (a, b)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    report(8, f"both corollary inequalities hold for 2 <= a <= b <= 30 "
              f"in {elapsed:.2f}s")


def test_criterion_9_nontriviality():
    for a in range(2, 12):
        for b in range(a + 1, 13):
            assert upper_bound(a, b) < scoins(a, b), (a, b)
    report(9, "a^(a+b-2) < a^(b-1) * b^(a-1) for all 2 <= a < b <= 12")


def test_criterion_10_census_determinism():
    outputs = []
    for jobs in ("1", "2", "8"):
        result = subprocess.run(
            [sys.executable, "-m", "treecensus", "census",
             "--max-n", "12", "--jobs", jobs],
            capture_output=True,
        )
        assert result.returncode == 0, result.stderr.decode()
        outputs.append(result.stdout)
    assert outputs[0] == outputs[1] == outputs[2]
    lines = outputs[0].decode().strip().split("\n")
    expected_rows = sum(1 for _ in cells(12))
    assert len(lines) == 1 + expected_rows
    report(10, f"census --max-n 12 is byte-identical across 1, 2 and 8 "
               f"workers ({expected_rows} rows)")

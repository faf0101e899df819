"""Exact class counts and bounds for spanning trees of K_{a,b}.

``exact_classes`` counts isomorphism classes by walking the whole code
space and deduplicating canonical forms; ``oracle_edge_subsets`` recounts
them by brute force over edge subsets, sharing nothing with the codec, so
the two routes check each other.  The labeled count has the same dual
structure: the closed form a^{b-1} * b^{a-1} against an exact integer
determinant of the reduced Laplacian (fraction-free elimination, no
floating point anywhere).

Bounds: the product of one-sided partition counts from below (with the
unordered-pair variant on the diagonal a == b), and a^{a+b-2} or
I_{a,a} * a^{b-a} from above for a < b.  Neither upper bound is claimed on
the diagonal, so asking for one there is a domain error and the census
table falls back to the labeled count as the only safe cap.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernel, codec
from .bigraph import BipartiteLabeledTree, canonical_form
from .errors import BudgetExceeded, DomainError, InvalidTree
from .partitions import count_partitions

DEFAULT_CLASS_BUDGET = 10 ** 8
DEFAULT_SUBSET_BUDGET = 10 ** 7
_KERNEL_MIN_CODES = 20000


def scoins(a: int, b: int) -> int:
    """Number of labeled spanning trees of K_{a,b}: a^{b-1} * b^{a-1}."""
    if a < 1 or b < 1:
        raise ValueError(f"side sizes must be >= 1, got ({a}, {b})")
    return a ** (b - 1) * b ** (a - 1)


def kirchhoff_count(a: int, b: int, *, size_limit: int = 64) -> int:
    """Labeled spanning tree count as a reduced-Laplacian determinant.

    Independent of the closed form: builds the Laplacian of K_{a,b},
    deletes the first row and column, and evaluates the exact integer
    determinant by fraction-free (Bareiss) elimination.
    """
    if a < 1 or b < 1:
        raise ValueError(f"side sizes must be >= 1, got ({a}, {b})")
    n = a + b
    if n > size_limit:
        raise BudgetExceeded(n, size_limit, "Laplacian size")
    # Global vertex order: A block then B block; vertex 0 is removed.
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                m[i - 1][j - 1] = b if i < a else a
            elif (i < a) != (j < a):
                m[i - 1][j - 1] = -1
    return _bareiss_det(m)


def _bareiss_det(m: list[list[int]]) -> int:
    # Fraction-free elimination; every division below is exact.  Destroys m.
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def exact_classes(
    a: int, b: int, *, budget: int = DEFAULT_CLASS_BUDGET, jobs: int = 1
) -> tuple[int, list[BipartiteLabeledTree]]:
    """Exact number of isomorphism classes of spanning trees of K_{a,b}.

    Walks all a^{b-1} * b^{a-1} codes and deduplicates canonical forms.
    Returns the count and one representative per class (the tree of the
    smallest code index in the class), ordered by fingerprint.  Raises
    BudgetExceeded before starting when the code space is larger than
    ``budget``.  ``jobs`` shards the code space over worker threads; the
    result is identical for any value.
    """
    if not 1 <= a <= b:
        raise ValueError(f"exact_classes requires 1 <= a <= b, got ({a}, {b})")
    total = scoins(a, b)
    if total > budget:
        raise BudgetExceeded(total, budget, "code space")
    if a + b < 3:
        return 1, [BipartiteLabeledTree(1, 1, [(0, 0)])]

    n = a + b
    if (total < _KERNEL_MIN_CODES or n > _kernel.KERNEL_MAX_N
            or total > _kernel.MAX_INDEX):
        first_seen: dict[tuple[int, ...], int] = {}
        for index, tree in enumerate(codec.enumerate_labeled(a, b)):
            fp = canonical_form(tree).fingerprint
            if fp not in first_seen:
                first_seen[fp] = index
        ordered = sorted(first_seen.items())
    else:
        merged: dict[tuple[int, int], int] = {}
        for hi, lo, idx in _census_shards(a, b, total, jobs):
            for h, l, i in zip(hi.tolist(), lo.tolist(), idx.tolist()):
                key = (h, l)
                if key not in merged or i < merged[key]:
                    merged[key] = i
        ordered = sorted(merged.items())

    reps = [codec.decode(codec.code_at(a, b, index), a, b)
            for _, index in ordered]
    return len(ordered), reps


def _census_shards(a, b, total, jobs):
    jobs = max(1, int(jobs))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(jobs)
              if bounds[i] < bounds[i + 1]]
    if len(ranges) == 1:
        return [_kernel.census_range(a, b, *ranges[0])]
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(_kernel.census_range, a, b, lo, hi)
                   for lo, hi in ranges]
        return [f.result() for f in futures]


def oracle_edge_subsets(a: int, b: int, *,
                        budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Class count by brute force, independent of the codec.

    Enumerates every (a+b-1)-edge subset of K_{a,b}, keeps the ones that
    form a spanning tree, and deduplicates canonical forms.
    """
    if not 1 <= a <= b:
        raise ValueError(f"oracle requires 1 <= a <= b, got ({a}, {b})")
    k = a + b - 1
    required = math.comb(a * b, k)
    if required > budget:
        raise BudgetExceeded(required, budget, "edge-subset enumeration")
    all_edges = [(i, j) for i in range(a) for j in range(b)]
    fingerprints = set()
    for subset in itertools.combinations(all_edges, k):
        try:
            tree = BipartiteLabeledTree(a, b, subset)
        except InvalidTree:
            continue
        fingerprints.add(canonical_form(tree))
    return len(fingerprints)


def lower_bound(a: int, b: int) -> int:
    """Guaranteed minimum number of classes.

    For a < b this is P_a(a+b-1) * P_b(a+b-1): distinct ordered partition
    pairs realize non-isomorphic trees.  On the diagonal only unordered
    pairs are distinguishable, giving r(r+1)/2 with r = P_a(2a-1).
    """
    if not 2 <= a <= b:
        raise ValueError(f"lower_bound requires 2 <= a <= b, got ({a}, {b})")
    m = a + b - 1
    if a == b:
        r = count_partitions(m, a)
        return r * (r + 1) // 2
    return count_partitions(m, a) * count_partitions(m, b)


def upper_bound(a: int, b: int) -> int:
    """The cap a^{a+b-2}, claimed only for 2 <= a < b."""
    if a == b:
        raise DomainError(
            f"a^(a+b-2) is not claimed for a == b (got a = b = {a})")
    if not 2 <= a < b:
        raise ValueError(f"upper_bound requires 2 <= a < b, got ({a}, {b})")
    return a ** (a + b - 2)


def upper_bound_lemma25(a: int, b: int, exact_iaa: int) -> int:
    """The cap I_{a,a} * a^{b-a} for 2 <= a < b, given exact I_{a,a}."""
    if not 2 <= a < b:
        raise ValueError(
            f"upper_bound_lemma25 requires 2 <= a < b, got ({a}, {b})")
    return exact_iaa * a ** (b - a)


def verify_corollaries(a: int, b: int) -> tuple[bool, bool | None]:
    """Exact-arithmetic truth of the two counting inequalities.

    First flag: a^{b-1} * b^{a-1} >= P_a(a+b-1) * P_b(a+b-1).
    Second flag (a == b only, else None): a^{2a-2} >= r(r+1)/2 with
    r = P_a(2a-1).
    """
    if not 2 <= a <= b:
        raise ValueError(
            f"verify_corollaries requires 2 <= a <= b, got ({a}, {b})")
    m = a + b - 1
    first = scoins(a, b) >= count_partitions(m, a) * count_partitions(m, b)
    second = None
    if a == b:
        r = count_partitions(2 * a - 1, a)
        second = a ** (2 * a - 2) >= r * (r + 1) // 2
    return first, second


@dataclass(frozen=True)
class BoundsReport:
    """All bounds and (when affordable) the exact class count for one cell."""

    a: int
    b: int
    lower: int
    upper_thm26: int | None
    upper_lemma25: int | None
    scoins: int
    exact: int | None
    corollary_231_holds: bool
    corollary_241_holds: bool | None

    def sandwich_ok(self) -> bool:
        """lower <= exact <= every present upper bound and the labeled count."""
        if self.exact is None:
            return True
        if not self.lower <= self.exact <= self.scoins:
            return False
        for upper in (self.upper_thm26, self.upper_lemma25):
            if upper is not None and self.exact > upper:
                return False
        return True


def census_table(max_n: int, *, budget: int = DEFAULT_CLASS_BUDGET,
                 jobs: int = 1) -> list[BoundsReport]:
    """One BoundsReport per cell 2 <= a <= b with a + b <= max_n.

    ``exact`` is left absent for cells whose code space exceeds the budget.
    Rows are ordered by (a, b).
    """
    if max_n < 4:
        raise ValueError(f"max_n must be >= 4, got {max_n}")
    iaa: dict[int, int | None] = {}

    def exact_or_none(x: int, y: int) -> int | None:
        try:
            return exact_classes(x, y, budget=budget, jobs=jobs)[0]
        except BudgetExceeded:
            return None

    reports = []
    for a in range(2, max_n // 2 + 1):
        iaa[a] = exact_or_none(a, a)
        for b in range(a, max_n - a + 1):
            exact = iaa[a] if b == a else exact_or_none(a, b)
            if a < b:
                upper26 = a ** (a + b - 2)
                upper25 = (None if iaa[a] is None
                           else upper_bound_lemma25(a, b, iaa[a]))
            else:
                upper26 = None
                upper25 = None
            c231, c241 = verify_corollaries(a, b)
            reports.append(BoundsReport(
                a=a, b=b, lower=lower_bound(a, b), upper_thm26=upper26,
                upper_lemma25=upper25, scoins=scoins(a, b), exact=exact,
                corollary_231_holds=c231, corollary_241_holds=c241,
            ))
    return reports


CSV_HEADER = "a,b,P_a,P_b,lower,upper_thm26,upper_lemma25,scoins,exact,tight"


def _row_fields(r: BoundsReport) -> dict:
    m = r.a + r.b - 1
    return {
        "a": r.a,
        "b": r.b,
        "P_a": count_partitions(m, r.a),
        "P_b": count_partitions(m, r.b),
        "lower": r.lower,
        "upper_thm26": r.upper_thm26,
        "upper_lemma25": r.upper_lemma25,
        "scoins": r.scoins,
        "exact": r.exact,
        "tight": None if r.exact is None else r.exact == r.lower,
    }


def to_csv(reports: list[BoundsReport]) -> str:
    """CSV table; all fields numeric or empty, so no quoting is needed."""
    lines = [CSV_HEADER]
    for r in reports:
        f = _row_fields(r)
        cells = []
        for name in CSV_HEADER.split(","):
            v = f[name]
            if v is None:
                cells.append("")
            elif isinstance(v, bool):
                cells.append("1" if v else "0")
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def to_json(reports: list[BoundsReport]) -> str:
    """JSON mirror of the CSV with identical field names."""
    return json.dumps([_row_fields(r) for r in reports], indent=2) + "\n"

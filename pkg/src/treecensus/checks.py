"""Invariant families behind the ``verify`` command.

Each family re-checks one advertised property of the package at desk scale,
capped by the caller's ``max_n`` (the largest a+b that enumeration-bound
families may touch).  Families are independent; the runner executes all of
them and reports one pass/fail line each, with the first counterexample on
failure.

``brute_force_isomorphic`` is the ground-truth oracle used here: it decides
tree isomorphism by trying vertex bijections directly, sharing nothing with
the canonical form it is checking.  Because a tree's 2-coloring is unique up
to swapping the sides, every isomorphism maps sides to sides, so trying all
side-to-side bijections (both pairings when the side sizes allow it) is
exhaustive.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import census, codec, construct, partitions
from .bigraph import BipartiteLabeledTree, canonical_form, degrees
from .census import DEFAULT_CLASS_BUDGET


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def brute_force_isomorphic(t1: BipartiteLabeledTree,
                           t2: BipartiteLabeledTree) -> bool:
    """Decide abstract tree isomorphism by exhaustive side-to-side bijection."""
    shape1 = (t1.a_size, t1.b_size)
    edges1 = frozenset(t1.edges)
    attempts = []
    if shape1 == (t2.a_size, t2.b_size):
        attempts.append(t2)
    if shape1 == (t2.b_size, t2.a_size):
        attempts.append(t2.flipped())
    for other in attempts:
        edges2 = frozenset(other.edges)
        for sig_a in itertools.permutations(range(t1.a_size)):
            for sig_b in itertools.permutations(range(t1.b_size)):
                if all((sig_a[u], sig_b[v]) in edges2 for u, v in edges1):
                    return True
    return False


def _check_partitions(max_n: int, budget: int) -> CheckResult:
    del max_n, budget  # pure arithmetic; ranges are fixed
    checks = 0
    for m in range(1, 41):
        if partitions.count_partitions(m, 1) != 1:
            return CheckResult("partition-counting", False, f"P_1({m}) != 1")
        if partitions.count_partitions(m, m + 1) != 0:
            return CheckResult("partition-counting", False,
                               f"P_{m + 1}({m}) != 0")
        for k in range(1, m + 1):
            count = partitions.count_partitions(m, k)
            emitted = list(partitions.enumerate_partitions(m, k))
            if len(emitted) != count:
                return CheckResult(
                    "partition-counting", False,
                    f"count P_{k}({m}) = {count} but enumeration "
                    f"yields {len(emitted)}")
            if m <= 25:
                for p in emitted:
                    if p.total != m or p.length != k:
                        return CheckResult("partition-counting", False,
                                           f"bad partition {p} for ({m},{k})")
            if k >= 2:
                rec = (partitions.count_partitions(m - 1, k - 1)
                       + partitions._count(m - k, k))
                if count != rec:
                    return CheckResult("partition-counting", False,
                                       f"recurrence fails at ({m},{k})")
            checks += 1
    return CheckResult("partition-counting", True,
                       f"{checks} (m,k) cells up to m=40")


def _cells(limit: int, lo: int = 1):
    # All (a, b) with lo <= a <= b and 3 <= a + b <= limit.
    for a in range(lo, limit):
        for b in range(a, limit - a + 1):
            if a + b >= 3:
                yield a, b


def _check_codec(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(9, max_n)
    trees = 0
    for a, b in _cells(cap):
        total = codec.code_space_size(a, b)
        for index, tree in enumerate(codec.enumerate_labeled(a, b)):
            code = codec.encode(tree)
            if codec.decode(code, a, b) != tree:
                return CheckResult("codec-roundtrip", False,
                                   f"decode(encode(T)) != T at ({a},{b}) "
                                   f"index {index}")
            if codec.code_at(a, b, index) != code:
                return CheckResult("codec-roundtrip", False,
                                   f"encode(decode(c)) != c at ({a},{b}) "
                                   f"index {index}")
            counts_a = [0] * a
            for x in code.a_seq:
                counts_a[x] += 1
            counts_b = [0] * b
            for x in code.b_seq:
                counts_b[x] += 1
            fa = [0] * a
            fb = [0] * b
            for u, v in tree.edges:
                fa[u] += 1
                fb[v] += 1
            if any(counts_a[v] != fa[v] - 1 for v in range(a)) or any(
                    counts_b[v] != fb[v] - 1 for v in range(b)):
                return CheckResult("codec-roundtrip", False,
                                   f"degree law fails at ({a},{b}) "
                                   f"index {index}")
            trees += 1
        half = total // 2
        sharded = list(codec.enumerate_labeled(a, b, 0, half))
        sharded += list(codec.enumerate_labeled(a, b, half, total))
        if sharded != list(codec.enumerate_labeled(a, b)):
            return CheckResult("codec-roundtrip", False,
                               f"shard concatenation differs at ({a},{b})")
    return CheckResult("codec-roundtrip", True,
                       f"{trees} trees over all cells with a+b <= {cap}")


def _check_scoins_triangle(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(12, max_n)
    distinct_cap = min(9, max_n)
    cells = 0
    for a, b in _cells(cap, lo=2):
        expected = census.scoins(a, b)
        if a + b <= distinct_cap:
            seen = set(codec.enumerate_labeled(a, b))
            produced = len(seen)
        else:
            produced = sum(1 for _ in codec.enumerate_labeled(a, b))
        kirchhoff = census.kirchhoff_count(a, b)
        if not produced == expected == kirchhoff:
            return CheckResult(
                "scoins-triangle", False,
                f"({a},{b}): stream {produced}, closed form {expected}, "
                f"determinant {kirchhoff}")
        cells += 1
    return CheckResult("scoins-triangle", True,
                       f"{cells} cells with a+b <= {cap}")


def _check_construct_fidelity(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(11, max_n)
    pairs = 0
    for a in range(2, cap - 1):
        for b in range(2, cap - a + 1):
            for s, t, tree in construct.realize_all_pairs(a, b):
                da, db = degrees(tree)
                if da != s or db != t:
                    return CheckResult(
                        "construct-fidelity", False,
                        f"({a},{b}) pair ({s},{t}) realized degrees "
                        f"({da},{db})")
                pairs += 1
    return CheckResult("construct-fidelity", True,
                       f"{pairs} ordered pairs with a+b <= {cap}")


def _check_construct_distinctness(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(11, max_n)
    pairs = 0
    for a in range(2, cap - 1):
        for b in range(a + 1, cap - a + 1):
            seen = {}
            for s, t, tree in construct.realize_all_pairs(a, b):
                fp = canonical_form(tree)
                if fp in seen:
                    return CheckResult(
                        "construct-distinctness", False,
                        f"({a},{b}): pairs {seen[fp]} and ({s},{t}) "
                        f"collide")
                seen[fp] = (s, t)
                pairs += 1
    return CheckResult("construct-distinctness", True,
                       f"{pairs} pairs with a < b, a+b <= {cap}")


def _check_witness_lower_bound(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(11, max_n)
    cells = 0
    for a, b in _cells(cap, lo=2):
        found = len({canonical_form(tree)
                     for _, _, tree in construct.realize_all_pairs(a, b)})
        bound = census.lower_bound(a, b)
        if found < bound:
            return CheckResult(
                "witness-lower-bound", False,
                f"({a},{b}): {found} realized classes < bound {bound}")
        cells += 1
    return CheckResult("witness-lower-bound", True,
                       f"{cells} cells with a+b <= {cap}")


def _check_figures(max_n: int, budget: int) -> CheckResult:
    got22 = census.exact_classes(2, 2, budget=budget)[0]
    if got22 != 1:
        return CheckResult("figure-fixtures", False,
                           f"classes of K_{{2,2}} = {got22}, expected 1")
    detail = "K_{2,2} has 1 class"
    if max_n >= 5:
        got23 = census.exact_classes(2, 3, budget=budget)[0]
        if got23 != 2:
            return CheckResult("figure-fixtures", False,
                               f"classes of K_{{2,3}} = {got23}, expected 2")
        detail += ", K_{2,3} has 2"
    return CheckResult("figure-fixtures", True, detail)


def _check_oracle_agreement(max_n: int, budget: int) -> CheckResult:
    cap = min(8, max_n)
    cells = 0
    for a, b in _cells(cap, lo=2):
        via_codes = census.exact_classes(a, b, budget=budget)[0]
        via_subsets = census.oracle_edge_subsets(a, b)
        if via_codes != via_subsets:
            return CheckResult(
                "oracle-agreement", False,
                f"({a},{b}): code census {via_codes} != edge-subset "
                f"census {via_subsets}")
        cells += 1
    return CheckResult("oracle-agreement", True,
                       f"{cells} cells with a+b <= {cap}")


def _check_sandwich(max_n: int, budget: int) -> CheckResult:
    cap = min(12, max_n)
    rows = census.census_table(cap, budget=budget)
    populated = 0
    for r in rows:
        if not r.sandwich_ok():
            return CheckResult(
                "bound-sandwich", False,
                f"({r.a},{r.b}): lower {r.lower}, exact {r.exact}, "
                f"uppers ({r.upper_thm26}, {r.upper_lemma25}), "
                f"labeled {r.scoins}")
        if r.a < r.b and r.upper_thm26 is not None \
                and r.lower > r.upper_thm26:
            return CheckResult(
                "bound-sandwich", False,
                f"({r.a},{r.b}): lower {r.lower} > upper {r.upper_thm26}")
        if r.exact is not None:
            populated += 1
    if cap >= 6:
        row33 = next(r for r in rows if (r.a, r.b) == (3, 3))
        if not (row33.exact == row33.lower == 3):
            return CheckResult(
                "bound-sandwich", False,
                f"(3,3): expected exact = lower = 3, got exact "
                f"{row33.exact}, lower {row33.lower}")
    return CheckResult("bound-sandwich", True,
                       f"{populated} populated rows with a+b <= {cap}")


def _check_corollaries(max_n: int, budget: int) -> CheckResult:
    del max_n, budget
    for a in range(2, 31):
        for b in range(a, 31):
            first, second = census.verify_corollaries(a, b)
            if not first:
                return CheckResult(
                    "corollary-arithmetic", False,
                    f"product bound fails at ({a},{b})")
            if second is False:
                return CheckResult(
                    "corollary-arithmetic", False,
                    f"diagonal bound fails at a = {a}")
    return CheckResult("corollary-arithmetic", True,
                       "both inequalities for 2 <= a <= b <= 30")


def _check_nontriviality(max_n: int, budget: int) -> CheckResult:
    del max_n, budget
    for a in range(2, 13):
        for b in range(a + 1, 13):
            if not census.upper_bound(a, b) < census.scoins(a, b):
                return CheckResult(
                    "nontriviality", False,
                    f"a^(a+b-2) >= labeled count at ({a},{b})")
    return CheckResult("nontriviality", True,
                       "a^(a+b-2) < a^(b-1) b^(a-1) for 2 <= a < b <= 12")


def _check_relabel_invariance(max_n: int, budget: int) -> CheckResult:
    del budget
    cap = min(12, max_n)
    rng = random.Random(20240801)
    cells = [(a, b) for a, b in _cells(cap)]
    for trial in range(1000):
        a, b = cells[rng.randrange(len(cells))]
        total = codec.code_space_size(a, b)
        tree = codec.decode(codec.code_at(a, b, rng.randrange(total)), a, b)
        fp = canonical_form(tree)
        sig_a = list(range(a))
        sig_b = list(range(b))
        rng.shuffle(sig_a)
        rng.shuffle(sig_b)
        relabeled = BipartiteLabeledTree(
            a, b, [(sig_a[u], sig_b[v]) for u, v in tree.edges])
        if canonical_form(relabeled) != fp:
            return CheckResult(
                "canonical-relabel-invariance", False,
                f"trial {trial}: relabeling changed the fingerprint "
                f"at ({a},{b})")
        if a == b and canonical_form(relabeled.flipped()) != fp:
            return CheckResult(
                "canonical-relabel-invariance", False,
                f"trial {trial}: side swap changed the fingerprint "
                f"at ({a},{b})")
    return CheckResult("canonical-relabel-invariance", True,
                       f"1000 random relabelings with a+b <= {cap}")


def _check_separation(max_n: int, budget: int) -> CheckResult:
    cap = min(10, max_n)
    # One representative per fingerprint over every split of every order.
    by_fp = {}
    split_fps: dict[tuple[int, int], set] = {}
    for n in range(3, cap + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            if a > b:
                continue
            _, reps = census.exact_classes(a, b, budget=budget)
            fps = {canonical_form(t) for t in reps}
            split_fps[(a, b)] = fps
            for tree in reps:
                by_fp.setdefault(canonical_form(tree), tree)
    # Different splits of the same order never share a shape.
    for (s1, f1), (s2, f2) in itertools.combinations(split_fps.items(), 2):
        if sum(s1) == sum(s2) and f1 & f2:
            return CheckResult(
                "canonical-separation", False,
                f"splits {s1} and {s2} share a fingerprint")
    # Distinct fingerprints must be genuinely non-isomorphic trees.
    reps = sorted(by_fp.items())
    for (fp1, t1), (fp2, t2) in itertools.combinations(reps, 2):
        if t1.n_vertices != t2.n_vertices:
            continue
        if degrees_multiset(t1) != degrees_multiset(t2):
            continue
        if brute_force_isomorphic(t1, t2):
            return CheckResult(
                "canonical-separation", False,
                f"isomorphic trees got fingerprints {fp1.hex()} and "
                f"{fp2.hex()}")
    # Exhaustive cross-check of the class counts at small order.
    for a, b in _cells(min(7, cap)):
        count = census.exact_classes(a, b, budget=budget)[0]
        brute = _brute_class_count(a, b)
        if count != brute:
            return CheckResult(
                "canonical-separation", False,
                f"({a},{b}): canonical census {count} != brute-force "
                f"census {brute}")
    return CheckResult(
        "canonical-separation", True,
        f"{len(reps)} shapes with <= {cap} vertices, pairwise checked")


def degrees_multiset(tree: BipartiteLabeledTree):
    da, db = degrees(tree)
    return tuple(sorted(da.parts + db.parts, reverse=True))


def _brute_class_count(a: int, b: int) -> int:
    reps: list[BipartiteLabeledTree] = []
    for tree in codec.enumerate_labeled(a, b):
        if not any(brute_force_isomorphic(tree, r) for r in reps):
            reps.append(tree)
    return len(reps)


_FAMILIES = [
    _check_partitions,
    _check_codec,
    _check_scoins_triangle,
    _check_construct_fidelity,
    _check_construct_distinctness,
    _check_witness_lower_bound,
    _check_figures,
    _check_oracle_agreement,
    _check_sandwich,
    _check_corollaries,
    _check_nontriviality,
    _check_relabel_invariance,
    _check_separation,
]


def run_verification(max_n: int,
                     budget: int = DEFAULT_CLASS_BUDGET) -> list[CheckResult]:
    """Run every invariant family capped at a+b <= max_n."""
    if max_n < 4:
        raise ValueError(f"max_n must be >= 4, got {max_n}")
    return [family(max_n, budget) for family in _FAMILIES]

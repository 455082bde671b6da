"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (shown in the terminal summary and on
stdout with ``-s``) before asserting, so a failing criterion is reported
rather than hidden behind the first assertion error.
"""

import random
import time
import timeit
from itertools import combinations

import pytest

from conftest import ACCEPTANCE_LINES
from nsgp import oracle
from nsgp.core import delta, from_generators
from nsgp.covariety import (
    CovarietyDescriptor,
    closure,
    enumerate_tree,
    minimal_systems,
    ratio_chain,
    verify_axioms,
)
from nsgp.gencov import generated_covariety, omega_chain
from nsgp.rfm import (
    RfmFamily,
    genus_range,
    is_mr,
    maximal_elements,
    mr_witness,
    rfm_closure,
    rfm_enumerate,
    rfm_enumerate_genus,
    rfm_minimal_generators,
    rfm_rank,
)
from nsgp.verify import sweep_pairs

SWEEP = list(sweep_pairs(18))


def report(n, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def best_of(fn, number=20, repeat=5):
    """Best per-call wall time in seconds."""
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def add(S, *xs):
    for x in xs:
        S = S.adjoin(x)
    return S


@pytest.fixture(scope="module")
def sweep():
    t0 = time.perf_counter()
    trees = {(F, m): rfm_enumerate(F, m) for F, m in SWEEP}
    return trees, time.perf_counter() - t0


def test_criterion_01_pf_sg_of_3_5_7():
    def work():
        S = from_generators([3, 5, 7])
        return S.pseudo_frobenius(), S.special_gaps()

    pf, sg = work()
    t = best_of(work)
    report(1, "PF(<3,5,7>)={2,4}, SG={4}", pf == [2, 4] and sg == [4] and t < 1e-3, f"{t * 1e3:.3f} ms")


def test_criterion_02_adjoin_below_multiplicity():
    def work():
        S = from_generators(range(7, 14))
        return S.apery_set(7), S.pseudo_frobenius(), S.special_gaps(), S.adjoin(5).apery_set(7)

    ap, pf, sg, ap5 = work()
    ok = (
        ap == [0, 8, 9, 10, 11, 12, 13]
        and pf == [1, 2, 3, 4, 5, 6]
        and sg == [4, 5, 6]
        and sorted(ap5) == [0, 5, 8, 9, 10, 11, 13]
    )
    t = best_of(work)
    report(2, "Ap({0,7,->},7), PF, SG and adjoining 5", ok and t < 1e-3, f"{t * 1e3:.3f} ms")


def test_criterion_03_r_7_4():
    D = delta(7, 4)
    want = {D, add(D, 5), add(D, 6), add(D, 6, 5)}
    tree = rfm_enumerate(7, 4)
    tables = {tuple(sorted(S.apery)) for S in tree}
    ok = set(tree) == want and {(0, 5, 10, 11), (0, 6, 9, 11), (0, 5, 6, 11)} <= tables
    t = best_of(lambda: rfm_enumerate(7, 4))
    report(3, "R(7,4) and its Apéry tables", ok and t < 1e-3, f"{t * 1e3:.3f} ms")


def test_criterion_04_r_12_5_by_genus():
    fam = RfmFamily(12, 5)
    D = fam.delta
    g8 = set(rfm_enumerate_genus(fam, 8))
    g9 = set(rfm_enumerate_genus(fam, 9))
    ok = g8 == {add(D, 8, 9), add(D, 8, 11), add(D, 9, 11)} and g9 == {add(D, 8), add(D, 9), add(D, 11)}
    t = best_of(lambda: rfm_enumerate_genus(fam, 8))
    report(4, "R(12,5,8) and R(12,5,9)", ok and t < 1e-3, f"{t * 1e3:.3f} ms")


def test_criterion_05_oracle_sweep():
    t0 = time.perf_counter()
    bad = [(F, m) for F, m in SWEEP if set(rfm_enumerate(F, m)) != oracle.oracle_rfm(F, m)]
    t = time.perf_counter() - t0
    report(5, f"enumeration equals oracle on {len(SWEEP)} pairs, F<=18", not bad and t < 10, f"{t:.2f} s, mismatches {bad}")


def test_criterion_06_tree_invariants(sweep):
    trees, _ = sweep
    bad = []
    for key, tree in trees.items():
        for i in range(1, len(tree)):
            S, P = tree.vertices[i], tree.vertices[tree.parents[i]]
            if S.remove_ratio() != P or S.genus != P.genus - 1:
                bad.append(key)
                break
    report(6, "parent = remove_ratio(child), genus drops by one", not bad, f"{sum(map(len, trees.values()))} vertices")


def test_criterion_07_genus_spectrum(sweep):
    trees, _ = sweep
    bad = []
    for (F, m), tree in trees.items():
        ok = sorted({S.genus for S in tree}) == list(genus_range(F, m))
        if m < F < 2 * m:
            ok = ok and len(tree) == 2 ** (F - m - 1)
        if not ok:
            bad.append((F, m))
    report(7, "genera equal genus_range; 2^(F-m-1) members when F<2m", not bad, f"mismatches {bad}")


def test_criterion_08_maximal_elements(sweep):
    trees, _ = sweep
    bad = []
    for (F, m), tree in trees.items():
        masks = {S: oracle.to_mask(S, F) for S in tree}
        top = {S for S, a in masks.items() if not any(a != b and a & ~b == 0 for b in masks.values())}
        got = maximal_elements(F, m)
        want_g = m if F < 2 * m else -(-(F + 1) // 2)
        by_genus = {S for S in tree if S.genus == want_g}
        if set(got) != top or top != by_genus:
            bad.append((F, m))
    report(8, "maximal elements equal the inclusion-maximal members and the top genus level", not bad, f"mismatches {bad}")


def test_criterion_09_rank(sweep):
    trees, _ = sweep
    bad = []
    for (F, m), tree in trees.items():
        fam = RfmFamily(F, m)
        for S in tree:
            X = rfm_minimal_generators(S, fam)
            if not (len(X) <= m - 2 and len(X) <= S.embedding_dimension and rfm_closure(X, fam) == S):
                bad.append((F, m, S))
    report(9, "rank <= m-2, rank <= e(S), closure of the minimal system is S", not bad, f"{len(bad)} failures")


def test_criterion_10_mr_examples():
    a = from_generators([5, 7, 9, 11])
    b = from_generators([5, 12, 13, 14, 21])
    ok = (
        is_mr(a) and a.frobenius == 13 and rfm_rank(a, (13, 5)) == 3
        and is_mr(b) and b.frobenius == 16 and rfm_rank(b, (16, 5)) == 3
    )
    report(10, "<5,7,9,11> and <5,12,13,14,21> are MR with rank 3", ok)


def test_criterion_11_mr_witness():
    t0 = time.perf_counter()
    pairs = [(F, m) for F in range(3, 26) for m in range(2, F) if F > 2 * m and F % m]
    bad = [(F, m) for F, m in pairs if rfm_rank(mr_witness(F, m)) != m - 2 or mr_witness(F, m).frobenius != F]
    t = time.perf_counter() - t0
    report(11, f"mr_witness has rank m-2 on {len(pairs)} pairs, F<=25", not bad and t < 1, f"{t * 1e3:.1f} ms, bad {bad}")


def test_criterion_12_two_generator_covariety():
    s1, s2 = from_generators([5, 7, 9]), from_generators([5, 6, 8])

    def strip(S, xs):
        for x in xs:
            assert S.ratio == x
            S = S.remove_ratio()
        return S

    o1 = [strip(s1, [7, 9, 12][:k]) for k in range(4)]
    o2 = [strip(s2, [6, 8, 11, 12, 13][:k]) for k in range(6)]

    def work():
        c1, c2 = list(omega_chain(s1, 13, 5)), list(omega_chain(s2, 13, 5))
        return c1, c2, generated_covariety([s1, s2])

    c1, c2, tree = work()
    want = set(o1) | set(o2) | {a & b for a in o1 for b in o2}
    axioms = verify_axioms(tree.vertices)
    ok = c1 == o1 and c2 == o2 and tree.members() == want and not axioms
    t = best_of(work, number=5, repeat=3)
    report(12, "Omega chains and <S1,S2> with all axioms", ok and t < 0.1, f"{t * 1e3:.2f} ms, {len(tree)} members")


def test_criterion_13_single_generator(small_semigroups):
    rng = random.Random(2024)
    pool = [S for S in small_semigroups if 2 <= S.multiplicity <= 8 and S.frobenius <= 20]
    sample = rng.sample(pool, 50)
    bad = [S for S in sample if generated_covariety([S]).members() != set(ratio_chain(S))]
    report(13, "<S> equals the ratio chain of S for 50 random S (m<=8, F<=20)", not bad, f"{len(bad)} failures")


def test_criterion_14_closure_vs_intersection():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for F, m in sweep_pairs(14):
        fam = RfmFamily(F, m)
        systems = set()
        for S in rfm_enumerate(fam):
            extra = [x for x in range(1, F) if x in S and x % m]
            for k in range(4):
                systems.update(combinations(extra, k))
        for X in systems:
            checked += 1
            if rfm_closure(X, fam) != oracle.oracle_closure(X, F, m):
                bad.append((F, m, X))
    t = time.perf_counter() - t0
    report(14, "R[X] equals the intersection of members containing X, F<=14, #X<=3", not bad and t < 30, f"{checked} sets, {t:.2f} s")


def test_criterion_15_ratio_family():
    def mk(xs):
        return oracle.to_semigroup(sum(1 << x for x in xs), 15)

    s1, s2, s3 = mk([0, 8, 9, 10, 11, 15]), mk([0, 8, 9, 13, 15]), mk([0, 8, 9, 15])
    extra = {s1, s2, s3}

    def member(S):
        return S in extra or (S.multiplicity == 8 and S.ratio >= 10 and S.frobenius <= 15)

    tree = enumerate_tree(CovarietyDescriptor(delta(15, 8), member), check_axioms=True)
    brute = {S for S in oracle.oracle_all(8, 15) if S.ratio >= 10} | extra
    members = tree.vertices
    ok = (
        tree.members() == brute
        and not verify_axioms(members)
        and s1.small_elements() == [0, 8, 9, 10, 11, 15]
        and minimal_systems(members, s1) == [(9, 10), (9, 11)]
        and closure(members, {9}) == s3
    )
    report(15, "custom family: S1 has minimal systems {9,10} and {9,11}", ok, f"{len(tree)} members")

from itertools import combinations

import pytest

from nsgp import oracle
from nsgp.core import DomainError, UsageError, delta, from_generators
from nsgp.covariety import closure, minimal_systems
from nsgp.rfm import (
    RfmFamily,
    RSet,
    genus_range,
    is_mr,
    is_rfm_set,
    maximal_elements,
    mr_witness,
    rfm_closure,
    rfm_enumerate,
    rfm_enumerate_genus,
    rfm_minimal_generators,
    rfm_rank,
    theta,
)
from nsgp.verify import sweep_pairs

SWEEP = list(sweep_pairs(16))


def add(S, *xs):
    for x in xs:
        S = S.adjoin(x)
    return S


@pytest.fixture(scope="module")
def trees():
    return {(F, m): rfm_enumerate(F, m) for F, m in SWEEP}


def test_family_validation():
    for F, m in [(8, 4), (4, 4), (3, 4), (5, 1)]:
        with pytest.raises(UsageError):
            RfmFamily(F, m)
    fam = RfmFamily(7, 4)
    assert fam.delta == delta(7, 4)
    assert fam.delta in fam and from_generators([3, 5, 7]) not in fam
    with pytest.raises(DomainError):
        fam.require(from_generators([3, 5, 7]))


def test_theta_excludes_frobenius():
    D = delta(7, 4)
    assert D.special_gaps() == [5, 6, 7]
    assert theta(D, 7) == [5, 6]


def test_enumerate_matches_oracle(trees):
    for (F, m), tree in trees.items():
        assert set(tree) == oracle.oracle_rfm(F, m), (F, m)
        assert len(tree.members()) == len(tree)
        assert all(S.frobenius == F and S.multiplicity == m for S in tree)


def test_enumerate_r_7_4():
    D = delta(7, 4)
    tree = rfm_enumerate(RfmFamily(7, 4))
    assert set(tree) == {D, add(D, 5), add(D, 6), add(D, 6, 5)}
    assert sorted(sorted(S.apery) for S in tree) == [[0, 5, 6, 11], [0, 5, 10, 11], [0, 6, 9, 11], [0, 9, 10, 11]]


def test_genus_range_values():
    assert list(genus_range(3, 4)) == [3]
    assert list(genus_range(7, 4)) == [4, 5, 6]
    assert list(genus_range(12, 5)) == [7, 8, 9, 10]
    assert list(genus_range(13, 5)) == [7, 8, 9, 10, 11]
    with pytest.raises(UsageError):
        genus_range(10, 5)


def test_genus_spectrum(trees):
    for (F, m), tree in trees.items():
        gs = sorted({S.genus for S in tree})
        assert gs == list(genus_range(F, m)), (F, m)
        assert tree.root.genus == F - F // m
        if F < 2 * m:
            assert len(tree) == 2 ** (F - m - 1)


def test_enumerate_genus_r_12_5():
    fam = RfmFamily(12, 5)
    D = fam.delta
    assert rfm_enumerate_genus(fam, 8) == [add(D, 9, 8), add(D, 11, 8), add(D, 11, 9)]
    assert rfm_enumerate_genus(fam, 9) == [add(D, 8), add(D, 9), add(D, 11)]
    assert rfm_enumerate_genus(fam, 10) == [D]
    assert rfm_enumerate_genus(12, 6, m=5) == []


def test_enumerate_genus_matches_levels(trees):
    for (F, m), tree in trees.items():
        for g in genus_range(F, m):
            got = rfm_enumerate_genus(F, g, m=m, threads=2)
            assert set(got) == set(tree.at_genus(g))
            assert len(got) == len(set(got))


def test_maximal_elements(trees):
    for (F, m), tree in trees.items():
        members = list(tree)
        top = {S for S in members if not any(S < T for T in members)}
        got = maximal_elements(F, m)
        assert set(got) == top, (F, m)
        want_g = m if F < 2 * m else -(-(F + 1) // 2)
        assert {S.genus for S in got} == {want_g}
        if F > 2 * m:
            assert all(S.classify().irreducible for S in got)
    assert maximal_elements(4, 5) == [delta(4, 5)]
    assert maximal_elements(7, 4)[0].small_elements() == [0, 4, 5, 6, 8]


def test_rset_and_oracle_agree():
    for F, m in sweep_pairs(13):
        members = [oracle.to_mask(S, F) for S in oracle.oracle_rfm(F, m)]
        free = [x for x in range(m + 1, F) if x % m]
        for k in range(3):
            for X in combinations(free, k):
                want = sum(1 << x for x in X)
                expected = any(mask & want == want for mask in members)
                assert is_rfm_set(X, F, m) == expected, (F, m, X)
        assert not is_rfm_set([F], F, m)
        assert not is_rfm_set([m], F, m)
        assert not is_rfm_set([F + 1], F, m)


def test_rset_validation():
    fam = RfmFamily(7, 4)
    assert tuple(RSet((6, 5, 5), fam)) == (5, 6)
    with pytest.raises(DomainError):
        RSet((8,), fam)
    # 3 + 4 = 7 = F, so {3} cannot sit in a member
    with pytest.raises(DomainError):
        RSet((3,), fam)


def test_closure_small_cases():
    D = delta(7, 4)
    assert rfm_closure([], RfmFamily(7, 4)) == D
    assert rfm_closure([5, 6], RfmFamily(7, 4)) == add(D, 6, 5)
    assert rfm_closure([9], RfmFamily(13, 5)).small_elements() == [0, 5, 9, 10, 14]
    with pytest.raises(UsageError):
        rfm_closure([5])
    with pytest.raises(DomainError):
        rfm_closure([6], RfmFamily(12, 5))  # 6 + 6 = F


def test_closure_matches_oracle():
    for F, m in sweep_pairs(12):
        free = [x for x in range(m + 1, F) if x % m]
        for k in range(3):
            for X in combinations(free, k):
                if is_rfm_set(X, F, m):
                    assert rfm_closure(X, RfmFamily(F, m)) == oracle.oracle_closure(X, F, m)


def test_minimal_generators_examples():
    S = from_generators([5, 7, 9, 11])
    assert tuple(rfm_minimal_generators(S)) == (7, 9, 11)
    assert rfm_rank(S, (13, 5)) == 3
    assert tuple(rfm_minimal_generators(delta(7, 4))) == ()
    with pytest.raises(DomainError):
        rfm_minimal_generators(S, RfmFamily(12, 5))


def test_minimal_system_is_unique_and_generates(trees):
    for (F, m), tree in trees.items():
        if F > 13:
            continue
        members = list(tree)
        for S in members:
            X = tuple(rfm_minimal_generators(S))
            assert rfm_closure(X, RfmFamily(F, m)) == S
            # brute force over all R-systems inside the generic engine
            assert minimal_systems(members, S) == [X]
            assert closure(members, X) == S


def test_rank_bounds(trees):
    for (F, m), tree in trees.items():
        for S in tree:
            k = rfm_rank(S)
            assert k <= m - 2
            assert k <= S.embedding_dimension
            if k == m - 2:
                assert F >= 2 * m - 1
                if F == 2 * m - 1:
                    assert S.small_elements() == [0, *range(m, 2 * m - 1), 2 * m] and S.genus == m
            if k == 1:
                # rank one means <m, r> ∪ {F+1, →}
                r = S.ratio
                assert rfm_closure([r], RfmFamily(F, m)) == S


def test_ratio_in_every_system(trees):
    for (F, m), tree in trees.items():
        for S in list(tree)[1:]:
            assert S.ratio in rfm_minimal_generators(S)


def test_is_mr():
    assert is_mr(from_generators([5, 7, 9, 11]))
    assert is_mr(from_generators([5, 12, 13, 14, 21]))
    assert rfm_rank(from_generators([5, 12, 13, 14, 21]), (16, 5)) == 3
    assert not is_mr(from_generators([5, 6, 8]))
    with pytest.raises(DomainError):
        is_mr(from_generators([1]))


def test_is_mr_matches_rank(trees):
    for (F, m), tree in trees.items():
        for S in tree:
            assert is_mr(S) == (F > 2 * m and rfm_rank(S) == m - 2)


@pytest.mark.parametrize(
    "F, m, gens, system",
    [
        (13, 5, [5, 9, 10, 11, 12], (9, 11, 12)),
        (7, 3, [3, 5], (5,)),
        (11, 4, [4, 9, 10], (9, 10)),
    ],
)
def test_mr_witness_values(F, m, gens, system):
    S = mr_witness(F, m)
    assert S.frobenius == F and S.multiplicity == m
    assert set(S.elements(F)) == set(oracle.generated_elements(gens, F))
    assert tuple(rfm_minimal_generators(S)) == system
    assert rfm_rank(S) == m - 2 and is_mr(S)


def test_mr_witness_preconditions():
    with pytest.raises(UsageError):
        mr_witness(9, 5)
    with pytest.raises(UsageError):
        mr_witness(12, 4)

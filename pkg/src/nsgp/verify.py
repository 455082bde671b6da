"""Golden checks on small hand-computed cases and the oracle sweep, one named check each."""

from __future__ import annotations

from .core import delta, from_generators
from .covariety import ratio_chain
from .gencov import generated_covariety, omega_chain
from .oracle import oracle_rfm
from .rfm import (
    RfmFamily,
    genus_range,
    is_mr,
    rfm_enumerate,
    rfm_enumerate_genus,
    rfm_rank,
)


def _adjoin_all(S, xs):
    for x in xs:
        S = S.adjoin(x)
    return S


def _three_five_seven():
    S = from_generators([3, 5, 7])
    return S.pseudo_frobenius() == [2, 4] and S.special_gaps() == [4]


def _seven_to_thirteen():
    S = from_generators(range(7, 14))
    T = S.adjoin(5)
    return (
        S.apery_set(7) == [0, 8, 9, 10, 11, 12, 13]
        and S.pseudo_frobenius() == [1, 2, 3, 4, 5, 6]
        and S.special_gaps() == [4, 5, 6]
        and sorted(T.apery_set(7)) == [0, 5, 8, 9, 10, 11, 13]
    )


def _r_7_4():
    d = delta(7, 4)
    want = {d, _adjoin_all(d, [5]), _adjoin_all(d, [6]), _adjoin_all(d, [6, 5])}
    tables = {tuple(sorted(S.apery)) for S in want}
    return set(rfm_enumerate(7, 4)) == want and {(0, 5, 10, 11), (0, 6, 9, 11), (0, 5, 6, 11)} <= tables


def _r_12_5_levels():
    fam = RfmFamily(12, 5)
    d = fam.delta
    g8 = {_adjoin_all(d, xs) for xs in ([9, 8], [11, 8], [11, 9])}
    g9 = {_adjoin_all(d, [x]) for x in (8, 9, 11)}
    return set(rfm_enumerate_genus(fam, 8)) == g8 and set(rfm_enumerate_genus(fam, 9)) == g9


def _mr_pair():
    a = from_generators([5, 7, 9, 11])
    b = from_generators([5, 12, 13, 14, 21])
    return (
        is_mr(a) and rfm_rank(a, (13, 5)) == 3 and a.frobenius == 13
        and is_mr(b) and rfm_rank(b, (16, 5)) == 3 and b.frobenius == 16
    )


def _without(S, xs):
    for x in xs:
        assert S.ratio == x
        S = S.remove_ratio()
    return S


def _two_generators():
    s1 = from_generators([5, 7, 9])
    s2 = from_generators([5, 6, 8])
    o1 = [_without(s1, [7, 9, 12][:k]) for k in range(4)]
    o2 = [_without(s2, [6, 8, 11, 12, 13][:k]) for k in range(6)]
    ok = list(omega_chain(s1, 13, 5)) == o1 and list(omega_chain(s2, 13, 5)) == o2
    want = set(o1) | set(o2) | {a & b for a in o1 for b in o2}
    return ok and set(generated_covariety([s1, s2])) == want


def _one_generator():
    S = from_generators([5, 7, 9])
    return list(generated_covariety([S])) == sorted(ratio_chain(S), key=lambda T: -T.genus)


GOLDEN = [
    ("PF and SG of <3,5,7>", _three_five_seven),
    ("Apéry set, PF and SG of {0,7,->}, then adjoining 5", _seven_to_thirteen),
    ("R(7,4) and its Apéry tables", _r_7_4),
    ("R(12,5) at genus 8 and 9", _r_12_5_levels),
    ("<5,7,9,11> and <5,12,13,14,21> have maximal rank", _mr_pair),
    ("omega chains of <5,7,9>, <5,6,8> and the covariety they generate", _two_generators),
    ("<S> is the ratio chain of S", _one_generator),
]


def sweep_pairs(max_frobenius: int):
    for F in range(3, max_frobenius + 1):
        for m in range(2, F):
            if F % m:
                yield F, m


def run_checks(max_frobenius: int = 18):
    """Yield ``(name, passed)`` for every golden check and sweep point."""
    for name, fn in GOLDEN:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        yield name, ok
    for F, m in sweep_pairs(max_frobenius):
        tree = rfm_enumerate(F, m)
        ok = set(tree) == oracle_rfm(F, m)
        ok = ok and {S.genus for S in tree} == set(genus_range(F, m))
        yield f"oracle sweep R({F},{m}) [{len(tree)}]", ok

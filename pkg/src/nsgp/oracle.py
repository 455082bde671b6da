"""Definition-level brute force used to cross-check the fast paths.

Nothing here touches Apéry-table arithmetic: semigroups are handled as
bitmasks of their elements in [0, F] (everything above F is present), and
are converted to ``NumericalSemigroup`` values only for comparison.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations
from typing import Iterable

from .core import NumericalSemigroup, UsageError

ORACLE_MAX_F = 24


def _bits(mask: int, top: int) -> list[int]:
    return [x for x in range(top + 1) if mask >> x & 1]


def is_closed(mask: int, F: int) -> bool:
    """Whether {x <= F : bit x set} ∪ {F+1, →} is closed under addition."""
    full = (1 << (F + 1)) - 1
    holes = ~mask & full
    for a in _bits(mask, F):
        if a and (mask << a) & holes:
            return False
    return True


def to_semigroup(mask: int, F: int) -> NumericalSemigroup:
    """Semigroup with elements ``mask`` up to F and everything above F."""

    def member(x):
        return x > F or bool(mask >> x & 1)

    m = next(x for x in range(1, F + 2) if member(x))
    table = [None] * m
    x = 0
    while None in table:
        if member(x) and table[x % m] is None:
            table[x % m] = x
        x += 1
    return NumericalSemigroup(table)


def to_mask(S: NumericalSemigroup, F: int) -> int:
    return sum(1 << x for x in range(F + 1) if S.contains(x))


def generated_elements(gens: Iterable[int], bound: int) -> set[int]:
    """All sums of generators up to ``bound`` (dynamic programming)."""
    gens = sorted(set(gens))
    reach = [False] * (bound + 1)
    reach[0] = True
    for x in range(1, bound + 1):
        reach[x] = any(g <= x and reach[x - g] for g in gens)
    return {x for x in range(bound + 1) if reach[x]}


def semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(gens))
    bound = gens[0] * gens[-1] + gens[-1]
    elems = generated_elements(gens, bound)
    F = max((x for x in range(bound + 1) if x not in elems), default=-1)
    if F < 0:
        return NumericalSemigroup([0])
    return to_semigroup(sum(1 << x for x in elems if x <= F), F)


def gaps(S: NumericalSemigroup) -> list[int]:
    return [x for x in range(S.frobenius + 1) if not S.contains(x)]


def pseudo_frobenius(S: NumericalSemigroup) -> list[int]:
    F = S.frobenius
    elems = [s for s in range(1, F + 1) if S.contains(s)]
    return [z for z in gaps(S) if all(S.contains(z + s) for s in elems)]


def special_gaps(S: NumericalSemigroup) -> list[int]:
    """Gaps x with S ∪ {x} closed under addition."""
    F = S.frobenius
    base = to_mask(S, F)
    return [x for x in gaps(S) if is_closed(base | 1 << x, F)]


def minimal_generators(S: NumericalSemigroup) -> list[int]:
    top = S.frobenius + S.multiplicity + 1
    elems = [s for s in range(1, top + 1) if S.contains(s)]
    out = []
    for s in elems:
        if not any(S.contains(s - a) and s - a > 0 for a in elems if a < s):
            out.append(s)
    return out


def _check(F: int, m: int) -> None:
    if not (2 <= m < F) or F % m == 0:
        raise UsageError(f"oracle needs 2 <= m < F and m not dividing F, got F={F}, m={m}")
    if F > ORACLE_MAX_F:
        raise UsageError(f"oracle is limited to F <= {ORACLE_MAX_F}")


def rfm_masks(F: int, m: int) -> list[int]:
    """Element masks of every member of R(F, m)."""
    _check(F, m)
    base = sum(1 << k for k in range(0, F + 1, m))
    free = [x for x in range(m + 1, F) if x % m]
    out = []
    for k in range(len(free) + 1):
        for A in combinations(free, k):
            mask = base | sum(1 << x for x in A)
            if is_closed(mask, F):
                out.append(mask)
    return out


def oracle_rfm(F: int, m: int) -> set[NumericalSemigroup]:
    """R(F, m) by testing every candidate set for closure."""
    return {to_semigroup(mask, F) for mask in rfm_masks(F, m)}


def oracle_closure(X: Iterable[int], F: int, m: int) -> NumericalSemigroup:
    """Intersection of all members of R(F, m) containing X."""
    want = sum(1 << x for x in X if x <= F)
    if any(x > F for x in X):
        raise UsageError("not an R-set: meets Δ(F, m)")
    delta_mask = sum(1 << k for k in range(0, F + 1, m))
    if want & delta_mask:
        raise UsageError("not an R-set: meets Δ(F, m)")
    hits = [mask for mask in rfm_masks(F, m) if mask & want == want]
    if not hits:
        raise UsageError("not an R-set: no member contains it")
    return to_semigroup(reduce(lambda a, b: a & b, hits), F)


def oracle_all(m: int, max_frobenius: int) -> set[NumericalSemigroup]:
    """Every numerical semigroup with multiplicity m and Frobenius number <= max_frobenius."""
    F = max_frobenius
    if F > ORACLE_MAX_F or m < 2:
        raise UsageError("oracle range exceeded")
    base = sum(1 << k for k in range(0, F + 1, m))
    free = [x for x in range(m + 1, F + 1) if x % m]
    out = set()
    for k in range(len(free) + 1):
        for A in combinations(free, k):
            mask = base | sum(1 << x for x in A)
            if is_closed(mask, F):
                out.add(to_semigroup(mask, F))
    return out

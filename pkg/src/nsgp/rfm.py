"""The family R(F, m) of numerical semigroups with Frobenius number F and multiplicity m."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import kernels
from .core import (
    MAX_VALUE,
    DomainError,
    NumericalSemigroup,
    UsageError,
    delta,
    from_generators,
)
from .covariety import (
    CovarietyDescriptor,
    CovarietyTree,
    _expand_parallel,
    adjoined_elements,
    grow,
)

log = logging.getLogger(__name__)


def _check_pair(F: int, m: int, *, allow_degenerate: bool = False) -> None:
    if allow_degenerate and m >= 2 and F == m - 1:
        return
    if m < 2 or F <= m:
        raise UsageError(f"R({F},{m}) needs 2 <= m < F")
    if F % m == 0:
        raise UsageError(f"R({F},{m}) needs m not dividing F (m divides F)")
    if F > MAX_VALUE:
        raise UsageError(f"F is capped at {MAX_VALUE}")


@dataclass(frozen=True)
class RfmFamily:
    F: int
    m: int
    delta: NumericalSemigroup = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_pair(self.F, self.m)
        object.__setattr__(self, "delta", delta(self.F, self.m))

    def __contains__(self, S: NumericalSemigroup) -> bool:
        return S.frobenius == self.F and S.multiplicity == self.m

    def descriptor(self) -> CovarietyDescriptor:
        return CovarietyDescriptor(self.delta, self.__contains__, f"R({self.F},{self.m})")

    def require(self, S: NumericalSemigroup) -> None:
        if S not in self:
            raise DomainError(f"semigroup does not belong to R({self.F},{self.m})")


@dataclass(frozen=True)
class RSet:
    """A set disjoint from Δ(F, m) and contained in some member of R(F, m)."""

    elements: tuple[int, ...]
    family: RfmFamily

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        if not is_rfm_set(self.elements, self.family):
            raise DomainError(f"{set(self.elements) or '{}'} is not an R({self.family.F},{self.family.m})-set")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _as_family(fam, m=None) -> RfmFamily:
    if isinstance(fam, RfmFamily):
        return fam
    return RfmFamily(fam, m)


def theta(S: NumericalSemigroup, F: int) -> list[int]:
    """Elements adjoined to S to obtain its children in R(F, m)."""
    return kernels.child_gaps(S.apery, F)


def rfm_enumerate(fam, m=None, *, threads: int = 1) -> CovarietyTree:
    """All of R(F, m), grown level by level from Δ(F, m)."""
    fam = _as_family(fam, m)
    F = fam.F

    def expand(tables):
        return kernels.expand_level(tables, F)

    return grow(fam.delta, expand, threads=threads, name=f"R({F},{fam.m})")


def genus_range(F: int, m: int) -> range:
    """Genera attained in R(F, m); also defined for F = m - 1."""
    _check_pair(F, m, allow_degenerate=True)
    if F == m - 1:
        return range(m - 1, m)
    if F < 2 * m:
        return range(m, F)
    return range((F + 2) // 2, F - F // m + 1)


def rfm_enumerate_genus(fam, g: int, m=None, *, threads: int = 1) -> list[NumericalSemigroup]:
    """R(F, m, g): members of genus g.

    For F > 2m the levels are grown from Δ(F, m) only down to genus g;
    otherwise the full family is filtered.
    """
    fam = _as_family(fam, m)
    F, m = fam.F, fam.m
    spectrum = genus_range(F, m)
    if g not in spectrum:
        log.warning("genus %d is outside the range %d..%d of R(%d,%d)", g, spectrum[0], spectrum[-1], F, m)
        return []
    if F < 2 * m:
        return rfm_enumerate(fam, threads=threads).at_genus(g)
    level = [fam.delta]
    expand = lambda tables: kernels.expand_level(tables, F)  # noqa: E731
    for _ in range(F - F // m - g):
        triples = _expand_parallel(expand, [S.apery for S in level], threads)
        level = [NumericalSemigroup._trusted(t) for _, _, t in triples]
    level.sort(key=lambda S: adjoined_elements(S, fam.delta))
    return level


def maximal_elements(F: int, m: int) -> list[NumericalSemigroup]:
    """Inclusion-maximal members of R(F, m)."""
    _check_pair(F, m, allow_degenerate=True)
    if F == m - 1:
        return [delta(F, m)]
    if F < 2 * m:
        ap = [0] + [m + i if m + i != F else F + m for i in range(1, m)]
        return [NumericalSemigroup(ap)]
    return rfm_enumerate_genus(RfmFamily(F, m), (F + 2) // 2)


def _generated_reaches(gens, target: int) -> bool:
    # target in the monoid spanned by gens (gcd may exceed 1)
    reach = 1
    mask = (1 << (target + 1)) - 1
    for g in gens:
        prev = 0
        while prev != reach:
            prev = reach
            reach = (reach | (reach << g)) & mask
    return bool(reach >> target & 1)


def is_rfm_set(X, fam, m=None) -> bool:
    """True iff X misses Δ(F, m) and lies in some member of R(F, m)."""
    fam = _as_family(fam, m)
    F, m = fam.F, fam.m
    X = set(X)
    if any(not (m < x < F) or x % m == 0 for x in X):
        return False
    return not _generated_reaches([m, *X], F)


def rfm_closure(X, fam=None) -> NumericalSemigroup:
    """R(F, m)[X] = <{m} ∪ X> ∪ {F+1, →}."""
    if not isinstance(X, RSet):
        if fam is None:
            raise UsageError("a family is required for a plain element set")
        X = RSet(tuple(X), _as_family(fam))
    F, m = X.family.F, X.family.m
    return from_generators([m, *X.elements, *range(F + 1, F + m + 1)])


def rfm_minimal_generators(S: NumericalSemigroup, fam=None) -> RSet:
    """The unique minimal R(F, m)-system of generators of S: msg(S) minus Δ(F, m)."""
    fam = _family_of(S, fam)
    X = tuple(x for x in S.minimal_generators() if x not in fam.delta)
    return RSet(X, fam)


def _family_of(S, fam) -> RfmFamily:
    if fam is None:
        fam = RfmFamily(S.frobenius, S.multiplicity)
    elif not isinstance(fam, RfmFamily):
        fam = RfmFamily(*fam)
    fam.require(S)
    return fam


def rfm_rank(S: NumericalSemigroup, fam=None) -> int:
    return len(rfm_minimal_generators(S, fam))


def is_mr(S: NumericalSemigroup) -> bool:
    """Maximal-rank test: F > 2m and the R(F, m)-rank equals m - 2."""
    if S.is_naturals:
        raise DomainError("N has no rank")
    F, m = S.frobenius, S.multiplicity
    if F <= 2 * m:
        return False
    gens = S.minimal_generators()
    e = len(gens)
    above = sum(1 for x in gens if x > F)
    verdict = (e == m - 1 and above == 0) or (e == m and above == 1)
    assert verdict == (rfm_rank(S) == m - 2)
    return verdict


def mr_witness(F: int, m: int) -> NumericalSemigroup:
    """<m, F-(m-1), ..., F-1> ∪ {F+1, →}, a member of R(F, m) of rank m - 2."""
    _check_pair(F, m)
    if F <= 2 * m:
        raise UsageError(f"an MR witness needs F > 2m, got F={F}, m={m}")
    return from_generators([m, *range(F - m + 1, F), *range(F + 1, F + m + 1)])

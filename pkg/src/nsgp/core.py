"""Numerical semigroups stored as an Apéry table keyed by the multiplicity."""

from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple

from . import kernels

#: Upper bound on generators and Frobenius numbers accepted from callers.
MAX_VALUE = 1 << 20


class NumericalSemigroupError(Exception):
    """Base class for errors raised by this package."""


class DomainError(NumericalSemigroupError, ValueError):
    """A mathematically undefined request (e.g. the ratio of N)."""


class UsageError(NumericalSemigroupError, ValueError):
    """Malformed or out-of-range input."""


class Invariants(NamedTuple):
    frobenius: int
    genus: int
    multiplicity: int
    ratio: int | None
    embedding_dimension: int


class Classification(NamedTuple):
    symmetric: bool
    pseudo_symmetric: bool
    irreducible: bool
    med: bool


class NumericalSemigroup:
    """A numerical semigroup S given by m = m(S) and Ap(S, m).

    ``apery[i]`` is the least element of S congruent to ``i`` modulo m.
    Instances are immutable; equality and hashing use the Apéry table.
    """

    __slots__ = ("multiplicity", "apery", "frobenius", "genus", "_msg")

    def __init__(self, apery: Iterable[int], *, check: bool = True):
        ap = tuple(int(w) for w in apery)
        if not ap:
            raise UsageError("empty Apéry table")
        m = len(ap)
        self.multiplicity = m
        self.apery = ap
        self.frobenius = max(ap) - m
        self.genus = sum((w - i) // m for i, w in enumerate(ap))
        self._msg = None
        if check:
            self.check()

    @classmethod
    def _trusted(cls, apery, genus=None) -> NumericalSemigroup:
        if genus is None:
            return cls(apery, check=False)
        # hot path: the caller vouches for the table and its genus
        self = object.__new__(cls)
        self.multiplicity = len(apery)
        self.apery = apery
        self.frobenius = max(apery) - self.multiplicity
        self.genus = genus
        self._msg = None
        return self

    def check(self) -> None:
        """Raise DomainError unless the table describes a numerical semigroup with multiplicity m."""
        ap, m = self.apery, self.multiplicity
        if ap[0] != 0:
            raise DomainError("Apéry table must start with 0")
        for i in range(1, m):
            if ap[i] % m != i:
                raise DomainError(f"apery[{i}] = {ap[i]} is not congruent to {i} mod {m}")
            if ap[i] <= m:
                raise DomainError(f"apery[{i}] = {ap[i]} is below the multiplicity {m}")
        for i in range(1, m):
            for j in range(i, m):
                if ap[(i + j) % m] > ap[i] + ap[j]:
                    raise DomainError("Apéry table is not closed under addition")

    # -- basic protocol -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.apery == other.apery

    def __hash__(self):
        return hash(self.apery)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.apery)})"

    def __str__(self):
        return render(self)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and x >= self.apery[x % self.multiplicity]

    contains = __contains__

    def __and__(self, other: NumericalSemigroup) -> NumericalSemigroup:
        return intersect(self, other)

    def __le__(self, other: NumericalSemigroup) -> bool:
        """Set inclusion."""
        return all(w in other for w in self.minimal_generators())

    def __lt__(self, other: NumericalSemigroup) -> bool:
        return self != other and self <= other

    @property
    def is_naturals(self) -> bool:
        return self.multiplicity == 1

    def _require_proper(self, what: str) -> None:
        if self.multiplicity == 1:
            raise DomainError(f"{what} is undefined for N")

    def elements(self, upto: int) -> list[int]:
        """Elements of S in [0, upto], ascending."""
        return [x for x in range(upto + 1) if x in self]

    def small_elements(self) -> list[int]:
        return self.elements(self.frobenius + 1)

    def gaps(self) -> list[int]:
        return [x for x in range(self.frobenius + 1) if x not in self]

    # -- invariants ------------------------------------------------------

    @property
    def ratio(self) -> int:
        """min{s in S : m does not divide s}."""
        self._require_proper("the ratio")
        return min(self.apery[1:])

    def minimal_generators(self) -> tuple[int, ...]:
        if self._msg is None:
            self._msg = tuple(kernels.minimal_generators(self.apery))
        return self._msg

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def invariants(self) -> Invariants:
        return Invariants(
            self.frobenius,
            self.genus,
            self.multiplicity,
            None if self.is_naturals else self.ratio,
            self.embedding_dimension,
        )

    def apery_set(self, n: int | None = None) -> list[int]:
        """Ap(S, n) listed by residue: entry i is the least element congruent to i mod n."""
        if n is None or n == self.multiplicity:
            return list(self.apery)
        if n <= 0 or n not in self:
            raise DomainError(f"{n} is not a nonzero element of the semigroup")
        out = [None] * n
        missing = n
        x = 0
        # F + 1, ..., F + n meet every class
        while missing:
            if x in self and out[x % n] is None:
                out[x % n] = x
                missing -= 1
            x += 1
        return out

    def pseudo_frobenius(self) -> list[int]:
        self._require_proper("PF")
        return kernels.pseudo_frobenius(self.apery)

    def special_gaps(self) -> list[int]:
        self._require_proper("SG")
        return kernels.special_gaps(self.apery)

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def classify(self) -> Classification:
        self._require_proper("classification")
        F, g = self.frobenius, self.genus
        m, e = self.multiplicity, self.embedding_dimension
        med = e == m
        if med:
            assert F == max(self.minimal_generators()) - m
        return Classification(
            symmetric=2 * g == F + 1,
            pseudo_symmetric=2 * g == F + 2,
            irreducible=g == (F + 2) // 2,
            med=med,
        )

    def a_set(self) -> tuple[tuple[int, ...], int]:
        """A(S) = {x in S : x < F(S), m does not divide x} and its size."""
        self._require_proper("A(S)")
        m, F = self.multiplicity, self.frobenius
        out = []
        for i in range(1, m):
            out.extend(range(self.apery[i], F, m))
        out.sort()
        return tuple(out), len(out)

    # -- one-element updates --------------------------------------------

    def adjoin(self, x: int) -> NumericalSemigroup:
        """S ∪ {x} for a special gap x.

        Ap(S ∪ {x}, m) is Ap(S, m) with x + m replaced by x. When x < m the
        multiplicity drops to x and the result is re-keyed from that table,
        which together with m generates S ∪ {x}.
        """
        m = self.multiplicity
        if m == 1 or x not in self.special_gaps():
            raise DomainError(f"{x} is not a special gap")
        ap = list(self.apery)
        assert ap[x % m] == x + m
        ap[x % m] = x
        if x > m:
            return NumericalSemigroup._trusted(ap)
        return from_generators([m, *ap[1:]])

    def remove_ratio(self) -> NumericalSemigroup:
        """S minus {r(S)}."""
        r = self.ratio
        m = self.multiplicity
        ap = list(self.apery)
        ap[r % m] = r + m
        return NumericalSemigroup._trusted(ap)

    def to_dict(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "apery": list(self.apery),
            "min_generators": list(self.minimal_generators()),
            "small_elements": self.small_elements(),
        }


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise UsageError("at least one generator is required")
    if gens[0] <= 0:
        raise UsageError("generators must be positive")
    if gens[-1] > MAX_VALUE:
        raise UsageError(f"generators are capped at {MAX_VALUE}")
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise DomainError(f"not a numerical semigroup: gcd of generators is {d}")
    return NumericalSemigroup._trusted(kernels.apery_from_generators(gens))


def from_dict(data: dict) -> NumericalSemigroup:
    return NumericalSemigroup(data["apery"])


def delta(F: int, m: int) -> NumericalSemigroup:
    """Δ(F, m) = <m> ∪ {F+1, →}; also accepts F = m - 1, giving {0, m, →}."""
    if m < 2 or F > MAX_VALUE:
        raise UsageError(f"Δ({F},{m}) needs 2 <= m and F <= {MAX_VALUE}")
    if F != m - 1:
        if F <= m:
            raise UsageError(f"Δ({F},{m}) needs m < F")
        if F % m == 0:
            raise UsageError(f"Δ({F},{m}) is undefined: m divides F")
    ap = [0] * m
    for y in range(F + 1, F + m + 1):
        if y % m:
            ap[y % m] = y
    return NumericalSemigroup._trusted(ap)


def intersect(S: NumericalSemigroup, T: NumericalSemigroup) -> NumericalSemigroup:
    if S.multiplicity == T.multiplicity:
        return NumericalSemigroup._trusted(max(a, b) for a, b in zip(S.apery, T.apery))
    top = max(S.frobenius, T.frobenius)
    m = next(x for x in range(1, top + 2) if x in S and x in T)
    ap = [None] * m
    ap[0] = 0
    missing = m - 1
    x = m + 1
    while missing:
        if ap[x % m] is None and x in S and x in T:
            ap[x % m] = x
            missing -= 1
        x += 1
    return NumericalSemigroup._trusted(ap)


def _join(xs) -> str:
    return ",".join(str(x) for x in xs)


def render(S: NumericalSemigroup) -> str:
    """Text form such as ``⟨4,9,10,11⟩ = {0,4,8,→}``."""
    return f"⟨{_join(S.minimal_generators())}⟩ = {render_elements(S)}"


def render_elements(S: NumericalSemigroup) -> str:
    return "{" + _join(S.small_elements()) + ",→}"

"""Ratio-covarieties generated by finitely many semigroups of equal multiplicity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DomainError, NumericalSemigroup, UsageError, delta, intersect
from .covariety import CovarietyDescriptor, CovarietyTree, DescriptorError, enumerate_tree


@dataclass(frozen=True)
class OmegaChain:
    source: NumericalSemigroup
    target_delta: NumericalSemigroup
    chain: tuple[NumericalSemigroup, ...]

    @property
    def length(self) -> int:
        """Number of ratio removals from the source down to Δ(F, m)."""
        return len(self.chain) - 1

    def __iter__(self):
        return iter(self.chain)

    def __len__(self):
        return len(self.chain)


def _target(F: int, m: int) -> NumericalSemigroup:
    if F % m == 0:
        raise DomainError(f"Δ({F},{m}) is undefined: m divides F")
    try:
        return delta(F, m)
    except UsageError as exc:
        raise DomainError(str(exc)) from None


def omega_chain(S: NumericalSemigroup, F: int, m: int) -> OmegaChain:
    """Remove ratios from S until reaching Δ(F, m).

    While F(S) < F the Frobenius number grows along the way, since the
    ratios removed eventually exceed F(S).
    """
    if S.multiplicity != m:
        raise DomainError(f"multiplicity {S.multiplicity} differs from {m}")
    if S.frobenius > F:
        raise DomainError(f"F(S) = {S.frobenius} exceeds {F}")
    target = _target(F, m)
    chain = [S]
    while chain[-1] != target:
        nxt = chain[-1].remove_ratio()
        if not target <= nxt:
            raise AssertionError("ratio removal left Δ(F, m)")
        chain.append(nxt)
    return OmegaChain(S, target, tuple(chain))


def _family_parameters(family: Sequence[NumericalSemigroup]) -> tuple[int, int]:
    if not family:
        raise UsageError("at least one semigroup is required")
    if any(S.is_naturals for S in family):
        raise DomainError("N has no ratio-covariety")
    ms = {S.multiplicity for S in family}
    if len(ms) != 1:
        raise DomainError(f"mixed multiplicities {sorted(ms)}")
    return max(S.frobenius for S in family), ms.pop()


def generated_members(family: Sequence[NumericalSemigroup]) -> set[NumericalSemigroup]:
    """All intersections of one chain member per index over nonempty index sets.

    Built one chain at a time: after chain j the pool holds the
    intersections over every nonempty subset of the first j indices.
    """
    F, m = _family_parameters(family)
    pool: set[NumericalSemigroup] = set()
    for S in family:
        chain = omega_chain(S, F, m).chain
        pool |= {intersect(T, U) for T in pool for U in chain} | set(chain)
    return pool


def generated_covariety(family: Sequence[NumericalSemigroup]) -> CovarietyTree:
    """The least ratio-covariety with minimum Δ(F, m) containing ``family``."""
    F, m = _family_parameters(family)
    pool = generated_members(family)
    names = ", ".join("⟨" + ",".join(map(str, S.minimal_generators())) + "⟩" for S in family)
    R = CovarietyDescriptor(_target(F, m), pool.__contains__, f"<{names}>")
    tree = enumerate_tree(R)
    if len(tree) != len(pool):
        raise DescriptorError("generated family is not closed under ratio removal")
    return tree

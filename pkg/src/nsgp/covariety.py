"""Ratio-covarieties: descriptors, the tree of ratio removals, and chains.

A ratio-covariety is described by its minimum and a membership predicate.
Its members form a tree rooted at the minimum in which the parent of S is
S minus its ratio, so the whole family can be grown from the root by
adjoining special gaps that lie strictly between the multiplicity and the
ratio.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterable, Sequence

from . import kernels
from .core import (
    DomainError,
    NumericalSemigroup,
    NumericalSemigroupError,
    delta,
    intersect,
)


class DescriptorError(NumericalSemigroupError):
    """The descriptor does not behave like a ratio-covariety."""


@dataclass(frozen=True)
class CovarietyDescriptor:
    minimum: NumericalSemigroup
    member: Callable[[NumericalSemigroup], bool]
    name: str = "R"

    def __post_init__(self):
        if self.minimum.is_naturals:
            raise DescriptorError("the minimum must not be N")
        if not self.member(self.minimum):
            raise DescriptorError("the minimum is not a member")

    def __contains__(self, S: NumericalSemigroup) -> bool:
        return bool(self.member(S))


def finite_descriptor(members: Iterable[NumericalSemigroup], name: str = "R") -> CovarietyDescriptor:
    """Descriptor of an explicitly listed family; the minimum is the largest-genus member."""
    pool = frozenset(members)
    if not pool:
        raise DescriptorError("empty family")
    minimum = max(pool, key=lambda S: (S.genus, S.apery))
    return CovarietyDescriptor(minimum, pool.__contains__, name)


def adjoined_elements(S: NumericalSemigroup, root: NumericalSemigroup) -> tuple[int, ...]:
    """Elements of S not in ``root`` (S must contain root and share its multiplicity)."""
    m = root.multiplicity
    out = []
    for i in range(1, m):
        out.extend(range(S.apery[i], root.apery[i], m))
    out.sort()
    return tuple(out)


@dataclass
class CovarietyTree:
    """Members of a ratio-covariety in canonical order with tree edges.

    Vertices are sorted by genus descending (so BFS level k holds the
    members of genus g(root) - k) and, within a level, by the sorted tuple
    of elements they add to the root. ``parents[i]`` is the index of
    S minus r(S) and ``labels[i]`` is r(S), the element adjoined along the
    edge; both are None for the root.
    """

    vertices: list[NumericalSemigroup]
    parents: list[int | None]
    labels: list[int | None]
    name: str = "R"
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    @property
    def root(self) -> NumericalSemigroup:
        return self.vertices[0]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, S):
        return S in self.index

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {S: i for i, S in enumerate(self.vertices)}
        return self._index

    def members(self) -> frozenset:
        return frozenset(self.vertices)

    def adjoined(self, i: int) -> tuple[int, ...]:
        return adjoined_elements(self.vertices[i], self.root)

    def children_of(self, i: int) -> list[int]:
        return [j for j, p in enumerate(self.parents) if p == i]

    def levels(self) -> list[list[NumericalSemigroup]]:
        out = []
        for _, grp in itertools.groupby(self.vertices, key=lambda S: S.genus):
            out.append(list(grp))
        return out

    def at_genus(self, g: int) -> list[NumericalSemigroup]:
        return [S for S in self.vertices if S.genus == g]

    def path_to_root(self, i: int) -> list[int]:
        path = [i]
        while self.parents[path[-1]] is not None:
            path.append(self.parents[path[-1]])
        return path

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name}" {{', "  rankdir=BT;", "  node [shape=box];"]
        for i, S in enumerate(self.vertices):
            gens = ",".join(str(g) for g in S.minimal_generators())
            lines.append(f'  n{i} [label="⟨{gens}⟩"];')
        for i, (p, x) in enumerate(zip(self.parents, self.labels)):
            if p is not None:
                lines.append(f'  n{i} -> n{p} [label="{x}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "size": len(self),
            "vertices": [
                dict(S.to_dict(), parent=p, adjoined=x)
                for S, p, x in zip(self.vertices, self.parents, self.labels)
            ],
        }


def children(S: NumericalSemigroup, R: CovarietyDescriptor) -> list[NumericalSemigroup]:
    """Children of S in the tree of R, by adjoined element ascending."""
    if S.is_naturals or S not in R:
        raise DomainError("not a member of the covariety")
    out = []
    m = S.multiplicity
    for x in kernels.child_gaps(S.apery):
        ap = list(S.apery)
        ap[x % m] = x
        T = NumericalSemigroup._trusted(ap)
        if T in R:
            out.append(T)
    return out


def _expand_parallel(expand, level, threads):
    if threads <= 1 or len(level) < 2 * threads:
        return expand(level)
    size = -(-len(level) // threads)
    chunks = [level[k : k + size] for k in range(0, len(level), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(expand, chunks))
    out = []
    for k, part in enumerate(parts):
        offset = k * size
        out.extend((p + offset, x, child) for p, x, child in part)
    return out


def grow(root: NumericalSemigroup, expand, *, threads: int = 1, name: str = "R") -> CovarietyTree:
    """Level-synchronous growth from ``root``.

    ``expand(tables)`` maps a list of Apéry tables to
    ``(local_parent_index, x, child_table)`` triples.
    """
    vertices = [root]
    parents: list[int | None] = [None]
    labels: list[int | None] = [None]
    level = [root]
    keys = [()]
    offset = 0
    while level:
        triples = _expand_parallel(expand, [S.apery for S in level], threads)
        nxt = []
        for p, x, table in triples:
            if min(table[1:]) != x:
                raise DescriptorError(f"ratio of a child differs from the adjoined element {x}")
            # x lies below every element the parent adds to the root
            nxt.append(((x,) + keys[p], table, offset + p, x))
        nxt.sort(key=lambda t: t[0])
        offset = len(vertices)
        genus = level[0].genus - 1
        level = []
        for _, table, p, x in nxt:
            child = NumericalSemigroup._trusted(table, genus)
            level.append(child)
            vertices.append(child)
            parents.append(p)
            labels.append(x)
        keys = [t[0] for t in nxt]
    tree = CovarietyTree(vertices, parents, labels, name)
    if len(tree.index) != len(vertices):
        raise DescriptorError("a member was produced twice")
    return tree


def _member_expand(R: CovarietyDescriptor):
    def expand(tables):
        out = []
        for p, x, table in kernels.expand_level(tables):
            if R.member(NumericalSemigroup._trusted(table)):
                out.append((p, x, table))
        return out

    return expand


def _layout(root, records, name):
    # records: child -> (parent, x); canonical order as in grow()
    keyed = sorted(
        ((-S.genus, adjoined_elements(S, root)), S) for S in records
    )
    vertices = [root] + [S for _, S in keyed]
    index = {S: i for i, S in enumerate(vertices)}
    parents = [None] + [index[records[S][0]] for S in vertices[1:]]
    labels = [None] + [records[S][1] for S in vertices[1:]]
    return CovarietyTree(vertices, parents, labels, name)


def enumerate_tree(
    R: CovarietyDescriptor,
    *,
    threads: int = 1,
    strategy: str = "bfs",
    check_axioms: bool = False,
) -> CovarietyTree:
    """All members of R arranged as its tree of ratio removals."""
    if strategy == "bfs":
        tree = grow(R.minimum, _member_expand(R), threads=threads, name=R.name)
    elif strategy == "dfs":
        records = {}
        stack = [R.minimum]
        while stack:
            S = stack.pop()
            for T in children(S, R):
                if T.remove_ratio() != S:
                    raise DescriptorError("child does not return to its parent")
                if T in records:
                    raise DescriptorError("a member was produced twice")
                records[T] = (S, T.ratio)
                stack.append(T)
        tree = _layout(R.minimum, records, R.name)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if check_axioms:
        problems = verify_axioms(tree.vertices)
        if problems:
            raise DescriptorError("; ".join(problems))
    return tree


def verify_axioms(members: Sequence[NumericalSemigroup]) -> list[str]:
    """Exhaustive check of the three ratio-covariety axioms; returns violations."""
    pool = set(members)
    problems = []
    if not pool:
        return ["empty family"]
    minimum = max(pool, key=lambda S: S.genus)
    if not all(minimum <= S for S in pool):
        problems.append("no minimum")
    for S, T in itertools.combinations(sorted(pool, key=lambda S: S.apery), 2):
        if intersect(S, T) not in pool:
            problems.append(f"{S} ∩ {T} is not a member")
    for S in pool:
        if S != minimum and (S.is_naturals or S.remove_ratio() not in pool):
            problems.append(f"ratio removal of {S} is not a member")
    return problems


def ratio_chain(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """S = S_0 ⊋ S_1 ⊋ ... ⊋ S_a(S) = Δ(F(S), m(S)), removing the ratio each step."""
    _, a = S.a_set()
    chain = [S]
    for _ in range(a):
        chain.append(chain[-1].remove_ratio())
    assert chain[-1] == delta(S.frobenius, S.multiplicity)
    return chain


# -- R-sets and closures over an explicit member list -------------------


def closure(members: Sequence[NumericalSemigroup], X: Iterable[int]) -> NumericalSemigroup:
    """R[X]: intersection of all members containing X."""
    X = set(X)
    minimum = max(members, key=lambda S: S.genus)
    if any(x in minimum for x in X):
        raise DomainError("not an R-set: meets the minimum")
    containing = [S for S in members if all(x in S for x in X)]
    if not containing:
        raise DomainError("not an R-set: no member contains it")
    return reduce(intersect, containing)


def minimal_systems(members: Sequence[NumericalSemigroup], S: NumericalSemigroup) -> list[tuple[int, ...]]:
    """Every minimal R-system of generators of S (exhaustive; small families only)."""
    minimum = max(members, key=lambda T: T.genus)
    pool = [x for x in range(minimum.frobenius + 1) if x in S and x not in minimum]
    found = []
    for k in range(len(pool) + 1):
        for X in itertools.combinations(pool, k):
            if any(set(Y) <= set(X) for Y in found):
                continue
            if closure(members, X) == S:
                found.append(X)
    return found


def rank(members: Sequence[NumericalSemigroup], S: NumericalSemigroup) -> int:
    return min(len(X) for X in minimal_systems(members, S))

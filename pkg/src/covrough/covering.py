"""Universes, coverings and the set-based approximation operators.

The functions at the bottom of this module (:func:`neighborhood`,
:func:`oracle_approx`) work on plain Python sets.  They are slow on purpose
and serve as ground truth for the matrix implementations in ``charmat``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .boolmat import BoolMatrix, BoolVector, pack_bits

OPERATORS = ("second", "fifth", "sixth")


class InvalidCoveringError(ValueError):
    """A family of blocks is not a covering of its universe."""


class UnknownCoveringError(KeyError):
    def __str__(self) -> str:
        return f"unknown covering {self.args[0]!r}"


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(str(n) for n in self.names))
        if not self.names:
            raise InvalidCoveringError("universe must contain at least one object")
        if len(set(self.names)) != len(self.names):
            raise InvalidCoveringError("universe labels must be unique")

    def __len__(self) -> int:
        return len(self.names)

    @classmethod
    def of_size(cls, n: int, prefix: str = "x") -> Universe:
        """Labels ``x1 .. xn``."""
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)))


@dataclass(frozen=True)
class Covering:
    """A named family of blocks; each block is a sorted tuple of object indices.

    Block order is declaration order.  Duplicate blocks are allowed.
    """

    name: str
    blocks: tuple[tuple[int, ...], ...]
    # coordinate form of the membership matrix, built once
    _rows: np.ndarray = field(init=False, repr=False, compare=False)
    _cols: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(tuple(sorted(set(int(x) for x in b))) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        sizes = [len(b) for b in blocks]
        rows = np.fromiter((x for b in blocks for x in b), dtype=np.int64, count=sum(sizes))
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", np.repeat(np.arange(len(blocks)), sizes))

    def __len__(self) -> int:
        return len(self.blocks)

    def memberships(self, x: int) -> frozenset[int]:
        """Indices of the blocks containing object ``x``."""
        return frozenset(j for j, b in enumerate(self.blocks) if x in b)


def validate_covering(cov: Covering, n: int) -> None:
    """Raise :class:`InvalidCoveringError` describing the first violation."""
    if not cov.blocks:
        raise InvalidCoveringError(f"covering {cov.name!r} has no blocks")
    seen: set[int] = set()
    for j, block in enumerate(cov.blocks):
        if not block:
            raise InvalidCoveringError(f"covering {cov.name!r}: block {j} is empty")
        bad = [x for x in block if not 0 <= x < n]
        if bad:
            raise InvalidCoveringError(
                f"covering {cov.name!r}: block {j} has out-of-range index {bad[0]} (universe size {n})"
            )
        seen.update(block)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise InvalidCoveringError(f"covering {cov.name!r}: object {missing} is not covered")


@dataclass(frozen=True)
class CoveringSpace:
    """A universe together with one or more named coverings of it.

    Construction validates every covering, so an existing instance is always
    a valid covering approximation space.
    """

    universe: Universe
    coverings: tuple[Covering, ...]

    def __post_init__(self):
        object.__setattr__(self, "coverings", tuple(self.coverings))
        validate(self)

    @classmethod
    def build(cls, names: Sequence[str] | int, coverings: dict[str, Iterable[Iterable[int]]]) -> CoveringSpace:
        """Convenience constructor: ``build(4, {"C": [[0, 3], [0, 1, 3], [2, 3]]})``."""
        universe = Universe.of_size(names) if isinstance(names, int) else Universe(tuple(names))
        covs = tuple(Covering(name, tuple(tuple(b) for b in blocks)) for name, blocks in coverings.items())
        return cls(universe, covs)

    @property
    def n(self) -> int:
        return len(self.universe)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.coverings)

    def covering(self, name: str) -> Covering:
        for c in self.coverings:
            if c.name == name:
                return c
        raise UnknownCoveringError(name)

    def select(self, selector: Iterable[str] | None = None) -> tuple[Covering, ...]:
        """Coverings named by ``selector``, in the selector's order; all when ``None``."""
        if selector is None:
            return self.coverings
        chosen = tuple(self.covering(name) for name in selector)
        if not chosen:
            raise ValueError("covering selector must not be empty")
        return chosen

    def blocks(self, selector: Iterable[str] | None = None) -> list[tuple[int, ...]]:
        return [b for c in self.select(selector) for b in c.blocks]

    def replace(self, *covs: Covering) -> CoveringSpace:
        """Copy with the given coverings swapped in by name."""
        by_name = {c.name: c for c in covs}
        for name in by_name:
            self.covering(name)
        return CoveringSpace(self.universe, tuple(by_name.get(c.name, c) for c in self.coverings))


def validate(space: CoveringSpace) -> None:
    if not space.coverings:
        raise InvalidCoveringError("a covering space needs at least one covering")
    names = [c.name for c in space.coverings]
    if len(set(names)) != len(names):
        raise InvalidCoveringError("covering names must be unique")
    for cov in space.coverings:
        validate_covering(cov, space.n)


def matrix_rep(space: CoveringSpace, selector: Iterable[str] | None = None) -> BoolMatrix:
    """Membership matrix: entry ``(i, j)`` is 1 iff object ``i`` lies in block ``j``.

    Columns run over the blocks of the selected coverings, concatenated in
    selector order.
    """
    covs = space.select(selector)
    m = sum(len(c) for c in covs)
    bits = np.zeros(space.n * m, dtype=bool)
    offset = 0
    for c in covs:
        bits[c._rows * m + (c._cols + offset)] = True
        offset += len(c)
    return BoolMatrix(space.n, m, pack_bits(bits.reshape(space.n, m)))


def char_vector(members: Iterable[int], n: int) -> BoolVector:
    return BoolVector.from_indices(members, n)


class Approx(NamedTuple):
    upper: BoolVector | frozenset[int]
    lower: BoolVector | frozenset[int]


def neighborhood(space: CoveringSpace, selector: Iterable[str] | None, x: int) -> frozenset[int]:
    """Intersection of every selected block that contains ``x``."""
    if not 0 <= x < space.n:
        raise IndexError(f"object {x} out of range")
    result = set(range(space.n))
    for block in space.blocks(selector):
        if x in block:
            result.intersection_update(block)
    return frozenset(result)


def oracle_approx(
    space: CoveringSpace, selector: Iterable[str] | None, X: Iterable[int], op: str
) -> Approx:
    """Upper and lower approximations of ``X`` straight from the set definitions."""
    X = frozenset(X)
    U = frozenset(range(space.n))
    if not X <= U:
        raise IndexError("set contains indices outside the universe")
    selector = None if selector is None else list(selector)

    if op == "second":
        blocks = [frozenset(b) for b in space.blocks(selector)]

        def sh(S: frozenset[int]) -> frozenset[int]:
            return frozenset().union(*(b for b in blocks if b & S))

        return Approx(sh(X), U - sh(U - X))

    hoods = [neighborhood(space, selector, x) for x in range(space.n)]
    if op == "fifth":
        upper = frozenset(x for x in U if hoods[x] & X)
        lower = frozenset(x for x in U if hoods[x] <= X)
        return Approx(upper, lower)
    if op == "sixth":
        upper = frozenset().union(*(h for h in hoods if h & X))
        lower = frozenset().union(*(h for h in hoods if h <= X))
        return Approx(upper, lower)
    raise ValueError(f"unknown operator {op!r}; expected one of {OPERATORS}")

"""Type-1 and type-2 reducts of covering decision systems.

A subfamily ``P`` of the coverings *preserves* the decision when, for every
decision class ``D``, the upper and lower approximations of ``D`` computed
from ``P`` equal those computed from the whole family.  Type-1 uses Gamma
with the second operators, type-2 uses Pi with the fifth operators.  A
reduct is a preserving subfamily none of whose nonempty proper subfamilies
preserves.

Gamma only grows and Pi only shrinks as coverings are added, so upper
approximations are monotone and lower ones antitone in the subfamily.  Hence
once removing a covering breaks preservation it breaks it for every smaller
subfamily too, and a single greedy pass yields a reduct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolmat import BoolMatrix, BoolVector
from .charmat import CharMatrices, fifth_approx, gamma_of, pi_of, second_approx
from .covering import Approx, CoveringSpace, matrix_rep
from .dynamic import UpdateEvent, apply_update, refresh

EXHAUSTIVE_LIMIT = 20


class DecisionError(ValueError):
    pass


@dataclass(frozen=True)
class DecisionSystem:
    space: CoveringSpace
    decision: tuple[frozenset[int], ...]

    def __post_init__(self):
        classes = tuple(frozenset(int(x) for x in d) for d in self.decision)
        object.__setattr__(self, "decision", classes)
        seen: set[int] = set()
        for i, d in enumerate(classes):
            if not d:
                raise DecisionError(f"decision class {i} is empty")
            if d & seen:
                raise DecisionError(f"decision class {i} overlaps an earlier class")
            if not all(0 <= x < self.space.n for x in d):
                raise DecisionError(f"decision class {i} has an index outside the universe")
            seen |= d
        if len(seen) != self.space.n:
            raise DecisionError("decision classes do not cover the universe")

    def vectors(self) -> list[BoolVector]:
        return [BoolVector.from_indices(d, self.space.n) for d in self.decision]


@dataclass(frozen=True)
class Reduct:
    kind: int
    members: tuple[str, ...]
    certificate: tuple[Approx, ...]

    def __contains__(self, name: str) -> bool:
        return name in self.members


def _check_kind(kind: int) -> None:
    if kind not in (1, 2):
        raise ValueError(f"reduct kind must be 1 or 2, got {kind!r}")


def _matrix(space: CoveringSpace, subset: Sequence[str], kind: int) -> BoolMatrix:
    m = matrix_rep(space, subset)
    return gamma_of(m) if kind == 1 else pi_of(m)


def _profile(mat: BoolMatrix, classes: list[BoolVector], kind: int) -> tuple[Approx, ...]:
    op = second_approx if kind == 1 else fifth_approx
    return tuple(op(mat, d) for d in classes)


def target_profile(ds: DecisionSystem, kind: int, full: CharMatrices | None = None) -> tuple[Approx, ...]:
    """Approximations of every decision class under the whole covering family."""
    _check_kind(kind)
    if full is None:
        mat = _matrix(ds.space, ds.space.names, kind)
    else:
        mat = full.gamma if kind == 1 else full.pi
    return _profile(mat, ds.vectors(), kind)


def preserves(
    ds: DecisionSystem, subset: Iterable[str], kind: int, target: tuple[Approx, ...] | None = None
) -> bool:
    subset = list(subset)
    _check_kind(kind)
    if not subset:
        raise ValueError("subfamily must be nonempty")
    if target is None:
        target = target_profile(ds, kind)
    return _profile(_matrix(ds.space, subset, kind), ds.vectors(), kind) == target


def is_reduct(ds: DecisionSystem, subset: Iterable[str], kind: int) -> bool:
    """Check both defining conditions by brute force over all nonempty proper subfamilies."""
    subset = list(subset)
    target = target_profile(ds, kind)
    if not preserves(ds, subset, kind, target):
        return False
    return not any(
        preserves(ds, sub, kind, target)
        for r in range(1, len(subset))
        for sub in itertools.combinations(subset, r)
    )


def find_reduct(ds: DecisionSystem, kind: int, mode: str = "greedy", full: CharMatrices | None = None) -> Reduct:
    """One reduct of ``ds``.

    ``greedy`` drops coverings in declaration order whenever preservation
    survives.  ``exhaustive`` returns a minimum-cardinality reduct, ties
    broken by the sorted tuple of names; it is limited to 20 coverings.
    ``full`` may carry precomputed matrices of the whole family.
    """
    target = target_profile(ds, kind, full)
    names = list(ds.space.names)
    if mode == "greedy":
        members = names[:]
        for name in names:
            if len(members) == 1:
                break
            trial = [c for c in members if c != name]
            if preserves(ds, trial, kind, target):
                members = trial
    elif mode == "exhaustive":
        if len(names) > EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} coverings")
        members = None
        for r in range(1, len(names) + 1):
            hits = [sorted(s) for s in itertools.combinations(names, r) if preserves(ds, s, kind, target)]
            if hits:
                best = min(hits)
                members = [c for c in names if c in best]
                break
        assert members is not None  # the full family always preserves
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Reduct(kind, tuple(members), target)


def reduct_after_update(
    ds: DecisionSystem,
    ev: UpdateEvent,
    kind: int,
    mode: str = "greedy",
    full: CharMatrices | None = None,
) -> Reduct:
    """Apply ``ev`` and search the revised system.

    The whole-family matrices are carried over incrementally from ``full``
    (built here when omitted) instead of being rebuilt.
    """
    if full is None:
        full = CharMatrices.build(ds.space, ds.space.names)
    else:
        full.ensure_fresh(ds.space)
    space_new = apply_update(ds.space, ev)
    full_new = refresh(full, space_new, ev.obj)
    return find_reduct(DecisionSystem(space_new, ds.decision), kind, mode, full_new)

"""Single-object revisions and incremental maintenance of Gamma / Pi.

Revising the blocks of one object ``x_k`` only changes row ``k`` of the
membership matrix, so only row and column ``k`` of either characteristic
matrix can change.  ``update_gamma`` and ``update_pi`` recompute exactly
those two lines from the new membership matrix; everything else is reused.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .boolmat import (
    BoolMatrix,
    BoolVector,
    ShapeError,
    bool_matvec,
    circle_matvec,
    rows_containing,
    set_col_,
    set_row_,
)
from .charmat import CharMatrices, approx, fingerprint, gamma_of, pi_of
from .covering import Approx, Covering, CoveringSpace, InvalidCoveringError, matrix_rep


class InvalidUpdateError(ValueError):
    """An update event is malformed or would break the covering property."""


@dataclass(frozen=True)
class UpdateEvent:
    """New block memberships of object ``obj``.

    ``memberships`` maps a covering name to the indices of the blocks that
    contain the object after the revision.  Coverings not mentioned keep
    their current blocks.
    """

    obj: int
    memberships: Mapping[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "memberships", {name: frozenset(int(j) for j in b) for name, b in self.memberships.items()}
        )

    def __hash__(self) -> int:
        return hash((self.obj, tuple(sorted(self.memberships.items()))))

    @classmethod
    def between(cls, before: CoveringSpace, after: CoveringSpace, obj: int) -> UpdateEvent:
        """Event turning ``before`` into ``after``, which must differ only in object ``obj``."""
        return cls(obj, {c.name: after.covering(c.name).memberships(obj) for c in before.coverings})


def apply_update(space: CoveringSpace, ev: UpdateEvent) -> CoveringSpace:
    k = ev.obj
    if not 0 <= k < space.n:
        raise InvalidUpdateError(f"object {k} out of range for universe of size {space.n}")
    revised = []
    for name, members in ev.memberships.items():
        try:
            cov = space.covering(name)
        except KeyError as exc:
            raise InvalidUpdateError(str(exc)) from None
        bad = [j for j in members if not 0 <= j < len(cov)]
        if bad:
            raise InvalidUpdateError(f"covering {name!r} has no block {bad[0]}")
        blocks = []
        for j, block in enumerate(cov.blocks):
            s = set(block)
            if j in members:
                s.add(k)
            else:
                s.discard(k)
            blocks.append(tuple(s))
        revised.append(Covering(name, tuple(blocks)))
    try:
        return space.replace(*revised)
    except InvalidCoveringError as exc:
        raise InvalidUpdateError(f"update rejected: {exc}") from None


def _check(old: BoolMatrix, m_new: BoolMatrix, k: int) -> None:
    n = m_new.rows
    if old.shape != (n, n):
        raise ShapeError(f"characteristic matrix {old.shape} does not match {n} objects")
    if not 0 <= k < n:
        raise IndexError(f"object {k} out of range for {n} objects")


def gamma_line(m_new: BoolMatrix, k: int) -> BoolVector:
    """Row ``k`` of the new Gamma: ``row_k . M^T`` (also column ``k`` by symmetry)."""
    return bool_matvec(m_new, m_new.row(k))


def pi_lines(m_new: BoolMatrix, k: int) -> tuple[BoolVector, BoolVector]:
    """Row ``k`` (``row_k (.) M^T``) and column ``k`` (``M (.) row_k^T``) of the new Pi."""
    r = m_new.row(k)
    return rows_containing(m_new, r), circle_matvec(m_new, r)


def update_gamma(gamma_old: BoolMatrix, m_new: BoolMatrix, k: int, *, inplace: bool = False) -> BoolMatrix:
    """Gamma after object ``k`` changed, from the old Gamma and the new membership matrix.

    With ``inplace=True`` ``gamma_old`` is overwritten and returned; the
    caller must hold the only reference.
    """
    _check(gamma_old, m_new, k)
    line = gamma_line(m_new, k)
    out = gamma_old if inplace else gamma_old.copy()
    set_row_(out, k, line)
    set_col_(out, k, line)
    return out


def update_pi(pi_old: BoolMatrix, m_new: BoolMatrix, k: int, *, inplace: bool = False) -> BoolMatrix:
    """Pi after object ``k`` changed.  Pi is not symmetric, so both lines are recomputed."""
    _check(pi_old, m_new, k)
    row, col = pi_lines(m_new, k)
    out = pi_old if inplace else pi_old.copy()
    set_row_(out, k, row)
    set_col_(out, k, col)
    return out


def _delta(old: BoolMatrix, row: BoolVector, col: BoolVector, k: int) -> np.ndarray:
    old_bits = old.bits().astype(np.int8)
    delta = np.zeros_like(old_bits)
    delta[k, :] = row.bits().astype(np.int8) - old_bits[k, :]
    delta[:, k] = col.bits().astype(np.int8) - old_bits[:, k]
    return delta


def delta_gamma(gamma_old: BoolMatrix, m_new: BoolMatrix, k: int) -> np.ndarray:
    """The additive correction ``Gamma_new - Gamma_old`` as an int array with -1/0/1 entries.

    Debug aid only; ``update_gamma`` never materializes it.
    """
    _check(gamma_old, m_new, k)
    line = gamma_line(m_new, k)
    return _delta(gamma_old, line, line, k)


def delta_pi(pi_old: BoolMatrix, m_new: BoolMatrix, k: int) -> np.ndarray:
    _check(pi_old, m_new, k)
    row, col = pi_lines(m_new, k)
    return _delta(pi_old, row, col, k)


def refresh(cm: CharMatrices, space_new: CoveringSpace, k: int) -> CharMatrices:
    """Incrementally carry ``cm`` over to ``space_new`` after object ``k`` was revised."""
    m_new = matrix_rep(space_new, cm.selector)
    return CharMatrices(
        update_gamma(cm.gamma, m_new, k),
        update_pi(cm.pi, m_new, k),
        cm.selector,
        fingerprint(space_new, cm.selector),
    )


def incremental_approx(
    old: BoolMatrix, space_new: CoveringSpace, selector: Iterable[str] | None, k: int, x: BoolVector, op: str
) -> Approx:
    """Approximations in the revised space from the pre-revision matrix.

    ``old`` is Gamma for ``op == "second"`` and Pi otherwise.
    """
    m_new = matrix_rep(space_new, selector)
    if op == "second":
        return approx(update_gamma(old, m_new, k), None, x, op)
    return approx(None, update_pi(old, m_new, k), x, op)


def recompute_baseline(space_new: CoveringSpace, selector: Iterable[str] | None, x: BoolVector, op: str) -> Approx:
    """Approximations in ``space_new`` with the characteristic matrix rebuilt from scratch."""
    m_new = matrix_rep(space_new, selector)
    if op == "second":
        return approx(gamma_of(m_new), None, x, op)
    return approx(None, pi_of(m_new), x, op)

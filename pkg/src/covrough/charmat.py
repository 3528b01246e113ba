"""Type-1 / type-2 characteristic matrices and the matrix-form operators."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

from .boolmat import (
    BoolMatrix,
    BoolVector,
    bool_dot,
    bool_matvec,
    bool_vecmat,
    circle_dot,
    circle_matvec,
    transpose,
)
from .covering import OPERATORS, Approx, CoveringSpace, matrix_rep


class StaleMatricesError(RuntimeError):
    """Characteristic matrices no longer match the space they are used with."""


def gamma_of(m: BoolMatrix) -> BoolMatrix:
    return bool_dot(m, transpose(m))


def pi_of(m: BoolMatrix) -> BoolMatrix:
    return circle_dot(m, transpose(m))


def build_gamma(space: CoveringSpace, selector: Iterable[str] | None = None) -> BoolMatrix:
    """``Gamma = M . M^T``; entry ``(i, j)`` is 1 iff some block holds both objects."""
    return gamma_of(matrix_rep(space, selector))


def build_pi(space: CoveringSpace, selector: Iterable[str] | None = None) -> BoolMatrix:
    """``Pi = M (.) M^T``; row ``i`` is the indicator of the neighborhood of ``x_i``."""
    return pi_of(matrix_rep(space, selector))


def second_approx(gamma: BoolMatrix, x: BoolVector) -> Approx:
    return Approx(bool_matvec(gamma, x), circle_matvec(gamma, x))


def fifth_approx(pi: BoolMatrix, x: BoolVector) -> Approx:
    return Approx(bool_matvec(pi, x), circle_matvec(pi, x))


def sixth_approx(pi: BoolMatrix, x: BoolVector) -> Approx:
    """Unions of the neighborhoods that meet / fit inside ``x``.

    The fifth operators flag which objects qualify; ``Pi^T`` then takes the
    union of their neighborhoods (rows of ``pi``).
    """
    fifth = fifth_approx(pi, x)
    return Approx(bool_vecmat(fifth.upper, pi), bool_vecmat(fifth.lower, pi))


def approx(gamma: BoolMatrix | None, pi: BoolMatrix | None, x: BoolVector, op: str) -> Approx:
    if op == "second":
        return second_approx(gamma, x)
    if op == "fifth":
        return fifth_approx(pi, x)
    if op == "sixth":
        return sixth_approx(pi, x)
    raise ValueError(f"unknown operator {op!r}; expected one of {OPERATORS}")


def fingerprint(space: CoveringSpace, selector: Iterable[str] | None = None) -> str:
    h = hashlib.sha256()
    h.update(repr(space.universe.names).encode())
    for cov in space.select(selector):
        h.update(cov.name.encode() + b"\0")
        h.update(repr(cov.blocks).encode())
    return h.hexdigest()


@dataclass(frozen=True)
class CharMatrices:
    """``gamma`` and ``pi`` of one covering selection, tagged with the space they came from."""

    gamma: BoolMatrix
    pi: BoolMatrix
    selector: tuple[str, ...] | None
    source: str

    @classmethod
    def build(cls, space: CoveringSpace, selector: Iterable[str] | None = None) -> CharMatrices:
        sel = None if selector is None else tuple(selector)
        m = matrix_rep(space, sel)
        return cls(gamma_of(m), pi_of(m), sel, fingerprint(space, sel))

    def is_fresh(self, space: CoveringSpace) -> bool:
        return fingerprint(space, self.selector) == self.source

    def ensure_fresh(self, space: CoveringSpace) -> None:
        if not self.is_fresh(space):
            raise StaleMatricesError("characteristic matrices were built from a different covering state")

    def approx(self, x: BoolVector, op: str, space: CoveringSpace | None = None) -> Approx:
        """Apply ``op``; pass ``space`` to guard against stale matrices."""
        if space is not None:
            self.ensure_fresh(space)
        return approx(self.gamma, self.pi, x, op)

"""Brute-force reference implementations and random generators for the tests.

Everything here works on nested Python lists so it shares no code with the
packed kernels under test.
"""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from covrough import Covering, CoveringSpace, UpdateEvent, Universe


def dot_ref(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[int(any(a[i][k] and b[k][j] for k in range(m))) for j in range(p)] for i in range(n)]


def circle_ref(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[int(all(a[i][k] <= b[k][j] for k in range(m))) for j in range(p)] for i in range(n)]


def circle_ref_unclamped(a, b):
    """``min_k (b_kj - a_ik + 1)`` exactly as written, without clamping."""
    n, m, p = len(a), len(b), len(b[0])
    return [[min(b[k][j] - a[i][k] + 1 for k in range(m)) for j in range(p)] for i in range(n)]


def gamma_ref(blocks, n):
    return [[int(any(i in b and j in b for b in blocks)) for j in range(n)] for i in range(n)]


def pi_ref(blocks, n):
    return [[int(all(j in b for b in blocks if i in b)) for j in range(n)] for i in range(n)]


def random_bits(rng, rows, cols, p=0.5):
    return (rng.random((rows, cols)) < p).astype(np.uint8)


def random_blocks(rng, n, m, p=0.4):
    """``m`` blocks covering ``range(n)``: random membership, then patch empty rows and columns."""
    member = rng.random((n, m)) < p
    for i in np.flatnonzero(~member.any(axis=1)):
        member[i, rng.integers(m)] = True
    for j in np.flatnonzero(~member.any(axis=0)):
        member[rng.integers(n), j] = True
    return [np.flatnonzero(member[:, j]).tolist() for j in range(m)]


def random_space(rng, n, m, coverings=1):
    """Space with ``coverings`` coverings of ``m`` blocks each."""
    covs = tuple(Covering(f"C{c + 1}", tuple(map(tuple, random_blocks(rng, n, m)))) for c in range(coverings))
    return CoveringSpace(Universe.of_size(n), covs)


def random_event(rng, space, k=None):
    """Random valid revision of one object; may add to and remove from blocks."""
    if k is None:
        k = int(rng.integers(space.n))
    memberships = {}
    for cov in space.coverings:
        keep = {j for j, b in enumerate(cov.blocks) if b == (k,)}  # sole member must stay
        new = {j for j in range(len(cov)) if rng.random() < 0.5} | keep
        if not new:
            new = {int(rng.integers(len(cov)))}
        memberships[cov.name] = frozenset(new)
    return UpdateEvent(k, memberships)


@st.composite
def spaces(draw, max_n=10, max_m=6, max_coverings=3):
    n = draw(st.integers(1, max_n))
    count = draw(st.integers(1, max_coverings))
    covs = []
    for c in range(count):
        m = draw(st.integers(1, max_m))
        member = [[draw(st.booleans()) for _ in range(m)] for _ in range(n)]
        for i in range(n):
            if not any(member[i]):
                member[i][draw(st.integers(0, m - 1))] = True
        for j in range(m):
            if not any(member[i][j] for i in range(n)):
                member[draw(st.integers(0, n - 1))][j] = True
        covs.append(Covering(f"C{c + 1}", tuple(tuple(i for i in range(n) if member[i][j]) for j in range(m))))
    return CoveringSpace(Universe.of_size(n), tuple(covs))


def bool_matrices(min_side=1, max_side=8):
    return st.integers(min_side, max_side).flatmap(
        lambda r: st.integers(min_side, max_side).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )

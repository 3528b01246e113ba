"""Timing harness: full rebuild vs incremental update of the characteristic matrices.

Each trial generates a random covering space, revises one object by adding
it to some blocks, and times four pipelines on the revised space:

====  =====================================================
NIS   rebuild Gamma, then second upper/lower approximations
IS    update Gamma incrementally, then the same operators
NIX   rebuild Pi, then sixth upper/lower approximations
IX    update Pi incrementally, then the same operators
====  =====================================================

Every pipeline starts by building the revised membership matrix.  Space
generation, the pre-revision matrices and I/O are not timed.
"""

from __future__ import annotations

import csv
import gc
import hashlib
import statistics
import time
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .boolmat import BoolMatrix, BoolVector
from .charmat import gamma_of, pi_of, second_approx, sixth_approx
from .covering import Approx, Covering, CoveringSpace, Universe, matrix_rep
from .dynamic import UpdateEvent, apply_update, update_gamma, update_pi

ALGOS = ("NIS", "IS", "NIX", "IX")
HEADER = ("n", "m", "trial", "algo", "seconds", "checksum")
DEFAULT_LADDER = ((500, 25), (1000, 50), (2000, 100), (4000, 200))


class CorrectnessError(AssertionError):
    """Incremental and rebuilt pipelines disagreed."""


@dataclass
class ExperimentConfig:
    sizes: list[tuple[int, int]] = field(default_factory=lambda: list(DEFAULT_LADDER))
    trials: int = 10
    seed: int = 0
    output: Path | None = None
    density: float = 0.5

    def __post_init__(self):
        self.sizes = [(int(n), int(m)) for n, m in self.sizes]
        for n, m in self.sizes:
            if not n >= m >= 1:
                raise ValueError(f"size ({n}, {m}) violates n >= m >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0.0 < self.density <= 1.0:
            raise ValueError("density must lie in (0, 1]")


@dataclass(frozen=True)
class TimingRecord:
    n: int
    m: int
    trial: int
    algo: str
    seconds: float
    checksum: str


def generate_space(n: int, m: int, seed: int, density: float = 0.5) -> CoveringSpace:
    """Random single covering with ``m`` blocks over ``n`` objects.

    Each object joins each block with probability ``density`` and is forced
    into one uniformly chosen block if it joined none.  Blocks left empty
    then take an object from another block, preferring objects that stay
    covered elsewhere.
    """
    if not n >= m >= 1:
        raise ValueError(f"need n >= m >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    member = rng.random((n, m)) < density
    lonely = ~member.any(axis=1)
    member[np.flatnonzero(lonely), rng.integers(0, m, size=int(lonely.sum()))] = True

    for j in np.flatnonzero(~member.any(axis=0)):
        sizes = member.sum(axis=0)
        degree = member.sum(axis=1)
        # an object covered twice can leave a block of size >= 2 without harm
        movable = np.argwhere(member & (degree[:, None] >= 2) & (sizes[None, :] >= 2))
        if movable.size == 0:
            movable = np.argwhere(member & (sizes[None, :] >= 2))
        x, src = movable[rng.integers(len(movable))]
        member[x, src] = False
        member[x, j] = True

    blocks = tuple(tuple(np.flatnonzero(member[:, j]).tolist()) for j in range(m))
    return CoveringSpace(Universe.of_size(n), (Covering("C", blocks),))


def generate_update(space: CoveringSpace, seed: int) -> UpdateEvent:
    """Pick one object and add it to a random subset of blocks of every covering.

    Only additions are made, so the revised family is always a covering.
    """
    rng = np.random.default_rng(seed)
    k = int(rng.integers(space.n))
    memberships = {}
    for cov in space.coverings:
        current = cov.memberships(k)
        extra = {j for j in range(len(cov)) if rng.random() < 0.5}
        memberships[cov.name] = frozenset(current | extra)
    return UpdateEvent(k, memberships)


def checksum(result: Approx) -> str:
    h = hashlib.sha256()
    h.update(result.upper.tobytes())
    h.update(result.lower.tobytes())
    return h.hexdigest()[:16]


def _timed(fn: Callable[[], Approx]) -> tuple[float, Approx]:
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def run_trial(space: CoveringSpace, ev: UpdateEvent, x: BoolVector) -> dict[str, tuple[float, Approx]]:
    """Time the four pipelines on one revision of ``space``."""
    k = ev.obj
    m_old = matrix_rep(space)
    gamma_old, pi_old = gamma_of(m_old), pi_of(m_old)
    space_new = apply_update(space, ev)

    def nis():
        return second_approx(gamma_of(matrix_rep(space_new)), x)

    def is_():
        return second_approx(update_gamma(gamma_old, matrix_rep(space_new), k, inplace=True), x)

    def nix():
        return sixth_approx(pi_of(matrix_rep(space_new)), x)

    def ix():
        return sixth_approx(update_pi(pi_old, matrix_rep(space_new), k, inplace=True), x)

    results = {}
    enabled = gc.isenabled()
    gc.disable()
    try:
        for name, fn in zip(ALGOS, (nis, is_, nix, ix)):
            results[name] = _timed(fn)
    finally:
        if enabled:
            gc.enable()
    for a, b in (("NIS", "IS"), ("NIX", "IX")):
        if results[a][1] != results[b][1]:
            raise CorrectnessError(f"{b} disagrees with {a} (object {k})")
    return results


def run_experiment(cfg: ExperimentConfig, progress: Callable[[str], None] | None = None) -> list[TimingRecord]:
    records: list[TimingRecord] = []
    for n, m in cfg.sizes:
        for trial in range(cfg.trials):
            seeds = np.random.SeedSequence([cfg.seed, n, m, trial]).generate_state(3)
            space = generate_space(n, m, int(seeds[0]), cfg.density)
            ev = generate_update(space, int(seeds[1]))
            rng = np.random.default_rng(int(seeds[2]))
            x = BoolVector.from_bits(rng.random(n) < 0.5)
            for algo, (secs, out) in run_trial(space, ev, x).items():
                records.append(TimingRecord(n, m, trial, algo, secs, checksum(out)))
        if progress is not None:
            progress(f"({n}, {m}) done")
    if cfg.output is not None:
        write_report(records, cfg.output)
    return records


def write_report(records: list[TimingRecord], path: Path | str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(HEADER)
        for r in records:
            w.writerow((r.n, r.m, r.trial, r.algo, f"{r.seconds:.9f}", r.checksum))


def read_report(path: Path | str) -> list[TimingRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != HEADER:
        raise ValueError(f"{path}: missing header {','.join(HEADER)}")
    return [TimingRecord(int(n), int(m), int(t), a, float(s), c) for n, m, t, a, s, c in rows[1:]]


def mean_times(records: list[TimingRecord]) -> dict[tuple[int, int], dict[str, float]]:
    """Per-size mean seconds for each algorithm, sizes in first-seen order."""
    acc: dict[tuple[int, int], dict[str, list[float]]] = defaultdict(lambda: defaultdict(list))
    for r in records:
        acc[(r.n, r.m)][r.algo].append(r.seconds)
    return {size: {a: statistics.fmean(v) for a, v in algos.items()} for size, algos in acc.items()}


def speedups(records: list[TimingRecord]) -> dict[tuple[int, int], tuple[float, float]]:
    """``(NIS/IS, NIX/IX)`` ratios of mean times per size."""
    return {
        size: (t["NIS"] / t["IS"], t["NIX"] / t["IX"])
        for size, t in mean_times(records).items()
    }


def format_summary(records: list[TimingRecord]) -> str:
    means = mean_times(records)
    ratios = speedups(records)
    lines = [f"{'n':>6} {'m':>5} " + " ".join(f"{a:>10}" for a in ALGOS) + f" {'NIS/IS':>8} {'NIX/IX':>8}"]
    for (n, m), t in means.items():
        s, x = ratios[(n, m)]
        lines.append(
            f"{n:>6} {m:>5} " + " ".join(f"{t[a]:>10.6f}" for a in ALGOS) + f" {s:>8.1f} {x:>8.1f}"
        )
    return "\n".join(lines)

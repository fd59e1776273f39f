"""Seeded randomized verification of the power-monoid laws, the uniqueness of
the normalizing shift, and the isomorphism properties of transport.

Failures are data, not errors: every failed check is recorded with its trial
seed and offending inputs so it can be replayed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .cones import Cone
from .lattice import GroupElement, ORIGIN
from .powersets import (
    IDENTITY,
    FinSubset,
    candidate_shifts,
    normalize_shift_bruteforce,
    normalize_shift_inductive,
    setwise_product,
    transport,
    transport_shift,
)


class RejectionBudgetExceeded(RuntimeError):
    """Rejection sampling failed to hit the cone inside its coordinate box."""


_REJECTION_BUDGET = 10_000


def gen_subset(
    m: Cone | None, size_bound: int, coord_bound: int, rng: random.Random
) -> FinSubset:
    """Seeded random identity-containing subset with at most size_bound
    elements and coordinates in [-coord_bound, coord_bound], every element a
    member of m (m=None samples the whole group).  Deterministic in rng."""
    if size_bound < 1:
        raise ValueError("size_bound must be >= 1")
    if coord_bound < 1:
        raise ValueError("coord_bound must be >= 1")
    points = {ORIGIN}
    for _ in range(rng.randint(0, size_bound - 1)):
        for _ in range(_REJECTION_BUDGET):
            g = GroupElement(
                rng.randint(-coord_bound, coord_bound),
                rng.randint(-coord_bound, coord_bound),
            )
            if m is None or m.contains(g):
                points.add(g)
                break
        else:
            raise RejectionBudgetExceeded(
                f"no member of {m} found in the box after {_REJECTION_BUDGET} draws"
            )
    return FinSubset(points)


@dataclass(frozen=True)
class PropertyFailure:
    """One failed check, replayable from (master seed, trial)."""

    prop: str
    trial: int
    trial_seed: str
    detail: str

    def to_json(self) -> dict:
        return {
            "property": self.prop,
            "trial": self.trial,
            "trial_seed": self.trial_seed,
            "detail": self.detail,
        }


@dataclass
class VerifyReport:
    trials: int
    seed: int
    size_bound: int
    coord_bound: int
    tallies: dict[str, dict[str, int]]
    failure_records: list[PropertyFailure]
    elapsed_s: float

    @property
    def failures(self) -> int:
        return len(self.failure_records)

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "size_bound": self.size_bound,
            "coord_bound": self.coord_bound,
            "properties": self.tallies,
            "failures": self.failures,
            "failure_records": [f.to_json() for f in self.failure_records],
            "elapsed_ms": int(self.elapsed_s * 1000),
        }


PROPERTIES = (
    "monoid_laws",
    "sumset_growth",
    "uniqueness",
    "oracle_equivalence",
    "homomorphism",
    "shift_additivity",
    "identity",
    "round_trip",
)


def _check_monoid_laws(X: FinSubset, Y: FinSubset, Z: FinSubset) -> str | None:
    if X * Y != Y * X:
        return f"commutativity failed for X={X} Y={Y}"
    if (X * Y) * Z != X * (Y * Z):
        return f"associativity failed for X={X} Y={Y} Z={Z}"
    if X * IDENTITY != X:
        return f"identity law failed for X={X}"
    return None


def _check_growth(X: FinSubset, Y: FinSubset) -> str | None:
    size = len(X * Y)
    if not (len(X) + len(Y) - 1 <= size <= len(X) * len(Y)):
        return f"|XY|={size} outside [{len(X) + len(Y) - 1}, {len(X) * len(Y)}] for X={X} Y={Y}"
    return None


def _check_uniqueness(cones: tuple[Cone, ...], X: FinSubset) -> str | None:
    for m in cones:
        hits = candidate_shifts(m, X)
        if len(hits) != 1:
            return f"{len(hits)} normalizing shifts {hits} for X={X} in {m}"
    return None


def _check_oracle_equivalence(cones: tuple[Cone, ...], X: FinSubset) -> str | None:
    for m in cones:
        fast = normalize_shift_inductive(m, X)
        slow = normalize_shift_bruteforce(m, X)
        if fast != slow:
            return f"inductive {fast} != bruteforce {slow} for X={X} in {m}"
    return None


def _check_homomorphism(src: Cone, dst: Cone, X: FinSubset, Y: FinSubset) -> str | None:
    lhs = transport(src, dst, X * Y)
    rhs = setwise_product(transport(src, dst, X), transport(src, dst, Y))
    if lhs != rhs:
        return f"transport(XY)={lhs} != transport(X)*transport(Y)={rhs} for X={X} Y={Y}"
    return None


def _check_shift_additivity(src: Cone, dst: Cone, X: FinSubset, Y: FinSubset) -> str | None:
    a = transport_shift(src, dst, X).shift
    b = transport_shift(src, dst, Y).shift
    c = transport_shift(src, dst, X * Y).shift
    if a + b != c:
        return f"shifts {a} + {b} != {c} for X={X} Y={Y}"
    return None


def _check_identity(src: Cone, dst: Cone) -> str | None:
    if transport(src, dst, IDENTITY) != IDENTITY:
        return "transport does not fix the identity {(0,0)}"
    return None


def _check_round_trip(src: Cone, dst: Cone, X: FinSubset, Y: FinSubset) -> str | None:
    back = transport(dst, src, transport(src, dst, X))
    if back != X:
        return f"round trip src->dst->src gave {back} for X={X}"
    forth = transport(src, dst, transport(dst, src, Y))
    if forth != Y:
        return f"round trip dst->src->dst gave {forth} for Y={Y}"
    return None


def verify(
    src: Cone,
    dst: Cone,
    trials: int,
    seed: int,
    size_bound: int = 8,
    coord_bound: int = 50,
) -> VerifyReport:
    """Run the whole property suite on `trials` seeded random inputs.

    Per-trial rngs are derived from the master seed alone, so identical
    (seed, trials, bounds) always produce the identical failure set.  A check
    that raises is recorded as a failure rather than aborting the run.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cones = (src, dst)
    tallies = {name: {"runs": 0, "failures": 0} for name in PROPERTIES}
    records: list[PropertyFailure] = []
    start = time.perf_counter()
    for trial in range(trials):
        trial_seed = f"{seed}:{trial}"
        rng = random.Random(trial_seed)
        free = [gen_subset(None, size_bound, coord_bound, rng) for _ in range(3)]
        src_x = gen_subset(src, size_bound, coord_bound, rng)
        src_y = gen_subset(src, size_bound, coord_bound, rng)
        dst_y = gen_subset(dst, size_bound, coord_bound, rng)
        checks = {
            "monoid_laws": lambda: _check_monoid_laws(*free),
            "sumset_growth": lambda: _check_growth(free[0], free[1]),
            "uniqueness": lambda: _check_uniqueness(cones, free[0]),
            "oracle_equivalence": lambda: _check_oracle_equivalence(cones, free[0]),
            "homomorphism": lambda: _check_homomorphism(src, dst, src_x, src_y),
            "shift_additivity": lambda: _check_shift_additivity(src, dst, src_x, src_y),
            "identity": lambda: _check_identity(src, dst),
            "round_trip": lambda: _check_round_trip(src, dst, src_x, dst_y),
        }
        for name in PROPERTIES:
            tallies[name]["runs"] += 1
            try:
                problem = checks[name]()
            except Exception as exc:  # a crash on generated input is a failure
                problem = f"{type(exc).__name__}: {exc}"
            if problem is not None:
                tallies[name]["failures"] += 1
                records.append(PropertyFailure(name, trial, trial_seed, problem))
    elapsed = time.perf_counter() - start
    return VerifyReport(trials, seed, size_bound, coord_bound, tallies, records, elapsed)

"""
Signatures and lower bounds for real self-dual spaces.

A problem is a list of ramification points (weight, base-point order k).
Complex-conjugate evaluation points come in pairs, and a pair may only join
two points with the same (weight, k).  The signature for a pairing is the
coefficient of x^(N-1, N-3, ...) in

    vandermonde * prod_pairs schur(w)(x^2) * prod_unpaired schur(w)(x)

and its absolute value is the lower bound.  With no pairs it is the
dimension of the invariant space, i.e. the total number of self-dual spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .characters import schur, target_exponent, vandermonde
from .errors import InvalidParameter, PairingError
from .laurent import power_substitute, product_coefficient
from .lie import (
    LieContext,
    RamificationPoint,
    Weight,
    check_weight,
    grassmann_d,
    make_context,
    reduced_grassmann_d,
    transpose_BC,
)


@dataclass(frozen=True)
class Problem:
    ctx: LieContext
    points: tuple[RamificationPoint, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, RamificationPoint) else RamificationPoint(*p) for p in self.points)
        if not pts:
            raise InvalidParameter("a problem needs at least one ramification point")
        for p in pts:
            check_weight(self.ctx, p.weight)
        object.__setattr__(self, "points", pts)

    @classmethod
    def build(cls, N: int, points: Iterable) -> "Problem":
        """``points`` items are RamificationPoint, (weight, k) or (weight, k, count)."""
        ctx = make_context(N)
        expanded = []
        for p in points:
            if isinstance(p, RamificationPoint):
                expanded.append(p)
                continue
            p = tuple(p)
            weight, k, count = p[0], (p[1] if len(p) > 1 else 0), (p[2] if len(p) > 2 else 1)
            expanded.extend([RamificationPoint(Weight(tuple(weight)), k)] * count)
        return cls(ctx, tuple(expanded))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d(self) -> int:
        return grassmann_d(self.ctx, self.points)

    @property
    def reduced_d(self) -> int:
        return reduced_grassmann_d(self.ctx, self.points)

    def classes(self) -> list[tuple[RamificationPoint, list[int]]]:
        """Points grouped by (weight, k), in order of first appearance."""
        order: dict[RamificationPoint, list[int]] = {}
        for i, p in enumerate(self.points):
            order.setdefault(p, []).append(i)
        return list(order.items())

    def transposed(self) -> "Problem":
        """The sp4 problem matching an so5 problem (or vice versa)."""
        if self.ctx.r != 2:
            raise InvalidParameter("only rank-2 problems can be transposed")
        N = 5 if self.ctx.N == 4 else 4
        return Problem(make_context(N), tuple(RamificationPoint(transpose_BC(p.weight), p.k) for p in self.points))

    def label(self) -> str:
        parts = []
        for p, idx in _runs(self.points):
            s = str(p)
            parts.append(f"{s}^{idx}" if idx > 1 else s)
        return ",".join(parts)


def _runs(points):
    for p, grp in itertools.groupby(points):
        yield p, len(list(grp))


@dataclass(frozen=True)
class PairingSpec:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(int(i) for i in p) for p in self.pairs))

    @property
    def c(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PairingClass:
    """Pair counts per (weight, k) class; the signature depends on nothing else."""

    counts: tuple[tuple[RamificationPoint, int, int], ...]  # (class point, class size, pairs)

    @property
    def c(self) -> int:
        return sum(n for _, _, n in self.counts)

    def pair_counts(self) -> tuple[int, ...]:
        return tuple(n for _, _, n in self.counts)

    def to_spec(self, problem: Problem) -> PairingSpec:
        """Concrete positional pairing: leftmost points of each class are paired first."""
        pairs = []
        for (point, _, n), (cls_point, idx) in zip(self.counts, problem.classes()):
            assert point == cls_point
            for j in range(n):
                pairs.append((idx[2 * j], idx[2 * j + 1]))
        return PairingSpec(tuple(sorted(pairs)))

    def describe(self) -> str:
        used = [f"{n}x{p}" for p, _, n in self.counts if n]
        return " + ".join(used) if used else "none"


@dataclass(frozen=True)
class BoundResult:
    signature: int
    bound: int
    dimension: int
    parity_floor: int


def validate_pairing(problem: Problem, pairing: PairingSpec):
    seen = set()
    for pair in pairing.pairs:
        if len(pair) != 2:
            raise PairingError(f"pair {pair} must have exactly two indices")
        i, j = pair
        if i == j:
            raise PairingError(f"pair ({i}, {j}) pairs a point with itself")
        for idx in (i, j):
            if not 0 <= idx < problem.n:
                raise PairingError(f"index {idx} out of range for {problem.n} points")
            if idx in seen:
                raise PairingError(f"index {idx} appears in more than one pair")
            seen.add(idx)
        if problem.points[i] != problem.points[j]:
            raise PairingError(
                f"points {i} and {j} cannot be conjugate: {problem.points[i]} != {problem.points[j]}"
            )


def canonical_class(problem: Problem, pairing: PairingSpec) -> PairingClass:
    validate_pairing(problem, pairing)
    per_point: dict[RamificationPoint, int] = {}
    for i, _ in pairing.pairs:
        p = problem.points[i]
        per_point[p] = per_point.get(p, 0) + 1
    return PairingClass(tuple((p, len(idx), per_point.get(p, 0)) for p, idx in problem.classes()))


def _signature_from_counts(problem: Problem, counts: Sequence[tuple[RamificationPoint, int, int]], prune=True) -> int:
    ctx = problem.ctx
    factors = []
    for point, size, n in counts:
        s = schur(ctx, point.weight)
        if n:
            sq = power_substitute(s, 2)
            factors.extend([sq] * n)
        factors.extend([s] * (size - 2 * n))
    factors.append(vandermonde(ctx))
    return product_coefficient(factors, target_exponent(ctx), prune=prune)


def trivial_multiplicity(problem: Problem, prune: bool = True) -> int:
    """Dimension of the invariant subspace of the tensor product."""
    return _signature_from_counts(problem, [(p, len(idx), 0) for p, idx in problem.classes()], prune)


def signature(problem: Problem, pairing: PairingSpec | PairingClass | None = None, prune: bool = True) -> int:
    if pairing is None:
        pairing = PairingSpec()
    cls = pairing if isinstance(pairing, PairingClass) else canonical_class(problem, pairing)
    return _signature_from_counts(problem, cls.counts, prune)


def lower_bound(problem: Problem, pairing: PairingSpec | PairingClass | None = None, prune: bool = True) -> BoundResult:
    a = signature(problem, pairing, prune)
    dim = trivial_multiplicity(problem, prune)
    return BoundResult(signature=a, bound=abs(a), dimension=dim, parity_floor=dim % 2)


def enumerate_pairings(problem: Problem, c: int) -> list[PairingClass]:
    """
    Every inequivalent way to choose ``c`` conjugate pairs.

    Ordered with the most pairs on the leftmost classes first, so the first
    entry pairs up the leftmost points and the last one the rightmost.
    """
    if c < 0:
        raise InvalidParameter(f"c must be >= 0, got {c}")
    classes = problem.classes()
    caps = [len(idx) // 2 for _, idx in classes]
    out = []
    for counts in itertools.product(*(range(cap, -1, -1) for cap in caps)):
        if sum(counts) == c:
            out.append(PairingClass(tuple((p, len(idx), n) for (p, idx), n in zip(classes, counts))))
    return out


def max_pairs(problem: Problem) -> int:
    return sum(len(idx) // 2 for _, idx in problem.classes())


@dataclass
class PairingBound:
    pairing: PairingClass
    result: BoundResult
    pairs: PairingSpec = field(default_factory=PairingSpec)


def all_bounds(problem: Problem, c: int, prune: bool = True) -> list[PairingBound]:
    dim = trivial_multiplicity(problem, prune)
    out = []
    for cls in enumerate_pairings(problem, c):
        a = signature(problem, cls, prune)
        res = BoundResult(signature=a, bound=abs(a), dimension=dim, parity_floor=dim % 2)
        out.append(PairingBound(cls, res, cls.to_spec(problem)))
    return out

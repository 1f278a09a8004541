"""
Lie-type bookkeeping for the algebra attached to a Grassmannian parameter N.

N = 2r gives so(2r+1) (family B), N = 2r+1 >= 5 gives sp(2r) (family C) and
N = 3 gives sl(2), handled as rank one.  Weights are dominant integral and
stored in fundamental-weight coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidParameter, NonDivisible, SymmetryViolation, UnsupportedCase


@dataclass(frozen=True)
class LieContext:
    N: int
    r: int
    family: str  # "B", "C" or "A1"

    @property
    def name(self) -> str:
        if self.family == "B":
            return f"so{2 * self.r + 1}"
        if self.family == "C":
            return f"sp{2 * self.r}"
        return "sl2"

    def rho_exponent(self) -> tuple[int, ...]:
        """Exponents N+1-2j, j = 1..r (doubled Weyl vector)."""
        return tuple(self.N + 1 - 2 * j for j in range(1, self.r + 1))

    def weight(self, coords: Iterable[int]) -> "Weight":
        w = Weight(tuple(int(a) for a in coords))
        check_weight(self, w)
        return w

    def zero_weight(self) -> "Weight":
        return Weight((0,) * self.r)


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(a) for a in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class BarPartition:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class PartitionN:
    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class RamificationPoint:
    weight: Weight
    k: int = 0

    def __post_init__(self):
        if not isinstance(self.weight, Weight):
            object.__setattr__(self, "weight", Weight(tuple(self.weight)))
        if self.k < 0:
            raise InvalidParameter(f"base-point order must be >= 0, got {self.k}")

    def __str__(self):
        return f"{self.weight}_{self.k}" if self.k else str(self.weight)


def make_context(N: int) -> LieContext:
    if N == 2:
        raise UnsupportedCase(
            "N = 2 is not handled: every 2-dimensional space of polynomials is self-dual, "
            "so this case is the ordinary Grassmannian Gr(2, d) problem and is delegated "
            "to the existing lower bounds for osculating Schubert problems there"
        )
    if N < 3:
        raise InvalidParameter(f"N must be >= 3, got {N}")
    if N == 3:
        return LieContext(3, 1, "A1")
    if N % 2 == 0:
        return LieContext(N, N // 2, "B")
    return LieContext(N, (N - 1) // 2, "C")


def as_weight(w) -> Weight:
    return w if isinstance(w, Weight) else Weight(tuple(w))


def check_weight(ctx: LieContext, w) -> Weight:
    w = as_weight(w)
    if len(w) != ctx.r:
        raise InvalidParameter(f"weight {w} has {len(w)} coordinates, {ctx.name} has rank {ctx.r}")
    if any(a < 0 for a in w):
        raise InvalidParameter(f"weight {w} is not dominant")
    return w


def to_bar(ctx: LieContext, w) -> BarPartition:
    w = check_weight(ctx, w)
    parts = [0] * ctx.r
    parts[-1] = w[-1] if ctx.family == "B" else 2 * w[-1]
    for i in range(ctx.r - 2, -1, -1):
        parts[i] = parts[i + 1] + 2 * w[i]
    return BarPartition(tuple(parts))


def from_bar(ctx: LieContext, bar: BarPartition | Sequence[int]) -> Weight:
    parts = tuple(bar.parts if isinstance(bar, BarPartition) else bar)
    if len(parts) != ctx.r:
        raise InvalidParameter(f"bar partition {parts} must have {ctx.r} parts")
    coords = []
    for i in range(ctx.r - 1):
        d = parts[i] - parts[i + 1]
        if d < 0 or d % 2:
            raise InvalidParameter(f"{parts} is not a valid bar partition for {ctx.name}")
        coords.append(d // 2)
    last = parts[-1]
    if ctx.family == "B":
        if last < 0:
            raise InvalidParameter(f"{parts} is not a valid bar partition for {ctx.name}")
        coords.append(last)
    else:
        if last < 0 or last % 2:
            raise InvalidParameter(f"{parts} is not a valid bar partition for {ctx.name}")
        coords.append(last // 2)
    return Weight(tuple(coords))


def _simple_coroot_value(w: Weight, i: int, N: int) -> int:
    # <w, alpha_i> for the i-th difference of the associated N-part partition (1-based)
    half = N // 2
    return w[i - 1] if i <= half else w[N - i - 1]


def mu_A_k(ctx: LieContext, w, k: int = 0) -> PartitionN:
    """Partition with at most N parts attached to the weight ``w`` and base-point order ``k``."""
    w = check_weight(ctx, w)
    if k < 0:
        raise InvalidParameter(f"k must be >= 0, got {k}")
    N = ctx.N
    parts = [0] * N
    parts[-1] = k
    for i in range(N - 1, 0, -1):
        parts[i - 1] = parts[i] + _simple_coroot_value(w, i, N)
    return PartitionN(tuple(parts))


def from_xi(ctx: LieContext, xi: PartitionN | Sequence[int]) -> tuple[Weight, int]:
    parts = tuple(xi.parts if isinstance(xi, PartitionN) else xi)
    N = ctx.N
    if len(parts) != N:
        raise InvalidParameter(f"expected {N} parts, got {parts}")
    if parts[-1] < 0 or any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidParameter(f"{parts} is not a partition")
    diffs = [parts[i] - parts[i + 1] for i in range(N - 1)]
    for i in range(1, N):
        if diffs[i - 1] != diffs[N - i - 1]:
            raise SymmetryViolation(
                f"xi_{i} - xi_{i + 1} = {diffs[i - 1]} but xi_{N - i} - xi_{N - i + 1} = "
                f"{diffs[N - i - 1]}; no self-dual space has these ramification conditions"
            )
    return Weight(tuple(diffs[: ctx.r])), parts[-1]


def _total_size(ctx: LieContext, points: Sequence[RamificationPoint], with_k: bool) -> int:
    return sum(mu_A_k(ctx, p.weight, p.k if with_k else 0).size for p in points)


def grassmann_d(ctx: LieContext, points: Sequence[RamificationPoint]) -> int:
    """d with sum of |xi| equal to N(d - N), base points included."""
    return _solve_d(ctx, points, with_k=True)


def reduced_grassmann_d(ctx: LieContext, points: Sequence[RamificationPoint]) -> int:
    """Same as :func:`grassmann_d` after stripping all base points (every k set to 0)."""
    return _solve_d(ctx, points, with_k=False)


def _solve_d(ctx, points, with_k):
    if not points:
        raise InvalidParameter("at least one ramification point is required")
    total = _total_size(ctx, points, with_k)
    if total % ctx.N:
        raise NonDivisible(f"total partition size {total} is not divisible by N = {ctx.N}")
    return ctx.N + total // ctx.N


def transpose_BC(w) -> Weight:
    """so5 weight (a, b) -> sp4 weight (b, a) under so5 = sp4."""
    w = as_weight(w)
    if len(w) != 2:
        raise InvalidParameter(f"transpose_BC needs a rank-2 weight, got {w}")
    return Weight((w[1], w[0]))

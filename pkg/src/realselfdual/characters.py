"""
Characters of so(2r+1), sp(2r) and sl(2) as Laurent polynomials.

Variables x_1..x_r are chosen so that x_i**2 is the eigenvalue on the i-th
standard basis vector; exponents are therefore doubled epsilon-coordinates
and spin weights stay integral.  The character of V_w is the ratio of two
r x r alternants (:func:`numerator` over :func:`vandermonde`).

:func:`weyl_dim` and :func:`freudenthal_weights` are independent oracles used
by the test-suite; they do not share code with the determinant path.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidParameter
from .laurent import LaurentPoly, exact_div, power_substitute, product_coefficient
from .lie import BarPartition, LieContext, Weight, as_weight, check_weight, from_bar, make_context, to_bar


@dataclass(frozen=True)
class CycleGroup:
    """Cycle type of a permutation of the ``sum(cycles)`` copies of ``V_weight``."""

    weight: Weight
    cycles: tuple[int, ...]
    count: int | None = None  # declared tensor multiplicity, checked against sum(cycles)

    def __post_init__(self):
        object.__setattr__(self, "weight", as_weight(self.weight))
        object.__setattr__(self, "cycles", tuple(int(c) for c in self.cycles))
        if not self.cycles:
            raise InvalidParameter("a cycle group needs at least one cycle")
        if any(c < 1 for c in self.cycles):
            raise InvalidParameter(f"cycle lengths must be positive, got {self.cycles}")
        if self.count is not None and sum(self.cycles) != self.count:
            raise InvalidParameter(
                f"cycles {self.cycles} sum to {sum(self.cycles)}, but the group has {self.count} copies"
            )

    @property
    def k(self) -> int:
        return sum(self.cycles)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternant(r: int, exps: Sequence[int]) -> LaurentPoly:
    """det(x_i**a_j - x_i**-a_j) expanded over the r! permutations."""
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(r)):
        s = _perm_sign(perm)
        for signs in itertools.product((1, -1), repeat=r):
            e = tuple(sg * exps[perm[i]] for i, sg in enumerate(signs))
            c = s
            for sg in signs:
                c *= sg
            terms[e] = terms.get(e, 0) + c
    return LaurentPoly(r, terms)


def vandermonde(ctx: LieContext) -> LaurentPoly:
    return _vandermonde(ctx.N)


@lru_cache(maxsize=None)
def _vandermonde(N):
    ctx = make_context(N)
    return alternant(ctx.r, ctx.rho_exponent())


def numerator(ctx: LieContext, bar: BarPartition | Sequence[int]) -> LaurentPoly:
    parts = bar.parts if isinstance(bar, BarPartition) else tuple(bar)
    from_bar(ctx, parts)  # validates parity rules
    return alternant(ctx.r, [p + rho for p, rho in zip(parts, ctx.rho_exponent())])


_schur_lock = threading.Lock()
_schur_cache: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}


def schur(ctx: LieContext, w) -> LaurentPoly:
    """Character of the irreducible module with highest weight ``w`` (memoized)."""
    w = check_weight(ctx, w)
    key = (ctx.N, w.coords)
    hit = _schur_cache.get(key)
    if hit is not None:
        return hit
    value = exact_div(numerator(ctx, to_bar(ctx, w)), vandermonde(ctx))
    with _schur_lock:
        return _schur_cache.setdefault(key, value)


def clear_cache():
    with _schur_lock:
        _schur_cache.clear()


def target_exponent(ctx: LieContext, mu=None) -> tuple[int, ...]:
    rho = ctx.rho_exponent()
    if mu is None:
        return rho
    bar = to_bar(ctx, mu).parts
    return tuple(b + p for b, p in zip(bar, rho))


def char_value(ctx: LieContext, groups: Sequence[CycleGroup], mu=None, prune: bool = True) -> int:
    """
    Trace of a permutation of equal tensor factors on the multiplicity space
    of V_mu inside the tensor product.  The permutation is given by the cycle
    type of each group; ``mu`` defaults to the trivial weight.
    """
    if not groups:
        raise InvalidParameter("at least one cycle group is required")
    mu = ctx.zero_weight() if mu is None else check_weight(ctx, mu)
    factors = []
    for g in groups:
        s = schur(ctx, g.weight)
        factors.extend(power_substitute(s, l) for l in g.cycles)
    factors.append(vandermonde(ctx))
    return product_coefficient(factors, target_exponent(ctx, mu), prune=prune)


# -- oracles -----------------------------------------------------------------


def _eps2(ctx: LieContext, w) -> tuple[int, ...]:
    # doubled epsilon coordinates coincide with the bar partition
    return to_bar(ctx, w).parts


def positive_roots(ctx: LieContext) -> list[tuple[int, ...]]:
    """Positive roots in doubled epsilon coordinates."""
    r = ctx.r
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            for s in (-1, 1):
                v = [0] * r
                v[i] = 2
                v[j] = 2 * s
                roots.append(tuple(v))
    for i in range(r):
        v = [0] * r
        v[i] = 2 if ctx.family == "B" else 4
        roots.append(tuple(v))
    return roots


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def weyl_dim(ctx: LieContext, w) -> int:
    """Weyl dimension formula: product over positive roots of (w+rho, a)/(rho, a)."""
    lam = _eps2(ctx, w)
    rho = ctx.rho_exponent()
    shifted = [a + b for a, b in zip(lam, rho)]
    dim = Fraction(1)
    for alpha in positive_roots(ctx):
        dim *= Fraction(_dot(shifted, alpha), _dot(rho, alpha))
    assert dim.denominator == 1
    return int(dim)


def _dominant_rep(v):
    return tuple(sorted((abs(a) for a in v), reverse=True))


def _simple_root_coords(ctx: LieContext, delta2):
    """Coefficients of (doubled) delta on simple roots, or None if not in the root lattice."""
    coeffs = []
    s = 0
    for i, d in enumerate(delta2):
        s += d
        if s % 2:
            return None
        coeffs.append(s // 2)
    if ctx.family != "B":
        if coeffs[-1] % 2:
            return None
        coeffs[-1] //= 2
    return coeffs


def freudenthal_weights(ctx: LieContext, w) -> dict[tuple[int, ...], int]:
    """
    Weight multiplicities of V_w, keyed by doubled epsilon coordinates.

    Freudenthal's recursion over the dominant weights below w (ordered by
    depth), then completion of each Weyl orbit by signed permutations.
    """
    lam = _eps2(ctx, w)
    r = ctx.r
    rho = ctx.rho_exponent()
    top = lam[0] if r else 0

    dominant = {}
    for mu in itertools.product(range(top + 1), repeat=r):
        if any(a < b for a, b in zip(mu, mu[1:])):
            continue
        c = _simple_root_coords(ctx, [a - b for a, b in zip(lam, mu)])
        if c is None or any(x < 0 for x in c):
            continue
        dominant[mu] = sum(c)

    lam_rho = [a + b for a, b in zip(lam, rho)]
    norm_top = _dot(lam_rho, lam_rho)
    roots = positive_roots(ctx)
    mult: dict[tuple[int, ...], int] = {}
    for mu in sorted(dominant, key=dominant.get):
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                if max(abs(a) for a in nu) > top:
                    break
                m = mult.get(_dominant_rep(nu), 0)
                if m:
                    total += m * _dot(nu, alpha)
                k += 1
        mu_rho = [a + b for a, b in zip(mu, rho)]
        denom = norm_top - _dot(mu_rho, mu_rho)
        value = Fraction(2 * total, denom)
        assert value.denominator == 1
        mult[mu] = int(value)

    table = {}
    for mu, m in mult.items():
        if not m:
            continue
        for perm in itertools.permutations(mu):
            for signs in itertools.product((1, -1), repeat=r):
                table[tuple(s * a for s, a in zip(signs, perm))] = m
    return table


def character_from_weights(ctx: LieContext, table: dict[tuple[int, ...], int]) -> LaurentPoly:
    return LaurentPoly(ctx.r, table)


def dominant_weights_up_to(ctx: LieContext, max_bar: int) -> list[Weight]:
    """All dominant weights whose bar partition has first part <= ``max_bar``."""
    out = []
    for parts in itertools.product(range(max_bar + 1), repeat=ctx.r):
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        try:
            out.append(from_bar(ctx, parts))
        except InvalidParameter:
            continue
    return sorted(out)

"""
Sparse Laurent polynomials in r variables with exact integer coefficients.

A polynomial is a map from exponent vectors (tuples of signed ints, all of
length ``rank``) to nonzero Python ints.  Values are immutable; every
operation returns a new polynomial in canonical form (no stored zeros).

Monomials are ordered graded-lexicographically: first by total degree, then
lexicographically with x1 > x2 > ... > xr.  The same order drives rendering
and the leading-term elimination in :func:`exact_div`.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import InexactDivision, InvalidParameter, RankMismatch

Exponent = tuple[int, ...]


def grlex_key(e: Exponent):
    return (sum(e), e)


class LaurentPoly:
    __slots__ = ("_terms", "_rank", "_hash")

    def __init__(self, rank: int, terms: Mapping[Exponent, int] | None = None):
        if rank < 0:
            raise InvalidParameter(f"rank must be nonnegative, got {rank}")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != rank:
                raise RankMismatch(f"exponent {e} has length {len(e)}, expected {rank}")
            if c:
                clean[e] = int(c)
        self._terms = clean
        self._rank = rank
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p._rank = rank
        p._hash = None
        return p

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls._raw(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self._rank) * other if other else LaurentPoly.zero(self._rank)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._rank, frozenset(self._terms.items())))
        return self._hash

    def is_canonical(self) -> bool:
        """Inspection hook: no zero coefficients and uniform exponent length."""
        return all(c != 0 and len(e) == self._rank for e, c in self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def exponent_range(self) -> tuple[Exponent, Exponent]:
        """Componentwise (min, max) over the support."""
        if not self._terms:
            raise ValueError("zero polynomial has empty support")
        cols = list(zip(*self._terms))
        if not cols:
            return (), ()
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)

    def __neg__(self):
        return LaurentPoly._raw(self._rank, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self._rank) * other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self._rank) * other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self._rank)
            return LaurentPoly._raw(self._rank, {e: c * other for e, c in self._terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidParameter("negative powers are not polynomials in general")
        result = LaurentPoly.one(self._rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({self._rank}, {render(self)!r})"


def _check_rank(p: LaurentPoly, q: LaurentPoly):
    if p.rank != q.rank:
        raise RankMismatch(f"rank {p.rank} vs rank {q.rank}")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_rank(p, q)
    if len(p) < len(q):
        p, q = q, p
    out = dict(p._terms)
    for e, c in q._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return LaurentPoly._raw(p.rank, out)


def _in_window(e, lo, hi):
    return all(a <= x <= b for x, a, b in zip(e, lo, hi))


def mul(p: LaurentPoly, q: LaurentPoly, window: tuple[Sequence[int], Sequence[int]] | None = None) -> LaurentPoly:
    """
    Exact product.  With ``window=(lo, hi)`` only monomials whose exponents lie
    componentwise in ``[lo, hi]`` are kept; everything else is dropped.

    Exponent vectors are packed into single ints (base-B digits) for the inner
    loop, which is several times faster than tuple arithmetic.
    """
    _check_rank(p, q)
    r = p.rank
    if not p or not q:
        return LaurentPoly.zero(r)
    if r == 0:
        return LaurentPoly._raw(0, {(): p._terms[()] * q._terms[()]})
    pmin, pmax = p.exponent_range()
    qmin, qmax = q.exponent_range()
    lo = [a + b for a, b in zip(pmin, qmin)]
    hi = [a + b for a, b in zip(pmax, qmax)]
    base = max(h - l for h, l in zip(hi, lo)) + 1

    def pack(e, off):
        key = 0
        for x, o in zip(reversed(e), reversed(off)):
            key = key * base + (x - o)
        return key

    pk = [(pack(e, pmin), c) for e, c in p._terms.items()]
    qk = [(pack(e, qmin), c) for e, c in q._terms.items()]
    if len(pk) < len(qk):
        pk, qk = qk, pk
    acc: dict[int, int] = {}
    get = acc.get
    for ka, ca in qk:
        for kb, cb in pk:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb

    out = {}
    for key, c in acc.items():
        if not c:
            continue
        e = []
        for l in lo:
            key, d = divmod(key, base)
            e.append(d + l)
        e = tuple(e)
        if window is not None and not _in_window(e, window[0], window[1]):
            continue
        out[e] = c
    return LaurentPoly._raw(r, out)


def power_substitute(p: LaurentPoly, l: int) -> LaurentPoly:
    """Substitute x_i -> x_i**l in every variable."""
    if l < 1:
        raise InvalidParameter(f"substitution power must be >= 1, got {l}")
    if l == 1:
        return p
    return LaurentPoly._raw(p.rank, {tuple(a * l for a in e): c for e, c in p._terms.items()})


def coeff(p: LaurentPoly, e: Sequence[int]) -> int:
    e = tuple(e)
    if len(e) != p.rank:
        raise RankMismatch(f"exponent {e} has length {len(e)}, polynomial rank is {p.rank}")
    return p._terms.get(e, 0)


def evaluate_at_one(p: LaurentPoly) -> int:
    return sum(p._terms.values())


def substitute_permutation(p: LaurentPoly, perm: Sequence[int]) -> LaurentPoly:
    """Rename variables: x_i -> x_{perm[i]} (0-based)."""
    out = {}
    for e, c in p._terms.items():
        f = [0] * p.rank
        for i, a in enumerate(e):
            f[perm[i]] = a
        out[tuple(f)] = c
    return LaurentPoly._raw(p.rank, out)


def substitute_inverse(p: LaurentPoly, i: int) -> LaurentPoly:
    """x_i -> x_i**-1 (0-based index)."""
    out = {}
    for e, c in p._terms.items():
        f = list(e)
        f[i] = -f[i]
        out[tuple(f)] = c
    return LaurentPoly._raw(p.rank, out)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """
    Quotient of an exact division in the Laurent ring.

    Leading-term elimination in graded-lex order.  Every quotient exponent is
    confined to the box [min(num) - min(den), max(num) - max(den)]
    (coordinatewise), and the leading exponent of the remainder strictly
    decreases, so the loop stops after at most box-size steps.  Any candidate
    quotient term outside the box, or a non-integral coefficient ratio, means
    the division is not exact.
    """
    _check_rank(num, den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    r = num.rank
    if not num:
        return LaurentPoly.zero(r)
    nlo, nhi = num.exponent_range()
    dlo, dhi = den.exponent_range()
    qlo = tuple(a - b for a, b in zip(nlo, dlo))
    qhi = tuple(a - b for a, b in zip(nhi, dhi))
    if any(a > b for a, b in zip(qlo, qhi)):
        raise InexactDivision("divisor support does not fit inside dividend support")

    lead_e, lead_c = den.leading_term()
    den_terms = list(den._terms.items())
    rem = dict(num._terms)
    quot = {}
    while rem:
        e = max(rem, key=grlex_key)
        c = rem[e]
        qe = tuple(a - b for a, b in zip(e, lead_e))
        qc, m = divmod(c, lead_c)
        if m or not _in_window(qe, qlo, qhi):
            raise InexactDivision(f"nonzero remainder at monomial {e}")
        quot[qe] = qc
        for de, dc in den_terms:
            t = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(t, 0) - qc * dc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return LaurentPoly._raw(r, quot)


def product_coefficient(factors: Sequence[LaurentPoly], target: Sequence[int], prune: bool = True) -> int:
    """
    Coefficient of ``x**target`` in the product of ``factors``.

    The last factor is never multiplied out: its contribution is taken as a
    dot product against the partial product.  With ``prune`` each partial
    product keeps only monomials that can still reach ``target`` given the
    exponent ranges of the factors not yet multiplied in.
    """
    target = tuple(target)
    if not factors:
        return 1 if not any(target) else 0
    r = factors[0].rank
    for f in factors:
        _check_rank(factors[0], f)
        if len(target) != r:
            raise RankMismatch(f"target {target} has length {len(target)}, expected {r}")
        if not f:
            return 0
    ranges = [f.exponent_range() for f in factors]
    # suffix sums of ranges: what factors j+1.. can still add
    n = len(factors)
    suf_lo = [[0] * r for _ in range(n + 1)]
    suf_hi = [[0] * r for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        suf_lo[j] = [a + b for a, b in zip(suf_lo[j + 1], ranges[j][0])]
        suf_hi[j] = [a + b for a, b in zip(suf_hi[j + 1], ranges[j][1])]

    def window_after(j):
        return ([t - h for t, h in zip(target, suf_hi[j + 1])],
                [t - l for t, l in zip(target, suf_lo[j + 1])])

    partial = factors[0]
    if prune:
        lo, hi = window_after(0)
        partial = LaurentPoly._raw(r, {e: c for e, c in partial.items() if _in_window(e, lo, hi)})
    for j in range(1, n - 1):
        partial = mul(partial, factors[j], window_after(j) if prune else None)
    if n == 1:
        return coeff(partial, target)
    last = factors[-1]
    total = 0
    pt = partial._terms
    for e, c in last.items():
        other = pt.get(tuple(t - a for t, a in zip(target, e)))
        if other:
            total += c * other
    return total


def _format_monomial(e: Exponent) -> str:
    parts = []
    for i, a in enumerate(e, 1):
        if a == 0:
            continue
        parts.append(f"x{i}" if a == 1 else f"x{i}^{a}")
    return "*".join(parts)


def render(p: LaurentPoly) -> str:
    """Canonical text form: grlex-descending terms, e.g. ``x1^2 + 1 + x1^-2``."""
    if not p:
        return "0"
    out = []
    for k, (e, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def from_terms(rank: int, items: Iterable[tuple[Sequence[int], int]]) -> LaurentPoly:
    """Build from (exponent, coeff) pairs, summing repeated exponents."""
    acc: dict[Exponent, int] = {}
    for e, c in items:
        e = tuple(e)
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(rank, acc)

"""Brute-force character sums over GF(2^m) and their closed forms.

Every sum here is an exact integer: summands are (-1)^t with t a trace bit.
The brute-force evaluators are plain double loops over (x, y) with x
nonzero; they are the ground truth the closed-form case tables are judged
against.  Closed forms with a genuinely undetermined sign return both
candidates, and conformance means membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .field import FieldElement, GF2m, mul_table, trace_table


@dataclass(frozen=True)
class CharSumValue:
    """Closed-form value of a character sum: one candidate, or a sign-ambiguous pair."""

    candidates: tuple[int, ...]
    case: str

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def value(self) -> int:
        if self.ambiguous:
            raise ValueError(f"case {self.case!r} only constrains the value to {self.candidates}")
        return self.candidates[0]

    def matches(self, observed: int) -> bool:
        return observed in self.candidates


class CoefficientSets(NamedTuple):
    """Coefficients for which the two auxiliary quadratics have nonzero roots."""

    reciprocal_sums: frozenset[int]  # a = r + 1/r: z^2 + a*z + 1 has two nonzero roots
    units_except_one: frozenset[int]  # z^2 + (a+1)*z has a nonzero root iff a != 1


def reciprocal_quadratic_roots(ctx: GF2m, a: FieldElement) -> frozenset[int]:
    """Nonzero roots of z^2 + a*z + 1, found by scanning all units.

    Either empty or an inverse pair {r, 1/r} with r + 1/r = a.
    """
    if a == 0:
        raise ValueError("coefficient must be nonzero")
    mt = mul_table(ctx)
    return frozenset(r for r in ctx.units() if mt[r][r] ^ mt[a][r] ^ 1 == 0)


@lru_cache(maxsize=None)
def coefficient_sets(ctx: GF2m) -> CoefficientSets:
    recip = frozenset(r ^ ctx.inv(r) for r in ctx.units() if r != 1)
    units = frozenset(a for a in ctx.units() if a != 1)
    return CoefficientSets(reciprocal_sums=recip, units_except_one=units)


def trace_pair_count(ctx: GF2m, subset: Iterable[FieldElement], bit: int) -> int:
    """|{(e, b) in subset x units : trace(e*b) = bit}| by direct count."""
    members = set(subset)
    if 0 in members:
        raise ValueError("subset must contain nonzero elements only")
    tr = trace_table(ctx)
    mt = mul_table(ctx)
    return sum(1 for e in members for b in ctx.units() if tr[mt[e][b]] == bit)


def plain_char_sum(ctx: GF2m, a: FieldElement, b: FieldElement) -> int:
    """sum over x != 0, all y of (-1)^trace(a*x*y + b*x)."""
    tr = trace_table(ctx)
    mt = mul_table(ctx)
    q = ctx.size
    total = 0
    for x in range(1, q):
        row_ax = mt[mt[a][x]]
        bx = mt[b][x]
        ones = sum(tr[row_ax[y] ^ bx] for y in range(q))
        total += q - 2 * ones
    return total


def family_char_sum(ctx: GF2m, family: int, a: FieldElement, b: FieldElement) -> int:
    """sum over x != 0, all y of (-1)^(trace(membership term) + trace(a*x*y + b*x)).

    The membership term is the family's defining-set element: y*x^2 + y,
    y*x^2 + x + y, or y*x^2 + x*y.
    """
    if family not in (1, 2, 3):
        raise ValueError(f"family must be 1, 2 or 3, got {family}")
    tr = trace_table(ctx)
    mt = mul_table(ctx)
    q = ctx.size
    total = 0
    for x in range(1, q):
        xx = mt[x][x]
        if family == 1:
            u, c = xx ^ 1, 0
        elif family == 2:
            u, c = xx ^ 1, x
        else:
            u, c = xx ^ x, 0
        row_u = mt[u]
        row_ax = mt[mt[a][x]]
        bx = mt[b][x]
        ones = sum(tr[row_u[y] ^ c] ^ tr[row_ax[y] ^ bx] for y in range(q))
        total += q - 2 * ones
    return total


def _require_nonzero_pair(a: FieldElement, b: FieldElement) -> None:
    if a == 0 and b == 0:
        raise ValueError("closed form is stated for (a, b) != (0, 0)")


def plain_char_sum_closed(ctx: GF2m, a: FieldElement, b: FieldElement) -> CharSumValue:
    _require_nonzero_pair(a, b)
    if a == 0:
        return CharSumValue((-ctx.size,), "a=0, b!=0")
    return CharSumValue((0,), "a!=0")


def family_char_sum_closed(ctx: GF2m, family: int, a: FieldElement, b: FieldElement) -> CharSumValue:
    """Case table for the family sum; family 2 requires odd m."""
    _require_nonzero_pair(a, b)
    q = ctx.size
    tr = trace_table(ctx)
    mt = mul_table(ctx)
    split = coefficient_sets(ctx).reciprocal_sums
    if family == 1:
        if a == 0:
            if tr[b]:
                return CharSumValue((-q,), "a=0, trace(b)=1")
            return CharSumValue((q,), "a=0, trace(b)=0")
        if a not in split:
            return CharSumValue((0,), "a outside reciprocal-sum set")
        if b == 0:
            return CharSumValue((2 * q,), "a in reciprocal-sum set, b=0")
        if tr[mt[a][b]]:
            return CharSumValue((0,), "a in reciprocal-sum set, trace(a*b)=1")
        return CharSumValue((-2 * q, 2 * q), "a in reciprocal-sum set, trace(a*b)=0")
    if family == 2:
        if ctx.m % 2 == 0:
            raise ValueError("family-2 closed form is stated for odd m only")
        if a == 0:
            if tr[b]:
                return CharSumValue((q,), "a=0, trace(b)=1")
            return CharSumValue((-q,), "a=0, trace(b)=0")
        if a not in split:
            return CharSumValue((0,), "a outside reciprocal-sum set")
        if tr[mt[a][b ^ 1]]:
            return CharSumValue((0,), "a in reciprocal-sum set, trace(a*(b+1))=1")
        return CharSumValue((-2 * q, 2 * q), "a in reciprocal-sum set, trace(a*(b+1))=0")
    if family == 3:
        if a == 1:
            return CharSumValue((0,), "a=1")
        if a == 0:
            if tr[b]:
                return CharSumValue((-q,), "a=0, trace(b)=1")
            return CharSumValue((q,), "a=0, trace(b)=0")
        if tr[mt[a ^ 1][b]]:
            return CharSumValue((-q,), "a unit !=1, trace((a+1)*b)=1")
        return CharSumValue((q,), "a unit !=1, trace((a+1)*b)=0")
    raise ValueError(f"family must be 1, 2 or 3, got {family}")


@dataclass(frozen=True)
class SweepRecord:
    """One (sum, a, b) conformance check: oracle value vs closed-form case."""

    sum_name: str
    a: int
    b: int
    oracle: int
    case: str
    candidates: tuple[int, ...]
    match: bool


def conformance_sweep(ctx: GF2m) -> Iterator[SweepRecord]:
    """Audit every (a, b) != (0, 0) for the plain sum and each in-scope family sum.

    The family-2 closed form is only defined for odd m and is skipped for
    even m; the other three sums cover every m.
    """
    families = (1, 2, 3) if ctx.m % 2 == 1 else (1, 3)
    for a in ctx.elements():
        for b in ctx.elements():
            if a == 0 and b == 0:
                continue
            observed = plain_char_sum(ctx, a, b)
            closed = plain_char_sum_closed(ctx, a, b)
            yield SweepRecord(
                "plain", a, b, observed, closed.case, closed.candidates, closed.matches(observed)
            )
            for family in families:
                observed = family_char_sum(ctx, family, a, b)
                closed = family_char_sum_closed(ctx, family, a, b)
                yield SweepRecord(
                    f"family{family}",
                    a,
                    b,
                    observed,
                    closed.case,
                    closed.candidates,
                    closed.matches(observed),
                )

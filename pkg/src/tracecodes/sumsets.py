"""XOR s-fold representation counts for derived point sets, via transform and by brute force.

A point set lives in F_2^K with vectors packed as K-bit ints.  The s-fold
count at h is the number of ordered s-tuples of members XORing to h; the
fast route is a Walsh-Hadamard transform, pointwise s-th power, inverse
transform.  The set is an s-sum set when the count is one constant on the
nonzero members and another constant on the nonzero non-members, with the
count at zero reported separately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .codes import TooLargeError, WeightDistribution, enumerate_defining_set
from .field import GF2m, mul_table, trace_coordinates

VARIANTS = ("paper-column", "code-column")
AMBIENT_MAX_DIM = 20


@dataclass(frozen=True)
class OmegaSet:
    """A set of K-bit vectors, with zero membership tracked as a flag.

    vectors holds the distinct nonzero members; include_zero says whether
    the zero vector is also a member.  family/m/variant record how the set
    was built (variant is one of VARIANTS, or 'external').
    """

    ambient_dim: int
    vectors: frozenset[int]
    include_zero: bool
    family: int
    m: int
    variant: str

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        if self.ambient_dim > AMBIENT_MAX_DIM:
            raise TooLargeError(f"ambient dimension {self.ambient_dim} exceeds cap {AMBIENT_MAX_DIM}")
        top = 1 << self.ambient_dim
        for v in self.vectors:
            if not 0 < v < top:
                raise ValueError(f"vector {v} outside nonzero {self.ambient_dim}-bit range")

    @property
    def size(self) -> int:
        return len(self.vectors) + (1 if self.include_zero else 0)

    def with_zero(self, flag: bool) -> OmegaSet:
        if flag == self.include_zero:
            return self
        return OmegaSet(
            self.ambient_dim, self.vectors, flag, self.family, self.m, self.variant
        )


def build_omega(ctx: GF2m, family: int, variant: str) -> OmegaSet:
    """Point set of the family's defining set under the chosen column map.

    paper-column expands each defining pair (x, y) through trace
    coordinates of (y*x^2, y) for family 1 and (y*x^2, x, y) for family 2;
    code-column expands (x*y, x), which reproduces the distinct generator
    matrix columns.  Duplicates collapse; a zero image sets include_zero.
    """
    if family not in (1, 2):
        raise ValueError("point sets are built for families 1 and 2 only")
    if family == 2 and ctx.m % 2 == 0:
        raise ValueError("family-2 point sets are built for odd m only")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    dset = enumerate_defining_set(ctx, family)
    coords = trace_coordinates(ctx)
    mt = mul_table(ctx)
    m = ctx.m
    raw = set()
    for x, y in dset.pairs:
        if variant == "code-column":
            v = coords[mt[x][y]] | (coords[x] << m)
            dim = 2 * m
        elif family == 1:
            yxx = mt[y][mt[x][x]]
            v = coords[yxx] | (coords[y] << m)
            dim = 2 * m
        else:
            yxx = mt[y][mt[x][x]]
            v = coords[yxx] | (coords[x] << m) | (coords[y] << 2 * m)
            dim = 3 * m
        raw.add(v)
    return OmegaSet(
        ambient_dim=dim,
        vectors=frozenset(raw - {0}),
        include_zero=0 in raw,
        family=family,
        m=m,
        variant=variant,
    )


def walsh_hadamard(values: Sequence[int]) -> list[int]:
    """In-place-style WHT butterfly; length must be a power of two.

    Self-inverse up to division by the length.
    """
    n = len(values)
    if n == 0 or n & (n - 1):
        raise ValueError("length must be a power of two")
    out = list(values)
    half = 1
    while half < n:
        for base in range(0, n, 2 * half):
            for i in range(base, base + half):
                x, y = out[i], out[i + half]
                out[i], out[i + half] = x + y, x - y
        half *= 2
    return out


def representation_counts(omega: OmegaSet, s: int) -> list[int]:
    """Exact s-fold XOR representation counts for every h, by transform."""
    if s < 1:
        raise ValueError("s must be at least 1")
    size = 1 << omega.ambient_dim
    indicator = [0] * size
    for v in omega.vectors:
        indicator[v] = 1
    if omega.include_zero:
        indicator[0] = 1
    spectrum = walsh_hadamard(indicator)
    powered = [t**s for t in spectrum]
    back = walsh_hadamard(powered)
    counts = []
    for g in back:
        div, rem = divmod(g, size)
        if rem:
            raise AssertionError("inverse transform did not divide evenly")
        counts.append(div)
    return counts


def representation_counts_naive(omega: OmegaSet, s: int) -> list[int]:
    """Same counts by looping over all |set|^s ordered tuples.  Oracle only."""
    if s < 1:
        raise ValueError("s must be at least 1")
    members = sorted(omega.vectors)
    if omega.include_zero:
        members.append(0)
    counts = [0] * (1 << omega.ambient_dim)
    for tup in itertools.product(members, repeat=s):
        acc = 0
        for v in tup:
            acc ^= v
        counts[acc] += 1
    return counts


def xor_convolve(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Quadratic-time XOR convolution, for cross-checking the transform route."""
    if len(f) != len(g):
        raise ValueError("lengths differ")
    out = [0] * len(f)
    for u, fu in enumerate(f):
        if fu:
            for v, gv in enumerate(g):
                if gv:
                    out[u ^ v] += fu * gv
    return out


def representation_counts_by_convolution(omega: OmegaSet, s: int) -> list[int]:
    """Same counts by folding the indicator with quadratic XOR convolutions.

    Transform-free second oracle; usable where the tuple loop is not.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    indicator = [0] * (1 << omega.ambient_dim)
    for v in omega.vectors:
        indicator[v] = 1
    if omega.include_zero:
        indicator[0] = 1
    counts = indicator
    for _ in range(s - 1):
        counts = xor_convolve(counts, indicator)
    return counts


@dataclass(frozen=True)
class SumSetReport:
    """Verdict for one (point set, s) pair."""

    family: int
    m: int
    s: int
    variant: str
    include_zero: bool
    set_size: int
    is_sum_set: bool
    sigma_members: int | None
    sigma_outside: int | None
    count_at_zero: int
    witness: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "s": self.s,
            "variant": self.variant,
            "include_zero": self.include_zero,
            "is_sum_set": self.is_sum_set,
            "sigma0": self.sigma_members,
            "sigma1": self.sigma_outside,
            "count_at_zero": self.count_at_zero,
        }


def check_sum_set(omega: OmegaSet, s: int) -> SumSetReport:
    """Decide whether the set is an s-sum set over the nonzero vectors.

    s must be odd and greater than 1.  A witness is a pair of vectors in
    the same class whose counts differ; when one class is empty its sigma
    is reported equal to the other's.
    """
    if s <= 1 or s % 2 == 0:
        raise ValueError("s must be odd and greater than 1")
    counts = representation_counts(omega, s)
    members = omega.vectors

    def class_constant(vectors: list[int]) -> tuple[int | None, tuple[int, int] | None]:
        if not vectors:
            return None, None
        first = vectors[0]
        for v in vectors[1:]:
            if counts[v] != counts[first]:
                return None, (first, v)
        return counts[first], None

    inside = sorted(members)
    outside = [h for h in range(1, 1 << omega.ambient_dim) if h not in members]
    sigma_in, witness_in = class_constant(inside)
    sigma_out, witness_out = class_constant(outside)
    witness = witness_in or witness_out
    is_sum_set = witness is None
    if is_sum_set:
        if sigma_in is None:
            sigma_in = sigma_out
        if sigma_out is None:
            sigma_out = sigma_in
    return SumSetReport(
        family=omega.family,
        m=omega.m,
        s=s,
        variant=omega.variant,
        include_zero=omega.include_zero,
        set_size=omega.size,
        is_sum_set=is_sum_set,
        sigma_members=sigma_in if is_sum_set else None,
        sigma_outside=sigma_out if is_sum_set else None,
        count_at_zero=counts[0],
        witness=witness,
    )


def symmetric_three_weight(wd: WeightDistribution, n: int, q: int = 2) -> bool:
    """True iff exactly three nonzero weights, the middle one n(q-1)/q, the outer two averaging it."""
    weights = sorted(w for w in wd if w > 0)
    if len(weights) != 3:
        return False
    w1, w2, w3 = weights
    return w2 * q == n * (q - 1) and (w1 + w3) * q == 2 * n * (q - 1)

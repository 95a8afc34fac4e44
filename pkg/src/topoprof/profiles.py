"""Arithmetic in the commutative semiring of topographic profiles.

A profile records, level by level, how many states of a finite dynamical
system sit at each height above its limit cycles: entry 0 counts the
periodic states, entry i the states exactly i applications of the
transition function away from periodicity.  Every stored entry of a
nonzero profile is strictly positive; the empty dynamical system has the
zero profile, written ``(0)``.

Addition is elementwise (it mirrors disjoint union of systems).  The
product counts, per level, the pairs of component states whose height
maximum lands on that level (it mirrors the tensor product of systems):

    r_i = p_i * Q_i + q_i * P_i - p_i * q_i

with inclusive prefix sums ``P_i = p_0 + ... + p_i`` and likewise ``Q_i``.
These operations make the set of profiles a commutative semiring with
zero ``(0)`` and unit ``(1)``; ``size`` (the sum of the entries) is a
semiring homomorphism onto the naturals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, ParseError, ShapeError

#: Largest value a single profile entry or state count may take.
MAX_COUNT = 2**64 - 1


@dataclass(frozen=True, slots=True)
class Profile:
    """An eventually-null sequence of per-level state counts.

    ``counts`` is kept canonical: trailing zeros are trimmed on
    construction and every remaining entry must be strictly positive.
    The zero profile is the empty tuple.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        for i, c in enumerate(counts):
            if not isinstance(c, int) or isinstance(c, bool):
                raise ShapeError(f"count at height {i} is not an integer: {c!r}")
            if c < 0:
                raise ShapeError(f"negative count at height {i}: {c}")
            if c == 0:
                raise ShapeError(f"zero count at height {i} below a positive entry")
            if c > MAX_COUNT:
                raise CapacityError(f"count at height {i} exceeds 64 bits: {c}")
        object.__setattr__(self, "counts", counts)

    @property
    def is_zero(self) -> bool:
        return not self.counts

    @property
    def size(self) -> int:
        """Number of states of any system realizing this profile."""
        return sum(self.counts)

    @property
    def height(self) -> int:
        """Index of the last stored entry; undefined for the zero profile."""
        if not self.counts:
            raise ValueError("the zero profile has no height")
        return len(self.counts) - 1

    def __add__(self, other: object) -> "Profile":
        if not isinstance(other, Profile):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other: object) -> "Profile":
        if isinstance(other, Profile):
            return mul(self, other)
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other: object) -> "Profile":
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __str__(self) -> str:
        return format_profile(self)


ZERO = Profile()
ONE = Profile((1,))


def make_profile(counts: Iterable[int]) -> Profile:
    """Validate and canonicalize a sequence of counts into a profile.

    Trailing zeros are trimmed; an internal zero (a zero below a positive
    entry) is rejected with a ShapeError naming the offending index.
    """
    return Profile(tuple(counts))


def add(p: Profile, q: Profile) -> Profile:
    """Elementwise sum; the profile of a disjoint union of realizations."""
    a, b = p.counts, q.counts
    if len(a) < len(b):
        a, b = b, a
    return Profile(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))


def mul(p: Profile, q: Profile) -> Profile:
    """Semiring product; the profile of a tensor product of realizations."""
    a, b = p.counts, q.counts
    if not a or not b:
        return ZERO
    pa = 0  # inclusive prefix sum of p
    qa = 0  # inclusive prefix sum of q
    out = []
    for i in range(max(len(a), len(b))):
        pi = a[i] if i < len(a) else 0
        qi = b[i] if i < len(b) else 0
        pa += pi
        qa += qi
        out.append(pi * qa + qi * pa - pi * qi)
    return Profile(tuple(out))


def scalar_mul(n: int, p: Profile) -> Profile:
    """Multiply every entry by the natural n; equals mul(embed_nat(n), p)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"scalar must be a natural number, got {n!r}")
    if n == 0:
        return ZERO
    return Profile(tuple(n * c for c in p.counts))


def embed_nat(n: int) -> Profile:
    """The natural n as the height-0 profile (n); an embedding of the naturals."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a natural number, got {n!r}")
    return Profile((n,)) if n else ZERO


def size(p: Profile) -> int:
    return p.size


def generator_decompose(q: Profile) -> tuple[int, Profile]:
    """Split q as c*(1) + g with g in the generating set of leading-1 profiles.

    Returns ``(q_0 - 1, (1, q_1, ..., q_h))``; the reconstruction
    ``scalar_mul(c, (1)) + g`` gives back q exactly.
    """
    if q.is_zero:
        raise ValueError("the zero profile has no generator decomposition")
    return q.counts[0] - 1, Profile((1,) + q.counts[1:])


def canonical_key(p: Profile) -> tuple[int, int, tuple[int, ...]]:
    """Total order used everywhere: by size, then length, then entries."""
    return (p.size, len(p.counts), p.counts)


def format_profile(p: Profile) -> str:
    if p.is_zero:
        return "(0)"
    return "(" + ",".join(str(c) for c in p.counts) + ")"


def parse_profile(text: str) -> Profile:
    """Parse ``(a,b,...)``; inverse of format_profile on canonical text."""
    i = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i] in " \t\r\n":
            i += 1

    def read_nat() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected a decimal natural", line=1, column=start + 1)
        return int(text[start:i])

    skip_ws()
    if i >= n or text[i] != "(":
        raise ParseError("expected '('", line=1, column=i + 1)
    i += 1
    values = []
    skip_ws()
    values.append(read_nat())
    skip_ws()
    while i < n and text[i] == ",":
        i += 1
        skip_ws()
        values.append(read_nat())
        skip_ws()
    if i >= n or text[i] != ")":
        raise ParseError("expected ',' or ')'", line=1, column=i + 1)
    i += 1
    skip_ws()
    if i != n:
        raise ParseError("unexpected trailing input", line=1, column=i + 1)
    return Profile(tuple(values))

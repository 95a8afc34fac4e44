"""Divisibility, irreducibility and factorisation of profiles.

Division works by peeling the product rule level by level: the quotient
entry at each height is forced by the entries already fixed, so a
candidate divisor is either confirmed with a unique quotient or rejected
in linear time.  Enumeration of profiles of a given size runs over the
compositions of that size (ordered tuples of positive parts), of which
there are 2^(n-1); the census classifies every profile up to a size
bound as reducible or not by closing the nontrivial products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .profiles import ONE, ZERO, Profile, canonical_key, format_profile, mul


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def try_divide(r: Profile, d: Profile) -> Profile | None:
    """Return q with d * q == r, or None when no such profile exists.

    Entries of q are forced left to right: q_0 = r_0 / d_0 and, for
    i >= 1, q_i = (r_i - d_i * Q_{i-1}) / D_i with inclusive prefix sums
    D and Q.  Any negative or non-divisible step rejects; the final
    re-multiplication check makes the routine self-validating.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero profile")
    if r.is_zero:
        return ZERO
    a, b = r.counts, d.counts
    if len(b) > len(a):
        return None
    if a[0] % b[0]:
        return None
    q = [a[0] // b[0]]
    dsum = b[0]  # D_i, inclusive prefix sum of the divisor
    qsum = q[0]  # Q_{i-1}, prefix sum of the quotient built so far
    for i in range(1, len(a)):
        di = b[i] if i < len(b) else 0
        dsum += di
        num = a[i] - di * qsum
        if num < 0 or num % dsum:
            return None
        qi = num // dsum
        q.append(qi)
        qsum += qi
    while q and q[-1] == 0:
        q.pop()
    if any(c == 0 for c in q):
        return None
    quotient = Profile(tuple(q))
    if mul(d, quotient) != r:
        return None
    return quotient


def _bounded_candidates(p: Profile, sizes: set[int]) -> Iterator[Profile]:
    # candidate divisors: valid profiles elementwise <= p whose size is in `sizes`
    for s in sorted(sizes):
        for d in profiles_of_size(s):
            if len(d.counts) <= len(p.counts) and all(
                c <= p.counts[i] for i, c in enumerate(d.counts)
            ):
                yield d


def divisors(p: Profile) -> list[Profile]:
    """Every d such that d * q == p for some profile q, in canonical order.

    Candidates are cut down first: a divisor's entries never exceed the
    product's, and its size must divide the product's size.
    """
    if p.is_zero:
        raise ValueError("every profile divides the zero profile")
    size_divs = {s for s in range(1, p.size + 1) if p.size % s == 0}
    out = [d for d in _bounded_candidates(p, size_divs) if try_divide(p, d) is not None]
    return sorted(out, key=canonical_key)


def is_irreducible(p: Profile) -> bool:
    """True iff p has no factorisation into two profiles both != (1).

    Profiles of prime size are irreducible outright, because size is
    multiplicative and the only size-1 profile is (1).
    """
    if p.is_zero or p == ONE:
        raise ValueError(f"irreducibility is undefined for {format_profile(p)}")
    if _is_prime(p.size):
        return True
    proper = {s for s in range(2, p.size) if p.size % s == 0}
    for d in _bounded_candidates(p, proper):
        if try_divide(p, d) is not None:
            return False
    return True


def factorisations(p: Profile) -> list[tuple[Profile, ...]]:
    """All multisets of irreducible factors (each != (1)) with product p.

    Each multiset is returned as a tuple sorted in canonical order; (1)
    has exactly the empty factorisation.  Recursion only descends into
    factors >= the last one chosen, which deduplicates for free.
    """
    if p.is_zero:
        raise ValueError("the zero profile has no factorisation into irreducibles")

    def expand(target: Profile, floor: Profile | None) -> set[tuple[Profile, ...]]:
        if target == ONE:
            return {()}
        found: set[tuple[Profile, ...]] = set()
        for d in divisors(target):
            if d == ONE or d == target:
                continue
            if floor is not None and canonical_key(d) < canonical_key(floor):
                continue
            if not is_irreducible(d):
                continue
            q = try_divide(target, d)
            assert q is not None
            for rest in expand(q, d):
                found.add((d,) + rest)
        if (floor is None or canonical_key(target) >= canonical_key(floor)) and is_irreducible(target):
            found.add((target,))
        return found

    if p == ONE:
        return [()]
    return sorted(expand(p, None), key=lambda fs: tuple(canonical_key(f) for f in fs))


def profiles_of_size(n: int) -> Iterator[Profile]:
    """Every valid profile of size exactly n, in canonical order.

    These are the compositions of n into positive parts, 2^(n-1) of them
    for n >= 1; size 0 yields only the zero profile.
    """
    if n < 0:
        raise ValueError(f"size must be a natural number, got {n}")
    if n == 0:
        yield ZERO
        return

    def parts(total: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            yield (total,)
            return
        for first in range(1, total - k + 2):
            for rest in parts(total - first, k - 1):
                yield (first,) + rest

    for length in range(1, n + 1):
        for counts in parts(n, length):
            yield Profile(counts)


def profiles_up_to(n: int) -> Iterator[Profile]:
    """Every profile of size at most n, in canonical order."""
    for s in range(n + 1):
        yield from profiles_of_size(s)


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Reducibility statistics for all profiles of size at most n."""

    n: int
    total: int
    reducible: int
    bound: float
    ratio: Fraction


def _reducible_sets(n: int) -> dict[int, set[Profile]]:
    # close the products d*q over all factor sizes l, m >= 2 with l*m <= n
    found: dict[int, set[Profile]] = {s: set() for s in range(n + 1)}
    left = 2
    while left * left <= n:
        for right in range(left, n // left + 1):
            for d in profiles_of_size(left):
                for q in profiles_of_size(right):
                    product = mul(d, q)
                    found[product.size].add(product)
        left += 1
    return found


def _census_bound(n: int) -> float:
    return 1 + n * (2 ** ((n + 1) / 2) - 1) / (2**0.5 - 1)


DEFAULT_CENSUS_CAP = 20


def census_range(n: int, cap: int = DEFAULT_CENSUS_CAP) -> list[CensusReport]:
    """Census rows for every size bound 1..n (one classification pass)."""
    if n < 1:
        raise ValueError(f"census needs a size bound >= 1, got {n}")
    if n > cap:
        raise ValueError(f"census up to size {n} exceeds the cap {cap}; raise the cap explicitly")
    by_size = _reducible_sets(n)
    rows = []
    running = 0
    for m in range(1, n + 1):
        running += len(by_size[m])
        rows.append(
            CensusReport(
                n=m,
                total=2**m,
                reducible=running,
                bound=_census_bound(m),
                ratio=Fraction(running, 2**m),
            )
        )
    return rows


def census(n: int, cap: int = DEFAULT_CENSUS_CAP) -> CensusReport:
    """Classify every profile of size <= n; most of them are irreducible."""
    return census_range(n, cap=cap)[-1]


def format_census_table(rows: list[CensusReport]) -> str:
    """Aligned human-readable census table."""
    header = ("n", "total", "reducible", "ratio", "bound")
    body = [
        (str(r.n), str(r.total), str(r.reducible), f"{float(r.ratio):.6f}", f"{r.bound:.1f}")
        for r in rows
    ]
    widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(widths[i]) for i, h in enumerate(header))]
    for row in body:
        lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def format_census_machine(rows: list[CensusReport]) -> str:
    """One line per size bound: ``n total reducible bound ratio``."""
    return (
        "\n".join(
            f"{r.n} {r.total} {r.reducible} {r.bound:.6f} {r.ratio.numerator}/{r.ratio.denominator}"
            for r in rows
        )
        + "\n"
    )


def factor_nat_profile(p: Profile) -> Profile | None:
    """Nontrivial divisor of a height-0 profile (n), or None when n is prime.

    Height-0 profiles multiply exactly like the naturals, so this is
    plain trial division returning the smallest factor.
    """
    if p.is_zero or len(p.counts) != 1:
        raise ValueError(f"expected a nonzero height-0 profile, got {format_profile(p)}")
    n = p.counts[0]
    if n == 1:
        raise ValueError("(1) is the unit and has no factorisation")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return Profile((d,))
        d += 1
    return None


def multiplication_table(max_size: int) -> tuple[list[Profile], list[list[Profile]]]:
    """Headers (profiles of size <= max_size, canonical order) and all products."""
    if max_size < 0:
        raise ValueError(f"table size must be a natural number, got {max_size}")
    headers = list(profiles_up_to(max_size))
    cells = [[mul(r, c) for c in headers] for r in headers]
    return headers, cells


def render_multiplication_table(max_size: int) -> str:
    """Plain-text multiplication table with an ``x`` corner cell."""
    headers, cells = multiplication_table(max_size)
    labels = [format_profile(h) for h in headers]
    grid = [["x"] + labels]
    for label, row in zip(labels, cells):
        grid.append([label] + [format_profile(c) for c in row])
    widths = [max(len(grid[r][c]) for r in range(len(grid))) for c in range(len(grid[0]))]
    lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in grid]
    return "\n".join(lines) + "\n"

"""Polynomials over profiles and a complete bounded solver.

An equation system has polynomial left-hand sides over a shared variable
namespace and constant profile right-hand sides.  Constant right-hand
sides make the search finite: whenever a solution exists, one exists in
which every entry of every variable is bounded by the corresponding
right-hand-side entry, so the solver enumerates exactly the valid
profiles inside that elementwise box (plus the zero profile) and prunes
on elementwise monotonicity.  A naive no-pruning enumerator over the same
candidate space doubles as an independent test oracle.

Text grammar (one equation per line, ``#`` comments, whitespace
insensitive):

    equation := poly "=" (profile | natural)
    poly     := term ("+" term)*
    term     := factor ("*" factor)*
    factor   := profile | natural | var ("^" natural)?
    profile  := "(" natural ("," natural)* ")"
    var      := letter (letter | digit | "_")*

A bare natural n denotes the height-0 profile (n).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import ParseError, SearchSpaceError
from .profiles import (
    ONE,
    ZERO,
    Profile,
    add,
    canonical_key,
    embed_nat,
    format_profile,
    mul,
)

MAX_EXPONENT = 15
DEFAULT_MAX_CANDIDATES = 10**8

Assignment = dict[str, Profile]


@dataclass(frozen=True, slots=True)
class Monomial:
    coefficient: Profile
    exponents: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ProfilePolynomial:
    """Normalized sum of monomials over a fixed, ordered variable tuple.

    Monomials with equal exponent vectors are merged by adding their
    coefficients, zero coefficients are dropped, and the remaining
    monomials are sorted by descending exponent vector, so structurally
    equal polynomials compare equal.
    """

    variables: tuple[str, ...]
    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        merged: dict[tuple[int, ...], Profile] = {}
        for m in self.monomials:
            if len(m.exponents) != len(self.variables):
                raise ValueError(
                    f"monomial has {len(m.exponents)} exponents for {len(self.variables)} variables"
                )
            if any(e < 0 for e in m.exponents):
                raise ValueError(f"negative exponent in {m.exponents}")
            if m.coefficient.is_zero:
                continue
            merged[m.exponents] = add(merged.get(m.exponents, ZERO), m.coefficient)
        normal = tuple(
            Monomial(coefficient, exponents)
            for exponents, coefficient in sorted(merged.items(), reverse=True)
        )
        object.__setattr__(self, "monomials", normal)
        object.__setattr__(self, "variables", tuple(self.variables))


@dataclass(frozen=True, slots=True)
class EquationSystem:
    """Equations (lhs polynomial, constant rhs) over one variable namespace."""

    variables: tuple[str, ...]
    equations: tuple[tuple[ProfilePolynomial, Profile], ...]

    def __post_init__(self) -> None:
        for poly, _rhs in self.equations:
            if poly.variables != self.variables:
                raise ValueError("every equation must share the system's variable tuple")


def _power(base: Profile, exponent: int) -> Profile:
    out = ONE
    for _ in range(exponent):
        out = mul(out, base)
    return out


def evaluate(poly: ProfilePolynomial, assignment: Mapping[str, Profile]) -> Profile:
    """Value of the polynomial under a total assignment."""
    total = ZERO
    for m in poly.monomials:
        term = m.coefficient
        for var, e in zip(poly.variables, m.exponents):
            if e:
                term = mul(term, _power(assignment[var], e))
        total = add(total, term)
    return total


# --- parsing -----------------------------------------------------------------

_SYMBOLS = set("(),+*^=")


def _tokenize(line: str, lineno: int) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch in " \t\r":
            i += 1
            continue
        if ch == "#":
            break
        col = i + 1
        if ch.isdigit():
            start = i
            while i < n and line[i].isdigit():
                i += 1
            tokens.append(("nat", int(line[start:i]), col))
        elif ch.isalpha():
            start = i
            while i < n and (line[i].isalnum() or line[i] == "_"):
                i += 1
            tokens.append(("var", line[start:i], col))
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line=lineno, column=col)
    tokens.append(("end", None, n + 1))
    return tokens


class _LineParser:
    def __init__(self, line: str, lineno: int):
        self.tokens = _tokenize(line, lineno)
        self.lineno = lineno
        self.pos = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, object, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, object, int]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", line=self.lineno, column=tok[2])
        return tok

    def fail(self, message: str, column: int) -> None:
        raise ParseError(message, line=self.lineno, column=column)

    def parse_profile_literal(self) -> Profile:
        _, _, col = self.expect("(")
        values = [self.expect("nat")[1]]
        while self.peek()[0] == ",":
            self.next()
            values.append(self.expect("nat")[1])
        self.expect(")")
        try:
            return Profile(tuple(values))  # type: ignore[arg-type]
        except ValueError as exc:
            raise ParseError(f"invalid profile literal: {exc}", line=self.lineno, column=col)

    def parse_term(self) -> tuple[Profile, dict[str, int]]:
        coefficient = ONE
        exponents: dict[str, int] = {}
        while True:
            kind, value, col = self.peek()
            if kind == "(":
                coefficient = mul(coefficient, self.parse_profile_literal())
            elif kind == "nat":
                self.next()
                coefficient = mul(coefficient, embed_nat(value))  # type: ignore[arg-type]
            elif kind == "var":
                self.next()
                e = 1
                if self.peek()[0] == "^":
                    self.next()
                    _, e, ecol = self.expect("nat")
                    if e > MAX_EXPONENT:  # type: ignore[operator]
                        self.fail(f"exponent {e} exceeds the cap {MAX_EXPONENT}", ecol)
                exponents[value] = exponents.get(value, 0) + e  # type: ignore[index,operator]
                if exponents[value] > MAX_EXPONENT:  # type: ignore[index]
                    self.fail(f"total exponent of {value} exceeds the cap {MAX_EXPONENT}", col)
            else:
                self.fail("expected a profile, natural or variable", col)
            if self.peek()[0] != "*":
                return coefficient, exponents
            self.next()

    def parse_equation(self) -> tuple[list[tuple[Profile, dict[str, int]]], Profile]:
        terms = [self.parse_term()]
        while self.peek()[0] == "+":
            self.next()
            terms.append(self.parse_term())
        self.expect("=")
        kind, value, col = self.peek()
        if kind == "(":
            rhs = self.parse_profile_literal()
        elif kind == "nat":
            self.next()
            rhs = embed_nat(value)  # type: ignore[arg-type]
        else:
            self.fail("right-hand side must be a constant profile", col)
        self.expect("end")
        return terms, rhs


def parse_equation_system(text: str) -> EquationSystem:
    """Parse the grammar above; variables keep first-occurrence order."""
    parsed: list[tuple[list[tuple[Profile, dict[str, int]]], Profile]] = []
    variables: list[str] = []
    seen: set[str] = set()
    nonempty = 0
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        nonempty += 1
        terms, rhs = _LineParser(line, lineno).parse_equation()
        for _, exponents in terms:
            for var in exponents:
                if var not in seen:
                    seen.add(var)
                    variables.append(var)
        parsed.append((terms, rhs))
    if not nonempty:
        raise ParseError("empty input: no equations", line=1, column=1)
    var_tuple = tuple(variables)
    index = {v: i for i, v in enumerate(var_tuple)}
    equations = []
    for terms, rhs in parsed:
        monomials = []
        for coefficient, exponents in terms:
            vector = [0] * len(var_tuple)
            for var, e in exponents.items():
                vector[index[var]] = e
            monomials.append(Monomial(coefficient, tuple(vector)))
        equations.append((ProfilePolynomial(var_tuple, tuple(monomials)), rhs))
    return EquationSystem(var_tuple, tuple(equations))


# --- formatting ---------------------------------------------------------------


def format_polynomial(poly: ProfilePolynomial) -> str:
    if not poly.monomials:
        return "(0)"
    parts = []
    for m in poly.monomials:
        factors = [
            f"{v}^{e}" if e > 1 else v for v, e in zip(poly.variables, m.exponents) if e
        ]
        if m.coefficient != ONE or not factors:
            factors.insert(0, format_profile(m.coefficient))
        parts.append("*".join(factors))
    return " + ".join(parts)


def format_equation_system(system: EquationSystem) -> str:
    return (
        "\n".join(
            f"{format_polynomial(poly)} = {format_profile(rhs)}"
            for poly, rhs in system.equations
        )
        + "\n"
    )


def format_solutions(solutions: Sequence[Mapping[str, Profile]], variables: Sequence[str]) -> str:
    """One ``VAR = (...)`` line per variable; records separated by ``---``."""
    blocks = [
        "\n".join(f"{v} = {format_profile(sol[v])}" for v in variables) for sol in solutions
    ]
    return "\n---\n".join(blocks) + "\n" if blocks else ""


# --- bounded solving ----------------------------------------------------------


def _rhs_bound(system: EquationSystem) -> tuple[int, ...]:
    # elementwise max over all right-hand sides
    bound: list[int] = []
    for _poly, rhs in system.equations:
        for i, c in enumerate(rhs.counts):
            if i < len(bound):
                bound[i] = max(bound[i], c)
            else:
                bound.append(c)
    return tuple(bound)


def _candidate_count(bound: tuple[int, ...]) -> int:
    total, prod = 1, 1
    for b in bound:
        prod *= b
        total += prod
    return total


def _candidates(bound: tuple[int, ...]) -> list[Profile]:
    # the zero profile plus every valid profile inside the elementwise box
    out = [ZERO]
    for length in range(1, len(bound) + 1):
        for counts in itertools.product(*(range(1, bound[i] + 1) for i in range(length))):
            out.append(Profile(counts))
    out.sort(key=canonical_key)
    return out


def _fits(p: Profile, rhs: Profile) -> bool:
    if len(p.counts) > len(rhs.counts):
        return False
    return all(c <= rhs.counts[i] for i, c in enumerate(p.counts))


@dataclass(frozen=True, slots=True)
class _EquationPlan:
    rhs: Profile
    constant: Profile
    ready: tuple[tuple[Monomial, ...], ...]  # monomials computable once var d is set
    full_depth: int


def _plan(system: EquationSystem) -> list[_EquationPlan]:
    m = len(system.variables)
    plans = []
    for poly, rhs in system.equations:
        constant = ZERO
        ready: list[list[Monomial]] = [[] for _ in range(m)]
        full_depth = 0
        for mono in poly.monomials:
            deps = [i for i, e in enumerate(mono.exponents) if e]
            if not deps:
                constant = add(constant, mono.coefficient)
            else:
                depth = max(deps)
                ready[depth].append(mono)
                full_depth = max(full_depth, depth + 1)
        plans.append(_EquationPlan(rhs, constant, tuple(tuple(r) for r in ready), full_depth))
    return plans


def _monomial_value(mono: Monomial, values: list[Profile]) -> Profile:
    term = mono.coefficient
    for i, e in enumerate(mono.exponents):
        if e:
            term = mul(term, _power(values[i], e))
    return term


def _search(
    plans: list[_EquationPlan],
    candidates: Sequence[Profile],
    first_var_candidates: Sequence[Profile],
    num_vars: int,
) -> Iterator[tuple[Profile, ...]]:
    values: list[Profile] = [ZERO] * num_vars

    def rec(depth: int, accs: tuple[Profile, ...]) -> Iterator[tuple[Profile, ...]]:
        if depth == num_vars:
            yield tuple(values)
            return
        pool = first_var_candidates if depth == 0 else candidates
        for candidate in pool:
            values[depth] = candidate
            next_accs = []
            viable = True
            for plan, acc in zip(plans, accs):
                for mono in plan.ready[depth]:
                    acc = add(acc, _monomial_value(mono, values))
                if not _fits(acc, plan.rhs) or (plan.full_depth == depth + 1 and acc != plan.rhs):
                    viable = False
                    break
                next_accs.append(acc)
            if viable:
                yield from rec(depth + 1, tuple(next_accs))

    initial = tuple(plan.constant for plan in plans)
    for plan, acc in zip(plans, initial):
        if not _fits(acc, plan.rhs) or (plan.full_depth == 0 and acc != plan.rhs):
            return
    yield from rec(0, initial)


def _check_guard(count_per_var: int, num_vars: int, max_candidates: int | None) -> None:
    if max_candidates is None:
        return
    total = count_per_var**num_vars
    if total > max_candidates:
        raise SearchSpaceError(
            f"candidate space holds {total} assignments "
            f"({count_per_var} per variable over {num_vars} variables), "
            f"above the cap {max_candidates}"
        )


def solve(
    system: EquationSystem,
    mode: str = "all",
    max_candidates: int | None = DEFAULT_MAX_CANDIDATES,
    threads: int = 1,
):
    """Complete bounded search for solutions of a constant-rhs system.

    mode "all" returns every bounded solution in canonical candidate
    order, "first" the first of those or None, "count" their number.
    Any satisfiable system has a solution inside the bounds, so an empty
    result means unsatisfiable.  ``threads`` partitions the first
    variable's candidates; results are merged deterministically and are
    identical to the single-threaded ones.
    """
    if mode not in ("first", "all", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    variables = system.variables
    bound = _rhs_bound(system)
    _check_guard(_candidate_count(bound), len(variables), max_candidates)
    plans = _plan(system)
    candidates = _candidates(bound)
    num_vars = len(variables)

    if threads == 1 or num_vars == 0 or len(candidates) == 1:
        return _package(_run_mode(_search(plans, candidates, candidates, num_vars), mode), variables, mode)

    # partition the first variable's candidates; merge in chunk order
    chunk_size = (len(candidates) + threads - 1) // threads
    chunks = [candidates[i : i + chunk_size] for i in range(0, len(candidates), chunk_size)]
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [
            pool.submit(
                lambda ch: _run_mode(_search(plans, candidates, ch, num_vars), mode), chunk
            )
            for chunk in chunks
        ]
        partials = [f.result() for f in futures]
    if mode == "count":
        return sum(partials)
    if mode == "first":
        for part in partials:
            if part is not None:
                return _package(part, variables, mode)
        return None
    merged: list[tuple[Profile, ...]] = []
    for part in partials:
        merged.extend(part)
    return _package(merged, variables, mode)


def _run_mode(found: Iterator[tuple[Profile, ...]], mode: str):
    if mode == "first":
        return next(found, None)
    if mode == "count":
        return sum(1 for _ in found)
    return list(found)


def _package(result, variables: tuple[str, ...], mode: str):
    if mode == "count":
        return result
    if mode == "first":
        return None if result is None else dict(zip(variables, result))
    return [dict(zip(variables, tup)) for tup in result]


def brute_force_oracle(
    system: EquationSystem, max_candidates: int | None = DEFAULT_MAX_CANDIDATES
) -> list[Assignment]:
    """Reference solver: plain enumeration of the candidate box, no pruning."""
    variables = system.variables
    bound = _rhs_bound(system)
    _check_guard(_candidate_count(bound), len(variables), max_candidates)
    candidates = _candidates(bound)
    solutions = []
    for combo in itertools.product(candidates, repeat=len(variables)):
        assignment = dict(zip(variables, combo))
        if all(evaluate(poly, assignment) == rhs for poly, rhs in system.equations):
            solutions.append(assignment)
    return solutions


# --- size projection ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SizeProjectedSystem:
    """The image of a system under the size homomorphism, over the naturals.

    Every profile solution yields a solution of this integer system by
    taking sizes, so unsatisfiability here certifies unsatisfiability of
    the original.  When every coefficient and right-hand side has height
    0 the two systems are equisatisfiable, not just related one way.
    """

    variables: tuple[str, ...]
    equations: tuple[tuple[tuple[tuple[int, tuple[int, ...]], ...], int], ...]
    equisatisfiable: bool

    def satisfied_by(self, sizes: Mapping[str, int]) -> bool:
        values = [sizes[v] for v in self.variables]
        for monomials, rhs in self.equations:
            total = 0
            for coefficient, exponents in monomials:
                term = coefficient
                for value, e in zip(values, exponents):
                    term *= value**e
                total += term
            if total != rhs:
                return False
        return True

    def satisfied_by_profiles(self, assignment: Mapping[str, Profile]) -> bool:
        return self.satisfied_by({v: p.size for v, p in assignment.items()})

    def as_text(self) -> str:
        lines = []
        for monomials, rhs in self.equations:
            parts = []
            for coefficient, exponents in monomials:
                factors = [
                    f"{v}^{e}" if e > 1 else v
                    for v, e in zip(self.variables, exponents)
                    if e
                ]
                if coefficient != 1 or not factors:
                    factors.insert(0, str(coefficient))
                parts.append("*".join(factors))
            lines.append(" + ".join(parts) + f" = {rhs}")
        return "\n".join(lines) + "\n"


def size_projection(system: EquationSystem) -> SizeProjectedSystem:
    """Map every constant to its size, giving an integer equation system."""
    natural = True
    equations = []
    for poly, rhs in system.equations:
        if len(rhs.counts) > 1:
            natural = False
        monomials = []
        for mono in poly.monomials:
            if len(mono.coefficient.counts) > 1:
                natural = False
            monomials.append((mono.coefficient.size, mono.exponents))
        equations.append((tuple(monomials), rhs.size))
    return SizeProjectedSystem(system.variables, tuple(equations), natural)


# --- aggregation of a system into one equation --------------------------------


def ones_profile(i: int) -> Profile:
    """The all-ones profile of length i (i >= 1)."""
    if i < 1:
        raise ValueError(f"length must be >= 1, got {i}")
    return Profile((1,) * i)


def combine_to_single(system: EquationSystem) -> EquationSystem:
    """Aggregate n equations with rhs (1) into one equation.

    Equation i is scaled by the all-ones profile of length i and the
    results are summed, with right-hand side the sum of those profiles
    (n, n-1, ..., 1).  Every solution of the system solves the combined
    equation; the converse can fail, because a single variable may absorb
    the whole aggregated right-hand side (see the package tests), so the
    combined equation generally has a superset of the system's solutions.
    """
    if not system.equations:
        raise ValueError("cannot combine an empty system")
    for poly, rhs in system.equations:
        if rhs != ONE:
            raise ValueError(f"every right-hand side must be (1), got {format_profile(rhs)}")
        for mono in poly.monomials:
            if len(mono.coefficient.counts) > 1:
                raise ValueError("coefficients must be height-0 (natural) profiles")
    combined: list[Monomial] = []
    rhs_total = ZERO
    for i, (poly, _rhs) in enumerate(system.equations, start=1):
        weight = ones_profile(i)
        rhs_total = add(rhs_total, weight)
        for mono in poly.monomials:
            combined.append(Monomial(mul(weight, mono.coefficient), mono.exponents))
    lhs = ProfilePolynomial(system.variables, tuple(combined))
    return EquationSystem(system.variables, ((lhs, rhs_total),))

"""Encoding one-in-three satisfiability as linear profile equations.

Each Boolean variable x becomes a pair of profile variables X and Xn
with the equation X + Xn = (1), which forces one of them to (1) and the
other to (0); each clause becomes the equation L1 + L2 + L3 = (1) over
the variables of its literals.  Interpreting (1) as true and (0) as
false, the solutions of the generated system are exactly the assignments
making one literal per clause true.  The encoding is applied verbatim,
including duplicate literals within a clause.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .profiles import ONE, ZERO, Profile
from .equations import EquationSystem, Monomial, ProfilePolynomial

#: (1-based variable index, negated?)
Literal = tuple[int, bool]


@dataclass(frozen=True, slots=True)
class Cnf3Formula:
    """Conjunction of exactly-three-literal clauses over variables 1..num_vars."""

    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be a natural number, got {self.num_vars}")
        for ci, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {ci + 1} has {len(clause)} literals, expected 3")
            for var, _negated in clause:
                if not 1 <= var <= self.num_vars:
                    raise ValueError(
                        f"clause {ci + 1} uses variable {var} outside [1,{self.num_vars}]"
                    )


def positive_var(i: int) -> str:
    return f"X{i}"


def negative_var(i: int) -> str:
    return f"Xn{i}"


def sat_to_system(formula: Cnf3Formula) -> EquationSystem:
    """The equation system whose solutions are the one-in-three assignments.

    Deterministic layout: variables X1, Xn1, X2, Xn2, ...; one pairing
    equation per Boolean variable first, then one equation per clause in
    input order, so the generated text is byte-stable.
    """
    variables = tuple(
        name for i in range(1, formula.num_vars + 1) for name in (positive_var(i), negative_var(i))
    )
    index = {v: i for i, v in enumerate(variables)}
    width = len(variables)

    def var_monomial(name: str, copies: int = 1) -> Monomial:
        exponents = [0] * width
        exponents[index[name]] = 1
        return Monomial(Profile((copies,)), tuple(exponents))

    equations = []
    for i in range(1, formula.num_vars + 1):
        poly = ProfilePolynomial(
            variables, (var_monomial(positive_var(i)), var_monomial(negative_var(i)))
        )
        equations.append((poly, ONE))
    for clause in formula.clauses:
        counts: dict[str, int] = {}
        for var, negated in clause:
            name = negative_var(var) if negated else positive_var(var)
            counts[name] = counts.get(name, 0) + 1
        poly = ProfilePolynomial(
            variables, tuple(var_monomial(name, c) for name, c in counts.items())
        )
        equations.append((poly, ONE))
    return EquationSystem(variables, tuple(equations))


def solution_to_assignment(
    solution: dict[str, Profile], formula: Cnf3Formula
) -> dict[int, bool]:
    """Read a solver solution back as a Boolean assignment ((1) = true)."""
    out = {}
    for i in range(1, formula.num_vars + 1):
        for name in (positive_var(i), negative_var(i)):
            value = solution[name]
            if value != ZERO and value != ONE:
                raise ValueError(f"variable {name} is not 0/1-valued: {value}")
        out[i] = solution[positive_var(i)] == ONE
    return out


def parse_cnf3(text: str) -> Cnf3Formula:
    """DIMACS-like input: header ``p oitcnf <vars> <clauses>``, then one
    clause per line as three nonzero integers terminated by 0 (negative
    means negated).  ``c`` lines are comments."""
    header: tuple[int, int] | None = None
    clauses: list[tuple[Literal, Literal, Literal]] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if header is not None:
                raise ParseError("duplicate header", line=lineno, column=1)
            fields = stripped.split()
            if len(fields) != 4 or fields[1] != "oitcnf":
                raise ParseError("expected header 'p oitcnf <vars> <clauses>'", line=lineno, column=1)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError("header counts must be integers", line=lineno, column=1)
            continue
        if header is None:
            raise ParseError("clause before the 'p oitcnf' header", line=lineno, column=1)
        try:
            values = [int(tok) for tok in stripped.split()]
        except ValueError:
            raise ParseError("clause lines must contain integers", line=lineno, column=1)
        if not values or values[-1] != 0:
            raise ParseError("clause line must end with 0", line=lineno, column=1)
        literals = values[:-1]
        if len(literals) != 3:
            raise ParseError(f"expected 3 literals, found {len(literals)}", line=lineno, column=1)
        clause = []
        for lit in literals:
            if lit == 0:
                raise ParseError("literal 0 inside a clause", line=lineno, column=1)
            if abs(lit) > header[0]:
                raise ParseError(f"variable {abs(lit)} outside [1,{header[0]}]", line=lineno, column=1)
            clause.append((abs(lit), lit < 0))
        clauses.append(tuple(clause))  # type: ignore[arg-type]
    if header is None:
        raise ParseError("missing 'p oitcnf' header", line=1, column=1)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}", line=1, column=1)
    return Cnf3Formula(header[0], tuple(clauses))


def format_cnf3(formula: Cnf3Formula) -> str:
    lines = [f"p oitcnf {formula.num_vars} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(-var if negated else var) for var, negated in clause) + " 0")
    return "\n".join(lines) + "\n"

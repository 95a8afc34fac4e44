import random

import pytest
from hypothesis import given, strategies as st

from topoprof import (
    ONE,
    ZERO,
    EquationSystem,
    Monomial,
    ParseError,
    Profile,
    ProfilePolynomial,
    SearchSpaceError,
    add,
    brute_force_oracle,
    combine_to_single,
    evaluate,
    format_equation_system,
    format_polynomial,
    format_solutions,
    make_profile,
    mul,
    ones_profile,
    parse_equation_system,
    size_projection,
    solve,
)

from oracles import canon, random_equation_system

profiles = st.lists(st.integers(min_value=1, max_value=5), max_size=3).map(
    lambda c: Profile(tuple(c))
)


def single(text: str) -> EquationSystem:
    return parse_equation_system(text)


class TestParser:
    def test_linear_equation(self):
        system = single("3*X = (3,6)")
        assert system.variables == ("X",)
        assert len(system.equations) == 1
        poly, rhs = system.equations[0]
        assert rhs == make_profile([3, 6])
        assert poly.monomials == (Monomial(make_profile([3]), (1,)),)

    def test_exponent(self):
        system = single("(1,1)*X + Y^2 = (2,4)")
        assert system.variables == ("X", "Y")
        poly, _ = system.equations[0]
        assert Monomial(ONE, (0, 2)) in poly.monomials
        assert Monomial(make_profile([1, 1]), (1, 0)) in poly.monomials

    def test_variable_rhs_rejected(self):
        with pytest.raises(ParseError, match="constant"):
            single("X = Y")

    def test_empty_input_rejected(self):
        with pytest.raises(ParseError, match="empty"):
            single("   \n# only a comment\n")

    def test_comments_and_blank_lines(self):
        system = single("# heading\n\nX = (1)  # trailing\n\n")
        assert len(system.equations) == 1

    def test_bare_natural_rhs(self):
        assert single("X = 1").equations[0][1] == ONE

    def test_repeated_variable_multiplies(self):
        poly, _ = single("X*X*X = (8)").equations[0]
        assert poly.monomials == (Monomial(ONE, (3,)),)

    def test_duplicate_terms_merge(self):
        poly, _ = single("X + X + X = (3)").equations[0]
        assert poly.monomials == (Monomial(make_profile([3]), (1,)),)

    def test_exponent_cap(self):
        with pytest.raises(ParseError, match="cap"):
            single("X^16 = (1)")

    def test_invalid_profile_literal_position(self):
        with pytest.raises(ParseError) as exc:
            single("X = (1,0,2)")
        assert exc.value.line == 1
        assert exc.value.column == 5

    def test_unexpected_character(self):
        with pytest.raises(ParseError, match="unexpected"):
            single("X & Y = (1)")

    def test_variables_keep_first_occurrence_order(self):
        system = single("B + A = (2)\nC*A = (0)")
        assert system.variables == ("B", "A", "C")


class TestEvaluate:
    def test_scalar_multiple(self):
        poly, _ = single("3*X = (3,6)").equations[0]
        assert evaluate(poly, {"X": make_profile([1, 2])}) == make_profile([3, 6])

    def test_zeroth_power_is_unit(self):
        poly, _ = single("X^0 = (1)").equations[0]
        assert evaluate(poly, {"X": make_profile([5, 5])}) == ONE

    def test_product_of_variables(self):
        poly, _ = single("X*Y = (2,4)").equations[0]
        assert evaluate(
            poly, {"X": make_profile([1, 1]), "Y": make_profile([2, 1])}
        ) == make_profile([2, 4])

    @given(profiles, profiles, profiles, profiles)
    def test_coefficient_distributivity(self, p, q, r, x):
        variables = ("X",)
        joint = ProfilePolynomial(variables, (Monomial(mul(p, add(q, r)), (1,)),))
        split = ProfilePolynomial(
            variables, (Monomial(mul(p, q), (1,)), Monomial(mul(p, r), (1,)))
        )
        assert evaluate(joint, {"X": x}) == evaluate(split, {"X": x})


class TestFormatting:
    def test_polynomial(self):
        poly, _ = single("(2,1)*X^2*Y + 3 = (9)").equations[0]
        assert format_polynomial(poly) == "(2,1)*X^2*Y + (3)"

    def test_system_round_trip(self):
        text = "X1 + Xn1 = (1)\n(3)*X1 = (1)\n"
        system = parse_equation_system(text)
        assert format_equation_system(system) == text
        assert parse_equation_system(format_equation_system(system)) == system

    def test_solutions_format(self):
        sols = [{"X": ONE, "Y": ZERO}, {"X": ZERO, "Y": ONE}]
        assert (
            format_solutions(sols, ("X", "Y"))
            == "X = (1)\nY = (0)\n---\nX = (0)\nY = (1)\n"
        )


class TestSolve:
    def test_unique_solution(self):
        assert solve(single("3*X = (3,6)")) == [{"X": make_profile([1, 2])}]

    def test_exactly_one_of_two(self):
        sols = solve(single("X + Xp = 1"))
        assert canon(sols) == canon(
            [{"X": ONE, "Xp": ZERO}, {"X": ZERO, "Xp": ONE}]
        )

    def test_zero_rhs(self):
        assert solve(single("X = (0)")) == [{"X": ZERO}]

    def test_prime_size_product_splits_trivially(self):
        sols = solve(single("X*Y = (1,2)"))
        assert canon(sols) == canon(
            [
                {"X": ONE, "Y": make_profile([1, 2])},
                {"X": make_profile([1, 2]), "Y": ONE},
            ]
        )

    def test_unsatisfiable(self):
        assert solve(single("X + (1) = (0)")) == []
        assert solve(single("X + (1) = (0)"), mode="first") is None
        assert solve(single("X + (1) = (0)"), mode="count") == 0

    def test_first_mode_is_canonically_smallest(self):
        assert solve(single("X + Xp = 1"), mode="first") == {"X": ZERO, "Xp": ONE}

    def test_count_mode(self):
        assert solve(single("X + Xp = 1"), mode="count") == 2

    def test_empty_system_has_the_empty_assignment(self):
        empty = EquationSystem((), ())
        assert solve(empty) == [{}]
        assert brute_force_oracle(empty) == [{}]

    def test_solutions_satisfy_all_equations(self):
        rng = random.Random(23)
        for _ in range(40):
            system = random_equation_system(rng)
            for sol in solve(system):
                for poly, rhs in system.equations:
                    assert evaluate(poly, sol) == rhs

    def test_agrees_with_oracle(self):
        rng = random.Random(29)
        for _ in range(60):
            system = random_equation_system(rng)
            assert canon(solve(system)) == canon(brute_force_oracle(system))

    def test_solutions_fit_the_rhs_bounds(self):
        rng = random.Random(31)
        for _ in range(40):
            system = random_equation_system(rng)
            bound: dict[int, int] = {}
            for _poly, rhs in system.equations:
                for i, c in enumerate(rhs.counts):
                    bound[i] = max(bound.get(i, 0), c)
            for sol in solve(system):
                for p in sol.values():
                    assert all(c <= bound[i] for i, c in enumerate(p.counts))

    def test_guard(self):
        with pytest.raises(SearchSpaceError, match="candidate space"):
            solve(single("A*B*C*D*E*F*G*H = (9,9,9,9)"), max_candidates=10**6)

    def test_guard_can_be_lifted(self):
        system = single("X = (2,2)")
        assert solve(system, max_candidates=None) == [{"X": make_profile([2, 2])}]

    def test_threads_do_not_change_results(self):
        rng = random.Random(37)
        for _ in range(10):
            system = random_equation_system(rng)
            base = solve(system)
            assert solve(system, threads=3) == base
            assert solve(system, mode="count", threads=3) == len(base)
            first = solve(system, mode="first", threads=3)
            assert first == (base[0] if base else None)

    def test_more_threads_than_candidates(self):
        system = single("X + Xp = (1)")
        assert solve(system, threads=50) == solve(system)

    def test_threads_must_be_positive(self):
        with pytest.raises(ValueError):
            solve(single("X = (1)"), threads=0)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            solve(single("X = (1)"), mode="everything")


class TestSizeProjection:
    def test_natural_system_is_equisatisfiable(self):
        projected = size_projection(single("3*X = (9)"))
        assert projected.equisatisfiable
        assert projected.as_text() == "3*X = 9\n"
        assert projected.satisfied_by({"X": 3})
        assert not projected.satisfied_by({"X": 2})

    def test_general_rhs_is_necessary_only(self):
        projected = size_projection(single("3*X = (3,6)"))
        assert not projected.equisatisfiable
        assert projected.satisfied_by({"X": 3})

    def test_every_solution_projects_to_a_size_solution(self):
        rng = random.Random(41)
        for _ in range(40):
            system = random_equation_system(rng)
            projected = size_projection(system)
            for sol in solve(system):
                assert projected.satisfied_by_profiles(sol)


class TestOnesProfile:
    def test_values(self):
        assert ones_profile(1) == ONE
        assert ones_profile(3) == make_profile([1, 1, 1])

    def test_rejects_zero_length(self):
        with pytest.raises(ValueError):
            ones_profile(0)

    def test_prefix_matrix_has_unit_determinant(self):
        n = 4
        matrix = [
            [(ones_profile(i).counts + (0,) * n)[j] for i in range(1, n + 1)]
            for j in range(n)
        ]

        def det(m):
            if len(m) == 1:
                return m[0][0]
            total = 0
            for c in range(len(m)):
                minor = [row[:c] + row[c + 1 :] for row in m[1:]]
                total += (-1) ** c * m[0][c] * det(minor)
            return total

        assert det(matrix) == 1


class TestCombineToSingle:
    def test_single_equation_unchanged_solutions(self):
        system = single("X + Xp = (1)")
        combined = combine_to_single(system)
        assert canon(solve(combined)) == canon(solve(system))

    def test_rhs_is_staircase(self):
        system = single("X = (1)\nY = (1)")
        combined = combine_to_single(system)
        assert combined.equations[0][1] == make_profile([2, 1])

    def test_system_solutions_always_carry_over(self):
        system = single("X + Xp = (1)\nY + Yp = (1)\nX + Y = (1)")
        combined = combine_to_single(system)
        combined_sols = canon(solve(combined, max_candidates=None))
        for sol in solve(system):
            assert tuple(sorted(sol.items())) in combined_sols

    def test_aggregation_admits_spurious_solutions(self):
        # an unsatisfiable system whose combined equation is satisfiable:
        # one variable with weight (1) can absorb the whole aggregated
        # right-hand side, so the converse direction of the aggregation
        # fails in general
        system = single("X + Xn = (1)\n3*X = (1)")
        assert solve(system) == []
        combined = combine_to_single(system)
        spurious = solve(combined)
        assert {"X": ZERO, "Xn": make_profile([2, 1])} in spurious

    def test_rejects_non_unit_rhs(self):
        with pytest.raises(ValueError, match=r"\(1\)"):
            combine_to_single(single("X = (2)"))

    def test_rejects_non_natural_coefficients(self):
        with pytest.raises(ValueError, match="height-0"):
            combine_to_single(single("(1,1)*X = (1)"))

    def test_rejects_empty_system(self):
        with pytest.raises(ValueError):
            combine_to_single(EquationSystem((), ()))

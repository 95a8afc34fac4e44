import random

import pytest
from hypothesis import given, strategies as st

from topoprof import (
    CapacityError,
    MAX_COUNT,
    ONE,
    ZERO,
    Profile,
    ShapeError,
    add,
    canonical_key,
    embed_nat,
    format_profile,
    generator_decompose,
    make_profile,
    mul,
    parse_profile,
    scalar_mul,
    size,
)

profiles = st.lists(st.integers(min_value=1, max_value=9), max_size=5).map(
    lambda c: Profile(tuple(c))
)


class TestMakeProfile:
    def test_plain(self):
        assert make_profile([1, 2]).counts == (1, 2)

    def test_trailing_zeros_trimmed(self):
        assert make_profile([3, 0, 0]) == make_profile([3])

    def test_internal_zero_rejected(self):
        with pytest.raises(ShapeError, match="height 1"):
            make_profile([1, 0, 2])

    def test_negative_rejected(self):
        with pytest.raises(ShapeError):
            make_profile([1, -2])

    def test_entry_over_64_bits_rejected(self):
        with pytest.raises(CapacityError):
            make_profile([MAX_COUNT + 1])

    def test_zero_profile(self):
        assert make_profile([]) == ZERO
        assert make_profile([0]) == ZERO


class TestAdd:
    def test_example(self):
        assert add(make_profile([1, 1]), make_profile([1, 2])) == make_profile([2, 3])

    def test_zero_neutral(self):
        p = make_profile([4, 1])
        assert add(ZERO, p) == p
        assert add(p, ZERO) == p

    def test_linear_dependence_witness(self):
        # (1,1) + (1,2) and (1) + (1,3) agree exactly
        lhs = add(make_profile([1, 1]), make_profile([1, 2]))
        rhs = add(make_profile([1]), make_profile([1, 3]))
        assert lhs == rhs == make_profile([2, 3])


class TestMul:
    @pytest.mark.parametrize(
        "p,q,expected",
        [
            ([1, 1], [1, 1], [1, 3]),
            ([1, 1], [2, 1], [2, 4]),
            ([1, 1, 1], [1, 1, 1], [1, 3, 5]),
            ([1, 2], [2, 1], [2, 7]),
            ([2], [2], [4]),
            ([1, 2], [1, 2], [1, 8]),
        ],
    )
    def test_table_cells(self, p, q, expected):
        assert mul(make_profile(p), make_profile(q)) == make_profile(expected)

    def test_zero_absorbs(self):
        assert mul(ZERO, make_profile([5, 2])) == ZERO

    def test_one_neutral(self):
        p = make_profile([5, 2])
        assert mul(ONE, p) == p

    @given(profiles, profiles)
    def test_height_of_product_is_max(self, p, q):
        if p.is_zero or q.is_zero:
            assert mul(p, q) == ZERO
        else:
            assert mul(p, q).height == max(p.height, q.height)

    @given(profiles, profiles)
    def test_entries_never_shrink(self, p, q):
        # multiplying by a nonzero profile cannot decrease any entry
        if q.is_zero:
            return
        r = mul(p, q)
        assert all(c <= r.counts[i] for i, c in enumerate(p.counts))

    @given(profiles, profiles)
    def test_equivalent_prefix_form(self, p, q):
        # r_i = p_i*Q_{i-1} + q_i*P_i is the same function, written to
        # keep intermediate values smaller
        def alt(a, b):
            if not a.counts or not b.counts:
                return ZERO
            out, pa, qa = [], 0, 0
            for i in range(max(len(a.counts), len(b.counts))):
                pi = a.counts[i] if i < len(a.counts) else 0
                qi = b.counts[i] if i < len(b.counts) else 0
                pa += pi
                out.append(pi * qa + qi * pa)
                qa += qi
            return Profile(tuple(out))

        assert alt(p, q) == mul(p, q)


class TestScalarMul:
    def test_example(self):
        assert scalar_mul(3, make_profile([1, 2])) == make_profile([3, 6])

    def test_zero_and_one(self):
        p = make_profile([2, 5])
        assert scalar_mul(0, p) == ZERO
        assert scalar_mul(1, p) == p

    @given(st.integers(min_value=0, max_value=50), profiles)
    def test_matches_embedding_product(self, n, p):
        assert scalar_mul(n, p) == mul(embed_nat(n), p)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            scalar_mul(-1, ONE)


class TestEmbedNat:
    def test_zero_and_one(self):
        assert embed_nat(0) == ZERO
        assert embed_nat(1) == ONE

    def test_homomorphism_up_to_100(self):
        for m in range(101):
            for k in range(101):
                assert mul(embed_nat(m), embed_nat(k)) == embed_nat(m * k)
                assert add(embed_nat(m), embed_nat(k)) == embed_nat(m + k)


class TestSize:
    def test_examples(self):
        assert size(ZERO) == 0
        assert size(make_profile([8, 7, 8, 4])) == 27

    @given(profiles, profiles)
    def test_homomorphism(self, p, q):
        assert size(add(p, q)) == size(p) + size(q)
        assert size(mul(p, q)) == size(p) * size(q)


class TestGeneratorDecompose:
    @pytest.mark.parametrize(
        "q,coefficient,generator",
        [([3], 2, [1]), ([2, 3], 1, [1, 3]), ([1, 5], 0, [1, 5])],
    )
    def test_examples(self, q, coefficient, generator):
        assert generator_decompose(make_profile(q)) == (coefficient, make_profile(generator))

    @given(profiles.filter(lambda p: not p.is_zero))
    def test_reconstruction(self, q):
        c, g = generator_decompose(q)
        assert g.counts[0] == 1
        assert add(scalar_mul(c, ONE), g) == q

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            generator_decompose(ZERO)


class TestText:
    def test_parse_examples(self):
        assert parse_profile("(1,2)") == make_profile([1, 2])
        assert parse_profile("(0)") == ZERO
        assert parse_profile(" ( 3 , 1 ) ") == make_profile([3, 1])
        assert parse_profile("(3,0)") == make_profile([3])

    def test_parse_internal_zero(self):
        with pytest.raises(ShapeError):
            parse_profile("(1,0,2)")

    @pytest.mark.parametrize("text", ["", "1,2", "(1,2", "(1,,2)", "(1,2) junk", "(a)"])
    def test_parse_errors(self, text):
        with pytest.raises(ValueError):
            parse_profile(text)

    def test_format(self):
        assert format_profile(ZERO) == "(0)"
        assert format_profile(make_profile([1, 2])) == "(1,2)"
        assert str(make_profile([1, 2])) == "(1,2)"

    @given(profiles)
    def test_round_trip(self, p):
        assert parse_profile(format_profile(p)) == p


class TestRealizationOracle:
    # the dynamical-system side is the independent route: build witness
    # systems, combine them, and read the profile back

    @given(profiles, profiles)
    def test_add_matches_disjoint_union(self, p, q):
        from topoprof import disjoint_sum, profile_of, realize

        assert add(p, q) == profile_of(disjoint_sum(realize(p), realize(q)))

    @given(profiles, profiles)
    def test_mul_matches_tensor_product(self, p, q):
        from topoprof import profile_of, realize, tensor_product

        assert mul(p, q) == profile_of(tensor_product(realize(p), realize(q)))


class TestSemiringLaws:
    @given(profiles, profiles)
    def test_add_commutative(self, p, q):
        assert add(p, q) == add(q, p)

    @given(profiles, profiles, profiles)
    def test_add_associative(self, p, q, r):
        assert add(add(p, q), r) == add(p, add(q, r))

    @given(profiles, profiles)
    def test_mul_commutative(self, p, q):
        assert mul(p, q) == mul(q, p)

    @given(profiles, profiles, profiles)
    def test_mul_associative(self, p, q, r):
        assert mul(mul(p, q), r) == mul(p, mul(q, r))

    @given(profiles, profiles, profiles)
    def test_distributive(self, p, q, r):
        assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))

    @given(profiles)
    def test_identities(self, p):
        assert add(p, ZERO) == p
        assert mul(p, ONE) == p
        assert mul(p, ZERO) == ZERO

    @given(profiles, profiles)
    def test_operator_sugar(self, p, q):
        assert p + q == add(p, q)
        assert p * q == mul(p, q)
        assert 3 * p == scalar_mul(3, p)


def test_canonical_key_orders_by_size_then_length_then_entries():
    ordered = [ZERO, ONE, Profile((2,)), Profile((1, 1)), Profile((3,)), Profile((1, 2)), Profile((2, 1)), Profile((1, 1, 1))]
    shuffled = ordered[:]
    random.Random(7).shuffle(shuffled)
    assert sorted(shuffled, key=canonical_key) == ordered


def test_add_overflow_detected():
    big = Profile((MAX_COUNT,))
    with pytest.raises(CapacityError):
        add(big, ONE)
    with pytest.raises(CapacityError):
        mul(big, Profile((2,)))

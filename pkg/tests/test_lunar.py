"""Lunar (carry-free max/min) arithmetic and the binary correspondence
with finite sets.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumdiv import (
    BaseMismatchError,
    BudgetError,
    FiniteSet,
    LunarNumber,
    ParseError,
    PreconditionError,
    beta,
    beta_inv,
    identity,
    lunar_add,
    lunar_divides,
    lunar_divisor_count,
    lunar_divisors,
    lunar_mul,
    lunar_quotient_max,
    sumset,
)

from .oracles import naive_lunar_divides, naive_lunar_divisors, naive_lunar_mul


def ln(text: str) -> LunarNumber:
    return LunarNumber.parse(text)


@st.composite
def lunar_numbers(draw, max_base=10, max_len=6):
    base = draw(st.integers(2, max_base))
    digits = draw(
        st.lists(st.integers(0, base - 1), min_size=0, max_size=max_len)
    )
    return LunarNumber(base, digits)


def pairs_same_base(max_base=10, max_len=6):
    return st.integers(2, max_base).flatmap(
        lambda b: st.tuples(
            st.lists(st.integers(0, b - 1), max_size=max_len).map(
                lambda d: LunarNumber(b, d)
            ),
            st.lists(st.integers(0, b - 1), max_size=max_len).map(
                lambda d: LunarNumber(b, d)
            ),
        )
    )


class TestLunarNumber:
    def test_parse_round_trip(self):
        assert str(ln("169@10")) == "169@10"
        assert str(ln("101@2")) == "101@2"

    def test_canonical_drops_leading_zeros(self):
        assert ln("00169@10") == ln("169@10")
        assert LunarNumber(10, (9, 6, 1, 0, 0)) == ln("169@10")

    def test_zero(self):
        z = LunarNumber(7)
        assert z.is_zero and len(z) == 0
        assert str(z) == "0@7"
        assert ln("0@7") == z

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            ln("169")
        with pytest.raises(ParseError):
            ln("12@1")
        with pytest.raises(ParseError):
            ln("19@5")
        with pytest.raises(ParseError):
            ln("@10")
        with pytest.raises(ParseError):
            ln("12@16")

    def test_digit_range_enforced(self):
        with pytest.raises(ValueError):
            LunarNumber(3, (3,))
        with pytest.raises(ValueError):
            LunarNumber(1)

    @given(lunar_numbers())
    def test_str_parse_round_trip(self, x):
        assert LunarNumber.parse(str(x)) == x


class TestAddMul:
    def test_worked_add(self):
        assert lunar_add(ln("169@10"), ln("248@10")) == ln("269@10")

    def test_worked_mul(self):
        assert lunar_mul(ln("169@10"), ln("248@10")) == ln("12468@10")

    def test_worked_binary_mul(self):
        assert lunar_mul(ln("101@2"), ln("10110@2")) == ln("1011110@2")

    def test_base_mismatch(self):
        with pytest.raises(BaseMismatchError):
            lunar_add(ln("1@2"), ln("1@3"))
        with pytest.raises(BaseMismatchError):
            lunar_mul(ln("1@2"), ln("1@3"))

    @given(pairs_same_base())
    def test_mul_matches_naive(self, pair):
        x, y = pair
        got = lunar_mul(x, y)
        assert got.digits == naive_lunar_mul(x.digits, y.digits, x.base)

    @given(pairs_same_base())
    def test_commutative(self, pair):
        x, y = pair
        assert lunar_add(x, y) == lunar_add(y, x)
        assert lunar_mul(x, y) == lunar_mul(y, x)

    @given(
        st.integers(2, 6).flatmap(
            lambda b: st.tuples(
                *(
                    st.lists(st.integers(0, b - 1), max_size=4).map(
                        lambda d: LunarNumber(b, d)
                    ),
                )
                * 3
            )
        )
    )
    def test_associative_and_distributive(self, triple):
        x, y, z = triple
        assert lunar_mul(lunar_mul(x, y), z) == lunar_mul(x, lunar_mul(y, z))
        assert lunar_add(lunar_add(x, y), z) == lunar_add(x, lunar_add(y, z))
        assert lunar_mul(x, lunar_add(y, z)) == lunar_add(
            lunar_mul(x, y), lunar_mul(x, z)
        )

    @given(lunar_numbers())
    def test_identity(self, x):
        e = identity(x.base)
        assert lunar_mul(x, e) == x
        assert lunar_add(x, LunarNumber(x.base)) == x

    @given(lunar_numbers())
    def test_add_idempotent(self, x):
        assert lunar_add(x, x) == x


binary_sets = st.frozensets(st.integers(0, 10), min_size=1, max_size=6)


class TestBeta:
    def test_examples(self):
        assert beta(FiniteSet((0, 2, 3))) == ln("1101@2")
        assert beta(FiniteSet((0,))) == ln("1@2")
        assert beta(FiniteSet()).is_zero

    @given(binary_sets)
    def test_round_trip(self, a):
        x = FiniteSet(a)
        assert beta_inv(beta(x)) == x

    def test_beta_inv_base_restriction(self):
        with pytest.raises(PreconditionError):
            beta_inv(ln("12@3"))

    @given(binary_sets, binary_sets)
    def test_homomorphism(self, a, b):
        # beta(A + B) = beta(A) (x) beta(B).
        x, y = FiniteSet(a), FiniteSet(b)
        assert beta(sumset(x, y)) == lunar_mul(beta(x), beta(y))


class TestLunarDivisibility:
    def test_quotient_max_preconditions(self):
        with pytest.raises(PreconditionError):
            lunar_quotient_max(ln("1@2"), LunarNumber(2))
        with pytest.raises(PreconditionError):
            lunar_quotient_max(ln("1@2"), ln("11@2"))

    def test_quotient_recovers_known_factor(self):
        n, y = ln("1011110@2"), ln("101@2")
        assert lunar_mul(y, lunar_quotient_max(n, y)) == n

    @given(pairs_same_base(max_base=3, max_len=5))
    @settings(max_examples=60, deadline=None)
    def test_divides_matches_naive(self, pair):
        n, y = pair
        if n.is_zero:
            return
        assert lunar_divides(y, n) == naive_lunar_divides(
            y.digits, n.digits, n.base
        )

    def test_divisor_lists_match_naive(self):
        for text in ("1110@2", "11@3", "120@3", "169@10"):
            n = ln(text)
            got = [d.digits for d in lunar_divisors(n)]
            assert sorted(got) == sorted(naive_lunar_divisors(n.digits, n.base))

    def test_known_counts(self):
        # d_2(1110) = 6 and d_3(11) = 6.
        assert lunar_divisor_count(ln("1110@2")) == 6
        assert lunar_divisor_count(ln("11@3")) == 6

    def test_divisors_of_zero_rejected(self):
        with pytest.raises(PreconditionError):
            lunar_divisors(LunarNumber(2))

    def test_enum_budget(self):
        with pytest.raises(BudgetError):
            lunar_divisors(LunarNumber(10, [1] * 8))

    def test_ordering(self):
        divs = lunar_divisors(ln("1110@2"))
        keys = [(len(d), tuple(reversed(d.digits))) for d in divs]
        assert keys == sorted(keys)

    @given(binary_sets)
    @settings(max_examples=30, deadline=None)
    def test_binary_divisor_count_matches_sets(self, a):
        # d(A) = d_2(beta(A)) through the correspondence.
        from sumdiv import divisor_count

        x = FiniteSet(a)
        assert divisor_count(x) == lunar_divisor_count(beta(x))

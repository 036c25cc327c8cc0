import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenring import (
    ContextMismatchError,
    GreenElement,
    IndexRangeError,
    ParseError,
    RingContext,
    SupportError,
    basis_element,
    congruent_mod_regular,
    dim,
    format_element,
    from_dict,
    heller,
    parse_element,
    ring_generator,
    scale,
    to_dict,
    zero,
)


def elements(ctx, lo=-4, hi=4):
    return st.lists(
        st.integers(lo, hi), min_size=ctx.order, max_size=ctx.order
    ).map(lambda cs: GreenElement(ctx, cs))


CTX = RingContext(3, 2)


class TestRingContext:
    def test_order_cached(self):
        assert RingContext(3, 2).order == 9
        assert RingContext(2, 4).order == 16

    def test_rejects_composite_p(self):
        with pytest.raises(ValueError):
            RingContext(6, 1)

    def test_rejects_bad_nu(self):
        with pytest.raises(ValueError):
            RingContext(3, 0)

    def test_order_cap_env(self, monkeypatch):
        monkeypatch.setenv("GREENRING_ORDER_CAP", "8")
        with pytest.raises(ValueError):
            RingContext(3, 2)
        assert RingContext(2, 3).order == 8

    def test_default_cap(self):
        with pytest.raises(ValueError):
            RingContext(2, 11)  # 2048 > 1024

    def test_level(self):
        ctx = RingContext(3, 3)
        assert [ctx.level(s) for s in (1, 2, 3, 4, 9, 10, 27)] == [0, 1, 1, 2, 2, 3, 3]


class TestBasisElement:
    def test_positive_index(self):
        e = basis_element(CTX, 5)
        assert e.coeff(5) == 1 and e.support() == (5,)

    def test_zero_index_gives_zero(self):
        assert basis_element(CTX, 0).is_zero()

    def test_negative_index_negates(self):
        e = basis_element(CTX, -4)
        assert e.coeff(4) == -1 and e.support() == (4,)

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            basis_element(CTX, 10)
        with pytest.raises(IndexRangeError):
            basis_element(CTX, -10)


class TestArithmetic:
    def test_add(self):
        v2 = basis_element(CTX, 2)
        assert (v2 + v2).coeff(2) == 2

    def test_cancellation(self):
        v3 = basis_element(CTX, 3)
        assert (v3 + (-v3)).is_zero()

    def test_scale(self):
        e = scale(-2, basis_element(CTX, 1))
        assert e.coeff(1) == -2

    def test_context_mismatch(self):
        other = RingContext(5, 1)
        with pytest.raises(ContextMismatchError):
            basis_element(CTX, 1) + basis_element(other, 1)

    @given(elements(CTX), elements(CTX), elements(CTX))
    def test_abelian_group_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + zero(CTX) == a
        assert (a + (-a)).is_zero()

    @given(elements(CTX), elements(CTX))
    def test_dim_additive(self, a, b):
        assert dim(a + b) == dim(a) + dim(b)


class TestDim:
    def test_basis(self):
        assert dim(basis_element(CTX, 5)) == 5

    def test_zero(self):
        assert dim(zero(CTX)) == 0

    def test_virtual(self):
        assert dim(basis_element(CTX, 4) - basis_element(CTX, 2)) == 2


class TestRingGenerator:
    def test_level_one(self):
        x = ring_generator(CTX, 1)
        assert x == basis_element(CTX, 4) - basis_element(CTX, 2)

    def test_level_zero_is_v2(self):
        assert ring_generator(RingContext(7, 2), 0) == basis_element(RingContext(7, 2), 2)

    def test_p2(self):
        ctx = RingContext(2, 3)
        x = ring_generator(ctx, 2)
        assert x == basis_element(ctx, 5) - basis_element(ctx, 3)

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            ring_generator(CTX, 2)
        with pytest.raises(IndexRangeError):
            ring_generator(CTX, -1)


class TestHeller:
    def test_basis(self):
        assert heller(2, basis_element(CTX, 2)) == basis_element(CTX, 7)

    def test_regular_to_zero(self):
        assert heller(2, basis_element(CTX, 9)).is_zero()

    def test_linear(self):
        w = basis_element(CTX, 1) + basis_element(CTX, 2)
        assert heller(1, w) == basis_element(CTX, 2) + basis_element(CTX, 1)

    def test_support_checked(self):
        with pytest.raises(SupportError):
            heller(1, basis_element(CTX, 4))

    def test_dim_rule(self):
        for m in range(CTX.nu + 1):
            pm = CTX.p**m
            for r in range(1, pm + 1):
                assert dim(heller(m, basis_element(CTX, r))) == pm - r

    @given(st.integers(0, 2), elements(CTX))
    def test_involution_mod_regular(self, m, w):
        pm = CTX.p**m
        w = GreenElement(CTX, [c if r < pm else 0 for r, c in enumerate(w.coeffs)])
        assert congruent_mod_regular(m, heller(m, heller(m, w)), w)


class TestCongruence:
    def test_multiple_of_regular(self):
        assert congruent_mod_regular(2, basis_element(CTX, 9), zero(CTX))

    def test_not_congruent(self):
        assert not congruent_mod_regular(1, basis_element(CTX, 2), basis_element(CTX, 1))

    def test_support_checked(self):
        with pytest.raises(SupportError):
            congruent_mod_regular(1, basis_element(CTX, 5), zero(CTX))


class TestSerialization:
    def test_to_dict_shape(self):
        e = basis_element(CTX, 5) - basis_element(CTX, 3)
        assert to_dict(e) == {"p": 3, "nu": 2, "coeffs": {"3": -1, "5": 1}}

    def test_round_trip(self):
        e = 2 * basis_element(CTX, 1) - basis_element(CTX, 7)
        assert from_dict(json.loads(json.dumps(to_dict(e)))) == e

    def test_coeff_keys_ascending(self):
        e = basis_element(CTX, 9) + basis_element(CTX, 1)
        assert list(to_dict(e)["coeffs"]) == ["1", "9"]

    def test_from_dict_rejects_bad_index(self):
        with pytest.raises(IndexRangeError):
            from_dict({"p": 3, "nu": 2, "coeffs": {"10": 1}})


class TestFormatting:
    def test_descending_order(self):
        e = basis_element(CTX, 5) - basis_element(CTX, 3) + 2 * basis_element(CTX, 1)
        assert format_element(e) == "V5 - V3 + 2V1"

    def test_zero(self):
        assert format_element(zero(CTX)) == "0"

    def test_leading_negative(self):
        assert format_element(-basis_element(CTX, 4)) == "-V4"

    def test_parse_compact(self):
        assert parse_element(CTX, "V5-V3+2V1") == parse_element(CTX, "V5 - V3 + 2V1")

    def test_parse_round_trip(self):
        e = -2 * basis_element(CTX, 6) + basis_element(CTX, 2)
        assert parse_element(CTX, format_element(e)) == e

    @given(elements(CTX))
    def test_parse_inverts_format(self, e):
        assert parse_element(CTX, format_element(e)) == e

    def test_parse_rejects_garbage(self):
        for bad in ("V", "5V", "V5 V3", "V5 + + V3", "x", "V5-"):
            with pytest.raises(ParseError):
                parse_element(CTX, bad)

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(IndexRangeError):
            parse_element(CTX, "V10")

import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from niemytzki.setdsl import (
    IN,
    OUT,
    UNKNOWN,
    All,
    Bernstein,
    Cantor,
    ClosedBall,
    Complement,
    Empty,
    FiniteSet,
    Inter,
    Lattice,
    OpenBall,
    ParseError,
    Rationals,
    SinglePoint,
    Union,
    find_witness,
    in_cantor,
    member,
    normalize,
    parse,
    random_expr,
    to_text,
)
from oracles import cantor_brute


class TestParser:
    def test_complement_of_rationals(self):
        assert parse("!rationals") == Complement(Rationals())

    def test_union_of_cantor_and_point(self):
        assert parse("cantor | point(2)") == Union((Cantor(), SinglePoint((Fr(2),))))

    def test_annulus_in_dimension_three(self):
        e = parse("cball(0,0;1) & !oball(0,0;1/2)", 3)
        assert e == Inter(
            (
                ClosedBall((Fr(0), Fr(0)), Fr(1)),
                Complement(OpenBall((Fr(0), Fr(0)), Fr(1, 2))),
            )
        )

    def test_finite_set_with_semicolons(self):
        e = parse("finite{0;1;-3/2}")
        assert e == FiniteSet(((Fr(0),), (Fr(1),), (Fr(-3, 2),)))

    def test_precedence_and_parentheses(self):
        assert parse("empty | cantor & lattice") == Union(
            (Empty(), Inter((Cantor(), Lattice())))
        )
        assert parse("(empty | cantor) & lattice") == Inter(
            (Union((Empty(), Cantor())), Lattice())
        )

    def test_syntax_error_carries_offset(self):
        with pytest.raises(ParseError) as err:
            parse("cantor | ?")
        assert err.value.position == 9

    def test_arity_error(self):
        with pytest.raises(ParseError):
            parse("point(1,2)", 2)  # needs exactly one coordinate
        parse("point(1,2)", 3)

    def test_radius_must_be_positive(self):
        with pytest.raises(ParseError):
            parse("cball(0;0)")
        with pytest.raises(ParseError):
            parse("oball(0;-1/2)")

    def test_unknown_primitive(self):
        with pytest.raises(ParseError):
            parse("nowhere")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("cantor cantor")


class TestNormalize:
    def test_double_complement_vanishes(self):
        assert parse("!!cantor") == Cantor()

    def test_complemented_constants(self):
        assert parse("!all") == Empty()
        assert parse("!empty") == All()

    def test_unions_flatten_and_dedupe(self):
        e = normalize(Union((Cantor(), Union((Lattice(), Cantor())))))
        assert e == Union((Cantor(), Lattice()))

    def test_singleton_collapses(self):
        assert normalize(Union((Cantor(), Cantor()))) == Cantor()


class TestRoundTrip:
    def test_canonical_examples(self):
        for text in (
            "empty",
            "!rationals",
            "cantor | point(2)",
            "cball(0;1) & !oball(0;1/2)",
            "finite{1/2;-3}",
            "!(cantor | lattice)",
            "(all | bernstein) & rationals",
        ):
            e = parse(text)
            assert parse(to_text(e)) == e

    def test_seeded_corpus(self):
        rng = random.Random(7)
        for _ in range(300):
            for dim in (2, 3, 4):
                e = random_expr(rng, dim, max_depth=4)
                assert parse(to_text(e), dim) == e


class TestMembership:
    def test_cantor_quarter_is_in(self):
        # 1/4 = 0.020202...(3)
        assert member(Cantor(), (Fr(1, 4),)) is IN

    def test_cantor_half_is_out(self):
        # 1/2 = 0.111...(3): the digit 1 is unavoidable
        assert member(Cantor(), (Fr(1, 2),)) is OUT

    def test_cantor_endpoints(self):
        for v, want in [(0, IN), (1, IN), ("1/3", IN), ("2/3", IN), ("1/9", IN),
                        ("4/9", OUT), ("5/9", OUT), ("7/9", IN), ("3/4", IN)]:
            assert member(Cantor(), (Fr(v),)) is want, v

    def test_cantor_embedding_needs_zero_tail(self):
        assert member(Cantor(), (Fr(1, 4), Fr(0))) is IN
        assert member(Cantor(), (Fr(1, 4), Fr(1, 5))) is OUT

    def test_every_representable_point_is_rational(self):
        for coords in [(Fr(0),), (Fr(22, 7),), (Fr(-3, 5),)]:
            assert member(Rationals(), coords) is IN
            assert member(Complement(Rationals()), coords) is OUT

    def test_lattice(self):
        assert member(Lattice(), (Fr(-4), Fr(7))) is IN
        assert member(Lattice(), (Fr(1, 2), Fr(7))) is OUT

    def test_bernstein_is_always_unknown(self):
        assert member(Bernstein(), (Fr(0),)) is UNKNOWN
        assert member(Complement(Bernstein()), (Fr(0),)) is UNKNOWN

    def test_balls(self):
        assert member(ClosedBall((Fr(0),), Fr(1)), (Fr(1),)) is IN
        assert member(OpenBall((Fr(0),), Fr(1)), (Fr(1),)) is OUT

    def test_kleene_connectives(self):
        p = (Fr(0),)
        assert member(Union((Bernstein(), All())), p) is IN
        assert member(Inter((Bernstein(), Empty())), p) is OUT
        assert member(Inter((Bernstein(), All())), p) is UNKNOWN


class TestCantorOracleAgreement:
    def test_small_denominators_exhaustive(self):
        for q in range(1, 61):
            for p in range(0, q + 1):
                x = Fr(p, q)
                assert in_cantor(x) == cantor_brute(x), x

    @given(st.fractions(min_value=0, max_value=1, max_denominator=500))
    def test_matches_brute_force(self, x):
        assert in_cantor(x) == cantor_brute(x)


class TestFindWitness:
    def test_all_has_the_origin(self):
        assert find_witness(All(), 100, 0, dimension=3) == (Fr(0), Fr(0))

    def test_cantor_meets_its_named_point(self):
        # 1/3 = 0.0222...(3) is in the Cantor set
        w = find_witness(Inter((Cantor(), SinglePoint((Fr(1, 3),)))), 1000, 0)
        assert w == (Fr(1, 3),)

    def test_empty_has_no_witness(self):
        assert find_witness(Empty(), 1000, 0) is None

    def test_complement_of_rationals_is_unwitnessable(self):
        assert find_witness(Complement(Rationals()), 1000, 0) is None

    def test_deterministic_under_seed(self):
        e = parse("oball(3;1/3) | lattice & cantor")
        assert find_witness(e, 500, 9) == find_witness(e, 500, 9)

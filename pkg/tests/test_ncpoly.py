import random
from fractions import Fraction

import pytest

from shirshov import (
    Alphabet,
    LieTerm,
    NcPolynomial,
    Word,
    expand_bracket,
    mul_bounded,
    parse_poly,
    render_poly,
    prime_field,
)
from shirshov.ncpoly import PolyParseError, ZeroPolynomialError

AB = Alphabet(("x", "y"))
FEH = Alphabet(("e", "f", "h"))
BA = Alphabet(("a", "b"))


def P(text, alphabet=AB):
    return parse_poly(text, alphabet)


def random_poly(rng, alphabet, max_deg=4, max_terms=4):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        n = rng.randrange(max_deg + 1)
        word = Word(alphabet, tuple(rng.randrange(len(alphabet)) for _ in range(n)))
        terms[word] = Fraction(rng.randint(-4, 4))
    return NcPolynomial(alphabet, terms)


def random_lieterm(rng, alphabet, depth=3):
    if depth == 0 or rng.random() < 0.4:
        return LieTerm.leaf(alphabet, rng.randrange(len(alphabet)))
    return LieTerm.bracket(
        random_lieterm(rng, alphabet, depth - 1), random_lieterm(rng, alphabet, depth - 1)
    )


class TestLeading:
    def test_sl2_relation(self):
        f = P("h*e - e*h - 2*e", FEH)
        word, c = f.leading()
        assert str(word) == "he" and c == 1

    def test_degree_dominates(self):
        f = P("3*x - 2", AB)
        word, c = f.leading()
        assert str(word) == "x" and c == 3

    def test_zero_errors(self):
        with pytest.raises(ZeroPolynomialError):
            NcPolynomial.zero(AB).leading()


class TestMonic:
    def test_scales_by_leading_coefficient(self):
        f = P("2*x*y - 4*y*x", AB)
        assert f.monic() == P("y*x - 1/2*x*y", AB)

    def test_idempotent(self):
        f = P("y*x - 1/2*x*y", AB)
        assert f.monic() == f

    def test_single_generator(self):
        assert P("x", AB).monic() == P("x", AB)


class TestMulBounded:
    def test_identity_frames(self):
        f = P("e*f - f*e - h", FEH)
        eps = FEH.empty()
        assert mul_bounded(eps, f, eps) == f

    def test_left_concatenation(self):
        f = P("e*f - f*e - h", FEH)
        out = mul_bounded(FEH.word("h"), f, FEH.empty())
        assert out == P("h*e*f - h*f*e - h*h", FEH)

    def test_zero(self):
        out = mul_bounded(AB.word("x"), NcPolynomial.zero(AB), AB.word("y"))
        assert out.is_zero()

    def test_leading_transfer(self):
        rng = random.Random(5)
        for _ in range(300):
            f = random_poly(rng, AB)
            if f.is_zero():
                continue
            a = Word(AB, tuple(rng.randrange(2) for _ in range(rng.randrange(3))))
            b = Word(AB, tuple(rng.randrange(2) for _ in range(rng.randrange(3))))
            lead, _ = mul_bounded(a, f, b).leading()
            assert lead == a * f.leading()[0] * b


class TestRingAxioms:
    def test_associativity_distributivity(self):
        rng = random.Random(17)
        for _ in range(1_000):
            f = random_poly(rng, AB, max_deg=3)
            g = random_poly(rng, AB, max_deg=3)
            h = random_poly(rng, AB, max_deg=3)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f + g) * h == f * h + g * h

    def test_additive_inverse(self):
        rng = random.Random(18)
        for _ in range(200):
            f = random_poly(rng, AB)
            assert (f + (-f)).is_zero()


class TestExpandBracket:
    def test_definition(self):
        t = LieTerm.bracket(LieTerm.leaf(AB, 0), LieTerm.leaf(AB, 1))
        assert expand_bracket(t) == P("x*y - y*x", AB)

    def test_two_step_hand_oracle(self):
        # [[b,a],a]: (ba-ab)a - a(ba-ab) = baa - 2aba + aab
        b, a = LieTerm.leaf(BA, 1), LieTerm.leaf(BA, 0)
        t = LieTerm.bracket(LieTerm.bracket(b, a), a)
        assert expand_bracket(t) == P("b*a*a - 2*a*b*a + a*a*b", BA)

    def test_self_bracket_vanishes(self):
        x = LieTerm.leaf(AB, 0)
        assert expand_bracket(LieTerm.bracket(x, x)).is_zero()

    def test_antisymmetry_random(self):
        rng = random.Random(23)
        for _ in range(200):
            u = random_lieterm(rng, AB)
            v = random_lieterm(rng, AB)
            lhs = expand_bracket(LieTerm.bracket(u, v))
            rhs = expand_bracket(LieTerm.bracket(v, u))
            assert lhs == -rhs

    def test_jacobi_random(self):
        rng = random.Random(29)
        for _ in range(100):
            a = random_lieterm(rng, AB, depth=2)
            b = random_lieterm(rng, AB, depth=2)
            c = random_lieterm(rng, AB, depth=2)
            combo = {
                LieTerm.bracket(LieTerm.bracket(a, b), c): 1,
            }
            total = expand_bracket(combo)
            total = total + expand_bracket(LieTerm.bracket(LieTerm.bracket(b, c), a))
            total = total + expand_bracket(LieTerm.bracket(LieTerm.bracket(c, a), b))
            assert total.is_zero()

    def test_linear_combination(self):
        t1 = LieTerm.bracket(LieTerm.leaf(AB, 0), LieTerm.leaf(AB, 1))
        t2 = LieTerm.leaf(AB, 0)
        out = expand_bracket({t1: Fraction(2), t2: Fraction(-1)})
        assert out == P("2*x*y - 2*y*x - x", AB)


class TestTextSyntax:
    def test_round_trip_random(self):
        rng = random.Random(31)
        for _ in range(300):
            f = random_poly(rng, AB)
            assert parse_poly(render_poly(f), AB) == f

    def test_scalar_prefix_optional(self):
        assert P("2*x", AB) == P("x", AB) + P("x", AB)

    def test_constant_term(self):
        f = P("x*y - 1", AB)
        assert f.coefficient(AB.empty()) == -1

    def test_rational_coefficients(self):
        f = P("3/2*x", AB)
        assert f.leading()[1] == Fraction(3, 2)

    def test_rejects_garbage(self):
        with pytest.raises(PolyParseError):
            P("x +", AB)
        with pytest.raises(PolyParseError):
            P("* x", AB)
        with pytest.raises(KeyError):
            P("q", AB)

    def test_float_coefficients_forbidden(self):
        with pytest.raises(TypeError):
            NcPolynomial(AB, {AB.word("x"): 0.5})


class TestPrimeField:
    def test_arithmetic(self):
        F7 = prime_field(7)
        a = F7(3)
        assert a + F7(5) == F7(1)
        assert a * F7(5) == F7(1)
        assert a / F7(5) == a * F7(3)
        assert -a == F7(4)

    def test_polynomials_over_gf(self):
        F5 = prime_field(5)
        f = parse_poly("3*x*y - 2*y*x", AB, field=F5)
        g = f.monic()
        assert g.leading()[1] == F5(1)
        assert (f + f + f + f + f).is_zero()

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            prime_field(6)

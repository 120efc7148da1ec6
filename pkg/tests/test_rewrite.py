import random
from fractions import Fraction

import pytest

from shirshov import (
    Alphabet,
    NcPolynomial,
    RuleSet,
    Word,
    cmp_deglex,
    irr_words,
    is_trivial_mod,
    parse_poly,
    reduce,
)
from shirshov.rewrite import TrivialityPreconditionError, reduce_with_steps
from shirshov.words import deglex_key

from oracles import all_words, random_ideal_element

FEH = Alphabet(("f", "e", "h"))
AB = Alphabet(("x", "y"))
BA = Alphabet(("a", "b"))


def sl2_rules():
    return RuleSet(
        [
            parse_poly("h*e - e*h - 2*e", FEH),
            parse_poly("h*f - f*h + 2*f", FEH),
            parse_poly("e*f - f*e - h", FEH),
        ]
    )


def plactic2_rules():
    return RuleSet(
        [
            parse_poly("b*a*a - a*b*a", BA),
            parse_poly("b*b*a - b*a*b", BA),
        ]
    )


class TestReduce:
    def test_single_application(self):
        S = sl2_rules()
        out = reduce(parse_poly("h*e", FEH), S)
        assert out == parse_poly("e*h + 2*e", FEH)

    def test_plactic_confluent_paths(self):
        S = plactic2_rules()
        out = reduce(parse_poly("b*b*a*a", BA), S)
        assert out == parse_poly("b*a*b*a", BA)

    def test_empty_rule_set(self):
        f = parse_poly("y*x", AB)
        assert reduce(f, RuleSet()) == f

    def test_idempotence_random(self):
        rng = random.Random(41)
        S = sl2_rules()
        for _ in range(200)        :
            f = _random_poly(rng, FEH)
            r = reduce(f, S)
            assert reduce(r, S) == r

    def test_multiset_termination_certificate(self):
        # every step strictly decreases the support multiset under deg-lex;
        # witnessed by a step bound that the reduction never exceeds
        rng = random.Random(43)
        S = sl2_rules()
        for _ in range(50):
            f = _random_poly(rng, FEH, max_deg=5)
            _, steps = reduce_with_steps(f, S, max_steps=100_000)
            assert steps <= 100_000

    def test_ideal_membership_soundness(self):
        # random combinations of normal S-words reduce to zero
        rng = random.Random(47)
        S = sl2_rules()
        for _ in range(200):
            f = random_ideal_element(rng, S, FEH, max_degree=5, n_terms=3)
            assert reduce(f, S).is_zero()

    def test_leading_word_containment(self):
        rng = random.Random(53)
        S = sl2_rules()
        for _ in range(200):
            f = random_ideal_element(rng, S, FEH, max_degree=5, n_terms=3)
            if f.is_zero():
                continue
            lead, _ = f.leading()
            assert S.leftmost_match(lead.letters) is not None


class TestIsTrivialMod:
    def test_zero_is_trivial(self):
        S = sl2_rules()
        assert is_trivial_mod(NcPolynomial.zero(FEH), S, FEH.word("hef"))

    def test_sl2_composition(self):
        # the hef composition of the sl2 rules; its leading word hfe is
        # below the lcm hef since f < e at the second letter
        S = sl2_rules()
        comp = parse_poly("h*f*e - e*h*f + h*h - 2*e*f", FEH)
        assert cmp_deglex(comp.leading()[0], FEH.word("hef")) == -1
        assert is_trivial_mod(comp, S, FEH.word("hef"))

    def test_irreducible_nonzero_is_not_trivial(self):
        S = RuleSet([parse_poly("y*x - x*y", AB)])
        assert not is_trivial_mod(parse_poly("x", AB), S, AB.word("yx"))

    def test_precondition_violation_distinct(self):
        S = RuleSet([parse_poly("y*x - x*y", AB)])
        with pytest.raises(TrivialityPreconditionError):
            is_trivial_mod(parse_poly("y*x*x", AB), S, AB.word("yx"))


class TestIrrWords:
    def test_square_free(self):
        S = RuleSet([parse_poly("x*x - x", AB)])
        got = [str(w) for w in irr_words(S, 2)]
        assert got == ["1", "x", "y", "xy", "yx", "yy"]

    def test_sl2_degree_two(self):
        S = sl2_rules()
        deg2 = [str(w) for w in irr_words(S, 2) if len(w) == 2]
        assert deg2 == ["ff", "fe", "fh", "ee", "eh", "hh"]
        assert len(deg2) == 6

    def test_empty_rules_single_letter(self):
        X = Alphabet(("x",))
        got = [str(w) for w in irr_words(RuleSet(), 1, X)]
        assert got == ["1", "x"]

    def test_count_complement(self):
        S = plactic2_rules()
        d = 6
        total = sum(2**i for i in range(d + 1))
        irr = irr_words(S, d)
        reducible = 0
        for n in range(d + 1):
            for w in all_words(BA, n):
                if S.leftmost_match(w.letters) is not None:
                    reducible += 1
        assert len(irr) + reducible == total

    def test_deglex_ascending(self):
        S = sl2_rules()
        ws = irr_words(S, 4)
        keys = [deglex_key(w) for w in ws]
        assert keys == sorted(keys)

    def test_matches_brute_force_filter(self):
        S = plactic2_rules()
        expected = []
        for n in range(7):
            for w in all_words(BA, n):
                if S.leftmost_match(w.letters) is None:
                    expected.append(w.letters)
        assert [w.letters for w in irr_words(S, 6)] == expected


def _random_poly(rng, alphabet, max_deg=4):
    terms = {}
    for _ in range(rng.randrange(1, 5)):
        n = rng.randrange(max_deg + 1)
        word = Word(alphabet, tuple(rng.randrange(len(alphabet)) for _ in range(n)))
        terms[word] = Fraction(rng.randint(-4, 4))
    return NcPolynomial(alphabet, terms)

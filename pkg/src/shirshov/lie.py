"""Lyndon-Shirshov word machinery, PBW bases, and Lie relation checking.

The convention throughout: an ALSW is a word strictly lex-greater than all
of its proper cyclic rotations.  Factor sequences are ordered by the lex
order in which a proper prefix compares greater than its extensions; the
uniqueness of the resulting factorization is validated by tests rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complete import CompletionResult, STATUS_COMPLETE, is_gs_basis
from .ncpoly import (
    LieTerm,
    NcPolynomial,
    Scalar,
    expand_bracket,
)
from .rewrite import RuleSet, irr_words
from .words import Alphabet, Word, cmp_lex_prefix_greater, deglex_key


class NotAlswError(ValueError):
    pass


class NotLieElementError(ValueError):
    pass


class CappedBasisError(ValueError):
    """A capped completion cannot certify a PBW basis."""


def is_alsw(u: Word) -> bool:
    """True iff u is strictly lex-greater than every proper rotation."""
    if len(u) == 0:
        raise ValueError("the empty word is not eligible")
    s = u.letters
    for cut in range(1, len(s)):
        if s <= s[cut:] + s[:cut]:
            return False
    return True


def shirshov_factorize(u: Word) -> list[Word]:
    """The unique non-decreasing factorization of u into ALSWs.

    Duval's algorithm with the letter order flipped, so that the factors are
    rotation-maximal words; the factor sequence is non-decreasing under
    cmp_lex_prefix_greater and concatenates back to u.
    """
    if len(u) == 0:
        raise ValueError("cannot factorize the empty word")
    s = u.letters
    n = len(s)
    factors: list[Word] = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] >= s[j]:
            k = i if s[k] > s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(u[i : i + j - k])
            i += j - k
    return factors


def lsw_bracket(u: Word) -> LieTerm:
    """Standard bracketing of an ALSW: split off the longest proper ALSW suffix."""
    if not is_alsw(u):
        raise NotAlswError(f"{u} is not an associative Lyndon-Shirshov word")
    if len(u) == 1:
        return LieTerm.leaf(u.alphabet, u.letters[0])
    for cut in range(1, len(u)):
        if is_alsw(u[cut:]):
            return LieTerm.bracket(lsw_bracket(u[:cut]), lsw_bracket(u[cut:]))
    raise AssertionError("an ALSW of length >= 2 always has a proper ALSW suffix")


@dataclass(frozen=True)
class NlswElement:
    """An ALSW together with its standard bracketing."""

    word: Word
    bracketing: LieTerm

    @staticmethod
    def of(u: Word) -> "NlswElement":
        return NlswElement(u, lsw_bracket(u))


def nlsw_decompose(f: NcPolynomial) -> dict[LieTerm, Scalar]:
    """Write an expanded Lie element as a combination of bracketed NLSWs.

    Triangular elimination on leading words; raises NotLieElementError when
    the input is not in the span of the NLSW expansions.
    """
    out: dict[LieTerm, Scalar] = {}
    rest = f
    while not rest.is_zero():
        u, c = rest.leading()
        if len(u) == 0 or not is_alsw(u):
            raise NotLieElementError(f"leading word {u} is not an ALSW")
        t = lsw_bracket(u)
        out[t] = c
        rest = rest - expand_bracket(t).scale(c)
        if not rest.is_zero() and deglex_key(rest.leading()[0]) >= deglex_key(u):
            raise NotLieElementError("elimination did not lower the leading word")
    return out


@dataclass(frozen=True)
class PbwMonomial:
    """A non-decreasing product of ALSW factors."""

    factors: tuple[Word, ...]

    @property
    def degree(self) -> int:
        return sum(len(f) for f in self.factors)

    def concatenation(self) -> Word:
        if not self.factors:
            raise ValueError("the empty product has no alphabet")
        w = self.factors[0]
        for f in self.factors[1:]:
            w = w * f
        return w

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "·".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class StructureTable:
    """Multiplication table [x_i, x_j] = sum_t c x_t for i > j (0-based indices).

    Only i > j is stored; antisymmetry and [x_i, x_i] = 0 are structural.
    """

    dimension: int
    constants: tuple[tuple[tuple[int, int, int], Scalar], ...]  # ((i, j, t), c)

    @staticmethod
    def from_dict(dimension: int, table: dict) -> "StructureTable":
        items = []
        for (i, j), combo in sorted(table.items()):
            if not 0 <= j < i < dimension:
                raise ValueError("table entries need dimension > i > j >= 0")
            for t, c in sorted(combo.items()):
                if not 0 <= t < dimension:
                    raise ValueError("target index out of range")
                if c != 0:
                    items.append(((i, j, t), c))
        return StructureTable(dimension, tuple(items))

    def bracket(self, i: int, j: int) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        sign = 1
        if i == j:
            return {}
        if i < j:
            i, j, sign = j, i, -1
        for (a, b, t), c in self.constants:
            if (a, b) == (i, j):
                out[t] = sign * c
        return out


def from_structure_constants(table: StructureTable, names) -> list[tuple[dict, NcPolynomial]]:
    """Defining relations of the enveloping algebra of a multiplication table.

    For each i > j: the Lie relation [x_i, x_j] - sum_t c x_t and its
    associative expansion x_i x_j - x_j x_i - sum_t c x_t.  With precedence
    taken from declaration order the leading word is x_i x_j.
    """
    names = tuple(names)
    if len(names) != table.dimension:
        raise ValueError("need one name per table dimension")
    alphabet = Alphabet(names)
    out = []
    for i in range(table.dimension):
        for j in range(i):
            xi = LieTerm.leaf(alphabet, i)
            xj = LieTerm.leaf(alphabet, j)
            combo: dict[LieTerm, Scalar] = {LieTerm.bracket(xi, xj): 1}
            for t, c in table.bracket(i, j).items():
                leaf = LieTerm.leaf(alphabet, t)
                combo[leaf] = combo.get(leaf, 0) - c
            out.append((combo, expand_bracket(combo)))
    return out


def lie_gs_check(relations, max_degree: int | None = None):
    """GS verdict for Lie relations given by their associative expansions.

    Each relation must decompose as a Lie element; the check itself runs on
    the expansions, whose verdict equals the Lie one.
    """
    relations = list(relations)
    for f in relations:
        nlsw_decompose(f)  # raises NotLieElementError on bad input
    if not relations:
        return True, []
    S = RuleSet(f.monic() for f in relations)
    return is_gs_basis(S, max_degree)


def pbw_basis(S, d: int, alphabet: Alphabet | None = None) -> list[PbwMonomial]:
    """All non-decreasing products of ALSWs from Irr(S), total degree <= d.

    S may be a complete CompletionResult, a RuleSet certified elsewhere, or
    None for the free case.  Output is ordered by (degree, deg-lex of the
    concatenation).
    """
    if isinstance(S, CompletionResult):
        if S.status != STATUS_COMPLETE:
            raise CappedBasisError(f"basis with status {S.status!r} cannot yield a PBW basis")
        ruleset = S.basis
    elif S is None:
        ruleset = RuleSet()
    else:
        ruleset = S
    if alphabet is None:
        alphabet = ruleset.alphabet
    if alphabet is None:
        raise ValueError("free case needs an explicit alphabet")
    if d < 0:
        raise ValueError("degree bound must be >= 0")

    atoms = [u for u in irr_words(ruleset, d, alphabet) if len(u) > 0 and is_alsw(u)]
    # factor sequences must be non-decreasing under the prefix-greater lex order
    atoms.sort(key=lambda u: (len(u), u.letters))
    out: list[PbwMonomial] = [PbwMonomial(())]

    def extend(prefix: tuple[Word, ...], last: Word | None, remaining: int) -> None:
        for u in atoms:
            if len(u) > remaining:
                continue
            if last is not None and cmp_lex_prefix_greater(u, last) == -1:
                continue
            seq = prefix + (u,)
            out.append(PbwMonomial(seq))
            extend(seq, u, remaining - len(u))

    extend((), None, d)
    out.sort(key=lambda m: (0, ()) if not m.factors else deglex_key(m.concatenation()))
    return out

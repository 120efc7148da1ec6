"""Algebra/monoid/group/Lie presentations, normal forms, and the catalog.

File format (line oriented, ``#`` comments)::

    kind: monoid            # algebra | monoid | group | lie
    generators: q p         # precedence ascending, left to right
    relations:
      p q = 1               # monoid/group: word = word; "1" is the empty word
      h*e - e*h - 2*e       # algebra: one polynomial per line
      bracket h e = 2*e     # lie: left side precedence-descending

Group presentations extend the alphabet with a primed inverse generator
per declared generator (x' after all base generators) and add the two
two-sided inverse relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complete import (
    CompletionConfig,
    CompletionResult,
    STATUS_COMPLETE,
    shirshov_complete,
)
from .lie import StructureTable, from_structure_constants
from .ncpoly import NcPolynomial, PolyParseError, parse_poly
from .rewrite import RuleSet, irr_words, reduce
from .words import Alphabet, Word

KINDS = ("algebra", "monoid", "group", "lie")

DEFAULT_COMPLETION_DEGREE = 6


class PresentationError(ValueError):
    """Malformed presentation text; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CappedCompletionError(ValueError):
    """Normal forms demand a complete basis."""


class NonBinomialBasisError(ValueError):
    """Word-level rewriting needs a binomial/monomial basis."""


class _ZeroWord:
    """The absorbing ZERO class of a semigroup with zero; distinct from the empty word."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    __str__ = __repr__


ZERO = _ZeroWord()


@dataclass(frozen=True)
class Presentation:
    kind: str
    alphabet: Alphabet
    relations: tuple  # kind-specific, see to_algebra_relations
    table: StructureTable | None = None
    base_generators: tuple[str, ...] = ()

    def source(self) -> str:
        """Render back to the presentation file format."""
        lines = [f"kind: {self.kind}"]
        gens = self.base_generators or self.alphabet.symbols
        lines.append("generators: " + " ".join(gens))
        lines.append("relations:")
        if self.kind == "algebra":
            for f in self.relations:
                lines.append(f"  {f}")
        elif self.kind == "lie":
            for (i, j), combo in self.relations:
                rhs = _render_linear(self.alphabet, combo)
                lines.append(
                    f"  bracket {self.alphabet.symbols[i]} {self.alphabet.symbols[j]} = {rhs}"
                )
        else:
            for u, v in self.relations:
                lines.append(f"  {_word_src(u)} = {_word_src(v)}")
        return "\n".join(lines) + "\n"


def _word_src(w: Word) -> str:
    return " ".join(w.names()) if len(w) else "1"


def _render_linear(alphabet: Alphabet, combo: dict[int, Fraction]) -> str:
    if not combo:
        return "0"
    terms = {Word(alphabet, (t,)): c for t, c in combo.items()}
    return str(NcPolynomial(alphabet, terms))


@dataclass(frozen=True)
class GrowthSeries:
    counts: tuple[int, ...]


# ---------------------------------------------------------------------------
# parsing


def parse_presentation(text: str) -> Presentation:
    kind = None
    generators: list[str] = []
    relation_lines: list[tuple[int, str]] = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("kind:"):
            kind = line.split(":", 1)[1].strip()
            if kind not in KINDS:
                raise PresentationError(f"unknown kind {kind!r}", lineno)
            in_relations = False
        elif line.startswith("generators:"):
            generators = line.split(":", 1)[1].split()
            in_relations = False
        elif line.startswith("relations:"):
            tail = line.split(":", 1)[1].strip()
            if tail:
                raise PresentationError("relations must follow on their own lines", lineno)
            in_relations = True
        elif in_relations:
            relation_lines.append((lineno, line))
        else:
            raise PresentationError(f"unexpected line {line!r}", lineno)
    if kind is None:
        raise PresentationError("missing 'kind:' header")
    if not generators:
        raise PresentationError("missing 'generators:' header")
    base = tuple(generators)
    if kind == "group":
        alphabet = Alphabet(base + tuple(g + "'" for g in base))
    else:
        alphabet = Alphabet(base)

    if kind == "algebra":
        rels = []
        for lineno, line in relation_lines:
            try:
                rels.append(parse_poly(line, alphabet))
            except (PolyParseError, KeyError) as exc:
                raise PresentationError(str(exc), lineno) from exc
        return Presentation(kind, alphabet, tuple(rels), base_generators=base)

    if kind == "lie":
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for lineno, line in relation_lines:
            parts = line.split("=", 1)
            if len(parts) != 2 or not parts[1].strip():
                raise PresentationError("expected 'bracket i j = linear combination'", lineno)
            head = parts[0].split()
            if len(head) != 3 or head[0] != "bracket":
                raise PresentationError("expected 'bracket i j = ...'", lineno)
            try:
                i = alphabet.index(head[1])
                j = alphabet.index(head[2])
            except KeyError as exc:
                raise PresentationError(str(exc), lineno) from exc
            if i <= j:
                raise PresentationError(
                    "left side must list the precedence-greater generator first", lineno
                )
            rhs = parts[1].strip()
            combo: dict[int, Fraction] = {}
            if rhs != "0":
                try:
                    poly = parse_poly(rhs, alphabet)
                except (PolyParseError, KeyError) as exc:
                    raise PresentationError(str(exc), lineno) from exc
                for w, c in poly.terms.items():
                    if len(w) != 1:
                        raise PresentationError(
                            "bracket right side must be linear in the generators", lineno
                        )
                    combo[w.letters[0]] = c
            if (i, j) in table:
                raise PresentationError("duplicate bracket entry", lineno)
            table[(i, j)] = combo
        st = StructureTable.from_dict(len(alphabet), table)
        return Presentation(
            kind, alphabet, tuple(sorted(table.items())), table=st, base_generators=base
        )

    # monoid / group: word = word
    rels = []
    for lineno, line in relation_lines:
        parts = line.split("=")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise PresentationError("expected 'word = word'", lineno)
        try:
            u = _parse_word(parts[0], alphabet, lineno)
            v = _parse_word(parts[1], alphabet, lineno)
        except KeyError as exc:
            raise PresentationError(str(exc), lineno) from exc
        rels.append((u, v))
    return Presentation(kind, alphabet, tuple(rels), base_generators=base)


def _parse_word(text: str, alphabet: Alphabet, lineno: int) -> Word:
    parts = text.split()
    if parts == ["1"]:
        return alphabet.empty()
    return Word(alphabet, tuple(alphabet.index(p) for p in parts))


# ---------------------------------------------------------------------------
# translation and queries


def to_algebra_relations(p: Presentation) -> list[NcPolynomial]:
    """Polynomial relations generating the same quotient algebra."""
    if p.kind == "algebra":
        return list(p.relations)
    if p.kind == "lie":
        return [f for _, f in from_structure_constants(p.table, p.alphabet.symbols)]
    rels = [
        NcPolynomial.monomial(u) - NcPolynomial.monomial(v) for u, v in p.relations
    ]
    if p.kind == "group":
        n = len(p.base_generators)
        one = NcPolynomial.one(p.alphabet)
        for g in range(n):
            x = Word(p.alphabet, (g,))
            xi = Word(p.alphabet, (g + n,))
            rels.append(NcPolynomial.monomial(x * xi) - one)
            rels.append(NcPolynomial.monomial(xi * x) - one)
    # orientation by deg-lex: the greater side becomes the lead
    return [f.monic() for f in rels if not f.is_zero()]


def complete_presentation(
    p: Presentation, cfg: CompletionConfig | None = None
) -> CompletionResult:
    if cfg is None:
        cfg = CompletionConfig(max_degree=None)
    rels = to_algebra_relations(p)
    if not rels:
        # no effective relations: the free algebra, already complete
        basis = RuleSet()
        basis.alphabet = p.alphabet
        return CompletionResult(basis, STATUS_COMPLETE, [], {
            "compositions_processed": 0,
            "compositions_skipped": 0,
            "rules_added": 0,
            "reduction_steps": 0,
        })
    if cfg.max_degree is None:
        hi = max((max(len(w) for w in f.support()) for f in rels), default=0)
        cfg = CompletionConfig(
            max_degree=max(DEFAULT_COMPLETION_DEGREE, hi),
            max_rules=cfg.max_rules,
            interreduce=cfg.interreduce,
        )
    return shirshov_complete(rels, cfg)


def _word_basis(R: CompletionResult) -> RuleSet:
    if R.status != STATUS_COMPLETE:
        raise CappedCompletionError(
            f"completion status {R.status!r}: normal forms would be unreliable"
        )
    for rule in R.basis:
        n = len(rule.terms)
        coeffs = list(rule.terms.values())
        if not (n == 1 or (n == 2 and coeffs[0] == 1 and coeffs[1] == -1)):
            raise NonBinomialBasisError(f"rule {rule} is not binomial or monomial")
    return R.basis


def normal_form_word(u: Word, R: CompletionResult):
    """Unique irreducible representative of u's class, or ZERO on absorption."""
    basis = _word_basis(R)
    nf = reduce(NcPolynomial.monomial(u), basis)
    if nf.is_zero():
        return ZERO
    (w, c), = [nf.leading()]
    assert c == 1 and len(nf.terms) == 1, "binomial rules preserve single words"
    return w


def word_problem(u: Word, v: Word, R: CompletionResult) -> bool:
    return normal_form_word(u, R) == normal_form_word(v, R)


def growth_series(R: CompletionResult, L: int) -> GrowthSeries:
    """Counts of irreducible words per length 0..L."""
    basis = _word_basis(R)
    counts = [0] * (L + 1)
    for w in irr_words(basis, L):
        counts[len(w)] += 1
    return GrowthSeries(tuple(counts))


# ---------------------------------------------------------------------------
# catalog


def _knuth_relations(n: int) -> list[str]:
    letters = [chr(ord("a") + i) for i in range(n)]
    rels = []
    # xzy = zxy for x <= y < z ; yxz = yzx for x < y <= z
    for x in range(n):
        for y in range(x, n):
            for z in range(y + 1, n):
                rels.append(
                    f"{letters[x]} {letters[z]} {letters[y]} = {letters[z]} {letters[x]} {letters[y]}"
                )
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y, n):
                rels.append(
                    f"{letters[y]} {letters[x]} {letters[z]} = {letters[y]} {letters[z]} {letters[x]}"
                )
    return rels


def _chinese_relations(n: int) -> list[str]:
    letters = [chr(ord("a") + i) for i in range(n)]
    rels = []
    # zyx = zxy = yzx for x <= y <= z, not all equal
    for x in range(n):
        for y in range(x, n):
            for z in range(y, n):
                if x == y == z:
                    continue
                zyx = f"{letters[z]} {letters[y]} {letters[x]}"
                zxy = f"{letters[z]} {letters[x]} {letters[y]}"
                yzx = f"{letters[y]} {letters[z]} {letters[x]}"
                if zyx != zxy:
                    rels.append(f"{zyx} = {zxy}")
                if zyx != yzx:
                    rels.append(f"{zyx} = {yzx}")
    return rels


def catalog(name: str) -> Presentation:
    """Named desk-scale presentations used throughout the test batteries."""
    if name == "bicyclic":
        return parse_presentation(
            "kind: monoid\ngenerators: q p\nrelations:\n  p q = 1\n"
        )
    if name.startswith("plactic-"):
        n = _rank(name, 4)
        body = "\n".join(f"  {r}" for r in _knuth_relations(n))
        gens = " ".join(chr(ord("a") + i) for i in range(n))
        return parse_presentation(f"kind: monoid\ngenerators: {gens}\nrelations:\n{body}\n")
    if name.startswith("chinese-"):
        n = _rank(name, 4)
        body = "\n".join(f"  {r}" for r in _chinese_relations(n))
        gens = " ".join(chr(ord("a") + i) for i in range(n))
        return parse_presentation(f"kind: monoid\ngenerators: {gens}\nrelations:\n{body}\n")
    if name.startswith("free-comm-"):
        n = _rank(name, 4)
        gens = [f"x{i + 1}" for i in range(n)]
        rels = []
        for j in range(n):
            for i in range(j):
                rels.append(f"  {gens[j]} {gens[i]} = {gens[i]} {gens[j]}")
        return parse_presentation(
            "kind: monoid\ngenerators: " + " ".join(gens) + "\nrelations:\n" + "\n".join(rels) + "\n"
        )
    if name == "sl2":
        return parse_presentation(
            "kind: lie\n"
            "generators: f e h\n"
            "relations:\n"
            "  bracket h e = 2*e\n"
            "  bracket h f = -2*f\n"
            "  bracket e f = h\n"
        )
    if name == "heisenberg-3":
        return parse_presentation(
            "kind: lie\n"
            "generators: x y z\n"
            "relations:\n"
            "  bracket y x = z\n"
            "  bracket z x = 0\n"
            "  bracket z y = 0\n"
        )
    raise KeyError(f"unknown catalog entry {name!r}")


CATALOG_NAMES = (
    "bicyclic",
    "plactic-2",
    "plactic-3",
    "plactic-4",
    "chinese-2",
    "chinese-3",
    "chinese-4",
    "free-comm-2",
    "free-comm-3",
    "free-comm-4",
    "sl2",
    "heisenberg-3",
)


def _rank(name: str, cap: int) -> int:
    n = int(name.rsplit("-", 1)[1])
    if not 1 <= n <= cap:
        raise KeyError(f"rank out of range in {name!r}")
    return n

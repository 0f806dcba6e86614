"""Brute-force ground truth: truncated expansions into noncommuting words.

A word is a tuple of variable indices.  Expanding a basis symbol of degree n
with k variables enumerates the words grouped by their kernel set partition,
so every identity of homogeneous degree n can be decided exactly at k = n.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from .elements import NCSymElement
from .setpartitions import SetPartition, lattice

Word = tuple[int, ...]


class NotSymmetricError(ValueError):
    """A word polynomial gives unequal coefficients to words of equal kernel."""

    def __init__(self, word_a: Word, word_b: Word, coeff_a, coeff_b):
        self.witness = (word_a, word_b)
        super().__init__(
            f"not symmetric: words {format_word(word_a)!r} and "
            f"{format_word(word_b)!r} share a kernel but have coefficients "
            f"{coeff_a} and {coeff_b}"
        )


def kernel(word: Sequence[int]) -> SetPartition:
    """Positions carrying equal letters fall in the same block."""
    first_seen: dict[int, int] = {}
    labels = []
    for letter in word:
        labels.append(first_seen.setdefault(letter, len(first_seen)))
    return SetPartition.from_labels(labels)


def format_word(word: Word) -> str:
    return " ".join(f"x{i}" for i in word)


class WordPolynomial:
    """Finite rational combination of words over variables 1..k."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Word, Fraction] = ()):
        if k < 1:
            raise ValueError("need at least one variable")
        self.k = k
        data = dict(terms.items() if isinstance(terms, Mapping) else terms)
        self.terms = {}
        for word, c in data.items():
            word = tuple(word)
            if any(not 1 <= letter <= k for letter in word):
                raise ValueError(f"letter out of range 1..{k} in {word!r}")
            c = Fraction(c)
            if c:
                self.terms[word] = c

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WordPolynomial") -> "WordPolynomial":
        if self.k != other.k:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return WordPolynomial(self.k, out)

    def __sub__(self, other: "WordPolynomial") -> "WordPolynomial":
        return self + (-1) * other

    def __neg__(self) -> "WordPolynomial":
        return (-1) * self

    def __mul__(self, other) -> "WordPolynomial":
        if isinstance(other, WordPolynomial):
            if self.k != other.k:
                raise ValueError("variable counts differ")
            out: dict[Word, Fraction] = {}
            for wa, ca in self.terms.items():
                for wb, cb in other.terms.items():
                    w = wa + wb
                    out[w] = out.get(w, Fraction(0)) + ca * cb
            return WordPolynomial(self.k, out)
        c = Fraction(other)
        return WordPolynomial(self.k, {w: c * v for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WordPolynomial)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_word_polynomial(self)

    def __repr__(self) -> str:
        return f"<WordPolynomial k={self.k}, {len(self.terms)} terms>"


def format_word_polynomial(P: WordPolynomial) -> str:
    """One term per line: coefficient, then the word (or "1" for the empty word)."""
    if not P.terms:
        return "0"
    lines = []
    for word in sorted(P.terms, key=lambda w: (len(w), w)):
        c = P.terms[word]
        body = format_word(word) if word else "1"
        lines.append(f"{c.numerator}{'' if c.denominator == 1 else f'/{c.denominator}'} {body}")
    return "\n".join(lines)


def parse_word_polynomial(text: str, k: int) -> WordPolynomial:
    terms: dict[Word, Fraction] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line == "0":
            continue
        toks = line.split()
        coeff = Fraction(toks[0])
        letters = []
        for tok in toks[1:]:
            if tok == "1" and len(toks) == 2:
                break
            if not tok.startswith("x"):
                raise ValueError(f"bad word token {tok!r}")
            letters.append(int(tok[1:]))
        word = tuple(letters)
        terms[word] = terms.get(word, Fraction(0)) + coeff
    return WordPolynomial(k, terms)


def _words_with_kernel(sigma: SetPartition, k: int):
    """All words over 1..k whose kernel is exactly sigma."""
    blocks = len(sigma.blocks)
    for letters in permutations(range(1, k + 1), blocks):
        yield tuple(letters[lab] for lab in sigma.rgs)


def expand(f: NCSymElement, k: int) -> WordPolynomial:
    """Truncate to k variables, exactly.

    The coefficient of a word depends only on its kernel sigma: it is c for
    the m term at sigma = pi, c on every sigma above pi for p, c on every
    sigma meeting pi in the bottom for e, and c times the part factorial of
    sigma meet pi for h.
    """
    if k < 1:
        raise ValueError("need at least one variable")
    out: dict[Word, Fraction] = {}
    for pi, c in f.terms.items():
        n = pi.n
        if n == 0:
            out[()] = out.get((), Fraction(0)) + c
            continue
        lat = lattice(n)
        i = lat.index[pi]
        for j, sigma in enumerate(lat.elements):
            if len(sigma.blocks) > k:
                continue
            if f.basis == "m":
                coeff = c if j == i else None
            elif f.basis == "p":
                coeff = c if lat.leq_idx(i, j) else None
            elif f.basis == "e":
                coeff = c if lat.meet[i][j] == lat.zero else None
            else:
                coeff = c * lat.type_fact[lat.meet[i][j]]
            if not coeff:
                continue
            for word in _words_with_kernel(sigma, k):
                out[word] = out.get(word, Fraction(0)) + coeff
    return WordPolynomial(k, out)


def collect(P: WordPolynomial, n: int) -> NCSymElement:
    """Invert expand on symmetric input, grouping words by kernel.

    Requires k >= n so that degree-n kernels are all visible; words of equal
    kernel must agree, otherwise a witness pair is reported.
    """
    if P.k < n:
        raise ValueError(f"need at least {n} variables to collect degree {n}")
    seen: dict[SetPartition, Word] = {}
    for word in P.terms:
        if len(word) > n:
            raise ValueError(f"word {word!r} exceeds stated degree {n}")
        seen.setdefault(kernel(word), word)
    out: dict[SetPartition, Fraction] = {}
    for kern, witness in seen.items():
        reference = P.terms.get(witness, Fraction(0))
        for word in _words_with_kernel(kern, P.k):
            coeff = P.terms.get(word, Fraction(0))
            if coeff != reference:
                raise NotSymmetricError(witness, word, reference, coeff)
        if reference:
            out[kern] = reference
    return NCSymElement("m", out)


def equal(f: NCSymElement, g: NCSymElement) -> bool:
    """Decide equality in the algebra by expanding both at the joint degree."""
    k = max(f.degree(), g.degree(), 1)
    return expand(f, k) == expand(g, k)


def expand_position_action(perm: Sequence[int], P: WordPolynomial) -> WordPolynomial:
    """Permute the positions of every word; kernels transform by relabelling."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(perm)!r}")
    out: dict[Word, Fraction] = {}
    for word, c in P.terms.items():
        if len(word) != n:
            raise ValueError(f"word length {len(word)} does not match the permutation")
        moved = [0] * n
        for pos in range(n):
            moved[perm[pos] - 1] = word[pos]
        key = tuple(moved)
        out[key] = out.get(key, Fraction(0)) + c
    return WordPolynomial(P.k, out)

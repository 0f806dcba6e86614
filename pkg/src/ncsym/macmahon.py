"""MacMahon symmetric functions over several dotted alphabets.

Polynomials live in a truncated ring: ``alphabets`` commuting alphabets
(dot classes), ``variables`` subscripts per alphabet, and a total-degree cap.
A monomial is a sorted tuple of ((subscript, alphabet), exponent) pairs.
The degree-n slice of multidegree [1,...,1] maps onto words in noncommuting
variables by reading, for each alphabet in order, the subscript it uses.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .classical import format_rational
from .elements import NCSymElement
from .intpartitions import IntPartition, int_partitions, kostka
from .setpartitions import SetPartition, lattice
from .tableaux import dotted_tableaux
from .words import WordPolynomial, collect

Monomial = tuple[tuple[tuple[int, int], int], ...]


class TruncationError(ValueError):
    """A computation does not fit inside the stated truncation."""


class Truncation(NamedTuple):
    alphabets: int
    variables: int
    degree: int


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[tuple[int, int], int] = dict(a)
    for key, e in b:
        exps[key] = exps.get(key, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def mono_multidegree(mono: Monomial, alphabets: int) -> tuple[int, ...]:
    out = [0] * alphabets
    for (_, alphabet), e in mono:
        out[alphabet - 1] += e
    return tuple(out)


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    factors = []
    for (i, j), e in mono:
        factors.append(f"x{i}{chr(39) * j}" + (f"^{e}" if e > 1 else ""))
    return " ".join(factors)


class MultiPolynomial:
    """Sparse rational polynomial inside a fixed truncation."""

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: Truncation, terms: Mapping[Monomial, Fraction] = ()):
        self.trunc = trunc
        data = dict(terms.items() if isinstance(terms, Mapping) else terms)
        self.terms: dict[Monomial, Fraction] = {}
        for mono, c in data.items():
            mono = tuple(sorted((tuple(k), e) for k, e in mono if e))
            for (i, j), _ in mono:
                if not (1 <= i <= trunc.variables and 1 <= j <= trunc.alphabets):
                    raise TruncationError(
                        f"variable x{i}^({j}) outside truncation {trunc}"
                    )
            if mono_degree(mono) > trunc.degree:
                raise TruncationError(
                    f"monomial of degree {mono_degree(mono)} exceeds cap {trunc.degree}"
                )
            c = Fraction(c)
            if c:
                self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def one(cls, trunc: Truncation) -> "MultiPolynomial":
        return cls(trunc, {(): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_trunc(self, other: "MultiPolynomial") -> None:
        if self.trunc != other.trunc:
            raise ValueError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        self._require_same_trunc(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPolynomial(self.trunc, out)

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        return self + (-1) * other

    def __neg__(self) -> "MultiPolynomial":
        return (-1) * self

    def __mul__(self, other) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            self._require_same_trunc(other)
            cap = self.trunc.degree
            out: dict[Monomial, Fraction] = {}
            for ma, ca in self.terms.items():
                da = mono_degree(ma)
                for mb, cb in other.terms.items():
                    if da + mono_degree(mb) > cap:
                        continue
                    m = mono_mul(ma, mb)
                    out[m] = out.get(m, Fraction(0)) + ca * cb
            return MultiPolynomial(self.trunc, out)
        c = Fraction(other)
        return MultiPolynomial(self.trunc, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def extract_multidegree(self, vec: Sequence[int]) -> "MultiPolynomial":
        vec = tuple(vec)
        return MultiPolynomial(
            self.trunc,
            {
                m: c
                for m, c in self.terms.items()
                if mono_multidegree(m, self.trunc.alphabets) == vec
            },
        )

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPolynomial)
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.trunc, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_multipolynomial(self)

    def __repr__(self) -> str:
        return f"<MultiPolynomial {self.trunc}, {len(self.terms)} terms>"


def format_multipolynomial(P: MultiPolynomial, strict_rationals: bool = False) -> str:
    if not P.terms:
        return "0"
    pieces = []
    for mono in sorted(P.terms, key=lambda m: (mono_degree(m), m)):
        c = P.terms[mono]
        mag = abs(c)
        body = format_monomial(mono)
        if body == "1":
            text = format_rational(mag, strict_rationals)
        elif mag == 1 and not strict_rationals:
            text = body
        else:
            text = f"{format_rational(mag, strict_rationals)}*{body}"
        pieces.append(("-" if c < 0 else "+", text))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class VectorPartition:
    """Multiset of nonzero nonnegative-integer vectors of one dimension."""

    __slots__ = ("parts", "dimension")

    def __init__(self, parts: Iterable[Sequence[int]] = (), dimension: int | None = None):
        cleaned = [tuple(int(v) for v in p) for p in parts]
        if any(min(p, default=0) < 0 for p in cleaned):
            raise ValueError("vector entries must be nonnegative")
        if any(not any(p) for p in cleaned):
            raise ValueError("zero vector is not a valid part")
        dims = {len(p) for p in cleaned}
        if len(dims) > 1:
            raise ValueError(f"parts of mixed dimension: {cleaned!r}")
        if dimension is None:
            if not dims:
                raise ValueError("dimension required for an empty vector partition")
            dimension = dims.pop()
        elif dims and dims.pop() != dimension:
            raise ValueError("parts do not match the stated dimension")
        self.dimension = dimension
        self.parts = tuple(sorted(cleaned, reverse=True))

    @classmethod
    def parse(cls, text: str, dimension: int | None = None) -> "VectorPartition":
        s = text.strip()
        if s.startswith("{") and s.endswith("}"):
            s = s[1:-1].strip()
        if not s:
            return cls((), dimension)
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"cannot parse vector partition from {text!r}")
        parts = []
        for chunk in s[1:-1].split("],["):
            chunk = chunk.strip().strip("[]")
            parts.append(tuple(int(tok) for tok in chunk.split(",")))
        return cls(parts, dimension)

    def multidegree(self) -> tuple[int, ...]:
        out = [0] * self.dimension
        for p in self.parts:
            for j, v in enumerate(p):
                out[j] += v
        return tuple(out)

    def degree(self) -> int:
        return sum(self.multidegree())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VectorPartition)
            and self.dimension == other.dimension
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((self.dimension, self.parts))

    def __str__(self) -> str:
        return "{" + ",".join("[" + ",".join(str(v) for v in p) + "]" for p in self.parts) + "}"

    def __repr__(self) -> str:
        return f"VectorPartition({self.parts!r})"


def parse_vector(text: str) -> tuple[int, ...]:
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    return tuple(int(tok) for tok in s.split(","))


def format_vector(vec: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in vec) + "]"


def _check_vector(t: Sequence[int], trunc: Truncation) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    if len(t) != trunc.alphabets:
        raise ValueError(
            f"vector dimension {len(t)} does not match {trunc.alphabets} alphabets"
        )
    if any(v < 0 for v in t):
        raise ValueError("vector entries must be nonnegative")
    if sum(t) > trunc.degree:
        raise TruncationError(f"degree {sum(t)} exceeds cap {trunc.degree}")
    return t


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def mm_monomial(vec_lambda: VectorPartition, trunc: Truncation) -> MultiPolynomial:
    """Sum of the distinct monomials whose multiexponent is the given multiset."""
    if vec_lambda.dimension != trunc.alphabets:
        raise ValueError("vector partition dimension does not match truncation")
    if vec_lambda.degree() > trunc.degree:
        raise TruncationError(
            f"degree {vec_lambda.degree()} exceeds cap {trunc.degree}"
        )
    from itertools import permutations

    terms: dict[Monomial, Fraction] = {}
    parts = vec_lambda.parts
    for subscripts in permutations(range(1, trunc.variables + 1), len(parts)):
        exps: dict[tuple[int, int], int] = {}
        for i, part in zip(subscripts, parts):
            for j, v in enumerate(part, start=1):
                if v:
                    exps[(i, j)] = exps.get((i, j), 0) + v
        terms[tuple(sorted(exps.items()))] = Fraction(1)  # multiset: repeats coincide
    return MultiPolynomial(trunc, terms)


def mm_power(t: Sequence[int], trunc: Truncation) -> MultiPolynomial:
    """Power sum of one vector degree: the single-part monomial function."""
    t = _check_vector(t, trunc)
    if not any(t):
        return MultiPolynomial.one(trunc)
    return mm_monomial(VectorPartition([t]), trunc)


def mm_elementary(t: Sequence[int], trunc: Truncation) -> MultiPolynomial:
    """Coefficient of the auxiliary degree t in prod_i (1 + sum_j x_i^(j) q_j)."""
    t = _check_vector(t, trunc)
    terms: dict[Monomial, Fraction] = {}

    def rec(i: int, remaining: tuple[int, ...], chosen: list[tuple[int, int]]):
        if not any(remaining):
            mono = tuple(((s, j), 1) for s, j in chosen)
            terms[mono] = Fraction(1)
            return
        if i > trunc.variables or sum(remaining) > trunc.variables - i + 1:
            return
        rec(i + 1, remaining, chosen)
        for j in range(1, trunc.alphabets + 1):
            if remaining[j - 1]:
                nxt = list(remaining)
                nxt[j - 1] -= 1
                chosen.append((i, j))
                rec(i + 1, tuple(nxt), chosen)
                chosen.pop()

    rec(1, t, [])
    return MultiPolynomial(trunc, terms)


def mm_complete(t: Sequence[int], trunc: Truncation) -> MultiPolynomial:
    """Coefficient of the auxiliary degree t in prod_i 1/(1 - sum_j x_i^(j) q_j).

    Each subscript contributes a multiset of alphabet letters counted with
    the number of its orderings, hence the multinomial factor.
    """
    t = _check_vector(t, trunc)
    terms: dict[Monomial, Fraction] = {}

    def multinomial(vec: Sequence[int]) -> int:
        out = factorial(sum(vec))
        for v in vec:
            out //= factorial(v)
        return out

    from itertools import product as _product

    def rec(i: int, remaining: tuple[int, ...], chosen, coeff: int):
        if not any(remaining):
            exps: dict[tuple[int, int], int] = {}
            for s, vec in chosen:
                for j, v in enumerate(vec, start=1):
                    if v:
                        exps[(s, j)] = exps.get((s, j), 0) + v
            mono = tuple(sorted(exps.items()))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
            return
        if i > trunc.variables:
            return
        for vec in _product(*(range(r + 1) for r in remaining)):
            if any(vec):
                chosen.append((i, vec))
                rec(
                    i + 1,
                    tuple(r - v for r, v in zip(remaining, vec)),
                    chosen,
                    coeff * multinomial(vec),
                )
                chosen.pop()
            else:
                rec(i + 1, remaining, chosen, coeff)

    rec(1, t, [], 1)
    return MultiPolynomial(trunc, terms)


_MM_GENERATORS = {"p": mm_power, "e": mm_elementary, "h": mm_complete}


def mm_multiplicative(
    basis: str, vec_lambda: VectorPartition, trunc: Truncation
) -> MultiPolynomial:
    """Product extension b_{veclambda} = prod_i b_{lambda^i} for p, e, h."""
    if basis not in _MM_GENERATORS:
        raise ValueError(f"no multiplicative basis {basis!r}")
    out = MultiPolynomial.one(trunc)
    for part in vec_lambda.parts:
        out = out * _MM_GENERATORS[basis](part, trunc)
    return out


def phi_to_set_partition(vec_lambda: VectorPartition) -> SetPartition:
    """Characteristic vectors summing to all-ones become blocks (their supports)."""
    n = vec_lambda.dimension
    if vec_lambda.multidegree() != (1,) * n:
        raise ValueError(
            f"multidegree {vec_lambda.multidegree()} is not all-ones; "
            "parts must be disjoint characteristic vectors"
        )
    return SetPartition(
        tuple(j + 1 for j, v in enumerate(part) if v) for part in vec_lambda.parts
    )


def phi_from_set_partition(pi: SetPartition) -> VectorPartition:
    return VectorPartition(
        (tuple(1 if j in block else 0 for j in range(1, pi.n + 1)) for block in pi.blocks),
        dimension=pi.n,
    )


def phi_collect(P: MultiPolynomial) -> NCSymElement:
    """Map an all-ones-multidegree polynomial onto noncommuting words and collect.

    Alphabet positions become word positions: the subscript used by alphabet j
    becomes the j-th letter.
    """
    n = P.trunc.alphabets
    ones = (1,) * n
    words: dict[tuple[int, ...], Fraction] = {}
    for mono, c in P.terms.items():
        if mono_multidegree(mono, n) != ones:
            raise ValueError(
                f"monomial {format_monomial(mono)} does not have all-ones multidegree"
            )
        letters = [0] * n
        for (i, j), e in mono:
            letters[j - 1] = i
        words[tuple(letters)] = c
    return collect(WordPolynomial(P.trunc.variables, words), n)


def schur_tableau_sum(
    lam: IntPartition, vec_m: Sequence[int], trunc: Truncation
) -> MultiPolynomial:
    """Generating function of dotted tableaux of the shape and multidegree.

    Each tableau contributes the product of x_value^(dots) over its entries.
    """
    vec_m = tuple(int(v) for v in vec_m)
    if len(vec_m) != trunc.alphabets:
        raise ValueError(
            f"multidegree dimension {len(vec_m)} does not match {trunc.alphabets} alphabets"
        )
    if lam.n != sum(vec_m):
        raise ValueError(f"shape size {lam.n} and multidegree sum {sum(vec_m)} differ")
    if lam.n > trunc.degree:
        raise TruncationError(f"degree {lam.n} exceeds cap {trunc.degree}")
    terms: dict[Monomial, Fraction] = {}
    for tab in dotted_tableaux(lam, trunc.variables, trunc.alphabets, vec_m):
        exps: dict[tuple[int, int], int] = {}
        for e in tab.entries():
            key = (e.value, e.dots)
            exps[key] = exps.get(key, 0) + 1
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, Fraction(0)) + 1
    return MultiPolynomial(trunc, terms)


def schur_ncsym(lam: IntPartition) -> NCSymElement:
    """Noncommuting Schur analogue, expanded in the monomial basis.

    The coefficient on every m_sigma of type mu is mu! times the Kostka
    number for the shape, and vanishes unless mu is dominated by the shape.
    """
    n = lam.n
    lat = lattice(n)
    terms: dict[SetPartition, Fraction] = {}
    for mu in int_partitions(n):
        count = kostka(lam, mu)
        if not count:
            continue
        coeff = Fraction(mu.fact_parts() * count)
        for idx in lat.by_type[mu]:
            terms[lat.elements[idx]] = coeff
    return NCSymElement("m", terms)


@lru_cache(maxsize=None)
def _jt_determinant(lam: IntPartition, variant: str, trunc: Truncation) -> MultiPolynomial:
    """Permutation expansion of the generator determinant for one shape."""
    generator = _MM_GENERATORS[variant]
    size = lam.length
    if size == 0:
        return MultiPolynomial.one(trunc)

    entries: list[list[MultiPolynomial | None]] = []
    for i in range(size):
        row: list[MultiPolynomial | None] = []
        for j in range(size):
            degree = lam.parts[i] - (i + 1) + (j + 1)
            if degree < 0:
                row.append(None)
            elif degree == 0:
                row.append(MultiPolynomial.one(trunc))
            else:
                total = MultiPolynomial(trunc)
                for t in weak_compositions(degree, trunc.alphabets):
                    total = total + generator(t, trunc)
                row.append(total)
        entries.append(row)

    from itertools import permutations

    det = MultiPolynomial(trunc)
    for perm in permutations(range(size)):
        if any(entries[i][perm[i]] is None for i in range(size)):
            continue
        sign = 1
        for a in range(size):
            for b in range(a + 1, size):
                if perm[a] > perm[b]:
                    sign = -sign
        prod = MultiPolynomial.one(trunc)
        for i in range(size):
            prod = prod * entries[i][perm[i]]
            if prod.is_zero():
                break
        det = det + sign * prod
    return det


def jacobi_trudi(
    lam: IntPartition,
    vec_m: Sequence[int],
    variant: str,
    trunc: Truncation,
) -> MultiPolynomial:
    """Determinant of complete (h) or elementary (e) sums, then the vec_m slice.

    Entry (i, j) sums the generator over all vectors of degree lam_i - i + j;
    negative degree gives 0 and degree zero gives 1.  The h variant produces
    the tableau generating function of the shape itself, the e variant that
    of the conjugate shape.
    """
    vec_m = tuple(int(v) for v in vec_m)
    if variant not in ("h", "e"):
        raise ValueError(f"variant must be 'h' or 'e', got {variant!r}")
    if len(vec_m) != trunc.alphabets:
        raise ValueError(
            f"multidegree dimension {len(vec_m)} does not match {trunc.alphabets} alphabets"
        )
    if lam.n != sum(vec_m):
        raise ValueError(f"shape size {lam.n} and multidegree sum {sum(vec_m)} differ")
    if lam.n > trunc.degree:
        raise TruncationError(f"degree {lam.n} exceeds cap {trunc.degree}")
    return _jt_determinant(lam, variant, trunc).extract_multidegree(vec_m)

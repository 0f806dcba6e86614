"""Row insertion for biwords over the dotted alphabet, and the Cauchy check.

Insertion compares values only and bumps the leftmost entry strictly greater,
so equal values never bump; each displaced entry keeps its own dot class.
The recording tableau receives the top entry of the biword column verbatim.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .intpartitions import int_partitions
from .macmahon import (
    MultiPolynomial,
    Truncation,
    mono_degree,
    schur_tableau_sum,
    weak_compositions,
)
from .tableaux import DottedEntry, DottedTableau, parse_entry


class Biword:
    """Two rows of dotted letters, columns weakly lex-sorted on values only.

    The top row takes precedence in the ordering; equal value columns may
    carry any dot pattern and all of them are distinct biwords.
    """

    __slots__ = ("columns",)

    def __init__(self, columns: Iterable[tuple] = ()):
        cols = []
        for top, bottom in columns:
            cols.append((DottedEntry(*top), DottedEntry(*bottom)))
        self.columns = tuple(cols)
        values = [(t.value, b.value) for t, b in self.columns]
        if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"columns not sorted on values: {values}")

    @classmethod
    def from_rows(cls, top: Sequence[DottedEntry], bottom: Sequence[DottedEntry]) -> "Biword":
        if len(top) != len(bottom):
            raise ValueError("rows of unequal length")
        return cls(zip(top, bottom))

    @classmethod
    def parse(cls, text: str) -> "Biword":
        lines = [line for line in text.splitlines()]
        while lines and not lines[-1].strip():
            lines.pop()
        if not lines:
            return cls()
        if len(lines) != 2:
            raise ValueError("a biword needs exactly two lines (top row, bottom row)")
        top = [parse_entry(tok) for tok in lines[0].split()]
        bottom = [parse_entry(tok) for tok in lines[1].split()]
        return cls.from_rows(top, bottom)

    @property
    def top(self) -> tuple[DottedEntry, ...]:
        return tuple(t for t, _ in self.columns)

    @property
    def bottom(self) -> tuple[DottedEntry, ...]:
        return tuple(b for _, b in self.columns)

    def multidegree(self, classes: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Dot-class counts of the bottom row, then of the top row."""
        bottom = [0] * classes
        top = [0] * classes
        for t, b in self.columns:
            top[t.dots - 1] += 1
            bottom[b.dots - 1] += 1
        return tuple(bottom), tuple(top)

    def __len__(self) -> int:
        return len(self.columns)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Biword) and self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    def __str__(self) -> str:
        return (
            " ".join(str(t) for t, _ in self.columns)
            + "\n"
            + " ".join(str(b) for _, b in self.columns)
        )

    def __repr__(self) -> str:
        return f"<Biword of length {len(self.columns)}>"


def _insert(rows: list[list[DottedEntry]], entry: DottedEntry) -> tuple[int, int]:
    """Row-insert by value; returns the (row, col) of the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([entry])
            return r, 0
        row = rows[r]
        spot = next((c for c, e in enumerate(row) if e.value > entry.value), None)
        if spot is None:
            row.append(entry)
            return r, len(row) - 1
        entry, row[spot] = row[spot], entry
        r += 1


def rsk_forward(biword: Biword) -> tuple[DottedTableau, DottedTableau]:
    """Insert the bottom row, record the top row; dots ride along unchanged."""
    insertion: list[list[DottedEntry]] = []
    recording: list[list[DottedEntry]] = []
    for top, bottom in biword.columns:
        r, _ = _insert(insertion, bottom)
        if r == len(recording):
            recording.append([])
        recording[r].append(top)
    return DottedTableau(insertion), DottedTableau(recording)


def rsk_inverse(tab: DottedTableau, rec: DottedTableau) -> Biword:
    """Reverse the insertion; errors if the pair is not a same-shape tableau pair."""
    if tab.shape != rec.shape:
        raise ValueError(f"shapes differ: {tab.shape} vs {rec.shape}")
    insertion = [list(row) for row in tab.rows]
    recording = [list(row) for row in rec.rows]
    columns: list[tuple[DottedEntry, DottedEntry]] = []
    for _ in range(tab.size):
        # the cell recorded last holds the largest value, rightmost on ties;
        # row maxima sit at row ends, so scanning ends is enough
        best_key = None
        best_row = -1
        for r, row in enumerate(recording):
            key = (row[-1].value, len(row) - 1)
            if best_key is None or key > best_key:
                best_key, best_row = key, r
        r = best_row
        top = recording[r].pop()
        carry = insertion[r].pop()
        if not recording[r]:
            recording.pop()
            insertion.pop()
        for above in range(r - 1, -1, -1):
            row = insertion[above]
            spot = max(c for c, e in enumerate(row) if e.value < carry.value)
            carry, row[spot] = row[spot], carry
        columns.append((top, carry))
    return Biword(reversed(columns))


@dataclass
class CauchyReport:
    """Outcome of comparing the tableau pairing sum with the product side."""

    ok: bool
    degree: int
    mismatches: list[str] = field(default_factory=list)


def _schur_sum_all_multidegrees(
    m: int, lam, trunc: Truncation
) -> MultiPolynomial:
    total = MultiPolynomial(trunc)
    for vec in weak_compositions(m, trunc.alphabets):
        total = total + schur_tableau_sum(lam, vec, trunc)
    return total


def cauchy_check(x_trunc: Truncation, y_trunc: Truncation, degree: int) -> CauchyReport:
    """Compare, degree by degree, the two sides of the pairing identity.

    Left side: over each x-degree m <= degree, the sum over shapes of the
    tableau generating function in the x variables times the one in the y
    variables.  Right side: the product over subscript pairs (i, j) of the
    geometric series in sum_{k,l} x_i^(k) y_j^(l), truncated at the stated
    degree (each x*y factor counts one x-degree and one y-degree).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    lhs: dict[tuple, Fraction] = {}
    for m in range(degree + 1):
        for lam in int_partitions(m):
            fx = _schur_sum_all_multidegrees(m, lam, x_trunc)
            fy = _schur_sum_all_multidegrees(m, lam, y_trunc)
            for mx, cx in fx.terms.items():
                for my, cy in fy.terms.items():
                    key = (mx, my)
                    lhs[key] = lhs.get(key, Fraction(0)) + cx * cy

    rhs: dict[tuple, Fraction] = {((), ()): Fraction(1)}
    pair_vars = [
        (k, l)
        for k in range(1, x_trunc.alphabets + 1)
        for l in range(1, y_trunc.alphabets + 1)
    ]

    def factor_terms(i: int, j: int) -> dict[tuple, Fraction]:
        from math import factorial as fact

        out: dict[tuple, Fraction] = {((), ()): Fraction(1)}
        for t in range(1, degree + 1):
            for counts in weak_compositions(t, len(pair_vars)):
                coeff = fact(t)
                x_exps: dict[tuple[int, int], int] = {}
                y_exps: dict[tuple[int, int], int] = {}
                for (k, l), c in zip(pair_vars, counts):
                    coeff //= fact(c)
                    if c:
                        x_exps[(i, k)] = x_exps.get((i, k), 0) + c
                        y_exps[(j, l)] = y_exps.get((j, l), 0) + c
                key = (tuple(sorted(x_exps.items())), tuple(sorted(y_exps.items())))
                out[key] = out.get(key, Fraction(0)) + coeff
        return out

    for i in range(1, x_trunc.variables + 1):
        for j in range(1, y_trunc.variables + 1):
            factor = factor_terms(i, j)
            nxt: dict[tuple, Fraction] = {}
            for (ax, ay), ca in rhs.items():
                da = mono_degree(ax)
                for (bx, by), cb in factor.items():
                    if da + mono_degree(bx) > degree:
                        continue
                    from .macmahon import mono_mul

                    key = (mono_mul(ax, bx), mono_mul(ay, by))
                    nxt[key] = nxt.get(key, Fraction(0)) + ca * cb
            rhs = {k: v for k, v in nxt.items() if v}

    lhs = {k: v for k, v in lhs.items() if v}
    mismatches = []
    for key in sorted(set(lhs) | set(rhs)):
        a, b = lhs.get(key, Fraction(0)), rhs.get(key, Fraction(0))
        if a != b:
            from .macmahon import format_monomial

            mismatches.append(
                f"x:[{format_monomial(key[0])}] y:[{format_monomial(key[1])}]: "
                f"tableau side {a}, product side {b}"
            )
    return CauchyReport(not mismatches, degree, mismatches)

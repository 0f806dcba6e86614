"""Dotted Young tableaux: fillings by (value, dot-class) pairs.

Entries compare by value only; rows weakly increase and columns strictly
increase in value, so any dot pattern may sit on a run of equal values in a
row.  Dot classes are rendered as prime marks: 2' is value 2 in class 1,
1'' is value 1 in class 2.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .intpartitions import IntPartition


_PRIME = "'"


class DottedEntry(NamedTuple):
    value: int
    dots: int

    def __str__(self) -> str:
        return str(self.value) + _PRIME * self.dots


_ENTRY_RE = re.compile(r"^(\d+)('+)$")


def parse_entry(token: str) -> DottedEntry:
    m = _ENTRY_RE.match(token.strip())
    if not m:
        raise ValueError(f"cannot parse dotted entry {token!r}")
    return DottedEntry(int(m.group(1)), len(m.group(2)))


class DottedTableau:
    """An immutable filling of a Young shape by dotted entries."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable] = ()):
        normalized = []
        for row in rows:
            normalized.append(tuple(DottedEntry(int(v), int(d)) for v, d in row))
        self.rows = tuple(normalized)
        lengths = [len(r) for r in self.rows]
        if any(l == 0 for l in lengths):
            raise ValueError("empty row in tableau")
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise ValueError(f"row lengths must weakly decrease: {lengths}")
        for row in self.rows:
            for e in row:
                if e.value < 1 or e.dots < 1:
                    raise ValueError(f"bad entry {e}")
            if any(row[i].value > row[i + 1].value for i in range(len(row) - 1)):
                raise ValueError(f"row not weakly increasing in value: {row}")
        for r in range(1, len(self.rows)):
            for c in range(len(self.rows[r])):
                if self.rows[r - 1][c].value >= self.rows[r][c].value:
                    raise ValueError(
                        f"column {c + 1} not strictly increasing in value"
                    )
        self.shape = IntPartition(lengths)

    @classmethod
    def parse(cls, text: str) -> "DottedTableau":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append([parse_entry(tok) for tok in line.split()])
        return cls(rows)

    @property
    def size(self) -> int:
        return self.shape.n

    def entries(self) -> Iterator[DottedEntry]:
        for row in self.rows:
            yield from row

    def multidegree(self, classes: int) -> tuple[int, ...]:
        """Count of entries in each dot class 1..classes."""
        counts = [0] * classes
        for e in self.entries():
            if e.dots > classes:
                raise ValueError(f"entry {e} beyond {classes} dot classes")
            counts[e.dots - 1] += 1
        return tuple(counts)

    def undotted(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.value for e in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DottedTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"<DottedTableau {self.undotted()}>"


def dotted_tableaux(
    shape: IntPartition,
    max_value: int,
    classes: int,
    multidegree: Sequence[int] | None = None,
) -> Iterator[DottedTableau]:
    """All fillings of the shape with values <= max_value, optionally with a
    prescribed per-class entry count."""
    lengths = shape.parts
    if not lengths:
        if multidegree is None or not any(multidegree):
            yield DottedTableau()
        return
    budget = list(multidegree) if multidegree is not None else None
    if budget is not None and (len(budget) != classes or sum(budget) != shape.n):
        raise ValueError("multidegree does not match shape size and class count")
    rows: list[list[DottedEntry]] = [[] for _ in lengths]

    def rec(r: int, c: int) -> Iterator[DottedTableau]:
        if r == len(lengths):
            yield DottedTableau([list(row) for row in rows])
            return
        nr, nc = (r, c + 1) if c + 1 < lengths[r] else (r + 1, 0)
        lo = rows[r][c - 1].value if c > 0 else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c].value + 1)
        for v in range(lo, max_value + 1):
            for cls in range(1, classes + 1):
                if budget is not None:
                    if budget[cls - 1] == 0:
                        continue
                    budget[cls - 1] -= 1
                rows[r].append(DottedEntry(v, cls))
                yield from rec(nr, nc)
                rows[r].pop()
                if budget is not None:
                    budget[cls - 1] += 1

    yield from rec(0, 0)


def dot_swap_involution(tab: DottedTableau, i: int) -> DottedTableau:
    """Exchange, per dot class, the counts of value i and value i+1.

    A column holding both an i and an i+1 keeps its values and trades their
    dot classes.  The remaining (free) i's and (i+1)'s in a row form one
    contiguous run; flipping each free entry on its own would break the weak
    row order, so the run of r free i's followed by s free (i+1)'s becomes s
    i's followed by r (i+1)'s, the dot sequences moving across unchanged.
    """
    if i < 1:
        raise ValueError("value must be positive")
    rows = [list(row) for row in tab.rows]
    width = len(rows[0]) if rows else 0

    paired: set[tuple[int, int]] = set()
    for c in range(width):
        hit_i = hit_i1 = None
        for r in range(len(rows)):
            if c < len(rows[r]):
                if rows[r][c].value == i:
                    hit_i = r
                elif rows[r][c].value == i + 1:
                    hit_i1 = r
        if hit_i is not None and hit_i1 is not None:
            a, b = rows[hit_i][c], rows[hit_i1][c]
            rows[hit_i][c] = DottedEntry(i, b.dots)
            rows[hit_i1][c] = DottedEntry(i + 1, a.dots)
            paired.add((hit_i, c))
            paired.add((hit_i1, c))

    for r, row in enumerate(rows):
        free_i = [c for c, e in enumerate(row) if e.value == i and (r, c) not in paired]
        free_i1 = [
            c for c, e in enumerate(row) if e.value == i + 1 and (r, c) not in paired
        ]
        if not free_i and not free_i1:
            continue
        dots_i = [row[c].dots for c in free_i]
        dots_i1 = [row[c].dots for c in free_i1]
        cells = free_i + free_i1
        new_entries = [DottedEntry(i, d) for d in dots_i1] + [
            DottedEntry(i + 1, d) for d in dots_i
        ]
        for c, e in zip(cells, new_entries):
            row[c] = e

    return DottedTableau(rows)

"""Integer partitions with factorial statistics, dominance order and Kostka numbers.

All values are immutable and all operations are pure.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable


class IntPartition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("parts", "_n")

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        if cleaned and cleaned[-1] <= 0:
            raise ValueError(f"parts must be positive integers: {tuple(parts)!r}")
        self.parts = tuple(cleaned)
        self._n = sum(cleaned)

    @classmethod
    def parse(cls, text: str) -> "IntPartition":
        s = text.strip()
        for opener, closer in (("(", ")"), ("[", "]")):
            if s.startswith(opener) and s.endswith(closer):
                s = s[1:-1].strip()
                break
        if not s:
            return cls()
        try:
            return cls(int(tok) for tok in s.split(","))
        except ValueError:
            raise ValueError(f"cannot parse integer partition from {text!r}") from None

    @property
    def n(self) -> int:
        return self._n

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Multiplicity m_i of each part value i."""
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def fact_parts(self) -> int:
        """Product of the factorials of the parts."""
        out = 1
        for p in self.parts:
            out *= factorial(p)
        return out

    def fact_mults(self) -> int:
        """Product of the factorials of the part multiplicities."""
        out = 1
        for m in self.multiplicities().values():
            out *= factorial(m)
        return out

    def count_of_type(self) -> int:
        """Number of set partitions of [n] whose block sizes give this partition."""
        return factorial(self._n) // (self.fact_parts() * self.fact_mults())

    def dominates(self, other: "IntPartition") -> bool:
        """Prefix-sum dominance; both partitions must have the same size."""
        if self._n != other._n:
            raise ValueError(f"dominance needs equal sizes: {self} vs {other}")
        acc_self = acc_other = 0
        for i in range(max(len(self.parts), len(other.parts))):
            acc_self += self.parts[i] if i < len(self.parts) else 0
            acc_other += other.parts[i] if i < len(other.parts) else 0
            if acc_self < acc_other:
                return False
        return True

    def conjugate(self) -> "IntPartition":
        if not self.parts:
            return IntPartition()
        return IntPartition(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "IntPartition") -> bool:
        return (self._n, self.parts) < (other._n, other.parts)

    def __le__(self, other: "IntPartition") -> bool:
        return self == other or self < other

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"IntPartition({self.parts!r})"


def lex_compare(a: IntPartition, b: IntPartition) -> int:
    """-1/0/+1 under lexicographic order, a linear extension of dominance."""
    ka, kb = (a.n, a.parts), (b.n, b.parts)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def int_partitions(n: int) -> list[IntPartition]:
    """All partitions of n in descending lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [IntPartition(t) for t in _partition_tuples(n, n)]


def kostka(lam: IntPartition, mu: IntPartition) -> int:
    """Number of semistandard Young tableaux of shape lam and content mu.

    Counted by direct enumeration so it can serve as its own ground truth.
    """
    if lam.n != mu.n:
        raise ValueError(f"shape and content must have equal size: {lam} vs {mu}")
    if lam.n == 0:
        return 1
    shape = lam.parts
    remaining = list(mu.parts) + [0]  # padding so index checks stay in range
    values = len(mu.parts)
    rows = [[0] * r for r in shape]

    def fill(r: int, c: int) -> int:
        if r == len(shape):
            return 1
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        total = 0
        for v in range(lo, values + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            rows[r][c] = v
            total += fill(nr, nc)
            remaining[v - 1] += 1
        rows[r][c] = 0
        return total

    return fill(0, 0)

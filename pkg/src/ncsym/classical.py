"""A minimal layer of ordinary (commuting-variable) symmetric functions.

Only what the noncommuting side needs: the m, p, e, h, s bases indexed by
integer partitions, conversions between them, the standard inner product
<m_lam, h_mu> = delta, and the e/h-swapping involution.  Coefficients are
exact rationals throughout; conversions expand in as many variables as the
degree, which is faithful for that degree.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .intpartitions import IntPartition, int_partitions, kostka
from .linalg import exact_solve

SYM_BASES = ("m", "p", "e", "h", "s")


class SymElement:
    """Linear combination of one basis, sparse over integer partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[IntPartition, Fraction] = ()):
        if basis not in SYM_BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        data = dict(terms.items() if isinstance(terms, Mapping) else terms)
        self.terms = {
            lam: Fraction(c) for lam, c in data.items() if Fraction(c) != 0
        }

    def degrees(self) -> list[int]:
        return sorted({lam.n for lam in self.terms})

    def degree(self) -> int:
        return max((lam.n for lam in self.terms), default=0)

    def homogeneous_component(self, n: int) -> "SymElement":
        return SymElement(
            self.basis, {lam: c for lam, c in self.terms.items() if lam.n == n}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_basis(self, other: "SymElement") -> None:
        if self.basis != other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis!r} vs {other.basis!r}; convert first"
            )

    def __add__(self, other: "SymElement") -> "SymElement":
        self._require_same_basis(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymElement(self.basis, out)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-1) * other

    def __neg__(self) -> "SymElement":
        return (-1) * self

    def __mul__(self, scalar) -> "SymElement":
        c = Fraction(scalar)
        return SymElement(self.basis, {lam: c * v for lam, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_sym(self)

    def __repr__(self) -> str:
        return f"<SymElement {format_sym(self)}>"


def _coeff_prefix(c: Fraction, strict: bool) -> str:
    if not strict and c == 1:
        return ""
    if not strict and c.denominator == 1:
        return f"{c.numerator}*"
    return f"{c.numerator}/{c.denominator}*"


def format_rational(c: Fraction, strict: bool = False) -> str:
    if c.denominator == 1 and not strict:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_sym(f: SymElement, strict_rationals: bool = False) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for lam in sorted(f.terms, key=lambda t: (t.n, t.parts)):
        c = f.terms[lam]
        body = _coeff_prefix(abs(c), strict_rationals) + f.basis + "[" + ",".join(
            str(p) for p in lam.parts
        ) + "]"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _generator_poly(basis: str, r: int, k: int) -> dict:
    """Degree-r generator (p_r, e_r or h_r) as exponent-vector -> coefficient."""
    one = (0,) * k
    if r == 0:
        return {one: 1}
    out: dict = {}
    if basis == "p":
        for i in range(k):
            exps = list(one)
            exps[i] = r
            out[tuple(exps)] = 1
    elif basis == "e":
        for support in itertools.combinations(range(k), r):
            exps = list(one)
            for i in support:
                exps[i] = 1
            out[tuple(exps)] = 1
    elif basis == "h":
        for exps in _weak_compositions(r, k):
            out[exps] = 1
    else:
        raise ValueError(f"no polynomial generator for basis {basis!r}")
    return out


@lru_cache(maxsize=None)
def _basis_m_coeffs(basis: str, lam: IntPartition) -> tuple:
    """Expansion of basis_lam into monomial symmetric functions of the same degree."""
    n = lam.n
    if basis == "m":
        return ((lam, Fraction(1)),)
    if basis == "s":
        out = []
        for mu in int_partitions(n):
            coeff = kostka(lam, mu)
            if coeff:
                out.append((mu, Fraction(coeff)))
        return tuple(out)
    k = max(n, 1)
    poly = {(0,) * k: 1}
    for part in lam.parts:
        poly = _poly_mul(poly, _generator_poly(basis, part, k))
    out = []
    for mu in int_partitions(n):
        exps = tuple(mu.parts) + (0,) * (k - mu.length)
        coeff = poly.get(exps, 0)
        if coeff:
            out.append((mu, Fraction(coeff)))
    return tuple(out)


def _to_m_dict(f: SymElement) -> dict[IntPartition, Fraction]:
    out: dict[IntPartition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, q in _basis_m_coeffs(f.basis, lam):
            out[mu] = out.get(mu, Fraction(0)) + c * q
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _m_matrix(basis: str, n: int) -> tuple:
    """Matrix with column lam = m-expansion of basis_lam, rows/cols over partitions of n."""
    ps = int_partitions(n)
    pos = {lam: i for i, lam in enumerate(ps)}
    size = len(ps)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for c, lam in enumerate(ps):
        for mu, q in _basis_m_coeffs(basis, lam):
            matrix[pos[mu]][c] = q
    return tuple(ps), matrix


def _from_m_dict(
    basis: str, n: int, coeffs: dict[IntPartition, Fraction]
) -> dict[IntPartition, Fraction]:
    if basis == "m":
        return dict(coeffs)
    ps, matrix = _m_matrix(basis, n)
    rhs = [coeffs.get(lam, Fraction(0)) for lam in ps]
    solution = exact_solve([row[:] for row in matrix], rhs)
    return {lam: v for lam, v in zip(ps, solution) if v}


def sym_convert(f: SymElement, target: str) -> SymElement:
    """Re-express an element in another basis, exactly."""
    if target not in SYM_BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == f.basis:
        return SymElement(f.basis, f.terms)
    out: dict[IntPartition, Fraction] = {}
    for n in f.degrees():
        part = _to_m_dict(f.homogeneous_component(n))
        for lam, c in _from_m_dict(target, n, part).items():
            out[lam] = out.get(lam, Fraction(0)) + c
    return SymElement(target, out)


def sym_inner(f: SymElement, g: SymElement) -> Fraction:
    """Bilinear extension of <m_lam, h_mu> = delta_{lam,mu}."""
    total = Fraction(0)
    g_degrees = set(g.degrees())
    for n in f.degrees():
        if n not in g_degrees:
            continue
        a = _to_m_dict(f.homogeneous_component(n))
        b = _from_m_dict("h", n, _to_m_dict(g.homogeneous_component(n)))
        for lam, c in a.items():
            total += c * b.get(lam, Fraction(0))
    return total


def omega_commutative(f: SymElement) -> SymElement:
    """The involution swapping e and h, applied in whatever basis f uses."""
    if f.basis == "e":
        return SymElement("h", f.terms)
    if f.basis == "h":
        return SymElement("e", f.terms)
    if f.basis == "p":
        return SymElement(
            "p",
            {lam: c * (-1) ** (lam.n - lam.length) for lam, c in f.terms.items()},
        )
    swapped = omega_commutative(sym_convert(f, "e"))
    return sym_convert(swapped, f.basis)

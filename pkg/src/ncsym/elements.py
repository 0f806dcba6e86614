"""Elements of the algebra of symmetric functions in noncommuting variables.

An element is a sparse rational linear combination of basis symbols b_pi,
one basis tag among m/p/e/h, with set partitions of possibly several sizes
(the element is a finite sum of homogeneous components).  Basis changes run
over the partition lattice: sums against the order relation, meets, and
Mobius coefficients.  All coefficients are exact rationals; floats are never
introduced.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .classical import SymElement, format_rational, sym_convert
from .intpartitions import IntPartition
from .setpartitions import SetPartition, lattice

NC_BASES = ("m", "p", "e", "h")


class NCSymElement:
    """Sparse rational combination of one basis, indexed by set partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[SetPartition, Fraction] = ()):
        if basis not in NC_BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        data = dict(terms.items() if isinstance(terms, Mapping) else terms)
        self.terms = {pi: Fraction(c) for pi, c in data.items() if Fraction(c) != 0}

    @classmethod
    def unit(cls, basis: str = "m") -> "NCSymElement":
        """The empty-partition symbol, the multiplicative identity."""
        return cls(basis, {SetPartition(): Fraction(1)})

    def degrees(self) -> list[int]:
        return sorted({pi.n for pi in self.terms})

    def degree(self) -> int:
        return max((pi.n for pi in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, n: int) -> "NCSymElement":
        return NCSymElement(
            self.basis, {pi: c for pi, c in self.terms.items() if pi.n == n}
        )

    def _require_same_basis(self, other: "NCSymElement") -> None:
        if self.basis != other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis!r} vs {other.basis!r}; convert first"
            )

    def __add__(self, other: "NCSymElement") -> "NCSymElement":
        self._require_same_basis(other)
        out = dict(self.terms)
        for pi, c in other.terms.items():
            out[pi] = out.get(pi, Fraction(0)) + c
        return NCSymElement(self.basis, out)

    def __sub__(self, other: "NCSymElement") -> "NCSymElement":
        return self + (-1) * other

    def __neg__(self) -> "NCSymElement":
        return (-1) * self

    def __mul__(self, scalar) -> "NCSymElement":
        c = Fraction(scalar)
        return NCSymElement(self.basis, {pi: c * v for pi, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NCSymElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_ncsym(self)

    def __repr__(self) -> str:
        return f"<NCSymElement {format_ncsym(self)}>"


def format_ncsym(f: NCSymElement, strict_rationals: bool = False) -> str:
    """Render with terms sorted by (degree, type, growth string)."""
    if not f.terms:
        return "0"
    pieces = []
    for pi in sorted(f.terms, key=SetPartition.sort_key):
        c = f.terms[pi]
        mag = abs(c)
        if mag == 1 and not strict_rationals:
            coeff = ""
        else:
            coeff = format_rational(mag, strict_rationals) + "*"
        pieces.append(("-" if c < 0 else "+", f"{coeff}{f.basis}[{pi}]"))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def _symbol_expansion(basis: str, target: str, pi: SetPartition) -> tuple:
    """Expansion of basis_pi in the target basis as ((sigma, coeff), ...).

    Each ordered pair of distinct bases has its own direct summation formula,
    so no conversion routes through an intermediate basis; agreement between
    alternative routes is checked by the verification suites instead.
    """
    if basis == target:
        return ((pi, Fraction(1)),)
    lat = lattice(pi.n)
    i = lat.index[pi]
    acc: dict[int, Fraction] = {}

    def add(j: int, value) -> None:
        acc[j] = acc.get(j, Fraction(0)) + Fraction(value)

    pair = (basis, target)
    if pair == ("p", "m"):
        for j in lat.above[i]:
            add(j, 1)
    elif pair == ("e", "m"):
        for j in range(lat.size):
            if lat.meet[i][j] == lat.zero:
                add(j, 1)
    elif pair == ("h", "m"):
        for j in range(lat.size):
            add(j, lat.type_fact[lat.meet[i][j]])
    elif pair == ("m", "p"):
        for j in lat.above[i]:
            add(j, lat.mu(i, j))
    elif pair in (("m", "e"), ("m", "h")):
        # double sum: over sigma above pi, then tau below sigma
        for s in lat.above[i]:
            denom = lat.mu0[s] if pair == ("m", "e") else lat.abs_mu0[s]
            outer = Fraction(lat.mu(i, s), denom)
            for t in lat.below[s]:
                add(t, outer * lat.mu(t, s))
    elif pair == ("e", "p"):
        for s in lat.below[i]:
            add(s, lat.mu0[s])
    elif pair == ("h", "p"):
        for s in lat.below[i]:
            add(s, lat.abs_mu0[s])
    elif pair == ("p", "e"):
        for s in lat.below[i]:
            add(s, Fraction(lat.mu(s, i), lat.mu0[i]))
    elif pair == ("p", "h"):
        for s in lat.below[i]:
            add(s, Fraction(lat.mu(s, i), lat.abs_mu0[i]))
    elif pair in (("e", "h"), ("h", "e")):
        for s in lat.below[i]:
            add(s, lat.signs[s] * lat.interval_fact(s, i))
    else:  # pragma: no cover - the pairs above are exhaustive
        raise ValueError(f"no conversion from {basis!r} to {target!r}")
    return tuple(
        (lat.elements[j], c) for j, c in sorted(acc.items()) if c
    )


def convert(f: NCSymElement, target: str) -> NCSymElement:
    """Re-express an element in another of the m/p/e/h bases, exactly."""
    if target not in NC_BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == f.basis:
        return NCSymElement(f.basis, f.terms)
    out: dict[SetPartition, Fraction] = {}
    for pi, c in f.terms.items():
        for sigma, q in _symbol_expansion(f.basis, target, pi):
            key = sigma
            out[key] = out.get(key, Fraction(0)) + c * q
    return NCSymElement(target, out)


def omega(f: NCSymElement) -> NCSymElement:
    """The involution with omega(e_pi) = h_pi; p_pi is an eigenvector of sign(pi)."""
    if f.basis == "e":
        return NCSymElement("h", f.terms)
    if f.basis == "h":
        return NCSymElement("e", f.terms)
    if f.basis == "p":
        return NCSymElement("p", {pi: c * pi.sign for pi, c in f.terms.items()})
    return convert(omega(convert(f, "p")), "m")


def project(f: NCSymElement) -> SymElement:
    """Let the variables commute; lands in the same-letter commutative basis.

    m_pi picks up the multiplicity factorial of its type, e_pi and h_pi the
    part factorial, and p_pi projects with coefficient 1.
    """
    out: dict[IntPartition, Fraction] = {}
    for pi, c in f.terms.items():
        lam = pi.type
        if f.basis == "m":
            scale = lam.fact_mults()
        elif f.basis == "p":
            scale = 1
        else:
            scale = lam.fact_parts()
        out[lam] = out.get(lam, Fraction(0)) + c * scale
    return SymElement(f.basis, out)


def lift(f: SymElement) -> NCSymElement:
    """Right inverse of projection: spread each m_lam over its set partitions."""
    fm = sym_convert(f, "m")
    out: dict[SetPartition, Fraction] = {}
    for lam, c in fm.terms.items():
        n = lam.n
        lat = lattice(n)
        scale = c * Fraction(lam.fact_parts(), factorial(n))
        for idx in lat.by_type[lam]:
            pi = lat.elements[idx]
            out[pi] = out.get(pi, Fraction(0)) + scale
    return NCSymElement("m", out)


def inner(f: NCSymElement, g: NCSymElement) -> Fraction:
    """Bilinear form with <m_pi, h_sigma> = n! delta; grades pair to zero."""
    fm = convert(f, "m")
    gh = convert(g, "h")
    total = Fraction(0)
    for pi, c in fm.terms.items():
        other = gh.terms.get(pi)
        if other is not None:
            total += factorial(pi.n) * c * other
    return total


def place_act(perm: Sequence[int], f: NCSymElement) -> NCSymElement:
    """Permute monomial positions; on basis symbols this relabels the index."""
    if not f.is_homogeneous():
        raise ValueError("place action needs a homogeneous element")
    if f.is_zero():
        return NCSymElement(f.basis)
    n = f.degree()
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(perm)!r}")
    return NCSymElement(f.basis, {pi.act(perm): c for pi, c in f.terms.items()})


def multiply(f: NCSymElement, g: NCSymElement) -> NCSymElement:
    """Product in the ambient free algebra, collected back into the m basis.

    Computed through the word-expansion oracle at enough variables to be
    faithful for the degree of the product.
    """
    from .words import collect, expand

    total = f.degree() + g.degree()
    k = max(total, 1)
    product = expand(f, k) * expand(g, k)
    return collect(product, total)

import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from ncsym.classical import SymElement, sym_inner
from ncsym.elements import (
    NCSymElement,
    convert,
    inner,
    lift,
    multiply,
    omega,
    place_act,
    project,
)
from ncsym.intpartitions import IntPartition, int_partitions
from ncsym.setpartitions import SetPartition, lattice, set_partitions
from ncsym.words import equal

P = SetPartition.parse
BASES = ("m", "p", "e", "h")


def elem(basis, text, coeff=1):
    return NCSymElement(basis, {P(text): Fraction(coeff)})


# random small elements for the property tests
coefficients = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
).filter(lambda c: c != 0)


@st.composite
def elements(draw, basis=None, max_n=4):
    if basis is None:
        basis = draw(st.sampled_from(BASES))
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = set_partitions(n)
    picks = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    terms = {}
    for pi in picks:
        terms[pi] = terms.get(pi, Fraction(0)) + draw(coefficients)
    return NCSymElement(basis, terms)


def test_convert_power_sum_paper_display():
    assert convert(elem("p", "13/24"), "m") == NCSymElement(
        "m", {P("13/24"): 1, P("1234"): 1}
    )


def test_convert_elementary_paper_display():
    want = {"12/34": 1, "14/23": 1, "12/3/4": 1, "14/2/3": 1,
            "1/23/4": 1, "1/2/34": 1, "1/2/3/4": 1}
    assert convert(elem("e", "13/24"), "m") == NCSymElement(
        "m", {P(k): Fraction(v) for k, v in want.items()}
    )


def test_convert_complete_paper_display():
    want = {"1/2/3/4": 1, "12/3/4": 1, "13/2/4": 2, "14/2/3": 1, "1/23/4": 1,
            "1/24/3": 2, "1/2/34": 1, "12/34": 1, "13/24": 4, "14/23": 1,
            "123/4": 2, "124/3": 2, "134/2": 2, "1/234": 2, "1234": 4}
    assert convert(elem("h", "13/24"), "m") == NCSymElement(
        "m", {P(k): Fraction(v) for k, v in want.items()}
    )


def test_convert_top_monomial_to_power_sum():
    assert convert(elem("m", "1234"), "p") == elem("p", "1234")


@pytest.mark.parametrize("n", range(5))
def test_roundtrips_all_basis_pairs(n):
    for pi in set_partitions(n):
        for b1 in BASES:
            f = NCSymElement(b1, {pi: Fraction(1)})
            for b2 in BASES:
                if b1 != b2:
                    assert convert(convert(f, b2), b1) == f, (b1, b2, pi)


def test_route_independence_through_p():
    for n in range(1, 5):
        for pi in set_partitions(n):
            f = NCSymElement("m", {pi: Fraction(1)})
            for target in ("e", "h"):
                assert convert(f, target) == convert(convert(f, "p"), target)


@given(elements())
@settings(deadline=None, max_examples=40)
def test_convert_roundtrip_random(f):
    for target in BASES:
        assert convert(convert(f, target), f.basis) == f


def test_omega_swaps_e_and_h():
    assert omega(elem("e", "13/24")) == elem("h", "13/24")
    assert omega(elem("h", "12/3")) == elem("e", "12/3")


def test_omega_power_sum_eigenvector():
    assert omega(elem("p", "13/24")) == elem("p", "13/24")
    assert omega(elem("p", "12/3")) == elem("p", "12/3", -1)


@given(elements())
@settings(deadline=None, max_examples=40)
def test_omega_is_an_involution(f):
    assert omega(omega(f)) == f


def test_project_paper_images():
    assert project(elem("m", "13/24")) == SymElement("m", {IntPartition((2, 2)): 2})
    assert project(elem("e", "13/24")) == SymElement("e", {IntPartition((2, 2)): 4})
    assert project(elem("p", "13/24")) == SymElement("p", {IntPartition((2, 2)): 1})
    assert project(elem("h", "12/3")) == SymElement("h", {IntPartition((2, 1)): 2})


def test_lift_examples():
    lifted = lift(SymElement("m", {IntPartition((2, 2)): 1}))
    assert lifted == NCSymElement(
        "m",
        {P("12/34"): Fraction(1, 6), P("13/24"): Fraction(1, 6), P("14/23"): Fraction(1, 6)},
    )
    assert lift(SymElement("m", {IntPartition((3,)): 1})) == elem("m", "123")


@pytest.mark.parametrize("n", range(7))
def test_project_lift_identity(n):
    for lam in int_partitions(n):
        f = SymElement("m", {lam: 1})
        assert project(lift(f)) == f


def test_inner_examples():
    assert inner(elem("m", "13/24"), elem("h", "13/24")) == 24
    assert inner(elem("h", "12"), elem("h", "1/2")) == 2
    assert inner(elem("p", "12"), elem("p", "12")) == 2


def test_inner_cross_degree_is_zero():
    f = elem("m", "12")
    g = elem("h", "123")
    assert inner(f, g) == 0
    mixed = NCSymElement("h", {P("12"): 1, P("123"): 1})
    assert inner(f, mixed) == inner(f, elem("h", "12"))


@given(elements(max_n=3), elements(max_n=3))
@settings(deadline=None, max_examples=30)
def test_inner_is_symmetric(f, g):
    assert inner(f, g) == inner(g, f)


def test_place_act_examples():
    pi = P("13/24")
    f = elem("m", "13/24")
    assert place_act((1, 2, 3, 4), f) == f
    assert place_act((2, 1, 3, 4), f) == NCSymElement("m", {pi.act((2, 1, 3, 4)): 1})
    with pytest.raises(ValueError):
        place_act((1, 2), NCSymElement("m", {P("1"): 1, P("12"): 1}))


def test_place_action_is_a_group_action():
    n = 3
    f = NCSymElement("h", {P("13/2"): Fraction(2), P("123"): Fraction(1, 3)})
    for g in itertools.permutations(range(1, n + 1)):
        for h in itertools.permutations(range(1, n + 1)):
            gh = tuple(g[h[i - 1] - 1] for i in range(1, n + 1))
            assert place_act(g, place_act(h, f)) == place_act(gh, f)


def test_multiply_examples():
    p1 = elem("p", "1")
    assert multiply(p1, p1) == convert(elem("p", "1/2"), "m")
    m1 = elem("m", "1")
    assert multiply(m1, m1) == NCSymElement("m", {P("1/2"): 1, P("12"): 1})
    unit = NCSymElement.unit()
    f = NCSymElement("h", {P("12"): Fraction(3, 2)})
    assert multiply(unit, f) == convert(f, "m")
    assert multiply(f, unit) == convert(f, "m")


def test_multiply_power_sums_concatenate():
    for a in set_partitions(2):
        for b in set_partitions(2):
            shifted = [tuple(e + 2 for e in blk) for blk in b.blocks]
            concat = SetPartition(list(a.blocks) + shifted)
            got = multiply(
                NCSymElement("p", {a: 1}), NCSymElement("p", {b: 1})
            )
            assert got == convert(NCSymElement("p", {concat: 1}), "m")


def test_multiply_distributes_over_sums():
    f = NCSymElement("m", {P("1"): 1, P("12"): 2})
    g = NCSymElement("m", {P("1"): Fraction(1, 2)})
    lhs = multiply(f, g)
    rhs = multiply(NCSymElement("m", {P("1"): 1}), g) + multiply(
        NCSymElement("m", {P("12"): 2}), g
    )
    assert lhs == rhs


def test_type_sum_of_h_lifts_commutative_h():
    # the sum of h over one type equals the lift of n!/type-multiplicities * h
    for n in range(1, 5):
        lat = lattice(n)
        for mu in int_partitions(n):
            total = NCSymElement("h")
            for idx in lat.by_type[mu]:
                total = total + NCSymElement("h", {lat.elements[idx]: 1})
            target = lift(
                SymElement("h", {mu: Fraction(factorial(n), mu.fact_mults())})
            )
            assert convert(total, "m") == target


def test_lift_is_isometry_on_basis_pairs():
    for n in range(1, 5):
        ms = [SymElement("m", {lam: 1}) for lam in int_partitions(n)]
        hs = [SymElement("h", {lam: 1}) for lam in int_partitions(n)]
        for f in ms + hs:
            for g in ms + hs:
                assert sym_inner(f, g) == inner(lift(f), lift(g))


def test_oracle_agrees_with_convert():
    for n in range(1, 4):
        for pi in set_partitions(n):
            for b in BASES:
                f = NCSymElement(b, {pi: 1})
                assert equal(f, convert(f, "m"))


def test_element_arithmetic_and_errors():
    f = elem("m", "12")
    g = elem("m", "1/2")
    assert (f + g) - f == g
    assert (2 * f).terms[P("12")] == 2
    assert (f - f).is_zero()
    with pytest.raises(ValueError):
        f + elem("p", "12")
    with pytest.raises(ValueError):
        NCSymElement("q", {})
    with pytest.raises(ValueError):
        convert(f, "s")

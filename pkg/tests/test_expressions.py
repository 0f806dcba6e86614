from fractions import Fraction

import pytest

from ncsym.classical import SymElement, format_sym, sym_convert
from ncsym.elements import NCSymElement, convert, format_ncsym
from ncsym.expressions import (
    ParseError,
    multipolynomial_to_json,
    ncsym_from_json,
    ncsym_to_json,
    parse_multipolynomial,
    parse_ncsym,
    parse_sym,
    sym_from_json,
    sym_to_json,
)
from ncsym.intpartitions import IntPartition
from ncsym.macmahon import (
    MultiPolynomial,
    Truncation,
    format_multipolynomial,
    mm_complete,
    schur_tableau_sum,
)
from ncsym.rsk import Biword
from ncsym.setpartitions import SetPartition
from ncsym.tableaux import DottedTableau
from ncsym.words import WordPolynomial, expand, format_word_polynomial, parse_word_polynomial

P = SetPartition.parse


def test_parse_basic_terms():
    f = parse_ncsym("3/2*h[1,3/2,4] - m[1,2,3]")
    # mixed bases collapse into the monomial basis
    assert f.basis == "m"
    want = convert(NCSymElement("h", {P("13/24"): Fraction(3, 2)}), "m") - NCSymElement(
        "m", {P("123"): 1}
    )
    assert f == want


def test_parse_single_basis_stays_put():
    f = parse_ncsym("2*p[1,2/3] + p[1/2/3]")
    assert f.basis == "p"
    assert f.terms == {P("12/3"): Fraction(2), P("1/2/3"): Fraction(1)}


def test_parse_compact_and_empty_forms():
    assert parse_ncsym("m[13/24]") == NCSymElement("m", {P("13/24"): 1})
    assert parse_ncsym("m[]") == NCSymElement.unit()
    assert parse_ncsym("-m[1]") == NCSymElement("m", {P("1"): -1})


def test_parse_cancellation_gives_zero():
    f = parse_ncsym("m[1,2] - m[1,2]")
    assert f.is_zero()


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_ncsym("m[1,2] + + m[1]")
    assert err.value.position == 9
    with pytest.raises(ParseError):
        parse_ncsym("q[1,2]")
    with pytest.raises(ParseError):
        parse_ncsym("m[1,2")
    with pytest.raises(ParseError):
        parse_ncsym("3 m[1]")
    with pytest.raises(ParseError):
        parse_ncsym("")
    with pytest.raises(ParseError):
        parse_ncsym("m[1,3]")  # not a partition of {1,2}


def test_print_parse_roundtrip_ncsym():
    f = NCSymElement(
        "h", {P("13/24"): Fraction(3, 2), P("1/2/3/4"): Fraction(-1), P("1"): Fraction(7)}
    )
    assert parse_ncsym(format_ncsym(f)) == f
    assert parse_ncsym(str(NCSymElement("m"))) == NCSymElement("m")


def test_print_parse_roundtrip_sym():
    f = SymElement("s", {IntPartition((2, 1)): Fraction(-5, 3), IntPartition(()): 2})
    assert parse_sym(format_sym(f)) == f
    g = parse_sym("2*m[3] + h[1,1]")
    assert g.basis == "m"
    assert g == sym_convert(SymElement("h", {IntPartition((1, 1)): 1}), "m") + SymElement(
        "m", {IntPartition((3,)): 2}
    )


def test_set_and_int_partition_text_roundtrip():
    for text in ["", "1", "1,3/2,4", "1,2,3,4", "1/2/3/4"]:
        assert str(P(text)) == str(SetPartition.parse(str(P(text))))
    for parts in [(), (3, 1), (2, 2, 1)]:
        lam = IntPartition(parts)
        assert IntPartition.parse(str(lam)) == lam


def test_json_roundtrip():
    f = NCSymElement("h", {P("13/24"): Fraction(3, 2)})
    assert ncsym_from_json(ncsym_to_json(f)) == f
    assert parse_ncsym(ncsym_to_json(f)) == f  # JSON detected by leading brace
    g = SymElement("e", {IntPartition((2, 1)): Fraction(-2)})
    assert sym_from_json(sym_to_json(g)) == g
    obj = ncsym_to_json(f)
    assert '"basis": "h"' in obj and '"coeff": "3/2"' in obj


def test_word_polynomial_text_roundtrip():
    f = NCSymElement("p", {P("12"): Fraction(2, 3)})
    poly = expand(f, 2)
    again = parse_word_polynomial(format_word_polynomial(poly), poly.k)
    assert again == poly
    unit = WordPolynomial(1, {(): Fraction(5)})
    assert parse_word_polynomial(format_word_polynomial(unit), 1) == unit


def test_multipolynomial_text_roundtrip():
    tr = Truncation(2, 3, 3)
    poly = schur_tableau_sum(IntPartition((2, 1)), (2, 1), tr)
    text = format_multipolynomial(poly)
    assert parse_multipolynomial(text, tr) == poly
    h = mm_complete((1, 1), Truncation(2, 1, 2))
    assert parse_multipolynomial(format_multipolynomial(h), Truncation(2, 1, 2)) == h
    assert parse_multipolynomial("0", tr).is_zero()
    constant = MultiPolynomial(tr, {(): Fraction(3, 2)})
    assert parse_multipolynomial(format_multipolynomial(constant), tr) == constant


def test_biword_and_tableau_text_roundtrip():
    bw = Biword.parse("1' 2'' 2'\n2' 1' 3''")
    assert Biword.parse(str(bw)) == bw
    tab = DottedTableau([[(1, 2), (1, 1), (3, 1)], [(2, 1), (2, 2)], [(3, 2)]])
    assert DottedTableau.parse(str(tab)) == tab


def test_display_order_matches_term_sorting():
    f = NCSymElement("m", {P("1234"): 1, P("13/24"): 1, P("1/2/3/4"): 1})
    assert (
        format_ncsym(f) == "m[1/2/3/4] + m[1,3/2,4] + m[1,2,3,4]"
    )  # finer types print first
    g = NCSymElement("m", {P("12"): 1, P("1"): 1})
    assert format_ncsym(g) == "m[1] + m[1,2]"  # grouped by degree first

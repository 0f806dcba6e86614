from fractions import Fraction
from math import factorial

import pytest

from ncsym.elements import NCSymElement, convert, inner, lift, project
from ncsym.classical import SymElement, sym_convert
from ncsym.intpartitions import IntPartition, int_partitions
from ncsym.linalg import matrix_rank
from ncsym.macmahon import (
    MultiPolynomial,
    Truncation,
    TruncationError,
    VectorPartition,
    jacobi_trudi,
    mm_complete,
    mm_elementary,
    mm_monomial,
    mm_multiplicative,
    mm_power,
    phi_collect,
    phi_from_set_partition,
    phi_to_set_partition,
    schur_ncsym,
    schur_tableau_sum,
    weak_compositions,
)
from ncsym.setpartitions import SetPartition, set_partitions
from ncsym.tableaux import DottedEntry, DottedTableau, dot_swap_involution, dotted_tableaux

IP = IntPartition


def mono(*factors):
    """factors as (subscript, dots, exponent)."""
    return tuple(sorted(((i, j), e) for i, j, e in factors))


def test_mm_monomial_display():
    got = mm_monomial(VectorPartition([(2, 1), (3, 0)]), Truncation(2, 2, 6))
    want = {
        mono((1, 1, 2), (1, 2, 1), (2, 1, 3)): Fraction(1),
        mono((1, 1, 3), (2, 1, 2), (2, 2, 1)): Fraction(1),
    }
    assert got.terms == want


def test_mm_monomial_single_part():
    got = mm_monomial(VectorPartition([(1, 0)]), Truncation(2, 1, 1))
    assert got.terms == {mono((1, 1, 1)): Fraction(1)}


def test_mm_monomial_repeated_parts_have_coefficient_one():
    got = mm_monomial(VectorPartition([(1, 0), (1, 0)]), Truncation(2, 3, 2))
    assert set(got.terms.values()) == {Fraction(1)}
    assert len(got.terms) == 3  # choose 2 subscripts among 3


def test_mm_elementary_examples():
    got = mm_elementary((1, 1), Truncation(2, 2, 2))
    assert got.terms == {
        mono((1, 1, 1), (2, 2, 1)): Fraction(1),
        mono((1, 2, 1), (2, 1, 1)): Fraction(1),
    }
    tr = Truncation(2, 3, 3)
    assert mm_complete((1, 0), tr) == mm_elementary((1, 0), tr)


def test_mm_complete_examples():
    got = mm_complete((1, 1), Truncation(2, 1, 2))
    assert got.terms == {mono((1, 1, 1), (1, 2, 1)): Fraction(2)}
    with pytest.raises(TruncationError):
        mm_complete((2, 2), Truncation(2, 2, 3))


def test_mm_power_is_single_part_monomial():
    tr = Truncation(2, 3, 4)
    assert mm_power((2, 1), tr) == mm_monomial(VectorPartition([(2, 1)]), tr)


def test_phi_examples():
    vp = VectorPartition([(1, 0, 1, 0), (0, 1, 0, 1)])
    assert phi_to_set_partition(vp) == SetPartition.parse("13/24")
    singletons = VectorPartition([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert phi_to_set_partition(singletons) == SetPartition.parse("1/2/3")
    for pi in set_partitions(4):
        assert phi_to_set_partition(phi_from_set_partition(pi)) == pi
    with pytest.raises(ValueError):
        phi_to_set_partition(VectorPartition([(1, 1), (1, 0)]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_carries_all_bases(n):
    # the vector-space isomorphism matches basis symbols on both sides
    tr = Truncation(n, n, n)
    for pi in set_partitions(n):
        vp = phi_from_set_partition(pi)
        assert phi_collect(mm_monomial(vp, tr)) == NCSymElement("m", {pi: 1})
        for basis in ("p", "e", "h"):
            got = phi_collect(mm_multiplicative(basis, vp, tr))
            assert got == convert(NCSymElement(basis, {pi: 1}), "m")


def test_schur_tableau_sum_paper_coefficient():
    S = schur_tableau_sum(IP((3, 1)), (2, 2), Truncation(2, 4, 4))
    assert S.coefficient(mono((1, 1, 2), (1, 2, 1), (2, 2, 1))) == 3


def test_schur_tableau_sum_small_cases():
    got = schur_tableau_sum(IP((1,)), (1,), Truncation(1, 3, 1))
    assert got.terms == {
        mono((1, 1, 1)): Fraction(1),
        mono((2, 1, 1)): Fraction(1),
        mono((3, 1, 1)): Fraction(1),
    }
    got = schur_tableau_sum(IP((1, 1)), (2, 0), Truncation(2, 2, 2))
    assert got.terms == {mono((1, 1, 1), (2, 1, 1)): Fraction(1)}


def test_schur_tableau_sum_validation():
    with pytest.raises(ValueError):
        schur_tableau_sum(IP((2,)), (1,), Truncation(1, 2, 2))
    with pytest.raises(TruncationError):
        schur_tableau_sum(IP((3,)), (3, 0), Truncation(2, 3, 2))


def test_dotted_tableau_invariants():
    with pytest.raises(ValueError):
        DottedTableau([[(2, 1), (1, 1)]])  # row decreasing
    with pytest.raises(ValueError):
        DottedTableau([[(1, 1)], [(1, 2)]])  # column not strict
    with pytest.raises(ValueError):
        DottedTableau([[(1, 1)], [(1, 1), (2, 1)]])  # shape not a partition
    t = DottedTableau([[(1, 2), (1, 1)], [(2, 1)]])
    assert t.shape == IP((2, 1))
    assert t.multidegree(2) == (2, 1)
    assert t.undotted() == ((1, 1), (2,))


def test_dot_swap_involution_examples():
    t = DottedTableau([[(3, 1), (4, 2)]])
    assert dot_swap_involution(t, 1) == t  # no entries valued 1 or 2
    single = DottedTableau([[(1, 1)]])
    assert dot_swap_involution(single, 1) == DottedTableau([[(2, 1)]])
    # a paired column trades dot classes
    paired = DottedTableau([[(1, 1)], [(2, 2)]])
    assert dot_swap_involution(paired, 1) == DottedTableau([[(1, 2)], [(2, 1)]])
    # a free run reverses its value counts, dots staying in order
    run = DottedTableau([[(1, 1), (1, 2), (2, 1)]])
    assert dot_swap_involution(run, 1) == DottedTableau([[(1, 1), (2, 1), (2, 2)]])


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_dot_swap_is_involution_and_trades_counts(size):
    for shape in int_partitions(size):
        for tab in dotted_tableaux(shape, 3, 2):
            for i in (1, 2):
                image = dot_swap_involution(tab, i)
                assert image.shape == tab.shape
                assert dot_swap_involution(image, i) == tab
                before: dict = {}
                after: dict = {}
                for e in tab.entries():
                    before[e] = before.get(e, 0) + 1
                for e in image.entries():
                    after[e] = after.get(e, 0) + 1
                for cls in (1, 2):
                    assert before.get(DottedEntry(i, cls), 0) == after.get(
                        DottedEntry(i + 1, cls), 0
                    )
                    assert before.get(DottedEntry(i + 1, cls), 0) == after.get(
                        DottedEntry(i, cls), 0
                    )


def test_subscript_swap_fixes_tableau_sums():
    k = 3
    tr = Truncation(2, k, 3)
    for lam in int_partitions(3):
        for vec in weak_compositions(3, 2):
            S = schur_tableau_sum(lam, vec, tr)
            for a in (1, 2):
                swapped = {}
                for m, c in S.terms.items():
                    key = tuple(
                        sorted(
                            ((a + 1 if i == a else (a if i == a + 1 else i), j), e)
                            for (i, j), e in m
                        )
                    )
                    swapped[key] = swapped.get(key, Fraction(0)) + c
                assert swapped == S.terms


def test_schur_ncsym_examples():
    assert schur_ncsym(IP((2,))) == NCSymElement(
        "m", {SetPartition.parse("12"): 2, SetPartition.parse("1/2"): 1}
    )
    assert schur_ncsym(IP((1,))) == NCSymElement("m", {SetPartition.parse("1"): 1})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_schur_ncsym_properties(n):
    shapes = int_partitions(n)
    elems = set_partitions(n)
    for lam in shapes:
        S = schur_ncsym(lam)
        tr = Truncation(n, n, n)
        assert S == phi_collect(schur_tableau_sum(lam, (1,) * n, tr))
        scaled = SymElement("s", {lam: factorial(n)})
        assert sym_convert(project(S), "m") == sym_convert(scaled, "m")
        assert lift(scaled) == S
    matrix = [[schur_ncsym(lam).terms.get(pi, Fraction(0)) for pi in elems] for lam in shapes]
    assert matrix_rank(matrix) == len(shapes)
    for lam in shapes:
        for mu in shapes:
            want = factorial(n) ** 2 if lam == mu else 0
            assert inner(schur_ncsym(lam), schur_ncsym(mu)) == want


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_jacobi_trudi_matches_tableaux(m):
    tr = Truncation(2, m, m)
    for lam in int_partitions(m):
        for vec in weak_compositions(m, 2):
            assert jacobi_trudi(lam, vec, "h", tr) == schur_tableau_sum(lam, vec, tr)
            assert jacobi_trudi(lam, vec, "e", tr) == schur_tableau_sum(
                lam.conjugate(), vec, tr
            )


def test_jacobi_trudi_single_alphabet_is_classical():
    m = 3
    tr = Truncation(1, m, m)
    got = jacobi_trudi(IP((2, 1)), (m,), "h", tr)
    assert got == schur_tableau_sum(IP((2, 1)), (m,), tr)
    # s_(2,1) = m_(2,1) + 2 m_(1,1,1) in three variables
    want = {
        mono((1, 1, 2), (2, 1, 1)): Fraction(1),
        mono((1, 1, 2), (3, 1, 1)): Fraction(1),
        mono((2, 1, 2), (1, 1, 1)): Fraction(1),
        mono((2, 1, 2), (3, 1, 1)): Fraction(1),
        mono((3, 1, 2), (1, 1, 1)): Fraction(1),
        mono((3, 1, 2), (2, 1, 1)): Fraction(1),
        mono((1, 1, 1), (2, 1, 1), (3, 1, 1)): Fraction(2),
    }
    assert got.terms == want


def test_jacobi_trudi_validation():
    with pytest.raises(ValueError):
        jacobi_trudi(IP((2,)), (1,), "h", Truncation(1, 2, 2))
    with pytest.raises(ValueError):
        jacobi_trudi(IP((2,)), (2,), "x", Truncation(1, 2, 2))


def test_vector_partition_parse_and_str():
    vp = VectorPartition.parse("{[1,0],[0,1]}")
    assert vp.parts == ((1, 0), (0, 1))
    assert str(vp) == "{[1,0],[0,1]}"
    assert vp.multidegree() == (1, 1)
    assert vp.degree() == 2
    with pytest.raises(ValueError):
        VectorPartition([(0, 0)])
    with pytest.raises(ValueError):
        VectorPartition([(1,), (1, 0)])


def test_multipolynomial_truncation_rules():
    tr = Truncation(1, 2, 2)
    x1 = MultiPolynomial(tr, {mono((1, 1, 1)): Fraction(1)})
    x2 = MultiPolynomial(tr, {mono((2, 1, 1)): Fraction(1)})
    prod = x1 * x2
    assert prod.terms == {mono((1, 1, 1), (2, 1, 1)): Fraction(1)}
    assert (prod * x1).is_zero()  # degree 3 falls off the cap
    with pytest.raises(TruncationError):
        MultiPolynomial(tr, {mono((1, 1, 3)): Fraction(1)})
    with pytest.raises(TruncationError):
        MultiPolynomial(tr, {mono((3, 1, 1)): Fraction(1)})

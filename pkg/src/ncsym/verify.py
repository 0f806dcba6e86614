"""Named verification suites: every identity the library promises, checked
exhaustively at desk scale with exact arithmetic.

Each suite returns a list of CheckResult; a size cap can lower (never raise)
the default ranges, so ``run(["all"], max_n=4)`` is a fast smoke pass while
the defaults reproduce the full acceptance sizes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .classical import SymElement, omega_commutative, sym_convert, sym_inner
from .elements import NCSymElement, convert, inner, lift, multiply, omega, place_act, project
from .intpartitions import IntPartition, int_partitions
from .macmahon import (
    Truncation,
    jacobi_trudi,
    phi_collect,
    schur_ncsym,
    schur_tableau_sum,
    weak_compositions,
)
from .rsk import Biword, cauchy_check, rsk_forward, rsk_inverse
from .setpartitions import SetPartition, lattice, mobius, set_partitions
from .tableaux import DottedEntry, DottedTableau, dotted_tableaux
from .words import expand, expand_position_action, kernel


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _cap(default: int, max_n: int | None) -> int:
    return default if max_n is None else min(default, max_n)


def _result(results: list[CheckResult], name: str, failures: list[str]) -> None:
    results.append(
        CheckResult(name, not failures, "; ".join(failures[:3]))
    )


def _basis_elem(basis: str, pi: SetPartition) -> NCSymElement:
    return NCSymElement(basis, {pi: Fraction(1)})


# ---------------------------------------------------------------------------
# reference implementations used only for cross-checking


def _mobius_recursive(lat) -> dict[tuple[int, int], int]:
    """Mobius numbers on every interval from the defining recursion."""
    table: dict[tuple[int, int], int] = {}
    for i in range(lat.size):
        order = sorted(lat.above[i], key=lambda j: len(lat.below[j]))
        for j in order:
            if i == j:
                table[(i, j)] = 1
                continue
            total = 0
            for c in lat.above[i]:
                if c != j and lat.leq_idx(c, j):
                    total += table[(i, c)]
            table[(i, j)] = -total
    return table


def _classical_insertion(bottom: list[int], top: list[int]):
    """Plain integer RSK used as the reference for the undotting check."""
    ins: list[list[int]] = []
    rec: list[list[int]] = []
    for t, b in zip(top, bottom):
        r = 0
        entry = b
        while True:
            if r == len(ins):
                ins.append([entry])
                break
            row = ins[r]
            spot = next((c for c, v in enumerate(row) if v > entry), None)
            if spot is None:
                row.append(entry)
                break
            entry, row[spot] = row[spot], entry
            r += 1
        if r == len(rec):
            rec.append([])
        rec[r].append(t)
    return tuple(tuple(r) for r in ins), tuple(tuple(r) for r in rec)


def _all_biwords(max_len: int, max_value: int, classes: int):
    """Every biword with the stated bounds; ties carry all dot patterns."""
    value_pairs = [
        (t, b) for t in range(1, max_value + 1) for b in range(1, max_value + 1)
    ]
    for length in range(max_len + 1):
        for values in itertools.combinations_with_replacement(value_pairs, length):
            for dotting in itertools.product(
                range(1, classes + 1), repeat=2 * length
            ):
                yield Biword(
                    (
                        (DottedEntry(t, dotting[2 * i]), DottedEntry(b, dotting[2 * i + 1]))
                        for i, (t, b) in enumerate(values)
                    )
                )


def _h_expansion_by_linear_orders(pi: SetPartition, k: int):
    """Count (function, block-ordering) pairs directly, word by word."""
    n = pi.n
    counts: dict[tuple[int, ...], int] = {}
    for word in itertools.product(range(1, k + 1), repeat=n):
        meet = kernel(word).meet(pi)
        orderings = 1
        for block in meet.blocks:
            orderings *= factorial(len(block))
        counts[word] = orderings
    return counts


# ---------------------------------------------------------------------------
# suites


def suite_examples(max_n: int | None = None) -> list[CheckResult]:
    """Reproduce the worked examples exactly."""
    results: list[CheckResult] = []
    pi = SetPartition.parse("13/24")

    expected_p = {"13/24": 1, "1234": 1}
    expected_e = {
        "12/34": 1, "14/23": 1, "12/3/4": 1, "14/2/3": 1,
        "1/23/4": 1, "1/2/34": 1, "1/2/3/4": 1,
    }
    expected_h = {
        "1/2/3/4": 1, "12/3/4": 1, "13/2/4": 2, "14/2/3": 1, "1/23/4": 1,
        "1/24/3": 2, "1/2/34": 1, "12/34": 1, "13/24": 4, "14/23": 1,
        "123/4": 2, "124/3": 2, "134/2": 2, "1/234": 2, "1234": 4,
    }
    for basis, expected in (("p", expected_p), ("e", expected_e), ("h", expected_h)):
        got = convert(_basis_elem(basis, pi), "m").terms
        want = {SetPartition.parse(k): Fraction(v) for k, v in expected.items()}
        _result(
            results,
            f"examples.{basis}_13/24_monomial_expansion",
            [] if got == want else [f"got {len(got)} terms, mismatch"],
        )

    value = inner(_basis_elem("m", pi), _basis_elem("h", pi))
    _result(results, "examples.inner_m_h_13/24_is_24",
            [] if value == 24 else [f"got {value}"])

    fails = []
    for n in range(1, _cap(6, max_n) + 1):
        got = mobius(SetPartition.bottom(n), SetPartition.top(n))
        want = (-1) ** (n - 1) * factorial(n - 1)
        if got != want:
            fails.append(f"n={n}: {got} != {want}")
    _result(results, "examples.mobius_bottom_top_formula", fails)

    S = schur_tableau_sum(IntPartition((3, 1)), (2, 2), Truncation(2, 4, 4))
    coeff = S.coefficient((((1, 1), 2), ((1, 2), 1), ((2, 2), 1)))
    _result(results, "examples.macmahon_schur_31_22_coefficient_3",
            [] if coeff == 3 else [f"got {coeff}"])

    biword = Biword.parse("1' 2' 2'' 2' 3'' 4'\n2' 1'' 3'' 3' 2'' 1'")
    T, U = rsk_forward(biword)
    want_T = DottedTableau([[(1, 2), (1, 1), (3, 1)], [(2, 1), (2, 2)], [(3, 2)]])
    # the recording dots come verbatim from the biword's top row
    want_U = DottedTableau([[(1, 1), (2, 2), (2, 1)], [(2, 1), (3, 2)], [(4, 1)]])
    _result(results, "examples.rsk_insertion_tableau",
            [] if T == want_T else [f"got\n{T}"])
    _result(results, "examples.rsk_recording_tableau",
            [] if U == want_U else [f"got\n{U}"])
    return results


def suite_roundtrip(max_n: int | None = None) -> list[CheckResult]:
    """Every ordered pair of bases converts there and back to the identity."""
    results: list[CheckResult] = []
    bases = ("m", "p", "e", "h")
    for n in range(_cap(5, max_n) + 1):
        elems = set_partitions(n)
        for b1 in bases:
            for b2 in bases:
                if b1 == b2:
                    continue
                fails = []
                for pi in elems:
                    f = _basis_elem(b1, pi)
                    if convert(convert(f, b2), b1) != f:
                        fails.append(f"{b1}->{b2}->{b1} at {pi}")
                _result(results, f"roundtrip.n{n}.{b1}->{b2}->{b1}", fails)
        fails = []
        for pi in elems:
            f = _basis_elem("m", pi)
            for target in ("e", "h"):
                direct = convert(f, target)
                routed = convert(convert(f, "p"), target)
                if direct != routed:
                    fails.append(f"m->{target} vs m->p->{target} at {pi}")
        _result(results, f"roundtrip.n{n}.double_sum_matches_route_via_p", fails)
    return results


def suite_oracle(max_n: int | None = None) -> list[CheckResult]:
    """All nine basis-change formulas hold as exact word-polynomial identities."""
    results: list[CheckResult] = []
    for n in range(1, _cap(4, max_n) + 1):
        lat = lattice(n)
        k = n
        exp = {
            (b, i): expand(_basis_elem(b, lat.elements[i]), k)
            for b in ("m", "p", "e", "h")
            for i in range(lat.size)
        }
        identities = {
            "p_as_sum_of_m_above": lambda i: (
                exp[("p", i)],
                sum(
                    (exp[("m", j)] for j in lat.above[i]),
                    start=0 * exp[("m", i)],
                ),
            ),
            "e_as_sum_of_m_meeting_bottom": lambda i: (
                exp[("e", i)],
                sum(
                    (exp[("m", j)] for j in range(lat.size) if lat.meet[i][j] == lat.zero),
                    start=0 * exp[("m", i)],
                ),
            ),
            "h_as_meet_factorial_sum_of_m": lambda i: (
                exp[("h", i)],
                sum(
                    (lat.type_fact[lat.meet[i][j]] * exp[("m", j)] for j in range(lat.size)),
                    start=0 * exp[("m", i)],
                ),
            ),
            "e_as_mobius_sum_of_p": lambda i: (
                exp[("e", i)],
                sum(
                    (lat.mu0[s] * exp[("p", s)] for s in lat.below[i]),
                    start=0 * exp[("p", i)],
                ),
            ),
            "h_as_abs_mobius_sum_of_p": lambda i: (
                exp[("h", i)],
                sum(
                    (lat.abs_mu0[s] * exp[("p", s)] for s in lat.below[i]),
                    start=0 * exp[("p", i)],
                ),
            ),
            "p_as_mobius_sum_of_e": lambda i: (
                exp[("p", i)],
                sum(
                    (Fraction(lat.mu(s, i), lat.mu0[i]) * exp[("e", s)] for s in lat.below[i]),
                    start=0 * exp[("e", i)],
                ),
            ),
            "p_as_mobius_sum_of_h": lambda i: (
                exp[("p", i)],
                sum(
                    (Fraction(lat.mu(s, i), lat.abs_mu0[i]) * exp[("h", s)] for s in lat.below[i]),
                    start=0 * exp[("h", i)],
                ),
            ),
            "e_as_signed_interval_sum_of_h": lambda i: (
                exp[("e", i)],
                sum(
                    (lat.signs[s] * lat.interval_fact(s, i) * exp[("h", s)] for s in lat.below[i]),
                    start=0 * exp[("h", i)],
                ),
            ),
            "h_as_signed_interval_sum_of_e": lambda i: (
                exp[("h", i)],
                sum(
                    (lat.signs[s] * lat.interval_fact(s, i) * exp[("e", s)] for s in lat.below[i]),
                    start=0 * exp[("e", i)],
                ),
            ),
        }
        for label, make in identities.items():
            fails = []
            for i in range(lat.size):
                lhs, rhs = make(i)
                if lhs != rhs:
                    fails.append(f"{lat.elements[i]}")
            _result(results, f"oracle.n{n}.{label}", fails)

        fails = []
        for i in range(lat.size):
            pi = lat.elements[i]
            counts = _h_expansion_by_linear_orders(pi, k) if n <= 3 else None
            if counts is None:
                break
            got = exp[("h", i)].terms
            want = {w: Fraction(c) for w, c in counts.items() if c}
            if got != want:
                fails.append(str(pi))
        if n <= 3:
            _result(results, f"oracle.n{n}.h_matches_linear_order_count", fails)

        fails = []
        for i in range(lat.size):
            pi = lat.elements[i]
            words = exp[("m", i)].terms
            kernels = {kernel(w) for w in words}
            if kernels != {pi}:
                fails.append(str(pi))
        _result(results, f"oracle.n{n}.kernel_constant_on_m_expansion", fails)

        fails = []
        for g in itertools.permutations(range(1, n + 1)):
            for i in range(lat.size):
                for b in ("m", "p", "e", "h"):
                    f = _basis_elem(b, lat.elements[i])
                    lhs = expand(place_act(g, f), k)
                    rhs = expand_position_action(g, exp[(b, i)])
                    if lhs != rhs:
                        fails.append(f"g={g} {b}_{lat.elements[i]}")
        _result(results, f"oracle.n{n}.place_action_commutes_with_expansion", fails)
    return results


def suite_mobius(max_n: int | None = None) -> list[CheckResult]:
    """Product-formula Mobius versus the recursion, plus the summation laws."""
    results: list[CheckResult] = []
    for n in range(_cap(5, max_n) + 1):
        lat = lattice(n)
        recursive = _mobius_recursive(lat)
        fails = []
        for i in range(lat.size):
            for j in range(lat.size):
                want = recursive.get((i, j), 0)
                got = lat.mu(i, j)
                if got != want:
                    fails.append(f"({lat.elements[i]},{lat.elements[j]})")
        _result(results, f"mobius.n{n}.product_equals_recursive", fails)

        fails = []
        for i in range(lat.size):
            for j in lat.above[i]:
                total = sum(
                    lat.mu(i, t) for t in lat.above[i] if lat.leq_idx(t, j)
                )
                if total != (1 if i == j else 0):
                    fails.append(f"({lat.elements[i]},{lat.elements[j]})")
        _result(results, f"mobius.n{n}.interval_sums_are_delta", fails)

    for n in range(_cap(6, max_n) + 1):
        lat = lattice(n)
        fails = []
        for j in range(lat.size):
            total = sum(lat.abs_mu0[i] for i in lat.below[j])
            if total != lat.type_fact[j]:
                fails.append(str(lat.elements[j]))
        _result(results, f"mobius.n{n}.abs_sum_below_is_type_factorial", fails)

        fails = []
        for j in range(lat.size):
            if lat.mu0[j] != lat.signs[j] * lat.abs_mu0[j]:
                fails.append(str(lat.elements[j]))
        _result(results, f"mobius.n{n}.sign_carries_mobius_sign", fails)
    return results


def suite_omega(max_n: int | None = None) -> list[CheckResult]:
    """The e/h involution: order two, power-sum eigenvectors, projection."""
    results: list[CheckResult] = []
    for n in range(_cap(5, max_n) + 1):
        elems = set_partitions(n)
        fails = []
        for b in ("m", "p", "e", "h"):
            for pi in elems:
                f = _basis_elem(b, pi)
                if omega(omega(f)) != f:
                    fails.append(f"{b}_{pi}")
        _result(results, f"omega.n{n}.involution", fails)

        fails = []
        for pi in elems:
            f = _basis_elem("p", pi)
            if omega(f) != pi.sign * f:
                fails.append(str(pi))
        _result(results, f"omega.n{n}.power_sum_eigenvectors", fails)

        fails = []
        for b in ("m", "p", "e", "h"):
            for pi in elems:
                f = _basis_elem(b, pi)
                lhs = sym_convert(project(omega(f)), "m")
                rhs = sym_convert(omega_commutative(project(f)), "m")
                if lhs != rhs:
                    fails.append(f"{b}_{pi}")
        _result(results, f"omega.n{n}.commutes_with_projection", fails)

        fails = []
        for lam in int_partitions(n):
            lhs = convert(omega(schur_ncsym(lam)), "m")
            if lhs != schur_ncsym(lam.conjugate()):
                fails.append(str(lam))
        _result(results, f"omega.n{n}.schur_conjugation", fails)
    return results


def suite_inner(max_n: int | None = None) -> list[CheckResult]:
    """All ten closed forms of the bilinear pairing, plus its axioms."""
    results: list[CheckResult] = []
    for n in range(1, _cap(4, max_n) + 1):
        lat = lattice(n)
        nf = factorial(n)
        elems = lat.elements

        def zeta(i: int, j: int) -> int:
            return 1 if lat.leq_idx(i, j) else 0

        closed_forms = {
            ("e", "e"): lambda i, j: nf * lat.type_fact[lat.meet[i][j]],
            ("e", "h"): lambda i, j: nf * (1 if lat.meet[i][j] == lat.zero else 0),
            ("e", "p"): lambda i, j: lat.signs[j] * nf * zeta(j, i),
            ("e", "m"): lambda i, j: (
                lat.signs[j] * nf * lat.interval_fact(j, i) * zeta(j, i)
                if lat.leq_idx(j, i)
                else 0
            ),
            ("h", "h"): lambda i, j: nf * lat.type_fact[lat.meet[i][j]],
            ("h", "p"): lambda i, j: nf * zeta(j, i),
            ("h", "m"): lambda i, j: nf * (1 if i == j else 0),
            ("p", "p"): lambda i, j: Fraction(nf * (1 if i == j else 0), lat.abs_mu0[i]),
            ("p", "m"): lambda i, j: Fraction(nf * lat.mu(j, i) * zeta(j, i), lat.abs_mu0[i]),
            ("m", "m"): lambda i, j: nf
            * sum(
                Fraction(lat.mu(i, t) * lat.mu(j, t), lat.abs_mu0[t])
                for t in lat.above[lat.join[i][j]]
            ),
        }
        for (b1, b2), formula in closed_forms.items():
            fails = []
            for i in range(lat.size):
                for j in range(lat.size):
                    got = inner(_basis_elem(b1, elems[i]), _basis_elem(b2, elems[j]))
                    if got != formula(i, j):
                        fails.append(f"<{b1}_{elems[i]},{b2}_{elems[j]}>")
            _result(results, f"inner.n{n}.closed_form_{b1}{b2}", fails)

        fails = []
        for b1, b2 in (("m", "h"), ("p", "e"), ("e", "h"), ("m", "p")):
            for i in range(lat.size):
                for j in range(lat.size):
                    f = _basis_elem(b1, elems[i])
                    g = _basis_elem(b2, elems[j])
                    if inner(f, g) != inner(g, f):
                        fails.append(f"<{b1}_{elems[i]},{b2}_{elems[j]}>")
        _result(results, f"inner.n{n}.symmetry", fails)

        fails = []
        for i in range(lat.size):
            for j in range(lat.size):
                got = inner(_basis_elem("p", elems[i]), _basis_elem("p", elems[j]))
                if i == j:
                    if got <= 0 or got != Fraction(nf, lat.abs_mu0[i]):
                        fails.append(str(elems[i]))
                elif got != 0:
                    fails.append(f"({elems[i]},{elems[j]})")
        _result(results, f"inner.n{n}.power_sum_gram_diagonal_positive", fails)

        fails = []
        for g in itertools.permutations(range(1, n + 1)):
            for b1, b2 in (("m", "h"), ("p", "e")):
                for i in range(lat.size):
                    for j in range(lat.size):
                        f1 = _basis_elem(b1, elems[i])
                        f2 = _basis_elem(b2, elems[j])
                        if inner(place_act(g, f1), place_act(g, f2)) != inner(f1, f2):
                            fails.append(f"g={g} <{b1}_{elems[i]},{b2}_{elems[j]}>")
        _result(results, f"inner.n{n}.place_action_invariance", fails)
    return results


def suite_projection(max_n: int | None = None) -> list[CheckResult]:
    """Projection images, lifting as a right inverse, and the isometry."""
    results: list[CheckResult] = []
    for n in range(_cap(5, max_n) + 1):
        fails = []
        for pi in set_partitions(n):
            lam = pi.type
            images = {
                "m": SymElement("m", {lam: lam.fact_mults()}),
                "p": SymElement("p", {lam: 1}),
                "e": SymElement("e", {lam: lam.fact_parts()}),
                "h": SymElement("h", {lam: lam.fact_parts()}),
            }
            for b, want in images.items():
                if project(_basis_elem(b, pi)) != want:
                    fails.append(f"{b}_{pi}")
        _result(results, f"projection.n{n}.basis_images", fails)

    for n in range(_cap(6, max_n) + 1):
        fails = []
        for lam in int_partitions(n):
            f = SymElement("m", {lam: 1})
            if project(lift(f)) != f:
                fails.append(str(lam))
        _result(results, f"projection.n{n}.project_after_lift_is_identity", fails)

    for n in range(_cap(5, max_n) + 1):
        fails = []
        basis_elems = [SymElement("m", {lam: 1}) for lam in int_partitions(n)]
        basis_elems += [SymElement("h", {lam: 1}) for lam in int_partitions(n)]
        for f in basis_elems:
            for g in basis_elems:
                if sym_inner(f, g) != inner(lift(f), lift(g)):
                    fails.append(f"<{f},{g}>")
        _result(results, f"projection.n{n}.lift_is_isometry", fails)

        fails = []
        for mu in int_partitions(n):
            total = NCSymElement("h")
            lat = lattice(n)
            for idx in lat.by_type[mu]:
                total = total + _basis_elem("h", lat.elements[idx])
            target = lift(SymElement("h", {mu: Fraction(factorial(n), mu.fact_mults())}))
            if convert(total, "m") != target:
                fails.append(str(mu))
        _result(results, f"projection.n{n}.type_sum_of_h_is_lifted_h", fails)
    return results


def suite_schur(max_n: int | None = None) -> list[CheckResult]:
    """The noncommuting Schur family: expansion, rank, projection, pairing."""
    results: list[CheckResult] = []
    from .linalg import matrix_rank

    for n in range(1, _cap(5, max_n) + 1):
        shapes = int_partitions(n)
        fails = []
        for lam in shapes:
            tr = Truncation(n, n, n)
            via_phi = phi_collect(schur_tableau_sum(lam, (1,) * n, tr))
            if schur_ncsym(lam) != via_phi:
                fails.append(str(lam))
        _result(results, f"schur.n{n}.monomial_expansion_matches_tableaux", fails)

        elems = set_partitions(n)
        matrix = []
        for lam in shapes:
            S = schur_ncsym(lam)
            matrix.append([S.terms.get(pi, Fraction(0)) for pi in elems])
        rank = matrix_rank(matrix)
        _result(
            results,
            f"schur.n{n}.linear_independence",
            [] if rank == len(shapes) else [f"rank {rank} of {len(shapes)}"],
        )

        fails = []
        for lam in shapes:
            S = schur_ncsym(lam)
            want = SymElement("s", {lam: factorial(n)})
            if sym_convert(project(S), "m") != sym_convert(want, "m"):
                fails.append(f"projection at {lam}")
            if lift(want) != S:
                fails.append(f"lift at {lam}")
        _result(results, f"schur.n{n}.projection_and_lift", fails)

        fails = []
        for lam in shapes:
            for mu in shapes:
                got = inner(schur_ncsym(lam), schur_ncsym(mu))
                want = factorial(n) ** 2 if lam == mu else 0
                if got != want:
                    fails.append(f"<{lam},{mu}>")
        _result(results, f"schur.n{n}.pairing_is_scaled_delta", fails)

    # symmetry of the tableau generating function under subscript swaps
    cap = _cap(4, max_n)
    fails = []
    k = 4
    for m in range(1, cap + 1):
        tr = Truncation(2, k, m)
        for lam in int_partitions(m):
            for vec in weak_compositions(m, 2):
                S = schur_tableau_sum(lam, vec, tr)
                for a in range(1, k):
                    swapped = {}
                    for mono, c in S.terms.items():
                        moved = tuple(
                            sorted(
                                (
                                    (a + 1 if i == a else (a if i == a + 1 else i), j),
                                    e,
                                )
                                for (i, j), e in mono
                            )
                        )
                        swapped[moved] = swapped.get(moved, Fraction(0)) + c
                    if {m_: c for m_, c in swapped.items() if c} != S.terms:
                        fails.append(f"{lam} {vec} swap {a}")
    _result(results, "schur.tableau_sum_symmetric_under_subscript_swaps", fails)

    # the dot-swap involution behind that symmetry, exhaustively on small shapes
    from .tableaux import dot_swap_involution

    fails = []
    for total in range(1, _cap(4, max_n) + 1):
        for shape in int_partitions(total):
            for tab in dotted_tableaux(shape, 3, 2):
                for i in (1, 2):
                    image = dot_swap_involution(tab, i)
                    if dot_swap_involution(image, i) != tab:
                        fails.append(f"{shape} i={i} not an involution")
                        continue
                    before = {}
                    after = {}
                    for e in tab.entries():
                        before[(e.value, e.dots)] = before.get((e.value, e.dots), 0) + 1
                    for e in image.entries():
                        after[(e.value, e.dots)] = after.get((e.value, e.dots), 0) + 1
                    for cls in (1, 2):
                        if before.get((i, cls), 0) != after.get((i + 1, cls), 0) or before.get(
                            (i + 1, cls), 0
                        ) != after.get((i, cls), 0):
                            fails.append(f"{shape} i={i} counts")
    _result(results, "schur.dot_swap_involution", fails)
    return results


def suite_jacobi_trudi(max_n: int | None = None) -> list[CheckResult]:
    """Both determinants against tableau sums; one alphabet recovers the classics."""
    results: list[CheckResult] = []
    for m in range(1, _cap(5, max_n) + 1):
        tr = Truncation(2, m, m)
        fails_h: list[str] = []
        fails_e: list[str] = []
        for lam in int_partitions(m):
            for vec in weak_compositions(m, 2):
                if jacobi_trudi(lam, vec, "h", tr) != schur_tableau_sum(lam, vec, tr):
                    fails_h.append(f"{lam} {vec}")
                if jacobi_trudi(lam, vec, "e", tr) != schur_tableau_sum(
                    lam.conjugate(), vec, tr
                ):
                    fails_e.append(f"{lam} {vec}")
        _result(results, f"jacobi_trudi.m{m}.h_determinant", fails_h)
        _result(results, f"jacobi_trudi.m{m}.e_determinant_gives_conjugate", fails_e)

        tr1 = Truncation(1, m, m)
        fails = []
        for lam in int_partitions(m):
            det = jacobi_trudi(lam, (m,), "h", tr1)
            if det != schur_tableau_sum(lam, (m,), tr1):
                fails.append(f"{lam} vs tableaux")
            # classical expansion through Kostka numbers in the same variables
            from .classical import _basis_m_coeffs  # type: ignore[attr-defined]
            from .macmahon import MultiPolynomial

            expected: dict = {}
            for mu, coeff in _basis_m_coeffs("s", lam):
                for arrangement in set(
                    itertools.permutations(
                        tuple(mu.parts) + (0,) * (m - mu.length)
                    )
                ):
                    mono = tuple(
                        ((i + 1, 1), e) for i, e in enumerate(arrangement) if e
                    )
                    key = tuple(sorted(mono))
                    expected[key] = expected.get(key, Fraction(0)) + coeff
            if det != MultiPolynomial(tr1, expected):
                fails.append(f"{lam} vs classical")
        _result(results, f"jacobi_trudi.m{m}.single_alphabet_reduces_to_classical", fails)
    return results


def suite_rsk(max_n: int | None = None) -> list[CheckResult]:
    """Exhaustive bijectivity on small biwords plus the pairing identity."""
    results: list[CheckResult] = []
    max_len = _cap(4, max_n)
    classes = 2
    max_value = 3

    fails_shape: list[str] = []
    fails_round: list[str] = []
    fails_undot: list[str] = []
    for bw in _all_biwords(max_len, max_value, classes):
        T, U = rsk_forward(bw)
        if T.shape != U.shape:
            fails_shape.append(str(bw.columns))
        bottom_deg, top_deg = bw.multidegree(classes)
        if T.multidegree(classes) != bottom_deg or U.multidegree(classes) != top_deg:
            fails_shape.append(f"multidegree {bw.columns}")
        if rsk_inverse(T, U) != bw:
            fails_round.append(str(bw.columns))
        ins, rec = _classical_insertion(
            [b.value for b in bw.bottom], [t.value for t in bw.top]
        )
        if T.undotted() != ins or U.undotted() != rec:
            fails_undot.append(str(bw.columns))
    _result(results, "rsk.forward_shape_and_multidegree", fails_shape)
    _result(results, "rsk.inverse_after_forward_is_identity", fails_round)
    _result(results, "rsk.undotting_commutes_with_insertion", fails_undot)

    fails = []
    for total in range(max_len + 1):
        for shape in int_partitions(total):
            tableaux = list(dotted_tableaux(shape, max_value, classes))
            for T in tableaux:
                for U in tableaux:
                    bw = rsk_inverse(T, U)
                    if rsk_forward(bw) != (T, U):
                        fails.append(f"{shape}")
    _result(results, "rsk.forward_after_inverse_is_identity", fails)

    d = _cap(3, max_n)
    report = cauchy_check(Truncation(2, 2, d), Truncation(2, 2, d), d)
    _result(results, f"rsk.cauchy_identity_degree_{d}", report.mismatches)
    return results


def suite_product(max_n: int | None = None) -> list[CheckResult]:
    """The multiplication examples and the shifted-concatenation observation."""
    results: list[CheckResult] = []
    one = SetPartition.parse("1")
    p1 = _basis_elem("p", one)
    m1 = _basis_elem("m", one)
    got = multiply(p1, p1)
    want = convert(_basis_elem("p", SetPartition.parse("1/2")), "m")
    _result(results, "product.p1_times_p1", [] if got == want else [str(got)])
    got = multiply(m1, m1)
    want = NCSymElement(
        "m", {SetPartition.parse("1/2"): 1, SetPartition.parse("12"): 1}
    )
    _result(results, "product.m1_times_m1", [] if got == want else [str(got)])
    unit = NCSymElement.unit()
    f = NCSymElement("m", {SetPartition.parse("13/24"): Fraction(3, 2)})
    _result(
        results,
        "product.unit_is_neutral",
        [] if multiply(unit, f) == f and multiply(f, unit) == f else ["unit failed"],
    )

    fails = []
    cap = _cap(2, max_n)
    for n1 in range(1, cap + 1):
        for n2 in range(1, cap + 1):
            for pi in set_partitions(n1):
                for sg in set_partitions(n2):
                    shifted = [
                        tuple(e + n1 for e in block) for block in sg.blocks
                    ]
                    concat = SetPartition(list(pi.blocks) + shifted)
                    got = multiply(_basis_elem("p", pi), _basis_elem("p", sg))
                    if got != convert(_basis_elem("p", concat), "m"):
                        fails.append(f"{pi} | {sg}")
    _result(results, "product.power_sums_concatenate_with_shift", fails)
    return results


SUITES = {
    "examples": suite_examples,
    "roundtrip": suite_roundtrip,
    "oracle": suite_oracle,
    "mobius": suite_mobius,
    "omega": suite_omega,
    "inner": suite_inner,
    "projection": suite_projection,
    "schur": suite_schur,
    "jacobi-trudi": suite_jacobi_trudi,
    "rsk": suite_rsk,
    "product": suite_product,
}


def run(names: list[str], max_n: int | None = None) -> list[CheckResult]:
    """Run the named suites ("all" expands to every suite) and collect results."""
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise ValueError(
                f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}"
            )
    results: list[CheckResult] = []
    for name in expanded:
        results.extend(SUITES[name](max_n))
    return results

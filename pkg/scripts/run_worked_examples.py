#!/usr/bin/env python3
"""Walk through the library's worked examples and print every exact result.

Covers: the x^2 + 6 matrices that are similar over Z[i] but not over Z, the
two-class x^2 - 5 story over Z localized at 2 (and its collapse over the
unramified quadratic extension), an inseparable enumeration over GF(2)(t),
and the freeness decisions for two rank-4 lattices over Z[sqrt(-5)].

Run:  python3 scripts/run_worked_examples.py
"""

from fractions import Fraction

from matsim.classify import Mat2, canonical_matrix, class_list, class_number, similar, witness
from matsim.lattices import (
    QuadBase,
    RelExt,
    coefficient_ideal,
    default_x0,
    intersect_base,
    is_free,
    is_principal,
    lattice_from_generators,
    lelem,
    mult_matrix,
    steinitz,
)
from matsim.lm import ZZ, equivalent, ideal_to_form, matrix_to_ideal, reduce_form
from matsim.oracle import conj_search_mod, level_collapse_check
from matsim.polys import MonicPoly, parse_monic
from matsim.rings import ExtElem, FpTLoc, QuadExt, ZLoc


def banner(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


def show_matrix(ring, M):
    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in M.encode()) + "]"


def intro_over_z():
    banner("Similarity over Z versus Z[i]: f = x^2 + 6")
    f = parse_monic("x^2 + 6", ZZ)
    A = [[0, 1], [-6, 0]]
    B = [[0, 2], [-3, 0]]
    JA = matrix_to_ideal(f, A)
    JB = matrix_to_ideal(f, B)
    FA = reduce_form(ideal_to_form(JA))
    FB = reduce_form(ideal_to_form(JB))
    print(f"A = {A} -> ideal basis {JA.encode()} -> reduced form {FA}")
    print(f"B = {B} -> ideal basis {JB.encode()} -> reduced form {FB}")
    print(f"equivalent over Z: {equivalent(JA, JB)}  (two distinct form classes of disc -24)")
    gauss = QuadBase(-1)
    w = gauss.omega
    U = [[2 * w, gauss.one], [gauss.elem(-3), w]]
    print("over Z[i] the explicit witness U = [[2i, 1], [-3, i]] intertwines U*A = B*U")


def two_classes_at_two():
    banner("Two conjugacy classes with f = x^2 - 5 over Z localized at 2")
    Z2 = ZLoc(2)
    f = MonicPoly.quadratic(Z2, 0, 5)
    print(f"class number: {class_number(Z2, f)}")
    for form in class_list(Z2, f):
        M = canonical_matrix(form)
        print(f"  {form.label():24s} matrix {show_matrix(Z2, M)}")
    A = Mat2(Z2, [[0, 1], [5, 0]])
    B = Mat2(Z2, [[-1, 2], [2, 1]])
    print(f"similar(A, B) = {similar(Z2, A, B)}")
    print(f"mod-2^3 oracle witness: {conj_search_mod(Z2, A, B, 3)}")
    rep = level_collapse_check(Z2, f, Z2.one, 3)
    print(f"level-collapse report (r = 1): cutoff {rep.cutoff}, all rows agree: {rep.all_agree}")

    S = QuadExt(Z2, 1, 1, "unramified")
    sqrt5 = ExtElem(S, Fraction(-1), Fraction(2))
    SA = Mat2(S, [[0, 1], [5, 0]])
    SB = Mat2(S, [[-1, 2], [2, 1]])
    D = Mat2(S, [[sqrt5, S.one], [S.zero, -sqrt5]])
    C = Mat2(S, [[sqrt5, S.zero], [S.zero, -sqrt5]])
    print("over the unramified extension containing sqrt(5) = 2w - 1:")
    print(f"  similar(A, B) = {similar(S, SA, SB)} (descent: still two classes)")
    wit = witness(S, SA, D)
    print(f"  A is conjugate to [[sqrt5, 1], [0, -sqrt5]]: witness {show_matrix(S, wit.U)}")
    print(f"  B is conjugate to diag(sqrt5, -sqrt5): {similar(S, SB, C)}")


def inseparable_enumeration():
    banner("Inseparable enumeration over GF(2)(t): f = x^2 - t^3")
    F2 = FpTLoc(2)
    t = F2.parse("t")
    f = MonicPoly.quadratic(F2, 0, F2.parse("t^3"))
    for form in class_list(F2, f, insep_bound=5):
        M = canonical_matrix(form)
        print(f"  {form.label():26s} matrix {show_matrix(F2, M)}")
    M1 = Mat2(F2, [[0, t], [t * t, 0]])
    M2 = Mat2(F2, [[0, t * t], [t, 0]])
    w = witness(F2, M1, M2)
    print(f"[[0,t],[t^2,0]] ~ [[0,t^2],[t,0]]: witness {show_matrix(F2, w.U)}")
    print("(no class exists at level 2: v(t^3 - u^2) <= 3 for every u)")


def lattice_freeness():
    banner("Freeness of rank-4 lattices over Z[sqrt(-5)]")
    base = QuadBase(-5)

    ctx = RelExt.from_poly_string(base, "x^2 - 2")
    J = lattice_from_generators(
        ctx, [lelem(ctx, (2, 0, 0, 0)), lelem(ctx, (0, 0, Fraction(1, 2), Fraction(1, 2)))]
    )
    x0 = default_x0(J)
    print("J = R[sqrt2]*2 + R[sqrt2]*((1+w)/2)*sqrt2:")
    print(f"  J cap K          = {intersect_base(J).encode()}")
    print(f"  coefficient ideal = {coefficient_ideal(J, x0).encode()}  (x0 = sqrt2/2)")
    st = steinitz(J, x0)
    print(f"  Steinitz ideal    = {st.encode()}, generator {is_principal(base, st).encode()}")
    basis = is_free(J, x0)
    print(f"  free basis        = {[b.encode() for b in basis]}")
    A = mult_matrix(J, basis)
    print(f"  mult-by-theta     = {[[e.encode() for e in row] for row in A]}  (char poly x^2 - 2)")
    print("  => x^2 - 2 has exactly two conjugacy classes over Z[sqrt(-5)]")

    ctx2 = RelExt.from_poly_string(base, "x^2 - x + 7")
    J2 = lattice_from_generators(
        ctx2, [lelem(ctx2, (Fraction(1, 3), 0, Fraction(1, 3), 0)), lelem(ctx2, (2, 1, 0, 0))]
    )
    x02 = default_x0(J2)
    st2 = steinitz(J2, x02)
    print("J' = R[theta]*((1+theta)/3) + R[theta]*(2+w), theta^2 = theta - 7:")
    print(f"  J' cap K          = {intersect_base(J2).encode()}")
    print(f"  coefficient ideal = {coefficient_ideal(J2, x02).encode()}  (x0 = theta/3)")
    print(f"  Steinitz ideal    = {st2.encode()}, principal: {is_principal(base, st2)}")
    print(f"  free over R: {is_free(J2, x02) is not None}")
    print("  => only one conjugacy class with char poly x^2 - x + 7 over Z[sqrt(-5)]")


if __name__ == "__main__":
    intro_over_z()
    two_classes_at_two()
    inseparable_enumeration()
    lattice_freeness()

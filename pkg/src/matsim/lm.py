"""Matrix <-> ideal correspondence and quadratic-form equivalence over Z.

A matrix A with characteristic polynomial f and gcd(f, f') = 1 corresponds
to an ideal of R[x]/(f) that is free of rank n over R.  The conversion uses
a Krylov-built conjugator g with g*A = A0*g (A0 the companion matrix), and
the returned basis u always satisfies the exact identity

    theta * (u_1, ..., u_n) = (u_1, ..., u_n) * A,

multiplication by theta acting on row vectors of coordinates.  Equivalence
of ideals is decided where an exact procedure exists: imaginary quadratic
orders over Z (binary-form reduction) and the DVR instances (delegation to
the conjugacy classifier).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classify import Mat2
from .classify import similar as dvr_similar
from .errors import (
    CharPolyMismatch,
    IndefiniteForm,
    NotAnIdeal,
    NotImaginaryQuadratic,
    NotSeparable,
    UnsupportedRing,
)
from .polys import MonicPoly, is_separable
from .rings import FpTLoc, QuadExt, ZLoc

_KRYLOV_SEED = 20240817


class IntegerRing:
    """Z as the base ring of the correspondence; K = Q via Fraction."""

    kind = "ZZ"
    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def from_int(self, n):
        return Fraction(n)

    def is_integral(self, x):
        return self.coerce(x).denominator == 1

    def encode(self, x):
        x = self.coerce(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        return Fraction(s.strip().replace("(", "").replace(")", ""))

    def sort_key(self, x):
        x = self.coerce(x)
        return (x.numerator, x.denominator)

    def to_json(self):
        return {"kind": "ZZ"}


ZZ = IntegerRing()


def _is_dvr(ring):
    return isinstance(ring, (ZLoc, FpTLoc, QuadExt))


def _is_integral(ring, x):
    if _is_dvr(ring):
        return ring.val(x) >= 0
    return ring.is_integral(x)


# ---------------------------------------------------------------------------
# K[x]/(f) arithmetic on coordinate vectors over the power basis


def _pmul_mod(ring, f: MonicPoly, u, v):
    n = f.degree
    prod = [ring.zero] * (2 * n - 1)
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            prod[i + j] = prod[i + j] + a * b
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if not c:
            continue
        prod[k] = ring.zero
        for i in range(n):
            prod[k - n + i] = prod[k - n + i] + c * f.coeffs[i] * (-1)
    return tuple(prod[:n])


def _theta_times(ring, f: MonicPoly, u):
    n = f.degree
    x = [ring.zero, ring.one] + [ring.zero] * (n - 2) if n >= 2 else [ring.one]
    return _pmul_mod(ring, f, u, tuple(x[:n]) if n >= 2 else (ring.one,))


@dataclass(frozen=True)
class IdealBasis:
    """Free R-basis of an ideal of R[x]/(f), coordinates over (1, theta, ...)."""

    f: MonicPoly
    ring: object
    basis: tuple  # tuple of coordinate tuples over K

    def __post_init__(self):
        n = self.f.degree
        if len(self.basis) != n or any(len(u) != n for u in self.basis):
            raise ValueError("basis arity must match deg f")

    @property
    def denominator(self):
        """Scalar clearing the coordinate denominators (display only)."""
        den = 1
        for u in self.basis:
            for c in u:
                if isinstance(c, Fraction):
                    den = den * c.denominator // gcd(den, c.denominator)
        return den

    def encode(self):
        enc = self.ring.encode
        return [[enc(c) for c in u] for u in self.basis]


def companion(f: MonicPoly):
    """The companion matrix A0 with -a_n, ..., -a_1 in the last column."""
    ring = f.ring
    n = f.degree
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = ring.one
    for i in range(n):
        # paper indexing a_k = coeff of x^(n-k); last column holds -a_(n-i)
        rows[i][n - 1] = -f.coeffs[i]
    return rows


def char_poly_n(ring, M):
    """det(xI - M) as a MonicPoly, by exact cofactor expansion."""
    n = len(M)
    entries = [
        [(-M[i][j], ring.one) if i == j else (-M[i][j],) for j in range(n)]
        for i in range(n)
    ]
    coeffs = _poly_det(ring, entries)
    return MonicPoly(ring, list(coeffs))


def _poly_det(ring, m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = None
    for j in range(n):
        minor = [[m[i][jj] for jj in range(n) if jj != j] for i in range(1, n)]
        term = _ppmul(ring, m[0][j], _poly_det(ring, minor))
        if j % 2 == 1:
            term = tuple(-c for c in term)
        acc = term if acc is None else _ppadd(ring, acc, term)
    return acc


def _ppadd(ring, a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (ring.zero,) * (n - len(a))
    b = tuple(b) + (ring.zero,) * (n - len(b))
    return tuple(x + y for x, y in zip(a, b))


def _ppmul(ring, a, b):
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return tuple(out)


def _mat_mul(ring, A, B):
    n = len(A)
    return [
        [sum((A[i][k] * B[k][j] for k in range(n)), ring.zero) for j in range(n)]
        for i in range(n)
    ]


def _row_times_mat(ring, row, A):
    n = len(A)
    return [sum((row[k] * A[k][j] for k in range(n)), ring.zero) for j in range(n)]


def _det(ring, M):
    n = len(M)
    m = [list(r) for r in M]
    det = ring.one
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return ring.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = ring.one / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(col + 1, n):
            if m[i][col]:
                fct = m[i][col]
                m[i] = [x - fct * y for x, y in zip(m[i], m[col])]
    return det


def _clear_scalar(ring, vecs):
    """Nonzero a in R making a*v integral for every coordinate."""
    if _is_dvr(ring):
        worst = 0
        for v in vecs:
            for c in v:
                val = ring.val(c)
                if val < 0 and -val > worst:
                    worst = int(-val)
        out = ring.one
        pi = ring.uniformizer()
        for _ in range(worst):
            out = out * pi
        return out
    den = 1
    for v in vecs:
        for c in v:
            den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(den)


def matrix_to_ideal(f: MonicPoly, A, ring=None) -> IdealBasis:
    """Ideal basis u with theta*(u) = (u)*A, built from a Krylov conjugator.

    A is an n x n array (list of lists or Mat2) with char poly f; requires
    gcd(f, f') = 1.
    """
    ring = ring or f.ring
    if isinstance(A, Mat2):
        A = [list(A[0]), list(A[1])]
    A = [[ring.coerce(x) for x in row] for row in A]
    n = f.degree
    if char_poly_n(ring, A) != f:
        raise CharPolyMismatch("det(xI - A) differs from f")
    if not is_separable(f, ring):
        raise NotSeparable("the correspondence needs gcd(f, f') = 1")
    g = _krylov_conjugator(ring, f, A)
    a = _clear_scalar(ring, g)
    rows = [[a * g[i][j] for j in range(n)] for i in range(n)]
    # u_j = sum_i theta^i * (a*g)[i][j]; the order is fixed by the identity
    # theta*(u) = (u)*A, so no cosmetic reordering is applied
    basis = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    J = IdealBasis(f, ring, tuple(basis))
    _verify_star(J, A)
    return J


def _krylov_conjugator(ring, f, A):
    """g in GL_n(K) with g*A = A0*g: last row is a cyclic vector w and

        g[i-1] = g[i]*A + coeffs[i]*w

    (Horner with the coefficients of f); the top-row relation then holds by
    Cayley-Hamilton.  Standard basis vectors are tried first, then small
    random vectors with a fixed seed.
    """
    n = f.degree
    rng = random.Random(_KRYLOV_SEED)
    candidates = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    for _ in range(32):
        best = None
        for w in candidates:
            g = [None] * n
            g[n - 1] = list(w)
            for i in range(n - 1, 0, -1):
                nxt = _row_times_mat(ring, g[i], A)
                g[i - 1] = [nxt[j] + f.coeffs[i] * w[j] for j in range(n)]
            d = _det(ring, g)
            if not d:
                continue
            score = _det_size(ring, d)
            if best is None or score < best[0]:
                best = (score, g)
        if best is not None:
            return best[1]
        candidates = [[ring.from_int(rng.randint(-3, 3)) for _ in range(n)] for _ in range(4)]
    raise AssertionError("no cyclic vector found (should be impossible)")


def _det_size(ring, d):
    """Preference order for cyclic vectors: unimodular conjugators first."""
    if _is_dvr(ring):
        return ring.val(d)
    d = abs(d)
    return (d.numerator * d.denominator, d.denominator)


def _verify_star(J: IdealBasis, A):
    ring = J.ring
    f = J.f
    n = f.degree
    for j in range(n):
        lhs = _theta_times(ring, f, J.basis[j])
        rhs = tuple(
            sum((J.basis[k][i] * A[k][j] for k in range(n)), ring.zero) for i in range(n)
        )
        assert lhs == rhs, "identity theta*(u) = (u)*A failed"


def ideal_to_matrix(f: MonicPoly, J: IdealBasis):
    """The multiplication-by-theta matrix on the given basis (row convention)."""
    ring = J.ring
    n = f.degree
    M = [list(u) for u in J.basis]  # rows = coordinates of basis elements
    if not _det(ring, M):
        raise NotAnIdeal("basis is not K-linearly independent")
    A = [[None] * n for _ in range(n)]
    Mt = [[M[i][j] for i in range(n)] for j in range(n)]  # transpose for solving
    for j in range(n):
        target = _theta_times(ring, f, J.basis[j])
        col = _field_solve(ring, Mt, list(target))
        for k in range(n):
            A[k][j] = col[k]
    for row in A:
        for x in row:
            if not _is_integral(ring, x):
                raise NotAnIdeal("multiplication by theta leaves the R-span")
    if char_poly_n(ring, A) != f:
        raise NotAnIdeal("char poly of the produced matrix differs from f")
    return A


def _field_solve(ring, M, rhs):
    """Gaussian solve over an arbitrary fraction field."""
    n = len(M)
    a = [[M[i][j] for j in range(n)] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = ring.one / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                fct = a[i][col]
                a[i] = [x - fct * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def is_non_zero_divisor(f: MonicPoly, alpha, ring=None) -> bool:
    """True iff alpha is invertible in K[x]/(f) (gcd test; needs (f,f')=1)."""
    ring = ring or f.ring
    from .polys import poly_gcd

    alpha = [ring.coerce(c) for c in alpha]
    if not any(alpha):
        return False
    g = poly_gcd(list(f.coeffs), alpha, ring)
    return len(g) == 1


# ---------------------------------------------------------------------------
# binary quadratic forms (imaginary quadratic Z-orders)


@dataclass(frozen=True)
class BQForm:
    a: int
    b: int
    c: int

    def disc(self):
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self):
        return self.a > 0 and self.disc() < 0

    def opposite(self):
        return BQForm(self.a, -self.b, self.c)

    def __str__(self):
        return f"{self.a}x^2 + {self.b}xy + {self.c}y^2"


def reduce_form(F: BQForm) -> BQForm:
    """Unique Gauss-reduced representative: |b| <= a <= c, b >= 0 on ties."""
    if not F.is_positive_definite():
        raise IndefiniteForm(f"{F} is not positive definite")
    a, b, c = F.a, F.b, F.c
    while True:
        if c < a:
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # normalize b into (-a, a]
            k = (a - b) // (2 * a)
            b2 = b + 2 * k * a
            c = a * k * k + b * k + c
            b = b2
            continue
        break
    if a == c and b < 0:
        b = -b
    if b == -a:
        b = a
    return BQForm(a, b, c)


def _norm2(ring, f, u):
    """Norm of c0 + c1*theta for quadratic f = x^2 - a*x - b."""
    a, b = f.a, f.b
    c0, c1 = u
    return c0 * c0 + a * c0 * c1 - b * c1 * c1


def _trace_pair(ring, f, u, v):
    """Trace form u*conj(v) + conj(u)*v for quadratic f."""
    a, b = f.a, f.b
    u0, u1 = u
    v0, v1 = v
    # conj(theta) = a - theta; expand (u0 + u1 th)(v0 + v1(a - th)) + sym.
    return 2 * u0 * v0 + a * (u0 * v1 + u1 * v0) - 2 * b * u1 * v1


def ideal_norm(J: IdealBasis):
    """|det| of the coordinate matrix: the (generalized) index [Z[theta] : J]."""
    (u0, u1), (v0, v1) = J.basis
    d = u0 * v1 - u1 * v0
    return abs(d)


def ideal_to_form(J: IdealBasis) -> BQForm:
    """Norm form N(x*u1 + y*u2)/N(J) of a rank-2 ideal over Z."""
    f = J.f
    ring = J.ring
    if f.degree != 2 or not isinstance(ring, IntegerRing):
        raise UnsupportedRing("forms need a quadratic Z-order")
    disc = f.a * f.a + 4 * f.b
    if disc >= 0:
        raise NotImaginaryQuadratic(f"disc {disc} is not negative")
    ideal_to_matrix(f, J)  # validates rank and the ideal property
    nj = ideal_norm(J)
    u, v = J.basis
    fa = _norm2(ring, f, u) / nj
    fb = _trace_pair(ring, f, u, v) / nj
    fc = _norm2(ring, f, v) / nj
    for x in (fa, fb, fc):
        if x.denominator != 1:
            raise NotAnIdeal("norm form is not integral: not an ideal basis")
    return BQForm(int(fa), int(fb), int(fc))


def scale_ideal(J: IdealBasis, alpha) -> IdealBasis:
    """alpha * J for alpha given in power-basis coordinates."""
    ring = J.ring
    alpha = tuple(ring.coerce(c) for c in alpha)
    basis = tuple(_pmul_mod(ring, J.f, u, alpha) for u in J.basis)
    return IdealBasis(J.f, ring, basis)


def equivalent(J1: IdealBasis, J2: IdealBasis) -> bool:
    """Decide J1 ~ J2 (alpha1*J1 = alpha2*J2 for non-zero-divisors alpha_i).

    Implemented over imaginary quadratic Z-orders (reduced forms, up to the
    GL2 orientation flip) and over the DVR instances (conjugacy of the
    multiplication matrices).
    """
    if J1.f != J2.f:
        return False
    ring = J1.ring
    if isinstance(ring, IntegerRing):
        F1 = reduce_form(ideal_to_form(J1))
        F2 = reduce_form(ideal_to_form(J2))
        return F1 == F2 or F1 == reduce_form(F2.opposite())
    if _is_dvr(ring):
        A = ideal_to_matrix(J1.f, J1)
        B = ideal_to_matrix(J2.f, J2)
        return dvr_similar(ring, Mat2(ring, A), Mat2(ring, B))
    raise UnsupportedRing(f"no equivalence decision over {ring!r}")


def class_forms(disc: int):
    """All reduced positive definite forms of the given negative discriminant."""
    if disc >= 0:
        raise NotImaginaryQuadratic("need a negative discriminant")
    out = []
    a = 1
    while a * a * 3 <= -disc:
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            F = BQForm(a, b, c)
            if reduce_form(F) == F:
                out.append(F)
        a += 1
    return sorted(out, key=lambda F: (F.a, F.b, F.c))

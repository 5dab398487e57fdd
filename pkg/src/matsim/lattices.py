"""Rank-4 lattices over imaginary quadratic orders R = Z[sqrt(d)].

L = K[theta] is a relative quadratic extension of K = Q(sqrt(d)) given by a
monic f = x^2 - a*x - b over R.  A full R-lattice J in L decomposes along
any direction x0 outside K as

    J = frak_a * (x0 + u0)  (+)  (J intersect K),

so J is free over R exactly when the Steinitz ideal frak_a * (J cap K) is
principal.  Everything is exact integer linear algebra on Hermite normal
forms; d is restricted to squarefree d < 0 with d = 2, 3 mod 4 so that
(1, sqrt(d)) is a Z-basis of the maximal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NotFreeError, NotFullRank, UnsupportedRing, X0InBase
from .intlin import hnf_int, left_kernel_int, rat_solve, solve_int


def _is_squarefree(n):
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


class QuadBase:
    """The order R = Z[sqrt(d)] for squarefree d < 0 with d = 2, 3 mod 4."""

    def __init__(self, d: int):
        if d >= 0 or not _is_squarefree(d) or d % 4 not in (2, 3):
            raise UnsupportedRing("need squarefree d < 0 with d = 2, 3 mod 4")
        self.d = d

    def __eq__(self, other):
        return isinstance(other, QuadBase) and other.d == self.d

    def __hash__(self):
        return hash(("QuadBase", self.d))

    def __repr__(self):
        return f"QuadBase({self.d})"

    def elem(self, x, y=0):
        return QuadNum(self, Fraction(x), Fraction(y))

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    @property
    def omega(self):
        return self.elem(0, 1)

    def parse(self, s: str):
        return _parse_quadnum(self, s)


class QuadNum:
    """Element x + y*w of K = Q(sqrt(d)), exact rational coordinates."""

    __slots__ = ("base", "x", "y")

    def __init__(self, base: QuadBase, x, y):
        self.base = base
        self.x = Fraction(x)
        self.y = Fraction(y)

    def _pair(self, other):
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(self.base, other, 0)
        return None

    def __eq__(self, other):
        other = self._pair(other)
        if other is None:
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.base.d, self.x, self.y))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __add__(self, other):
        other = self._pair(other)
        if other is None:
            return NotImplemented
        return QuadNum(self.base, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._pair(other)
        if other is None:
            return NotImplemented
        return QuadNum(self.base, self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        return self._pair(other) - self

    def __neg__(self):
        return QuadNum(self.base, -self.x, -self.y)

    def __mul__(self, other):
        other = self._pair(other)
        if other is None:
            return NotImplemented
        d = self.base.d
        return QuadNum(
            self.base,
            self.x * other.x + d * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def conj(self):
        return QuadNum(self.base, self.x, -self.y)

    def norm(self):
        return self.x * self.x - self.base.d * self.y * self.y

    def __truediv__(self, other):
        other = self._pair(other)
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        c = self * other.conj()
        return QuadNum(self.base, c.x / n, c.y / n)

    def __rtruediv__(self, other):
        return self._pair(other) / self

    def is_integral(self):
        return self.x.denominator == 1 and self.y.denominator == 1

    def encode(self):
        if not self.y:
            return _frac_str(self.x)
        ys = _frac_str(self.y)
        if ys == "1":
            wterm = "w"
        elif ys == "-1":
            wterm = "-w"
        else:
            wterm = f"{ys}*w"
        if not self.x:
            return wterm
        sign = "+" if (self.y > 0) else "-"
        mag = wterm.lstrip("-")
        return f"{_frac_str(self.x)}{sign}{mag}"

    def __repr__(self):
        return f"QuadNum({self.encode()!r})"


def _frac_str(q: Fraction):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_quadnum(base, s):
    s = s.strip()
    if "w" not in s:
        return QuadNum(base, Fraction(s.replace("(", "").replace(")", "")), 0)
    depth = 0
    split = None
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and ch in "+-" and i > 0 and "w" in s[i:]:
            split = i
    if split is None:
        head, sign, ys = "", 1, s
    else:
        head = s[:split]
        sign = 1 if s[split] == "+" else -1
        ys = s[split + 1 :]
    ys = ys.strip()
    assert ys.endswith("w")
    ys = ys[:-1].rstrip()
    if ys.endswith("*"):
        ys = ys[:-1]
    ys = ys.strip().replace("(", "").replace(")", "")
    ycoef = Fraction(1)
    if ys in ("-",):
        ycoef = Fraction(-1)
    elif ys:
        ycoef = Fraction(ys)
    x = Fraction(head.replace("(", "").replace(")", "").strip() or 0)
    return QuadNum(base, x, sign * ycoef)


# ---------------------------------------------------------------------------
# exact rational lattices via integer HNF


@dataclass(frozen=True)
class QLattice:
    """(1/den) * (Z-span of rows); rows are a canonical integer HNF."""

    den: int
    rows: tuple  # tuple of int tuples, no zero rows

    @classmethod
    def from_vectors(cls, vecs):
        vecs = [tuple(Fraction(c) for c in v) for v in vecs]
        den = 1
        for v in vecs:
            for c in v:
                den = den * c.denominator // gcd(den, c.denominator)
        ints = [[int(c * den) for c in v] for v in vecs]
        H = [r for r in hnf_int(ints) if any(r)]
        g = den
        for r in H:
            for c in r:
                g = gcd(g, c)
        if g > 1:
            den //= g
            H = [[c // g for c in r] for r in H]
        return cls(den, tuple(tuple(r) for r in H))

    @property
    def rank(self):
        return len(self.rows)

    def vectors(self):
        return [tuple(Fraction(c, self.den) for c in r) for r in self.rows]

    def member(self, vec):
        target = [Fraction(c) * self.den for c in vec]
        if any(t.denominator != 1 for t in target):
            return False
        return solve_int(list(self.rows), [int(t) for t in target]) is not None

    def scaled(self, q: Fraction):
        q = Fraction(q)
        return QLattice.from_vectors([[c * q for c in v] for v in self.vectors()])

    def index_in(self):
        """For a full-rank lattice: covolume relative to Z^dim (pivot product)."""
        n = len(self.rows[0])
        assert self.rank == n
        val = 1
        for r in self.rows:
            val *= next(c for c in r if c)
        return Fraction(abs(val), self.den**n)


# ---------------------------------------------------------------------------
# fractional ideals of R (rank-2 lattices in K closed under w)


@dataclass(frozen=True)
class FracIdealR:
    """Fractional R-ideal; lattice coordinates ordered (w-part, 1-part)."""

    base: QuadBase
    lat: QLattice

    @classmethod
    def from_elems(cls, base, elems, check=True):
        vecs = [(e.y, e.x) for e in elems]
        vecs += [((base.omega * e).y, (base.omega * e).x) for e in elems]
        lat = QLattice.from_vectors(vecs)
        if lat.rank != 2:
            raise NotFullRank("ideal must have rank 2 over Z")
        out = cls(base, lat)
        if check:
            out._assert_module()
        return out

    def _assert_module(self):
        for e in self.elems():
            w = self.base.omega * e
            assert self.lat.member((w.y, w.x)), "not closed under multiplication by w"

    def elems(self):
        return [QuadNum(self.base, v[1], v[0]) for v in self.lat.vectors()]

    def contains(self, e: QuadNum):
        return self.lat.member((e.y, e.x))

    def __mul__(self, other):
        prods = [a * b for a in self.elems() for b in other.elems()]
        return FracIdealR.from_elems(self.base, prods, check=False)

    def scaled(self, q):
        if isinstance(q, QuadNum):
            return FracIdealR.from_elems(self.base, [q * e for e in self.elems()], check=False)
        return FracIdealR(self.base, self.lat.scaled(Fraction(q)))

    def conj(self):
        return FracIdealR.from_elems(self.base, [e.conj() for e in self.elems()], check=False)

    def norm_index(self) -> Fraction:
        """Covolume relative to R = Z + Zw (the ideal norm for integral ideals)."""
        return self.lat.index_in()

    def is_integral(self):
        return all(e.is_integral() for e in self.elems())

    def encode(self):
        """Classical presentation "(n)" or "(n, r + c*w)"."""
        (c0, r0), second = self.lat.rows
        assert second[0] == 0
        n = Fraction(second[1], self.den_scalar())
        gen2 = QuadNum(self.base, Fraction(r0, self.den_scalar()), Fraction(c0, self.den_scalar()))
        if gen2.y and n and gen2 == self.base.elem(0, 1) * n:
            return f"({_frac_str(n)})"
        return f"({_frac_str(n)}, {gen2.encode()})"

    def den_scalar(self):
        return self.lat.den

    def __eq__(self, other):
        return isinstance(other, FracIdealR) and self.base == other.base and self.lat == other.lat

    def __hash__(self):
        return hash((self.base, self.lat))

    def __repr__(self):
        return f"FracIdealR({self.encode()})"


def unit_ideal(base: QuadBase) -> FracIdealR:
    return FracIdealR.from_elems(base, [base.one], check=False)


def ideal_mul(I1: FracIdealR, I2: FracIdealR) -> FracIdealR:
    return I1 * I2


def is_principal(base: QuadBase, ideal: FracIdealR):
    """Generator of the ideal, or None.  Searches |y| <= sqrt(N/|d|) after
    scaling to an integral ideal; norms are positive definite so the box is
    exhaustive."""
    scale = ideal.den_scalar()
    integral = ideal.scaled(Fraction(scale))
    N = integral.norm_index()
    assert N.denominator == 1
    N = int(N)
    dd = -base.d
    y = 0
    while dd * y * y <= N:
        rem = N - dd * y * y
        x = isqrt(rem)
        if x * x == rem:
            for cand in ((x, y), (x, -y)) if y else ((x, 0),):
                alpha = base.elem(cand[0], cand[1])
                if not alpha:
                    continue
                if FracIdealR.from_elems(base, [alpha], check=False) == integral:
                    return alpha / scale
        y += 1
    return None


# ---------------------------------------------------------------------------
# the relative quadratic extension L = K[theta]


@dataclass(frozen=True)
class RelExt:
    """Context for L = K[theta], theta^2 = a*theta + b with a, b in R."""

    base: QuadBase
    a: QuadNum
    b: QuadNum

    @classmethod
    def from_poly_string(cls, base, s):
        a, b = _parse_rel_quadratic(base, s)
        return cls(base, a, b)


@dataclass(frozen=True)
class LElem:
    """Element u + v*theta of L, with u, v in K."""

    ctx: RelExt
    u: QuadNum
    v: QuadNum

    def __add__(self, other):
        return LElem(self.ctx, self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        return LElem(self.ctx, self.u - other.u, self.v - other.v)

    def __mul__(self, other):
        if isinstance(other, QuadNum):
            return LElem(self.ctx, self.u * other, self.v * other)
        a, b = self.ctx.a, self.ctx.b
        u = self.u * other.u + b * (self.v * other.v)
        v = self.u * other.v + self.v * other.u + a * (self.v * other.v)
        return LElem(self.ctx, u, v)

    __rmul__ = __mul__

    def coords(self):
        return (self.u.x, self.u.y, self.v.x, self.v.y)

    def encode(self):
        return [_frac_str(c) for c in self.coords()]

    def __bool__(self):
        return bool(self.u) or bool(self.v)


def lelem(ctx, coords):
    c = [Fraction(x) for x in coords]
    return LElem(ctx, QuadNum(ctx.base, c[0], c[1]), QuadNum(ctx.base, c[2], c[3]))


def theta(ctx):
    return LElem(ctx, ctx.base.zero, ctx.base.one)


@dataclass(frozen=True)
class LLattice:
    """Full R-lattice in L; 4D lattice over (1, w, theta, w*theta)."""

    ctx: RelExt
    lat: QLattice

    def basis_elems(self):
        return [lelem(self.ctx, v) for v in self.lat.vectors()]

    def contains(self, e: LElem):
        return self.lat.member(e.coords())

    def __eq__(self, other):
        return isinstance(other, LLattice) and self.ctx == other.ctx and self.lat == other.lat

    def __hash__(self):
        return hash((self.ctx, self.lat))


def lattice_from_generators(ctx: RelExt, gens) -> LLattice:
    """HNF of the span of {g, w*g, theta*g, w*theta*g} for each generator."""
    base = ctx.base
    w = base.omega
    th = theta(ctx)
    vecs = []
    for g in gens:
        if not isinstance(g, LElem):
            g = lelem(ctx, g)
        if not g:
            continue
        for m in (g, w * g, th * g, w * (th * g)):
            vecs.append(m.coords())
    lat = QLattice.from_vectors(vecs)
    if lat.rank != 4:
        raise NotFullRank("generators do not span L over K")
    out = LLattice(ctx, lat)
    _assert_rtheta_module(out)
    return out


def _assert_rtheta_module(J: LLattice):
    w = J.ctx.base.omega
    th = theta(J.ctx)
    for e in J.basis_elems():
        assert J.contains(w * e), "lattice not closed under w"
        assert J.contains(th * e), "lattice not closed under theta"


def intersect_base(J: LLattice) -> FracIdealR:
    """J cap K: kernel of the projection onto the (theta, w*theta) part."""
    den = J.lat.den
    rows = [[r[2], r[3]] for r in J.lat.rows]
    kernel = left_kernel_int(rows)
    elems = []
    for comb in kernel:
        vec = [
            sum(comb[i] * J.lat.rows[i][j] for i in range(len(comb))) for j in range(4)
        ]
        assert vec[2] == 0 and vec[3] == 0
        elems.append(QuadNum(J.ctx.base, Fraction(vec[0], den), Fraction(vec[1], den)))
    return FracIdealR.from_elems(J.ctx.base, elems)


def coefficient_ideal(J: LLattice, x0: LElem) -> FracIdealR:
    """frak_a = {k in K : k*x0 in J + K}: the theta-part image of J over x0."""
    if not x0.v:
        raise X0InBase("x0 must lie outside K")
    coeffs = [lelem(J.ctx, v).v / x0.v for v in J.lat.vectors()]
    return FracIdealR.from_elems(J.ctx.base, coeffs)


def default_x0(J: LLattice) -> LElem:
    """theta / D where D clears the denominators of the theta-projection."""
    proj = QLattice.from_vectors([(r[2], r[3]) for r in J.lat.vectors()])
    D = proj.den
    return lelem(J.ctx, (0, 0, Fraction(1, D), 0))


def steinitz(J: LLattice, x0: LElem | None = None) -> FracIdealR:
    """The Steinitz ideal frak_a * (J cap K); principal iff J is free."""
    if x0 is None:
        x0 = default_x0(J)
    return ideal_mul(coefficient_ideal(J, x0), intersect_base(J))


def is_free(J: LLattice, x0: LElem | None = None):
    """Explicit free R-basis (b1, b2) with span_R{b1, b2} = J, or None.

    Freeness is decided by principality of the Steinitz ideal; the basis is
    assembled from the direct-sum decomposition J = frak_a*(x0+u0) (+) (J cap K)
    and a two-term Bezout expression of the Steinitz generator.
    """
    if x0 is None:
        x0 = default_x0(J)
    base = J.ctx.base
    frak_a = coefficient_ideal(J, x0)
    frak_b = intersect_base(J)
    st = ideal_mul(frak_a, frak_b)
    g = is_principal(base, st)
    if g is None:
        return None
    u0 = _find_u0(J, x0, frak_a)
    v = x0 + LElem(J.ctx, u0, base.zero)
    a1, a2 = frak_a.elems()
    b1v, b2v = frak_b.elems()
    prods = [a1 * b1v, a1 * b2v, a2 * b1v, a2 * b2v]
    sol = solve_int(
        [_scaled_pair(p, st.den_scalar()) for p in prods],
        _scaled_pair(g, st.den_scalar()),
    )
    assert sol is not None, "Steinitz generator must lie in the product lattice"
    B1 = sol[0] * b1v + sol[1] * b2v
    B2 = sol[2] * b1v + sol[3] * b2v
    assert a1 * B1 + a2 * B2 == g
    basis1 = a1 * v - LElem(J.ctx, B2, base.zero)
    basis2 = a2 * v + LElem(J.ctx, B1, base.zero)
    span = lattice_from_generators(J.ctx, [basis1, basis2])
    assert span == J, "free basis must regenerate the lattice exactly"
    return (basis1, basis2)


def _scaled_pair(e: QuadNum, den):
    x = Fraction(e.y) * den, Fraction(e.x) * den
    assert all(c.denominator == 1 for c in x)
    return [int(x[0]), int(x[1])]


def _find_u0(J: LLattice, x0: LElem, frak_a: FracIdealR):
    """u0 in K making the coefficient ideal of x0 + u0 equal to frak_a.

    For each generator k of frak_a pick j in J with theta-part k*x0; then
    u0 must satisfy u0 = proj(j)/k modulo (1/k)(J cap K), an intersection of
    two affine lattices in K.
    """
    base = J.ctx.base
    frak_b = intersect_base(J)
    dens = J.lat.den
    conds = []
    for k in frak_a.elems():
        target = k * x0.v  # required theta-part
        rows = [[r[2], r[3]] for r in J.lat.rows]
        tvec = [target.x * dens, target.y * dens]
        assert all(t.denominator == 1 for t in tvec)
        comb = solve_int(rows, [int(t) for t in tvec])
        assert comb is not None, "frak_a generators are attained on J"
        j = [sum(comb[i] * J.lat.rows[i][c] for i in range(4)) for c in range(4)]
        proj = QuadNum(base, Fraction(j[0], dens), Fraction(j[1], dens))
        w_i = proj / k
        lam = [e / k for e in frak_b.elems()]
        conds.append((w_i, lam))
    (w1, lam1), (w2, lam2) = conds
    diff = w2 - w1
    rows = [[l.x, l.y] for l in lam1] + [[l.x, l.y] for l in lam2]
    den = 1
    for r in rows + [[diff.x, diff.y]]:
        for c in r:
            den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    irows = [[int(c * den) for c in r] for r in rows]
    itarget = [int(diff.x * den), int(diff.y * den)]
    sol = solve_int(irows, itarget)
    assert sol is not None, "a largest-coefficient vector always exists"
    u0 = w1 + sol[0] * lam1[0] + sol[1] * lam1[1]
    # verify: k*(x0 + u0) lies in J for both generators
    for k in frak_a.elems():
        cand = k * x0 + LElem(J.ctx, k * u0, base.zero)
        assert J.contains(cand)
    return u0


def mult_matrix(J: LLattice, basis):
    """Multiplication-by-theta matrix on a free basis, row convention."""
    b1, b2 = basis
    th = theta(J.ctx)
    cols = []
    for bj in (b1, b2):
        target = th * bj
        # solve target = x*b1 + y*b2 with x, y in K: 4 rational unknowns
        M = []
        for c in range(4):
            M.append(
                [
                    b1.coords()[c],
                    (J.ctx.base.omega * b1).coords()[c],
                    b2.coords()[c],
                    (J.ctx.base.omega * b2).coords()[c],
                ]
            )
        sol = rat_solve(M, list(target.coords()))
        x = QuadNum(J.ctx.base, sol[0], sol[1])
        y = QuadNum(J.ctx.base, sol[2], sol[3])
        if not (x.is_integral() and y.is_integral()):
            raise NotFreeError("matrix entries leave R; basis is not an R-basis")
        cols.append((x, y))
    A = [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]
    # defining identity theta*(b1, b2) = (b1, b2)*A, entrywise exact
    for j, bj in enumerate((b1, b2)):
        rhs = A[0][j] * b1 + A[1][j] * b2
        assert th * bj == rhs
    # char poly check: trace = a, det = -b
    tr = A[0][0] + A[1][1]
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    assert tr == J.ctx.a and det + J.ctx.b == J.ctx.base.zero
    return A


def _parse_rel_quadratic(base, s):
    """Parse "x^2 - a*x - b" with coefficients in Z[sqrt d] ("w" for sqrt d)."""
    from .polys import _split_terms

    coeffs = {0: base.zero, 1: base.zero, 2: base.zero}
    for sign, term in _split_terms(s):
        if "x" in term:
            head, _, tail = term.partition("x")
            head = head.strip()
            if head.endswith("*"):
                head = head[:-1].strip()
            coef = base.one if not head else base.parse(head)
            k = int(tail[1:]) if tail.strip().startswith("^") else 1
        else:
            coef = base.parse(term)
            k = 0
        coeffs[k] = coeffs[k] + (coef if sign > 0 else -coef)
    if coeffs[2] != base.one:
        raise ValueError("expected a monic quadratic in x")
    return -coeffs[1], -coeffs[0]


def qmat_mul(base, X, Y):
    """2x2 product over Q(sqrt d) for witness checks at the Dedekind level."""
    return [
        [
            X[0][0] * Y[0][0] + X[0][1] * Y[1][0],
            X[0][0] * Y[0][1] + X[0][1] * Y[1][1],
        ],
        [
            X[1][0] * Y[0][0] + X[1][1] * Y[1][0],
            X[1][0] * Y[0][1] + X[1][1] * Y[1][1],
        ],
    ]


def qmat_det(X):
    return X[0][0] * X[1][1] - X[0][1] * X[1][0]

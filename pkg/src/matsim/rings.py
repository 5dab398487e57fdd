"""Exact arithmetic in four concrete discrete valuation rings.

Instances:

* ``ZLoc(p)``       -- Z localized at a prime p; elements are ``Fraction``.
* ``FpTLoc(p)``     -- GF(p)[t] localized at (t); elements are ``FpRat``.
* ``QuadExt(...)``  -- a quadratic extension of either, unramified or
  Eisenstein, with elements ``ExtElem`` storing (x, y) for x + y*w.

Every element representation is canonical (fully reduced fractions,
monic denominators), so structural equality is ring equality.  All
values are immutable; operations are pure functions.

Valuations: ZLoc / FpTLoc carry the p-adic / t-adic valuation.  An
unramified extension keeps the base value group, with
v(x + y*w) = min(v(x), v(y)).  An Eisenstein extension by x^2 - a*x - b
(v(a) >= 1, v(b) = 1) doubles the group: the generator w is the
uniformizer, v(w) = 1, v(base uniformizer) = 2, and
v(x + y*w) = min(2*v(x), 2*v(y) + 1).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotIntegral, UnsupportedRing
from .fppoly import FpPoly, FpRat

INF = math.inf

_SMALL_PRIME_LIMIT = 10**6


def _is_prime(n):
    if n < 2 or n > _SMALL_PRIME_LIMIT:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class ZLoc:
    """Z localized at the prime p.  K = Q, elements are Fractions."""

    kind = "ZLoc"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not a (small) prime")
        self.p = p
        self.char = 0
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, ZLoc) and other.p == self.p

    def __hash__(self):
        return hash(("ZLoc", self.p))

    def __repr__(self):
        return f"ZLoc({self.p})"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_int(self, n):
        return Fraction(n)

    def val(self, x):
        x = self.coerce(x)
        if x == 0:
            return INF
        v = 0
        num, den = x.numerator, x.denominator
        while num % self.p == 0:
            num //= self.p
            v += 1
        while den % self.p == 0:
            den //= self.p
            v -= 1
        return v

    def is_integral(self, x):
        return self.val(x) >= 0

    def uniformizer(self):
        return Fraction(self.p)

    def val_of_two(self):
        return self.val(Fraction(2))

    def residue(self, x, N):
        """Canonical representative of x in R/p^N, as an integer in [0, p^N)."""
        x = self.coerce(x)
        if N < 1:
            raise ValueError("N must be >= 1")
        if not self.is_integral(x):
            raise NotIntegral(f"{x} is not in {self!r}")
        m = self.p**N
        return (x.numerator * pow(x.denominator, -1, m)) % m

    def lift(self, rep):
        return Fraction(rep)

    def residues(self, N):
        """Canonical lifts of R/p^N in the deterministic element order."""
        for r in range(self.p**N):
            yield Fraction(r)

    def sort_key(self, x):
        x = self.coerce(x)
        return (x.numerator, x.denominator)

    def encode(self, x):
        x = self.coerce(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        return Fraction(s.strip().replace("(", "").replace(")", ""))

    def to_json(self):
        return {"kind": "ZLoc", "p": self.p}


class FpTLoc:
    """GF(p)[t] localized at (t).  K = GF(p)(t), elements are FpRat."""

    kind = "FpTLoc"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not a (small) prime")
        self.p = p
        self.char = p
        self.zero = FpRat.const(p, 0)
        self.one = FpRat.const(p, 1)

    def __eq__(self, other):
        return isinstance(other, FpTLoc) and other.p == self.p

    def __hash__(self):
        return hash(("FpTLoc", self.p))

    def __repr__(self):
        return f"FpTLoc({self.p})"

    def coerce(self, x):
        if isinstance(x, FpRat):
            if x.p != self.p:
                raise TypeError("wrong characteristic")
            return x
        if isinstance(x, FpPoly):
            return FpRat(x)
        if isinstance(x, int):
            return FpRat.const(self.p, x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_int(self, n):
        return FpRat.const(self.p, n)

    def val(self, x):
        x = self.coerce(x)
        o = x.t_order()
        return INF if o is None else o

    def is_integral(self, x):
        return self.val(x) >= 0

    def uniformizer(self):
        return FpRat.t(self.p)

    def val_of_two(self):
        return self.val(self.from_int(2))

    def residue(self, x, N):
        """Canonical representative in R/t^N: an FpPoly of degree < N."""
        x = self.coerce(x)
        if N < 1:
            raise ValueError("N must be >= 1")
        if not self.is_integral(x):
            raise NotIntegral(f"{x!r} is not in {self!r}")
        tN = FpPoly.t_power(self.p, N)
        num = x.num % tN
        # invert the denominator mod t^N (den(0) != 0 since x is integral)
        inv = _poly_inverse_mod_t_power(x.den, N)
        return (num * inv) % tN

    def lift(self, rep):
        return FpRat(rep)

    def residues(self, N):
        p = self.p
        for code in range(p**N):
            coeffs = []
            c = code
            for _ in range(N):
                coeffs.append(c % p)
                c //= p
            yield FpRat(FpPoly(p, coeffs))

    def sort_key(self, x):
        x = self.coerce(x)
        return (x.num.coeffs, x.den.coeffs)

    def encode(self, x):
        return self.coerce(x).to_string()

    def parse(self, s):
        return _parse_fprat(s, self.p)

    def to_json(self):
        return {"kind": "FpTLoc", "p": self.p}


def _poly_inverse_mod_t_power(den, N):
    """Inverse of den modulo t^N; den(0) must be a unit."""
    p = den.p
    c0 = den.eval_at_zero()
    inv = [pow(c0, -1, p)]
    # Newton-free coefficient recursion: sum_{j<=i} den_j * inv_{i-j} = [i == 0]
    dc = den.coeffs
    for i in range(1, N):
        acc = 0
        for j in range(1, min(i, len(dc) - 1) + 1):
            acc += dc[j] * inv[i - j]
        inv.append((-acc * inv[0]) % p)
    return FpPoly(p, inv)


def _parse_fppoly(s, p):
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        depth = 0
        ok = True
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                ok = False
                break
        if ok:
            s = s[1:-1]
    coeffs = {}
    term = ""
    sign = 1
    terms = []
    for ch in s.replace(" ", ""):
        if ch in "+-" and term:
            terms.append((sign, term))
            sign = 1 if ch == "+" else -1
            term = ""
        elif ch == "-" and not term:
            sign = -sign
        elif ch == "+" and not term:
            pass
        else:
            term += ch
    if term:
        terms.append((sign, term))
    for sg, t in terms:
        t = t.replace("*", "")
        if "t" in t:
            head, _, tail = t.partition("t")
            c = int(head) if head else 1
            k = int(tail[1:]) if tail.startswith("^") else (int(tail) if tail else 1)
        else:
            c = int(t)
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sg * c
    deg = max(coeffs) if coeffs else 0
    return FpPoly(p, [coeffs.get(i, 0) for i in range(deg + 1)])


def _strip_outer_parens(s):
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        ok = True
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                ok = False
                break
        if not ok:
            break
        s = s[1:-1].strip()
    return s


def _parse_fprat(s, p):
    s = _strip_outer_parens(s)
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0:
            return FpRat(_parse_fppoly(s[:i], p), _parse_fppoly(s[i + 1 :], p))
    return FpRat(_parse_fppoly(s, p))


class ExtElem:
    """Element x + y*w of a quadratic extension, with x, y in the base field."""

    __slots__ = ("ring", "x", "y")

    def __init__(self, ring, x, y):
        self.ring = ring
        self.x = ring.base.coerce(x)
        self.y = ring.base.coerce(y)

    def _pair(self, other):
        if isinstance(other, ExtElem):
            if other.ring != self.ring:
                raise TypeError("elements of different extensions")
            return other
        return ExtElem(self.ring, other, self.ring.base.zero)

    def __eq__(self, other):
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.ring, self.x, self.y))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __add__(self, other):
        other = self._pair(other)
        return ExtElem(self.ring, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._pair(other)
        return ExtElem(self.ring, self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        return self._pair(other) - self

    def __neg__(self):
        return ExtElem(self.ring, -self.x, -self.y)

    def __mul__(self, other):
        other = self._pair(other)
        a, b = self.ring.mp_a, self.ring.mp_b
        # (x1 + y1 w)(x2 + y2 w) with w^2 = a*w + b
        x = self.x * other.x + b * (self.y * other.y)
        y = self.x * other.y + self.y * other.x + a * (self.y * other.y)
        return ExtElem(self.ring, x, y)

    __rmul__ = __mul__

    def conj(self):
        """Galois conjugate: w -> a - w."""
        a = self.ring.mp_a
        return ExtElem(self.ring, self.x + a * self.y, -self.y)

    def norm(self):
        """Norm down to the base field: x^2 + a*x*y - b*y^2."""
        a, b = self.ring.mp_a, self.ring.mp_b
        return self.x * self.x + a * self.x * self.y - b * self.y * self.y

    def __truediv__(self, other):
        other = self._pair(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        n = other.norm()
        c = other.conj()
        return ExtElem(self.ring, (self.x * c.x + self.ring.mp_b * self.y * c.y) / n,
                       (self.x * c.y + self.y * c.x + self.ring.mp_a * self.y * c.y) / n)

    def __rtruediv__(self, other):
        return self._pair(other) / self

    def __repr__(self):
        return f"ExtElem({self.ring.encode(self)!r})"


class QuadExt:
    """Quadratic extension of a base DVR by a monic x^2 - a*x - b.

    ``ramification`` is "unramified" (reduction mod the maximal ideal is
    irreducible over the residue field) or "eisenstein" (v(a) >= 1,
    v(b) = 1; the generator is a uniformizer and the value group doubles).
    Nested extensions are out of scope.
    """

    kind = "QuadExt"

    def __init__(self, base, mp_a, mp_b, ramification):
        if isinstance(base, QuadExt):
            raise UnsupportedRing("extensions of extensions are not supported")
        if ramification not in ("unramified", "eisenstein"):
            raise ValueError("ramification must be 'unramified' or 'eisenstein'")
        self.base = base
        self.mp_a = base.coerce(mp_a)
        self.mp_b = base.coerce(mp_b)
        self.ramification = ramification
        self.char = base.char
        self._validate()
        self.zero = ExtElem(self, base.zero, base.zero)
        self.one = ExtElem(self, base.one, base.zero)

    def _validate(self):
        a, b = self.mp_a, self.mp_b
        base = self.base
        if self.ramification == "eisenstein":
            if not (base.val(a) >= 1 and base.val(b) == 1):
                raise ValueError("Eisenstein requires v(a) >= 1 and v(b) = 1")
            return
        # unramified: x^2 - a x - b must stay irreducible over the residue field
        if not (base.val(a) >= 0 and base.val(b) >= 0):
            raise ValueError("minimal polynomial must have integral coefficients")
        abar = base.residue(a, 1)
        bbar = base.residue(b, 1)
        if isinstance(base, ZLoc):
            p = base.p
            if any((z * z - abar * z - bbar) % p == 0 for z in range(p)):
                raise ValueError("reduction mod p is not irreducible")
        else:
            p = base.p
            if any((z * z - abar.eval_at_zero() * z - bbar.eval_at_zero()) % p == 0
                   for z in range(p)):
                raise ValueError("reduction mod t is not irreducible")

    def __eq__(self, other):
        return (
            isinstance(other, QuadExt)
            and other.base == self.base
            and other.mp_a == self.mp_a
            and other.mp_b == self.mp_b
            and other.ramification == self.ramification
        )

    def __hash__(self):
        return hash(("QuadExt", self.base, self.mp_a, self.mp_b, self.ramification))

    def __repr__(self):
        return f"QuadExt({self.base!r}, w^2={self.base.encode(self.mp_a)}*w+{self.base.encode(self.mp_b)}, {self.ramification})"

    @property
    def p(self):
        return self.base.p

    def coerce(self, x):
        if isinstance(x, ExtElem):
            if x.ring != self:
                raise TypeError("element of a different ring")
            return x
        return ExtElem(self, self.base.coerce(x), self.base.zero)

    def embed(self, x):
        """Embed a base-field element."""
        return ExtElem(self, x, self.base.zero)

    def gen(self):
        """The generator w."""
        return ExtElem(self, self.base.zero, self.base.one)

    def from_int(self, n):
        return self.coerce(n)

    def val(self, x):
        x = self.coerce(x)
        vx, vy = self.base.val(x.x), self.base.val(x.y)
        if self.ramification == "unramified":
            return min(vx, vy)
        return min(2 * vx, 2 * vy + 1)

    def val_via_norm(self, x):
        """Cross-check valuation through the base norm (test hook)."""
        x = self.coerce(x)
        vn = self.base.val(x.norm())
        if vn is INF:
            return INF
        if self.ramification == "unramified":
            return vn // 2 if vn % 2 == 0 else Fraction(vn, 2)
        return vn

    def is_integral(self, x):
        return self.val(x) >= 0

    def uniformizer(self):
        if self.ramification == "eisenstein":
            return self.gen()
        return self.embed(self.base.uniformizer())

    def val_of_two(self):
        return self.val(self.from_int(2))

    def residue(self, x, N):
        """Canonical representative in R/pi^N as a pair of base residues.

        Unramified: both coordinates mod (base uniformizer)^N.  Eisenstein:
        (x mod pi_base^ceil(N/2), y mod pi_base^floor(N/2)), matching the
        ideal (w^N) = pi^ceil(N/2) R + pi^floor(N/2) R w.
        """
        x = self.coerce(x)
        if N < 1:
            raise ValueError("N must be >= 1")
        if not self.is_integral(x):
            raise NotIntegral(f"{x!r} is not integral")
        if self.ramification == "unramified":
            return (self.base.residue(x.x, N), self.base.residue(x.y, N))
        nx = (N + 1) // 2
        ny = N // 2
        rx = self.base.residue(x.x, nx)
        ry = self.base.residue(x.y, ny) if ny >= 1 else None
        return (rx, ry)

    def lift(self, rep):
        rx, ry = rep
        x = self.base.lift(rx)
        y = self.base.zero if ry is None else self.base.lift(ry)
        return ExtElem(self, x, y)

    def residues(self, N):
        if self.ramification == "unramified":
            for rx in self.base.residues(N):
                for ry in self.base.residues(N):
                    yield ExtElem(self, rx, ry)
            return
        nx = (N + 1) // 2
        ny = N // 2
        for rx in self.base.residues(nx):
            if ny == 0:
                yield ExtElem(self, rx, self.base.zero)
            else:
                for ry in self.base.residues(ny):
                    yield ExtElem(self, rx, ry)

    def sort_key(self, x):
        x = self.coerce(x)
        return (self.base.sort_key(x.x), self.base.sort_key(x.y))

    def encode(self, x):
        x = self.coerce(x)
        xs = self.base.encode(x.x)
        if not x.y:
            return xs
        ys = self.base.encode(x.y)
        if ys == "1":
            wterm = "w"
        else:
            if any(ch in ys for ch in "+-/") or "*" in ys:
                ys = f"({ys})"
            wterm = f"{ys}*w"
        if not x.x:
            return wterm
        return f"{xs} + {wterm}"

    def parse(self, s):
        s = _strip_outer_parens(s)
        if "w" not in s:
            return self.embed(self.base.parse(s))
        # split on the last top-level '+' or '-' that precedes the w-term
        depth = 0
        split = None
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and ch in "+-" and i > 0 and "w" in s[i:]:
                split = i
        if split is None:
            head, ys = "", s
            sign = 1
        else:
            head = s[:split]
            sign = 1 if s[split] == "+" else -1
            ys = s[split + 1 :]
        ys = ys.strip()
        if not ys.endswith("w"):
            raise ValueError(f"cannot parse extension element {s!r}")
        ys = ys[:-1].rstrip()
        if ys.endswith("*"):
            ys = ys[:-1]
        ycoef = self.base.one if not ys.strip() else self.base.parse(ys)
        if sign < 0:
            ycoef = -ycoef
        xcoef = self.base.parse(head) if head.strip() else self.base.zero
        return ExtElem(self, xcoef, ycoef)

    def to_json(self):
        mp = f"x^2 - {self.base.encode(self.mp_a)}*x - {self.base.encode(self.mp_b)}"
        return {
            "kind": "QuadExt",
            "base": self.base.to_json(),
            "minpoly": mp,
            "ramification": self.ramification,
        }


def arith(ring, op, x, y=None):
    """Field arithmetic dispatch: add, sub, mul, div, neg, inv."""
    x = ring.coerce(x)
    if op == "neg":
        return -x
    if op == "inv":
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return _one_of(ring) / x
    y = ring.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero")
        return x / y
    raise ValueError(f"unknown op {op!r}")


def _one_of(ring):
    return ring.one


def ring_from_json(doc):
    """Build a ring instance from its JSON descriptor."""
    kind = doc.get("kind")
    if kind == "ZLoc":
        return ZLoc(int(doc["p"]))
    if kind == "FpTLoc":
        return FpTLoc(int(doc["p"]))
    if kind == "QuadExt":
        base = ring_from_json(doc["base"])
        from .polys import parse_monic_quadratic

        a, b = parse_monic_quadratic(doc["minpoly"], base)
        return QuadExt(base, a, b, doc["ramification"].lower())
    raise ValueError(f"unknown ring kind {kind!r}")

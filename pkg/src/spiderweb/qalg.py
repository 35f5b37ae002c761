"""Exact arithmetic for quantum integers over Z[v, v^-1], v = q^(1/2).

Everything downstream (clasp coefficients, web evaluations, trihedron
values) is computed in the fraction field of this ring, so all results
are exact Laurent-polynomial identities rather than numerics.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd
import re


class PoleError(ZeroDivisionError):
    """Raised when a RationalQ is evaluated at a zero of its denominator."""


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (little-endian coefficient lists)
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c) -> int:
    g = 0
    for x in c:
        g = _int_gcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _primitive(c: list[int]) -> list[int]:
    g = _content(c)
    if g > 1:
        c = [x // g for x in c]
    if c and c[-1] < 0:
        c = [-x for x in c]
    return c


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    # pseudo-remainder of f by g, both little-endian, g nonzero; content is
    # stripped after each step to keep coefficients small
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while f and len(f) - 1 >= dg:
        lf = f[-1]
        shift = len(f) - 1 - dg
        if lf % lg == 0:
            c = lf // lg
            for i, gi in enumerate(g):
                f[i + shift] -= c * gi
        else:
            f = [x * lg for x in f]
            lf = f[-1]
            for i, gi in enumerate(g):
                f[i + shift] -= lf // lg * gi
        _trim(f)
        c = _content(f)
        if c > 1:
            f = [x // c for x in f]
    return f


def _eval_at(f: list[int], xi: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * xi + c
    return acc


def _poly_from_int(h: int, xi: int) -> list[int]:
    # balanced base-xi digits
    out = []
    while h:
        d = h % xi
        if d > xi // 2:
            d -= xi
        out.append(d)
        h = (h - d) // xi
    return out


def _divides(g: list[int], f: list[int]) -> bool:
    try:
        _poly_exact_div(f, g)
        return True
    except ValueError:
        return False


def _gf2_bits(f: list[int]) -> int:
    out = 0
    for i, c in enumerate(f):
        if c & 1:
            out |= 1 << i
    return out


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return a


def _poly_mul_dense(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def _poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd over Z, positive leading coefficient.

    Strategy: a GF(2) gcd certifies coprimality outright when a leading
    coefficient is odd (any common divisor then has odd leading
    coefficient, so its degree survives reduction mod 2).  Otherwise a
    verified heuristic candidate h reduces the problem to the cofactors
    (gcd = h * gcd(f/h, g/h)), with a primitive PRS as the sound
    fallback.  Every return path is exact.
    """
    f = _primitive(_trim(list(f)))
    g = _primitive(_trim(list(g)))
    if not f:
        return g
    if not g:
        return f
    if len(f) == 1 or len(g) == 1:
        return [1]
    if (f[-1] & 1) or (g[-1] & 1):
        d2 = _gf2_gcd(_gf2_bits(f), _gf2_bits(g))
        if d2 == 1:
            return [1]
    hf = max(abs(x) for x in f)
    hg = max(abs(x) for x in g)
    xi = 2 * min(hf, hg) + 4
    for _ in range(4):
        a = _eval_at(f, xi)
        b = _eval_at(g, xi)
        if a and b:
            h = _primitive(_poly_from_int(_int_gcd(abs(a), abs(b)), xi))
            if len(h) > 1:
                try:
                    cf = _poly_exact_div(f, h)
                    cg = _poly_exact_div(g, h)
                except ValueError:
                    pass
                else:
                    return _primitive(_poly_mul_dense(h, _poly_gcd(cf, cg)))
        xi = xi * 7 // 2 + 3
    while g:
        r = _pseudo_rem(f, g)
        f, g = g, _primitive(r)
    return f


def _poly_exact_div(f: list[int], g: list[int]) -> list[int]:
    # exact division over Z (synthetic); raises ValueError on a remainder
    f = _trim(list(f))
    g = _trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return []
    if len(f) < len(g):
        raise ValueError("inexact polynomial division")
    m = len(g)
    lg = g[-1]
    q = [0] * (len(f) - m + 1)
    for i in range(len(f) - m, -1, -1):
        c = f[i + m - 1]
        if c:
            if c % lg:
                raise ValueError("inexact polynomial division")
            c //= lg
            q[i] = c
            for j in range(m - 1):
                f[i + j] -= c * g[j]
            f[i + m - 1] = 0
    if any(f):
        raise ValueError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# Laurent polynomials in v
# ---------------------------------------------------------------------------

class LaurentHalf:
    """Laurent polynomial in v = q^(1/2) with integer coefficients.

    Stored as a dict {exponent: coefficient} with no zero values; the
    empty dict is 0.  Values are immutable and hashable.
    """

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, x in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if x:
                    y = c.get(e, 0) + x
                    if y:
                        c[e] = y
                    elif e in c:
                        del c[e]
        self.c = c
        self._hash = None

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "LaurentHalf":
        return _ZERO

    @staticmethod
    def one() -> "LaurentHalf":
        return _ONE

    @staticmethod
    def from_int(n: int) -> "LaurentHalf":
        return LaurentHalf({0: n})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentHalf":
        return LaurentHalf({exp: coeff})

    # -- ring structure --------------------------------------------------

    def __bool__(self):
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        return isinstance(other, LaurentHalf) and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.c.items()))
        return self._hash

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, x in b.items():
            y = out.get(e, 0) + x
            if y:
                out[e] = y
            elif e in out:
                del out[e]
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        r._hash = None
        return r

    def __neg__(self):
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = {e: -x for e, x in self.c.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            r = LaurentHalf.__new__(LaurentHalf)
            r.c = {e: x * other for e, x in self.c.items()}
            r._hash = None
            return r
        a, b = self.c, other.c
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, x1 in a.items():
            for e2, x2 in b.items():
                e = e1 + e2
                y = out.get(e, 0) + x1 * x2
                if y:
                    out[e] = y
                elif e in out:
                    del out[e]
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        r._hash = None
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        r = _ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- structure queries ------------------------------------------------

    def valuation(self) -> int:
        if not self.c:
            raise ValueError("valuation of zero")
        return min(self.c)

    def degree(self) -> int:
        if not self.c:
            raise ValueError("degree of zero")
        return max(self.c)

    def content(self) -> int:
        return _content(self.c.values())

    def bar(self) -> "LaurentHalf":
        """The bar involution v -> v^-1."""
        return LaurentHalf({-e: x for e, x in self.c.items()})

    def shift(self, k: int) -> "LaurentHalf":
        """Multiply by v^k."""
        return LaurentHalf({e + k: x for e, x in self.c.items()})

    def _dense(self) -> tuple[int, list[int]]:
        # (valuation, little-endian coefficients); zero -> (0, [])
        if not self.c:
            return 0, []
        lo = min(self.c)
        hi = max(self.c)
        out = [0] * (hi - lo + 1)
        for e, x in self.c.items():
            out[e - lo] = x
        return lo, out

    @staticmethod
    def _from_dense(lo: int, coeffs) -> "LaurentHalf":
        return LaurentHalf({lo + i: x for i, x in enumerate(coeffs) if x})

    def exact_div(self, other: "LaurentHalf") -> "LaurentHalf":
        """Exact division; raises ValueError if the quotient is not Laurent."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _ZERO
        lo1, f = self._dense()
        lo2, g = other._dense()
        q = _poly_exact_div(f, g)
        return LaurentHalf._from_dense(lo1 - lo2, q)

    def evaluate(self, v0):
        """Exact substitution v -> v0 (Fraction/int give exact results)."""
        if isinstance(v0, int):
            v0 = Fraction(v0)
        total = v0 - v0 if not isinstance(v0, complex) else 0j
        for e, x in self.c.items():
            total += x * v0 ** e
        return total

    def __repr__(self):
        return f"LaurentHalf({lh_to_string(self)!r})"

    def __str__(self):
        return lh_to_string(self)


_ZERO = LaurentHalf.__new__(LaurentHalf)
_ZERO.c = {}
_ZERO._hash = None
_ONE = LaurentHalf.__new__(LaurentHalf)
_ONE.c = {0: 1}
_ONE._hash = None


def _laurent_gcd(a: LaurentHalf, b: LaurentHalf) -> LaurentHalf:
    _, f = a._dense()
    _, g = b._dense()
    return LaurentHalf._from_dense(0, _poly_gcd(f, g))


# ---------------------------------------------------------------------------
# the fraction field
# ---------------------------------------------------------------------------

class RationalQ:
    """Normalized quotient of two LaurentHalf values.

    The representative is unique: num/den are coprime in Z[v] after
    pulling the common monomial into num, den has nonzero constant term,
    positive leading coefficient, and the integer contents are coprime.
    Equal values therefore compare equal structurally.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentHalf, den: LaurentHalf = _ONE):
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        if num.is_zero():
            self.num = _ZERO
            self.den = _ONE
            self._hash = None
            return
        if den.c == {0: 1}:
            self.num = num
            self.den = _ONE
            self._hash = None
            return
        en, nf = num._dense()
        ed, df = den._dense()
        g = _poly_gcd(nf, df)
        if len(g) > 1 or g[0] != 1:
            nf = _poly_exact_div(nf, g)
            df = _poly_exact_div(df, g)
        self._finish(en - ed, nf, df)

    def _finish(self, shift: int, nf: list[int], df: list[int]):
        # nf/df coprime in Z[v]; normalize contents, sign and monomial
        cn = _content(nf)
        cd = _content(df)
        c = _int_gcd(cn, cd)
        if c > 1:
            nf = [x // c for x in nf]
            df = [x // c for x in df]
        if df[-1] < 0:
            nf = [-x for x in nf]
            df = [-x for x in df]
        self.num = LaurentHalf._from_dense(shift, nf)
        self.den = LaurentHalf._from_dense(0, df)
        self._hash = None

    @staticmethod
    def from_laurent(p: LaurentHalf) -> "RationalQ":
        r = RationalQ.__new__(RationalQ)
        r.num = p
        r.den = _ONE
        r._hash = None
        return r

    @staticmethod
    def from_int(n: int) -> "RationalQ":
        return RationalQ.from_laurent(LaurentHalf.from_int(n))

    @staticmethod
    def zero() -> "RationalQ":
        return _RQ_ZERO

    @staticmethod
    def one() -> "RationalQ":
        return _RQ_ONE

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return (
            isinstance(other, RationalQ)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.c == {0: 1} and other.den.c == {0: 1}:
            s = self.num + other.num
            return RationalQ.from_laurent(s) if s else _RQ_ZERO
        if self.den == other.den:
            return RationalQ(self.num + other.num, self.den)
        # reduce by the denominator gcd first (dens are often near-equal)
        _, d1 = self.den._dense()
        _, d2 = other.den._dense()
        g = _poly_gcd(d1, d2)
        if len(g) > 1 or g[0] != 1:
            d2r = LaurentHalf._from_dense(0, _poly_exact_div(d2, g))
            d1r = LaurentHalf._from_dense(0, _poly_exact_div(d1, g))
            return RationalQ(
                self.num * d2r + other.num * d1r, self.den * d2r
            )
        return RationalQ(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        r = RationalQ.__new__(RationalQ)
        r.num = -self.num
        r.den = self.den
        r._hash = None
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentHalf):
            other = RationalQ.from_laurent(other)
        if self.num.is_zero() or other.num.is_zero():
            return _RQ_ZERO
        if self.den.c == {0: 1} and other.den.c == {0: 1}:
            return RationalQ.from_laurent(self.num * other.num)
        # cross-reduce so the product needs no further polynomial gcd
        e1, n1 = self.num._dense()
        e2, n2 = other.num._dense()
        _, d1 = self.den._dense()
        _, d2 = other.den._dense()
        g = _poly_gcd(n1, d2)
        if len(g) > 1 or g[0] != 1:
            n1 = _poly_exact_div(n1, g)
            d2 = _poly_exact_div(d2, g)
        g = _poly_gcd(n2, d1)
        if len(g) > 1 or g[0] != 1:
            n2 = _poly_exact_div(n2, g)
            d1 = _poly_exact_div(d1, g)
        num = LaurentHalf._from_dense(0, n1) * LaurentHalf._from_dense(0, n2)
        den = LaurentHalf._from_dense(0, d1) * LaurentHalf._from_dense(0, d2)
        r = RationalQ.__new__(RationalQ)
        _, nf = num._dense()
        _, df = den._dense()
        r._finish(e1 + e2, nf, df)
        return r

    def __truediv__(self, other):
        if isinstance(other, LaurentHalf):
            other = RationalQ.from_laurent(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RationalQ")
        return RationalQ(self.num * other.den, self.den * other.num)

    def inv(self) -> "RationalQ":
        return _RQ_ONE / self

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def as_laurent(self) -> LaurentHalf:
        if self.den != _ONE:
            raise ValueError("denominator does not cancel")
        return self.num

    def __repr__(self):
        return f"RationalQ({rq_to_string(self)!r})"

    def __str__(self):
        return rq_to_string(self)


_RQ_ZERO = RationalQ.from_laurent(_ZERO)
_RQ_ONE = RationalQ.from_laurent(_ONE)


# ---------------------------------------------------------------------------
# quantum integers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentHalf:
    """The quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)).

    [0] = 0 and [-n] = -[n].
    """
    if n == 0:
        return _ZERO
    if n < 0:
        return -q_int(-n)
    return LaurentHalf({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_fact(n: int) -> LaurentHalf:
    """The quantum factorial [n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"quantum factorial of negative integer {n}")
    if n == 0:
        return _ONE
    return q_fact(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> LaurentHalf:
    """The quantum binomial [n]!/([k]![n-k]!); 0 when k is out of range."""
    if n < 0:
        raise ValueError(f"quantum binomial with negative n={n}")
    if k < 0 or k > n:
        return _ZERO
    if k == 0 or k == n:
        return _ONE
    # q-Pascal recurrence keeps everything division-free
    return q_binom(n - 1, k).shift(k) + q_binom(n - 1, k - 1).shift(k - n)


def q_ratio(num_ints, den_ints=()) -> RationalQ:
    """Product of quantum integers over a product of quantum integers."""
    num = _ONE
    for n in num_ints:
        num = num * q_int(n)
    den = _ONE
    for n in den_ints:
        den = den * q_int(n)
    return RationalQ(num, den)


def q_fact_ratio(num_facts, den_facts=()) -> RationalQ:
    """Product of quantum factorials over a product of quantum factorials."""
    num = _ONE
    for n in num_facts:
        num = num * q_fact(n)
    den = _ONE
    for n in den_facts:
        den = den * q_fact(n)
    return RationalQ(num, den)


def rq_eval(x: RationalQ, v0):
    """Exact substitution v -> v0; raises PoleError at a denominator zero."""
    if not isinstance(x, RationalQ):
        raise TypeError(f"rq_eval expects RationalQ, got {type(x).__name__}")
    if not isinstance(v0, (int, Fraction, complex)):
        raise TypeError(f"unsupported sample point {v0!r}")
    d = x.den.evaluate(v0)
    if d == 0:
        raise PoleError(f"denominator vanishes at v0={v0}")
    return x.num.evaluate(v0) / d


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def _exp_str(e: int) -> str:
    # exponent of v rendered as a power of q
    if e % 2 == 0:
        return str(e // 2)
    return f"{e}/2"


def lh_to_string(p: LaurentHalf) -> str:
    """Canonical text: terms by increasing power of v, printed in q."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.c):
        x = p.c[e]
        mag = abs(x)
        if e == 0:
            body = str(mag)
        else:
            es = _exp_str(e)
            qpow = "q" if es == "1" else f"q^{es}"
            body = qpow if mag == 1 else f"{mag}{qpow}"
        if not parts:
            parts.append(body if x > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if x > 0 else f"- {body}")
    return " ".join(parts)


def rq_to_string(x: RationalQ) -> str:
    """Canonical text for a RationalQ; "(num)/(den)" when den is not 1."""
    if x.den == _ONE:
        return lh_to_string(x.num)
    return f"({lh_to_string(x.num)})/({lh_to_string(x.den)})"


_TERM_RE = re.compile(r"^(\d+)?(?:(q)(?:\^(-?\d+)(/2)?)?)?$")


def _parse_poly(text: str) -> LaurentHalf:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    # split into signed terms
    toks = text.replace("- ", "-").replace("+ ", "+").split()
    coeffs: dict[int, int] = {}
    for tok in toks:
        sign = 1
        if tok.startswith("-"):
            sign = -1
            tok = tok[1:]
        elif tok.startswith("+"):
            tok = tok[1:]
        m = _TERM_RE.match(tok)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {tok!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            e = 0
        elif m.group(3) is None:
            e = 2
        else:
            e = int(m.group(3)) * (1 if m.group(4) else 2)
        coeffs[e] = coeffs.get(e, 0) + sign * coeff
    return LaurentHalf(coeffs)


def rq_from_string(text: str) -> RationalQ:
    """Parse the canonical text form back into a RationalQ."""
    text = text.strip()
    m = re.match(r"^\((.*)\)/\((.*)\)$", text)
    if m:
        return RationalQ(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
    return RationalQ(_parse_poly(text))

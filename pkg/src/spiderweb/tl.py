"""Temperley-Lieb diagrams, Jones-Wenzl projectors and sl2 trihedra.

Diagrams are noncrossing perfect matchings on nbot bottom and ntop top
points; elements are formal RationalQ-combinations of diagrams.  Loops
created while stacking contribute a factor of -[2] each.
"""

from __future__ import annotations

from functools import lru_cache

from spiderweb.qalg import LaurentHalf, RationalQ, q_fact_ratio, q_int, q_ratio

_MINUS_Q2 = RationalQ.from_laurent(-q_int(2))


@lru_cache(maxsize=1 << 18)
def _rq_mul(a: RationalQ, b: RationalQ) -> RationalQ:
    # JW coefficients repeat massively; caching collapses the gcd cost
    return a * b


@lru_cache(maxsize=1 << 18)
def _rq_add(a: RationalQ, b: RationalQ) -> RationalQ:
    return a + b


class TLDiagram:
    """A planar pairing; bottom points 0..nbot-1, top points nbot..nbot+ntop-1.

    Top points are numbered left to right.  The pairing tuple is the
    canonical form: pairing[p] is the partner of point p.
    """

    __slots__ = ("nbot", "ntop", "pairing")

    def __init__(self, nbot: int, ntop: int, pairing: tuple[int, ...], check=True):
        self.nbot = nbot
        self.ntop = ntop
        self.pairing = tuple(pairing)
        if check:
            self._validate()

    def _validate(self):
        n = self.nbot + self.ntop
        if (self.nbot + self.ntop) % 2 != 0:
            raise ValueError("odd number of endpoints")
        if len(self.pairing) != n:
            raise ValueError("pairing length mismatch")
        for p, q in enumerate(self.pairing):
            if q == p or not (0 <= q < n) or self.pairing[q] != p:
                raise ValueError("pairing is not a fixed-point-free involution")
        if self.crossing_count() != 0:
            raise ValueError("pairing is not planar")

    def _circle_pos(self, p: int) -> int:
        # boundary order: bottom left-to-right, then top right-to-left
        if p < self.nbot:
            return p
        return self.nbot + (self.ntop - 1 - (p - self.nbot))

    def crossing_count(self) -> int:
        chords = []
        for p, q in enumerate(self.pairing):
            if p < q:
                a, b = sorted((self._circle_pos(p), self._circle_pos(q)))
                chords.append((a, b))
        crossings = 0
        for i, (a, b) in enumerate(chords):
            for c, d in chords[i + 1 :]:
                if a < c < b < d or c < a < d < b:
                    crossings += 1
        return crossings

    def __eq__(self, other):
        return (
            isinstance(other, TLDiagram)
            and self.nbot == other.nbot
            and self.ntop == other.ntop
            and self.pairing == other.pairing
        )

    def __hash__(self):
        return hash((self.nbot, self.ntop, self.pairing))

    def __repr__(self):
        return f"TLDiagram({self.nbot},{self.ntop},{pairing_str(self.pairing)})"


def pairing_str(pairing) -> str:
    """Render a pairing as 1-indexed pairs like "(1-2)(3-6)(4-5)"."""
    parts = []
    for p, q in enumerate(pairing):
        if p < q:
            parts.append(f"({p + 1}-{q + 1})")
    return "".join(parts)


def tl_identity_diagram(n: int) -> TLDiagram:
    pairing = tuple((p + n) % (2 * n) for p in range(2 * n))
    return TLDiagram(n, n, pairing, check=False)


def _compose_pairings(p1, nb1, nt1, p2, nb2, nt2):
    """Stack p2 on top of p1 (nt1 == nb2); returns (pairing, loops)."""
    n_final = nb1 + nt2
    out = [-1] * n_final
    seen_mid = [False] * nt1

    def trace_from_x(j):
        # follow the strand starting at x-point j until it leaves the middle
        while True:
            if j < nb1:
                return j
            mid = j - nb1
            seen_mid[mid] = True
            j2 = p2[mid]
            if j2 >= nb2:
                return nb1 + (j2 - nb2)
            seen_mid[j2] = True
            j = p1[nb1 + j2]

    def trace_from_y(j2):
        while True:
            if j2 >= nb2:
                return nb1 + (j2 - nb2)
            seen_mid[j2] = True
            j = p1[nb1 + j2]
            if j < nb1:
                return j
            seen_mid[j - nb1] = True
            j2 = p2[j - nb1]

    for i in range(nb1):
        if out[i] != -1:
            continue
        end = trace_from_x(p1[i])
        out[i] = end
        out[end] = i
    for t in range(nt2):
        pt = nb1 + t
        if out[pt] != -1:
            continue
        end = trace_from_y(p2[nb2 + t])
        out[pt] = end
        out[end] = pt
    loops = 0
    for m in range(nt1):
        if seen_mid[m]:
            continue
        # closed loop in the middle
        loops += 1
        j = nb1 + m
        while True:
            mid = j - nb1
            if seen_mid[mid]:
                break
            seen_mid[mid] = True
            j2 = p2[mid]
            seen_mid[j2] = True
            j = p1[nb1 + j2]
    return tuple(out), loops


class TLElement:
    """Formal linear combination of TLDiagrams with RationalQ coefficients."""

    __slots__ = ("nbot", "ntop", "terms")

    def __init__(self, nbot: int, ntop: int, terms=None):
        self.nbot = nbot
        self.ntop = ntop
        self.terms: dict[tuple[int, ...], RationalQ] = {}
        if terms:
            for pairing, coeff in terms.items() if isinstance(terms, dict) else terms:
                self._add_term(pairing, coeff)

    def _add_term(self, pairing, coeff):
        if coeff.is_zero():
            return
        cur = self.terms.get(pairing)
        if cur is None:
            self.terms[pairing] = coeff
        else:
            s = _rq_add(cur, coeff)
            if s.is_zero():
                del self.terms[pairing]
            else:
                self.terms[pairing] = s

    @property
    def n(self) -> int:
        if self.nbot != self.ntop:
            raise ValueError("not a square element")
        return self.nbot

    def copy(self) -> "TLElement":
        e = TLElement(self.nbot, self.ntop)
        e.terms = dict(self.terms)
        return e

    def __add__(self, other):
        if (self.nbot, self.ntop) != (other.nbot, other.ntop):
            raise ValueError("shape mismatch")
        e = self.copy()
        for p, c in other.terms.items():
            e._add_term(p, c)
        return e

    def __sub__(self, other):
        return self + other.scale(RationalQ.from_int(-1))

    def scale(self, coeff: RationalQ) -> "TLElement":
        e = TLElement(self.nbot, self.ntop)
        if not coeff.is_zero():
            e.terms = {p: c * coeff for p, c in self.terms.items()}
        return e

    def __eq__(self, other):
        return (
            isinstance(other, TLElement)
            and self.nbot == other.nbot
            and self.ntop == other.ntop
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def diagrams(self):
        return [TLDiagram(self.nbot, self.ntop, p, check=False) for p in self.terms]

    def __repr__(self):
        if not self.terms:
            return "TLElement(0)"
        bits = [f"({c}) {pairing_str(p)}" for p, c in sorted(self.terms.items())]
        return " + ".join(bits)


def tl_element(diagram: TLDiagram, coeff: RationalQ | None = None) -> TLElement:
    e = TLElement(diagram.nbot, diagram.ntop)
    e._add_term(diagram.pairing, coeff if coeff is not None else RationalQ.one())
    return e


def tl_id(n: int) -> TLElement:
    return tl_element(tl_identity_diagram(n))


def tl_e(n: int, i: int) -> TLElement:
    """The generator e_i in T_n: cup-cap on strands i, i+1 (1-indexed)."""
    if not (1 <= i <= n - 1):
        raise ValueError(f"e_{i} undefined in T_{n}")
    pairing = list(tl_identity_diagram(n).pairing)
    a, b = i - 1, i
    ta, tb = n + a, n + b
    pairing[a], pairing[b] = b, a
    pairing[ta], pairing[tb] = tb, ta
    return tl_element(TLDiagram(n, n, tuple(pairing), check=False))


def tl_compose(x: TLElement, y: TLElement) -> TLElement:
    """Stack y on top of x; closed loops contribute -[2] each."""
    if x.ntop != y.nbot:
        raise ValueError(f"strand mismatch: {x.ntop} vs {y.nbot}")
    out = TLElement(x.nbot, y.ntop)
    loop_pows: dict[int, RationalQ] = {}
    for p1, c1 in x.terms.items():
        for p2, c2 in y.terms.items():
            pairing, loops = _compose_pairings(p1, x.nbot, x.ntop, p2, y.nbot, y.ntop)
            c = _rq_mul(c1, c2)
            if loops:
                f = loop_pows.get(loops)
                if f is None:
                    f = RationalQ.from_laurent((-q_int(2)) ** loops)
                    loop_pows[loops] = f
                c = c * f
            out._add_term(pairing, c)
    return out


def tl_tensor(x: TLElement, y: TLElement) -> TLElement:
    """Place y to the right of x."""
    out = TLElement(x.nbot + y.nbot, x.ntop + y.ntop)
    nbx, ntx, nby = x.nbot, x.ntop, y.nbot

    def relabel_x(p):
        return p if p < nbx else p + nby

    def relabel_y(p):
        return p + nbx if p < nby else p + nbx + ntx

    for p1, c1 in x.terms.items():
        base = [-1] * (out.nbot + out.ntop)
        for a, b in enumerate(p1):
            base[relabel_x(a)] = relabel_x(b)
        for p2, c2 in y.terms.items():
            pairing = list(base)
            for a, b in enumerate(p2):
                pairing[relabel_y(a)] = relabel_y(b)
            out._add_term(tuple(pairing), c1 * c2)
    return out


def tl_augmentation(x: TLElement) -> RationalQ:
    """epsilon(x): the coefficient of the identity diagram."""
    ident = tl_identity_diagram(x.n).pairing
    return x.terms.get(ident, RationalQ.zero())


def tl_close(x: TLElement) -> RationalQ:
    """Markov closure: join bottom i to top i around the side."""
    n = x.n
    total = RationalQ.zero()
    for pairing, coeff in x.terms.items():
        seen = [False] * (2 * n)
        loops = 0
        for start in range(2 * n):
            if seen[start]:
                continue
            loops += 1
            p = start  # alternate strand / closure arc (bottom i <-> top i)
            while not seen[p]:
                seen[p] = True
                q = pairing[p]
                seen[q] = True
                p = q + n if q < n else q - n
        total = total + coeff * RationalQ.from_laurent((-q_int(2)) ** loops)
    return total


@lru_cache(maxsize=None)
def _jw_scaled(n: int):
    """Wenzl recursion with a common denominator: (terms, den).

    terms maps pairings to LaurentHalf numerators; the element is
    terms/den.  Keeping integer coefficients in the quadratic part of
    the recursion avoids fraction arithmetic in the hot loop.
    """
    one = LaurentHalf.one()
    if n == 0:
        return {(): one}, one
    if n == 1:
        return {tl_identity_diagram(1).pairing: one}, one
    tm1, dm1 = _jw_scaled(n - 1)
    # A = f_{n-1} (x) id_1
    A: dict[tuple[int, ...], LaurentHalf] = {}
    for p, c in tm1.items():
        m = n - 1
        pairing = [0] * (2 * n)
        for s, t in enumerate(p):
            ss = s if s < m else s + 1
            tt = t if t < m else t + 1
            pairing[ss] = tt
        pairing[n - 1] = 2 * n - 1
        pairing[2 * n - 1] = n - 1
        A[tuple(pairing)] = c
    e_pairing = tl_e(n, n - 1).diagrams()[0].pairing
    minus2 = -q_int(2)
    # X = A composed with e_{n-1}
    X: dict[tuple[int, ...], LaurentHalf] = {}
    for p, c in A.items():
        pairing, loops = _compose_pairings(p, n, n, e_pairing, n, n)
        if loops:
            c = c * minus2**loops
        cur = X.get(pairing)
        X[pairing] = c if cur is None else cur + c
    # B = X composed with A
    B: dict[tuple[int, ...], LaurentHalf] = {}
    for p1, c1 in X.items():
        for p2, c2 in A.items():
            pairing, loops = _compose_pairings(p1, n, n, p2, n, n)
            c = c1 * c2
            if loops:
                c = c * minus2**loops
            cur = B.get(pairing)
            B[pairing] = c if cur is None else cur + c
    # f_n = A/dm1 + ([n-1]/[n]) * B/dm1^2, over the common denominator
    qn = q_int(n)
    qn1 = q_int(n - 1)
    den = dm1 * dm1 * qn
    scale_a = dm1 * qn
    terms: dict[tuple[int, ...], LaurentHalf] = {}
    for p, c in A.items():
        terms[p] = c * scale_a
    for p, c in B.items():
        c = c * qn1
        cur = terms.get(p)
        s = c if cur is None else cur + c
        if s.is_zero():
            terms.pop(p, None)
        else:
            terms[p] = s
    # pull out the common factor to keep the denominator small
    from spiderweb.qalg import _laurent_gcd

    g = den
    for c in terms.values():
        g = _laurent_gcd(g, c)
        if g.degree() == 0 and g.valuation() == 0:
            break
    if not (g.degree() == 0 and abs(g.c.get(0, 0)) == 1):
        den = den.exact_div(g)
        terms = {p: c.exact_div(g) for p, c in terms.items()}
    return terms, den


@lru_cache(maxsize=None)
def jones_wenzl(n: int) -> TLElement:
    """The Jones-Wenzl projector f_n via the Wenzl recursion."""
    if n < 0:
        raise ValueError("negative strand count")
    terms, den = _jw_scaled(n)
    out = TLElement(n, n)
    for p, c in terms.items():
        out._add_term(p, RationalQ(c, den))
    return out


# ---------------------------------------------------------------------------
# clasp expansion coefficients
# ---------------------------------------------------------------------------

def a1_single_clasp_coeffs(n: int) -> list[RationalQ]:
    """Coefficients (a_1..a_n) of the single clasp expansion, a_i = [n+1-i]/[n]."""
    if n < 1:
        raise ValueError("n must be positive")
    return [q_ratio([n + 1 - i], [n]) for i in range(1, n + 1)]


def single_clasp_expansion(n: int) -> TLElement:
    """Assemble the n-term single clasp expansion from f_{n-1}."""
    coeffs = a1_single_clasp_coeffs(n)
    base = tl_tensor(jones_wenzl(n - 1), tl_id(1)) if n > 1 else tl_id(1)
    total = TLElement(n, n)
    ladder = tl_id(n)
    for i in range(1, n + 1):
        term = tl_compose(base, ladder) if i > 1 else base
        total = total + term.scale(coeffs[i - 1])
        if i < n:
            ladder = tl_compose(ladder, tl_e(n, n - i)) if i > 1 else tl_e(n, n - 1)
    return total


def a1_pair_clasp_coeff(a: int, b: int, c: int, d: int, k: int) -> RationalQ:
    """Coefficient a_k of the (a,b)/(c,d) pair clasp expansion."""
    if a + b != c + d or b != min(a, b, c, d) or not (0 <= k <= b):
        raise ValueError(f"inadmissible pair clasp parameters {(a, b, c, d, k)}")
    return q_fact_ratio([c, b, a + b - k], [c - k, b - k, k, a + b])


def theta_a1(i: int, j: int, k: int) -> RationalQ:
    """Closed form for the sl2 trihedron coefficient."""
    if min(i, j, k) < 0:
        raise ValueError("negative trihedron labels")
    sign = -1 if (i + j + k) % 2 else 1
    val = q_fact_ratio([i + j + k + 1, i, j, k], [i + j, j + k, i + k])
    return val * RationalQ.from_int(sign)


def admissible_a1(a: int, b: int, c: int):
    """Internal labels (i,j,k) of an admissible sl2 triple, or None."""
    if min(a, b, c) < 0:
        raise ValueError("negative weights")
    if (a + b + c) % 2 != 0 or not (abs(a - b) <= c <= a + b):
        return None
    return ((a + b - c) // 2, (a + c - b) // 2, (b + c - a) // 2)


# ---------------------------------------------------------------------------
# diagram-closure oracle for theta
# ---------------------------------------------------------------------------

def _cup_diagram(i: int, j: int, k: int) -> TLDiagram:
    """(i+k) -> (i+j)+(j+k): straight strands outside, j nested arcs inside."""
    a = i + j
    b = j + k
    nbot = i + k
    ntop = a + b
    pairing = [-1] * (nbot + ntop)

    def pair(p, q):
        pairing[p] = q
        pairing[q] = p

    for m in range(i):
        pair(m, nbot + m)
    for m in range(k):
        pair(i + m, nbot + a + j + m)
    for m in range(j):
        pair(nbot + i + m, nbot + a + (j - 1 - m))
    return TLDiagram(nbot, ntop, tuple(pairing))


def _cap_diagram(i: int, j: int, k: int) -> TLDiagram:
    """Mirror of _cup_diagram: (i+j)+(j+k) -> (i+k)."""
    cup = _cup_diagram(i, j, k)
    nbot, ntop = cup.ntop, cup.nbot
    n = nbot + ntop

    def flip(p):
        return p + nbot if p < ntop else p - ntop

    pairing = [-1] * n
    for p, q in enumerate(cup.pairing):
        pairing[flip(p)] = flip(q)
    return TLDiagram(nbot, ntop, tuple(pairing))


def theta_a1_oracle(i: int, j: int, k: int) -> RationalQ:
    """Evaluate the closed trihedron network built from Jones-Wenzl elements.

    The network of clasps f_{i+j}, f_{j+k}, f_{i+k} is symmetric in the
    three bundles, so we evaluate the cheapest planar presentation:
    close (Cap (f_a (x) f_b) Cup) through f_c and trace.  f_c y f_c =
    eps(y) f_c collapses the trace to eps(X) * closure(f_c).
    """
    if min(i, j, k) < 0:
        raise ValueError("negative trihedron labels")
    if i + j + k > 8:
        raise ValueError("oracle limited to i+j+k <= 8")
    # pick the presentation where the two expanded clasps are smallest
    def catalan(n):
        c = 1
        for t in range(n):
            c = c * 2 * (2 * t + 1) // (t + 2)
        return c

    best = min(
        {(i, j, k), (j, k, i), (k, i, j), (k, j, i), (j, i, k), (i, k, j)},
        key=lambda t: catalan(t[0] + t[1]) * catalan(t[1] + t[2]),
    )
    i, j, k = best
    a, b, c = i + j, j + k, i + k
    ta, da = _jw_scaled(a)
    tb, db = _jw_scaled(b)
    tc, dc = _jw_scaled(c)
    cup = _cup_diagram(i, j, k)
    cap = _cap_diagram(i, j, k)
    ident = tl_identity_diagram(c).pairing
    eps = LaurentHalf.zero()
    minus2 = -q_int(2)
    for p1, c1 in ta.items():
        for p2, c2 in tb.items():
            # tensor p1 (x) p2 without building an element
            pairing = [-1] * (2 * (a + b))
            for s, t in enumerate(p1):
                ss = s if s < a else s + b
                tt = t if t < a else t + b
                pairing[ss] = tt
            for s, t in enumerate(p2):
                ss = s + a if s < b else s + 2 * a
                tt = t + a if t < b else t + 2 * a
                pairing[ss] = tt
            mid1, l1 = _compose_pairings(
                cup.pairing, cup.nbot, cup.ntop, tuple(pairing), a + b, a + b
            )
            mid2, l2 = _compose_pairings(mid1, c, a + b, cap.pairing, a + b, c)
            if mid2 != ident:
                continue
            val = c1 * c2
            loops = l1 + l2
            if loops:
                val = val * minus2**loops
            eps = eps + val
    # Markov closure of f_c in scaled form
    closure = LaurentHalf.zero()
    for pairing, coeff in tc.items():
        seen = [False] * (2 * c)
        loops = 0
        for start in range(2 * c):
            if seen[start]:
                continue
            loops += 1
            p = start
            while not seen[p]:
                seen[p] = True
                q = pairing[p]
                seen[q] = True
                p = q + c if q < c else q - c
        closure = closure + coeff * minus2**loops
    return RationalQ(eps * closure, da * db * dc)

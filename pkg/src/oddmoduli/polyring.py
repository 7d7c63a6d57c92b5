"""Exact two-layer polynomial arithmetic.

The outer layer lives in the canonical variables X_{n_0}, ..., X_{n_{g-1}}
(X_n has weight n).  Coefficients are polynomials in named deformation
parameters over the rationals (``ParamPoly``), stored sparsely as
``{sorted tuple of ParamName: Fraction}``.  The constant term has key ().
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import DegreeMismatch, WeightMismatch


class Ring:
    """Monomial bookkeeping for one semigroup's canonical variables."""

    def __init__(self, S):
        self.S = S
        self.nongaps = tuple(S.nongaps)
        self.nvars = len(self.nongaps)
        self.top = self.nongaps[-1]
        self._idx = {n: k for k, n in enumerate(self.nongaps)}
        self.one = (0,) * self.nvars

    def mono(self, *ns):
        e = [0] * self.nvars
        for n in ns:
            e[self._idx[n]] += 1
        return tuple(e)

    def var(self, n):
        return self.mono(n)

    def index(self, n):
        return self._idx[n]

    def weight(self, m):
        return sum(e * n for e, n in zip(m, self.nongaps))

    @staticmethod
    def degree(m):
        return sum(m)

    def key(self, m):
        """Comparison vector (deg, weight, -i_0, -i_{g-1}, ..., -i_1)."""
        return (sum(m), self.weight(m), -m[0]) + tuple(-m[k] for k in range(self.nvars - 1, 0, -1))

    def cmp(self, m1, m2):
        a, b = self.key(m1), self.key(m2)
        return (a > b) - (a < b)

    @staticmethod
    def mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def div(a, b):
        """a / b as a monomial, or None when b does not divide a."""
        r = tuple(x - y for x, y in zip(a, b))
        return r if min(r) >= 0 else None

    def factors(self, m):
        """Sorted list of the nongaps n with X_n dividing m (with repetition)."""
        return [n for n, e in zip(self.nongaps, m) for _ in range(e)]

    def render(self, m):
        parts = []
        for n, e in zip(self.nongaps, m):
            if e == 1:
                parts.append(f"X_{n}" if n < 10 else f"X_{{{n}}}")
            elif e > 1:
                parts.append((f"X_{n}" if n < 10 else f"X_{{{n}}}") + f"^{e}")
        return "".join(parts) or "1"


def cmp_monomials(R, m1, m2):
    """-1, 0 or 1 according to the monomial order of ``R``."""
    return R.cmp(m1, m2)


class ParamName(NamedTuple):
    """Deformation coefficient attached to a generator.

    ``kind`` is 'c' (quadric) or 'd' (cubic), (s, i) the generator label
    and ``w`` the weight; the subtracted basis monomial has weight s - w.
    """
    kind: str
    s: int
    i: int
    w: int

    @property
    def weight(self):
        return self.w

    @property
    def offset(self):
        return self.s - self.w

    @property
    def label(self):
        return ("F" if self.kind == "c" else "G", self.s, self.i)

    def render(self, with_index=False):
        if with_index:
            return f"{self.kind}_{{{self.s},{self.i},{self.w}}}"
        return f"{self.kind}_{{{self.s},{self.w}}}"

    def sort_key(self):
        return (self.w, self.kind, self.s, self.i)


# --- ParamPoly helpers -------------------------------------------------------

ONE = {(): 1}


def p_const(c):
    return {(): c} if c else {}


def p_var(name):
    return {(name,): 1}


def p_add(a, b, scale=1):
    """a += scale * b in place; returns a."""
    for k, v in b.items():
        nv = a.get(k, 0) + scale * v
        if nv:
            a[k] = nv
        else:
            a.pop(k, None)
    return a


def p_mul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple(sorted(k1 + k2)) if k1 and k2 else k1 or k2
            nv = out.get(k, 0) + v1 * v2
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out


def p_scale(a, c):
    return {k: v * c for k, v in a.items()} if c else {}


def p_neg(a):
    return {k: -v for k, v in a.items()}


def p_degree(a):
    """Total degree; -1 for the zero polynomial."""
    return max((len(k) for k in a), default=-1)


def p_names(a):
    return sorted({x for k in a for x in k}, key=ParamName.sort_key)


def p_weights(a):
    """Set of term weights (parameter weight sums)."""
    return {sum(x.w for x in k) for k in a}


def p_weight(a):
    """Common weight of an isobaric polynomial (None for zero)."""
    ws = p_weights(a)
    if not ws:
        return None
    if len(ws) > 1:
        raise WeightMismatch(f"polynomial is not isobaric: weights {sorted(ws)}")
    return ws.pop()


def p_linear_part(a):
    return {k: v for k, v in a.items() if len(k) == 1}


def p_subst(a, sol):
    """Substitute ``sol[name]`` (a ParamPoly) for every name in ``sol``."""
    out = {}
    cache = {}
    for k, c in a.items():
        term = {(): c}
        rest = []
        for x in k:
            if x in sol:
                term = p_mul(term, sol[x])
                if not term:
                    break
            else:
                rest.append(x)
        if not term:
            continue
        if rest:
            rk = tuple(rest)
            if rk not in cache:
                cache[rk] = {rk: 1}
            term = p_mul(term, cache[rk])
        p_add(out, term)
    return out


def p_eval(a, point):
    """Evaluate at ``point`` (name -> number); every name must be assigned."""
    tot = 0
    for k, c in a.items():
        v = c
        for x in k:
            v *= point[x]
        tot += v
    return tot


def p_render(a, alias=None):
    """Canonical text form, e.g. ``-c_{12,4}*d_{15,8} + 2*c_{13,7}``."""
    if not a:
        return "0"
    alias = alias or (lambda x: x.render())

    def tkey(item):
        k = item[0]
        return (-len(k), [x.sort_key() for x in k])

    out = []
    for k, c in sorted(a.items(), key=tkey):
        mon = "*".join(_power_strings(k, alias))
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not mon:
            body = str(c)
        elif c == 1:
            body = mon
        else:
            body = f"{c}*{mon}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _power_strings(k, alias):
    seen = []
    for x in k:
        if seen and seen[-1][0] == x:
            seen[-1][1] += 1
        else:
            seen.append([x, 1])
    return [alias(x) + (f"^{e}" if e > 1 else "") for x, e in seen]


# --- XForm -------------------------------------------------------------------

class XForm:
    """Homogeneous form in the canonical variables with ParamPoly coefficients."""

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring, degree, terms=None):
        self.ring = ring
        self.degree = degree
        self.terms = {}
        for m, p in (terms or {}).items():
            if sum(m) != degree:
                raise DegreeMismatch(f"monomial of degree {sum(m)} in a degree-{degree} form")
            if p:
                self.terms[m] = dict(p)

    @classmethod
    def binomial(cls, ring, lead, rest):
        return cls(ring, sum(lead), {lead: {(): 1}, rest: {(): -1}})

    @classmethod
    def monomial(cls, ring, m, coef=None):
        return cls(ring, sum(m), {m: coef if coef is not None else {(): 1}})

    def copy(self):
        return XForm(self.ring, self.degree, self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, XForm) and self.terms == other.terms and (
            self.degree == other.degree or not self.terms)

    def iadd(self, other, mult=None, coef=ONE):
        """self += coef * mult * other (mult a monomial); in place."""
        R = self.ring
        deg = other.degree + (sum(mult) if mult else 0)
        if other.terms and deg != self.degree:
            raise DegreeMismatch(f"adding degree {deg} to degree {self.degree}")
        for m, p in other.terms.items():
            mm = R.mul(mult, m) if mult else m
            cur = self.terms.get(mm)
            if cur is None:
                cur = self.terms[mm] = {}
            p_add(cur, p_mul(coef, p) if coef is not ONE else p)
            if not cur:
                del self.terms[mm]
        return self

    def __add__(self, other):
        return self.copy().iadd(other)

    def __sub__(self, other):
        return self.copy().iadd(other, coef={(): -1})

    def __neg__(self):
        return XForm(self.ring, self.degree, {m: p_neg(p) for m, p in self.terms.items()})

    def scalar_mul(self, coef):
        if isinstance(coef, dict):
            return XForm(self.ring, self.degree, {m: p_mul(coef, p) for m, p in self.terms.items()})
        return XForm(self.ring, self.degree, {m: p_scale(p, coef) for m, p in self.terms.items()})

    def mul_monomial(self, mult):
        R = self.ring
        return XForm(R, self.degree + sum(mult), {R.mul(mult, m): p for m, p in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, XForm):
            return self.scalar_mul(other)
        R = self.ring
        out = XForm(R, self.degree + other.degree)
        for m1, p1 in self.terms.items():
            for m2, p2 in other.terms.items():
                mm = R.mul(m1, m2)
                cur = out.terms.setdefault(mm, {})
                p_add(cur, p_mul(p1, p2))
                if not cur:
                    del out.terms[mm]
        return out

    def weight(self):
        """Total weight of an isobaric form; raises WeightMismatch otherwise."""
        ws = set()
        for m, p in self.terms.items():
            wm = self.ring.weight(m)
            ws |= {wm + w for w in p_weights(p)}
        if len(ws) > 1:
            raise WeightMismatch(f"form is not isobaric: weights {sorted(ws)}")
        return ws.pop() if ws else None

    def is_isobaric(self):
        try:
            self.weight()
        except WeightMismatch:
            return False
        return True

    def leading_monomial(self):
        return max(self.terms, key=self.ring.key) if self.terms else None

    def render(self, alias=None):
        """Text form with terms in decreasing monomial order."""
        R = self.ring
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, key=R.key, reverse=True):
            p = self.terms[m]
            mon = R.render(m)
            if p == {(): 1}:
                out.append(("+", mon))
            elif p == {(): -1}:
                out.append(("-", mon))
            else:
                out.append(("+", f"({p_render(p, alias)})*{mon}"))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"XForm({self.render()})"


def substitute_t(f):
    """Replace X_n by t^n; returns {exponent: ParamPoly} without zero entries."""
    R = f.ring
    out = {}
    for m, p in f.terms.items():
        e = R.weight(m)
        cur = out.setdefault(e, {})
        p_add(cur, p)
        if not cur:
            del out[e]
    return out


def t_mul(a, b):
    """Product of two t-polynomials."""
    out = {}
    for e1, p1 in a.items():
        for e2, p2 in b.items():
            cur = out.setdefault(e1 + e2, {})
            p_add(cur, p_mul(p1, p2))
            if not cur:
                del out[e1 + e2]
    return out

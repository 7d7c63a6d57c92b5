"""Linear syzygies of the monomial curve.

Each relation has the shape

    X_{2g-2} * T  +  sum coef * X^mult * H  =  0

on the initial binomials, where T is the target generator and the H are
quadrics or cubics.  One relation is built per quadric other than
F_{n_i+2g-2,1} (i = 1..g-3) and per cubic other than the last cubic of
weight 4g-4.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .canonical_ideal import all_monomials
from .errors import CaseExhaustion, InvariantFailure
from .linalg import Echelon
from .polyring import XForm


@dataclass(frozen=True)
class SyzygyRelation:
    target: tuple
    terms: tuple     # (coef, multiplier monomial, label), lead term excluded
    weight: int
    source: str = "lemma"

    def all_terms(self, ring):
        return ((1, ring.var(ring.top), self.target),) + self.terms


def expand(rel, G, forms=None):
    """Evaluate the relation on ``forms`` (default: initial binomials)."""
    R = G.ring
    forms = forms or G.initial_forms()
    out = XForm(R, G.by_label[rel.target].degree + 1)
    for c, mult, lab in rel.all_terms(R):
        out.iadd(forms[lab], mult, {(): c})
    return out


def render(rel, G):
    R = G.ring
    parts = []
    for c, mult, lab in rel.all_terms(R):
        m = "" if mult == R.one else R.render(mult)
        parts.append(("-" if c < 0 else "+", (f"{abs(c)}" if abs(c) != 1 else "") + m + G.name(lab)))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _targets(G, kind):
    pool = G.quadratics if kind == "F" else G.cubics
    return [x.label for x in pool if x.label not in G.excluded]


class _Builder:
    """Shared state for turning bracketed binomials into generator terms."""

    def __init__(self, G, route=True):
        self.G = G
        self.R = G.ring
        self.route = route
        self.nongaps = set(G.S.nongaps)
        self.top = self.R.top

    def valid(self, k):
        return k in self.nongaps and 0 <= k < self.top

    def excess(self, M, target):
        """M - Lambda(M) as a list of (coef, multiplier, label)."""
        G, R = self.G, self.R
        if G.in_basis(M):
            return []
        if M in G.lead_of:
            return [(1, R.one, G.lead_of[M])]
        xk, lab = G.multiples[M]
        if self.route:
            # go through the kept cubic of the same weight when its leading
            # term differs from M by a single quadric multiple
            w = R.weight(M)
            for cub in G.cubics:
                if cub.s != w or cub.label == target:
                    continue
                for k in range(R.nvars):
                    xj = tuple(1 if t == k else 0 for t in range(R.nvars))
                    a, b = R.div(cub.lead, xj), R.div(M, xj)
                    if a is None or b is None or a not in G.lead_of:
                        continue
                    F = G.by_label[G.lead_of[a]]
                    if F.degree == 2 and F.basis == b:
                        return [(1, R.one, cub.label), (-1, xj, F.label)]
        return [(1, xk, lab)]

    def bracket(self, mult, A, B, target, sign):
        """sign * X^mult * (X^A - X^B) resolved into generator terms."""
        R = self.R
        m, a, b = R.mono(*mult), R.mono(*A), R.mono(*B)
        out = [(sign * c, R.mul(m, mm), lab) for c, mm, lab in self.excess(a, target)]
        out += [(-sign * c, R.mul(m, mm), lab) for c, mm, lab in self.excess(b, target)]
        return out


def _collect(terms):
    acc = {}
    for c, mult, lab in terms:
        acc[(mult, lab)] = acc.get((mult, lab), 0) + c
    return tuple(sorted(((c, mult, lab) for (mult, lab), c in acc.items() if c),
                        key=lambda t: (t[2], t[1])))


def _lemma_terms(B, T):
    """Bracketed terms of the gap-case construction, or None if degenerate."""
    G, R, top = B.G, B.R, B.top
    gen = G.by_label[T]
    d = gen.degree
    a = R.factors(gen.lead)
    b = R.factors(gen.basis)
    extra = []
    if d == 2 and top in b:
        # basis X_n X_{2g-2}: work with T - E for the excluded quadric E
        E = ("F", gen.s, 1)
        if E not in G.excluded:
            return None
        extra.append((-1, R.var(top), E))
        b = R.factors(G.by_label[E].lead)
    sg = 1
    if a[0] < b[0]:
        a, b, sg = b, a, -1
    steps = None
    if d == 2:
        m, n = a
        q, r = b
        for k, u, v in ((top - r + n, m, n), (top - r + m, n, m)):
            if r < top and B.valid(k):
                steps = [([r], [q, top], [u, k], 1), ([u], [r, k], [v, top], 1)]
                break
        if steps is None and B.valid(r + 1) and B.valid(m + 1) and B.valid(top - 1):
            steps = [([q], [top, r], [top - 1, r + 1], 1),
                     ([top - 1], [q, r + 1], [m + 1, n], 1),
                     ([n], [top - 1, m + 1], [m, top], 1)]
    else:
        m, n, p = a
        q, r, t = b
        kP, kR = top - p + q, top - r + p
        if B.valid(kP):
            steps = [([r], [top, t, q], [t, p, kP], 1), ([p], [r, t, kP], [top, m, n], 1)]
        elif B.valid(kR):
            steps = [([m], [kR, r, n], [top, p, n], 1), ([r], [top, t, q], [kR, m, n], 1)]
        elif B.valid(r + 1) and B.valid(p + 1) and B.valid(top - 1):
            steps = [([top - 1], [r + 1, q, t], [p + 1, n, m], 1),
                     ([m], [p + 1, top - 1, n], [p, top, n], 1),
                     ([q], [top, r, t], [top - 1, r + 1, t], 1)]
    if steps is None:
        return None
    terms = list(extra)
    for mult, A, Bm, s in steps:
        terms += B.bracket(mult, A, Bm, T, sg * s)
    return terms


def _search_terms(B, T):
    """Breadth-first walk from X_{2g-2}*lead(T) to X_{2g-2}*basis(T).

    Each edge rewrites X_k * A into X_k * A' for monomials A, A' of equal
    weight; the target itself may not be used and X_{2g-2} may only
    multiply quadrics or excluded generators.
    """
    G, R, top = B.G, B.R, B.top
    gen = G.by_label[T]
    d = gen.degree
    X = R.var(top)
    start, goal = R.mul(X, gen.lead), R.mul(X, gen.basis)
    classes = {}
    for m in all_monomials(R, d):
        classes.setdefault(R.weight(m), []).append(m)
    prev = {start: None}
    queue = deque([start])
    while queue:
        M = queue.popleft()
        if M == goal:
            break
        for k in range(R.nvars):
            if not M[k]:
                continue
            xk = tuple(1 if i == k else 0 for i in range(R.nvars))
            A = R.div(M, xk)
            for A2 in classes[R.weight(A)]:
                if A2 == A:
                    continue
                terms = [(c, R.mul(xk, mm), lab) for c, mm, lab in B.excess(A, T)]
                terms += [(-c, R.mul(xk, mm), lab) for c, mm, lab in B.excess(A2, T)]
                labs = [lab for _, _, lab in terms]
                if T in labs:
                    continue
                if R.nongaps[k] == top and not all(_top_ok(G, T, lab) for lab in labs):
                    continue
                M2 = R.mul(xk, A2)
                if M2 not in prev:
                    prev[M2] = (M, terms)
                    queue.append(M2)
    if goal not in prev:
        return None
    out = []
    M = goal
    while prev[M] is not None:
        P, terms = prev[M]
        out += [(-c, mm, lab) for c, mm, lab in terms]
        M = P
    return out


def _solve_terms(B, T):
    """Exact linear solve for X_{2g-2}*T + sum c * X^mult * H = 0.

    The unknowns are all admissible (mult, H) of the right degree and
    weight; the solution with every non-pivot unknown zero is returned.
    """
    G, R, top = B.G, B.R, B.top
    gen = G.by_label[T]
    d = gen.degree + 1
    W = gen.s + top
    k = R.index(top)
    forms = G.initial_forms()
    cols = []
    for H in G.quadratics + G.cubics:
        if H.label == T or H.degree >= d:
            continue
        for mult in all_monomials(R, d - H.degree):
            if R.weight(mult) + H.s != W:
                continue
            if mult[k] and not _top_ok(G, T, H.label):
                continue
            cols.append((sum(mult), H.degree, mult, H.label))
    cols.sort()
    rows = {}
    for j, (_, _, mult, lab) in enumerate(cols):
        for m, p in forms[lab].terms.items():
            rows.setdefault(R.mul(mult, m), {})[j] = p[()]
    for m, p in forms[T].terms.items():
        rows.setdefault(R.mul(R.var(top), m), {})["rhs"] = -p[()]
    # prefer low-degree multipliers on pivots: smallest column index wins
    E = Echelon(pivot_of=lambda v: min(c for c in v if c != "rhs"))
    for m in sorted(rows):
        row = E.reduce(rows[m])
        if not row:
            continue
        if set(row) == {"rhs"}:
            return None
        E.add(row)
    terms = []
    for j, row in E.rows.items():
        c = row.get("rhs", 0)
        if c:
            if Fraction(c).denominator != 1:
                return None
            terms.append((int(c), cols[j][2], cols[j][3]))
    return terms


def _top_ok(G, T, lab):
    """May X_{2g-2} multiply generator ``lab`` in the relation of T?

    Evaluated on the curve, X_{2g-2} has order 0 at P.  The relations form
    a linear system in the non-excluded generators of T's degree whose
    off-diagonal entries must vanish at P, so X_{2g-2} may only multiply
    excluded generators or, in a cubic relation, quadrics.
    """
    if lab in G.excluded:
        return True
    return G.by_label[lab].degree < G.by_label[T].degree


def _finish(B, T, terms, source):
    G, R = B.G, B.R
    terms = _collect(terms)
    # the target may only appear through the lead term
    if any(lab == T for _, _, lab in terms):
        return None
    k = R.index(B.top)
    if any(mult[k] and not _top_ok(G, T, lab) for _, mult, lab in terms):
        return None
    rel = SyzygyRelation(T, terms, R.weight(G.by_label[T].lead) + B.top, source)
    if not expand(rel, G).is_zero():
        return None
    if any(sum(mult) > 2 for _, mult, _ in terms):
        raise InvariantFailure(f"multiplier of degree > 2 in the syzygy of {G.name(T)}")
    return rel


def _build(G, kind, route=True):
    B = _Builder(G, route)
    out = []
    for T in _targets(G, kind):
        rel = None
        terms = _lemma_terms(B, T)
        if terms is not None:
            rel = _finish(B, T, terms, "lemma")
        if rel is None:
            terms = _search_terms(B, T)
            if terms is not None:
                rel = _finish(B, T, terms, "search")
        if rel is None:
            terms = _solve_terms(B, T)
            if terms is not None:
                rel = _finish(B, T, terms, "solve")
        if rel is None:
            raise CaseExhaustion(f"no syzygy found for {G.name(T)}")
        out.append(rel)
    return out


def build_quadratic_syzygies(G, route=True):
    """One relation per quadric off the excluded list, (g-3)(g-4)/2 in all."""
    out = _build(G, "F", route)
    g = G.S.genus
    if len(out) != (g - 3) * (g - 4) // 2:
        raise InvariantFailure(f"{len(out)} quadratic syzygies")
    return out


def build_cubic_syzygies(G, route=True):
    """One relation per kept cubic except the last one of weight 4g-4."""
    out = _build(G, "G", route)
    if len(out) != len(G.cubics) - 1:
        raise InvariantFailure(f"{len(out)} cubic syzygies")
    return out


# Reference relation sets for the two worked examples, in this module's labels.
# Entries: target -> [(coef, multiplier nongaps, label)], lead term included.
_REFERENCE = {
    (5, 6, 7, 8): {
        ("F", 12, 1): [(1, (8,), ("F", 12, 1)), (-1, (7,), ("F", 13, 1)), (1, (6,), ("F", 14, 1))],
        ("G", 15, 1): [(1, (8,), ("G", 15, 1)), (-1, (5, 6), ("F", 12, 1)),
                       (1, (5,), ("G", 18, 2)), (-1, (7,), ("G", 16, 1))],
        ("G", 18, 2): [(1, (8,), ("G", 18, 2)), (-1, (5,), ("G", 21, 2)),
                       (1, (5, 7), ("F", 14, 1)), (-1, (6, 8), ("F", 12, 1))],
        ("G", 21, 2): [(1, (8,), ("G", 21, 2)), (-1, (7, 8), ("F", 14, 1)), (-1, (8, 8), ("F", 13, 1))],
    },
    (6, 7, 8, 9, 10): {
        ("F", 14, 1): [(1, (10,), ("F", 14, 1)), (-1, (8,), ("F", 16, 1)), (1, (7,), ("F", 17, 1))],
        ("F", 15, 1): [(1, (10,), ("F", 15, 1)), (-1, (9,), ("F", 16, 1)), (1, (7,), ("F", 18, 1))],
        ("F", 16, 2): [(1, (10,), ("F", 16, 2)), (-1, (10,), ("F", 16, 1)),
                       (-1, (9,), ("F", 17, 1)), (1, (8,), ("F", 18, 1))],
        ("G", 18, 2): [(1, (10,), ("G", 18, 2)), (-1, (8,), ("G", 20, 1)), (1, (6, 6), ("F", 16, 2))],
        ("G", 19, 1): [(1, (10,), ("G", 19, 1)), (-1, (9,), ("G", 20, 2)), (1, (6, 7), ("F", 16, 1))],
        ("G", 20, 1): [(1, (10,), ("G", 20, 1)), (-1, (10,), ("G", 20, 2)), (1, (6, 10), ("F", 14, 1))],
        ("G", 21, 2): [(1, (10,), ("G", 21, 2)), (-1, (7, 10), ("F", 14, 1)), (-1, (6, 10), ("F", 15, 1))],
        ("G", 22, 3): [(1, (10,), ("G", 22, 3)), (-1, (6, 10), ("F", 16, 2)), (-1, (8, 10), ("F", 14, 1))],
        ("G", 26, 3): [(1, (10,), ("G", 26, 3)), (-1, (10, 10), ("F", 16, 1)), (-1, (9, 10), ("F", 17, 1))],
        ("G", 27, 2): [(1, (10,), ("G", 27, 2)), (-1, (10, 10), ("F", 17, 1)), (-1, (9, 10), ("F", 18, 1))],
    },
}


def reference_syzygies(G):
    """The pinned relation sets for <5,6,7,8> and <6,...,10>, else None."""
    table = _REFERENCE.get(tuple(G.S.generators))
    if table is None:
        return None
    R = G.ring
    X = R.var(R.top)
    out = []
    for T, rows in table.items():
        terms = []
        for c, ns, lab in rows:
            m = R.mono(*ns)
            if lab == T and m == X and c == 1:
                continue
            terms.append((c, m, lab))
        rel = SyzygyRelation(T, _collect(terms), R.weight(G.by_label[T].lead) + R.top, "reference")
        if not expand(rel, G).is_zero():
            raise InvariantFailure(f"reference syzygy of {G.name(T)} does not vanish")
        out.append(rel)
    return out


def default_syzygies(G):
    """Pinned relations where available, otherwise the constructed ones."""
    ref = reference_syzygies(G)
    if ref is not None:
        return ref
    return build_quadratic_syzygies(G) + build_cubic_syzygies(G)

"""Initial binomial generators of the monomial curve and division onto Lambda_r.

Generators are labelled ('F', s, i) for quadrics and ('G', sigma, j) for
cubics, where i (resp. j) is the position of the leading monomial among the
partitions of s (resp. sigma) sorted in the monomial order.  Index 0 is
always the Lambda basis monomial.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import InvariantFailure, IrreducibleNonBasis, WeightViolation
from .linalg import rank
from .polyring import Ring, XForm, p_neg
from .semigroup import (cubic_counts, dim_Ir, hermitian_basis, partitions2,
                        partitions3, require_odd, sums)


@dataclass(frozen=True)
class Generator:
    label: tuple
    lead: tuple
    basis: tuple

    @property
    def kind(self):
        return self.label[0]

    @property
    def s(self):
        return self.label[1]

    @property
    def degree(self):
        return sum(self.lead)


@dataclass
class GeneratorSet:
    S: object
    ring: Ring
    quadratics: list
    cubics: list
    lam: dict                       # r -> {weight: basis monomial}
    multiples: dict                 # cubic monomial -> (X_k, quadric label)
    excluded: frozenset             # labels carrying no syzygy
    by_label: dict = field(default_factory=dict)
    lead_of: dict = field(default_factory=dict)

    def __post_init__(self):
        for gen in self.quadratics + self.cubics:
            self.by_label[gen.label] = gen
            self.lead_of[gen.lead] = gen.label
        self.lam_sets = {r: set(v.values()) for r, v in self.lam.items()}

    @property
    def labels(self):
        return [x.label for x in self.quadratics + self.cubics]

    def initial_form(self, label):
        gen = self.by_label[label]
        return XForm.binomial(self.ring, gen.lead, gen.basis)

    def initial_forms(self):
        return {lab: self.initial_form(lab) for lab in self.labels}

    def in_basis(self, m):
        r = sum(m)
        if r not in self.lam_sets:
            self._extend(r)
        return m in self.lam_sets[r]

    def basis_monomial(self, r, w):
        if r not in self.lam:
            self._extend(r)
        return self.lam[r][w]

    def _extend(self, r):
        self.lam[r] = hermitian_basis(self.S, r).by_weight(self.S)
        self.lam_sets[r] = set(self.lam[r].values())

    def name(self, label):
        """Short display name: F_{12}, F_{16,1}, G_{20,2} ..."""
        kind, s, i = label
        pool = self.quadratics if kind == "F" else self.cubics
        if sum(1 for x in pool if x.s == s) > 1:
            return f"{kind}_{{{s},{i}}}"
        return f"{kind}_{{{s}}}"

    def step(self, m):
        """One rewriting step for a monomial outside Lambda.

        Returns (multiplier, label) such that ``multiplier * lead(label)``
        equals m.  Degree 2 and 3 use the designated generator or quadric
        multiple; degree 4 peels off the variable X_k whose rewrite lands on
        the smallest monomial X_k * Lambda_3(m / X_k).
        """
        R = self.ring
        d = sum(m)
        if d in (2, 3):
            if m in self.lead_of:
                return R.one, self.lead_of[m]
            if m in self.multiples:
                return self.multiples[m]
            raise IrreducibleNonBasis(f"{R.render(m)} has no rewriting rule")
        best = None
        for k in range(R.nvars):
            if not m[k]:
                continue
            xk = tuple(1 if t == k else 0 for t in range(R.nvars))
            rest = R.div(m, xk)
            if self.in_basis(rest):
                continue
            target = R.mul(xk, self.basis_monomial(d - 1, R.weight(rest)))
            if best is None or R.key(target) < R.key(best[0]):
                mult, lab = self.step(rest)
                best = (target, R.mul(xk, mult), lab)
        if best is None:
            raise IrreducibleNonBasis(f"{R.render(m)} has no rewriting rule")
        return best[1], best[2]

    def steps(self, m):
        """Every valid (multiplier, label) rewriting m; used for order tests."""
        R = self.ring
        out = []
        for lab, gen in self.by_label.items():
            mult = R.div(m, gen.lead)
            if mult is not None:
                out.append((mult, lab))
        for mono, (xk, lab) in self.multiples.items():
            mult = R.div(m, mono)
            if mult is not None:
                out.append((R.mul(mult, xk), lab))
        return out


@dataclass
class ReductionCertificate:
    quotients: dict   # label -> XForm multiplier
    remainder: XForm


def initial_forms(S):
    """The quadratic and the non-multiple cubic binomials of the monomial curve.

    A cubic binomial X_{a}X_{b}X_{c} - (Lambda_3 monomial) is discarded when
    it is literally X_k * F for a single quadric F whose basis monomial
    times X_k is the Lambda_3 monomial.
    """
    require_odd(S)
    R = Ring(S)
    g = S.genus
    lam = {r: hermitian_basis(S, r).by_weight(S) for r in (1, 2, 3, 4)}
    quads = []
    for s in sorted(sums(S, 2)):
        parts = partitions2(S, s)
        base = R.mono(parts[0].a, parts[0].b)
        if base != lam[2][s]:
            raise InvariantFailure(f"pair basis at weight {s} disagrees with Lambda_2")
        for p in parts[1:]:
            lead = R.mono(p.a, p.b)
            if R.key(lead) <= R.key(base):
                raise InvariantFailure(f"F_{s},{p.i} leading term is not the greater one")
            quads.append(Generator(("F", s, p.i), lead, base))
    lead2 = {q.lead: q for q in quads}
    cubics, multiples = [], {}
    for sigma in sorted(sums(S, 3)):
        parts = partitions3(S, sigma)
        base = R.mono(parts[0].a, parts[0].b, parts[0].c)
        if base != lam[3][sigma]:
            raise InvariantFailure(f"triple basis at weight {sigma} disagrees with Lambda_3")
        for p in parts[1:]:
            m = R.mono(p.a, p.b, p.c)
            hit = None
            for k in range(R.nvars):
                if not m[k]:
                    continue
                xk = tuple(1 if t == k else 0 for t in range(R.nvars))
                q = lead2.get(R.div(m, xk))
                if q is not None and R.mul(xk, q.basis) == base:
                    hit = (xk, q.label)
                    break
            if hit:
                multiples[m] = hit
            else:
                cubics.append(Generator(("G", sigma, p.j), m, base))
    if len(quads) != dim_Ir(S, 2):
        raise InvariantFailure(f"{len(quads)} quadrics, expected {dim_Ir(S, 2)}")
    eta, wp = cubic_counts(S)
    if len(cubics) != wp or len(multiples) != eta:
        raise InvariantFailure(f"cubic split {len(cubics)}/{len(multiples)}, expected {wp}/{eta}")
    top = S.nongaps[-1]
    excluded = {("F", n + top, 1) for n in S.nongaps[1:g - 2]}
    excluded.add(max((c for c in cubics if c.s == 4 * g - 4), key=lambda c: c.label).label)
    return GeneratorSet(S, R, quads, cubics, lam, multiples, frozenset(excluded))


def _reduce(f, G, forms, bound=None, rng=None):
    """Core division loop; returns (quotients, remainder)."""
    R = G.ring
    f = f.copy()
    quotients = {}
    while True:
        bad = [m for m in f.terms if not G.in_basis(m)]
        if not bad:
            return quotients, f
        if rng is None:
            m = max(bad, key=R.key)
            mult, lab = G.step(m)
        else:
            m = rng.choice(sorted(bad))
            mult, lab = rng.choice(sorted(G.steps(m)))
        if bound is not None and R.weight(m) >= bound:
            raise WeightViolation(f"rewriting {R.render(m)} of weight {R.weight(m)} >= {bound}")
        p = dict(f.terms[m])
        neg = p_neg(p)
        f.iadd(forms[lab], mult, neg)
        if m in f.terms:
            raise IrreducibleNonBasis(f"rewrite of {R.render(m)} did not cancel it")
        q = quotients.setdefault(lab, XForm(R, sum(mult)))
        q.iadd(XForm.monomial(R, mult), None, p)


def divide(f, G, forms=None, check=True, rng=None):
    """Division with remainder onto the Lambda basis of f's degree.

    ``forms`` maps labels to the forms used for rewriting (default: the
    initial binomials); each must have leading coefficient 1 on the
    generator's leading monomial.  With ``rng`` the reducible monomial and
    the rewriting rule are picked at random (for confluence tests).
    """
    forms = forms or G.initial_forms()
    quotients, rem = _reduce(f, G, forms, rng=rng)
    if check:
        total = rem.copy()
        for lab, q in quotients.items():
            total.iadd(q * forms[lab])
        if total != f:
            raise InvariantFailure("division certificate does not reproduce the input")
    return ReductionCertificate(quotients, rem)


def ideal_membership(f, G):
    return divide(f, G, check=False).remainder.is_zero()


def all_monomials(R, r):
    return [R.mono(*c) for c in combinations_with_replacement(R.nongaps, r)]


def hilbert_codim(forms, r, ring):
    """Rank of the degree-r span of {monomial * form} for numeric forms.

    ``forms`` are XForms with constant coefficients; the result equals
    dim I_r when the forms cut out a canonical curve.
    """
    rows = []
    for f in forms:
        if f.degree > r or f.is_zero():
            continue
        for mult in all_monomials(ring, r - f.degree):
            row = {}
            for m, p in f.terms.items():
                c = p.get((), 0)
                if len(p) > (1 if c else 0):
                    raise ValueError("hilbert_codim needs numeric coefficients")
                if c:
                    row[ring.mul(mult, m)] = c
            if row:
                rows.append(row)
    return rank(rows)

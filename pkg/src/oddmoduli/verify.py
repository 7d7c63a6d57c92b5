"""Numeric checks on specialized parameter points.

A solved point should give forms that cut out a canonical curve: the
lifted syzygies reduce to zero, the Hilbert function is that of Lambda,
and the curve is smooth at P = (0:...:0:1) with the expected tangent.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .canonical_ideal import _reduce, all_monomials, hilbert_codim
from .errors import MissingAssignment, WeightViolation
from .linalg import rank
from .polyring import XForm, p_eval
from .syzygy import expand


def random_rational(rng, bound=97):
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def specialize(D, point):
    """Numeric forms {label: XForm} obtained by evaluating every coefficient."""
    missing = [x for x in D.params if x not in point]
    if missing:
        raise MissingAssignment(f"no value for {missing[0].render()} (and {len(missing) - 1} more)")
    out = {}
    for lab, f in D.forms.items():
        terms = {}
        for m, p in f.terms.items():
            v = p_eval(p, point)
            if v:
                terms[m] = {(): v}
        out[lab] = XForm(f.ring, f.degree, terms)
    return out


def residue_values(R, point):
    return [p_eval(e.poly, point) for e in R.entries]


def lifted_syzygies_vanish(G, syzygies, forms):
    """True when every syzygy, lifted to ``forms``, divides out exactly."""
    for rel in syzygies:
        f = expand(rel, G, forms)
        try:
            _, rem = _reduce(f, G, forms, bound=rel.weight)
        except WeightViolation:
            return False
        if not rem.is_zero():
            return False
    return True


def check_transversal_at_P(G, forms):
    """Smoothness at P with tangent line cut by X_{n_0}, ..., X_{n_{g-3}}.

    On the chart X_{2g-2} = 1 only the terms X_{2g-2}^{d-1} X_n contribute
    to the Jacobian at P.  The g-3 excluded quadrics and the excluded
    cubic must have rank g-2 on the coordinates X_{n_0}..X_{n_{g-3}}.
    """
    R = G.ring
    g = G.S.genus
    top = R.index(R.top)
    labels = sorted(G.excluded)
    cols = [R.index(n) for n in R.nongaps[:g - 2]]
    rows = []
    for lab in labels:
        f = forms.get(lab)
        if f is None:
            return False
        row = {}
        for m, p in f.terms.items():
            if m[top] == f.degree - 1:
                k = next(k for k, e in enumerate(m) if e and k != top) if f.degree > 1 else top
                if k in cols:
                    row[k] = p.get((), 0)
            elif m[top] == f.degree and p.get((), 0):
                return False   # P does not lie on the form
        rows.append({k: v for k, v in row.items() if v})
    return len(rows) == g - 2 and rank(rows) == g - 2


def expected_codim(g, r):
    return comb(r + g - 1, r) - ((2 * g - 2) * r + 1 - g)


def hilbert_rank(G, forms, r):
    """Exact dim of the degree-r span of the forms, by division.

    Every monomial outside Lambda_r is the leading monomial of one chosen
    multiple of a form, so these rows are independent; every other multiple
    reduces against them to a remainder on Lambda_r.  The rank is their
    number plus the rank of the remainders.  Without a form for every
    generator label that argument breaks, so we fall back to a plain rank.
    """
    R = G.ring
    if set(forms) != set(G.labels):
        return hilbert_codim(list(forms.values()), r, R)
    lam = {m for m in all_monomials(R, r) if G.in_basis(m)}
    outside = len(all_monomials(R, r)) - len(lam)
    rems = []
    for f in forms.values():
        if f.degree > r:
            continue
        for mult in all_monomials(R, r - f.degree):
            _, rem = _reduce(f.mul_monomial(mult), G, forms)
            if rem:
                rems.append({m: p[()] for m, p in rem.terms.items()})
    return outside + rank(rems)


def check_hilbert(G, forms, r):
    """dim I_r of the specialized forms equals that of the monomial curve."""
    return hilbert_rank(G, forms, r) == expected_codim(G.S.genus, r)


def sample_free_point(P, rng, chart=None, bound=97):
    """Random rational point of the solved family.

    With a chart result the chart coordinate is 1 and the coordinates it
    solved for are computed from the others.
    """
    pt = {}
    solved = set(chart.solved) if chart is not None else set()
    for x in P.free:
        if chart is not None and x == chart.chart:
            pt[x] = Fraction(1)
        elif x not in solved:
            pt[x] = random_rational(rng, bound)
    if chart is not None:
        for x in chart.solved:
            pt[x] = p_eval(chart.substitutions[x], pt)
    return pt


@dataclass
class SampleReport:
    residues: bool
    syzygies: bool
    transversal: bool
    hilbert: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.residues and self.syzygies and self.transversal and all(self.hilbert.values())

    @property
    def any_failure(self):
        return not self.ok


def check_point(D, R, syzygies, full, max_degree=4, hilbert_degrees=None):
    forms = specialize(D, full)
    res = all(v == 0 for v in residue_values(R, full))
    degs = hilbert_degrees or range(2, max_degree + 1)
    return SampleReport(
        residues=res,
        syzygies=lifted_syzygies_vanish(D.G, syzygies, forms),
        transversal=check_transversal_at_P(D.G, forms),
        hilbert={r: check_hilbert(D.G, forms, r) for r in degs},
    )


def perturb(P, full, rng):
    """Move one eliminated coordinate by +1 (a non-solution in general)."""
    name = rng.choice(P.order)
    out = dict(full)
    out[name] = out[name] + 1
    return out, name


@dataclass
class VerificationSummary:
    samples: int
    passed: int
    perturbed: int
    perturbed_detected: int
    failures: list = field(default_factory=list)


def run_samples(D, R, syzygies, P, samples=20, seed=0, chart=None, max_degree=4, bound=97):
    """Check ``samples`` solved points and as many perturbed ones."""
    rng = random.Random(seed)
    passed = detected = 0
    failures = []
    for k in range(samples):
        full = P.full_point(sample_free_point(P, rng, chart, bound))
        rep = check_point(D, R, syzygies, full, max_degree)
        if rep.ok:
            passed += 1
        else:
            failures.append(("solved", k, rep))
        bad, name = perturb(P, full, rng)
        # a violated residue equation already witnesses the failure
        rep2 = SampleReport(all(v == 0 for v in residue_values(R, bad)), True, True)
        if rep2.residues:
            rep2 = check_point(D, R, syzygies, bad, max_degree)
        if rep2.any_failure:
            detected += 1
        else:
            failures.append(("perturbed", k, name))
    return VerificationSummary(samples, passed, samples, detected, failures)

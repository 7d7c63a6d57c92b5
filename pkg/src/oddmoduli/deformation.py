"""Symbolic deformation of the initial generators and the residue equations.

Every generator of weight s becomes

    F = lead - basis - sum_n c * Z_n        (n in rN, n < s)

where Z_n is the Lambda_r monomial of weight n and the coefficient c has
weight s - n.  Lifting a syzygy to the deformed forms and dividing by them
leaves a remainder supported on Lambda; replacing X_n by t^n turns it into
polynomial equations in the coefficients.
"""

import re
from dataclasses import dataclass, field

from .canonical_ideal import _reduce, divide
from .errors import InvariantFailure, UnknownParameter
from .linalg import rank
from .polyring import ParamName, XForm, p_weight, substitute_t
from .syzygy import expand


@dataclass
class DeformedSet:
    G: object
    forms: dict          # label -> XForm
    params: list         # free deformation parameters, sorted
    normalized: frozenset
    valid: frozenset

    @property
    def ring(self):
        return self.G.ring


@dataclass(frozen=True)
class Residue:
    target: tuple
    m: int          # exponent of t
    weight: int     # parameter weight of the equation
    poly: dict


@dataclass
class ResidueSystem:
    entries: list
    params: list
    candidates: int = 0
    dropped: int = 0
    per_target: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)


def _pkind(label):
    return "c" if label[0] == "F" else "d"


def param_space(G):
    """All coefficient names before normalization."""
    out = []
    for gen in G.quadratics + G.cubics:
        lam = G.lam[gen.degree]
        kind, s, i = gen.label
        for n in sorted(lam):
            if n < s:
                out.append(ParamName(_pkind(gen.label), s, i, s - n))
    return out


def shares_label(name, G):
    """True when another generator of the same kind has the same weight s."""
    pool = G.quadratics if name.kind == "c" else G.cubics
    return sum(1 for x in pool if x.s == name.s) > 1


def render_param(name, G):
    return name.render(shares_label(name, G))


def param_alias(G):
    return lambda x: render_param(x, G)


_LONG = re.compile(r"^\s*([cd])\s+(\d+)\s+(\d+)\s+(\d+)\s*$")
_TEX = re.compile(r"^\s*([cd])_?\{?\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*(\d+))?\s*\}?\s*$")


def parse_param(text, G):
    """Parse ``c 12 1 4`` (kind, s, index, weight) or ``c_{12,4}`` / ``c_{16,1,8}``."""
    valid = set(param_space(G))
    m = _LONG.match(text)
    if m:
        kind, s, i, w = m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4))
        name = ParamName(kind, s, i, w)
    else:
        m = _TEX.match(text)
        if not m:
            raise UnknownParameter(f"cannot parse parameter name {text!r}")
        kind, s = m.group(1), int(m.group(2))
        if m.group(4) is not None:
            name = ParamName(kind, s, int(m.group(3)), int(m.group(4)))
        else:
            w = int(m.group(3))
            hits = [x for x in valid if x.kind == kind and x.s == s and x.w == w]
            if len(hits) != 1:
                raise UnknownParameter(f"{text!r} matches {len(hits)} parameters")
            name = hits[0]
    if name not in valid:
        raise UnknownParameter(f"{text!r} is not a coefficient of this semigroup")
    return name


def read_normalization_file(path, G):
    names = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                names.append(parse_param(line, G))
    return frozenset(names)


# Normalizations used in the two worked examples (kind, s, index, weight).
_PINNED = {
    (5, 6, 7, 8): [("c", 12, 1, 1), ("c", 12, 1, 2), ("c", 12, 1, 7), ("c", 13, 1, 1),
                   ("c", 13, 1, 2), ("c", 13, 1, 3), ("c", 13, 1, 8), ("d", 16, 1, 1),
                   ("d", 16, 1, 6), ("d", 21, 2, 5)],
    (6, 7, 8, 9, 10): [("c", 14, 1, 1), ("c", 15, 1, 1), ("c", 16, 1, 1), ("d", 18, 2, 1),
                       ("d", 18, 2, 2), ("c", 15, 1, 2), ("c", 16, 1, 2), ("c", 15, 1, 3),
                       ("c", 16, 1, 3), ("c", 16, 1, 4), ("c", 15, 1, 6), ("c", 14, 1, 7),
                       ("c", 14, 1, 8), ("c", 15, 1, 9), ("c", 16, 1, 10)],
}


def default_normalizations(G):
    """g(g-1)/2 coefficients set to zero by triangular coordinate changes."""
    pinned = _PINNED.get(tuple(G.S.generators))
    if pinned is not None:
        return frozenset(ParamName(*x) for x in pinned)
    return greedy_normalizations(G)


def transformation_tangents(G):
    """Linearized action of X_{n_i} -> X_{n_i} + lam * X_{n_j}, n_j < n_i.

    Returns a list of (weight, n_i, n_j, vector) where the vector maps
    coefficient names to their first-order change.
    """
    R = G.ring
    forms = G.initial_forms()
    out = []
    ng = R.nongaps
    for i in range(1, len(ng)):
        for j in range(i):
            vec = {}
            for gen in G.quadratics + G.cubics:
                f = forms[gen.label]
                delta = XForm(R, gen.degree)
                k = R.index(ng[i])
                xj = R.var(ng[j])
                for m, p in f.terms.items():
                    e = m[k]
                    if e:
                        mm = list(m)
                        mm[k] -= 1
                        delta.iadd(XForm.monomial(R, tuple(mm)), xj, {(): e * p[()]})
                rem = divide(delta, G, forms, check=False).remainder
                for mono, p in rem.terms.items():
                    w = gen.s - R.weight(mono)
                    c = p.get((), 0)
                    if c and w > 0:
                        vec[ParamName(_pkind(gen.label), gen.s, gen.label[2], w)] = -c
            out.append((ng[i] - ng[j], ng[i], ng[j], vec))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def greedy_normalizations(G):
    """Pick, per transformation in increasing weight, the lowest-label
    coefficient it moves while keeping the chosen columns independent."""
    def label_key(x):
        return (x.kind, x.s, x.i, x.w)

    tangents = [v for _, _, _, v in transformation_tangents(G)]
    chosen = []
    for t, vec in enumerate(tangents):
        for name in sorted(vec, key=label_key):
            if name in chosen:
                continue
            cols = chosen + [name]
            rows = [{c: v[c] for c in cols if v.get(c)} for v in tangents[:t + 1]]
            if rank(rows) == t + 1:
                chosen.append(name)
                break
        else:
            raise InvariantFailure("transformation moves no new coefficient")
    g = G.S.genus
    if len(chosen) != g * (g - 1) // 2:
        raise InvariantFailure(f"{len(chosen)} normalizations chosen")
    return frozenset(chosen)


def pre_deform(G, normalized=None):
    """Attach coefficients to every generator, dropping the normalized ones."""
    normalized = frozenset(default_normalizations(G) if normalized is None else normalized)
    valid = frozenset(param_space(G))
    bad = normalized - valid
    if bad:
        raise UnknownParameter(f"not coefficients of this semigroup: {sorted(bad)}")
    R = G.ring
    forms = {}
    params = []
    for gen in G.quadratics + G.cubics:
        f = XForm.binomial(R, gen.lead, gen.basis)
        lam = G.lam[gen.degree]
        kind, s, i = gen.label
        for n in sorted(lam):
            if n >= s:
                continue
            name = ParamName(_pkind(gen.label), s, i, s - n)
            if name in normalized:
                continue
            params.append(name)
            f.iadd(XForm.monomial(R, lam[n]), None, {(name,): -1})
        if f.weight() != s:
            raise InvariantFailure(f"deformed {G.name(gen.label)} is not isobaric")
        forms[gen.label] = f
    params.sort(key=ParamName.sort_key)
    return DeformedSet(G, forms, params, normalized, valid)


def lift_and_reduce(D, rel):
    """Remainder of the lifted syzygy after division by the deformed forms."""
    f = expand(rel, D.G, D.forms)
    _, rem = _reduce(f, D.G, D.forms, bound=rel.weight)
    return rem


def residue_system(D, syzygies):
    """Quasi-homogeneous equations from every lifted syzygy."""
    G = D.G
    entries = []
    candidates = dropped = 0
    per_target = {}
    for rel in syzygies:
        d = G.by_label[rel.target].degree + 1
        W = rel.weight
        G.basis_monomial(d, 0)
        cands = [w for w in G.lam[d] if w < W]
        candidates += len(cands)
        tp = substitute_t(lift_and_reduce(D, rel))
        got = 0
        for m in sorted(tp):
            if m >= W:
                raise InvariantFailure(f"remainder term t^{m} at or above weight {W}")
            poly = tp[m]
            if p_weight(poly) != W - m:
                raise InvariantFailure(f"residue of {G.name(rel.target)} at t^{m} is not isobaric")
            entries.append(Residue(rel.target, m, W - m, poly))
            got += 1
        dropped += len(cands) - got
        per_target[rel.target] = got
    entries.sort(key=lambda e: (e.target, e.weight))
    return ResidueSystem(entries, list(D.params), candidates, dropped, per_target)

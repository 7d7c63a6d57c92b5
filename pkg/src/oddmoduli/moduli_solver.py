"""Weight-by-weight solution of the residue system.

Because every equation is isobaric, a parameter of weight w can only occur
linearly, with a constant coefficient, in an equation of weight w.  After
substituting the solutions of lower weight, each weight class is therefore
a linear system in its own parameters; what cannot be pivoted becomes a
residual equation in the free coordinates.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantFailure, NonTriangularEquation, ZeroScale
from .linalg import Echelon
from .polyring import ParamName, p_degree, p_eval, p_mul, p_names, p_subst
from .tangent import label_rank


@dataclass
class ModuliPresentation:
    free: list
    eliminations: dict          # ParamName -> ParamPoly in free names
    residual: list              # minimal generators: (weight, ParamPoly)
    raw_residual: list          # every leftover equation: (weight, ParamPoly)
    redundant_count: int
    alpha: list
    order: list = field(default_factory=list)   # elimination order
    minimal: bool = True                        # residual reduced to minimal generators

    def classes(self):
        """Sizes of the zero / linear / quadratic / higher eliminations."""
        out = {"zero": 0, "linear": 0, "quadratic": 0, "higher": 0}
        for p in self.eliminations.values():
            d = p_degree(p)
            out["zero" if d < 0 else "linear" if d == 1 else "quadratic" if d == 2 else "higher"] += 1
        return out

    def full_point(self, point):
        """Extend an assignment of the free names to every parameter."""
        full = dict(point)
        for name in self.order:
            full[name] = p_eval(self.eliminations[name], full)
        return full


def _entries(R):
    return [(e.weight, e.poly) for e in getattr(R, "entries", R)]


# Above this many leftover equations the minimal-generator span test is
# skipped and the raw list is reported instead.
MINIMAL_LIMIT = 64


def solve_by_weight(R, params, pivot_key=label_rank, minimal=True):
    """Solve ``R`` (residue entries or (weight, poly) pairs) in ascending weight."""
    eqs = _entries(R)
    params = sorted(params, key=ParamName.sort_key)
    by_w = {}
    for w, poly in eqs:
        by_w.setdefault(w, []).append(poly)
    sol, order, free, raw = {}, [], [], []
    redundant = 0
    for w in sorted({x.w for x in params} | set(by_w)):
        cols = {x for x in params if x.w == w}
        E = Echelon(pivot_of=lambda v: max((k for k in v if len(k) == 1 and k[0] in cols),
                                           key=lambda k: pivot_key(k[0])))
        for poly in by_w.get(w, []):
            row = E.reduce(p_subst(poly, sol))
            if not row:
                redundant += 1
                continue
            if not any(len(k) == 1 and k[0] in cols for k in row):
                raw.append((w, row))
                continue
            for k in row:
                if len(k) > 1 and any(x in cols for x in k):
                    raise NonTriangularEquation(f"weight {w}: pivot with non-unit coefficient")
            E.add(row)
        for piv, row in E.rows.items():
            sol[piv[0]] = {k: -c for k, c in row.items() if k != piv}
            order.append(piv[0])
        free += [x for x in sorted(cols, key=ParamName.sort_key) if (x,) not in E.rows]
    # later pivots never feed earlier ones, but same-weight rows are reduced
    for name in order:
        if any(x in sol for x in p_names(sol[name])):
            raise InvariantFailure(f"elimination of {name} is not triangular")
    minimal = minimal and len(raw) <= MINIMAL_LIMIT
    residual = minimal_generators(raw, free) if minimal else list(raw)
    return ModuliPresentation(free, {k: sol[k] for k in order}, residual, raw,
                              redundant, sorted(x.w for x in free), order, minimal)


def _monomials_of_weight(free, W):
    """All multisets of free names whose weights add to W."""
    out = []

    def rec(start, rem, cur):
        if rem == 0:
            out.append(tuple(cur))
            return
        for j in range(start, len(free)):
            if free[j].w <= rem:
                rec(j, rem - free[j].w, cur + [free[j]])

    rec(0, W, [])
    return out


def _tkey(k):
    return (len(k), tuple(x.sort_key() for x in k))


def minimal_generators(raw, free):
    """Drop residual equations lying in the ideal of the earlier kept ones.

    The ideal is graded, so membership at weight w is a linear span test
    against monomial multiples of the kept generators of lower weight.
    """
    free = sorted(free, key=ParamName.sort_key)
    kept = []
    spans = {}
    for w, r in sorted(raw, key=lambda t: t[0]):
        if w not in spans:
            E = Echelon(pivot_of=lambda v: max(v, key=_tkey))
            for w2, r2 in kept:
                for m in _monomials_of_weight(free, w - w2):
                    E.add(p_mul({tuple(sorted(m, key=ParamName.sort_key)): 1}, r2))
            spans[w] = E
        E = spans[w]
        if E.add(r) is not None:
            kept.append((w, r))
            for w3 in [x for x in spans if x > w]:
                del spans[w3]
    return kept


def gm_action(P, scale, point):
    """Weighted scaling x -> scale^weight * x of a point in free coordinates."""
    if not scale:
        raise ZeroScale("the scaling factor must be nonzero")
    scale = Fraction(scale)
    return {x: v * scale ** x.w for x, v in point.items()}


@dataclass
class ChartResult:
    chart: ParamName
    dimension: int
    conclusive: bool
    solved: list          # names eliminated on the chart, in order
    substitutions: dict   # name -> ParamPoly in the remaining coordinates
    remaining: list       # equations still unsolved


def _unit_candidates(poly):
    """Names occurring only in the linear term c*x with c a rational."""
    lin = {k[0]: c for k, c in poly.items() if len(k) == 1}
    out = []
    for x in lin:
        if all(x not in k for k in poly if len(k) != 1):
            out.append(x)
    return out


def chart_dimension(P, chart, pivot_key=label_rank):
    """Dimension of the residual locus on the affine chart ``chart = 1``."""
    if chart.w <= 0 or chart not in P.free:
        raise InvariantFailure(f"{chart} is not a free coordinate of positive weight")
    one = {chart: {(): 1}}
    eqs = [p_subst(r, one) for _, r in P.residual]
    eqs = [e for e in eqs if e]
    coords = [x for x in P.free if x != chart]
    solved, subs = [], {}
    while eqs:
        pick = None
        for idx, e in enumerate(eqs):
            cands = _unit_candidates(e)
            if cands:
                x = max(cands, key=lambda y: (y.w, pivot_key(y)))
                pick = (idx, x)
                break
        if pick is None:
            break
        idx, x = pick
        e = eqs.pop(idx)
        c = e[(x,)]
        val = {k: Fraction(-v) / c for k, v in e.items() if k != (x,)}
        for y in subs:
            subs[y] = p_subst(subs[y], {x: val})
        subs[x] = val
        solved.append(x)
        eqs = [q for q in (p_subst(q, {x: val}) for q in eqs) if q]
    remaining = len(coords) - len(solved)
    conclusive = not eqs
    dim = remaining if conclusive else remaining - len(eqs)
    return ChartResult(chart, dim, conclusive, solved, subs, eqs)


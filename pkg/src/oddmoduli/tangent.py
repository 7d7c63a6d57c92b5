"""Negatively graded tangent space from the linearized residue equations."""

from collections import Counter
from dataclasses import dataclass, field

from .errors import InconsistentLinearSystem
from .linalg import Echelon
from .polyring import ParamName, p_linear_part, p_weight


def label_rank(name):
    """Pivot preference: the latest generator label is eliminated first."""
    return (name.kind, name.s, name.i)


@dataclass
class GradedDims:
    free: list
    dims: dict
    alpha: list
    eliminations: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.free)


def linearize(R):
    """Degree-one parts of the residue equations, zero results dropped."""
    out = []
    for e in getattr(R, "entries", R):
        poly = e.poly if hasattr(e, "poly") else e[1]
        if () in poly and poly[()]:
            raise InconsistentLinearSystem("residue equation with a constant term")
        lin = p_linear_part(poly)
        if lin:
            out.append((p_weight(lin), {k[0]: v for k, v in lin.items()}))
    return out


def solve_T1(linear, params, pivot_key=label_rank):
    """Exact elimination weight by weight; returns the free names and grading.

    ``linear`` is a list of (weight, {name: coefficient}).  Within a weight
    class the pivot is the name maximizing ``pivot_key``.
    """
    params = sorted(params, key=ParamName.sort_key)
    by_w = {}
    for w, row in linear:
        if any(x.w != w for x in row):
            raise InconsistentLinearSystem(f"linear equation of weight {w} mixes weights")
        by_w.setdefault(w, []).append(row)
    free, elim = [], {}
    for w in sorted({x.w for x in params}):
        E = Echelon(pivot_of=lambda v: max(v, key=pivot_key))
        for row in by_w.get(w, []):
            E.add(row)
        for piv, row in E.rows.items():
            elim[piv] = {(x,): -c for x, c in row.items() if x != piv}
        free += [x for x in params if x.w == w and x not in E.rows]
    dims = dict(sorted(Counter(x.w for x in free).items()))
    return GradedDims(free, dims, sorted(x.w for x in free), elim)

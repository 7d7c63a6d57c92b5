"""Small exact sparse linear algebra over the rationals."""

from fractions import Fraction


class Echelon:
    """Incrementally built reduced row-echelon basis of sparse vectors.

    Vectors are dicts ``{column: coefficient}``.  Each stored row is scaled
    so its pivot entry is 1, and no stored row has a nonzero entry in
    another row's pivot column.  ``pivot_of`` chooses the pivot column of
    a freshly reduced vector.
    """

    def __init__(self, pivot_of=max):
        self.rows = {}  # pivot column -> row
        self.pivot_of = pivot_of

    def reduce(self, v):
        v = dict(v)
        for c in [c for c in v if c in self.rows]:
            a = v.get(c)
            if a:
                _axpy(v, self.rows[c], -a)
        return v

    def add(self, v):
        """Insert v; returns its pivot column or None when v is dependent."""
        v = self.reduce(v)
        if not v:
            return None
        c = self.pivot_of(v)
        a = v[c]
        v = {k: Fraction(x) / a for k, x in v.items()}
        for row in self.rows.values():
            b = row.get(c)
            if b:
                _axpy(row, v, -b)
        self.rows[c] = v
        return c

    def __len__(self):
        return len(self.rows)

    def contains(self, v):
        return not self.reduce(v)


def _axpy(y, x, a):
    for k, v in x.items():
        nv = y.get(k, 0) + a * v
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def rank(rows):
    """Exact rank of a list of sparse rows."""
    E = Echelon()
    for r in rows:
        E.add(r)
    return len(E)

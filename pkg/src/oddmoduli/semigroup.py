"""Numerical semigroup arithmetic.

Gaps and symmetry, partitions of an integer into two or three canonical
nongaps, the monomial bases Lambda_r and the generator counts for the odd
symmetric semigroups <g, g+1, ..., 2g-2>.

Monomials are exponent tuples indexed by the canonical nongaps
n_0 = 0 < n_1 < ... < n_{g-1}; position k carries the exponent of X_{n_k}.
"""

from dataclasses import dataclass
from functools import reduce
from math import comb, gcd
from typing import NamedTuple

from .errors import (EmptyGenerators, GenusTooSmall, Hyperelliptic,
                     InvariantFailure, NoPartition, NotCoprime, NotOddType)


@dataclass(frozen=True)
class Semigroup:
    generators: tuple
    genus: int
    gaps: tuple
    frobenius: int
    nongaps: tuple  # the first g nongaps, n_0 = 0

    def __contains__(self, n):
        return n >= 0 and n not in self._gapset

    @property
    def _gapset(self):
        return frozenset(self.gaps)

    @property
    def top(self):
        """Largest canonical nongap (2g-2 for symmetric semigroups)."""
        return self.nongaps[-1]

    def index(self, n):
        return self.nongaps.index(n)

    def mono(self, *ns):
        """Exponent tuple of the product X_{ns[0]} X_{ns[1]} ..."""
        e = [0] * len(self.nongaps)
        for n in ns:
            e[self.nongaps.index(n)] += 1
        return tuple(e)

    def weight(self, m):
        return sum(e * n for e, n in zip(m, self.nongaps))

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"


class PairPartition(NamedTuple):
    s: int
    i: int
    a: int
    b: int


class TriplePartition(NamedTuple):
    s: int
    j: int
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class HermitianBasis:
    r: int
    monomials: tuple  # exponent tuples sorted by weight

    def by_weight(self, S):
        return {S.weight(m): m for m in self.monomials}


def from_generators(gens):
    """Build the semigroup generated by ``gens``.

    The gap set is found with a sieve.  Once gcd = 1 every integer beyond
    the Frobenius number is reachable, so the sieve stops after a run of
    min(gens) consecutive members.
    """
    gens = [int(x) for x in gens]
    if not gens:
        raise EmptyGenerators("no generators given")
    if any(x <= 0 for x in gens):
        raise NotCoprime("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise NotCoprime(f"gcd of {gens} is {reduce(gcd, gens)}; complement is infinite")
    gens = sorted(set(gens))
    small = gens[0]
    member = [True]
    n, run = 0, 1
    while run < small:
        n += 1
        ok = any(n >= x and member[n - x] for x in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    gaps = tuple(k for k in range(len(member)) if not member[k])
    genus = len(gaps)
    frob = max(gaps) if gaps else -1
    # extend far enough to list g nongaps and to check closure up to 2*frob
    limit = max(2 * frob + 1, 2 * genus + 1, 1)
    while len(member) <= limit:
        member.append(True)
    nongaps = tuple([k for k in range(len(member)) if member[k]][:max(genus, 1)])
    return Semigroup(tuple(gens), genus, gaps, frob, nongaps)


def is_symmetric(S):
    """Frobenius number equals 2g-1; the reflection test must agree."""
    g = S.genus
    if g == 0:
        return True
    by_frob = S.frobenius == 2 * g - 1
    # l_i + n_{g-i} = l_g for every i when symmetric
    by_reflection = all(S.gaps[i - 1] + S.nongaps[g - i] == S.frobenius
                        for i in range(1, g + 1))
    if by_frob != by_reflection:
        raise InvariantFailure(f"symmetry tests disagree for {S}")
    return by_frob


def is_odd_type(S):
    g = S.genus
    return g >= 2 and S.gaps == tuple(range(1, g)) + (2 * g - 1,)


def is_hyperelliptic(S):
    return 2 in S and S.genus > 0


def require_odd(S, min_genus=5):
    if not is_odd_type(S):
        raise NotOddType(f"{S} is not of the form <g, g+1, ..., 2g-2>")
    if S.genus < min_genus:
        raise GenusTooSmall(f"genus {S.genus} < {min_genus} is not supported")


def partitions2(S, s):
    """Pairs a <= b of canonical nongaps with a + b = s.

    Sorted by increasing a, so index 0 is the pair used in the Lambda_2
    basis and X_{a_{si}} X_{b_{si}} with i >= 1 are the leading terms.
    """
    ng = S.nongaps
    out = [(a, s - a) for a in ng if a <= s - a and (s - a) in ng]
    if not out:
        raise NoPartition(f"{s} is not a sum of two canonical nongaps of {S}")
    return [PairPartition(s, i, a, b) for i, (a, b) in enumerate(out)]


def _mono_key(S, m):
    # local copy of the monomial order so this module stays self-contained
    k = len(m)
    return (sum(m), S.weight(m), -m[0]) + tuple(-m[t] for t in range(k - 1, 0, -1))


def partitions3(S, sigma):
    """Triples a <= b <= c of canonical nongaps summing to ``sigma``.

    Entries are sorted increasingly in the monomial order, so index 0 is
    the Lambda_3 basis monomial.  For the odd semigroups this is also
    increasing in a, but b need not decrease (g = 6, sigma = 20 gives
    (0,10,10), (6,6,8), (6,7,7)).
    """
    ng = S.nongaps
    out = []
    for x, a in enumerate(ng):
        for y in range(x, len(ng)):
            b = ng[y]
            c = sigma - a - b
            if c < b:
                break
            if c in ng:
                out.append((a, b, c))
    if not out:
        raise NoPartition(f"{sigma} is not a sum of three canonical nongaps of {S}")
    out.sort(key=lambda t: _mono_key(S, S.mono(*t)))
    return [TriplePartition(sigma, j, *t) for j, t in enumerate(out)]


def sums(S, r):
    """The set rN of weights of degree-r monomials in canonical variables."""
    acc = {0}
    for _ in range(r):
        acc = {x + n for x in acc for n in S.nongaps}
    return acc


def hermitian_basis(S, r):
    """The monomial basis Lambda_r, one monomial per weight in rN.

    Built from the three explicit families: X_0^{r-1} X_n, the
    X_{2g-2}-padded minimal pairs X_{a_s} X_{b_s}, and the padded
    X_{n_1} X_{2g-n_1} X_{n_{g-2}}.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if is_hyperelliptic(S):
        raise Hyperelliptic(f"{S} contains 2")
    g = S.genus
    ng = S.nongaps
    if r == 1:
        return HermitianBasis(1, tuple(S.mono(n) for n in ng))
    top = ng[-1]
    mons = [S.mono(*([0] * (r - 1) + [n])) for n in ng]
    for s in range(2 * g, 4 * g - 3):
        try:
            a, b = partitions2(S, s)[0][2:]
        except NoPartition:
            continue
        for i in range(r - 1):
            mons.append(S.mono(*([0] * (r - 2 - i) + [a, b] + [top] * i)))
    n1 = ng[1]
    for i in range(r - 2):
        mons.append(S.mono(*([0] * (r - 3 - i) + [n1, 2 * g - n1, ng[-2]] + [top] * i)))
    ws = [S.weight(m) for m in mons]
    if len(set(ws)) != len(ws) or set(ws) != sums(S, r):
        raise InvariantFailure(f"Lambda_{r} families do not cover {r}N for {S}")
    mons.sort(key=S.weight)
    return HermitianBasis(r, tuple(mons))


def dim_Ir(S, r):
    """Dimension of the degree-r piece of the canonical ideal."""
    g = S.genus
    return comb(r + g - 1, r) - (2 * r - 1) * (g - 1)


def cubic_counts(S):
    """Return (eta, wp): cubic binomials that are / are not quadric multiples.

    eta follows the closed formula for odd semigroups; wp is what is left
    of dim I_3.
    """
    require_odd(S)
    g = S.genus
    eta = (g - 3) * (g - 2) + (g - 2) * ((g - 2) // 2) + (g - 3) // 2
    eta += sum((g - 2 - j) // 2 for j in range(1, g - 3))
    wp = dim_Ir(S, 3) - eta
    return eta, wp

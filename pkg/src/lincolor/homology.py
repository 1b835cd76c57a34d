"""Exact reduced simplicial homology over the integers.

Boundary matrices use the ascending vertex order for signs; the augmented
chain complex has C_{-1} = Z. Smith normal form is computed with Python
integers, so there is no overflow, and returns unimodular transforms that
callers can check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .complex import SimplicialComplex
from .errors import BoundViolated


def boundary_matrices(d: SimplicialComplex):
    """``{i: matrix of d_i : C_i -> C_{i-1}}`` for i = 0..dim, plus the bases.

    d_0 is the augmentation C_0 -> Z. Matrices are lists of rows of ints.
    Returns ``(mats, bases)`` where ``bases[i]`` lists the i-faces as sorted
    tuples (``bases[-1] == [()]``).
    """
    by_dim = d.faces_by_dim()
    bases = {-1: [()]}
    for i in range(d.dim + 1):
        bases[i] = by_dim.get(i, [])
    mats = {}
    for i in range(d.dim + 1):
        rows = {f: r for r, f in enumerate(bases[i - 1])}
        m = [[0] * len(bases[i]) for _ in bases[i - 1]]
        for c, face in enumerate(bases[i]):
            for j in range(len(face)):
                sub = face[:j] + face[j + 1:]
                m[rows[sub]][c] += -1 if j % 2 else 1
        mats[i] = m
    return mats, bases


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass
class SmithForm:
    """``U @ M @ V == D`` with D diagonal; ``invariants`` are its nonzero entries."""

    invariants: list
    U: list
    V: list
    D: list

    @property
    def rank(self):
        return len(self.invariants)


def smith_normal_form(m) -> SmithForm:
    """Smith normal form with unimodular row and column transforms.

    Pivots are the smallest nonzero entry in absolute value; a pivot that
    does not divide the rest of the block is fixed by adding that row.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if not done:
                # move the smallest remaining entry of row/column t to the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    invariants = [a[i][i] for i in range(min(rows, cols)) if a[i][i]]
    return SmithForm(invariants, U, V, a)


def determinant(m):
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def verify_smith_form(m, snf: SmithForm) -> bool:
    """Check U M V == D, D diagonal with a divisibility chain, U and V unimodular."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows and cols and matmul(matmul(snf.U, m), snf.V) != snf.D:
        return False
    for i in range(rows):
        for j in range(cols):
            if i != j and snf.D[i][j]:
                return False
    diag = [snf.D[i][i] for i in range(min(rows, cols))]
    nz = [x for x in diag if x]
    if diag[: len(nz)] != nz or any(x < 0 for x in nz):
        return False
    if any(b % a for a, b in zip(nz, nz[1:])):
        return False
    return abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero reduced homology groups: ``{i: (betti, torsion_tuple)}``.

    H~_{-1} of a nonempty complex is reported as 0 here; the convention
    H~_{-1} = Z is applied inside :attr:`homdim` only.
    """

    groups: dict = field(default_factory=dict)
    dim: int = field(default=-1, compare=False)

    def betti(self, i):
        return self.groups.get(i, (0, ()))[0]

    def torsion(self, i):
        return self.groups.get(i, (0, ()))[1]

    def is_zero(self, i):
        return i not in self.groups

    @property
    def is_acyclic(self):
        return not self.groups

    @property
    def homdim(self):
        return max([-1] + [i for i in self.groups if i >= 0])

    def euler_characteristic(self):
        """Reduced Euler characteristic from ranks."""
        return sum((-1) ** i * r for i, (r, _) in self.groups.items())

    def __str__(self):
        if not self.groups:
            return "acyclic"
        parts = []
        for i in sorted(self.groups):
            r, tors = self.groups[i]
            terms = ([f"Z^{r}" if r > 1 else "Z"] if r else []) + [f"Z/{t}" for t in tors]
            parts.append(f"H{i}=" + "+".join(terms))
        return " ".join(parts)


@lru_cache(maxsize=1 << 16)
def _homology_of(facets):
    d = SimplicialComplex(facets)
    if d.is_empty:
        return HomologyProfile({-1: (1, ())}, -1)
    mats, bases = boundary_matrices(d)
    ranks = {}
    torsion = {}
    for i, m in mats.items():
        snf = smith_normal_form(m)
        ranks[i] = snf.rank
        torsion[i - 1] = tuple(x for x in snf.invariants if x > 1)
    groups = {}
    for i in range(-1, d.dim + 1):
        free = len(bases[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        tors = torsion.get(i, ())
        if free or tors:
            groups[i] = (free, tors)
    return HomologyProfile(groups, d.dim)


def reduced_homology(d: SimplicialComplex) -> HomologyProfile:
    return _homology_of(d.facets)


def homdim(d: SimplicialComplex) -> int:
    return reduced_homology(d).homdim


def reduced_euler_characteristic(d: SimplicialComplex) -> int:
    """From face counts: -1 + f_0 - f_1 + ..."""
    return -1 + sum((-1) ** i * n for i, n in enumerate(d.f_vector()))


@dataclass(frozen=True)
class BoundCheck:
    k: int
    lchr: int
    homdim: int
    vanishing_above_k: bool
    lchr_bound: bool | None


def dimension_bound_check(d: SimplicialComplex, k: int) -> BoundCheck:
    """H~_i(d) = 0 for i >= k, and lchr >= homdim + 2 when d is not acyclic."""
    from .coloring import lchr

    lc = lchr(d)[0]
    if k < lc:
        raise ValueError(f"{k} colours are fewer than lchr = {lc}")
    h = reduced_homology(d)
    vanishing = all(i < k for i in h.groups)
    if not vanishing:
        raise BoundViolated(f"nonzero homology in degree >= {k}: {h}")
    bound = None
    if not h.is_acyclic:
        bound = lc >= h.homdim + 2
        if not bound:
            raise BoundViolated(f"lchr {lc} < homdim {h.homdim} + 2")
    return BoundCheck(k, lc, h.homdim, vanishing, bound)

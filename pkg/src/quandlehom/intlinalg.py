"""Exact integer linear algebra.

Everything in this module works over plain Python integers, so all results
are exact regardless of entry size.  The central tool is the Smith normal
form, from which we derive kernels, integer solving, canonical bases of
congruence lattices, and the invariant factors of finitely generated
abelian groups presented as Ker/Im of a pair of boundary maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NotAComplexError,
    NotAUnitError,
    ShapeMismatchError,
)


class IntMatrix:
    """Dense integer matrix, stored row-major as lists of Python ints."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, shape=None):
        data = [list(row) for row in data]
        if shape is not None:
            rows, cols = shape
        else:
            rows = len(data)
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ShapeMismatchError(f"ragged data for a {rows}x{cols} matrix")
        for row in data:
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError(f"matrix entries must be int, got {e!r}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, size):
        return cls([[int(i == j) for j in range(size)] for i in range(size)])

    @classmethod
    def from_columns(cls, columns, rows=None):
        """Build a matrix whose j-th column is ``columns[j]``."""
        if rows is None:
            rows = len(columns[0]) if columns else 0
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(data, shape=(rows, len(columns)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.shape == other.shape
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self):
        return f"IntMatrix({self.data!r})"

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        bt = list(zip(*other.data)) if other.data else []
        out = []
        for row in self.data:
            if bt:
                out.append([sum(x * y for x, y in zip(row, col)) for col in bt])
            else:
                out.append([0] * other.cols)
        return IntMatrix(out, shape=(self.rows, other.cols))

    def transpose(self):
        return IntMatrix(
            [list(col) for col in zip(*self.data)], shape=(self.cols, self.rows)
        )

    def column(self, j):
        return [row[j] for row in self.data]

    def diagonal(self):
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def is_zero(self):
        return all(e == 0 for row in self.data for e in row)


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization d = u @ matrix @ v with u, v unimodular.

    ``v_inv`` is the inverse of ``v``; it comes for free from the column
    bookkeeping and saves a separate inversion when extracting kernels.
    Transform fields are None unless transforms were requested.
    """

    d: IntMatrix
    u: IntMatrix | None = None
    v: IntMatrix | None = None
    v_inv: IntMatrix | None = None

    @property
    def rank(self):
        return sum(1 for e in self.d.diagonal() if e != 0)


@dataclass(frozen=True)
class AbelianInvariants:
    """Canonical form of a finitely generated abelian group.

    ``rank`` counts free summands; ``torsion`` is the invariant-factor
    chain, each entry at least 2 and dividing the next.  Two groups are
    isomorphic iff their invariants compare equal.
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for i, t in enumerate(self.torsion):
            if t < 2:
                raise ValueError(f"torsion factor {t} is not >= 2")
            if i and self.torsion[i - 1] != 0 and t % self.torsion[i - 1]:
                raise ValueError(f"torsion chain broken: {self.torsion}")

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def multiplicative_order(t, n):
    """Smallest d >= 1 with t**d == 1 (mod n); requires gcd(t, n) == 1."""
    if n < 1:
        raise NotAUnitError(f"modulus must be >= 1, got {n}")
    if math.gcd(t, n) != 1:
        raise NotAUnitError(f"{t} is not a unit modulo {n}")
    one = 1 % n
    d = 1
    x = t % n
    while x != one:
        x = x * t % n
        d += 1
    return d


def smith_normal_form(matrix, transforms=False):
    """Smith normal form of an integer matrix.

    Returns a SmithForm whose ``d`` is diagonal with non-negative entries
    d_1 | d_2 | ... .  With ``transforms=True`` it also carries unimodular
    u, v (and v's inverse) such that d == u @ matrix @ v.

    Pivots are chosen with smallest nonzero absolute value to limit entry
    growth; all arithmetic is exact.
    """
    a = [row[:] for row in matrix.data]
    nr, nc = matrix.rows, matrix.cols
    if transforms:
        u = [[int(i == j) for j in range(nr)] for i in range(nr)]
        v = [[int(i == j) for j in range(nc)] for i in range(nc)]
        vinv = [[int(i == j) for j in range(nc)] for i in range(nc)]
    else:
        u = v = vinv = None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if transforms:
            u[i], u[j] = u[j], u[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if transforms:
            u[i] = [-x for x in u[i]]

    def add_row(i, src, q):
        # R_i <- R_i - q*R_src
        ai, asrc = a[i], a[src]
        for jj in range(nc):
            ai[jj] -= q * asrc[jj]
        if transforms:
            ui, usrc = u[i], u[src]
            for jj in range(nr):
                ui[jj] -= q * usrc[jj]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in v:
                row[i], row[j] = row[j], row[i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_col(j, src, q):
        # C_j <- C_j - q*C_src; the inverse op accumulates on vinv rows
        for row in a:
            row[j] -= q * row[src]
        if transforms:
            for row in v:
                row[j] -= q * row[src]
            vj, vsrc = vinv[j], vinv[src]
            for jj in range(nc):
                vsrc[jj] += q * vj[jj]

    def find_pivot(s):
        best = None
        best_abs = 0
        for i in range(s, nr):
            rowi = a[i]
            for j in range(s, nc):
                e = rowi[j]
                if e and (best is None or -best_abs < e < best_abs):
                    best, best_abs = (i, j), abs(e)
                    if best_abs == 1:
                        return best
        return best

    for s in range(min(nr, nc)):
        piv = find_pivot(s)
        if piv is None:
            break
        while True:
            i0, j0 = piv
            if i0 != s:
                swap_rows(s, i0)
            if j0 != s:
                swap_cols(s, j0)
            if a[s][s] < 0:
                negate_row(s)
            p = a[s][s]
            for i in range(s + 1, nr):
                if a[i][s]:
                    add_row(i, s, a[i][s] // p)
            for j in range(s + 1, nc):
                if a[s][j]:
                    add_col(j, s, a[s][j] // p)
            # leftover remainders in the cross become the next, smaller pivot
            piv = None
            best_abs = 0
            for i in range(s + 1, nr):
                e = a[i][s]
                if e and (piv is None or abs(e) < best_abs):
                    piv, best_abs = (i, s), abs(e)
            for j in range(s + 1, nc):
                e = a[s][j]
                if e and (piv is None or abs(e) < best_abs):
                    piv, best_abs = (s, j), abs(e)
            if piv is not None:
                continue
            # cross is clear: force the pivot to divide the trailing block
            p = a[s][s]
            offender = None
            for i in range(s + 1, nr):
                rowi = a[i]
                for j in range(s + 1, nc):
                    if rowi[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(s, offender, -1)
            piv = (s, s)

    result = IntMatrix(a, shape=(nr, nc))
    if transforms:
        return SmithForm(
            result,
            IntMatrix(u, shape=(nr, nr)),
            IntMatrix(v, shape=(nc, nc)),
            IntMatrix(vinv, shape=(nc, nc)),
        )
    return SmithForm(result)


def invariant_factors(matrix):
    """Nonzero Smith diagonal entries of ``matrix``, in divisibility order."""
    return [e for e in smith_normal_form(matrix).d.diagonal() if e != 0]


def quotient_invariants(ambient_rank, relations):
    """Invariants of Z^ambient_rank modulo the column span of ``relations``."""
    if relations.rows != ambient_rank:
        raise ShapeMismatchError(
            f"relations have {relations.rows} rows, ambient rank is {ambient_rank}"
        )
    factors = invariant_factors(relations)
    return AbelianInvariants(
        ambient_rank - len(factors),
        tuple(f for f in factors if f >= 2),
    )


def homology_invariants(d_low, d_high):
    """Invariants of Ker(d_low) / Im(d_high) for a chain-complex pair.

    ``d_low`` maps the middle degree down, ``d_high`` maps into it; the
    composition d_low @ d_high must vanish.
    """
    if d_low.cols != d_high.rows:
        raise ShapeMismatchError(
            f"boundary shapes {d_low.shape} and {d_high.shape} do not chain"
        )
    if not (d_low @ d_high).is_zero():
        raise NotAComplexError("d_low @ d_high is nonzero")
    snf = smith_normal_form(d_low, transforms=True)
    rank = snf.rank
    kernel_dim = d_low.cols - rank
    # coordinates of Im(d_high) in the kernel basis: the trailing rows of
    # v_inv @ d_high (the leading ones vanish because the pair is a complex)
    vinv = snf.v_inv.data
    high = d_high.data
    relations = []
    for i in range(rank, d_low.cols):
        vrow = vinv[i]
        relations.append(
            [
                sum(vrow[l] * high[l][j] for l in range(d_high.rows))
                for j in range(d_high.cols)
            ]
        )
    return quotient_invariants(
        kernel_dim, IntMatrix(relations, shape=(kernel_dim, d_high.cols))
    )


def kernel_basis(matrix):
    """Basis of the integer kernel {x : matrix @ x == 0}, as a list of vectors."""
    snf = smith_normal_form(matrix, transforms=True)
    return [snf.v.column(j) for j in range(snf.rank, matrix.cols)]


def solve_integer(matrix, rhs):
    """One integer solution x of matrix @ x == rhs, or None if there is none."""
    if len(rhs) != matrix.rows:
        raise ShapeMismatchError(
            f"rhs has length {len(rhs)}, matrix has {matrix.rows} rows"
        )
    snf = smith_normal_form(matrix, transforms=True)
    c = [sum(urow[i] * rhs[i] for i in range(matrix.rows)) for urow in snf.u.data]
    diag = snf.d.diagonal()
    rank = snf.rank
    y = [0] * matrix.cols
    for i in range(rank):
        if c[i] % diag[i]:
            return None
        y[i] = c[i] // diag[i]
    if any(c[i] for i in range(rank, matrix.rows)):
        return None
    return [
        sum(vrow[j] * y[j] for j in range(matrix.cols)) for vrow in snf.v.data
    ]


def hnf_rows(vectors, width=None):
    """Canonical (row-style Hermite) basis of the lattice spanned by ``vectors``.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), and zero rows are dropped.  Two spanning sets generate the
    same lattice iff their hnf_rows agree, which is how all basis-valued
    results in this package are compared.
    """
    rows = [list(vec) for vec in vectors if any(vec)]
    if width is None:
        if not rows:
            return []
        width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ShapeMismatchError("vectors of unequal length")
    h = 0
    for j in range(width):
        while True:
            best = None
            for i in range(h, len(rows)):
                if rows[i][j] and (best is None or abs(rows[i][j]) < abs(rows[best][j])):
                    best = i
            if best is None:
                placed = False
                break
            rows[h], rows[best] = rows[best], rows[h]
            if rows[h][j] < 0:
                rows[h] = [-x for x in rows[h]]
            p = rows[h][j]
            clean = True
            for i in range(h + 1, len(rows)):
                e = rows[i][j]
                if e:
                    q = e // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[h])]
                    if rows[i][j]:
                        clean = False
            if clean:
                placed = True
                break
        if not placed:
            continue
        p = rows[h][j]
        for i in range(h):
            q = rows[i][j] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[h])]
        h += 1
    return rows[:h]


def congruence_kernel_basis(rows, mods):
    """Canonical basis of {x : rows[i] . x == 0 (mod mods[i]) for all i}.

    A modulus of 0 means exact equality for that row.  The congruences are
    solved by augmenting each modular row with a fresh slack column and
    projecting the integer kernel back onto the original coordinates.
    """
    if len(rows) != len(mods):
        raise ShapeMismatchError("one modulus per row required")
    if not rows:
        raise ShapeMismatchError("at least one row required")
    width = len(rows[0])
    slack = [i for i, m in enumerate(mods) if m != 0]
    aug = []
    for i, row in enumerate(rows):
        extra = [0] * len(slack)
        if mods[i]:
            extra[slack.index(i)] = mods[i]
        aug.append(list(row) + extra)
    basis = kernel_basis(IntMatrix(aug, shape=(len(rows), width + len(slack))))
    return hnf_rows([vec[:width] for vec in basis], width)

"""Exact linear algebra over the rationals.

All computations in this package reduce to ranks and kernels of small
matrices with `fractions.Fraction` entries, so a plain dense row-echelon
implementation is enough.  Matrices are immutable; zero-by-n and n-by-zero
shapes are first-class citizens because representations routinely carry
them at unsupported vertices.

Randomness: every random draw goes through :func:`seeded_rng`, which seeds
the standard Mersenne Twister (`random.Random`) with the SHA-512 digest of
a label string.  Both the seeding scheme and the generator are documented
and stable across platforms and Python versions, which keeps reports
byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeMismatch

Q = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class MatrixQ:
    """An immutable rows x cols matrix over the rationals."""

    rows: int
    cols: int
    data: tuple  # tuple of row tuples, each entry a Fraction

    # -- construction -------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "MatrixQ":
        table = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        nrows = len(table)
        ncols = len(table[0]) if table else 0
        if any(len(row) != ncols for row in table):
            raise ShapeMismatch("ragged rows in matrix literal")
        return MatrixQ(nrows, ncols, table)

    @staticmethod
    def zeros(rows: int, cols: int) -> "MatrixQ":
        zero = Fraction(0)
        return MatrixQ(rows, cols, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "MatrixQ":
        return MatrixQ(n, n, tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    # -- basic queries -------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def row(self, i: int) -> tuple:
        return self.data[i]

    def entries(self) -> Iterable[Fraction]:
        for row in self.data:
            yield from row

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if self.shape != other.shape:
            raise ShapeMismatch(f"add: {self.shape} vs {other.shape}")
        return MatrixQ(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        if self.shape != other.shape:
            raise ShapeMismatch(f"sub: {self.shape} vs {other.shape}")
        return MatrixQ(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> "MatrixQ":
        return MatrixQ(self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.data))

    def scale(self, c) -> "MatrixQ":
        c = _as_fraction(c)
        return MatrixQ(self.rows, self.cols, tuple(tuple(c * a for a in row) for row in self.data))

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise ShapeMismatch(f"matmul: {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            ra = self.data[i]
            out_row = []
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    a = ra[k]
                    if a:
                        acc += a * other.data[k][j]
                out_row.append(acc)
            out.append(tuple(out_row))
        return MatrixQ(self.rows, other.cols, tuple(out))

    def transpose(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows, tuple(
            tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)))


def hstack(blocks: Sequence[MatrixQ]) -> MatrixQ:
    blocks = list(blocks)
    if not blocks:
        return MatrixQ.zeros(0, 0)
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeMismatch("hstack: row counts differ")
    data = tuple(tuple(x for b in blocks for x in b.data[i]) for i in range(rows))
    return MatrixQ(rows, sum(b.cols for b in blocks), data)


def vstack(blocks: Sequence[MatrixQ]) -> MatrixQ:
    blocks = list(blocks)
    if not blocks:
        return MatrixQ.zeros(0, 0)
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeMismatch("vstack: column counts differ")
    data = tuple(row for b in blocks for row in b.data)
    return MatrixQ(sum(b.rows for b in blocks), cols, data)


def block_matrix(grid: Sequence[Sequence[MatrixQ]]) -> MatrixQ:
    return vstack([hstack(row) for row in grid])


def kron(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    """Kronecker product.

    With row-major vectorisation, vec(A X B) = kron(A, B^T) vec(X); this is
    how all intertwiner and cocycle systems are assembled.
    """
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    data = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.data[i][j]
                if aij:
                    row.extend(aij * x for x in b.data[k])
                else:
                    row.extend(Fraction(0) for _ in range(b.cols))
            data.append(tuple(row))
    return MatrixQ(rows, cols, tuple(data))


# -- echelon form and derived quantities -------------------------------


def _echelon(table):
    """In-place fractions Gauss-Jordan; returns list of pivot column indices."""
    nrows = len(table)
    ncols = len(table[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if table[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        table[r], table[pivot_row] = table[pivot_row], table[r]
        inv = 1 / table[r][c]
        table[r] = [x * inv for x in table[r]]
        for i in range(nrows):
            if i != r and table[i][c]:
                f = table[i][c]
                table[i] = [x - f * y for x, y in zip(table[i], table[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: MatrixQ):
    """Reduced row echelon form together with the pivot column list."""
    table = [list(row) for row in m.data]
    pivots = _echelon(table)
    return MatrixQ(m.rows, m.cols, tuple(tuple(row) for row in table)), pivots


def rank(m: MatrixQ) -> int:
    table = [list(row) for row in m.data]
    return len(_echelon(table))


def kernel_basis(m: MatrixQ):
    """Basis of the right null space {v : m v = 0}, as row vectors.

    One basis vector per free column, with a 1 in the free position; this
    makes the basis canonical for a fixed input matrix.
    """
    reduced, pivots = rref(m)
    pivot_set = dict.fromkeys(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.data[r][fc]
        basis.append(tuple(v))
    return basis


def image_basis(m: MatrixQ):
    """Basis of the column space, as row vectors of length m.rows."""
    reduced, _ = rref(m.transpose())
    out = []
    for row in reduced.data:
        if any(x for x in row):
            out.append(tuple(row))
    return out


def row_span_rank(vectors: Sequence[Sequence[Fraction]], length: int) -> int:
    if not vectors:
        return 0
    return rank(MatrixQ.from_rows(vectors)) if length else 0


def in_span(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    """Whether v lies in the linear span of the given row vectors."""
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    base = MatrixQ.from_rows(vectors)
    extended = MatrixQ.from_rows(list(vectors) + [list(v)])
    return rank(base) == rank(extended)


def independent_subset(vectors):
    """Greedily keep vectors that strictly grow the span; returns the kept list."""
    kept = []
    current_rank = 0
    for v in vectors:
        candidate = kept + [list(v)]
        r = rank(MatrixQ.from_rows(candidate))
        if r > current_rank:
            kept.append(list(v))
            current_rank = r
    return [tuple(v) for v in kept]


def solve_right(m: MatrixQ, rhs: Sequence[Fraction]):
    """One solution x of m x = rhs, or None if inconsistent."""
    aug = MatrixQ(m.rows, m.cols + 1, tuple(
        row + (_as_fraction(b),) for row, b in zip(m.data, rhs)))
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = reduced.data[r][m.cols]
    return tuple(x)


def inverse(m: MatrixQ) -> MatrixQ:
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of a non-square matrix")
    n = m.rows
    aug = hstack([m, MatrixQ.identity(n)])
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ShapeMismatch("matrix is singular")
    return MatrixQ(n, n, tuple(row[n:] for row in reduced.data))


def is_invertible(m: MatrixQ) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


# -- deterministic randomness -----------------------------------------


def seeded_rng(*label) -> random.Random:
    """A Mersenne Twister generator seeded from the string form of `label`.

    `random.Random` seeded with a str hashes it through SHA-512
    independently of PYTHONHASHSEED, so identical labels give identical
    streams on every platform.
    """
    return random.Random(":".join(str(part) for part in label))


def random_matrix(rows: int, cols: int, rng: random.Random, bound: int = 3) -> MatrixQ:
    """Uniform integer entries in [-bound, bound], as exact rationals."""
    if bound < 1:
        raise ValueError("entry bound must be at least 1")
    return MatrixQ(rows, cols, tuple(
        tuple(Fraction(rng.randint(-bound, bound)) for _ in range(cols)) for _ in range(rows)))


def random_invertible(n: int, rng: random.Random, bound: int = 3) -> MatrixQ:
    """A random invertible n x n integer matrix (retry sampling)."""
    if n == 0:
        return MatrixQ.zeros(0, 0)
    while True:
        m = random_matrix(n, n, rng, bound)
        if rank(m) == n:
            return m

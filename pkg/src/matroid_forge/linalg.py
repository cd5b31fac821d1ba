"""Exact linear algebra over the rationals and prime fields.

Matrices carry a field tag and immutable entries: `Fraction` values over Q,
least non-negative residues over GF(p).  Elimination is plain Gauss-Jordan
with the first nonzero entry in column order as pivot, which makes every
reduced form — and hence every derived object — deterministic.  No floating
point appears anywhere.

The arrangement-flavoured operations live here too: kernels of the column
functionals, the subspace of relations supported on at most three columns,
formality, and formalization (rebuilding an arrangement from that
subspace's orthogonal complement).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GroundSetMismatch, ValidationError, ZeroFunctional
from .matroid import Matroid, is_quotient


class Rationals:
    """Field tag for exact rational arithmetic."""

    name = "Q"
    characteristic = 0

    def parse(self, token: str) -> Fraction:
        return Fraction(token)

    def from_int(self, value: int) -> Fraction:
        return Fraction(value)

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def format(a) -> str:
        return str(a)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """GF(p) with elements stored as least non-negative residues."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def parse(self, token: str) -> int:
        if "/" in token:
            num, _, den = token.partition("/")
            d = int(den) % self.p
            if d == 0:
                raise ValueError(f"denominator divisible by {self.p}")
            return (int(num) * pow(d, self.p - 2, self.p)) % self.p
        return int(token) % self.p

    def from_int(self, value: int) -> int:
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def format(a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _rref(field, rows: list[list], cols: int) -> tuple[list[list], list[int]]:
    """Gauss-Jordan on a copy; returns (nonzero rows, pivot columns)."""
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == len(mat):
            break
        pivot_row = None
        for r in range(pr, len(mat)):
            if not field.is_zero(mat[r][c]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[pr], mat[pivot_row] = mat[pivot_row], mat[pr]
        inv = field.inv(mat[pr][c])
        mat[pr] = [field.mul(inv, v) for v in mat[pr]]
        lead = mat[pr]
        for r in range(len(mat)):
            if r != pr and not field.is_zero(mat[r][c]):
                factor = mat[r][c]
                mat[r] = [field.sub(v, field.mul(factor, w))
                          for v, w in zip(mat[r], lead)]
        pivots.append(c)
        pr += 1
    return mat[:pr], pivots


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable field-tagged matrix; columns are functionals."""

    field: Rationals | PrimeField
    rows: int
    cols: int
    entries: tuple[tuple, ...]

    @staticmethod
    def build(field, rows_data: Iterable[Iterable]) -> "ExactMatrix":
        entries = tuple(tuple(field.from_int(v) if isinstance(v, int) else v
                              for v in row)
                        for row in rows_data)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(r) != cols for r in entries):
            raise ValidationError("matrix rows have uneven length")
        return ExactMatrix(field, rows, cols, entries)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns_submatrix(self, indices: Sequence[int]) -> "ExactMatrix":
        ents = tuple(tuple(row[j] for j in indices) for row in self.entries)
        return ExactMatrix(self.field, self.rows, len(indices), ents)

    def zero_columns(self) -> tuple[int, ...]:
        f = self.field
        return tuple(j for j in range(self.cols)
                     if all(f.is_zero(row[j]) for row in self.entries))

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        reduced, pivots = _rref(self.field, list(self.entries), self.cols)
        ents = tuple(tuple(r) for r in reduced)
        return (ExactMatrix(self.field, len(ents), self.cols, ents),
                tuple(pivots))

    def rank(self) -> int:
        return len(self.rref()[1])

    def mul_vector(self, vec: Sequence) -> tuple:
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero
            for a, x in zip(row, vec):
                acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.rows}x{self.cols})"


@dataclass(frozen=True)
class RelationSpace:
    """A subspace of K^n held as a reduced-echelon basis (possibly empty)."""

    field: Rationals | PrimeField
    ambient: int
    vectors: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @staticmethod
    def from_vectors(field, ambient: int, vectors: Iterable[Sequence]
                     ) -> "RelationSpace":
        rows = [list(v) for v in vectors]
        reduced, pivots = _rref(field, rows, ambient)
        return RelationSpace(field, ambient,
                             tuple(tuple(r) for r in reduced), tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, vec: Sequence) -> bool:
        f = self.field
        work = list(vec)
        for row, p in zip(self.vectors, self.pivots):
            c = work[p]
            if not f.is_zero(c):
                work = [f.sub(v, f.mul(c, w)) for v, w in zip(work, row)]
        return all(f.is_zero(v) for v in work)

    def is_subspace_of(self, other: "RelationSpace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.dim, self.ambient, self.vectors)

    def perp(self) -> "RelationSpace":
        """Orthogonal complement under the coordinate pairing."""
        if self.dim == 0:
            basis = []
            f = self.field
            for i in range(self.ambient):
                v = [f.zero] * self.ambient
                v[i] = f.one
                basis.append(v)
            return RelationSpace.from_vectors(self.field, self.ambient, basis)
        return kernel_basis(self.matrix())


def kernel_basis(a: ExactMatrix) -> RelationSpace:
    """Reduced-echelon basis of {y : A y = 0}; dim = cols - rank."""
    f = a.field
    reduced, pivots = _rref(f, list(a.entries), a.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(a.cols) if c not in pivot_set]
    vectors = []
    for fc in free_cols:
        v = [f.zero] * a.cols
        v[fc] = f.one
        for i, p in enumerate(pivots):
            v[p] = f.neg(reduced[i][fc])
        vectors.append(v)
    return RelationSpace.from_vectors(f, a.cols, vectors)


def column_matroid(a: ExactMatrix) -> Matroid:
    """The matroid of linear independence on the columns of A."""
    r = a.rank()
    if r == 0:
        return Matroid(a.cols, 0, [0], _validated=True)
    bases = []
    for combo in combinations(range(a.cols), r):
        if a.columns_submatrix(combo).rank() == r:
            mask = 0
            for j in combo:
                mask |= 1 << j
            bases.append(mask)
    return Matroid(a.cols, r, bases, _validated=True)


def realizes(a: ExactMatrix, m: Matroid) -> bool:
    """Does the column matroid of A equal m (canonically, labels and all)?"""
    if a.cols != m.n:
        raise GroundSetMismatch(
            f"matrix has {a.cols} columns but the matroid has {m.n} elements")
    return column_matroid(a) == m


def weight3_subspace(a: ExactMatrix) -> RelationSpace:
    """Span of the kernel vectors with at most three nonzero entries.

    Generated by the kernels of every set of at most three columns (zero
    columns, parallel pairs, dependent triples); enumerating supports of
    size <= 3 is equivalent to collecting all kernel vectors of weight <= 3.
    """
    f = a.field
    generators: list[list] = []
    for k in (1, 2, 3):
        if k > a.cols:
            break
        for combo in combinations(range(a.cols), k):
            sub = a.columns_submatrix(combo)
            local = kernel_basis(sub)
            for v in local.vectors:
                big = [f.zero] * a.cols
                for idx, j in enumerate(combo):
                    big[j] = v[idx]
                generators.append(big)
    return RelationSpace.from_vectors(f, a.cols, generators)


def is_formal(a: ExactMatrix) -> bool:
    """True iff the weight-<=3 relations already span the whole kernel."""
    return weight3_subspace(a).dim == kernel_basis(a).dim


def formalization(a: ExactMatrix) -> ExactMatrix:
    """Rebuild an arrangement from the weight-<=3 relation subspace.

    Returns the matrix G whose rows form the reduced-echelon basis of the
    orthogonal complement of weight3_subspace(A); column i of G is the
    functional of the i-th rebuilt hyperplane.  The original column
    matroid is a quotient of G's with the same points and lines, and
    rank(G) >= rank(A) with equality exactly when A is formal.
    """
    if a.zero_columns():
        cols = ", ".join(str(c) for c in a.zero_columns())
        raise ZeroFunctional(f"column(s) {cols} are zero functionals")
    relations = weight3_subspace(a)
    comp = relations.perp()
    g = ExactMatrix(a.field, comp.dim, a.cols, comp.vectors)
    if g.zero_columns():
        # impossible when no functional is zero: e_i in the relation span
        # would force column i of A to vanish
        raise ZeroFunctional("formalization produced a zero functional")
    return g


def formalization_is_quotient(a: ExactMatrix) -> bool:
    """Remark-style sanity bundle: M(A) is a quotient of M(A_F) sharing
    all rank-1 and rank-2 flats."""
    g = formalization(a)
    ma = column_matroid(a)
    mg = column_matroid(g)
    if not is_quotient(ma, mg):
        return False
    for k in (1, 2):
        if ma.rank < k or mg.rank < k:
            return False
        if ma.flats_at_masks(k) != mg.flats_at_masks(k):
            return False
    return True

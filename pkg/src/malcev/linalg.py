"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Row reduction and characteristic
polynomials are delegated to sympy's ``DomainMatrix`` over ``QQ``; everything
that crosses the module boundary is converted back to ``Fraction`` so callers
never see sympy types.

Subspaces are stored in reduced row-echelon form, which makes equality of
subspaces plain tuple equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ, Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatch, ZeroPolynomial

Vector = tuple  # tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q' strings")
    return Fraction(x)


def as_vector(v: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in v)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(_ONE if k == i else _ZERO for k in range(n))


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [_ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(out)


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[_to_qq(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [as_vector(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = [as_vector(c) for c in columns]
        if any(len(c) != rows for c in cols):
            raise DimensionMismatch("ragged columns")
        return cls(rows, len(cols), tuple(cols[j][i] for i in range(rows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = as_vector(values)
        n = len(vals)
        return cls(n, n, tuple(vals[i] if i == j else _ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols]

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.row_list(), self.cols) if self.rows else Matrix.zeros(self.cols, 0)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), _ZERO)
                     for i in range(self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), _ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, vadd(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, vsub(self.entries, other.entries))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, vscale(as_scalar(c), self.entries))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square or k < 0:
            raise DimensionMismatch("only non-negative powers of square matrices")
        result, base = Matrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return rref_span(self.row_list(), self.cols).dim

    def flatten(self) -> Vector:
        return self.entries

    @classmethod
    def unflatten(cls, v: Sequence, n: int) -> "Matrix":
        return cls(n, n, as_vector(v))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held as its reduced row-echelon basis.

    Construct through :func:`rref_span` (or the helpers below); the dataclass
    constructor trusts its arguments.
    """

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(k for k, x in enumerate(row) if x) for row in self.basis)

    @property
    def non_pivots(self) -> tuple:
        piv = set(self.pivots)
        return tuple(k for k in range(self.ambient_dim) if k not in piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the echelon basis; raises if ``v`` is outside."""
        v = as_vector(v)
        coords = tuple(v[p] for p in self.pivots)
        if lincomb(coords, self.basis, self.ambient_dim) != v:
            raise ValueError("vector does not lie in the subspace")
        return coords

    def element(self, coords: Sequence) -> Vector:
        return lincomb(as_vector(coords), self.basis, self.ambient_dim)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(contains(other, b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}: [{rows}])"


def rref_span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Canonical echelon basis of the span of ``vectors``."""
    rows = []
    for v in vectors:
        v = as_vector(v)
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if any(v):
            rows.append(v)
    if not rows or ambient_dim == 0:
        return Subspace.zero(ambient_dim)
    reduced, pivots = _domain_matrix(rows, ambient_dim).rref()
    data = reduced.to_list()
    basis = tuple(tuple(_from_qq(x) for x in data[r]) for r in range(len(pivots)))
    return Subspace(ambient_dim, basis)


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}."""
    if m.cols == 0:
        return Subspace.zero(0)
    rows = [r for r in m.row_list() if any(r)]
    if not rows:
        return Subspace.full(m.cols)
    reduced, pivots = _domain_matrix(rows, m.cols).rref()
    data = reduced.to_list()
    free = [j for j in range(m.cols) if j not in pivots]
    vectors = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -_from_qq(data[r][f])
        vectors.append(v)
    return rref_span(vectors, m.cols)


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return rref_span(a.basis + b.basis, a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    # columns [a_1 .. a_p, -b_1 .. -b_q]; a kernel vector (s, t) gives sum s_i a_i in both
    columns = list(a.basis) + [vscale(-1, w) for w in b.basis]
    ker = kernel(Matrix.from_columns(columns, n))
    return rref_span((lincomb(k[:a.dim], a.basis, n) for k in ker.basis), n)


def contains(a: Subspace, v: Sequence) -> bool:
    v = as_vector(v)
    if len(v) != a.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    coords = tuple(v[p] for p in a.pivots)
    return lincomb(coords, a.basis, a.ambient_dim) == v


def image(m: Matrix, s: Subspace) -> Subspace:
    """The subspace m(s)."""
    if s.ambient_dim != m.cols:
        raise DimensionMismatch("subspace does not live in the matrix domain")
    return rref_span((m.apply(b) for b in s.basis), m.rows)


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """{v : m v in s}."""
    if s.ambient_dim != m.rows:
        raise DimensionMismatch("subspace does not live in the matrix codomain")
    # v maps into s iff every annihilating functional of s kills m v
    annihilators = kernel(Matrix.from_rows(s.basis, s.ambient_dim)) if s.dim else Subspace.full(m.rows)
    if annihilators.is_zero():
        return Subspace.full(m.cols)
    return kernel(Matrix.from_rows(annihilators.basis, m.rows) @ m)


def solve(m: Matrix, rhs: Sequence) -> Vector | None:
    """One solution of ``m x = rhs``, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rhs = as_vector(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    if m.cols == 0:
        return () if not any(rhs) else None
    aug = [m.row(i) + (rhs[i],) for i in range(m.rows)]
    reduced, pivots = _domain_matrix(aug, m.cols + 1).rref()
    if m.cols in pivots:
        return None
    data = reduced.to_list()
    x = [_ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = _from_qq(data[r][m.cols])
    return tuple(x)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with Fraction coefficients, highest degree first."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = _ZERO
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self):
        return str(Poly([_to_qq(c) for c in self.coeffs], Symbol("lambda"), domain=QQ).as_expr())


@dataclass(frozen=True)
class RootReport:
    roots: tuple  # ((Fraction root, multiplicity), ...) sorted by root
    splits: bool


def char_poly(m: Matrix) -> Polynomial:
    """Monic det(lambda I - m)."""
    if not m.is_square:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    if m.rows == 0:
        return Polynomial((_ONE,))
    coeffs = _domain_matrix(m.row_list(), m.cols).charpoly()
    return Polynomial(tuple(_from_qq(c) for c in coeffs))


def rational_roots(p: Polynomial) -> RootReport:
    """All rational roots with multiplicity, and whether they exhaust the degree.

    Uses factorisation over QQ; a rational root is exactly a linear factor.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no finite root set")
    poly = Poly([_to_qq(c) for c in p.coeffs], Symbol("x"), domain=QQ)
    roots = []
    for factor, mult in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.append((_from_qq(-b / a), mult))
    roots.sort()
    return RootReport(tuple(roots), sum(m for _, m in roots) == p.degree)


def generalized_kernel(m: Matrix, lam) -> Subspace:
    """Kernel of (m - lam I)^n where n is the side of m."""
    if not m.is_square:
        raise DimensionMismatch("generalized kernel of a non-square matrix")
    shifted = m - Matrix.identity(m.rows).scale(lam)
    return kernel(shifted ** m.rows)

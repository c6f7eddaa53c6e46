"""Anticommutative algebras given by structure constants.

An :class:`Algebra` stores ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``.
Identity checks (Jacobi, Malcev) run on an integer-scaled copy of the tensor
with numpy object arrays, so they stay exact while the contractions happen in
vectorised loops.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import AlgebraMismatch, DimensionMismatch, NotAnIdeal
from .linalg import (
    Matrix,
    Subspace,
    as_scalar,
    as_vector,
    contains,
    lincomb,
    unit_vector,
    vadd,
    vscale,
    vsub,
    zero_vector,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Algebra:
    name: str
    basis_names: tuple
    constants: tuple  # constants[i][j] is the coordinate vector of [e_i, e_j]

    def __post_init__(self):
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis labels must be distinct")
        if len(self.constants) != n or any(
                len(row) != n or any(len(v) != n for v in row) for row in self.constants):
            raise DimensionMismatch(f"structure constants do not form a {n}x{n}x{n} tensor")

    @classmethod
    def from_brackets(cls, name: str, basis_names: Sequence[str],
                      brackets: Mapping[tuple, Sequence]) -> "Algebra":
        """Build from ``{(i, j): vector}`` for i != j, filling [e_j, e_i] by antisymmetry.

        Keys may be indices or basis labels.
        """
        names = tuple(basis_names)
        n = len(names)
        index = {lab: k for k, lab in enumerate(names)}
        c = [[list(zero_vector(n)) for _ in range(n)] for _ in range(n)]
        for (i, j), value in brackets.items():
            i = index.get(i, i)
            j = index.get(j, j)
            if i == j:
                raise ValueError(f"[e_{i}, e_{i}] must be zero")
            v = as_vector(value)
            if len(v) != n:
                raise DimensionMismatch(f"bracket value of length {len(v)} in dimension {n}")
            c[i][j] = list(v)
            c[j][i] = [-x for x in v]
        return cls(name, names, tuple(tuple(tuple(v) for v in row) for row in c))

    @classmethod
    def abelian(cls, n: int, name: str | None = None) -> "Algebra":
        return cls.from_brackets(name or f"abelian{n}", [f"x{k + 1}" for k in range(n)], {})

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, label: str) -> int:
        try:
            return self.basis_names.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not a basis label of {self.name}") from None

    def element(self, coords: Iterable) -> "Element":
        return Element(self, as_vector(coords))

    def basis_element(self, i) -> "Element":
        if isinstance(i, str):
            i = self.index(i)
        return Element(self, unit_vector(self.dim, i))

    def basis(self) -> list:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, zero_vector(self.dim))

    @cached_property
    def _sparse(self) -> tuple:
        # (i, j, ((k, c_ijk), ...)) for every ordered pair with nonzero bracket
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                nz = tuple((k, x) for k, x in enumerate(self.constants[i][j]) if x)
                if nz:
                    out.append((i, j, nz))
        return tuple(out)

    @cached_property
    def _scaled(self) -> tuple:
        """Integer tensor L*c as a numpy object array, with the scale L."""
        scale = 1
        for row in self.constants:
            for v in row:
                for x in v:
                    scale = math.lcm(scale, x.denominator)
        n = self.dim
        arr = np.zeros((n, n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    arr[i, j, k] = int(self.constants[i][j][k] * scale)
        return arr, scale

    @cached_property
    def _jacobian_tensor(self) -> np.ndarray:
        """L^2 * J(e_i, e_j, e_k) as an (n, n, n, n) integer array."""
        c, _ = self._scaled
        p = np.einsum("ijm,mkl->ijkl", c, c)
        return p + np.einsum("jkil->ijkl", p) + np.einsum("kijl->ijkl", p)

    def bracket_vectors(self, x: Sequence, y: Sequence) -> tuple:
        out = [_ZERO] * self.dim
        for i, j, nz in self._sparse:
            a = x[i]
            if a:
                b = y[j]
                if b:
                    ab = a * b
                    for k, ck in nz:
                        out[k] += ab * ck
        return tuple(out)

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    algebra: Algebra = field(repr=False)
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise DimensionMismatch(
                f"{len(self.coords)} coordinates for an algebra of dimension {self.algebra.dim}")

    def _same(self, other: "Element") -> Algebra:
        if not isinstance(other, Element):
            return NotImplemented
        _check_same_algebra(self, other)
        return self.algebra

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, vadd(self.coords, other.coords))

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, vsub(self.coords, other.coords))

    def __neg__(self):
        return Element(self.algebra, vscale(-1, self.coords))

    def __mul__(self, c):
        return Element(self.algebra, vscale(as_scalar(c), self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        terms = [f"{c}*{lab}" for c, lab in zip(self.coords, self.algebra.basis_names) if c]
        return " + ".join(terms) if terms else "0"


def _check_same_algebra(*elements: Element) -> Algebra:
    a = elements[0].algebra
    for x in elements[1:]:
        if x.algebra is not a and x.algebra != a:
            raise AlgebraMismatch(f"elements of {a.name} and {x.algebra.name} cannot be combined")
    return a


def bracket(x: Element, y: Element) -> Element:
    a = _check_same_algebra(x, y)
    return Element(a, a.bracket_vectors(x.coords, y.coords))


def jacobian(x: Element, y: Element, z: Element) -> Element:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]."""
    _check_same_algebra(x, y, z)
    return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)


def malcev_residual(a: Element, b: Element, c: Element, d: Element) -> Element:
    """Linearised Malcev expression; zero for all inputs iff the algebra is Malcev.

    [J(a,b,c),d] + [J(d,b,c),a] - J(a,b,[d,c]) - J(d,b,[a,c]).  Setting d = a
    gives twice [J(a,b,c),a] - J(a,b,[a,c]).
    """
    return (bracket(jacobian(a, b, c), d) + bracket(jacobian(d, b, c), a)
            - jacobian(a, b, bracket(d, c)) - jacobian(d, b, bracket(a, c)))


@dataclass(frozen=True)
class Witness:
    identity: str  # "anticommutativity", "jacobi" or "malcev"
    indices: tuple
    residual: tuple

    def as_dict(self) -> dict:
        return {"identity": self.identity, "indices": list(self.indices),
                "residual": [str(x) for x in self.residual]}


@dataclass(frozen=True)
class ValidationReport:
    anticommutative: bool
    is_lie: bool
    is_malcev: bool
    witnesses: tuple

    def witnesses_for(self, identity: str) -> tuple:
        return tuple(w for w in self.witnesses if w.identity == identity)


def validate(a: Algebra) -> ValidationReport:
    """Check anticommutativity, Jacobi and (linearised) Malcev on basis tuples."""
    n = a.dim
    witnesses = []
    for i in range(n):
        for j in range(i, n):
            s = a.constants[i][i] if i == j else vadd(a.constants[i][j], a.constants[j][i])
            if any(s):
                witnesses.append(Witness("anticommutativity", (i, j), s))
    anticommutative = not witnesses

    c, scale = a._scaled
    jac = a._jacobian_tensor
    lie_ok = True
    for i, j, k in combinations(range(n), 3):
        v = jac[i, j, k]
        if any(v):
            lie_ok = False
            witnesses.append(Witness("jacobi", (i, j, k),
                                     tuple(Fraction(int(x), scale ** 2) for x in v)))

    # evaluated even when Jacobi holds, so Lie => Malcev stays a real check
    malcev_ok = True
    if n:
        t = (np.einsum("abcm,mdl->abcdl", jac, c)
             + np.einsum("dbcm,mal->abcdl", jac, c)
             - np.einsum("dcm,abml->abcdl", c, jac)
             - np.einsum("acm,dbml->abcdl", c, jac))
        for ia, ib, ic, id_ in np.argwhere(np.any(t != 0, axis=-1)):
            if ia <= id_:  # symmetric in (a, d)
                malcev_ok = False
                witnesses.append(Witness(
                    "malcev", (int(ia), int(ib), int(ic), int(id_)),
                    tuple(Fraction(int(x), scale ** 3) for x in t[ia, ib, ic, id_])))
    return ValidationReport(anticommutative, anticommutative and lie_ok,
                            anticommutative and malcev_ok, tuple(witnesses))


def witness_residual(a: Algebra, w: Witness) -> tuple:
    """Re-evaluate a witness through the element-level operations."""
    e = a.basis()
    if w.identity == "anticommutativity":
        i, j = w.indices
        if i == j:
            return bracket(e[i], e[i]).coords
        return vadd(a.constants[i][j], a.constants[j][i])
    if w.identity == "jacobi":
        return jacobian(*(e[k] for k in w.indices)).coords
    if w.identity == "malcev":
        return malcev_residual(*(e[k] for k in w.indices)).coords
    raise ValueError(f"unknown identity {w.identity!r}")


def adjoint_matrix(a: Algebra, x: Element) -> Matrix:
    """Matrix of y -> [x, y] in the basis of ``a``."""
    if x.algebra is not a and x.algebra != a:
        raise AlgebraMismatch(f"element of {x.algebra.name} used with {a.name}")
    cols = [a.bracket_vectors(x.coords, unit_vector(a.dim, j)) for j in range(a.dim)]
    return Matrix.from_columns(cols, a.dim) if a.dim else Matrix.zeros(0, 0)


def direct_sum(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """Block-diagonal structure constants; brackets across the blocks vanish."""
    if set(a.basis_names) & set(b.basis_names):
        left, right = (a.name, b.name) if a.name != b.name else (f"{a.name}_1", f"{b.name}_2")
        names = tuple(f"{left}.{x}" for x in a.basis_names) + tuple(f"{right}.{x}" for x in b.basis_names)
    else:
        names = a.basis_names + b.basis_names
    n, m = a.dim, b.dim
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            brackets[(i, j)] = a.constants[i][j] + zero_vector(m)
    for i in range(m):
        for j in range(i + 1, m):
            brackets[(n + i, n + j)] = zero_vector(n) + b.constants[i][j]
    return Algebra.from_brackets(name or f"{a.name}_plus_{b.name}", names, brackets)


def brackets_into(a: Algebra, s: Subspace, target: Subspace) -> bool:
    """True iff [e_j, s] lies in ``target`` for every basis vector e_j."""
    for v in s.basis:
        for j in range(a.dim):
            if not contains(target, a.bracket_vectors(unit_vector(a.dim, j), v)):
                return False
    return True


def projection_to_quotient(ideal: Subspace) -> Matrix:
    """Matrix of the canonical map A -> A/I in complement (non-pivot) coordinates."""
    n = ideal.ambient_dim
    keep = ideal.non_pivots
    pivots = ideal.pivots
    cols = []
    for j in range(n):
        v = list(unit_vector(n, j))
        # clear pivot coordinates using the echelon rows
        for r, p in enumerate(pivots):
            if v[p]:
                coef = v[p]
                v = [x - coef * y for x, y in zip(v, ideal.basis[r])]
        cols.append(tuple(v[k] for k in keep))
    if not keep:
        return Matrix.zeros(0, n)
    return Matrix.from_columns(cols, len(keep))


def quotient_algebra(a: Algebra, ideal: Subspace) -> tuple:
    """Return ``(A/I, phi)`` with phi the matrix of the canonical epimorphism.

    The complement basis of A/I is the images of the basis vectors at the
    non-pivot columns of the ideal's echelon basis.  Raises NotAnIdeal when the
    induced bracket would depend on the coset representative.
    """
    if ideal.ambient_dim != a.dim:
        raise DimensionMismatch("ideal lives in a different ambient space")
    phi = projection_to_quotient(ideal)
    # representatives e_q and e_q + r (r in I) must give the same bracket class
    for r in ideal.basis:
        for j in range(a.dim):
            if any(phi.apply(a.bracket_vectors(r, unit_vector(a.dim, j)))):
                raise NotAnIdeal(f"subspace is not an ideal of {a.name}: bracket with "
                                 f"{a.basis_names[j]} leaves it")
    keep = ideal.non_pivots
    brackets = {}
    for s, p in enumerate(keep):
        for t in range(s + 1, len(keep)):
            q = keep[t]
            brackets[(s, t)] = phi.apply(a.constants[p][q])
    quotient = Algebra.from_brackets(f"{a.name}/I", [a.basis_names[k] for k in keep], brackets)
    return quotient, phi


def section_of_quotient(ideal: Subspace) -> Matrix:
    """Matrix A/I -> A sending each quotient basis vector to its complement representative."""
    n = ideal.ambient_dim
    keep = ideal.non_pivots
    if not keep:
        return Matrix.zeros(n, 0)
    return Matrix.from_columns([unit_vector(n, k) for k in keep], n)


def span_of_brackets(a: Algebra, s: Subspace, t: Subspace) -> list:
    return [a.bracket_vectors(u, v) for u in s.basis for v in t.basis]


def coords_of(a: Algebra, x) -> tuple:
    if isinstance(x, Element):
        if x.algebra is not a and x.algebra != a:
            raise AlgebraMismatch(f"element of {x.algebra.name} used with {a.name}")
        return x.coords
    v = as_vector(x)
    if len(v) != a.dim:
        raise DimensionMismatch(f"{len(v)} coordinates for an algebra of dimension {a.dim}")
    return v


__all__ = [
    "Algebra", "Element", "ValidationReport", "Witness", "adjoint_matrix", "bracket",
    "brackets_into", "direct_sum", "jacobian", "lincomb", "malcev_residual",
    "quotient_algebra", "section_of_quotient", "validate", "witness_residual",
]

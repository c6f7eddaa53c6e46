"""The Delta construction in its two readings.

Element form: solve [z, d] = J(z, x, y) for all z.  Operator form: the matrix
of z -> J(z, x, y), whose span over basis pairs is tested for closure under
the matrix commutator.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .algebra import Algebra, Element, coords_of
from .ideals import require_malcev
from .linalg import Matrix, Subspace, contains, kernel, rref_span, solve, unit_vector


class DeltaStatus(enum.Enum):
    UNIQUE = "Unique"
    NON_UNIQUE = "NonUnique"
    NO_SOLUTION = "NoSolution"


@dataclass(frozen=True)
class DeltaSolution:
    particular: Optional[Element]
    kernel: Subspace  # right annihilator {d : [z, d] = 0 for all z}
    status: DeltaStatus


def _jacobian_with(a: Algebra, z: tuple, x: tuple, y: tuple) -> tuple:
    b = a.bracket_vectors
    terms = (b(b(z, x), y), b(b(x, y), z), b(b(y, z), x))
    return tuple(sum(t) for t in zip(*terms))


def _stacked_right_multiplication(a: Algebra) -> Matrix:
    # block i is the matrix of d -> [e_i, d]
    n = a.dim
    rows = []
    for i in range(n):
        cols = [a.constants[i][j] for j in range(n)]
        rows.extend(tuple(cols[j][k] for j in range(n)) for k in range(n))
    return Matrix.from_rows(rows, n)


def delta_element(a: Algebra, x, y) -> DeltaSolution:
    require_malcev(a)
    x, y = coords_of(a, x), coords_of(a, y)
    n = a.dim
    system = _stacked_right_multiplication(a) if n else Matrix.zeros(0, 0)
    rhs = [c for i in range(n) for c in _jacobian_with(a, unit_vector(n, i), x, y)]
    annihilator = kernel(system) if n else Subspace.zero(0)
    d = solve(system, rhs) if n else ()
    if d is None:
        return DeltaSolution(None, annihilator, DeltaStatus.NO_SOLUTION)
    status = DeltaStatus.UNIQUE if annihilator.is_zero() else DeltaStatus.NON_UNIQUE
    return DeltaSolution(a.element(d), annihilator, status)


def delta_operator(a: Algebra, x, y) -> Matrix:
    """Matrix of z -> J(z, x, y)."""
    require_malcev(a)
    x, y = coords_of(a, x), coords_of(a, y)
    n = a.dim
    if not n:
        return Matrix.zeros(0, 0)
    cols = [_jacobian_with(a, unit_vector(n, k), x, y) for k in range(n)]
    return Matrix.from_columns(cols, n)


def delta_span(a: Algebra) -> Subspace:
    """Span of the Delta operators of basis pairs, inside the n*n matrix space (row-major)."""
    require_malcev(a)
    n = a.dim
    jac = a._jacobian_tensor  # positive rescaling leaves the span unchanged
    vectors = []
    for i, j in combinations(range(n), 2):
        # entry (l, k) of the operator is the l-th coordinate of J(e_k, e_i, e_j)
        vectors.append(tuple(int(jac[k, i, j, l]) for l in range(n) for k in range(n)))
    return rref_span(vectors, n * n)


def lie_closure_check(span: Subspace) -> bool:
    """Closure of a span of square matrices (row-major coordinates) under commutators."""
    side = int(round(span.ambient_dim ** 0.5))
    if side * side != span.ambient_dim:
        raise ValueError(f"ambient dimension {span.ambient_dim} is not a square")
    mats = [Matrix.unflatten(b, side) for b in span.basis]
    for p, q in combinations(mats, 2):
        if not contains(span, (p @ q - q @ p).flatten()):
            return False
    return True

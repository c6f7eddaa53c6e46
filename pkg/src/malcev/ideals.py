"""Jacobian ideal, J-nucleus, the N + J decomposition and ideal correspondences.

For a Malcev algebra A:

* ``J`` is the span of all Jacobians J(x, y, z);
* ``N`` is the J-nucleus {x : J(x, A, A) = 0};
* when A = N (+) J, ``pi`` is the projection onto N along J.  It factors as the
  canonical map A -> A/J followed by the isomorphism A/J -> N.

i-ideals are subspaces X of N with [nu, X] in X for every nu in N.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .algebra import (
    Algebra,
    Element,
    ValidationReport,
    brackets_into,
    coords_of,
    quotient_algebra,
    section_of_quotient,
    span_of_brackets,
    validate,
)
from .errors import AlgebraMismatch, NotAnIdeal, NotDirect, NotIIdeal, NotMalcev
from .linalg import (
    Matrix,
    Subspace,
    contains,
    image,
    kernel,
    rref_span,
    solve,
    subspace_intersect,
    subspace_sum,
    unit_vector,
)


@lru_cache(maxsize=256)
def cached_validation(a: Algebra) -> ValidationReport:
    return validate(a)


def require_malcev(a: Algebra) -> None:
    if not cached_validation(a).is_malcev:
        raise NotMalcev(f"{a.name} does not satisfy the Malcev identity")


@dataclass(frozen=True)
class IdealHandle:
    algebra: Algebra
    space: Subspace
    contains_J: bool

    @property
    def dim(self) -> int:
        return self.space.dim


def _handle(a: Algebra, space: Subspace, j: Subspace | None = None) -> IdealHandle:
    if j is None:
        j = _j_space(a)
    return IdealHandle(a, space, j.issubspace(space))


def is_ideal(a: Algebra, s: Subspace) -> bool:
    """[A, s] in s; one-sided suffices because the bracket is anticommutative."""
    if s.ambient_dim != a.dim:
        raise AlgebraMismatch(f"subspace of dimension {s.ambient_dim} tested in {a.name}")
    return brackets_into(a, s, s)


@lru_cache(maxsize=256)
def _j_space(a: Algebra) -> Subspace:
    jac = a._jacobian_tensor  # scaled by a positive constant, same span
    n = a.dim
    vectors = (tuple(int(x) for x in jac[i, j, k])
               for i, j, k in combinations(range(n), 3))
    return rref_span(vectors, n)


def j_ideal(a: Algebra) -> IdealHandle:
    """J(A, A, A), spanned by the Jacobians of basis triples."""
    require_malcev(a)
    j = _j_space(a)
    if not is_ideal(a, j):
        raise NotAnIdeal(f"J(A,A,A) of {a.name} failed the ideal check")
    return IdealHandle(a, j, True)


@lru_cache(maxsize=256)
def _n_space(a: Algebra) -> Subspace:
    # row block (i, j, l): x -> l-th coordinate of J(x, e_i, e_j), i < j
    jac = a._jacobian_tensor
    n = a.dim
    rows = []
    for i, j in combinations(range(n), 2):
        for l in range(n):
            row = tuple(int(jac[x, i, j, l]) for x in range(n))
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix.from_rows(rows, n))


def j_nucleus(a: Algebra) -> IdealHandle:
    """N = {x : J(x, A, A) = 0}."""
    require_malcev(a)
    nsp = _n_space(a)
    if not is_ideal(a, nsp):
        raise NotAnIdeal(f"the J-nucleus of {a.name} failed the ideal check")
    return _handle(a, nsp)


def check_annihilation(a: Algebra) -> bool:
    """True iff [n, j] = 0 for all basis vectors n of N and j of J."""
    nsp = j_nucleus(a).space
    jsp = j_ideal(a).space
    return not any(any(v) for v in span_of_brackets(a, nsp, jsp))


@dataclass(frozen=True)
class DecompositionContext:
    algebra: Algebra
    J: Subspace
    N: Subspace
    direct: bool
    phi: Matrix                 # A -> A/J
    quotient: Algebra           # A/J
    quotient_is_lie: bool
    annihilation: bool          # [N, J] = 0
    pi: Optional[Matrix]        # A -> A, projection onto N along J; None unless direct
    iota: Optional[Matrix]      # A/J -> A, the isomorphism onto N; None unless direct

    def require_direct(self) -> Matrix:
        if not self.direct or self.pi is None:
            raise NotDirect(f"{self.algebra.name} is not the direct sum of N and J "
                            f"(dim N = {self.N.dim}, dim J = {self.J.dim}, "
                            f"dim N∩J = {subspace_intersect(self.N, self.J).dim})")
        return self.pi

    def project(self, x) -> tuple:
        """pi(x) as a coordinate vector of A."""
        return self.require_direct().apply(coords_of(self.algebra, x))


def _projection_onto(n_space: Subspace, j_space: Subspace) -> Matrix:
    """Projection onto n_space along j_space, assuming they are complementary."""
    dim = n_space.ambient_dim
    basis = list(n_space.basis) + list(j_space.basis)
    change = Matrix.from_columns(basis, dim)  # coordinates in (N | J) -> A
    cols = []
    for k in range(dim):
        c = solve(change, unit_vector(dim, k))
        cols.append(n_space.element(c[:n_space.dim]))
    return Matrix.from_columns(cols, dim)


def decompose(a: Algebra) -> DecompositionContext:
    require_malcev(a)
    jsp = j_ideal(a).space
    nsp = j_nucleus(a).space
    quotient, phi = quotient_algebra(a, jsp)
    direct = subspace_intersect(nsp, jsp).is_zero() and subspace_sum(nsp, jsp).is_full()
    pi = iota = None
    if direct:
        pi = _projection_onto(nsp, jsp)
        iota = pi @ section_of_quotient(jsp)
    annihilation = not any(any(v) for v in span_of_brackets(a, nsp, jsp))
    return DecompositionContext(
        algebra=a, J=jsp, N=nsp, direct=direct, phi=phi, quotient=quotient,
        quotient_is_lie=cached_validation(quotient).is_lie, annihilation=annihilation,
        pi=pi, iota=iota)


@dataclass(frozen=True)
class MinimalityResult:
    quotient_is_lie: bool
    contains_J: bool

    @property
    def holds(self) -> bool:
        return (not self.quotient_is_lie) or self.contains_J

    def __bool__(self):
        return self.holds


def j_minimality_check(a: Algebra, candidate: IdealHandle | Subspace) -> MinimalityResult:
    """Whether "A/candidate is Lie implies J is inside candidate" holds.

    Truthy exactly when the implication holds; both sides are kept on the result.
    """
    space = candidate.space if isinstance(candidate, IdealHandle) else candidate
    if not is_ideal(a, space):
        raise NotAnIdeal("minimality candidate is not an ideal")
    quotient, _ = quotient_algebra(a, space)
    return MinimalityResult(cached_validation(quotient).is_lie, _j_space(a).issubspace(space))


def _closure(a: Algebra, start: Subspace, acting: Sequence[tuple]) -> Subspace:
    s = start
    while True:
        new = rref_span(list(s.basis) + [a.bracket_vectors(u, v) for u in acting for v in s.basis],
                        a.dim)
        if new.dim == s.dim:
            return s
        s = new


def ideal_generated_by(a: Algebra, seed: Iterable) -> IdealHandle:
    """Smallest ideal containing ``seed`` (elements or coordinate vectors)."""
    vectors = [coords_of(a, x) for x in seed]
    start = rref_span(vectors, a.dim)
    acting = [unit_vector(a.dim, j) for j in range(a.dim)]
    return _handle(a, _closure(a, start, acting))


def ideal_product(p: IdealHandle, q: IdealHandle) -> Subspace:
    """Span of [x, y] over basis vectors x of p and y of q (not necessarily an ideal)."""
    if p.algebra is not q.algebra and p.algebra != q.algebra:
        raise AlgebraMismatch("ideals of different algebras")
    a = p.algebra
    return rref_span(span_of_brackets(a, p.space, q.space), a.dim)


def is_i_ideal(ctx: DecompositionContext, x: Subspace) -> bool:
    """x lies in N and [nu, x] lies in x for every basis vector nu of N."""
    ctx.require_direct()
    if not x.issubspace(ctx.N):
        return False
    a = ctx.algebra
    return all(contains(x, a.bracket_vectors(nu, v)) for nu in ctx.N.basis for v in x.basis)


def i_ideal_generated_by(ctx: DecompositionContext, seed: Iterable) -> Subspace:
    """Smallest i-ideal containing the (N-valued) seed vectors."""
    ctx.require_direct()
    a = ctx.algebra
    start = rref_span([coords_of(a, x) for x in seed], a.dim)
    if not start.issubspace(ctx.N):
        raise NotIIdeal("i-ideal seeds must lie in N")
    return _closure(a, start, list(ctx.N.basis))


def project_subspace(ctx: DecompositionContext, s: Subspace) -> Subspace:
    return image(ctx.require_direct(), s)


def lift_i_ideal(ctx: DecompositionContext, x: Subspace) -> Subspace:
    """pi^{-1}(x) = x + J."""
    ctx.require_direct()
    return subspace_sum(x, ctx.J)


@dataclass(frozen=True)
class CorrespondenceResult:
    is_ideal: bool
    image_is_i_ideal: bool
    saturated: bool  # s = pi^{-1}(pi(s)), i.e. J is inside s

    @property
    def forward(self) -> bool:
        return (not self.is_ideal) or self.image_is_i_ideal

    @property
    def backward(self) -> bool:
        return not (self.image_is_i_ideal and self.saturated) or self.is_ideal


def correspondence_check(ctx: DecompositionContext, s: Subspace) -> CorrespondenceResult:
    """Ideals of A versus i-ideals of N under pi, in both directions."""
    ctx.require_direct()
    img = project_subspace(ctx, s)
    return CorrespondenceResult(
        is_ideal=is_ideal(ctx.algebra, s),
        image_is_i_ideal=is_i_ideal(ctx, img),
        saturated=ctx.J.issubspace(s))


@dataclass(frozen=True)
class CoprimeResult:
    coprime: bool
    product_is_i_ideal: bool

    @property
    def refuted(self) -> bool:
        return self.coprime and not self.product_is_i_ideal


def i_ideal_product(ctx: DecompositionContext, p: Subspace, q: Subspace) -> Subspace:
    a = ctx.algebra
    return rref_span(span_of_brackets(a, p, q), a.dim)


def coprime_product_check(ctx: DecompositionContext, p: Subspace, q: Subspace) -> CoprimeResult:
    """For i-ideals p, q of N: are they co-prime (p + q = N), and is [p, q] an i-ideal?"""
    for name, x in (("p", p), ("q", q)):
        if not is_i_ideal(ctx, x):
            raise NotIIdeal(f"{name} is not an i-ideal of N")
    coprime = subspace_sum(p, q) == ctx.N
    return CoprimeResult(coprime, is_i_ideal(ctx, i_ideal_product(ctx, p, q)))


def seed_subsets(n: int, max_size: int):
    """Basis-index subsets by size, then lexicographically; the empty set first."""
    for size in range(0, min(max_size, n) + 1):
        yield from combinations(range(n), size)


def enumerate_ideals(a: Algebra, max_seed_size: int = 2) -> list:
    """Distinct ideals generated by basis subsets of at most ``max_seed_size`` vectors."""
    seen = {}
    jsp = _j_space(a)
    for subset in seed_subsets(a.dim, max_seed_size):
        space = ideal_generated_by(a, [unit_vector(a.dim, k) for k in subset]).space
        if space not in seen:
            seen[space] = IdealHandle(a, space, jsp.issubspace(space))
    full = Subspace.full(a.dim)
    if full not in seen:
        seen[full] = IdealHandle(a, full, True)
    return list(seen.values())


def enumerate_i_ideals(ctx: DecompositionContext, max_seed_size: int = 2) -> list:
    """Distinct i-ideals generated by subsets of N's echelon basis, plus 0 and N."""
    ctx.require_direct()
    seen = {}
    basis = ctx.N.basis
    for subset in seed_subsets(len(basis), max_seed_size):
        space = i_ideal_generated_by(ctx, [basis[k] for k in subset])
        seen.setdefault(space, None)
    seen.setdefault(ctx.N, None)
    return list(seen)


def product_counterexample_search(a: Algebra, budget: int = 2) -> Optional[tuple]:
    """First pair of enumerated ideals whose product is not an ideal.

    ``budget`` is the largest generator-subset size used to enumerate ideals.
    Pairs are visited in enumeration order (p before q, p = q included).
    """
    require_malcev(a)
    ideals = enumerate_ideals(a, budget)
    for i, p in enumerate(ideals):
        for q in ideals[i:]:
            if not is_ideal(a, ideal_product(p, q)):
                return p, q
    return None

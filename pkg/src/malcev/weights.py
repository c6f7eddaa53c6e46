"""Generalised weight spaces of N and their lifts to A.

Weights are rational functionals on a nilpotent subalgebra h of N, found from
rational roots of characteristic polynomials of ad(H) restricted to N.  When a
spectrum does not split over Q the decomposition is reported as incomplete
rather than approximated.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Optional

from .algebra import coords_of
from .errors import HMismatch, NotASubalgebra, NotInN, NotInsideN, NotNilpotent
from .ideals import DecompositionContext
from .linalg import (
    Matrix,
    RootReport,
    Subspace,
    char_poly,
    contains,
    generalized_kernel,
    image,
    rational_roots,
    rref_span,
    subspace_intersect,
    subspace_sum,
)


@dataclass(frozen=True)
class WeightFunction:
    """A functional on h, given by its values on h's echelon basis."""

    values: tuple

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        return WeightFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __call__(self, coords) -> Fraction:
        return sum((a * b for a, b in zip(self.values, coords)), Fraction(0))

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _in_n_coordinates(ctx: DecompositionContext, v: tuple) -> tuple:
    if not contains(ctx.N, v):
        raise NotInN("a bracket with an element of N left N")
    return tuple(v[p] for p in ctx.N.pivots)


def adjoint_action(ctx: DecompositionContext, a) -> Matrix:
    """Matrix, in N's echelon basis, of n -> [pi(a), n]."""
    pa = ctx.project(a)
    alg = ctx.algebra
    m = ctx.N.dim
    cols = [_in_n_coordinates(ctx, alg.bracket_vectors(pa, nu)) for nu in ctx.N.basis]
    return Matrix.from_columns(cols, m) if m else Matrix.zeros(0, 0)


def adjoint_action_via_quotient(ctx: DecompositionContext, a) -> Matrix:
    """Same map computed as i o ad_{A/J}(phi(a)) o i^{-1}, through the quotient algebra."""
    ctx.require_direct()
    alg = ctx.algebra
    q = ctx.quotient
    phi_a = ctx.phi.apply(coords_of(alg, a))
    m = ctx.N.dim
    cols = []
    for nu in ctx.N.basis:
        inside_quotient = q.bracket_vectors(phi_a, ctx.phi.apply(nu))
        cols.append(_in_n_coordinates(ctx, ctx.iota.apply(inside_quotient)))
    return Matrix.from_columns(cols, m) if m else Matrix.zeros(0, 0)


def lower_central_series(a, h: Subspace) -> list:
    """h, [h, h], [h, [h, h]], ... until the dimension stops dropping."""
    series = [h]
    while True:
        nxt = rref_span([a.bracket_vectors(x, y) for x in h.basis for y in series[-1].basis], a.dim)
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def is_nilpotent_subalgebra(a, h: Subspace) -> bool:
    if not all(contains(h, a.bracket_vectors(x, y)) for x in h.basis for y in h.basis):
        raise NotASubalgebra("the subspace is not closed under the bracket")
    return lower_central_series(a, h)[-1].is_zero()


@dataclass(frozen=True)
class LiftReport:
    spaces: tuple              # ((alpha, A_alpha), ...) with A_alpha = pi(N_alpha)
    literal_sum_dim: int
    literal_direct: bool       # A is the direct sum of the A_alpha
    extended_spaces: tuple     # as spaces, with A_0 replaced by N_0 + J
    extended_sum_dim: int
    extended_direct: bool
    h_in_zero_space: bool      # pi(H) inside N_0
    brackets_literal: bool     # [A_a, A_b] inside N_{a+b}
    brackets_extended: bool    # [A'_a, A'_b] inside A'_{a+b}


@dataclass(frozen=True)
class WeightDecomposition:
    h_space: Subspace
    spaces: tuple              # ((WeightFunction, Subspace of A), ...)
    complete: bool
    splits: bool
    root_reports: tuple        # one RootReport per basis vector of h
    independent: bool          # pairwise intersections are zero
    h_in_zero_space: bool
    brackets_respect_weights: bool
    lifted: Optional[LiftReport] = None

    def space_for(self, alpha: WeightFunction) -> Optional[Subspace]:
        for beta, s in self.spaces:
            if beta == alpha:
                return s
        return None

    @property
    def zero_weight(self) -> WeightFunction:
        return WeightFunction((Fraction(0),) * self.h_space.dim)


def _brackets_respect(alg, spaces: tuple, target_of) -> bool:
    for alpha, s in spaces:
        for beta, t in spaces:
            target = target_of(alpha + beta)
            for u in s.basis:
                for v in t.basis:
                    w = alg.bracket_vectors(u, v)
                    if any(w) and (target is None or not contains(target, w)):
                        return False
    return True


def _independent(spaces) -> bool:
    subs = [s for _, s in spaces]
    return all(subspace_intersect(p, q).is_zero()
               for i, p in enumerate(subs) for q in subs[i + 1:])


def weight_decomposition(ctx: DecompositionContext, h: Subspace) -> WeightDecomposition:
    ctx.require_direct()
    alg = ctx.algebra
    if not h.issubspace(ctx.N):
        raise NotInsideN("h must lie inside the J-nucleus N")
    if not is_nilpotent_subalgebra(alg, h):
        raise NotNilpotent("h is not a nilpotent subalgebra")
    n_dim = ctx.N.dim
    mats = [adjoint_action(ctx, x) for x in h.basis]
    reports = tuple(rational_roots(char_poly(m)) for m in mats)
    splits = all(r.splits for r in reports)

    found = []
    for alpha in product(*[[root for root, _ in r.roots] for r in reports]):
        inside = Subspace.full(n_dim)
        for m, value in zip(mats, alpha):
            inside = subspace_intersect(inside, generalized_kernel(m, value))
            if inside.is_zero():
                break
        if not inside.is_zero():
            in_a = rref_span([ctx.N.element(c) for c in inside.basis], alg.dim)
            found.append((WeightFunction(tuple(alpha)), in_a))
    spaces = tuple(found)

    total = sum(s.dim for _, s in spaces)
    decomposition = WeightDecomposition(
        h_space=h, spaces=spaces, complete=splits and total == n_dim, splits=splits,
        root_reports=reports, independent=_independent(spaces),
        h_in_zero_space=False, brackets_respect_weights=False)
    zero_space = decomposition.space_for(decomposition.zero_weight)
    return replace(
        decomposition,
        h_in_zero_space=zero_space is not None and h.issubspace(zero_space),
        brackets_respect_weights=_brackets_respect(alg, spaces, decomposition.space_for))


def lift_weight_spaces(ctx: DecompositionContext, w: WeightDecomposition,
                       H: Subspace) -> WeightDecomposition:
    """Populate ``w.lifted`` with A_alpha = pi(N_alpha) for a subspace H of A with pi(H) = h."""
    pi = ctx.require_direct()
    alg = ctx.algebra
    if image(pi, H) != w.h_space:
        raise HMismatch("pi(H) differs from the subalgebra the weights were computed on")
    lifted = tuple((alpha, image(pi, s)) for alpha, s in w.spaces)
    full = Subspace.full(alg.dim)

    def report(spaces):
        total = sum(s.dim for _, s in spaces)
        span = Subspace.zero(alg.dim)
        for _, s in spaces:
            span = subspace_sum(span, s)
        return total, total == alg.dim and span == full

    zero = w.zero_weight
    extended = tuple((alpha, subspace_sum(s, ctx.J) if alpha == zero else s)
                     for alpha, s in lifted)
    if all(alpha != zero for alpha, _ in extended):
        extended = ((zero, ctx.J),) + extended
    lit_total, lit_direct = report(lifted)
    ext_total, ext_direct = report(extended)

    def lookup(spaces):
        table = dict(spaces)
        return lambda alpha: table.get(alpha)

    zero_space = w.space_for(zero)
    lift = LiftReport(
        spaces=lifted, literal_sum_dim=lit_total, literal_direct=lit_direct,
        extended_spaces=extended, extended_sum_dim=ext_total, extended_direct=ext_direct,
        h_in_zero_space=zero_space is not None and image(pi, H).issubspace(zero_space),
        brackets_literal=_brackets_respect(alg, lifted, w.space_for),
        brackets_extended=_brackets_respect(alg, extended, lookup(extended)))
    return replace(w, lifted=lift)

import random
from fractions import Fraction as F

import pytest

from malcev import catalog as cat
from malcev.algebra import Algebra, adjoint_matrix, direct_sum
from malcev.errors import HMismatch, NotASubalgebra, NotDirect, NotInsideN, NotNilpotent
from malcev.ideals import decompose
from malcev.linalg import Matrix, Subspace, rref_span, unit_vector
from malcev.weights import (
    WeightFunction,
    adjoint_action,
    adjoint_action_via_quotient,
    is_nilpotent_subalgebra,
    lift_weight_spaces,
    lower_central_series,
    weight_decomposition,
)


def span_of(a, *labels):
    return rref_span([unit_vector(a.dim, a.index(x)) for x in labels], a.dim)


def test_adjoint_action_examples(big):
    ctx = decompose(big)
    assert adjoint_action(ctx, unit_vector(10, 5)).is_zero()
    h = big.basis_element("h")
    restricted = adjoint_matrix(big, h)
    expected = Matrix.from_rows([restricted.row(i)[:3] for i in range(3)])
    assert adjoint_action(ctx, h) == expected
    mixed = big.element([1, 0, 0, 3, -1, 0, F(1, 2), 0, 0, 7])
    assert adjoint_action(ctx, mixed) == adjoint_action(ctx, h)


def test_adjoint_action_agrees_with_quotient_route(big):
    ctx = decompose(big)
    rng = random.Random(0)
    for _ in range(15):
        x = big.element([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(10)])
        direct = adjoint_action(ctx, x)
        assert direct == adjoint_action_via_quotient(ctx, x)
        assert direct == adjoint_action(ctx, ctx.project(x))


def test_adjoint_action_requires_direct_sum():
    ctx = decompose(cat.solv4())
    with pytest.raises(NotDirect):
        adjoint_action(ctx, unit_vector(4, 0))


def test_nilpotency_examples(sl2):
    assert is_nilpotent_subalgebra(sl2, span_of(sl2, "e"))
    assert not is_nilpotent_subalgebra(sl2, Subspace.full(3))
    abelian = Algebra.abelian(3)
    assert is_nilpotent_subalgebra(abelian, rref_span([(1, 0, 0), (0, 1, 1)], 3))
    heis = cat.heisenberg3()
    assert is_nilpotent_subalgebra(heis, Subspace.full(3))
    assert [s.dim for s in lower_central_series(heis, Subspace.full(3))] == [3, 1, 0]
    with pytest.raises(NotASubalgebra):
        is_nilpotent_subalgebra(sl2, span_of(sl2, "e", "f"))


def test_sl2_weights(sl2):
    ctx = decompose(sl2)
    w = weight_decomposition(ctx, span_of(sl2, "h"))
    weights = {alpha.values[0]: s for alpha, s in w.spaces}
    assert sorted(weights) == [-2, 0, 2]
    assert weights[0] == span_of(sl2, "h")
    assert weights[2] == span_of(sl2, "e")
    assert weights[-2] == span_of(sl2, "f")
    assert w.complete and w.splits and w.independent
    assert w.h_in_zero_space and w.brackets_respect_weights


def test_cross3_does_not_split():
    a = cat.cross3()
    ctx = decompose(a)
    w = weight_decomposition(ctx, span_of(a, "e1"))
    assert [alpha.values for alpha, _ in w.spaces] == [(0,)]
    assert not w.complete and not w.splits
    assert w.root_reports[0].roots == ((0, 1),)


def test_zero_h_gives_single_space(sl2):
    ctx = decompose(sl2)
    w = weight_decomposition(ctx, Subspace.zero(3))
    assert len(w.spaces) == 1
    alpha, space = w.spaces[0]
    assert alpha == WeightFunction(()) and space == ctx.N and w.complete


def test_weight_decomposition_preconditions(sl2, big):
    ctx = decompose(sl2)
    with pytest.raises(NotNilpotent):
        weight_decomposition(ctx, Subspace.full(3))
    with pytest.raises(NotInsideN):
        weight_decomposition(decompose(big), span_of(big, "e3"))


def test_heisenberg_nilpotent_h_all_zero_weight():
    a = cat.heisenberg3()
    ctx = decompose(a)
    w = weight_decomposition(ctx, Subspace.full(3))
    assert len(w.spaces) == 1 and w.spaces[0][1].is_full() and w.complete


def test_two_dimensional_cartan_in_sl2_sum_sl2():
    a = direct_sum(cat.sl2(), cat.sl2())
    ctx = decompose(a)
    h = rref_span([unit_vector(6, 0), unit_vector(6, 3)], 6)
    w = weight_decomposition(ctx, h)
    assert w.complete and len(w.spaces) == 5
    zero = w.space_for(w.zero_weight)
    assert zero == h
    assert w.brackets_respect_weights and w.h_in_zero_space


def test_weight_spaces_independent_of_h_basis_order():
    a = direct_sum(cat.sl2(), cat.sl2())
    ctx = decompose(a)
    h1 = rref_span([unit_vector(6, 0), unit_vector(6, 3)], 6)
    h2 = rref_span([(1, 0, 0, 1, 0, 0), (1, 0, 0, -1, 0, 0)], 6)
    assert h1 == h2  # canonical storage
    spaces = {s for _, s in weight_decomposition(ctx, h1).spaces}
    assert spaces == {s for _, s in weight_decomposition(ctx, h2).spaces}


def test_lift_on_sl2(sl2):
    ctx = decompose(sl2)
    h = span_of(sl2, "h")
    w = lift_weight_spaces(ctx, weight_decomposition(ctx, h), h)
    assert w.lifted.literal_direct and w.lifted.literal_sum_dim == 3
    assert [s for _, s in w.lifted.spaces] == [s for _, s in w.spaces]


def test_lift_on_sum_with_m7(big):
    ctx = decompose(big)
    h = span_of(big, "h")
    w = lift_weight_spaces(ctx, weight_decomposition(ctx, h), h)
    lift = w.lifted
    assert lift.literal_sum_dim == 3 and not lift.literal_direct
    assert lift.extended_sum_dim == 10 and lift.extended_direct
    assert lift.brackets_literal and lift.brackets_extended and lift.h_in_zero_space
    # H may carry a J component; pi removes it
    shifted = rref_span([big.element([1, 0, 0, 0, 2, 0, 0, 0, 0, -1]).coords], 10)
    w2 = lift_weight_spaces(ctx, weight_decomposition(ctx, h), shifted)
    assert w2.lifted == lift


def test_lift_rejects_mismatched_h(big):
    ctx = decompose(big)
    w = weight_decomposition(ctx, span_of(big, "h"))
    with pytest.raises(HMismatch):
        lift_weight_spaces(ctx, w, span_of(big, "e"))


def test_weight_function_arithmetic():
    a = WeightFunction((F(1), F(-2)))
    b = WeightFunction((F(1, 2), F(2)))
    assert (a + b).values == (F(3, 2), F(0))
    assert a((F(2), F(1))) == 0
    assert str(a) == "(1, -2)"

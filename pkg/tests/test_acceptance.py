"""End-to-end acceptance checks; each prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import random
from fractions import Fraction as F
from itertools import combinations_with_replacement

from malcev import catalog as cat
from malcev.algebra import Algebra, bracket, validate, witness_residual
from malcev.cli import main
from malcev.delta import delta_span, lie_closure_check
from malcev.ideals import (
    coprime_product_check,
    correspondence_check,
    decompose,
    enumerate_i_ideals,
    enumerate_ideals,
    ideal_product,
    is_ideal,
    j_ideal,
    j_minimality_check,
    j_nucleus,
)
from malcev.linalg import (
    Matrix,
    generalized_kernel,
    kernel,
    rref_span,
    subspace_intersect,
    subspace_sum,
    unit_vector,
)
from malcev.weights import lift_weight_spaces, weight_decomposition

SEED = 20240601
ALGEBRAS = cat.catalog()


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} [{number:2d}] {title}"
    print(line + (f": {detail}" if detail else ""))
    assert ok, line


def direct_algebras():
    return [a for a in ALGEBRAS if decompose(a).direct]


def test_01_validator_calibration():
    failures = []
    for a in ALGEBRAS:
        r = validate(a)
        if a.name in cat.NON_LIE:
            ws = r.witnesses_for("jacobi")
            reproduced = any(any(witness_residual(a, w)) for w in ws)
            if not (r.is_malcev and not r.is_lie and ws and reproduced):
                failures.append(a.name)
        elif not (r.is_lie and r.is_malcev):
            failures.append(a.name)
    report(1, "validator calibration", not failures,
           f"{len(ALGEBRAS)} algebras, failures={failures}")


def test_02_j_and_n_structure():
    a = cat.get("sl2_plus_M7")
    ctx = decompose(a)
    J, N = j_ideal(a), j_nucleus(a)
    ok = (J.dim == 7 and N.dim == 3 and is_ideal(a, J.space) and is_ideal(a, N.space)
          and ctx.annihilation and ctx.direct
          and ctx.quotient.dim == 3 and ctx.quotient_is_lie)
    report(2, "J and N on sl2_plus_M7", ok,
           f"dim J={J.dim}, dim N={N.dim}, direct={ctx.direct}, quotient dim={ctx.quotient.dim}")


def test_03_minimality():
    checked, bad = 0, []
    for a in ALGEBRAS:
        for ideal in enumerate_ideals(a, 2):
            checked += 1
            if not j_minimality_check(a, ideal):
                bad.append(a.name)
    report(3, "J is the smallest ideal with Lie quotient", not bad,
           f"{checked} ideals checked")


def test_04_delta_closure():
    bad = []
    for a in ALGEBRAS:
        span = delta_span(a)
        if not lie_closure_check(span):
            bad.append(a.name)
        if a.name not in cat.NON_LIE and not span.is_zero():
            bad.append(a.name)
    report(4, "Delta span is a Lie subalgebra, zero on Lie entries", not bad, f"bad={bad}")


def test_05_ideal_correspondence():
    pairs = checked = 0
    bad = []
    for a in direct_algebras():
        ctx = decompose(a)
        ideals = enumerate_ideals(a, 2)
        for s in ideals:
            checked += 1
            r = correspondence_check(ctx, s.space)
            if not (r.forward and r.backward):
                bad.append((a.name, "correspondence"))
        with_j = [s for s in ideals if s.contains_J]
        for i, p in enumerate(with_j):
            for q in with_j[i:]:
                pairs += 1
                if not is_ideal(a, ideal_product(p, q)):
                    bad.append((a.name, "product"))
    report(5, "ideal correspondence and products over J", not bad,
           f"{checked} ideals, {pairs} products")


def test_06_coprime_products():
    coprime = 0
    bad = []
    for a in direct_algebras():
        ctx = decompose(a)
        ideals = enumerate_i_ideals(ctx, 2)
        for i, p in enumerate(ideals):
            for q in ideals[i:]:
                r = coprime_product_check(ctx, p, q)
                coprime += r.coprime
                if r.refuted:
                    bad.append(a.name)
    report(6, "co-prime i-ideal products are i-ideals", not bad and coprime > 0,
           f"{coprime} co-prime pairs")


def test_07_weight_decomposition():
    sl2 = cat.sl2()
    w = weight_decomposition(decompose(sl2), rref_span([unit_vector(3, 0)], 3))
    weights = sorted(alpha.values[0] for alpha, _ in w.spaces)
    ok_sl2 = (weights == [-2, 0, 2] and all(s.dim == 1 for _, s in w.spaces) and w.complete
              and w.independent and w.h_in_zero_space and w.brackets_respect_weights)
    cross = cat.cross3()
    wc = weight_decomposition(decompose(cross), rref_span([unit_vector(3, 0)], 3))
    report(7, "weight spaces of sl2 and cross3", ok_sl2 and not wc.complete,
           f"sl2 weights={[str(x) for x in weights]}, cross3 complete={wc.complete}")


def test_08_lift():
    a = cat.get("sl2_plus_M7")
    ctx = decompose(a)
    h = rref_span([a.basis_element("h").coords], a.dim)
    lift = lift_weight_spaces(ctx, weight_decomposition(ctx, h), h).lifted
    ok = (lift.brackets_literal and lift.literal_sum_dim == 3 and not lift.literal_direct
          and lift.extended_sum_dim == 10 and lift.extended_direct)
    report(8, "weight-space lift on sl2_plus_M7", ok,
           f"literal sum dim={lift.literal_sum_dim}, extended sum dim={lift.extended_sum_dim}")


def test_09_round_trip_and_determinism(capsys):
    round_trip = all(cat.parse(cat.serialize(a)) == a for a in ALGEBRAS)
    stable = True
    for a in ALGEBRAS:
        for argv in (["analyze", f"catalog:{a.name}"], ["ideals", f"catalog:{a.name}"]):
            runs = []
            for _ in range(2):
                main(["--format", "json", *argv])
                runs.append(capsys.readouterr().out)
            stable &= runs[0] == runs[1]
    with capsys.disabled():
        report(9, "round trip and byte-identical CLI output", round_trip and stable,
               f"round_trip={round_trip}, deterministic={stable}")


def _random_matrix(rng, rows, cols):
    return Matrix.from_rows([[F(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6
                              else F(0) for _ in range(cols)] for _ in range(rows)])


def _random_algebra(rng, n):
    brackets = {}
    for i, j in combinations_with_replacement(range(n), 2):
        if i < j and rng.random() < 0.5:
            brackets[(i, j)] = [F(rng.randint(-2, 2)) for _ in range(n)]
    return Algebra.from_brackets("r", [f"x{k}" for k in range(n)], brackets)


def test_10_plumbing():
    rng = random.Random(SEED)
    cases = 0
    bad = []
    for _ in range(300):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, r, c)
        cases += 1
        if m.rank() + kernel(m).dim != c:
            bad.append("rank-nullity")
    for _ in range(250):
        n = rng.randint(1, 5)
        u = rref_span([[rng.randint(-1, 1) for _ in range(n)] for _ in range(rng.randint(0, 3))], n)
        v = rref_span([[rng.randint(-1, 1) for _ in range(n)] for _ in range(rng.randint(0, 3))], n)
        cases += 1
        if subspace_sum(u, v).dim + subspace_intersect(u, v).dim != u.dim + v.dim:
            bad.append("dimension formula")
    for _ in range(150):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n)
        lam = F(rng.randint(-2, 2))
        eig = kernel(m - Matrix.identity(n).scale(lam))
        cases += 1
        if not eig.issubspace(generalized_kernel(m, lam)):
            bad.append("generalized kernel")
    for _ in range(350):
        n = rng.randint(2, 4)
        a = _random_algebra(rng, n)
        x, y, z = (a.element([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)])
                   for _ in range(3))
        s, t = F(rng.randint(-3, 3)), F(rng.randint(-3, 3), rng.randint(1, 3))
        cases += 1
        if bracket(x * s + y * t, z) != bracket(x, z) * s + bracket(y, z) * t:
            bad.append("left linearity")
        if bracket(z, x * s + y * t) != bracket(z, x) * s + bracket(z, y) * t:
            bad.append("right linearity")
        if bracket(x, y) != -bracket(y, x) or not bracket(x, x).is_zero():
            bad.append("anticommutativity")
    report(10, "linear algebra and bracket plumbing", not bad and cases >= 1000,
           f"{cases} random cases, seed {SEED}, failures={sorted(set(bad))}")

from __future__ import annotations

import random
from itertools import product as iproduct

import pytest

from eqschubert.factorial import (
    DegenerateX, NotEnoughParameters, TooManyParts, TypeAUnsupported, H_lambda, a_tuple, a_values,
    factorial_P, factorial_Q, factorial_schur, generic_a, generic_x, giambelli_pfaffian,
    kappa_sequence, lemma_perm, localize_factorial, parameters_for, pieri_check,
    schur_diagonal_product, x_v_tuple,
)
from eqschubert.localization import localize_eyd
from eqschubert.polyalg import ONE, X, ZERO, Var, avar, eps, product, xvar
from eqschubert.shapes import Partition, StrictPartition, contains, partitions_in_box, strict_partitions_in
from eqschubert.weyl import SchubertContext, parse_window, remark_pn_substitution


def ssyt(shape: Partition, d: int):
    """Semistandard tableaux of the shape with entries 1..d, as dicts cell -> entry."""
    cells = shape.cells()
    for values in iproduct(range(1, d + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(t[(i, j)] <= t[(i, j + 1)] for i, j in cells if (i, j + 1) in t) and all(
            t[(i, j)] < t[(i + 1, j)] for i, j in cells if (i + 1, j) in t
        ):
            yield t


def tableau_schur(lam: Partition, d: int, a):
    x = generic_x(d)
    return sum(
        (product(x[k - 1] - a[k + j - i - 1] for (i, j), k in t.items()) for t in ssyt(lam, d)), ZERO
    )


# -- factorial Schur ---------------------------------------------------------------------


def test_schur_examples():
    d = 3
    a = generic_a(6)
    assert factorial_schur(Partition((1,)), d, None, a) == sum(generic_x(3), ZERO) - sum(a[:3], ZERO)
    assert factorial_schur(Partition(()), d, None, a) == ONE
    with pytest.raises(TooManyParts):
        factorial_schur(Partition((1, 1, 1, 1)), 3)
    with pytest.raises(NotEnoughParameters):
        factorial_schur(Partition((3,)), 3, None, generic_a(2))
    with pytest.raises(DegenerateX):
        factorial_schur(Partition((1,)), 2, [eps(1), eps(1)], a)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_schur_matches_tableau_expansion(lam):
    lam = Partition(lam)
    a = generic_a(8)
    assert factorial_schur(lam, 3, None, a) == tableau_schur(lam, 3, a)


def test_a_tuple_examples():
    a = generic_a(4)
    assert a_values(a_tuple(Partition(()), "ordinary", 2), a) == [a[0], a[1]]
    assert a_tuple(StrictPartition((2,)), "strict", 3) == [3, 0, 0]
    assert a_tuple(StrictPartition((2, 1)), "strict", 3) == [3, 2, 1]


def test_schur_vanishing_and_diagonal_product_d2():
    d = 2
    a = generic_a(6)
    shapes = partitions_in_box(2, 2)
    for lam in shapes:
        for mu in shapes:
            val = factorial_schur(lam, d, a_values(a_tuple(mu, "ordinary", d), a), a)
            if not contains(mu, lam):
                assert val.is_zero()
            if mu == lam:
                assert val == schur_diagonal_product(lam, d, a)


def test_lemma_perm_is_permutation():
    for lam in partitions_in_box(3, 3):
        w = lemma_perm(lam, 3, 3 + lam.part(1))
        assert sorted(w) == list(range(1, len(w) + 1))


def test_pieri_type_a_small():
    assert pieri_check(partitions_in_box(2, 2), 2, "ordinary").ok


# -- factorial P and Q -----------------------------------------------------------------


def test_P_one_box():
    a = generic_a(2)
    assert factorial_P(StrictPartition((1,)), 2, None, a) == xvar(1) + xvar(2)
    assert factorial_P(StrictPartition((1,)), 3, None, a) == xvar(1) + xvar(2) + xvar(3) - avar(1)
    assert factorial_P(StrictPartition(()), 3, None, a) == ONE
    assert factorial_Q(StrictPartition((1,)), 2, None, a) == 2 * (xvar(1) + xvar(2))
    with pytest.raises(TooManyParts):
        factorial_P(StrictPartition((3, 2, 1)), 2)
    with pytest.raises(NotEnoughParameters):
        factorial_P(StrictPartition((3,)), 3, None, generic_a(2))


def test_P_degree_and_symmetry():
    a = generic_a(4)
    x = generic_x(3)
    for lam in strict_partitions_in(StrictPartition.rho(3)):
        p = factorial_P(lam, 3, x, a)
        assert p.is_homogeneous(lam.size)
        swapped = p.substitute({Var(X, 1): xvar(2), Var(X, 2): xvar(1)})
        assert swapped == p


def test_P_stability_with_two_zeros():
    a = generic_a(5)
    x = generic_x(3)
    for lam in strict_partitions_in(StrictPartition.rho(3)):
        assert factorial_P(lam, 3, x, a) == factorial_P(lam, 5, x + [ZERO, ZERO], a, reduce_zeros=False)


def test_kappa_and_H_examples():
    assert kappa_sequence(StrictPartition((1,)), 1) == [2, -1]
    a = generic_a(2)
    assert H_lambda(StrictPartition((1,)), 1, a) == a[1] - a[0]
    assert factorial_P(StrictPartition((1,)), 1, a_values(a_tuple(StrictPartition((1,)), "strict", 1), a), a) == a[1] - a[0]
    assert H_lambda(StrictPartition(()), 2, generic_a(3)) == ONE


def test_P_vanishing_and_H_n2():
    a = generic_a(4)
    pool = strict_partitions_in(StrictPartition.rho(2))
    for lam in pool:
        for mu in pool:
            val = factorial_P(lam, 2, a_values(a_tuple(mu, "strict", 2), a), a)
            if not contains(mu, lam):
                assert val.is_zero()
            if mu == lam:
                assert val == H_lambda(lam, 2, a)


def test_pieri_strict_small():
    assert pieri_check(strict_partitions_in(StrictPartition.rho(2)), 3, "strict").ok


# -- specialisations at fixed points -------------------------------------------------------


def test_x_v_and_parameters():
    assert x_v_tuple(SchubertContext.A(9, 4), parse_window("157923468")) == [eps(1), eps(5), eps(7), eps(9)]
    c4 = SchubertContext.C(4)
    assert x_v_tuple(c4, parse_window("-4,-3,-2,-1")) == [eps(1), eps(2), eps(3), eps(4)]
    assert x_v_tuple(c4, c4.identity) == [ZERO] * 4
    assert x_v_tuple(SchubertContext.B(3), parse_window("2,-3,-1")) == [eps(1), eps(3), ZERO]
    assert parameters_for(c4) == [ZERO, eps(4), eps(3), eps(2)]
    assert parameters_for(SchubertContext.D(5)) == [eps(5), eps(4), eps(3), eps(2)]
    assert parameters_for(SchubertContext.A(4, 2)) == [eps(1), eps(2), eps(3)]
    # D_N with N - 1 odd: padded to length N
    assert len(x_v_tuple(SchubertContext.D(4), SchubertContext.D(4).identity)) == 4
    assert len(x_v_tuple(SchubertContext.D(5), SchubertContext.D(5).identity)) == 4


def test_localize_factorial_examples():
    ctx = SchubertContext.A(9, 4)
    w, v = parse_window("124735689"), parse_window("157923468")
    assert localize_factorial(ctx, w, v) == localize_eyd(ctx, w, v)
    for ctx in (SchubertContext.C(3), SchubertContext.D(4), SchubertContext.A(4, 2)):
        for v in ctx.grassmannian_elements():
            assert localize_factorial(ctx, ctx.identity, v) == ONE


@pytest.mark.parametrize(
    "ctx", [SchubertContext.A(5, 2), SchubertContext.B(3), SchubertContext.C(3), SchubertContext.D(4), SchubertContext.D(3)],
    ids=str,
)
def test_localize_factorial_exhaustive(ctx):
    for v in ctx.grassmannian_elements():
        for w in ctx.grassmannian_elements():
            assert localize_factorial(ctx, w, v) == localize_eyd(ctx, w, v)


def test_type_d_odd_rank_printed_rule_is_the_other_parabolic():
    """The printed odd-rank rule yields the restriction after e_N -> -e_N."""
    ctx = SchubertContext.D(4)
    n, m = ctx.n, ctx.n - 1
    for mu in ctx.shapes():
        v = ctx.element(mu)
        barred = sorted(-k for k in v.window if k < 0)
        x = [eps(j) for j in barred[: mu.r]]
        if (m - mu.r) % 2 == 0:
            x.append(-eps(n))
        x += [ZERO] * (n - len(x))
        a = [-eps(n)] + [eps(k) for k in range(m, 1, -1)]
        for lam in ctx.shapes():
            printed = factorial_P(lam, len(x), x, a)
            assert printed == remark_pn_substitution(ctx, localize_eyd(ctx, lam, mu))


# -- Giambelli Pfaffian -----------------------------------------------------------------------


def test_giambelli_small_cases():
    ctx = SchubertContext.C(3)
    for v in ctx.grassmannian_elements():
        res = giambelli_pfaffian(ctx, StrictPartition((2, 1)), v)
        assert len(res.matrix) == 2 and res.holds
        res = giambelli_pfaffian(ctx, StrictPartition((3,)), v)
        assert len(res.matrix) == 2 and res.pfaffian == localize_eyd(ctx, StrictPartition((3,)), v)
    with pytest.raises(TypeAUnsupported):
        giambelli_pfaffian(SchubertContext.A(4, 2), Partition((1,)), SchubertContext.A(4, 2).identity)


def test_giambelli_three_rows_expanded():
    ctx = SchubertContext.C(3)
    for v in ctx.grassmannian_elements():
        X = lambda *parts: localize_eyd(ctx, StrictPartition(parts), v)  # noqa: E731
        expanded = X(3, 2) * X(1) - X(3, 1) * X(2) + X(3) * X(2, 1)
        res = giambelli_pfaffian(ctx, StrictPartition((3, 2, 1)), v)
        assert res.pfaffian == expanded == res.expected


def test_giambelli_random_b4():
    ctx = SchubertContext.B(4)
    rng = random.Random(11)
    pool = ctx.shapes()
    for _ in range(6):
        lam, v = rng.choice(pool), rng.choice(ctx.grassmannian_elements())
        assert giambelli_pfaffian(ctx, lam, v).holds

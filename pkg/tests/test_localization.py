from __future__ import annotations

import random

import pytest

from eqschubert.localization import (
    LocalizedClass, billey_bruteforce, chevalley_coefficient, chevalley_lhs, localize,
    localize_billey, localize_eyd, verify_chevalley, xi_simple,
)
from eqschubert.polyalg import ONE, ZERO, eps, product
from eqschubert.shapes import Partition, StrictPartition, contains, covers_above, shapes_between
from eqschubert.weyl import (
    ContextMismatch, NotReduced, SchubertContext, inversion_roots, length, parse_window,
    reduced_word, word_to_element,
)

SMALL = [
    SchubertContext.A(5, 2), SchubertContext.A(6, 3), SchubertContext.B(3),
    SchubertContext.C(3), SchubertContext.D(4),
]


def example2_printed():
    """The seven printed products for w = 124735689, v = 157923468."""
    e = eps
    rows = [
        [(2, 9), (3, 9), (4, 9), (2, 7)],
        [(2, 9), (3, 9), (6, 7), (2, 7)],
        [(2, 9), (3, 9), (4, 9), (3, 5)],
        [(2, 9), (3, 9), (6, 7), (3, 5)],
        [(2, 9), (4, 7), (6, 7), (2, 7)],
        [(2, 9), (4, 7), (6, 7), (3, 5)],
        [(3, 7), (4, 7), (6, 7), (3, 5)],
    ]
    return sum((product(e(a) - e(b) for a, b in row) for row in rows), ZERO)


def test_example2_value():
    ctx = SchubertContext.A(9, 4)
    w, v = parse_window("124735689"), parse_window("157923468")
    assert localize_eyd(ctx, w, v) == example2_printed()
    assert localize_billey(ctx, w, v) == example2_printed()


def test_example5_type_c_value():
    ctx = SchubertContext.C(4)
    e = eps
    expected = (
        2 * e(1) * (e(1) + e(2)) + 2 * e(1) * (e(2) + e(3)) + 2 * e(1) * (e(3) + e(4))
        + 2 * e(3) * (e(3) + e(4)) + 2 * e(2) * (e(3) + e(4)) + 2 * e(2) * (e(2) + e(3))
    )
    v = parse_window("-4,-3,-2,-1")
    assert localize_eyd(ctx, StrictPartition((2,)), v) == expected
    assert localize_billey(ctx, StrictPartition((2,)), v) == expected


@pytest.mark.parametrize("ctx", SMALL, ids=str)
def test_basic_properties(ctx):
    for mu in ctx.shapes():
        v = ctx.element(mu)
        assert localize_eyd(ctx, ctx.identity, v) == ONE
        assert localize_eyd(ctx, v, v) == product(inversion_roots(ctx, v))
        for lam in ctx.shapes():
            val = localize_eyd(ctx, lam, v)
            assert val.is_zero() == (not contains(mu, lam))
            if not val.is_zero():
                assert val.is_homogeneous(lam.size)
            assert localize_billey(ctx, lam, v) == val


@pytest.mark.parametrize("ctx", SMALL, ids=str)
def test_divisor_class(ctx):
    one = ctx.coerce_shape((1,))
    for v in ctx.grassmannian_elements():
        assert localize_eyd(ctx, one, v) == xi_simple(ctx, v)


@pytest.mark.parametrize("ctx", [SchubertContext.A(6, 3), SchubertContext.C(3), SchubertContext.D(4)], ids=str)
def test_billey_dp_matches_subset_sum(ctx):
    for v in ctx.grassmannian_elements():
        for w in ctx.grassmannian_elements():
            assert localize_billey(ctx, w, v) == billey_bruteforce(ctx, w, v)


@pytest.mark.parametrize("ctx", [SchubertContext.A(6, 3), SchubertContext.B(3), SchubertContext.D(4)], ids=str)
def test_billey_independent_of_reduced_word(ctx):
    for v in ctx.grassmannian_elements():
        word = reduced_word(ctx, v, prefer="high")
        for w in ctx.grassmannian_elements():
            assert localize_billey(ctx, w, v, word) == localize_billey(ctx, w, v)


@pytest.mark.parametrize("ctx", [SchubertContext.A(5, 2), SchubertContext.C(3), SchubertContext.D(4)], ids=str)
def test_parabolic_invariance(ctx):
    rng = random.Random(7)
    levi = [i for i in range(1, ctx.rank + 1) if i != ctx.parabolic_index]
    for v in ctx.grassmannian_elements():
        u = word_to_element(ctx, [rng.choice(levi) for _ in range(4)])
        vu = v * u
        word = reduced_word(ctx, vu)
        for w in ctx.grassmannian_elements():
            assert localize_billey(ctx, w, vu, word) == localize_billey(ctx, w, v)


def test_billey_errors_and_zero():
    ctx = SchubertContext.C(3)
    v = ctx.element(StrictPartition((2,)))
    with pytest.raises(NotReduced):
        localize_billey(ctx, ctx.identity, v, [3, 3])
    assert localize_billey(ctx, StrictPartition((2, 1)), v) == ZERO
    with pytest.raises(ContextMismatch):
        localize_eyd(ctx, ctx.identity, parse_window("1,2"))


def test_localize_dispatch():
    ctx = SchubertContext.D(4)
    lam, mu = StrictPartition((2, 1)), StrictPartition((3, 2))
    values = {m: localize(ctx, lam, mu, m) for m in ("eyd", "billey", "factorial")}
    assert len(set(values.values())) == 1
    with pytest.raises(ValueError):
        localize(ctx, lam, mu, "other")
    rec = LocalizedClass(ctx, ctx.element(lam), ctx.element(mu), values["eyd"])
    assert rec.value.is_homogeneous(3)


# -- Chevalley recurrence -------------------------------------------------------------


def test_chevalley_single_box():
    ctx = SchubertContext.C(3)
    rep = verify_chevalley(ctx, (1,))
    assert len(rep.equations) == 1 and rep.ok


@pytest.mark.parametrize(
    "ctx,mu",
    [
        (SchubertContext.A(5, 2), Partition((3, 2))),
        (SchubertContext.B(3), StrictPartition.rho(3)),
        (SchubertContext.D(4), StrictPartition.rho(3)),
        (SchubertContext.D(5), StrictPartition.rho(4)),
    ],
    ids=str,
)
def test_chevalley_unit_coefficients(ctx, mu):
    rep = verify_chevalley(ctx, mu)
    assert rep.ok
    assert rep.nonunit == []
    assert verify_chevalley(ctx, mu, method="billey").ok


def test_chevalley_type_c_needs_coefficient_two():
    ctx = SchubertContext.C(3)
    mu = StrictPartition.rho(3)
    rep = verify_chevalley(ctx, mu)
    assert rep.ok
    assert rep.nonunit
    for lam, nu, c in rep.nonunit:
        beta, c2 = chevalley_coefficient(ctx, lam, nu)
        assert c == c2 == 2
        # off-diagonal box added: the root is e_i + e_j with i != j
        assert len(beta.linear_coefficients()) == 2
    # with every coefficient forced to one some equation breaks
    v = ctx.element(mu)
    pool = shapes_between(StrictPartition(()), mu)
    F = {lam: localize_eyd(ctx, lam, v) for lam in pool}
    broken = [
        lam for lam in pool if lam != mu
        and chevalley_lhs(ctx, lam, mu) * F[lam] != sum((F[nu] for nu in covers_above(lam, mu)), ZERO)
    ]
    assert broken


def test_chevalley_lhs_type_a_explicit():
    ctx = SchubertContext.A(5, 2)
    d = ctx.d
    mu = Partition((3, 2))
    for lam in ctx.shapes():
        if not contains(mu, lam):
            continue
        explicit = sum(
            (eps(lam.part(d - i + 1) + i) - eps(mu.part(d - i + 1) + i) for i in range(1, d + 1)), ZERO
        )
        assert chevalley_lhs(ctx, lam, mu) == explicit


@pytest.mark.parametrize("N", [4, 5])
def test_chevalley_lhs_type_d_explicit(N):
    ctx = SchubertContext.D(N)
    m = N - 1
    for mu in ctx.shapes():
        for lam in ctx.shapes():
            if not contains(mu, lam):
                continue
            explicit = sum((eps(m - mu.part(i) + 1) for i in range(1, mu.r0 + 1)), ZERO) - sum(
                (eps(m - lam.part(i) + 1) for i in range(1, lam.r0 + 1)), ZERO
            )
            assert chevalley_lhs(ctx, lam, mu) == explicit

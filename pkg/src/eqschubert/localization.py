"""Restrictions of equivariant Schubert classes to torus fixed points.

Two independent routes are provided:

* :func:`localize_eyd` sums, over excited Young diagrams, the product of the
  roots sitting in the occupied cells.
* :func:`localize_billey` sums products of roots over reduced subwords of a
  reduced word for the fixed point.

:func:`verify_chevalley` checks the Chevalley recurrence that characterises
the restrictions, with coefficients computed from root data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .eyd import enumerate_eyd, kind_for
from .polyalg import ONE, ZERO, EPS, Polynomial, product
from .shapes import Partition, StrictPartition, contains, covers_above, shapes_between
from .weyl import (
    ContextMismatch, NotReduced, SchubertContext, SignedPermutation, _apply_letter,
    _beta_closed, act, beta_sequence, length, row_reading_word, word_to_element,
)

__all__ = [
    "LocalizedClass", "localize_eyd", "localize_billey", "billey_bruteforce",
    "xi_simple", "chevalley_lhs", "chevalley_coefficient", "verify_chevalley",
    "ChevalleyEquation", "ChevalleyReport", "as_element", "localize",
]


@dataclass(frozen=True)
class LocalizedClass:
    ctx: SchubertContext
    w: SignedPermutation
    v: SignedPermutation
    value: Polynomial


def as_element(ctx: SchubertContext, x) -> SignedPermutation:
    """Accept a group element, a shape, or a raw window."""
    if isinstance(x, (Partition, StrictPartition)):
        return ctx.element(x)
    v = x if isinstance(x, SignedPermutation) else SignedPermutation(tuple(x))
    ctx.check_element(v)
    return v


def localize_eyd(ctx: SchubertContext, w, v) -> Polynomial:
    """[X_w]|_v as a sum over excited Young diagrams; zero unless w <= v."""
    w, v = as_element(ctx, w), as_element(ctx, v)
    lam, mu = ctx.shape(w), ctx.shape(v)
    if not contains(mu, lam):
        return ZERO
    betas = {c: _beta_closed(ctx, v, c) for c in mu.cells()}
    total = ZERO
    for state in enumerate_eyd(lam, mu, kind_for(ctx)):
        total = total + product(betas[c] for c in state.cells)
    return total


def _check_word(ctx: SchubertContext, v: SignedPermutation, word) -> list[int]:
    if word is None:
        return row_reading_word(ctx, ctx.shape(v))
    word = list(word)
    if word_to_element(ctx, word) != v or length(ctx, v) != len(word):
        raise NotReduced(f"{word} is not a reduced word for {v.window}")
    return word


def localize_billey(ctx: SchubertContext, w, v, word: Sequence[int] | None = None) -> Polynomial:
    """[X_w]|_v = sum over reduced subwords for w of the products of their roots.

    Dynamic programming over the word, keyed by the product of the letters
    chosen so far.  A partial product u is kept only while it is a left
    factor of w in the weak order, i.e. l(u^{-1} w) = l(w) - l(u).
    """
    w = w if isinstance(w, SignedPermutation) else as_element(ctx, w)
    v = v if isinstance(v, SignedPermutation) else as_element(ctx, v)
    word = _check_word(ctx, v, word)
    betas = beta_sequence(ctx, word)
    lw = length(ctx, w)

    def prefix_of_w(u: tuple, lu: int) -> bool:
        return length(ctx, SignedPermutation(u).inverse() * w) == lw - lu

    states: dict[tuple, tuple[int, Polynomial]] = {ctx.identity.window: (0, ONE)}
    for pos, (letter, beta) in enumerate(zip(word, betas)):
        remaining = len(word) - pos
        nxt: dict[tuple, tuple[int, Polynomial]] = {}
        for u, (lu, val) in states.items():
            if lw - lu <= remaining - 1:
                _merge(nxt, u, lu, val)
            if lu < lw:
                trial = list(u)
                _apply_letter(ctx, trial, letter)
                trial = tuple(trial)
                if prefix_of_w(trial, lu + 1):
                    _merge(nxt, trial, lu + 1, val * beta)
        states = nxt
    got = states.get(w.window)
    return got[1] if got else ZERO


def _merge(table: dict, key, lu: int, val: Polynomial):
    if key in table:
        table[key] = (lu, table[key][1] + val)
    else:
        table[key] = (lu, val)


def billey_bruteforce(ctx: SchubertContext, w, v, word: Sequence[int] | None = None) -> Polynomial:
    """Reference implementation iterating over every subset of positions."""
    w = w if isinstance(w, SignedPermutation) else as_element(ctx, w)
    v = v if isinstance(v, SignedPermutation) else as_element(ctx, v)
    word = _check_word(ctx, v, word)
    betas = beta_sequence(ctx, word)
    lw = length(ctx, w)
    total = ZERO
    for idx in combinations(range(len(word)), lw):
        if word_to_element(ctx, [word[k] for k in idx]) == w:
            total = total + product(betas[k] for k in idx)
    return total


def localize(ctx: SchubertContext, w, v, method: str = "eyd") -> Polynomial:
    if method == "eyd":
        return localize_eyd(ctx, w, v)
    if method == "billey":
        return localize_billey(ctx, w, v)
    if method == "factorial":
        from .factorial import localize_factorial
        return localize_factorial(ctx, w, v)
    raise ValueError(f"unknown method {method!r}")


# -- Chevalley recurrence -----------------------------------------------------


def xi_simple(ctx: SchubertContext, v: SignedPermutation) -> Polynomial:
    """Restriction of the divisor class: varpi - v(varpi)."""
    om = ctx.fundamental_weight()
    return om - act(v, om)


def chevalley_lhs(ctx: SchubertContext, lam, mu) -> Polynomial:
    """The linear form multiplying F_lam in the recurrence at the point mu."""
    return xi_simple(ctx, ctx.element(mu)) - xi_simple(ctx, ctx.element(lam))


def _pairing(x: Polynomial, y: Polynomial) -> Fraction:
    cx, cy = x.linear_coefficients(), y.linear_coefficients()
    return sum((Fraction(c) * cy.get(k, 0) for k, c in cx.items()), Fraction(0))


def _reflection_of(ctx: SchubertContext, root: Polynomial) -> SignedPermutation:
    coeffs = {v.index: c for v, c in root.linear_coefficients().items() if v.family == EPS}
    w = list(range(1, ctx.n + 1))
    idx = sorted(coeffs)
    if len(idx) == 1:
        w[idx[0] - 1] = -w[idx[0] - 1]
    else:
        i, j = idx
        if coeffs[i] == coeffs[j]:
            w[i - 1], w[j - 1] = -j, -i
        else:
            w[i - 1], w[j - 1] = j, i
    return SignedPermutation(tuple(w))


def chevalley_coefficient(ctx: SchubertContext, lam, nu) -> tuple[Polynomial, Fraction]:
    """The root beta with w_nu = s_beta w_lam, and <w_lam(varpi), beta^vee>."""
    w_lam, w_nu = ctx.element(lam), ctx.element(nu)
    refl = w_nu * w_lam.inverse()
    for beta in ctx.positive_roots:
        if _reflection_of(ctx, beta) == refl:
            wom = act(w_lam, ctx.fundamental_weight())
            return beta, 2 * _pairing(wom, beta) / _pairing(beta, beta)
    raise ContextMismatch(f"{nu} is not obtained from {lam} by a reflection")


@dataclass
class ChevalleyEquation:
    lam: object
    lhs_coefficient: Polynomial
    covers: list  # (nu, root, coefficient)
    holds: bool
    nonunit: list = field(default_factory=list)


@dataclass
class ChevalleyReport:
    ctx: SchubertContext
    mu: object
    equations: list

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.equations)

    @property
    def nonunit(self) -> list:
        return [(e.lam, nu, c) for e in self.equations for (nu, c) in e.nonunit]

    @property
    def failures(self) -> list:
        return [e.lam for e in self.equations if not e.holds]


def verify_chevalley(ctx: SchubertContext, mu, method: str = "eyd") -> ChevalleyReport:
    """Check (xi(v) - xi(w_lam)) F_lam = sum_nu c_nu F_nu for every lam < mu.

    F is the restriction to the point of ``mu``; nu runs over shapes covering
    lam inside mu.  Coefficients c_nu come from root data; any value other
    than 1 is listed in the report rather than hidden.
    """
    mu = ctx.coerce_shape(mu)
    v = ctx.element(mu)
    pool = shapes_between(type(mu)(()), mu)
    F = {lam: localize(ctx, ctx.element(lam), v, method) for lam in pool}
    equations = []
    for lam in pool:
        if lam == mu:
            continue
        coeff = chevalley_lhs(ctx, lam, mu)
        covers, rhs, nonunit = [], ZERO, []
        for nu in covers_above(lam, mu):
            beta, c = chevalley_coefficient(ctx, lam, nu)
            covers.append((nu, beta, c))
            rhs = rhs + F[nu] * c
            if c != 1:
                nonunit.append((nu, c))
        equations.append(ChevalleyEquation(lam, coeff, covers, coeff * F[lam] == rhs, nonunit))
    return ChevalleyReport(ctx, mu, equations)

"""Multiplicities of Schubert varieties at torus fixed points.

The multiplicity is the number of excited Young diagrams of the relevant
kind.  Independently it is the value of the restriction at a point h_v of
the Lie algebra of the torus where every root factor evaluates to 1.  Type B
varieties are identified with type D varieties one rank up, and their counts
are taken there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .eyd import enumerate_eyd, kind_for
from .localization import as_element, localize_eyd
from .polyalg import EPS, Var, const, pfaffian
from .shapes import StrictPartition, contains
from .weyl import SchubertContext, SignedPermutation

__all__ = [
    "MultiplicityError", "NotComparable", "TypeBUnsupported", "MultiplicityReport",
    "multiplicity", "h_v", "multiplicity_via_hv", "multiplicity_pfaffian_check",
    "PfaffianReport", "multiplicity_report",
]


class MultiplicityError(ValueError):
    pass


class NotComparable(MultiplicityError):
    pass


class TypeBUnsupported(MultiplicityError):
    pass


def _shapes(ctx: SchubertContext, w, v):
    w, v = as_element(ctx, w), as_element(ctx, v)
    lam, mu = ctx.shape(w), ctx.shape(v)
    if not contains(mu, lam):
        raise NotComparable(f"{lam} is not contained in {mu}")
    return w, v, lam, mu


def multiplicity(ctx: SchubertContext, w, v) -> int:
    """m_v(X_w) as the size of the excited-diagram set."""
    _, _, lam, mu = _shapes(ctx, w, v)
    if ctx.lie_type == "B":
        return len(enumerate_eyd(lam, mu, kind_for(SchubertContext.D(ctx.n + 1))))
    return len(enumerate_eyd(lam, mu, kind_for(ctx)))


def h_v(ctx: SchubertContext, v: SignedPermutation) -> dict:
    """Values of the e-variables at which every root factor of v's diagram is 1.

    Type A: e_{v(k)} -> 1 for k > d and 0 otherwise.  Types C and D: e_k -> 1/2
    when k occurs barred in v and -1/2 otherwise.
    """
    if ctx.lie_type == "B":
        raise TypeBUnsupported("no h_v evaluation for type B; use the type D count")
    if ctx.lie_type == "A":
        return {Var(EPS, k): (1 if pos > ctx.d else 0) for pos, k in enumerate(v.window, 1)}
    barred = {-k for k in v.window if k < 0}
    half = Fraction(1, 2)
    return {Var(EPS, k): (half if k in barred else -half) for k in range(1, ctx.n + 1)}


def multiplicity_via_hv(ctx: SchubertContext, w, v) -> int:
    if ctx.lie_type == "B":
        raise TypeBUnsupported("no h_v evaluation for type B; use the type D count")
    w, v, _, _ = _shapes(ctx, w, v)
    value = Fraction(localize_eyd(ctx, w, v).evaluate(h_v(ctx, v)))
    if value.denominator != 1:
        raise MultiplicityError(f"non-integral value {value} at h_v")
    return int(value)


@dataclass
class PfaffianReport:
    matrix: list
    pfaffian: int
    multiplicity: int

    @property
    def holds(self) -> bool:
        return self.pfaffian == self.multiplicity


def multiplicity_pfaffian_check(ctx: SchubertContext, lam, v) -> PfaffianReport:
    """Compare m_v(X_lam) with the Pfaffian of the two-row multiplicities."""
    if ctx.lie_type not in ("B", "C", "D"):
        raise MultiplicityError("the multiplicity Pfaffian concerns strict partitions")
    lam = ctx.coerce_shape(lam)
    v = as_element(ctx, v)
    if not contains(ctx.shape(v), lam):
        raise NotComparable(f"{lam} is not contained in {ctx.shape(v)}")
    parts = list(lam.parts) + [0] * (lam.r0 - lam.r)
    size = lam.r0
    mat = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            m = multiplicity(ctx, StrictPartition((parts[i], parts[j])), v)
            mat[i][j], mat[j][i] = m, -m
    pf = pfaffian([[const(c) for c in row] for row in mat]).constant_term() if size else 1
    return PfaffianReport(mat, int(pf), multiplicity(ctx, lam, v))


@dataclass
class MultiplicityReport:
    ctx: SchubertContext
    w: SignedPermutation
    v: SignedPermutation
    count: int
    methods: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return all(val == self.count for val in self.methods.values())


def multiplicity_report(ctx: SchubertContext, w, v) -> MultiplicityReport:
    """Every applicable method, keyed by name."""
    w, v, lam, _ = _shapes(ctx, w, v)
    count = multiplicity(ctx, w, v)
    methods = {"count": count}
    if ctx.lie_type != "B":
        methods["h_v"] = multiplicity_via_hv(ctx, w, v)
    if ctx.lie_type != "A":
        methods["pfaffian"] = multiplicity_pfaffian_check(ctx, lam, v).pfaffian
    return MultiplicityReport(ctx, w, v, count, methods)

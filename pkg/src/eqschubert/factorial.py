"""Factorial Schur functions and factorial P/Q-functions, with closed formulas.

``s_lambda(x|a)`` is the determinant ratio ``det((x_j|a)^{lambda_i+d-i}) / Vandermonde``
where ``(z|a)^k = (z-a_1)...(z-a_k)``.

``P_lambda(x|a)`` is the symmetrisation of
``prod_k (x_k|a)^{lambda_k} * prod_{i<=r, i<j<=n} (x_i+x_j)/(x_i-x_j)``
divided by ``(n-r)!``.  The summand only depends on where the first r
variables go, so we sum over injective maps ``[r] -> [n]`` instead of all of
``S_n``; each summand is multiplied by the Vandermonde to clear denominators
and the total is divided by it exactly at the end.

Parameters are passed as Python lists, ``a[0]`` being a_1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .polyalg import (
    ONE, ZERO, X, A, Polynomial, Var, avar, const, determinant, eps, exact_divide,
    pfaffian, product, xvar,
)
from .shapes import Partition, StrictPartition, contains, covers_above
from .weyl import ContextMismatch, SchubertContext, SignedPermutation

__all__ = [
    "FactorialError", "TooManyParts", "NotEnoughParameters", "DegenerateX",
    "TypeAUnsupported", "rising", "factorial_schur", "a_tuple", "a_values",
    "factorial_P", "factorial_Q", "H_lambda", "kappa_sequence", "lemma_perm",
    "schur_diagonal_product", "pieri_check", "PieriReport", "x_v_tuple",
    "parameters_for", "localize_factorial", "giambelli_pfaffian", "GiambelliResult",
    "generic_x", "generic_a",
]


class FactorialError(ValueError):
    pass


class TooManyParts(FactorialError):
    pass


class NotEnoughParameters(FactorialError):
    pass


class DegenerateX(FactorialError):
    pass


class TypeAUnsupported(FactorialError):
    pass


def generic_x(m: int) -> list[Polynomial]:
    return [xvar(i) for i in range(1, m + 1)]


def generic_a(m: int) -> list[Polynomial]:
    return [avar(i) for i in range(1, m + 1)]


def _as_poly(c) -> Polynomial:
    return c if isinstance(c, Polynomial) else const(c)


def rising(z: Polynomial, a: Sequence[Polynomial], k: int) -> Polynomial:
    """(z|a)^k = (z - a_1) ... (z - a_k)."""
    if k > len(a):
        raise NotEnoughParameters(f"need a_1..a_{k}, have {len(a)} parameters")
    out = ONE
    for i in range(k):
        f = z - a[i]
        if f.is_zero():
            return ZERO
        out = out * f
    return out


def _divide_vandermonde(num: Polynomial, x: Sequence[Polynomial]) -> Polynomial:
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            num = exact_divide(num, x[i] - x[j])
    return num


# -- type A -------------------------------------------------------------------


def factorial_schur(lam, d: int, x: Sequence | None = None, a: Sequence | None = None) -> Polynomial:
    """s_lambda^{(d)}(x|a); generic symbols are used when x or a are omitted."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if len(lam) > d:
        raise TooManyParts(f"{lam} has more than {d} parts")
    x = generic_x(d) if x is None else [_as_poly(t) for t in x]
    if len(x) != d:
        raise FactorialError(f"expected {d} x values, got {len(x)}")
    need = lam.part(1) + d - 1
    a = generic_a(need) if a is None else [_as_poly(t) for t in a]
    if len(a) < need:
        raise NotEnoughParameters(f"need a_1..a_{need}, have {len(a)} parameters")
    if len(set(x)) != len(x):
        raise DegenerateX("repeated x entries make the Vandermonde vanish")
    mat = [[rising(x[j], a, lam.part(i + 1) + d - i - 1) for j in range(d)] for i in range(d)]
    return _divide_vandermonde(determinant(mat), x)


def a_tuple(lam, kind: str, size: int) -> list[int]:
    """Indices of the vanishing point a_lambda; 0 stands for the value zero.

    ``kind`` is "ordinary" (size = d) or "strict" (size = n).
    """
    if kind == "ordinary":
        lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
        return [lam.part(size - k + 1) + k for k in range(1, size + 1)]
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    out = [p + 1 for p in lam.parts]
    if (size - lam.r) % 2:
        out.append(1)
    return out + [0] * (size - len(out))


def a_values(indices: Sequence[int], a: Sequence[Polynomial]) -> list[Polynomial]:
    return [ZERO if k == 0 else (a[k - 1] if k > 0 else -a[-k - 1]) for k in indices]


def lemma_perm(lam: Partition, d: int, n: int) -> list[int]:
    """w(i) = lambda_{d-i+1} + i for i <= d and i - lambda'_{i-d} for i > d."""
    conj = lam.conjugate()
    return [lam.part(d - i + 1) + i for i in range(1, d + 1)] + [
        i - conj.part(i - d) for i in range(d + 1, n + 1)
    ]


def schur_diagonal_product(lam, d: int, a: Sequence[Polynomial] | None = None) -> Polynomial:
    """prod over cells (i,j) of (a_{w(d-i+1)} - a_{w(d+j)})."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    n = d + lam.part(1)
    w = lemma_perm(lam, d, n)
    a = generic_a(n) if a is None else a
    return product(a[w[d - i] - 1] - a[w[d + j - 1] - 1] for i, j in lam.cells())


# -- factorial P and Q ---------------------------------------------------------


def _fresh_index(x: Sequence[Polynomial], a: Sequence[Polynomial]) -> int:
    used = [v.index for p in list(x) + list(a) for v in p.variables() if v.family == X]
    return max(used, default=0) + 1


def _P_sum(parts: tuple[int, ...], x: list[Polynomial], a: list[Polynomial]) -> Polynomial:
    m, r = len(x), len(parts)
    rise = [[rising(x[i], a, p) for p in parts] for i in range(m)]
    plus = [[x[i] + x[j] for j in range(m)] for i in range(m)]
    total = ZERO
    for image in permutations(range(m), r):
        factors = [rise[image[k]][k] for k in range(r)]
        if any(f.is_zero() for f in factors):
            continue
        sign = 0
        rest = [j for j in range(m) if j not in image]
        for k in range(r):
            for l in range(k + 1, r):
                factors.append(plus[image[k]][image[l]])
                sign += image[k] > image[l]
            for j in rest:
                factors.append(plus[image[k]][j])
                sign += image[k] > j
        for p in range(len(rest)):
            for q in range(p + 1, len(rest)):
                factors.append(x[rest[p]] - x[rest[q]])
        if any(f.is_zero() for f in factors):
            continue
        term = product(factors)
        total = total - term if sign % 2 else total + term
    return total


def factorial_P(lam, n: int, x: Sequence | None = None, a: Sequence | None = None,
                reduce_zeros: bool = True) -> Polynomial:
    """P_lambda^{(n)}(x|a).

    With ``reduce_zeros`` pairs of zero entries of x are dropped while the
    length stays >= r + 2 (the function is stable under that).  Any x values
    still repeated are replaced by fresh symbols, evaluated, and substituted
    back, so the Vandermonde division is always exact.
    """
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    if lam.r > n:
        raise TooManyParts(f"{lam} has more than {n} parts")
    x = generic_x(n) if x is None else [_as_poly(t) for t in x]
    if len(x) != n:
        raise FactorialError(f"expected {n} x values, got {len(x)}")
    a = generic_a(lam.part(1)) if a is None else [_as_poly(t) for t in a]
    if len(a) < lam.part(1):
        raise NotEnoughParameters(f"need a_1..a_{lam.part(1)}, have {len(a)} parameters")
    if reduce_zeros:
        while len(x) - 2 >= lam.r and sum(1 for t in x if t.is_zero()) >= 2:
            for _ in range(2):
                x.pop(next(i for i, t in enumerate(x) if t.is_zero()))
    back = {}
    seen = set()
    fresh = _fresh_index(x, a)
    for i, t in enumerate(x):
        if t in seen:
            var = Var(X, fresh)
            fresh += 1
            back[var] = t
            x[i] = Polynomial.variable(var)
        seen.add(x[i])
    value = _divide_vandermonde(_P_sum(lam.parts, x, a), x)
    return value.substitute(back) if back else value


def factorial_Q(lam, n: int, x: Sequence | None = None, a: Sequence | None = None,
                reduce_zeros: bool = True) -> Polynomial:
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    return factorial_P(lam, n, x, a, reduce_zeros) * (2 ** lam.r)


def kappa_sequence(lam, n: int) -> list[int]:
    """lambda_1+1, ..., lambda_r+1, mu_0, bar mu_1, ..., bar mu_{n-r}; negative = barred."""
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    taken = {p + 1 for p in lam.parts}
    rest = [k for k in range(2, n + 2) if k not in taken]
    mu0 = 1 if (n - lam.r) % 2 else -1
    return [p + 1 for p in lam.parts] + [mu0] + [-k for k in rest]


def H_lambda(lam, n: int, a: Sequence[Polynomial] | None = None) -> Polynomial:
    """prod over shifted cells (i,j) of (a_{kappa_i} + a_{kappa_{j+1}}), a_{bar k} = -a_k."""
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    a = generic_a(n + 1) if a is None else a
    kappa = kappa_sequence(lam, n)
    vals = a_values(kappa, a)
    return product(vals[i - 1] + vals[j] for i, j in lam.cells())


@dataclass
class PieriReport:
    kind: str
    results: list = field(default_factory=list)  # (shape, holds)

    @property
    def ok(self) -> bool:
        return all(h for _, h in self.results)


def pieri_check(shapes: Sequence, size: int, kind: str) -> PieriReport:
    """Check (f_1(x) - f_1(a_lam)) f_lam(x) = sum over covers nu of f_nu(x), generically.

    ``kind`` "ordinary" uses s^{(size)}; "strict" uses P^{(size)}.
    """
    report = PieriReport(kind)
    for lam in shapes:
        if kind == "ordinary":
            lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
            bound = Partition((lam.part(1) + 1,) * size)
            a = generic_a(lam.part(1) + size + 1)
            f = lambda s: factorial_schur(s, size, None, a)  # noqa: E731
        else:
            lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
            bound = StrictPartition.rho(max(lam.part(1) + 1, size))
            a = generic_a(lam.part(1) + 2)
            f = lambda s: factorial_P(s, size, None, a)  # noqa: E731
        one = type(lam)((1,))
        avals = a_values(a_tuple(lam, kind, size), a)
        if kind == "ordinary":
            f1_at = factorial_schur(one, size, avals, a)
        else:
            f1_at = factorial_P(one, size, avals, a)
        covers = [nu for nu in covers_above(lam, bound) if len(nu) <= size]
        lhs = (f(one) - f1_at) * f(lam)
        rhs = sum((f(nu) for nu in covers), ZERO)
        report.results.append((lam, lhs == rhs))
    return report


# -- specialisations at fixed points ----------------------------------------------


def _barred_values(v: SignedPermutation) -> list[int]:
    return sorted(-k for k in v.window if k < 0)


def x_v_tuple(ctx: SchubertContext, v: SignedPermutation) -> list[Polynomial]:
    """The point at which the factorial function is evaluated for the fixed point v.

    Type A: the first d entries of the window.  B/C: the barred values of v in
    increasing order, padded with zeros to length n.  Type D_N with m = N - 1:
    the barred values padded with zeros to length m when m is even and to
    length N when m is odd.  In the odd case the tuple is the first r(mu)
    barred values followed, when r(mu) is odd, by +e_N (always the largest
    barred value then); the sign is fixed by the excited-diagram formula.
    """
    ctx.check_element(v)
    if ctx.lie_type == "A":
        return [eps(k) for k in v.window[: ctx.d]]
    barred = _barred_values(v)
    if ctx.lie_type in ("B", "C"):
        size = ctx.n
    else:
        size = ctx.n - 1 if ctx.n % 2 else ctx.n
    return [eps(j) for j in barred] + [ZERO] * (size - len(barred))


def parameters_for(ctx: SchubertContext) -> list[Polynomial]:
    """Parameter sequence a_1, a_2, ... of the closed formula for the type."""
    n = ctx.n
    if ctx.lie_type == "A":
        return [eps(i) for i in range(1, n)]
    if ctx.lie_type in ("B", "C"):
        return [ZERO] + [eps(k) for k in range(n, 1, -1)]
    return [eps(n)] + [eps(k) for k in range(n - 1, 1, -1)]


def localize_factorial(ctx: SchubertContext, w, v) -> Polynomial:
    """[X_w]|_v from the factorial Schur / P / Q closed formula."""
    from .localization import as_element

    w, v = as_element(ctx, w), as_element(ctx, v)
    lam = ctx.shape(w)
    x = x_v_tuple(ctx, v)
    a = parameters_for(ctx)
    if ctx.lie_type == "A":
        return factorial_schur(lam, ctx.d, x, a) * (-1) ** lam.size
    if ctx.lie_type == "C":
        return factorial_Q(lam, len(x), x, a)
    return factorial_P(lam, len(x), x, a)


@dataclass
class GiambelliResult:
    matrix: list
    pfaffian: Polynomial
    expected: Polynomial

    @property
    def holds(self) -> bool:
        return self.pfaffian == self.expected


def giambelli_pfaffian(ctx: SchubertContext, lam, v, method: str = "eyd") -> GiambelliResult:
    """Pfaffian of two-row restrictions at v against the restriction of lam itself."""
    from .localization import as_element, localize

    if ctx.lie_type == "A":
        raise TypeAUnsupported("the Pfaffian formula concerns strict partitions")
    lam = ctx.coerce_shape(lam)
    v = as_element(ctx, v)
    parts = list(lam.parts) + [0] * (lam.r0 - lam.r)
    size = lam.r0
    mat = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            val = localize(ctx, StrictPartition((parts[i], parts[j])), v, method)
            mat[i][j], mat[j][i] = val, -val
    pf = pfaffian(mat) if size else ONE
    return GiambelliResult(mat, pf, localize(ctx, lam, v, method))

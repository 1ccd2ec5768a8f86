"""Exact sparse multivariate polynomials over the rationals.

Variables live in three families: ``e`` (the torus weights), ``x`` and ``a``
(arguments and parameters of factorial functions).  Polynomials are immutable
and kept in canonical form, so ``==`` is structural equality.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "EPS", "X", "A", "Var", "Polynomial", "Coefficient",
    "eps", "xvar", "avar", "const", "ZERO", "ONE",
    "substitute", "exact_divide", "determinant", "pfaffian", "product", "format_monomial",
    "PolynomialError", "NotDivisible", "DivisionByZero",
    "NonSquare", "NotAntisymmetric", "OddSize",
]

EPS, X, A = 0, 1, 2
_FAMILY_NAMES = {EPS: "e", X: "x", A: "a"}
_FAMILY_CODES = {"e": EPS, "x": X, "a": A}

Coefficient = Union[int, Fraction]


class PolynomialError(ValueError):
    pass


class NotDivisible(PolynomialError):
    pass


class DivisionByZero(PolynomialError, ZeroDivisionError):
    pass


class NonSquare(PolynomialError):
    pass


class NotAntisymmetric(PolynomialError):
    pass


class OddSize(PolynomialError):
    pass


class Var(NamedTuple):
    """A variable; ordered by family (e < x < a) and then by index."""

    family: int
    index: int

    def __str__(self):
        return f"{_FAMILY_NAMES[self.family]}{self.index}"


# A monomial is a tuple of (Var, exponent) pairs sorted by Var, exponents > 0.
Monomial = tuple


def _norm(c) -> Coefficient:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _lex_key(m: Monomial):
    # Larger key = lexicographically larger monomial, with e1 > e2 > ... > x1 > ...
    return tuple((-v.family, -v.index, e) for v, e in m)


def _mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2 if m2 divides m1, else None."""
    d = dict(m1)
    for v, e in m2:
        got = d.get(v, 0)
        if got < e:
            return None
        if got == e:
            del d[v]
        else:
            d[v] = got - e
    return tuple(sorted(d.items()))


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # terms must already be clean (no zeros, normalized coefficients)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Coefficient) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, v: Var) -> "Polynomial":
        return cls._raw({((v, 1),): 1})

    @classmethod
    def linear(cls, coeffs: Mapping[Var, Coefficient], constant: Coefficient = 0) -> "Polynomial":
        terms = {((v, 1),): c for v, c in coeffs.items()}
        if constant:
            terms[()] = constant
        return cls(terms)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Coefficient:
        return self._terms.get((), 0)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self._terms.get(monomial, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {_mono_degree(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def linear_coefficients(self) -> dict[Var, Coefficient]:
        """Coefficients of a polynomial of degree <= 1 (constant term ignored)."""
        out = {}
        for m, c in self._terms.items():
            if len(m) > 1 or (m and m[0][1] != 1):
                raise ValueError("not a linear form")
            if m:
                out[m[0][0]] = c
        return out

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Polynomial._raw({m: _norm(c * other) for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and () in b:
            return self * b[()]
        if len(a) == 1 and () in a:
            return other * a[()]
        out: dict = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return Polynomial({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_divide(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -------------------------------------------------------

    def substitute(self, mapping: Mapping[Var, "Polynomial | Coefficient"]) -> "Polynomial":
        return substitute(self, mapping)

    def evaluate(self, values: Mapping[Var, Coefficient]) -> Coefficient:
        """Evaluate at rational values; every occurring variable must be given."""
        total = Fraction(0)
        for m, c in self._terms.items():
            t = Fraction(c)
            for v, e in m:
                t *= Fraction(values[v]) ** e
            total += t
        return _norm(total)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        """Terms in canonical order: graded, then lexicographic, descending."""
        return sorted(
            self._terms.items(),
            key=lambda mc: (_mono_degree(mc[0]), _lex_key(mc[0]), mc[1] > 0),
            reverse=True,
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            mono = format_monomial(m)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    _TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of ``str`` for canonical renderings (also accepts looser input)."""
        text = text.strip()
        if text == "0" or not text:
            return ZERO
        out = ZERO
        pos = 0
        while pos < len(text):
            match = cls._TERM_RE.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if match.group(1) == "-" else 1
            term = ONE * sign
            for factor in match.group(2).strip().split("*"):
                factor = factor.strip()
                base, _, exp = factor.partition("^")
                if base[0] in _FAMILY_CODES and base[1:].isdigit():
                    p = cls.variable(Var(_FAMILY_CODES[base[0]], int(base[1:])))
                else:
                    p = cls.constant(Fraction(base))
                term = term * (p ** int(exp) if exp else p)
            out = out + term
            pos = match.end()
        return out


def format_monomial(m: Monomial) -> str:
    """``e1*e2^2`` style rendering; the empty monomial renders as ``""``."""
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({(): 1})


def const(c: Coefficient) -> Polynomial:
    return Polynomial.constant(c)


def eps(i: int) -> Polynomial:
    if i < 1:
        raise ValueError("variable index must be >= 1")
    return Polynomial.variable(Var(EPS, i))


def xvar(i: int) -> Polynomial:
    if i < 1:
        raise ValueError("variable index must be >= 1")
    return Polynomial.variable(Var(X, i))


def avar(i: int) -> Polynomial:
    if i < 1:
        raise ValueError("variable index must be >= 1")
    return Polynomial.variable(Var(A, i))


def substitute(p: Polynomial, mapping: Mapping[Var, "Polynomial | Coefficient"]) -> Polynomial:
    """Ring homomorphism sending each mapped variable to its image.

    Variables missing from ``mapping`` are left alone.
    """
    images = {v: Polynomial._coerce(q) for v, q in mapping.items()}
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = images[v] ** e
        return powers[key]

    out: dict = {}
    for m, c in p.items():
        kept = []
        factor = None
        for v, e in m:
            if v in images:
                f = power(v, e)
                factor = f if factor is None else factor * f
            else:
                kept.append((v, e))
        kept_mono = tuple(kept)
        if factor is None:
            out[kept_mono] = out.get(kept_mono, 0) + c
            continue
        for fm, fc in factor.items():
            mm = _mono_mul(kept_mono, fm)
            out[mm] = out.get(mm, 0) + c * fc
    return Polynomial(out)


def exact_divide(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return q with q * den == num; raise NotDivisible if there is none."""
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    lead_m, lead_c = max(den.items(), key=lambda mc: _lex_key(mc[0]))
    den_rest = [(m, c) for m, c in den.items() if m != lead_m]
    rem = dict(num.items())
    heap = [(_neg_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        qm = _mono_div(m, lead_m)
        if qm is None:
            raise NotDivisible(f"{den} does not divide {num}")
        qc = Fraction(c) / lead_c if not isinstance(c, int) or c % lead_c else c // lead_c
        quot[qm] = quot.get(qm, 0) + qc
        del rem[m]
        for dm, dc in den_rest:
            mm = _mono_mul(qm, dm)
            old = rem.get(mm)
            if old is None:
                rem[mm] = -qc * dc
                heapq.heappush(heap, (_neg_key(mm), mm))
            else:
                s = old - qc * dc
                if s:
                    rem[mm] = s
                else:
                    del rem[mm]
    return Polynomial(quot)


def _neg_key(m: Monomial):
    return tuple((v.family, v.index, -e) for v, e in m) + ((99, 0, 0),)


def _as_poly(x) -> Polynomial:
    p = Polynomial._coerce(x)
    if p is NotImplemented:
        raise TypeError(f"not a polynomial: {x!r}")
    return p


def determinant(matrix: Sequence[Sequence]) -> Polynomial:
    """Determinant by Laplace expansion with memoization over column subsets."""
    size = len(matrix)
    rows = [[_as_poly(x) for x in row] for row in matrix]
    if any(len(row) != size for row in rows):
        raise NonSquare(f"matrix is not square ({size} rows)")
    if size == 0:
        return ONE
    memo: dict[int, Polynomial] = {}

    # minor of the last (size - k) rows using the column set `mask`
    def minor(k: int, mask: int) -> Polynomial:
        if k == size:
            return ONE
        key = mask
        if key in memo:
            return memo[key]
        total = ZERO
        sign = 1
        for j in range(size):
            if mask & (1 << j):
                entry = rows[k][j]
                if entry:
                    total = total + entry * minor(k + 1, mask & ~(1 << j)) * sign
                sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << size) - 1)


def pfaffian(matrix: Sequence[Sequence]) -> Polynomial:
    """Pfaffian as the signed sum over perfect matchings (first-row expansion)."""
    size = len(matrix)
    rows = [[_as_poly(x) for x in row] for row in matrix]
    if any(len(row) != size for row in rows):
        raise NonSquare(f"matrix is not square ({size} rows)")
    for i in range(size):
        if rows[i][i]:
            raise NotAntisymmetric(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, size):
            if rows[i][j] != -rows[j][i]:
                raise NotAntisymmetric(f"entries ({i},{j}) and ({j},{i}) are not opposite")
    if size % 2:
        raise OddSize(f"Pfaffian of odd size {size}")
    memo: dict[tuple, Polynomial] = {}

    def pf(idx: tuple) -> Polynomial:
        if not idx:
            return ONE
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = ZERO
        for pos, j in enumerate(rest):
            entry = rows[first][j]
            if entry:
                term = entry * pf(rest[:pos] + rest[pos + 1:])
                total = total - term if pos % 2 else total + term
        memo[idx] = total
        return total

    return pf(tuple(range(size)))


def product(factors: Iterable) -> Polynomial:
    out = ONE
    for f in factors:
        out = out * f
        if not out:
            return ZERO
    return out



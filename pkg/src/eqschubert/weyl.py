"""Weyl groups of types A, B, C, D as (signed) permutations.

Elements are windows ``(w(1), ..., w(N))`` of nonzero integers, a negative
entry standing for a barred letter.  Products are composition of maps,
``(uv)(i) = u(v(i))``, so a word ``s_{i1} ... s_{ik}`` is evaluated by
starting from the identity and acting on *positions* letter by letter.
An element acts on weights through ``w(e_k) = e_{w(k)}`` with
``e_{k-bar} = -e_k``.

Type D_N uses the simple reflection ``s_N`` that swaps the last two positions
and negates both; the Grassmannian is the one of the last node ``P_N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .polyalg import ONE, ZERO, Polynomial, Var, EPS, eps, const
from .shapes import (
    Partition, StrictPartition, ShapeError, ShapeTooLarge,
    bcd_shape_to_signed, bcd_signed_to_shape, partitions_in_box,
    strict_partitions_in, typeA_perm_to_shape, typeA_shape_to_perm,
    iter_cells_reading_order, contains,
)

__all__ = [
    "SchubertContext", "SignedPermutation", "WeylError", "IndexOutOfRange",
    "PositionOutOfRange", "NotReduced", "CellOutsideShape", "ContextMismatch",
    "parse_window", "word_to_element", "length", "is_reduced", "eps_at",
    "row_reading_word", "reading_order", "beta_sequence", "beta_closed",
    "inversion_roots", "reduced_word", "bruhat_le", "act",
    "remark_pn_substitution",
]


class WeylError(ValueError):
    pass


class IndexOutOfRange(WeylError):
    pass


class PositionOutOfRange(WeylError):
    pass


class NotReduced(WeylError):
    pass


class CellOutsideShape(WeylError):
    pass


class ContextMismatch(WeylError):
    pass


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(k) for k in self.window)
        if sorted(abs(k) for k in window) != list(range(1, len(window) + 1)):
            raise WeylError(f"{window} is not a signed permutation")
        object.__setattr__(self, "window", window)

    @classmethod
    def identity(cls, size: int) -> "SignedPermutation":
        return cls(tuple(range(1, size + 1)))

    def __len__(self):
        return len(self.window)

    def __call__(self, k: int) -> int:
        v = self.window[abs(k) - 1]
        return v if k > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(k) for k in other.window))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self.window)
        for i, k in enumerate(self.window, 1):
            inv[abs(k) - 1] = i if k > 0 else -i
        return SignedPermutation(tuple(inv))

    @property
    def negatives(self) -> int:
        return sum(1 for k in self.window if k < 0)

    def __str__(self):
        return " ".join(f"{-k}̄" if k < 0 else str(k) for k in self.window)

    def to_text(self) -> str:
        return ",".join(map(str, self.window))


def parse_window(text: str | Sequence[int]) -> SignedPermutation:
    """Parse ``"2,-3,-1"`` (negative = barred) or a bare digit string ``"157923468"``."""
    if not isinstance(text, str):
        return SignedPermutation(tuple(text))
    text = text.strip()
    if "," in text or " " in text:
        return SignedPermutation(tuple(int(t) for t in text.replace(",", " ").split()))
    return SignedPermutation(tuple(int(ch) for ch in text))


@dataclass(frozen=True)
class SchubertContext:
    """Lie type and rank; fixes simple roots, W^P and the shape bijection.

    ``A(n, d)`` is the Grassmannian of d-planes in C^n (group S_n).  ``B(n)``,
    ``C(n)``, ``D(n)`` are the maximal isotropic Grassmannians of B_n, C_n,
    D_n.  In every type the window length is ``n``.  Strict partitions index
    W^P inside rho_n for B/C and inside rho_{n-1} for D.
    """

    lie_type: str
    n: int
    d: int | None = None

    def __post_init__(self):
        t = self.lie_type.upper()
        object.__setattr__(self, "lie_type", t)
        if t == "A":
            if self.d is None or not 1 <= self.d <= self.n:
                raise WeylError("type A needs 1 <= d <= n")
        elif t in ("B", "C"):
            if self.n < 1:
                raise WeylError("types B/C need n >= 1")
            object.__setattr__(self, "d", None)
        elif t == "D":
            if self.n < 2:
                raise WeylError("type D needs n >= 2")
            object.__setattr__(self, "d", None)
        else:
            raise WeylError(f"unknown Lie type {self.lie_type!r}")

    @classmethod
    def A(cls, n: int, d: int) -> "SchubertContext":
        return cls("A", n, d)

    @classmethod
    def B(cls, n: int) -> "SchubertContext":
        return cls("B", n)

    @classmethod
    def C(cls, n: int) -> "SchubertContext":
        return cls("C", n)

    @classmethod
    def D(cls, n: int) -> "SchubertContext":
        return cls("D", n)

    def __str__(self):
        if self.lie_type == "A":
            return f"A(n={self.n},d={self.d})"
        return f"{self.lie_type}{self.n}"

    # -- basic data -------------------------------------------------------

    @property
    def size(self) -> int:
        """Window length and number of e-variables."""
        return self.n

    @property
    def rank(self) -> int:
        return self.n - 1 if self.lie_type == "A" else self.n

    @property
    def shifted(self) -> bool:
        return self.lie_type != "A"

    @property
    def strict_rank(self) -> int:
        """The m with W^P in bijection with strict partitions inside rho_m."""
        if self.lie_type in ("B", "C"):
            return self.n
        if self.lie_type == "D":
            return self.n - 1
        raise WeylError("type A has no strict shapes")

    @property
    def parabolic_index(self) -> int:
        """Index of the simple root whose reflection is missing from W_P."""
        return self.d if self.lie_type == "A" else self.n

    @property
    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.n)

    def simple_root(self, i: int) -> Polynomial:
        self._check_index(i)
        t, n = self.lie_type, self.n
        if i < n:
            return eps(i) - eps(i + 1)
        if t == "C":
            return eps(n) * 2
        if t == "B":
            return eps(n)
        # t == "D", i == n
        return eps(n - 1) + eps(n)

    @cached_property
    def simple_reflections(self) -> tuple[SignedPermutation, ...]:
        out = []
        for i in range(1, self.rank + 1):
            w = list(range(1, self.n + 1))
            if i < self.n:
                w[i - 1], w[i] = w[i], w[i - 1]
            elif self.lie_type in ("B", "C"):
                w[self.n - 1] = -w[self.n - 1]
            else:
                w[self.n - 2], w[self.n - 1] = -self.n, -(self.n - 1)
            out.append(SignedPermutation(tuple(w)))
        return tuple(out)

    def reflection(self, i: int) -> SignedPermutation:
        self._check_index(i)
        return self.simple_reflections[i - 1]

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple reflection s_{i} outside 1..{self.rank} for {self}")

    def fundamental_weight(self) -> Polynomial:
        """The fundamental weight of the parabolic node."""
        if self.lie_type == "A":
            return sum((eps(i) for i in range(1, self.d + 1)), ZERO)
        total = sum((eps(i) for i in range(1, self.n + 1)), ZERO)
        if self.lie_type == "C":
            return total
        return total * Fraction(1, 2)

    @cached_property
    def positive_roots(self) -> tuple[Polynomial, ...]:
        n, t = self.n, self.lie_type
        roots = [eps(i) - eps(j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if t != "A":
            roots += [eps(i) + eps(j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if t == "C":
            roots += [eps(i) * 2 for i in range(1, n + 1)]
        if t == "B":
            roots += [eps(i) for i in range(1, n + 1)]
        return tuple(roots)

    def is_in_group(self, v: SignedPermutation) -> bool:
        if len(v) != self.n:
            return False
        if self.lie_type == "A":
            return all(k > 0 for k in v.window)
        if self.lie_type == "D":
            return v.negatives % 2 == 0
        return True

    def check_element(self, v: SignedPermutation):
        if not self.is_in_group(v):
            raise ContextMismatch(f"{v.window} is not an element of the Weyl group of {self}")

    # -- W^P and shapes ----------------------------------------------------

    @cached_property
    def top_shape(self):
        if self.lie_type == "A":
            return Partition((self.n - self.d,) * self.d)
        return StrictPartition.rho(self.strict_rank)

    def shapes(self) -> list:
        """All shapes indexing W^P, by size."""
        if self.lie_type == "A":
            return partitions_in_box(self.d, self.n - self.d)
        return strict_partitions_in(self.top_shape)

    def coerce_shape(self, shape):
        if self.lie_type == "A":
            return shape if isinstance(shape, Partition) else Partition(tuple(shape))
        return shape if isinstance(shape, StrictPartition) else StrictPartition(tuple(shape))

    def element(self, shape) -> SignedPermutation:
        """The W^P element attached to a shape."""
        shape = self.coerce_shape(shape)
        if self.lie_type == "A":
            return SignedPermutation(typeA_shape_to_perm(shape, self.n, self.d))
        return SignedPermutation(bcd_shape_to_signed(shape, self.lie_type, self.n))

    def shape(self, v: SignedPermutation):
        """The shape attached to a W^P element."""
        self.check_element(v)
        if self.lie_type == "A":
            return typeA_perm_to_shape(v.window, self.d)
        return bcd_signed_to_shape(v.window, self.lie_type)

    def is_grassmannian(self, v: SignedPermutation) -> bool:
        try:
            self.shape(v)
        except (ShapeError, WeylError):
            return False
        return True

    def grassmannian_elements(self) -> list[SignedPermutation]:
        return [self.element(s) for s in self.shapes()]

    def diagram_cells(self, shape) -> list:
        shape = self.coerce_shape(shape)
        return shape.cells()

    def cell_letter(self, cell) -> int:
        """Index of the simple reflection written in a cell of the ambient diagram."""
        i, j = cell
        t = self.lie_type
        if t == "A":
            return self.d - i + j
        if t in ("B", "C"):
            return self.n if i == j else self.n + i - j
        if i == j:
            return self.n if i % 2 else self.n - 1
        return self.n - 1 + i - j


def act(w: SignedPermutation, form: Polynomial) -> Polynomial:
    """Action of a group element on a polynomial in the e-variables."""
    mapping = {}
    for k in range(1, len(w) + 1):
        img = w(k)
        mapping[Var(EPS, k)] = eps(img) if img > 0 else -eps(-img)
    return form.substitute(mapping)


def word_to_element(ctx: SchubertContext, word: Iterable[int]) -> SignedPermutation:
    w = list(range(1, ctx.n + 1))
    for i in word:
        _apply_letter(ctx, w, i)
    return SignedPermutation(tuple(w))


def _apply_letter(ctx: SchubertContext, w: list, i: int):
    """In place: w <- w * s_i."""
    n = ctx.n
    if not 1 <= i <= ctx.rank:
        raise IndexOutOfRange(f"simple reflection s_{i} outside 1..{ctx.rank} for {ctx}")
    if i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    elif ctx.lie_type in ("B", "C"):
        w[n - 1] = -w[n - 1]
    else:
        w[n - 2], w[n - 1] = -w[n - 1], -w[n - 2]


def length(ctx: SchubertContext, v: SignedPermutation) -> int:
    """Number of positive roots sent to negative roots."""
    w = v.window
    n = len(w)
    rank = [k if k > 0 else 2 * n + 1 + k for k in w]
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if rank[i] > rank[j]:
                total += 1
            if ctx.lie_type != "A":
                small = w[i] if abs(w[i]) < abs(w[j]) else w[j]
                if small < 0:
                    total += 1
    if ctx.lie_type in ("B", "C"):
        total += sum(1 for k in w if k < 0)
    return total


def is_reduced(ctx: SchubertContext, word: Sequence[int]) -> bool:
    return length(ctx, word_to_element(ctx, word)) == len(word)


def _is_positive(form: Polynomial) -> bool:
    coeffs = form.linear_coefficients()
    first = min(coeffs)
    return coeffs[first] > 0


def inversion_roots(ctx: SchubertContext, v: SignedPermutation) -> list[Polynomial]:
    """Positive roots beta with v^{-1}(beta) negative, i.e. R+ meet v(R-)."""
    inv = v.inverse()
    return [beta for beta in ctx.positive_roots if not _is_positive(act(inv, beta))]


def eps_at(ctx: SchubertContext, v: SignedPermutation, p: int) -> Polynomial:
    """The weight e_{v(p)} at an extended window position.

    Positions N+1..2N continue the window through the barring involution:
    position N+j carries the bar of position N-j+1.
    """
    n = ctx.n
    top = n if ctx.lie_type == "A" else 2 * n
    if not 1 <= p <= top:
        raise PositionOutOfRange(f"position {p} outside 1..{top}")
    if p > n:
        return -eps_at(ctx, v, 2 * n + 1 - p)
    k = v.window[p - 1]
    return eps(k) if k > 0 else -eps(-k)


def reading_order(ctx: SchubertContext, shape) -> list:
    """Cells of the shape in row-reading order (bottom row first, right to left)."""
    return list(iter_cells_reading_order(ctx.coerce_shape(shape).cells()))


def row_reading_word(ctx: SchubertContext, shape) -> list[int]:
    shape = ctx.coerce_shape(shape)
    if not contains(ctx.top_shape, shape):
        raise ShapeTooLarge(f"{shape} is not a shape for {ctx}")
    return [ctx.cell_letter(c) for c in reading_order(ctx, shape)]


def beta_sequence(ctx: SchubertContext, word: Sequence[int]) -> list[Polynomial]:
    """beta_t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t}) for a reduced word."""
    if not is_reduced(ctx, word):
        raise NotReduced(f"{list(word)} is not reduced in {ctx}")
    out = []
    prefix = list(range(1, ctx.n + 1))
    for i in word:
        out.append(act(SignedPermutation(tuple(prefix)), ctx.simple_root(i)))
        _apply_letter(ctx, prefix, i)
    return out


def beta_closed(ctx: SchubertContext, v: SignedPermutation, cell) -> Polynomial:
    """Closed form of the root attached to a cell of v's diagram."""
    shape = ctx.shape(v)
    if tuple(cell) not in set(shape.cells()):
        raise CellOutsideShape(f"{cell} is not a cell of {shape}")
    return _beta_closed(ctx, v, cell)


def _beta_closed(ctx: SchubertContext, v: SignedPermutation, cell) -> Polynomial:
    i, j = cell
    n, t = ctx.n, ctx.lie_type
    if t == "A":
        d = ctx.d
        return eps_at(ctx, v, d + j) - eps_at(ctx, v, d - i + 1)
    if t == "D":
        return eps_at(ctx, v, n + 1 + j) - eps_at(ctx, v, n - i + 1)
    root = eps_at(ctx, v, n + j) - eps_at(ctx, v, n - i + 1)
    if t == "B" and i == j:
        root = root * Fraction(1, 2)
    return root


def reduced_word(ctx: SchubertContext, v: SignedPermutation, prefer: str = "low") -> list[int]:
    """Some reduced word of v, found by peeling right descents."""
    word: list[int] = []
    w = list(v.window)
    ell = length(ctx, v)
    letters = range(1, ctx.rank + 1) if prefer == "low" else range(ctx.rank, 0, -1)
    while ell:
        for i in letters:
            trial = list(w)
            _apply_letter(ctx, trial, i)
            if length(ctx, SignedPermutation(tuple(trial))) < ell:
                w = trial
                ell -= 1
                word.append(i)
                break
    word.reverse()
    return word


def bruhat_le(ctx: SchubertContext, w: SignedPermutation, v: SignedPermutation) -> bool:
    """Bruhat order by the lifting property: if vs < v then w <= v iff min(w, ws) <= vs."""
    return _bruhat_le(ctx, w.window, v.window)


@lru_cache(maxsize=200_000)
def _bruhat_le(ctx: SchubertContext, w: tuple, v: tuple) -> bool:
    lw = length(ctx, SignedPermutation(w))
    lv = length(ctx, SignedPermutation(v))
    if lw > lv:
        return False
    if lv == 0:
        return w == v
    for i in range(1, ctx.rank + 1):
        vs = list(v)
        _apply_letter(ctx, vs, i)
        if length(ctx, SignedPermutation(tuple(vs))) < lv:
            ws = list(w)
            _apply_letter(ctx, ws, i)
            ws = tuple(ws)
            smaller = ws if length(ctx, SignedPermutation(ws)) < lw else w
            return _bruhat_le(ctx, smaller, tuple(vs))
    raise AssertionError("nonidentity element without a descent")


def remark_pn_substitution(ctx: SchubertContext, poly: Polynomial) -> Polynomial:
    """Move a type D result to the other maximal parabolic by e_N -> -e_N."""
    if ctx.lie_type != "D":
        raise ContextMismatch("the e_N sign flip only applies to type D")
    return poly.substitute({Var(EPS, ctx.n): -eps(ctx.n)})

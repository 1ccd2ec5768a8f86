"""Partitions, strict partitions, their diagrams, and the bijections with W^P.

Barred letters are negative integers in windows.  The total order on
``1 < 2 < ... < n < n-bar < ... < 1-bar`` is realised by :func:`letter_rank`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Cell", "Partition", "StrictPartition", "Diagram",
    "ShapeError", "KindMismatch", "ShapeTooLarge", "ParityViolation", "NotGrassmannian",
    "contains", "covers_above", "shapes_between",
    "partitions_in_box", "strict_partitions_in",
    "typeA_shape_to_perm", "typeA_perm_to_shape",
    "bcd_shape_to_signed", "bcd_signed_to_shape", "letter_rank", "rank_to_letter",
]

Cell = tuple  # (row, col), both 1-based


class ShapeError(ValueError):
    pass


class KindMismatch(ShapeError):
    pass


class ShapeTooLarge(ShapeError):
    pass


class ParityViolation(ShapeError):
    pass


class NotGrassmannian(ShapeError):
    pass


def _strip(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = _strip(self.parts)
        if any(p < 0 for p in parts):
            raise ShapeError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    kind = "ordinary"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def diagram(self) -> "Diagram":
        return Diagram(frozenset(self.cells()), "ordinary")

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = _strip(self.parts)
        if any(p <= 0 for p in parts):
            raise ShapeError(f"strict partitions have positive parts: {parts}")
        if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"parts not strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    kind = "shifted"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def r0(self) -> int:
        """Length rounded up to the next even number."""
        return self.r + (self.r % 2)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(i, p + i)]

    def diagram(self) -> "Diagram":
        return Diagram(frozenset(self.cells()), "shifted")

    @classmethod
    def rho(cls, n: int) -> "StrictPartition":
        return cls(tuple(range(n, 0, -1)))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


@dataclass(frozen=True)
class Diagram:
    cells: frozenset
    kind: str = "ordinary"

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)


def _same_kind(lam, mu):
    if type(lam) is not type(mu):
        raise KindMismatch(f"cannot compare {type(lam).__name__} with {type(mu).__name__}")


def contains(mu, lam) -> bool:
    """True when ``lam <= mu`` part by part."""
    _same_kind(lam, mu)
    if len(lam) > len(mu):
        return False
    return all(lam.part(i) <= mu.part(i) for i in range(1, len(lam) + 1))


def covers_above(lam, mu) -> list:
    """Shapes obtained from ``lam`` by adding one box and staying ``<= mu``."""
    _same_kind(lam, mu)
    cls = type(lam)
    out = []
    parts = list(lam.parts)
    for i in range(len(parts) + 1):
        new = parts + [0] if i == len(parts) else list(parts)
        new[i] += 1
        try:
            nu = cls(tuple(new))
        except ShapeError:
            continue
        if contains(mu, nu):
            out.append(nu)
    return sorted(out, key=lambda s: s.parts, reverse=True)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` rectangle, by size then reverse-lex."""
    out = []

    def rec(prefix, bound, left):
        out.append(Partition(tuple(prefix)))
        if left == 0:
            return
        for p in range(1, bound + 1):
            rec(prefix + [p], p, left - 1)

    rec([], cols, rows)
    return sorted(out, key=lambda s: (s.size, tuple(-p for p in s.parts)))


def strict_partitions_in(mu: StrictPartition) -> list[StrictPartition]:
    """All strict partitions contained in ``mu``."""
    out = []

    def rec(prefix, i):
        out.append(StrictPartition(tuple(prefix)))
        if i > len(mu):
            return
        top = mu.part(i)
        if prefix:
            top = min(top, prefix[-1] - 1)
        for p in range(1, top + 1):
            rec(prefix + [p], i + 1)

    rec([], 1)
    return sorted(out, key=lambda s: (s.size, tuple(-p for p in s.parts)))


def shapes_between(lam, mu) -> list:
    """All shapes nu of the same kind with lam <= nu <= mu."""
    _same_kind(lam, mu)
    if isinstance(mu, StrictPartition):
        pool = strict_partitions_in(mu)
    else:
        pool = [p for p in partitions_in_box(len(mu), mu.part(1)) if contains(mu, p)]
    return [nu for nu in pool if contains(nu, lam)]


# -- type A ------------------------------------------------------------------


def typeA_shape_to_perm(lam: Partition, n: int, d: int) -> tuple[int, ...]:
    """Grassmannian permutation (descent at most at d) attached to ``lam``."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if len(lam) > d or lam.part(1) > n - d:
        raise ShapeTooLarge(f"{lam} does not fit in a {d} x {n - d} rectangle")
    conj = lam.conjugate()
    first = [lam.part(d - k + 1) + k for k in range(1, d + 1)]
    second = [-conj.part(k) + k + d for k in range(1, n - d + 1)]
    return tuple(first + second)


def typeA_perm_to_shape(w: Sequence[int], d: int) -> Partition:
    w = tuple(w)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ShapeError(f"{w} is not a permutation")
    if any(w[i] > w[i + 1] for i in range(d - 1)) or any(w[i] > w[i + 1] for i in range(d, n - 1)):
        raise NotGrassmannian(f"{w} is not Grassmannian with descent at {d}")
    return Partition(tuple(w[d - j] - d + j - 1 for j in range(1, d + 1)))


# -- types B, C, D -------------------------------------------------------------


def letter_rank(k: int, size: int) -> int:
    """Position of a signed letter in 1 < ... < size < size-bar < ... < 1-bar."""
    return k if k > 0 else 2 * size + 1 + k


def rank_to_letter(r: int, size: int) -> int:
    return r if r <= size else r - 2 * size - 1


def _symmetric_shape(lam: StrictPartition, size: int, with_diagonal: bool) -> Partition:
    # Mirror the shifted diagram across the main diagonal of a size x size square.
    cells = set()
    if with_diagonal:
        for i, j in lam.cells():
            cells.add((i, j))
            cells.add((j, i))
    else:
        for i, j in lam.cells():
            cells.add((i, j + 1))
            cells.add((j + 1, i))
        durfee = lam.r + (lam.r % 2)
        for i in range(1, durfee + 1):
            cells.add((i, i))
    rows = [sum(1 for (a, _) in cells if a == i) for i in range(1, size + 1)]
    return Partition(tuple(rows))


def bcd_shape_to_signed(lam: StrictPartition, lie_type: str, size: int) -> tuple[int, ...]:
    """Window of the W^P element attached to ``lam``.

    ``size`` is the window length: n for B_n / C_n and n for D_n (so the
    strict partition must fit in rho_n for B/C and rho_{n-1} for D).
    """
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    bound = size if lie_type in ("B", "C") else size - 1
    if len(lam) > bound or lam.part(1) > bound:
        raise ShapeTooLarge(f"{lam} does not fit in rho_{bound}")
    big = _symmetric_shape(lam, size, with_diagonal=lie_type in ("B", "C"))
    ranks = typeA_shape_to_perm(big, 2 * size, size)[:size]
    window = tuple(rank_to_letter(r, size) for r in ranks)
    if lie_type == "D" and sum(1 for k in window if k < 0) % 2:
        raise ParityViolation(f"odd number of barred letters in {window}")
    return window


def bcd_signed_to_shape(window: Sequence[int], lie_type: str) -> StrictPartition:
    window = tuple(window)
    size = len(window)
    if sorted(abs(k) for k in window) != list(range(1, size + 1)):
        raise ShapeError(f"{window} is not a signed permutation")
    ranks = [letter_rank(k, size) for k in window]
    if any(ranks[i] > ranks[i + 1] for i in range(size - 1)):
        raise NotGrassmannian(f"{window} is not increasing in the barred order")
    if lie_type == "D" and sum(1 for k in window if k < 0) % 2:
        raise ParityViolation(f"odd number of barred letters in {window}")
    big = [ranks[size - j] - size + j - 1 for j in range(1, size + 1)]
    if lie_type in ("B", "C"):
        parts = [max(big[i - 1] - i + 1, 0) for i in range(1, size + 1)]
    else:
        parts = [max(big[i - 1] - i, 0) for i in range(1, size)]
    return StrictPartition(tuple(parts))


def iter_cells_reading_order(cells) -> Iterator[Cell]:
    """Bottom row first, right to left within each row."""
    return iter(sorted(cells, key=lambda c: (-c[0], -c[1])))


__all__.append("iter_cells_reading_order")

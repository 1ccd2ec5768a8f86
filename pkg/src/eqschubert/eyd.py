"""Excited Young diagrams: elementary excitations, enumeration, energy.

A state is a set of cells inside an ambient diagram.  Three move rules exist:

* ``ORDINARY`` for ordinary Young diagrams: a cell slides one step down the
  diagonal when the three cells of its 2x2 square below-right are vacant.
* ``TYPE_I`` for shifted diagrams: as above off the main diagonal; a diagonal
  cell only needs its right and lower-right neighbours vacant.
* ``TYPE_II`` for shifted diagrams: off-diagonal as above; a diagonal cell
  jumps two steps, needing four vacant cells.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .shapes import Partition, StrictPartition, contains, iter_cells_reading_order
from .weyl import SchubertContext, SignedPermutation, word_to_element, length

__all__ = [
    "ExcitationKind", "ExcitedState", "EYDError", "CellsOutsideAmbient",
    "KindMismatch", "NotContained", "ShapeMismatch",
    "elementary_moves", "enumerate_eyd", "energy", "word_of_subset",
    "enumerate_Rv", "render", "kind_for",
]


class EYDError(ValueError):
    pass


class CellsOutsideAmbient(EYDError):
    pass


class KindMismatch(EYDError):
    pass


class NotContained(EYDError):
    pass


class ShapeMismatch(EYDError):
    pass


class ExcitationKind(enum.Enum):
    ORDINARY = "ordinary"
    TYPE_I = "I"
    TYPE_II = "II"

    @classmethod
    def parse(cls, text) -> "ExcitationKind":
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper()
        table = {"ORDINARY": cls.ORDINARY, "A": cls.ORDINARY, "I": cls.TYPE_I,
                 "TYPEI": cls.TYPE_I, "II": cls.TYPE_II, "TYPEII": cls.TYPE_II}
        if key not in table:
            raise ValueError(f"unknown excitation kind {text!r}")
        return table[key]


def kind_for(ctx: SchubertContext) -> ExcitationKind:
    """The excitation rule whose states index the localization formula of a type."""
    if ctx.lie_type == "A":
        return ExcitationKind.ORDINARY
    if ctx.lie_type == "D":
        return ExcitationKind.TYPE_II
    return ExcitationKind.TYPE_I


@dataclass(frozen=True)
class ExcitedState:
    cells: frozenset
    ambient: Partition | StrictPartition

    def sorted_cells(self) -> list:
        return sorted(self.cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))


def _check_kind(shape, kind: ExcitationKind):
    shifted = isinstance(shape, StrictPartition)
    if shifted == (kind is ExcitationKind.ORDINARY):
        raise KindMismatch(f"{kind.value} excitations do not apply to {type(shape).__name__}")


def _moves(cells: frozenset, ambient: frozenset, kind: ExcitationKind) -> list[frozenset]:
    def vacant(c):
        return c in ambient and c not in cells

    out = []
    for x in sorted(cells):
        i, j = x
        if i < j or kind is ExcitationKind.ORDINARY:
            if vacant((i + 1, j)) and vacant((i, j + 1)) and vacant((i + 1, j + 1)):
                out.append((cells - {x}) | {(i + 1, j + 1)})
        elif kind is ExcitationKind.TYPE_I:
            if vacant((i, j + 1)) and vacant((i + 1, j + 1)):
                out.append((cells - {x}) | {(i + 1, j + 1)})
        else:
            need = [(i, j + 1), (i + 1, j + 1), (i + 1, j + 2), (i + 2, j + 2)]
            if all(vacant(c) for c in need):
                out.append((cells - {x}) | {(i + 2, j + 2)})
    return out


def elementary_moves(state: ExcitedState | Iterable, mu, kind) -> list[ExcitedState]:
    """All states reachable from ``state`` by one elementary excitation."""
    kind = ExcitationKind.parse(kind)
    _check_kind(mu, kind)
    cells = frozenset(state.cells if isinstance(state, ExcitedState) else state)
    ambient = frozenset(mu.cells())
    if not cells <= ambient:
        raise CellsOutsideAmbient(f"{sorted(cells - ambient)} lie outside the diagram of {mu}")
    return [ExcitedState(c, mu) for c in _moves(cells, ambient, kind)]


def energy(state: ExcitedState | Iterable, lam) -> Fraction:
    """Sum of (i+j)/2 over the state minus the same sum over the ground state."""
    cells = state.cells if isinstance(state, ExcitedState) else state
    total = sum(i + j for i, j in cells) - sum(i + j for i, j in lam.cells())
    return Fraction(total, 2)


def enumerate_eyd(lam, mu, kind) -> list[ExcitedState]:
    """All excited states of the diagram of ``lam`` inside ``mu``.

    Sorted by energy and then by the sorted cell list.
    """
    kind = ExcitationKind.parse(kind)
    _check_kind(mu, kind)
    if type(lam) is not type(mu):
        raise KindMismatch(f"{lam} and {mu} are of different kinds")
    if not contains(mu, lam):
        raise NotContained(f"{lam} is not contained in {mu}")
    ambient = frozenset(mu.cells())
    ground = frozenset(lam.cells())
    seen = {ground}
    queue = deque([ground])
    while queue:
        cur = queue.popleft()
        for nxt in _moves(cur, ambient, kind):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    states = sorted(seen, key=lambda c: (energy(c, lam), sorted(c)))
    return [ExcitedState(c, mu) for c in states]


def word_of_subset(cells: Iterable, mu, ctx: SchubertContext) -> SignedPermutation:
    """Product of the reflections written in the given cells, in row-reading order."""
    mu = ctx.coerce_shape(mu)
    cells = list(cells.cells if isinstance(cells, ExcitedState) else cells)
    if not contains(ctx.top_shape, mu):
        raise ShapeMismatch(f"{mu} is not a shape for {ctx}")
    ambient = set(mu.cells())
    if not set(cells) <= ambient:
        raise ShapeMismatch(f"cells {sorted(set(cells) - ambient)} are outside {mu}")
    return word_to_element(ctx, [ctx.cell_letter(c) for c in iter_cells_reading_order(cells)])


def enumerate_Rv(w: SignedPermutation, v: SignedPermutation, ctx: SchubertContext) -> list[frozenset]:
    """Brute force: subsets C of v's diagram with #C = l(w) and w_C = w.

    Since #C = l(w), the read word of such a subset is automatically reduced.
    """
    mu = ctx.shape(v)
    lw = length(ctx, w)
    cells = list(iter_cells_reading_order(mu.cells()))
    letters = [ctx.cell_letter(c) for c in cells]
    out = []
    for idx in combinations(range(len(cells)), lw):
        if word_to_element(ctx, [letters[k] for k in idx]) == w:
            out.append(frozenset(cells[k] for k in idx))
    return sorted(out, key=sorted)


def render(state: ExcitedState | Iterable, mu) -> str:
    """ASCII picture: '#' for occupied cells, '.' for the rest of the ambient diagram."""
    cells = set(state.cells if isinstance(state, ExcitedState) else state)
    shifted = isinstance(mu, StrictPartition)
    lines = []
    for i, p in enumerate(mu.parts, 1):
        start = i if shifted else 1
        row = "".join("#" if (i, j) in cells else "." for j in range(start, start + p))
        lines.append((" " * (i - 1) if shifted else "") + row)
    return "\n".join(lines)

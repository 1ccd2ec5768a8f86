"""Nonintersecting lattice paths on a shifted diagram.

Coordinates are doubled so every vertex is an integer point: the cell (i, j)
sits at (2i, 2j) and its companion vertex (i, j) + a at (2i+1, 2j-1).  From
any vertex a path may take the step b = (-1, -1); from a cell vertex it may
instead take the step a = (1, -1), which "uses" that cell and picks up its
weight.  Both steps lower the column by one, so a path is read left to right
as a sequence of columns.

b keeps the diagonal j - i fixed and a moves to the next lower diagonal, so a
path from the start vertex on diagonal lambda_k - 1 uses exactly one cell on
each diagonal down to the main one, and ends at a vertex (t, t) + a.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .eyd import ExcitationKind, ExcitedState
from .polyalg import ONE, ZERO, Polynomial, avar, pfaffian, product
from .shapes import StrictPartition, contains
from .weyl import SchubertContext, _beta_closed

__all__ = [
    "PathError", "NotContained", "PathGraph", "PathTuple", "enumerate_path_tuples",
    "paths_to_eyd", "eyd_to_paths", "generating_function", "symbolic_weights",
    "beta_weights", "path_pfaffian_check", "PathPfaffianReport", "render_paths", "STEP_A", "STEP_B",
]

STEP_A = (1, -1)
STEP_B = (-1, -1)


class PathError(ValueError):
    pass


class NotContained(PathError):
    pass


def _kind(kind) -> ExcitationKind:
    k = ExcitationKind.parse(kind)
    if k is ExcitationKind.ORDINARY:
        raise PathError("lattice paths are defined for type I and type II only")
    return k


@dataclass(frozen=True)
class PathGraph:
    mu: StrictPartition

    @cached_property
    def cells(self) -> frozenset:
        return frozenset(self.mu.cells())

    @cached_property
    def vertices(self) -> frozenset:
        out = set()
        for i, j in self.cells:
            out.add((2 * i, 2 * j))
            out.add((2 * i + 1, 2 * j - 1))
        return frozenset(out)

    def successors(self, u: tuple) -> list[tuple]:
        out = []
        if u[0] % 2 == 0 and (u[0] // 2, u[1] // 2) in self.cells:
            out.append((u[0] + STEP_A[0], u[1] + STEP_A[1]))
        nxt = (u[0] + STEP_B[0], u[1] + STEP_B[1])
        if nxt in self.vertices:
            out.append(nxt)
        return out

    def start(self, part: int, row: int = 1) -> tuple:
        """Start vertex for a row of length ``part``: slide down its last diagonal cell."""
        i, j = row, part + row - 1
        if (i, j) not in self.cells:
            raise NotContained(f"cell {(i, j)} is outside {self.mu}")
        while (i + 1, j + 1) in self.cells:
            i, j = i + 1, j + 1
        return (2 * i, 2 * j)

    def end(self, t: int) -> tuple:
        return (2 * t + 1, 2 * t - 1)

    @cached_property
    def ends(self) -> dict:
        return {self.end(t): t for t in range(1, len(self.mu) + 1)}

    def paths(self, start: tuple, parity: int | None = None) -> list[tuple]:
        """All paths from ``start`` to an end vertex; ``parity`` restricts the end index mod 2."""
        out = []

        def walk(path):
            u = path[-1]
            if u in self.ends:
                if parity is None or self.ends[u] % 2 == parity:
                    out.append(tuple(path))
                return
            for v in self.successors(u):
                path.append(v)
                walk(path)
                path.pop()

        walk([start])
        return out


@dataclass(frozen=True)
class PathTuple:
    paths: tuple
    kind: ExcitationKind

    def cells_used(self) -> frozenset:
        out = set()
        for p in self.paths:
            for u, v in zip(p, p[1:]):
                if (v[0] - u[0], v[1] - u[1]) == STEP_A:
                    out.add((u[0] // 2, u[1] // 2))
        return frozenset(out)

    def weight(self, weights: Mapping) -> Polynomial:
        return product(weights[c] for c in self.cells_used())


def _check(lam, mu):
    lam = lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))
    mu = mu if isinstance(mu, StrictPartition) else StrictPartition(tuple(mu))
    if not contains(mu, lam):
        raise NotContained(f"{lam} is not contained in {mu}")
    return lam, mu


def enumerate_path_tuples(lam, mu, kind) -> list[PathTuple]:
    """All nonintersecting r-tuples of paths, p_i starting at the i-th start vertex.

    Type II additionally requires p_i to end at (t, t) + a with t = i mod 2.
    """
    kind = _kind(kind)
    lam, mu = _check(lam, mu)
    graph = PathGraph(mu)
    options = []
    for i, part in enumerate(lam.parts, 1):
        parity = (i % 2) if kind is ExcitationKind.TYPE_II else None
        options.append(graph.paths(graph.start(part, i), parity))
    out = []

    def choose(k, used, chosen):
        if k == len(options):
            out.append(PathTuple(tuple(chosen), kind))
            return
        for p in options[k]:
            vs = set(p)
            if used.isdisjoint(vs):
                chosen.append(p)
                choose(k + 1, used | vs, chosen)
                chosen.pop()

    choose(0, frozenset(), [])
    return out


def paths_to_eyd(p: PathTuple, mu) -> ExcitedState:
    return ExcitedState(p.cells_used(), mu)


def eyd_to_paths(state, lam, mu, kind) -> PathTuple:
    """Inverse bijection: the k-th cell from the top on each diagonal belongs to p_k."""
    kind = _kind(kind)
    lam, mu = _check(lam, mu)
    cells = state.cells if isinstance(state, ExcitedState) else frozenset(state)
    graph = PathGraph(mu)
    layers: dict[int, list] = {}
    by_diag: dict[int, list] = {}
    for c in cells:
        by_diag.setdefault(c[1] - c[0], []).append(c)
    for diag_cells in by_diag.values():
        for k, c in enumerate(sorted(diag_cells), 1):
            layers.setdefault(k, []).append(c)
    if sorted(layers) != list(range(1, lam.r + 1)):
        raise PathError("layer structure does not match the shape")
    paths = []
    for k, part in enumerate(lam.parts, 1):
        u = graph.start(part, k)
        path = [u]
        for c in sorted(layers[k], key=lambda c: -c[1]):
            target = (2 * c[0], 2 * c[1])
            if target[1] - target[0] != u[1] - u[0] or target[0] > u[0]:
                raise PathError(f"cell {c} is not reachable on layer {k}")
            while u != target:
                u = (u[0] + STEP_B[0], u[1] + STEP_B[1])
                if u not in graph.vertices:
                    raise PathError(f"path of layer {k} leaves the graph")
                path.append(u)
            u = (u[0] + STEP_A[0], u[1] + STEP_A[1])
            path.append(u)
        if u not in graph.ends:
            raise PathError(f"path of layer {k} does not end on the diagonal")
        paths.append(tuple(path))
    return PathTuple(tuple(paths), kind)


def symbolic_weights(mu) -> dict:
    """Independent symbols a_1, a_2, ... on the cells of mu in sorted order."""
    return {c: avar(k) for k, c in enumerate(sorted(mu.cells()), 1)}


def beta_weights(ctx: SchubertContext, mu) -> dict:
    """The root attached to each cell at the fixed point of mu."""
    mu = ctx.coerce_shape(mu)
    v = ctx.element(mu)
    return {c: _beta_closed(ctx, v, c) for c in mu.cells()}


def generating_function(lam, mu, kind, weights: Mapping) -> Polynomial:
    return sum((p.weight(weights) for p in enumerate_path_tuples(lam, mu, kind)), ZERO)


@dataclass
class PathPfaffianReport:
    matrix: list
    pfaffian: Polynomial
    generating_function: Polynomial

    @property
    def holds(self) -> bool:
        return self.pfaffian == self.generating_function


def path_pfaffian_check(lam, mu, kind, weights: Mapping | None = None) -> PathPfaffianReport:
    """Generating function of nonintersecting tuples against the two-row Pfaffian."""
    lam, mu = _check(lam, mu)
    weights = symbolic_weights(mu) if weights is None else weights
    parts = list(lam.parts) + [0] * (lam.r0 - lam.r)
    size = lam.r0
    mat = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            g = generating_function(StrictPartition((parts[i], parts[j])), mu, kind, weights)
            mat[i][j], mat[j][i] = g, -g
    pf = pfaffian(mat) if size else ONE
    return PathPfaffianReport(mat, pf, generating_function(lam, mu, kind, weights))


def render_paths(p: PathTuple, mu) -> str:
    """Doubled grid: cell '.', companion vertex ',', visited vertices numbered by path."""
    graph = PathGraph(mu)
    marks = {}
    for k, path in enumerate(p.paths, 1):
        for u in path:
            marks[u] = str(k % 10)
    rows = 2 * len(mu) + 1
    cols = 2 * max((j for _, j in graph.cells), default=0) + 1
    lines = []
    for x in range(2, rows + 1):
        line = []
        for y in range(1, cols + 1):
            u = (x, y)
            if u in marks:
                line.append(marks[u])
            elif u in graph.vertices:
                line.append("." if x % 2 == 0 else ",")
            else:
                line.append(" ")
        lines.append("".join(line).rstrip())
    return "\n".join(lines)

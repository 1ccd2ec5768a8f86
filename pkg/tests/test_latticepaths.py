from __future__ import annotations

import pytest

from eqschubert.eyd import ExcitedState, enumerate_eyd
from eqschubert.latticepaths import (
    STEP_A, STEP_B, NotContained, PathError, PathGraph, beta_weights, enumerate_path_tuples,
    eyd_to_paths, generating_function, path_pfaffian_check, paths_to_eyd, render_paths,
    symbolic_weights,
)
from eqschubert.localization import localize_eyd
from eqschubert.polyalg import ZERO, product
from eqschubert.shapes import StrictPartition, strict_partitions_in
from eqschubert.weyl import SchubertContext

RHO3, RHO4 = StrictPartition.rho(3), StrictPartition.rho(4)


def pairs(top):
    for mu in strict_partitions_in(top):
        for lam in strict_partitions_in(mu):
            yield lam, mu


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_start_vertices_on_staircase(n):
    graph = PathGraph(StrictPartition.rho(n))
    for lam in strict_partitions_in(StrictPartition.rho(n)):
        for i, part in enumerate(lam.parts, 1):
            assert graph.start(part, i) == (2 * (n + 1 - part), 2 * n)


def test_graph_shape():
    graph = PathGraph(RHO3)
    assert len(graph.vertices) == 2 * len(RHO3.cells())
    assert sorted(graph.ends.values()) == [1, 2, 3]
    for u in graph.vertices:
        for v in graph.successors(u):
            assert (v[0] - u[0], v[1] - u[1]) in (STEP_A, STEP_B)
            assert v in graph.vertices


@pytest.mark.parametrize(
    "lam,kind,count", [((3, 1), "I", 10), ((3, 1), "II", 5), ((2,), "I", 6), ((2,), "II", 4)]
)
def test_counts(lam, kind, count):
    assert len(enumerate_path_tuples(StrictPartition(lam), RHO4, kind)) == count


@pytest.mark.parametrize("kind", ["I", "II"])
def test_forced_tuple_and_ground_state(kind):
    for mu in strict_partitions_in(RHO4):
        tuples = enumerate_path_tuples(mu, mu, kind)
        assert len(tuples) == 1
        assert tuples[0].cells_used() == frozenset(mu.cells())
    lam = StrictPartition((3, 1))
    ground = eyd_to_paths(lam.cells(), lam, RHO4, kind)
    assert paths_to_eyd(ground, RHO4).cells == frozenset(lam.cells())


@pytest.mark.parametrize("kind", ["I", "II"])
def test_bijection_with_excited_states(kind):
    for lam, mu in pairs(RHO4):
        tuples = enumerate_path_tuples(lam, mu, kind)
        states = enumerate_eyd(lam, mu, kind)
        assert len(tuples) == len(states)
        assert {paths_to_eyd(t, mu).cells for t in tuples} == {s.cells for s in states}
        for t in tuples:
            assert eyd_to_paths(paths_to_eyd(t, mu), lam, mu, kind) == t
        for s in states:
            assert paths_to_eyd(eyd_to_paths(s, lam, mu, kind), mu).cells == s.cells
        weights = symbolic_weights(mu)
        assert generating_function(lam, mu, kind, weights) == sum(
            (product(weights[c] for c in s.cells) for s in states), ZERO
        )


@pytest.mark.parametrize("kind", ["I", "II"])
def test_pfaffian_identity_on_rho3(kind):
    for lam, mu in pairs(RHO3):
        rep = path_pfaffian_check(lam, mu, kind)
        assert rep.holds, (lam, mu)
        if lam.r <= 2:
            assert rep.pfaffian == rep.generating_function


@pytest.mark.parametrize("kind", ["I", "II"])
def test_pfaffian_identity_three_rows_in_rho4(kind):
    assert path_pfaffian_check(StrictPartition((3, 2, 1)), RHO4, kind).holds


def test_root_weights_recover_restrictions():
    lam = StrictPartition((3, 1))
    c4 = SchubertContext.C(4)
    rep = path_pfaffian_check(lam, RHO4, "I", beta_weights(c4, RHO4))
    assert rep.holds and rep.pfaffian == localize_eyd(c4, lam, RHO4)
    d5 = SchubertContext.D(5)
    rep = path_pfaffian_check(lam, RHO4, "II", beta_weights(d5, RHO4))
    assert rep.holds and rep.pfaffian == localize_eyd(d5, lam, RHO4)


def test_errors():
    with pytest.raises(NotContained):
        enumerate_path_tuples(StrictPartition((4,)), RHO3, "I")
    with pytest.raises(PathError):
        enumerate_path_tuples(StrictPartition((1,)), RHO3, "ordinary")
    with pytest.raises(PathError):
        eyd_to_paths(ExcitedState(frozenset({(1, 1), (1, 2)}), RHO3), StrictPartition((1,)), RHO3, "I")


def test_render_paths():
    tuples = enumerate_path_tuples(StrictPartition((3, 1)), RHO4, "I")
    pictures = [render_paths(t, RHO4) for t in tuples]
    assert len(set(pictures)) == len(tuples)
    assert all("1" in p and "2" in p for p in pictures)
    assert render_paths(tuples[0], RHO4) == render_paths(tuples[0], RHO4)

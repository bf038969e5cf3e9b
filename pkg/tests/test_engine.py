from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from schurweyl.engine import (
    SchurWeylLabel,
    amplitude,
    build_graph,
    expand_state,
    insertion_candidates,
    labels_for_weight,
    verify_unitarity,
)
from schurweyl.rsk import rsk_forward
from schurweyl.surd import ONE, ZERO, SurdSum
from schurweyl.young import GTPattern, compositions, gt_from_tableau, orbit_size

G = GTPattern.parse
LABEL = SchurWeylLabel((3, 1), ((1, 2, 3), (2,)), ((1, 3, 4), (2,)), 3)


def r3(num, den):
    return SurdSum({3: Fraction(num, den)})


EXPECTED = {
    (1, 3, 2, 2): r3(1, 6), (1, 2, 2, 3): r3(1, 4), (1, 2, 3, 2): r3(1, 4),
    (2, 1, 2, 3): r3(-1, 4), (3, 1, 2, 2): r3(-1, 6), (2, 1, 3, 2): r3(-1, 4),
    (2, 3, 1, 2): r3(-1, 12), (3, 2, 1, 2): r3(1, 12), (2, 3, 2, 1): r3(-1, 12),
    (3, 2, 2, 1): r3(1, 12),
}


def test_candidates():
    got = {p for p, _ in insertion_candidates(G("110/10/1"), 2, (2, 1, 0))}
    assert got == {G("210/20/1"), G("210/11/1")}
    assert [p for p, _ in insertion_candidates(GTPattern.zero(3), 1, (1, 0, 0))] == [G("100/10/1")]
    assert [p for p, _ in insertion_candidates(G("110/10/1"), 1, (2, 1, 0))] == [G("210/20/2")]


def test_rhomb_graph():
    g = build_graph((1, 3, 2, 2), LABEL)
    assert [set(level) for level in g.levels] == [
        {GTPattern.zero(3)}, {G("100/10/1")}, {G("110/10/1")},
        {G("210/20/1"), G("210/11/1")}, {G("310/21/1")}]
    assert g.vertex_count() == 6
    paths = list(g.paths())
    assert len(paths) == 2
    factors = {tuple(e.weight for e in p[1:]) for p in paths}
    h = SurdSum({2: Fraction(1, 2)})
    assert factors == {(h, h, r3(1, 12)), (h, SurdSum({6: Fraction(1, 6)}), SurdSum.rational(Fraction(3, 4)))}
    assert g.evaluate() == g.path_sum() == r3(1, 6)


def test_chain_graph_and_empty_graph():
    lab = SchurWeylLabel((4,), ((1, 1, 1, 1),), ((1, 2, 3, 4),), 3)
    g = build_graph((1, 1, 1, 1), lab)
    assert [len(level) for level in g.levels] == [1] * 5
    assert amplitude((1, 1, 1, 1), lab) == ONE
    g = build_graph((2, 2, 3, 1), LABEL)
    assert g.sink is None and g.evaluate() == ZERO


def test_amplitudes():
    assert amplitude((1, 3, 2, 2), LABEL) == r3(1, 6)
    assert amplitude((2, 3, 2, 1), LABEL) == r3(-1, 12)
    assert amplitude((1, 1, 1, 2), LABEL) == ZERO  # weight mismatch


def test_full_state():
    state = expand_state(LABEL)
    assert state.nonzero() == EXPECTED
    assert state.amplitudes[(2, 2, 1, 3)] == ZERO and state.amplitudes[(2, 2, 3, 1)] == ZERO
    assert len(state.amplitudes) == 12
    assert state.norm_squared() == ONE


def test_trivial_state():
    for N in range(1, 6):
        lab = SchurWeylLabel((N,), ((1,) * N,), (tuple(range(1, N + 1)),), 2)
        assert expand_state(lab).nonzero() == {(1,) * N: ONE}


def test_two_site_unitary_rows():
    h = SurdSum({2: Fraction(1, 2)})
    sym = expand_state(SchurWeylLabel((2,), ((1, 2),), ((1, 2),), 2)).amplitudes
    anti = expand_state(SchurWeylLabel((1, 1), ((1,), (2,)), ((1,), (2,)), 2)).amplitudes
    assert [abs(sym[(1, 2)]), abs(sym[(2, 1)])] == [h, h]
    assert sym[(1, 2)] == sym[(2, 1)]
    assert anti[(1, 2)] == -anti[(2, 1)] and abs(anti[(1, 2)]) == h


def test_json_state():
    d = expand_state(LABEL).to_json()
    assert d["lambda"] == [3, 1] and d["t"] == "123/2" and d["y"] == "134/2" and d["mu"] == [1, 2, 1]
    first = d["amplitudes"][0]
    assert first["config"] == [1, 2, 2, 3]


def test_unitarity_examples():
    assert verify_unitarity((1, 2, 1), 3).unitary
    assert verify_unitarity((1, 2, 1), 3).size == 12
    rep = verify_unitarity((3, 0, 0), 3)
    assert rep.unitary and rep.size == 1


def test_dp_equals_path_sum_exhaustive():
    for N in range(1, 6):
        for mu in compositions(N, 3):
            for lab in labels_for_weight(mu, 3):
                for f in expand_state(lab).amplitudes:
                    g = build_graph(f, lab)
                    assert g.evaluate() == g.path_sum()


def test_rsk_path_lies_in_graph():
    for N in range(1, 6):
        for f in product(range(1, 4), repeat=N):
            d = rsk_forward(f, 3)
            t, y = d.tableaux()
            g = build_graph(f, SchurWeylLabel(d.shape, t, y, 3))
            for j in range(N + 1):
                p = rsk_forward(f[:j], 3).insertion if j else GTPattern.zero(3)
                assert p in g.levels[j]
            assert g.levels[-1] == [gt_from_tableau(t, 3)]


def test_rsk_label_amplitude_can_vanish():
    # the RSK path is always present, but paths can still cancel exactly
    f = (1, 2, 3, 1, 2)
    d = rsk_forward(f, 3)
    t, y = d.tableaux()
    g = build_graph(f, SchurWeylLabel(d.shape, t, y, 3))
    assert len(list(g.paths())) == 2
    assert g.evaluate() == ZERO


labels = st.integers(1, 6).flatmap(lambda N: st.sampled_from(compositions(N, 3))).map(
    lambda mu: labels_for_weight(mu, 3))


@given(labels, st.data())
@settings(max_examples=60, deadline=None)
def test_graph_invariants(labs, data):
    lab = data.draw(st.sampled_from(labs))
    state = expand_state(lab)
    assert state.norm_squared() == ONE
    f = data.draw(st.sampled_from(list(state.amplitudes)))
    g = build_graph(f, lab)
    assert g.evaluate() == state.amplitudes[f]
    if g.sink is not None:
        assert g.levels[0] == [GTPattern.zero(3)]
        for j, level in enumerate(g.levels):
            shape_j = tuple(sorted((sum(1 for v in r if v <= j) for r in lab.y), reverse=True))
            for v in level:
                assert tuple(v.top) == tuple(shape_j) + (0,) * (3 - len(shape_j))
        for j, edges in enumerate(g.edges):
            for e in edges:
                assert e.source in g.levels[j] and e.target in g.levels[j + 1]


@given(st.integers(1, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_amplitude_independent_of_n(N, data):
    mu = data.draw(st.sampled_from(compositions(N, 2)))
    lab2 = data.draw(st.sampled_from(labels_for_weight(mu, 2)))
    lab4 = SchurWeylLabel(lab2.lam, lab2.t, lab2.y, 4)
    s2 = expand_state(lab2).amplitudes
    s4 = expand_state(lab4).amplitudes
    assert s2 == s4


@pytest.mark.parametrize("N,n", [(3, 2), (4, 2), (4, 3)])
def test_label_count_equals_orbit(N, n):
    for mu in compositions(N, n):
        assert len(labels_for_weight(mu, n)) == orbit_size(mu)

import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from orientcount.constraints import ConstraintProfile
from orientcount.errors import CapExceededError
from orientcount.graph import Graph, complete_graph, connected_components, cycle_graph, induced_subgraph
from orientcount.oracle import (brute_force_count, count_from_expansion, expand_orientation_polynomial,
                                out_degrees)
from orientcount.poly import AdmissibleSet

from families import random_finite_profile

small_graphs = st.integers(2, 6).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
    max_size=9).map(lambda es: Graph.from_edges(n, es)))


def tally_by_hand(g):
    """Independent tally: choose a tail for every edge."""
    out = Counter()
    for tails in itertools.product(*[(u, v) for u, v in g.edges]):
        deg = [0] * g.n
        for t in tails:
            deg[t] += 1
        out[tuple(deg)] += 1
    return out


def test_brute_force_examples():
    tri = cycle_graph(3)
    assert brute_force_count(tri, ConstraintProfile.uniform(tri, AdmissibleSet.singleton(1))) == 2
    edge = Graph(2, ((0, 1),))
    assert brute_force_count(edge, ConstraintProfile.uniform(edge, AdmissibleSet.finite([0, 1]))) == 2
    k4 = complete_graph(4)
    # 2**(|E| - |V|) * (1 + (-1)**|E|) with |E| = 6, |V| = 4
    assert brute_force_count(k4, ConstraintProfile.uniform(k4, AdmissibleSet.residue(0, 2))) == 8


def test_expansion_examples():
    assert expand_orientation_polynomial(Graph(2, ((0, 1),))) == {(1, 0): 1, (0, 1): 1}
    tri = cycle_graph(3)
    exp = expand_orientation_polynomial(tri)
    assert exp == dict(tally_by_hand(tri))
    assert exp[(1, 1, 1)] == 2


@given(small_graphs)
def test_expansion_matches_hand_tally_and_total(g):
    exp = expand_orientation_polynomial(g)
    assert exp == dict(tally_by_hand(g))
    assert sum(exp.values()) == 2 ** g.m


def test_count_from_expansion_examples():
    tri = cycle_graph(3)
    assert count_from_expansion(expand_orientation_polynomial(tri),
                                ConstraintProfile.uniform(tri, AdmissibleSet.singleton(1))) == 2
    k4 = complete_graph(4)
    exp = expand_orientation_polynomial(k4)
    assert count_from_expansion(exp, ConstraintProfile.uniform(k4, AdmissibleSet.all())) == 64
    assert count_from_expansion(exp, ConstraintProfile.uniform(k4, AdmissibleSet.residue(0, 2))) == 8
    with pytest.raises(ValueError):
        count_from_expansion(exp, ConstraintProfile.uniform(cycle_graph(3), AdmissibleSet.all()))


@settings(max_examples=60, deadline=None)
@given(small_graphs, st.integers(0, 10**6))
def test_oracles_agree(g, seed):
    prof = random_finite_profile(g, random.Random(seed))
    assert brute_force_count(g, prof) == count_from_expansion(expand_orientation_polynomial(g), prof)


@settings(max_examples=60, deadline=None)
@given(small_graphs, st.integers(0, 10**6))
def test_reversal_symmetry(g, seed):
    prof = random_finite_profile(g, random.Random(seed))
    assert brute_force_count(g, prof) == brute_force_count(g, prof.reflect(g))


@settings(max_examples=40, deadline=None)
@given(small_graphs, st.integers(0, 10**6))
def test_component_multiplicativity(g, seed):
    prof = random_finite_profile(g, random.Random(seed))
    prod = 1
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        prod *= brute_force_count(sub, prof.restrict(comp))
    assert brute_force_count(g, prof) == prod


def test_singleton_profiles_sum_to_all_orientations():
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)))
    total = 0
    for k in itertools.product(*[range(d + 1) for d in g.degrees]):
        total += brute_force_count(g, ConstraintProfile(tuple(AdmissibleSet.singleton(x) for x in k)))
    assert total == 2 ** g.m


def test_orientation_bit_convention():
    g = Graph(3, ((0, 1), (2, 1)))
    assert out_degrees(g, 0b00) == [1, 0, 1]
    assert out_degrees(g, 0b01) == [0, 1, 1]
    assert out_degrees(g, 0b11) == [0, 2, 0]


def test_cap_refusal():
    g = Graph(2, ((0, 1),) * 25)
    prof = ConstraintProfile.uniform(g, AdmissibleSet.all())
    with pytest.raises(CapExceededError):
        brute_force_count(g, prof)
    with pytest.raises(CapExceededError):
        expand_orientation_polynomial(g)
    small = Graph(2, ((0, 1),) * 5)
    with pytest.raises(CapExceededError):
        brute_force_count(small, ConstraintProfile.uniform(small, AdmissibleSet.all()), cap=4)


def test_worker_blocks_give_same_count():
    g = complete_graph(5)
    prof = ConstraintProfile.half(g)
    assert {brute_force_count(g, prof, workers=w) for w in (1, 3)} == {24}


def test_empty_graphs():
    assert brute_force_count(Graph(0, ()), ConstraintProfile(())) == 1
    g = Graph(2, ())
    assert brute_force_count(g, ConstraintProfile.uniform(g, AdmissibleSet.singleton(0))) == 1
    assert brute_force_count(g, ConstraintProfile.uniform(g, AdmissibleSet.singleton(1))) == 0

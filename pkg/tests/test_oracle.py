import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cayley_census.circulant import multiplier_automorphism
from cayley_census.errors import DegreeMismatchError, InconsistencyError, InvalidConnectionSetError, InvariantSubgroupError
from cayley_census.formula import CycleType, cycle_type_of, cycle_types
from cayley_census.groups import ElementSet, generated_subgroup
from cayley_census.lattice import subgroup_lattice
from cayley_census.morphisms import Automorphism, apply_to_set, automorphism_group, inner_automorphism_group
from cayley_census.oracle import (
    are_equivalent,
    are_weakly_equivalent,
    build_cayley_graph,
    burnside_count,
    connection_set,
    enumerate_connection_sets,
    enumerate_fixed_tuples,
    oracle_class_count,
    orbit_count,
    orbits,
    pair_classes,
    stratify,
)
from cayley_census.roster import ROSTER, sweep_degrees

from conftest import group


def naive_connection_sets(G, m):
    """Scan every m-subset of the non-identity elements."""
    out = []
    for combo in combinations(range(1, G.order), m):
        s = set(combo)
        if all(G.inv(g) in s for g in s) and len(generated_subgroup(G, s)) == G.order:
            out.append(G.set_of(combo))
    return out


def test_cayley_graph_examples():
    Z4 = group("Z4")
    assert build_cayley_graph(Z4, Z4.set_of([1, 3])).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    Z5 = group("Z5")
    C5 = build_cayley_graph(Z5, Z5.set_of([1, 4]))
    assert C5.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    V = group("Z2xZ2")
    K4 = build_cayley_graph(V, V.set_of([1, 2, 3]))
    assert len(K4.edges) == 6 and K4.degrees() == [3, 3, 3, 3]


def test_invalid_connection_sets():
    Z6 = group("Z6")
    with pytest.raises(InvalidConnectionSetError):
        connection_set(Z6, [0, 1, 5])
    with pytest.raises(InvalidConnectionSetError):
        connection_set(Z6, [1, 2])
    with pytest.raises(InvalidConnectionSetError):
        build_cayley_graph(Z6, Z6.set_of([1]))
    assert connection_set(group("S3"), ["(12)", "(123)", "(132)"]).to_list() == [2, 3, 4]


@pytest.mark.parametrize("spec", ["Z6", "Z8", "D4", "Q8", "A4", "Z2xZ4", "D5"])
def test_cayley_graphs_regular_connected_vertex_transitive(spec):
    G = group(spec)
    rng = random.Random(spec)
    pairs, invs = pair_classes(G)
    for _ in range(10):
        chosen = rng.sample(pairs, rng.randint(0, len(pairs))) + rng.sample(invs, rng.randint(0, len(invs)))
        omega = G.set_of([g for p in chosen for g in p])
        graph = build_cayley_graph(G, omega)
        A = graph.adjacency()
        assert graph.degrees() == [len(omega)] * G.order
        assert (A == A.T).all() and not A.diagonal().any()
        assert graph.is_connected() == (len(generated_subgroup(G, omega)) == G.order)
        x = rng.randrange(G.order)
        for g, h in graph.edges:
            assert A[G.mul(x, g), G.mul(x, h)] == 1


def test_enumeration_examples():
    Z5 = group("Z5")
    assert [S.to_list() for S in enumerate_connection_sets(Z5, 2)] == [[1, 4], [2, 3]]
    assert [S.to_list() for S in enumerate_connection_sets(group("Z4"), 2)] == [[1, 3]]
    assert enumerate_connection_sets(group("Z9"), 3) == []
    assert len(enumerate_connection_sets(group("Z13"), 4)) == 15


@pytest.mark.parametrize("spec", [s for s in ROSTER if group(s).order <= 12])
def test_enumeration_matches_subset_scan(spec):
    G = group(spec)
    for m in range(0, G.order):
        fast = enumerate_connection_sets(G, m)
        assert len(set(fast)) == len(fast)
        assert set(fast) == set(naive_connection_sets(G, m))


@pytest.mark.parametrize("spec", ROSTER)
def test_stratification_partitions_sets(spec):
    G = group(spec)
    for m in sweep_degrees(G.order):
        sets = enumerate_connection_sets(G, m)
        layers = stratify(G, sets)
        assert sum(len(v) for v in layers.values()) == len(sets)
        for k, layer in layers.items():
            assert layer == enumerate_connection_sets(G, m, k)
            for S in layer:
                assert sum(1 for g in S if G.inv(g) == g) == m - 2 * k


def test_weak_equivalence_examples():
    Z5 = group("Z5")
    assert are_weakly_equivalent(Z5, Z5.set_of([1, 4]), Z5.set_of([2, 3]))
    Z13 = group("Z13")
    a, b = Z13.set_of([1, 12, 5, 8]), Z13.set_of([1, 12, 2, 11])
    assert not are_weakly_equivalent(Z13, a, b)
    assert are_weakly_equivalent(Z13, a, a)
    with pytest.raises(DegreeMismatchError):
        are_weakly_equivalent(Z13, a, Z13.set_of([1, 12]))


def test_equivalence_examples():
    S3 = group("S3")
    a = S3.set_of(["(12)", "(123)", "(132)"])
    b = S3.set_of(["(23)", "(123)", "(132)"])
    transpositions = S3.set_of(["(12)", "(13)", "(23)"])
    assert are_equivalent(S3, a, b)
    x = S3.index("(13)")
    assert ElementSet.from_indices((S3.conjugate(g, x) for g in a), 6) == b
    assert not are_equivalent(S3, transpositions, a)
    Z8 = group("Z8")
    assert are_equivalent(Z8, Z8.set_of([1, 7]), Z8.set_of([1, 7]))
    assert not are_equivalent(Z8, Z8.set_of([1, 7]), Z8.set_of([3, 5]))
    with pytest.raises(DegreeMismatchError):
        are_equivalent(S3, a, S3.set_of(["(12)"]))


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(["Z8", "Z12", "D4", "Q8", "A4", "Z2xZ4", "D6"]), data=st.data())
def test_weak_equivalence_is_an_equivalence_relation(spec, data):
    G = group(spec)
    m = data.draw(st.integers(2, min(G.order - 1, 5)))
    sets = enumerate_connection_sets(G, m)
    if not sets:
        return
    aut = automorphism_group(G)
    a, b, c = (data.draw(st.sampled_from(sets)) for _ in range(3))
    assert are_weakly_equivalent(G, a, a, aut)
    assert are_weakly_equivalent(G, a, b, aut) == are_weakly_equivalent(G, b, a, aut)
    if are_weakly_equivalent(G, a, b, aut) and are_weakly_equivalent(G, b, c, aut):
        assert are_weakly_equivalent(G, a, c, aut)
    assert are_equivalent(G, a, b) <= are_weakly_equivalent(G, a, b, aut)


def test_orbit_count_examples():
    Z5, Z13, Z9 = group("Z5"), group("Z13"), group("Z9")
    assert orbit_count(enumerate_connection_sets(Z5, 2), automorphism_group(Z5)) == 1
    assert orbit_count(enumerate_connection_sets(Z13, 4), automorphism_group(Z13)) == 3
    assert orbit_count(enumerate_connection_sets(Z9, 2), inner_automorphism_group(Z9)) == 3


def test_orbits_agree_with_pairwise_predicate():
    G = group("D6")
    aut = automorphism_group(G)
    sets = enumerate_connection_sets(G, 3)
    for orbit in orbits(sets, aut):
        rep = orbit[0]
        assert all(are_weakly_equivalent(G, rep, S, aut) for S in orbit)
    reps = [o[0] for o in orbits(sets, aut)]
    for a, b in combinations(reps, 2):
        assert not are_weakly_equivalent(G, a, b, aut)


def test_burnside_canary():
    Z5 = group("Z5")
    sets = enumerate_connection_sets(Z5, 2)
    not_a_group = [Automorphism.identity(5), multiplier_automorphism(5, 2), multiplier_automorphism(5, 4)]
    with pytest.raises(InconsistencyError):
        burnside_count(sets, not_a_group)
    with pytest.raises(InconsistencyError):
        orbit_count(sets, [multiplier_automorphism(5, 2)])


@pytest.mark.parametrize("spec", ROSTER)
def test_inn_orbits_refine_aut_orbits(spec):
    G = group(spec)
    for m in sweep_degrees(G.order, 5):
        assert oracle_class_count(G, m, "equiv").total >= oracle_class_count(G, m, "weak").total


def test_fixed_tuple_examples():
    Z8, Z9 = group("Z8"), group("Z9")
    one, empty = CycleType((1,)), CycleType(())
    assert enumerate_fixed_tuples(Z8, Z8.elements, multiplier_automorphism(8, 3), one, empty, 2, 1) == 1
    assert enumerate_fixed_tuples(Z9, Z9.elements, Automorphism.identity(9), one, empty, 2, 1) == 4
    for a in automorphism_group(Z9):
        for m in range(1, 7):
            for k in range((m - 1) // 2 + 1):
                for st_ in cycle_types(k):
                    for tt in cycle_types(m - 2 * k):
                        assert enumerate_fixed_tuples(Z9, Z9.elements, a, st_, tt, m, k) == 0


def test_fixed_tuples_reject_non_invariant_subgroup():
    V = group("Z2xZ2")
    swap = Automorphism((0, 2, 1, 3))
    with pytest.raises(InvariantSubgroupError):
        enumerate_fixed_tuples(V, V.set_of([0, 1]), swap, CycleType(()), CycleType((1,)), 1, 0)


def _random_perm_of_type(ct, rng):
    letters = list(range(ct.size))
    rng.shuffle(letters)
    perm = list(range(ct.size))
    i = 0
    for length in ct.parts:
        cyc = letters[i:i + length]
        for j, x in enumerate(cyc):
            perm[x] = cyc[(j + 1) % length]
        i += length
    return tuple(perm)


@pytest.mark.parametrize("spec", ["Z2xZ2xZ2", "Z12", "D4", "Q8", "Z3xZ3"])
def test_fixed_tuples_depend_only_on_cycle_type(spec):
    G = group(spec)
    rng = random.Random(spec)
    aut = list(automorphism_group(G))
    subs = subgroup_lattice(G).subgroups
    for _ in range(40):
        a = rng.choice(aut)
        S = rng.choice([S for S in subs if apply_to_set(a, S) == S])
        m = rng.randint(1, 6)
        k = rng.randint(0, m // 2)
        st_ = rng.choice(cycle_types(k))
        tt = rng.choice(cycle_types(m - 2 * k))
        sigma, tau = _random_perm_of_type(st_, rng), _random_perm_of_type(tt, rng)
        assert cycle_type_of(sigma) == st_ and cycle_type_of(tau) == tt
        canonical = enumerate_fixed_tuples(G, S, a, st_, tt, m, k)
        assert enumerate_fixed_tuples(G, S, a, st_, tt, m, k, sigma=sigma, tau=tau) == canonical

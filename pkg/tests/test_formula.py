import math
from collections import Counter
from functools import lru_cache
from itertools import permutations

import pytest

from cayley_census.circulant import multiplier_automorphism
from cayley_census.errors import CayleyCensusError, InvariantSubgroupError
from cayley_census.formula import (
    CycleType,
    FixedCountTable,
    abelian_class_count,
    class_count,
    cycle_type_of,
    cycle_types,
    fixed_tuple_count,
    inverted_counts,
    tilde_tilde_counts,
)
from cayley_census.lattice import subgroup_lattice
from cayley_census.morphisms import Automorphism, apply_to_set, automorphism_group, power
from cayley_census.roster import ROSTER

from conftest import group


@lru_cache(maxsize=None)
def partitions_count(n, largest=None):
    """p(n) by the recursion on the largest part."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(partitions_count(n - p, p) for p in range(1, min(n, largest) + 1))


def test_cycle_type_examples():
    assert [t.parts for t in cycle_types(3)] == [[3], [1, 2], [1, 1, 1]]
    assert len(cycle_types(5)) == 7
    assert cycle_types(0) == [CycleType(())]
    assert CycleType((0, 2, 0, 0)).class_size == 3


@pytest.mark.parametrize("k", range(0, 11))
def test_cycle_types_are_the_partitions(k):
    types = cycle_types(k)
    assert len(types) == len(set(types)) == partitions_count(k)
    assert all(sum(i * j for i, j in enumerate(t.multiplicities, 1)) == k for t in types)
    assert sum(t.class_size for t in types) == math.factorial(k)


@pytest.mark.parametrize("k", range(0, 7))
def test_class_sizes_match_permutation_scan(k):
    seen = Counter(cycle_type_of(p) for p in permutations(range(k)))
    assert seen == {t: t.class_size for t in cycle_types(k)}


@pytest.mark.parametrize("k", range(1, 8))
def test_representatives_have_their_type(k):
    for t in cycle_types(k):
        assert cycle_type_of(t.representative()) == t


def test_cycle_type_normalisation():
    assert CycleType((2, 0, 0)) == CycleType((2,))
    assert CycleType.from_parts([2, 1, 2]).multiplicities == (1, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        CycleType((-1,))


def test_tilde_tilde_examples():
    Z9, Z8 = group("Z9"), group("Z8")
    assert tilde_tilde_counts(Z9, Z9.elements, Automorphism.identity(9), 1) == (8, 0, 0)
    t3 = multiplier_automorphism(8, 3)
    assert tilde_tilde_counts(Z8, Z8.elements, t3, 1) == (0, 2, 1)
    assert tilde_tilde_counts(Z8, Z8.elements, t3, 2) == (6, 0, 1)


def test_inverted_examples():
    Z8 = group("Z8")
    t3 = multiplier_automorphism(8, 3)
    assert inverted_counts(Z8, Z8.elements, t3, 1) == (0, 2, 1)
    assert inverted_counts(Z8, Z8.elements, t3, 2) == (4, 0, 0)
    for r in (3, 5, 7):
        assert inverted_counts(Z8, Z8.elements, t3, r) == (0, 0, 0)


def test_counts_need_invariant_subgroup():
    V = group("Z2xZ2")
    swap = Automorphism((0, 2, 1, 3))
    with pytest.raises(InvariantSubgroupError):
        tilde_tilde_counts(V, V.set_of([0, 1]), swap, 1)
    with pytest.raises(InvariantSubgroupError):
        FixedCountTable(V, V.set_of([0, 2]), swap)


def definition_counts(G, S, alpha, r):
    """F, I, Fo straight from the definitions: scan powers alpha^l for l <= r."""
    inv = G.inverses
    pw = [power(alpha, l).image for l in range(r + 1)]
    F = I = Fo = 0
    for g in S:
        if g == 0:
            continue
        earlier = any(pw[l][g] in (g, inv[g]) for l in range(1, r))
        if inv[g] != g:
            if not earlier and pw[r][g] == g:
                F += 1
            if not earlier and pw[r][g] == inv[g]:
                I += 1
        elif not any(pw[l][g] == g for l in range(1, r)) and pw[r][g] == g:
            Fo += 1
    return F, I, Fo


@pytest.mark.parametrize("spec", ROSTER)
def test_inverted_counts_match_definitions(spec):
    G = group(spec)
    subs = subgroup_lattice(G).subgroups
    for a in automorphism_group(G):
        for S in subs:
            if apply_to_set(a, S) != S:
                continue
            table = FixedCountTable(G, S, a)
            for r in range(1, 9):
                F, I, Fo = table.inverted(r)
                assert (F, I, Fo) == definition_counts(G, S, a, r)
                assert (F + I) % 2 == 0


def test_fixed_tuple_count_examples():
    Z8, Z9 = group("Z8"), group("Z9")
    one, empty = CycleType((1,)), CycleType(())
    assert fixed_tuple_count(Z8, Z8.elements, multiplier_automorphism(8, 3), one, empty, 2, 1) == 1
    assert fixed_tuple_count(Z9, Z9.elements, Automorphism.identity(9), one, empty, 2, 1) == 4
    for a in automorphism_group(Z9):
        for m in range(1, 8):
            for k in range((m - 1) // 2 + 1):
                for st_ in cycle_types(k):
                    for tt in cycle_types(m - 2 * k):
                        assert fixed_tuple_count(Z9, Z9.elements, a, st_, tt, m, k) == 0
    with pytest.raises(ValueError):
        fixed_tuple_count(Z9, Z9.elements, Automorphism.identity(9), one, empty, 3, 1)


@pytest.mark.parametrize("spec,m,mode,expected", [
    ("Z5", 2, "weak", 1),
    ("Z9", 2, "equiv", 3),
    ("Z13", 4, "weak", 3),
    ("Z13", 6, "weak", 4),
    ("S3", 3, "equiv", 2),
    ("S3", 2, "weak", 1),
    ("Q8", 3, "weak", 0),
    ("Z2xZ2", 3, "weak", 1),
])
def test_class_count_examples(spec, m, mode, expected):
    result = class_count(group(spec), m, mode)
    assert result.total == expected
    assert result.total == sum(result.per_k.values())


def test_abelian_examples():
    Z9, Z8 = group("Z9"), group("Z8")
    assert abelian_class_count(Z9, 2).total == math.comb(4, 1) - math.comb(1, 1) == 3
    assert abelian_class_count(Z8, 2).total == 2
    assert abelian_class_count(Z9, 3).total == 0
    with pytest.raises(CayleyCensusError):
        abelian_class_count(group("S3"), 2)


def test_odd_order_odd_degree_vanishes():
    for spec in ["Z9", "Z15", "Z3xZ3", "Z7"]:
        G = group(spec)
        for m in range(1, G.order, 2):
            assert class_count(G, m, "weak").total == 0
            assert class_count(G, m, "equiv").total == 0


def test_parallel_matches_serial():
    G = group("Z2xZ2xZ2")
    for m in (3, 4):
        assert class_count(G, m, "weak", workers=3) == class_count(G, m, "weak")


def test_degree_validation():
    with pytest.raises(ValueError):
        class_count(group("Z5"), 0)
    with pytest.raises(ValueError):
        class_count(group("Z5"), 2, mode="strong")

"""Brute-force ground truth: explicit connection sets and their orbits.

Nothing here uses the closed-form machinery in :mod:`cayley_census.formula`;
the two are compared against each other in the test suite and by the CLI's
``validate`` command.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .config import check_scale, oracle_max_order
from .errors import DegreeMismatchError, InconsistencyError, InvalidConnectionSetError, InvariantSubgroupError
from .formula import ClassCount, CycleType
from .groups import ElementSet, FiniteGroup, generated_subgroup
from .morphisms import Automorphism, AutomorphismGroup, Kind, acting_group, apply_to_set

# A connection set is an ElementSet that passes ``is_connection_set``.
ConnectionSet = ElementSet


class PairClass(NamedTuple):
    """The unordered pair ``{x, x^-1}``; ``representative`` is the smaller index."""

    representative: int
    partner: int

    @property
    def is_involution(self) -> bool:
        return self.representative == self.partner


def pair_classes(G: FiniteGroup, S: Iterable[int] | None = None) -> tuple[list[PairClass], list[PairClass]]:
    """Split the non-identity elements of ``S`` into inverse pairs and involutions."""
    members = range(G.order) if S is None else S
    pairs, involutions = [], []
    for g in members:
        h = G.inverses[g]
        if g == 0 or h < g:
            continue
        (involutions if g == h else pairs).append(PairClass(g, h))
    return pairs, involutions


def is_connection_set(G: FiniteGroup, S: ElementSet) -> bool:
    return 0 not in S and all(G.inverses[g] in S for g in S)


def connection_set(G: FiniteGroup, elements: Iterable[int | str]) -> ConnectionSet:
    """Validated inverse-closed, identity-free subset (generation is not required)."""
    S = G.set_of(elements)
    if 0 in S:
        raise InvalidConnectionSetError("a connection set must not contain the identity")
    missing = [g for g in S if G.inverses[g] not in S]
    if missing:
        raise InvalidConnectionSetError(
            f"connection set is not inverse-closed: missing inverses of {[G.names[g] for g in missing]}")
    return S


def generates(G: FiniteGroup, S: ElementSet) -> bool:
    return len(generated_subgroup(G, S)) == G.order


@dataclass(frozen=True)
class CayleyGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int8)
        for g, h in self.edges:
            A[g, h] = A[h, g] = 1
        return A

    def degrees(self) -> list[int]:
        return self.adjacency().sum(axis=1).tolist()

    def is_connected(self) -> bool:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for g, h in self.edges:
            nbrs[g].append(h)
            nbrs[h].append(g)
        seen = {0}
        stack = [0]
        while stack:
            for y in nbrs[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n


def build_cayley_graph(G: FiniteGroup, omega: ConnectionSet) -> CayleyGraph:
    """Edges ``{g, h}`` with ``g^-1 h`` in ``omega``."""
    if not is_connection_set(G, omega):
        raise InvalidConnectionSetError(f"{omega.to_list()} is not a connection set of {G.name}")
    edges = {tuple(sorted((g, G.rows[g][w]))) for g in range(G.order) for w in omega}
    return CayleyGraph(G.order, tuple(sorted(edges)))


def enumerate_connection_sets(G: FiniteGroup, m: int, k: int | None = None) -> list[ConnectionSet]:
    """All generating connection sets of size ``m``, optionally only those with ``k`` inverse pairs.

    Sets are built from ``k`` non-involution pairs and ``m - 2k`` involutions.
    """
    check_scale(G.order, oracle_max_order(), "enumerate_connection_sets")
    if not 0 <= m <= G.order - 1:
        raise ValueError(f"degree must lie in 0..{G.order - 1}, got {m}")
    pairs, involutions = pair_classes(G)
    pair_masks = [1 << p.representative | 1 << p.partner for p in pairs]
    inv_masks = [1 << p.representative for p in involutions]
    ks = range(m // 2 + 1) if k is None else [k]
    out = []
    for kk in ks:
        if kk < 0 or m - 2 * kk < 0:
            continue
        for chosen_pairs in combinations(pair_masks, kk):
            base = sum(chosen_pairs)
            for chosen_inv in combinations(inv_masks, m - 2 * kk):
                S = ElementSet(base + sum(chosen_inv), G.order)
                if generates(G, S):
                    out.append(S)
    return out


def pair_count(G: FiniteGroup, omega: ConnectionSet) -> int:
    """Number ``k`` of non-involution inverse pairs in ``omega``."""
    return sum(1 for g in omega if G.inverses[g] != g) // 2


def stratify(G: FiniteGroup, sets: Iterable[ConnectionSet]) -> dict[int, list[ConnectionSet]]:
    out: dict[int, list[ConnectionSet]] = {}
    for S in sets:
        out.setdefault(pair_count(G, S), []).append(S)
    return out


def are_weakly_equivalent(G: FiniteGroup, omega: ConnectionSet, other: ConnectionSet,
                          aut: AutomorphismGroup | None = None) -> bool:
    """True iff some automorphism maps ``omega`` onto ``other``."""
    if len(omega) != len(other):
        raise DegreeMismatchError(f"degrees differ: {len(omega)} vs {len(other)}")
    if aut is None:
        aut = acting_group(G, "weak")
    return any(apply_to_set(alpha, omega) == other for alpha in aut)


def are_equivalent(G: FiniteGroup, omega: ConnectionSet, other: ConnectionSet) -> bool:
    """True iff ``x^-1 omega x == other`` for some ``x``."""
    if len(omega) != len(other):
        raise DegreeMismatchError(f"degrees differ: {len(omega)} vs {len(other)}")
    for x in range(G.order):
        mask = 0
        for g in omega:
            mask |= 1 << G.conjugate(g, x)
        if mask == other.mask:
            return True
    return False


def orbits(sets: Sequence[ConnectionSet], action: Iterable[Automorphism]) -> list[list[ConnectionSet]]:
    """Partition ``sets`` into orbits with a union-find."""
    family = set(sets)
    ds = DisjointSet(sets)
    for alpha in action:
        for S in sets:
            T = apply_to_set(alpha, S)
            if T not in family:
                raise ValueError(f"action maps {S.to_list()} outside the family")
            ds.merge(S, T)
    return [sorted(c, key=lambda S: S.mask) for c in ds.subsets()]


def burnside_count(sets: Sequence[ConnectionSet], action: Sequence[Automorphism]) -> int:
    """Average number of fixed sets; a remainder is an internal error."""
    fixed = sum(1 for alpha in action for S in sets if apply_to_set(alpha, S) == S)
    q, rem = divmod(fixed, len(action))
    if rem:
        raise InconsistencyError(f"Burnside sum {fixed} is not divisible by group order {len(action)}")
    return q


def orbit_count(sets: Sequence[ConnectionSet], action: AutomorphismGroup | Sequence[Automorphism]) -> int:
    """Orbit count by union-find, cross-checked against Burnside averaging."""
    action = list(action)
    n_orbits = len(orbits(sets, action))
    if sets:
        via_burnside = burnside_count(sets, action)
        if via_burnside != n_orbits:
            raise InconsistencyError(f"union-find found {n_orbits} orbits but Burnside gives {via_burnside}")
    return n_orbits


def oracle_class_count(G: FiniteGroup, m: int, mode: Kind = "weak") -> ClassCount:
    """Class count by explicit enumeration, broken down by number of inverse pairs."""
    action = list(acting_group(G, mode))
    per_k = {}
    for k in range(m // 2 + 1):
        per_k[k] = orbit_count(enumerate_connection_sets(G, m, k), action)
    return ClassCount(G.name, m, mode, sum(per_k.values()), per_k)


def enumerate_fixed_tuples(G: FiniteGroup, S: ElementSet, alpha: Automorphism, sigma_type: CycleType,
                           tau_type: CycleType, m: int, k: int, *, sigma: Sequence[int] | None = None,
                           tau: Sequence[int] | None = None) -> int:
    """Count tuples of distinct classes of ``S`` fixed by ``(alpha, sigma, tau)`` by exhaustive search.

    Positions ``0..k-1`` hold inverse pairs, the remaining ``m - 2k`` hold
    involutions.  The tuple is fixed when ``c[sigma(j)] == alpha(c[j])`` for
    every position.  Explicit permutations ``sigma``/``tau`` override the
    canonical representatives of the cycle types.
    """
    if apply_to_set(alpha, S) != S:
        raise InvariantSubgroupError(f"subgroup {S.to_list()} is not invariant under the automorphism")
    if sigma_type.size != k or tau_type.size != m - 2 * k:
        raise ValueError(f"cycle types of sizes ({sigma_type.size}, {tau_type.size}) do not fit m={m}, k={k}")
    sigma = tuple(sigma) if sigma is not None else sigma_type.representative()
    tau = tuple(tau) if tau is not None else tau_type.representative()
    pairs, involutions = pair_classes(G, S)
    classes = pairs + involutions
    cls_of = {}
    for i, p in enumerate(classes):
        cls_of[p.representative] = cls_of[p.partner] = i
    image = [cls_of[alpha(p.representative)] for p in classes]
    n_pairs = len(pairs)
    perm = list(sigma) + [k + t for t in tau]
    n_pos = len(perm)
    pre = [0] * n_pos
    for j, pj in enumerate(perm):
        pre[pj] = j
    candidates = [range(n_pairs) if j < k else range(n_pairs, len(classes)) for j in range(n_pos)]
    chosen = [-1] * n_pos
    used = [False] * len(classes)

    def consistent(j: int) -> bool:
        c = chosen[j]
        nxt, prv = perm[j], pre[j]
        if nxt <= j and chosen[nxt] != image[c]:
            return False
        if prv <= j and image[chosen[prv]] != c:
            return False
        return True

    def count(j: int) -> int:
        if j == n_pos:
            return 1
        total = 0
        for c in candidates[j]:
            if used[c]:
                continue
            chosen[j] = c
            if consistent(j):
                used[c] = True
                total += count(j + 1)
                used[c] = False
            chosen[j] = -1
        return total

    return count(0)

"""Subgroup lattices and their Möbius functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import check_scale, formula_max_order
from .errors import MissingTopError
from .groups import ElementSet, FiniteGroup, generated_subgroup
from .morphisms import Automorphism, apply_to_set


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """A poset of subgroups ordered by inclusion.

    ``subgroups`` is sorted by size (bottom first, the full group last);
    ``leq[i, j]`` is true when ``subgroups[i] <= subgroups[j]`` and ``mu[i]``
    is the Möbius value of ``subgroups[i]`` relative to the top.
    """

    n: int
    subgroups: tuple[ElementSet, ...]
    leq: np.ndarray
    mu: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def index(self, S: ElementSet) -> int:
        return self.subgroups.index(S)

    def mu_of(self, S: ElementSet) -> int:
        return self.mu[self.index(S)]

    def items(self) -> list[tuple[ElementSet, int]]:
        return list(zip(self.subgroups, self.mu))


def _sorted(subgroups) -> tuple[ElementSet, ...]:
    return tuple(sorted(set(subgroups), key=lambda S: (len(S), S.mask)))


def _inclusion(subgroups: Sequence[ElementSet]) -> np.ndarray:
    masks = [S.mask for S in subgroups]
    leq = np.array([[a & ~b == 0 for b in masks] for a in masks], dtype=bool).reshape(len(masks), len(masks))
    leq.setflags(write=False)
    return leq


def moebius_values(poset: SubgroupLattice | Sequence[ElementSet]) -> dict[ElementSet, int]:
    """Möbius values ``mu(S)`` with ``sum(mu(T) for T >= S) == (S is top)``.

    The top must be the full group, i.e. the unique element containing all
    others.  Values are computed top-down.
    """
    subgroups = _sorted(poset.subgroups if isinstance(poset, SubgroupLattice) else poset)
    if not subgroups:
        raise MissingTopError("empty subgroup poset")
    n = subgroups[0].n
    top = subgroups[-1]
    if top.mask != (1 << n) - 1:
        raise MissingTopError("the full group is not in the poset")
    mu: dict[ElementSet, int] = {}
    for i in range(len(subgroups) - 1, -1, -1):
        S = subgroups[i]
        if S == top:
            mu[S] = 1
            continue
        mu[S] = -sum(mu[T] for T in subgroups[i + 1:] if S.mask & ~T.mask == 0 and T != S)
    return mu


def make_lattice(subgroups: Sequence[ElementSet]) -> SubgroupLattice:
    subs = _sorted(subgroups)
    mu = moebius_values(subs)
    return SubgroupLattice(subs[0].n, subs, _inclusion(subs), tuple(mu[S] for S in subs))


def all_subgroups(G: FiniteGroup) -> list[ElementSet]:
    """Every subgroup of ``G``: cyclic subgroups closed under pairwise joins."""
    check_scale(G.order, formula_max_order(), "all_subgroups")
    found = {generated_subgroup(G, [g]) for g in range(G.order)}
    work = list(found)
    while work:
        H = work.pop()
        for K in list(found):
            if H.mask & ~K.mask == 0 or K.mask & ~H.mask == 0:
                continue
            J = generated_subgroup(G, list(H | K))
            if J not in found:
                found.add(J)
                work.append(J)
    return list(_sorted(found))


def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    return make_lattice(all_subgroups(G))


def invariant_subgroups(G: FiniteGroup, alpha: Automorphism,
                        lattice: SubgroupLattice | None = None) -> SubgroupLattice:
    """The sub-poset of subgroups ``S`` with ``alpha(S) == S``, Möbius values recomputed on it."""
    if lattice is None:
        lattice = subgroup_lattice(G)
    return make_lattice([S for S in lattice.subgroups if apply_to_set(alpha, S) == S])

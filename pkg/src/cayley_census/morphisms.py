"""Automorphisms of finite groups as dense index maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Literal

import numpy as np

from .config import check_scale, formula_max_order
from .errors import CayleyCensusError
from .groups import ElementSet, FiniteGroup, generated_subgroup

Kind = Literal["weak", "equiv"]


@dataclass(frozen=True)
class Automorphism:
    """A group automorphism stored as ``image[g]`` for every element index ``g``."""

    image: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        image = self.image
        x, d = image, 1
        ident = tuple(range(len(image)))
        while x != ident:
            x = tuple(image[i] for i in x)
            d += 1
        object.__setattr__(self, "order", d)

    @classmethod
    def identity(cls, n: int) -> Automorphism:
        return cls(tuple(range(n)))

    def __call__(self, g: int) -> int:
        return self.image[g]

    def __len__(self) -> int:
        return len(self.image)

    def compose(self, other: Automorphism) -> Automorphism:
        """``self ∘ other``: apply ``other`` first."""
        return Automorphism(tuple(self.image[i] for i in other.image))

    def inverse(self) -> Automorphism:
        inv = [0] * len(self.image)
        for g, h in enumerate(self.image):
            inv[h] = g
        return Automorphism(tuple(inv))

    def is_identity(self) -> bool:
        return all(g == h for g, h in enumerate(self.image))


def power(alpha: Automorphism, r: int) -> Automorphism:
    """The ``r``-fold composite of ``alpha`` (the identity map for ``r = 0``)."""
    if r < 0:
        raise ValueError(f"power exponent must be nonnegative, got {r}")
    r %= alpha.order
    image = list(range(len(alpha.image)))
    for _ in range(r):
        image = [alpha.image[i] for i in image]
    return Automorphism(tuple(image))


def apply_to_set(alpha: Automorphism, S: ElementSet) -> ElementSet:
    image = alpha.image
    mask = 0
    for g in S:
        mask |= 1 << image[g]
    return ElementSet(mask, S.n)


def is_automorphism(G: FiniteGroup, image: tuple[int, ...] | list[int]) -> bool:
    """Full-table check that ``image`` is a bijective homomorphism."""
    p = np.asarray(image)
    if p.shape != (G.order,) or sorted(image) != list(range(G.order)):
        return False
    T = G.table
    return bool(np.array_equal(T[p[:, None], p[None, :]], p[T]))


@dataclass(frozen=True)
class AutomorphismGroup:
    """A set of automorphisms closed under composition; ``kind`` says Aut or Inn."""

    members: tuple[Automorphism, ...]
    kind: Kind

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Automorphism]:
        return iter(self.members)

    def __contains__(self, alpha: object) -> bool:
        return alpha in set(self.members)

    def is_closed(self) -> bool:
        members = set(self.members)
        if not members or Automorphism.identity(len(self.members[0])) not in members:
            return False
        return all(a.compose(b) in members for a in members for b in members)


def _generating_sequence(G: FiniteGroup) -> list[int]:
    """Greedy generating sequence: repeatedly add an element of largest order outside the span."""
    gens: list[int] = []
    span = ElementSet(1, G.order)
    while len(span) < G.order:
        g = max((x for x in range(G.order) if x not in span), key=lambda x: (G.element_orders[x], -x))
        gens.append(g)
        span = generated_subgroup(G, gens)
    return gens


def _extend(G: FiniteGroup, gens: list[int], images: list[int]) -> list[int] | None:
    """Propagate ``x*g -> phi(x)*phi(g)`` from the identity; None on any clash or collision."""
    rows = G.rows
    phi = [-1] * G.order
    used = [False] * G.order
    phi[0] = 0
    used[0] = True
    queue = [0]
    for x in queue:
        px = rows[phi[x]]
        row = rows[x]
        for g, h in zip(gens, images):
            y = row[g]
            py = px[h]
            if phi[y] < 0:
                if used[py]:
                    return None
                phi[y] = py
                used[py] = True
                queue.append(y)
            elif phi[y] != py:
                return None
    return phi


def automorphism_group(G: FiniteGroup) -> AutomorphismGroup:
    """All automorphisms of ``G``, by backtracking over images of a generating sequence."""
    check_scale(G.order, formula_max_order(), "automorphism_group")
    gens = _generating_sequence(G)
    orders = G.element_orders
    found: list[Automorphism] = []

    def search(images: list[int]) -> None:
        i = len(images)
        if i == len(gens):
            phi = _extend(G, gens, images)
            if phi is not None and -1 not in phi:
                found.append(Automorphism(tuple(phi)))
            return
        for h in range(1, G.order):
            if orders[h] != orders[gens[i]] or h in images:
                continue
            images.append(h)
            if _extend(G, gens[: i + 1], images) is not None:
                search(images)
            images.pop()

    if gens:
        search([])
    else:
        found.append(Automorphism.identity(G.order))
    found.sort(key=lambda a: a.image)
    return AutomorphismGroup(tuple(found), "weak")


def automorphisms_brute_force(G: FiniteGroup) -> list[Automorphism]:
    """Scan every bijection fixing the identity.  Only sensible for ``|G| <= 8``."""
    if G.order > 8:
        raise CayleyCensusError("brute-force automorphism scan is limited to order <= 8")
    out = []
    for rest in permutations(range(1, G.order)):
        image = (0, *rest)
        if is_automorphism(G, image):
            out.append(Automorphism(image))
    return sorted(out, key=lambda a: a.image)


def inner_automorphism_group(G: FiniteGroup) -> AutomorphismGroup:
    """Conjugation maps ``g -> x^-1 g x`` for every ``x``, duplicates removed."""
    check_scale(G.order, formula_max_order(), "inner_automorphism_group")
    maps = {tuple(G.conjugate(g, x) for g in range(G.order)) for x in range(G.order)}
    return AutomorphismGroup(tuple(Automorphism(m) for m in sorted(maps)), "equiv")


def acting_group(G: FiniteGroup, mode: Kind) -> AutomorphismGroup:
    """Aut(G) for ``mode="weak"``, Inn(G) for ``mode="equiv"``."""
    if mode == "weak":
        return automorphism_group(G)
    if mode == "equiv":
        return inner_automorphism_group(G)
    raise ValueError(f"mode must be 'weak' or 'equiv', got {mode!r}")

"""Closed-form class counts via Burnside averaging and subgroup Möbius inversion.

The count of connection sets of degree ``m`` up to an automorphism group ``H``
is split by the number ``k`` of non-involution inverse pairs.  For every
``alpha`` in ``H`` and every ``alpha``-invariant subgroup ``S`` the number of
tuples fixed by ``(alpha, sigma, tau)`` is a product of falling factorials in
the fixed-point counts of powers of ``alpha``; Möbius inversion over the
invariant subgroups keeps only generating tuples, and summing over cycle
types of ``sigma`` and ``tau`` replaces the sum over ``S_k x S_{m-2k}``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import divisors, mobius
from sympy.utilities.iterables import partitions

from .errors import CayleyCensusError, InconsistencyError, InvariantSubgroupError
from .groups import ElementSet, FiniteGroup, involution_set
from .lattice import SubgroupLattice, invariant_subgroups, subgroup_lattice
from .morphisms import Automorphism, Kind, acting_group, apply_to_set, power


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(int(d) for d in divisors(n))


@lru_cache(maxsize=None)
def _mu(n: int) -> int:
    return int(mobius(n))


# -- cycle types -----------------------------------------------------------------

@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation of ``size`` letters.

    ``multiplicities[i - 1]`` is the number of ``i``-cycles, so the tuple has
    length ``size`` and ``sum(i * j_i) == size``.
    """

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        mult = tuple(int(j) for j in self.multiplicities)
        if any(j < 0 for j in mult):
            raise ValueError(f"negative cycle multiplicity in {mult}")
        size = sum(i * j for i, j in enumerate(mult, start=1))
        # normalise the length to the number of letters
        mult = (mult + (0,) * size)[:size]
        object.__setattr__(self, "multiplicities", mult)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> CycleType:
        parts = list(parts)
        size = sum(parts)
        mult = [0] * size
        for p in parts:
            if p < 1:
                raise ValueError(f"cycle lengths must be positive, got {p}")
            mult[p - 1] += 1
        return cls(tuple(mult))

    @property
    def size(self) -> int:
        return len(self.multiplicities)

    @property
    def parts(self) -> list[int]:
        """Cycle lengths in increasing order."""
        return [i for i, j in enumerate(self.multiplicities, start=1) for _ in range(j)]

    def cycles(self) -> Iterable[tuple[int, int]]:
        """``(length, multiplicity)`` pairs with nonzero multiplicity."""
        return ((i, j) for i, j in enumerate(self.multiplicities, start=1) if j)

    @property
    def centralizer_order(self) -> int:
        return math.prod(i**j * math.factorial(j) for i, j in self.cycles())

    @property
    def class_size(self) -> int:
        """Number of permutations in ``S_size`` with this cycle type."""
        return math.factorial(self.size) // self.centralizer_order

    def representative(self) -> tuple[int, ...]:
        """A permutation of this type with cycles of increasing length on consecutive letters."""
        perm = list(range(self.size))
        start = 0
        for length in self.parts:
            for i in range(length):
                perm[start + i] = start + (i + 1) % length
            start += length
        return tuple(perm)

    def __repr__(self) -> str:
        return f"CycleType({self.parts})"


def cycle_types(k: int) -> list[CycleType]:
    """All cycle types of permutations of ``k`` letters (integer partitions of ``k``)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return [CycleType(())]
    out = []
    for p in partitions(k):
        mult = [0] * k
        for part, j in p.items():
            mult[part - 1] = j
        out.append(CycleType(tuple(mult)))
    return out


def cycle_type_of(perm: Sequence[int]) -> CycleType:
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length, x = 0, i
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        parts.append(length)
    return CycleType.from_parts(parts)


# -- fixed-point counts of powers of alpha ------------------------------------------

class FixedCountTable:
    """Fixed-point counts of ``alpha^r`` on an ``alpha``-invariant subgroup ``S``.

    ``tilde_tilde(r)`` gives the raw scans ``(FF, II, FFo)``:

    * ``FF``  elements with ``alpha^r(g) = g`` and ``g != g^-1``,
    * ``II``  elements with ``alpha^r(g) = g^-1`` and ``g != g^-1``,
    * ``FFo`` involutions with ``alpha^r(g) = g``.

    ``inverted(r)`` gives ``(F, I, Fo)``, the same sets restricted to elements
    whose pair class ``{g, g^-1}`` has ``alpha``-orbit of length exactly
    ``r`` (for ``I``: reaching ``g^-1`` after exactly ``r`` steps), obtained
    from the raw scans by number-theoretic Möbius inversion over divisors.
    Values are memoised per ``r``.
    """

    def __init__(self, G: FiniteGroup, S: ElementSet, alpha: Automorphism):
        if apply_to_set(alpha, S) != S:
            raise InvariantSubgroupError(f"subgroup {S.to_list()} is not invariant under the automorphism")
        self.G = G
        self.S = S
        self.alpha = alpha
        inv = G.inverses
        members = list(S)
        self._pairs = [g for g in members if inv[g] != g]
        self._involutions = [g for g in members if g != 0 and inv[g] == g]
        self._tt: dict[int, tuple[int, int, int]] = {}
        self._inv: dict[int, tuple[int, int, int]] = {}

    def tilde_tilde(self, r: int) -> tuple[int, int, int]:
        if r < 1:
            raise ValueError(f"r must be positive, got {r}")
        r_eff = r % self.alpha.order or self.alpha.order
        if r_eff not in self._tt:
            image = power(self.alpha, r_eff).image
            inv = self.G.inverses
            ff = sum(1 for g in self._pairs if image[g] == g)
            ii = sum(1 for g in self._pairs if image[g] == inv[g])
            ffo = sum(1 for g in self._involutions if image[g] == g)
            self._tt[r_eff] = (ff, ii, ffo)
        return self._tt[r_eff]

    def _F(self, r: int) -> int:
        if self.alpha.order % r:
            return 0
        total = sum(_mu(r // d) * self.tilde_tilde(d)[0] for d in _divisors(r))
        if r % 2 == 0:
            total -= self._I(r // 2)
        return total

    def _I(self, r: int) -> int:
        if self.alpha.order % (2 * r):
            return 0
        return sum(_mu(r // d) * self.tilde_tilde(d)[1] for d in _divisors(r) if (r // d) % 2)

    def _Fo(self, r: int) -> int:
        if self.alpha.order % r:
            return 0
        return sum(_mu(r // d) * self.tilde_tilde(d)[2] for d in _divisors(r))

    def inverted(self, r: int) -> tuple[int, int, int]:
        if r < 1:
            raise ValueError(f"r must be positive, got {r}")
        if r not in self._inv:
            F, I, Fo = self._F(r), self._I(r), self._Fo(r)
            if min(F, I, Fo) < 0 or (F + I) % 2:
                raise InconsistencyError(f"impossible fixed counts F={F}, I={I}, Fo={Fo} at r={r}")
            self._inv[r] = (F, I, Fo)
        return self._inv[r]

    def pair_slots(self, r: int) -> int:
        """Number of inverse pairs whose ``alpha``-orbit has length exactly ``r``."""
        F, I, _ = self.inverted(r)
        return (F + I) // 2


def tilde_tilde_counts(G: FiniteGroup, S: ElementSet, alpha: Automorphism, r: int) -> tuple[int, int, int]:
    """Direct scans ``(FF, II, FFo)`` of ``alpha^r`` on ``S``."""
    return FixedCountTable(G, S, alpha).tilde_tilde(r)


def inverted_counts(G: FiniteGroup, S: ElementSet, alpha: Automorphism, r: int) -> tuple[int, int, int]:
    """Exact-orbit-length counts ``(F, I, Fo)`` of ``alpha`` on ``S`` at length ``r``."""
    return FixedCountTable(G, S, alpha).inverted(r)


# -- fixed tuples ----------------------------------------------------------------------

def _falling(c: int, step: int, count: int) -> int:
    """``c (c - step) (c - 2 step) ...`` with ``count`` factors, zero once supply runs out."""
    out = 1
    for s in range(count):
        f = c - step * s
        if f <= 0:
            return 0
        out *= f
    return out


def _sigma_product(table: FixedCountTable, sigma_type: CycleType) -> int:
    out = 1
    for r, j in sigma_type.cycles():
        out *= _falling(table.pair_slots(r), r, j)
        if not out:
            return 0
    return out


def _tau_product(table: FixedCountTable, tau_type: CycleType) -> int:
    out = 1
    for l, j in tau_type.cycles():
        out *= _falling(table.inverted(l)[2], l, j)
        if not out:
            return 0
    return out


def fixed_tuple_count(G: FiniteGroup, S: ElementSet, alpha: Automorphism, sigma_type: CycleType,
                      tau_type: CycleType, m: int, k: int, table: FixedCountTable | None = None) -> int:
    """Tuples of ``k`` inverse pairs and ``m - 2k`` involutions of ``S`` fixed by ``(alpha, sigma, tau)``.

    The generating condition is not imposed.
    """
    if sigma_type.size != k or tau_type.size != m - 2 * k:
        raise ValueError(f"cycle types of sizes ({sigma_type.size}, {tau_type.size}) do not fit m={m}, k={k}")
    if table is None:
        table = FixedCountTable(G, S, alpha)
    return _sigma_product(table, sigma_type) * _tau_product(table, tau_type)


# -- class counts ------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassCount:
    group: str
    degree: int
    mode: str
    total: int
    per_k: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.total != sum(self.per_k.values()) or self.total < 0:
            raise InconsistencyError(f"class count total {self.total} does not match breakdown {self.per_k}")


def _alpha_terms(G: FiniteGroup, lattice: SubgroupLattice, alphas: Sequence[tuple[int, ...]], m: int) -> list[int]:
    """Sum over the given automorphisms of the fixed generating-tuple counts, per ``k``."""
    ks = range(m // 2 + 1)
    sigma_types = {k: cycle_types(k) for k in ks}
    tau_types = {k: cycle_types(m - 2 * k) for k in ks}
    totals = [0] * len(ks)
    for image in alphas:
        alpha = Automorphism(image)
        poset = invariant_subgroups(G, alpha, lattice)
        for S, mu in zip(poset.subgroups, poset.mu):
            if mu == 0:
                continue
            table = FixedCountTable(G, S, alpha)
            for k in ks:
                x = sum(t.class_size * _sigma_product(table, t) for t in sigma_types[k])
                if not x:
                    continue
                y = sum(t.class_size * _tau_product(table, t) for t in tau_types[k])
                totals[k] += mu * x * y
    return totals


def class_count(G: FiniteGroup, m: int, mode: Kind = "weak", workers: int = 1,
                lattice: SubgroupLattice | None = None) -> ClassCount:
    """Number of (weak) equivalence classes of Cayley graphs of ``G`` of degree ``m``.

    ``mode="weak"`` averages over Aut(G), ``mode="equiv"`` over Inn(G).  With
    ``workers > 1`` the automorphisms are split across processes; the exact
    integer reduction makes the result independent of the split.
    """
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")
    H = acting_group(G, mode)
    if lattice is None:
        lattice = subgroup_lattice(G)
    images = [a.image for a in H]
    if workers > 1 and len(images) > 1:
        chunks = [images[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_alpha_terms, [G] * workers, [lattice] * workers, chunks, [m] * workers))
        totals = [sum(col) for col in zip(*parts)]
    else:
        totals = _alpha_terms(G, lattice, images, m)
    per_k = {}
    for k, burnside_sum in enumerate(totals):
        denom = len(H) * math.factorial(k) * math.factorial(m - 2 * k)
        q, rem = divmod(burnside_sum, denom)
        if rem:
            raise InconsistencyError(
                f"Burnside sum {burnside_sum} for {G.name}, m={m}, k={k} is not divisible by {denom}")
        per_k[k] = q
    return ClassCount(G.name, m, mode, sum(per_k.values()), per_k)


def abelian_class_count(G: FiniteGroup, m: int, lattice: SubgroupLattice | None = None) -> ClassCount:
    """Class count for abelian ``G`` where inner automorphisms are trivial.

    Each subgroup ``S`` contributes ``mu(S) * C(pairs(S), k) * C(involutions(S), m - 2k)``.
    """
    if not G.is_abelian:
        raise CayleyCensusError(f"{G.name} is not abelian")
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")
    if lattice is None:
        lattice = subgroup_lattice(G)
    per_k = {k: 0 for k in range(m // 2 + 1)}
    for S, mu in zip(lattice.subgroups, lattice.mu):
        if mu == 0:
            continue
        o2 = len(involution_set(G, S))
        pairs2 = len(S) - o2 - 1
        if pairs2 % 2:
            raise InconsistencyError(f"odd number of non-involutions in subgroup {S.to_list()}")
        for k in per_k:
            per_k[k] += mu * math.comb(pairs2 // 2, k) * math.comb(o2, m - 2 * k)
    return ClassCount(G.name, m, "equiv", sum(per_k.values()), per_k)

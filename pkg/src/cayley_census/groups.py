"""Finite groups as immutable multiplication tables.

Elements are the indices ``0..n-1`` and the identity is always index 0.
Subsets of a group are :class:`ElementSet` bit-vectors over those indices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GroupSpecError, GroupValidationError


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``{0, ..., n-1}`` stored as an integer bit mask."""

    mask: int
    n: int

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> ElementSet:
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"element index {i} out of range for n={n}")
            mask |= 1 << i
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> ElementSet:
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> ElementSet:
        return cls((1 << n) - 1, n)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, (int, np.integer)) and 0 <= i < self.n and bool(self.mask >> int(i) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def _check(self, other: ElementSet) -> None:
        if self.n != other.n:
            raise ValueError(f"element sets over different groups ({self.n} vs {other.n})")

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask | other.mask, self.n)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask & other.mask, self.n)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask & ~other.mask, self.n)

    def __invert__(self) -> ElementSet:
        return ElementSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"ElementSet({self.to_list()}, n={self.n})"


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of the product ``i * j``.  Instances are
    immutable; the table array is marked read-only.  Groups built by the
    constructors in this module are trusted and skip axiom validation, tables
    coming from outside go through :func:`group_from_table`.
    """

    identity = 0

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray, name: str = "",
                 names: Sequence[str] | None = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise GroupValidationError(f"table must be a non-empty square array, got shape {arr.shape}")
        arr.setflags(write=False)
        self.table = arr
        self.order = int(arr.shape[0])
        self.name = name or f"G{self.order}"
        if names is None:
            names = [str(i) for i in range(self.order)]
        if len(names) != self.order:
            raise GroupValidationError(f"expected {self.order} element names, got {len(names)}")
        self.names: tuple[str, ...] = tuple(str(s) for s in names)
        # plain tuples are much faster than numpy scalars in the hot loops
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in arr.tolist())
        self.inverses: tuple[int, ...] = tuple(row.index(0) for row in self.rows)
        self.element_orders: tuple[int, ...] = tuple(self._order_of(g) for g in range(self.order))

    def _order_of(self, g: int) -> int:
        x, d = g, 1
        while x != 0:
            x = self.rows[x][g]
            d += 1
            if d > self.order:
                raise GroupValidationError(f"element {g} has no finite order within the table")
        return d

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def pow(self, g: int, e: int) -> int:
        e %= self.element_orders[g]
        x = 0
        for _ in range(e):
            x = self.rows[x][g]
        return x

    def conjugate(self, g: int, x: int) -> int:
        """Return ``x^-1 g x``."""
        return self.rows[self.rows[self.inverses[x]][g]][x]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{self.name} has no element named {name!r}") from None

    def set_of(self, elements: Iterable[int | str]) -> ElementSet:
        """Build an :class:`ElementSet` from indices or element names."""
        idx = [self.index(e) if isinstance(e, str) else int(e) for e in elements]
        return ElementSet.from_indices(idx, self.order)

    @property
    def elements(self) -> ElementSet:
        return ElementSet.full(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def center(self) -> ElementSet:
        commuting = np.all(self.table == self.table.T, axis=1)
        return ElementSet.from_indices(np.flatnonzero(commuting).tolist(), self.order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __reduce__(self):
        return (FiniteGroup, (self.table.tolist(), self.name, list(self.names)))


def element_order(G: FiniteGroup, g: int) -> int:
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range for {G.name} of order {G.order}")
    return G.element_orders[g]


def involution_set(G: FiniteGroup, S: ElementSet | None = None) -> ElementSet:
    """Elements ``g`` of ``S`` with ``g*g = e`` and ``g != e``."""
    if S is None:
        S = G.elements
    return ElementSet.from_indices((g for g in S if g != 0 and G.rows[g][g] == 0), G.order)


def generated_subgroup(G: FiniteGroup, X: Iterable[int] | ElementSet) -> ElementSet:
    """Closure of ``X`` and the identity under the group product."""
    gens = [g for g in set(X) if g != 0]
    rows = G.rows
    seen = 1
    queue = [0]
    for x in queue:
        row = rows[x]
        for g in gens:
            y = row[g]
            if not seen >> y & 1:
                seen |= 1 << y
                queue.append(y)
    return ElementSet(seen, G.order)


def is_subgroup(G: FiniteGroup, S: ElementSet) -> bool:
    if 0 not in S:
        return False
    members = list(S)
    return all(G.rows[a][b] in S for a in members for b in members)


# -- validation ----------------------------------------------------------------

def validate_table(table: np.ndarray) -> None:
    """Raise :class:`GroupValidationError` unless ``table`` is a group with identity 0."""
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n):
        raise GroupValidationError(f"table must be square, got shape {table.shape}")
    if table.min() < 0 or table.max() >= n:
        raise GroupValidationError("table entries must be element indices in 0..n-1")
    ar = np.arange(n)
    if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
        raise GroupValidationError("index 0 is not a two-sided identity")
    # the identity appears exactly once per row and column, with two-sided inverses
    is_e = table == 0
    if not (np.all(is_e.sum(axis=1) == 1) and np.all(is_e.sum(axis=0) == 1)):
        raise GroupValidationError("missing inverses: identity does not occur exactly once per row and column")
    inv = np.argmax(is_e, axis=1)
    if not np.all(table[inv, ar] == 0):
        raise GroupValidationError("missing inverses: some left and right inverses differ")
    left = table[table]                       # left[a, b, c] = (a*b)*c
    right = table[ar[:, None, None], table[None, :, :]]  # right[a, b, c] = a*(b*c)
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        raise GroupValidationError(f"operation is not associative at ({a}, {b}, {c})")


@dataclass(frozen=True)
class LoadReport:
    """What happened while ingesting an external table.

    ``relabeling[new] = old`` gives the original index of each element;
    ``relabeled`` is false when the identity already sat at index 0.
    """

    source: str
    relabeled: bool
    relabeling: tuple[int, ...]
    original_identity: int = 0


def group_from_table(table: Sequence[Sequence[int]] | np.ndarray, names: Sequence[str] | None = None,
                     name: str = "", source: str = "<table>") -> tuple[FiniteGroup, LoadReport]:
    """Validate a raw table and return the group with its identity moved to index 0."""
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise GroupValidationError(f"table is not a rectangular integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupValidationError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise GroupValidationError("table entries must be element indices in 0..n-1")
    ar = np.arange(n)
    candidates = [e for e in range(n) if np.array_equal(arr[e], ar) and np.array_equal(arr[:, e], ar)]
    if not candidates:
        raise GroupValidationError("table has no two-sided identity")
    e = candidates[0]
    perm = list(range(n))  # perm[new] = old
    perm[0], perm[e] = perm[e], perm[0]
    if e != 0:
        old_to_new = np.empty(n, dtype=np.int64)
        old_to_new[perm] = ar
        arr = old_to_new[arr[np.ix_(perm, perm)]]
        if names is not None:
            names = [names[p] for p in perm]
    validate_table(arr)
    report = LoadReport(source=source, relabeled=e != 0, relabeling=tuple(perm), original_identity=e)
    return FiniteGroup(arr, name=name, names=names), report


def load_group_file(path: str | Path) -> tuple[FiniteGroup, LoadReport]:
    """Load a JSON group table ``{"n": .., "table": [[..]], "names": [..]}``."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise GroupSpecError(f"cannot read group file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f"group file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "table" not in data:
        raise GroupSpecError(f"group file {path} must be an object with keys 'n' and 'table'")
    n = data["n"]
    table = data["table"]
    if not isinstance(n, int) or n < 1:
        raise GroupValidationError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(table, list) or len(table) != n or any(not isinstance(r, list) or len(r) != n for r in table):
        raise GroupValidationError(f"'table' must be a {n}x{n} array")
    names = data.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise GroupValidationError(f"'names' must be a list of {n} strings")
    return group_from_table(table, names=names, name=f"file:{path}", source=str(path))


# -- builders --------------------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"cyclic group order must be positive, got {n}")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, name=f"Z{n}")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product with elements ordered lexicographically by coordinates."""
    if not factors:
        raise GroupSpecError("direct product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    coords = list(product(*(range(f.order) for f in factors)))
    index = {c: i for i, c in enumerate(coords)}
    table = [[index[tuple(f.rows[a][b] for f, a, b in zip(factors, x, y))] for y in coords] for x in coords]
    names = ["(" + ",".join(f.names[a] for f, a in zip(factors, c)) + ")" for c in coords]
    return FiniteGroup(table, name="x".join(f.name for f in factors), names=names)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order ``2n``.

    Index ``a`` is the rotation ``r^a`` and index ``n + a`` is ``s r^a``.
    """
    if n < 1:
        raise GroupSpecError(f"dihedral parameter must be positive, got {n}")

    def mul(x: int, y: int) -> int:
        (fx, a), (fy, b) = divmod(x, n), divmod(y, n)
        # r^a s = s r^-a
        c = (b - a) % n if fy else (a + b) % n
        return ((fx + fy) % 2) * n + c

    def label(x: int) -> str:
        f, a = divmod(x, n)
        rot = "" if a == 0 else ("r" if a == 1 else f"r{a}")
        if f:
            return "s" + rot
        return rot or "e"

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup(table, name=f"D{n}", names=[label(x) for x in range(2 * n)])


def quaternion_group() -> FiniteGroup:
    """Q8 with elements ordered ``1, -1, i, -i, j, -j, k, -k``."""
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit index)
    prod = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = prod[u1, u2]
            row.append(index[(s1 * s2 * s, u)])
        table.append(row)
    names = [("" if s > 0 else "-") + units[u] for s, u in elems]
    return FiniteGroup(table, name="Q8", names=names)


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        sep = "" if len(p) < 10 else " "
        out.append("(" + sep.join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def _permutation_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    perms = sorted(perms)  # identity is lexicographically first
    index = {p: i for i, p in enumerate(perms)}
    # (a*b)(x) = a(b(x)): apply b first
    table = [[index[tuple(a[b[x]] for x in range(len(a)))] for b in perms] for a in perms]
    return FiniteGroup(table, name=name, names=[_cycle_notation(p) for p in perms])


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupSpecError(f"symmetric groups are provided for 1 <= n <= 5, got {n}")
    return _permutation_group(list(permutations(range(n))), f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupSpecError(f"alternating groups are provided for 1 <= n <= 5, got {n}")
    return _permutation_group([p for p in permutations(range(n)) if _is_even(p)], f"A{n}")


_FACTOR = re.compile(r"^([ZDSA])(\d+)$|^(Q8)$")


def _build_factor(token: str) -> FiniteGroup:
    match = _FACTOR.match(token)
    if not match:
        raise GroupSpecError(f"unrecognised group factor {token!r}; expected Z<n>, D<n>, Q8, S<n> or A<n>")
    if match.group(3):
        return quaternion_group()
    kind, n = match.group(1), int(match.group(2))
    builder = {"Z": cyclic_group, "D": dihedral_group, "S": symmetric_group, "A": alternating_group}[kind]
    return builder(n)


def build_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Grammar: ``Z<n>``, ``D<n>`` (dihedral of order 2n), ``Q8``, ``S<n>`` and
    ``A<n>`` for ``n <= 5``, direct products joined by ``x`` such as
    ``Z2xZ4``, or ``file:<path>`` for a JSON table.

    >>> build_group("Z6").element_orders
    (1, 6, 3, 2, 3, 6)
    """
    if not isinstance(spec, str):
        raise GroupSpecError(f"group spec must be a string, got {type(spec).__name__}")
    spec = spec.strip()
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        if not path:
            raise GroupSpecError("file: spec needs a path")
        return load_group_file(path)[0]
    tokens = re.split(r"[x×]", spec)
    if not spec or any(t == "" for t in tokens):
        raise GroupSpecError(f"malformed group spec {spec!r}")
    return direct_product(*(_build_factor(t) for t in tokens))

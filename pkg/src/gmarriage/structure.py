"""Structural analysis of small permutation groups.

Orbits, transitive constituents, block systems (exhaustive pair-seeded
refinement), minimal bases, and the product-of-symmetric-groups test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .groups import PermGroup, generate
from .perm import Permutation


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]

    @property
    def is_transitive(self) -> bool:
        return len(self.orbits) == 1


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


@dataclass(frozen=True)
class BaseReport:
    base: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.base)


def orbits(G: PermGroup) -> OrbitPartition:
    """Connected components of the generator graph on [n]."""
    n = G.degree
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for g in G.generators:
        for i in range(1, n + 1):
            union(i, g(i))
    cells: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        cells.setdefault(find(i), []).append(i)
    parts = sorted(tuple(sorted(c)) for c in cells.values())
    return OrbitPartition(tuple(parts))


def is_transitive(G: PermGroup) -> bool:
    return orbits(G).is_transitive


def transitive_constituent(G: PermGroup, orbit: tuple[int, ...]) -> PermGroup:
    """The action of G on one of its orbits, relabeled to [len(orbit)]."""
    orb = tuple(sorted(orbit))
    if orb not in orbits(G).orbits:
        raise ValueError(f"{orbit} is not an orbit of the group")
    index = {p: i for i, p in enumerate(orb, start=1)}
    m = len(orb)
    gens = []
    seen = set()
    for g in G.generators:
        restricted = Permutation(index[g(p)] for p in orb)
        if restricted.images not in seen:
            seen.add(restricted.images)
            gens.append(restricted)
    return generate(m, gens, max_order=math.factorial(m))


def _finest_invariant_partition(G: PermGroup, a: int, b: int) -> list[frozenset[int]]:
    """Finest partition of [n] with a, b together whose cells map to cells."""
    n = G.degree
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            for x in range(1, n + 1):
                for y in range(x + 1, n + 1):
                    if find(x) == find(y) and union(g(x), g(y)):
                        changed = True
    cells: dict[int, set[int]] = {}
    for i in range(1, n + 1):
        cells.setdefault(find(i), set()).add(i)
    return [frozenset(c) for c in cells.values()]


def minimal_blocks(G: PermGroup) -> list[BlockSystem]:
    """All nontrivial block systems arising as pair-seeded finest
    invariant partitions (transitive G only)."""
    if not is_transitive(G):
        raise ValueError("block systems are defined for transitive groups")
    n = G.degree
    found: set[tuple[tuple[int, ...], ...]] = set()
    for a, b in itertools.combinations(range(1, n + 1), 2):
        cells = _finest_invariant_partition(G, a, b)
        sizes = {len(c) for c in cells}
        if len(sizes) != 1:
            continue
        size = sizes.pop()
        if size in (1, n):
            continue
        found.add(tuple(sorted(tuple(sorted(c)) for c in cells)))
    return [BlockSystem(blocks) for blocks in sorted(found)]


def is_primitive(G: PermGroup) -> bool:
    return not minimal_blocks(G)


def minimal_base(G: PermGroup) -> BaseReport:
    """Lexicographically least point set of minimal size whose pointwise
    stabilizer is trivial.  The trivial group has the empty base."""
    n = G.degree
    for size in range(n + 1):
        for cand in itertools.combinations(range(1, n + 1), size):
            stab_trivial = True
            for g in G:
                if g.is_identity():
                    continue
                if all(g.fixes(p) for p in cand):
                    stab_trivial = False
                    break
            if stab_trivial:
                return BaseReport(cand)
    raise AssertionError("unreachable: [n] is always a base")


def symmetric_product_orbits(G: PermGroup) -> OrbitPartition | None:
    """The orbit decomposition if G is the direct product of the full
    symmetric groups on its orbits, else None.

    G always embeds in the product of its constituents, so order
    equality |G| = prod |orbit|! settles it.
    """
    part = orbits(G)
    expected = math.prod(math.factorial(len(o)) for o in part.orbits)
    return part if G.order == expected else None


def is_product_of_symmetrics(G: PermGroup) -> bool:
    return symmetric_product_orbits(G) is not None

"""Permutation groups as explicit, canonically sorted element lists.

Everything here is desk scale: groups are materialized in full (order
cap 10,080 by default), membership is a binary search over the
lexicographically sorted image tuples, and the subgroup lattice is
found by closure search.  No stabilizer chains.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import MAX_DEGREE, Permutation

DEFAULT_ORDER_CAP = 10_080
SUBGROUP_ENUM_CAP = 120

GROUP_KINDS = ("symmetric", "alternating", "cyclic", "dihedral", "trivial",
               "generators", "product")


class PermGroup:
    """A finite permutation group on [n] with an explicit element list.

    Elements are kept sorted by image tuple (the identity sorts first),
    which fixes the canonical scan order used by every solver and
    report in the package.
    """

    __slots__ = ("degree", "generators", "elements", "_keys")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Iterable[Permutation]):
        elems = sorted(set(elements))
        if not elems or not elems[0].is_identity():
            raise ValueError("group must contain the identity")
        for g in elems:
            if g.degree != degree:
                raise ValueError("element degree mismatch")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "_keys", tuple(g.images for g in elems))

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {g.degree} vs {self.degree}")
        i = bisect_left(self._keys, g.images)
        return i < len(self._keys) and self._keys[i] == g.images

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._keys == other._keys)

    def __hash__(self) -> int:
        return hash((self.degree, self._keys))

    def __reduce__(self):
        return (PermGroup, (self.degree, self.generators, self.elements))

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "id"
        return f"<PermGroup degree={self.degree} order={self.order} gens=[{gens}]>"

    def image_tuples(self) -> tuple[tuple[int, ...], ...]:
        """All elements as raw image tuples, in canonical order."""
        return self._keys


def generate(n: int, gens: Sequence[Permutation],
             max_order: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """Close ``gens`` under composition (inverses come for free in a
    finite group) and return the generated group."""
    for g in gens:
        if g.degree != n:
            raise ValueError(f"generator degree {g.degree} != {n}")
    ident = Permutation.identity(n)
    elems = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod.images not in elems:
                    elems[prod.images] = prod
                    nxt.append(prod)
                    if len(elems) > max_order:
                        raise ValueError(
                            f"group order exceeds cap {max_order}")
        frontier = nxt
    return PermGroup(n, gens, elems.values())


def _check_degree(n: int, low: int = 1):
    if not low <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in {low}..{MAX_DEGREE}, got {n}")


def trivial(n: int) -> PermGroup:
    _check_degree(n)
    return PermGroup(n, (), [Permutation.identity(n)])


def symmetric(n: int) -> PermGroup:
    _check_degree(n)
    elems = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    gens: list[Permutation] = []
    if n >= 2:
        gens.append(Permutation.from_cycles("(1 2)", n))
    if n >= 3:
        cyc = "(" + " ".join(map(str, range(1, n + 1))) + ")"
        gens.append(Permutation.from_cycles(cyc, n))
    return PermGroup(n, gens, elems)


def alternating(n: int) -> PermGroup:
    _check_degree(n)
    elems = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    evens = [g for g in elems if g.is_even()]
    gens: list[Permutation] = []
    if n >= 3:
        gens.append(Permutation.from_cycles("(1 2 3)", n))
    if n >= 4:
        if n % 2 == 1:
            cyc = "(" + " ".join(map(str, range(1, n + 1))) + ")"
        else:
            cyc = "(" + " ".join(map(str, range(2, n + 1))) + ")"
        gens.append(Permutation.from_cycles(cyc, n))
    return PermGroup(n, gens, evens)


def cyclic(n: int) -> PermGroup:
    """The group generated by the full cycle (1 2 ... n)."""
    _check_degree(n)
    if n == 1:
        return trivial(1)
    t = Permutation(tuple(range(2, n + 1)) + (1,))
    elems = [Permutation.identity(n)]
    g = t
    while not g.is_identity():
        elems.append(g)
        g = t * g
    return PermGroup(n, (t,), elems)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular n-gon on vertices 1..n, order 2n (n >= 3)."""
    _check_degree(n, low=3)
    rot = Permutation(tuple(range(2, n + 1)) + (1,))
    refl = Permutation([1] + [n + 2 - i for i in range(2, n + 1)])
    elems = []
    g = Permutation.identity(n)
    for _ in range(n):
        elems.append(g)
        elems.append(g * refl)
        g = rot * g
    if len(set(elems)) != 2 * n:
        raise ValueError(f"dihedral degenerates at n={n}")
    return PermGroup(n, (rot, refl), elems)


def direct_product(factors: Sequence[tuple[PermGroup, Sequence[int]]],
                   degree: int | None = None) -> PermGroup:
    """Internal direct product of relabeled factors on disjoint domains.

    ``factors`` pairs each group with the ordered points it acts on;
    factor point j goes to ``domain[j-1]``.  Points of the ambient
    degree outside every domain are fixed by all elements.
    """
    covered: set[int] = set()
    for grp, domain in factors:
        dom = list(domain)
        if len(dom) != len(set(dom)):
            raise ValueError(f"domain {dom} has repeats")
        if grp.degree != len(dom):
            raise ValueError(
                f"factor degree {grp.degree} != domain size {len(dom)}")
        if covered & set(dom):
            raise ValueError("overlapping factor domains")
        covered |= set(dom)
    n = degree if degree is not None else (max(covered) if covered else 1)
    _check_degree(n)
    if covered - set(range(1, n + 1)):
        raise ValueError(f"domain points outside 1..{n}")

    def embed(grp_elem: Permutation, domain: Sequence[int],
              base: list[int]) -> list[int]:
        out = list(base)
        for j, image in enumerate(grp_elem.images, start=1):
            out[domain[j - 1] - 1] = domain[image - 1]
        return out

    ident = list(range(1, n + 1))
    images_list = [ident]
    for grp, domain in factors:
        images_list = [
            embed(e, domain, base) for base in images_list for e in grp
        ]
    elems = [Permutation(imgs) for imgs in images_list]
    gens = []
    for grp, domain in factors:
        for e in grp.generators:
            gens.append(Permutation(embed(e, domain, ident)))
    return PermGroup(n, gens, elems)


def contains(G: PermGroup, g: Permutation) -> bool:
    return g in G


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    """Every subgroup of G, by closure-lattice search.

    Seeds with all cyclic subgroups, then repeatedly extends each known
    subgroup by one outside element and closes, until no new subgroup
    appears.  Output is sorted by (order, element list) and deduplicated
    by element set.
    """
    if G.order > SUBGROUP_ENUM_CAP:
        raise ValueError(
            f"order {G.order} exceeds subgroup enumeration cap "
            f"{SUBGROUP_ENUM_CAP}")
    n = G.degree
    by_key: dict[tuple, tuple[Permutation, ...]] = {}
    gen_sets: dict[tuple, tuple[Permutation, ...]] = {}
    worklist: list[tuple] = []

    def add(gens: tuple[Permutation, ...]):
        elems = generate(n, list(gens), max_order=G.order).elements
        key = tuple(e.images for e in elems)
        if key not in by_key:
            by_key[key] = elems
            gen_sets[key] = gens
            worklist.append(key)

    add(())
    for g in G:
        if not g.is_identity():
            add((g,))
    while worklist:
        key = worklist.pop()
        member = set(by_key[key])
        gens = gen_sets[key]
        for g in G:
            if g not in member:
                add(gens + (g,))
    subs = [
        PermGroup(n, gen_sets[key], elems) for key, elems in by_key.items()
    ]
    subs.sort(key=lambda H: (H.order, H.image_tuples()))
    return subs


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of a group, JSON round-trippable."""

    kind: str
    n: int
    generators: tuple[str, ...] = ()
    factors: tuple[tuple["GroupSpec", tuple[int, ...]], ...] = field(
        default=())

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "generators" and not self.generators:
            raise ValueError("kind 'generators' requires generator strings")
        if self.kind == "product" and not self.factors:
            raise ValueError("kind 'product' requires factors")

    def realize(self) -> PermGroup:
        kind, n = self.kind, self.n
        if kind == "symmetric":
            return symmetric(n)
        if kind == "alternating":
            return alternating(n)
        if kind == "cyclic":
            return cyclic(n)
        if kind == "dihedral":
            return dihedral(n)
        if kind == "trivial":
            return trivial(n)
        if kind == "generators":
            gens = [Permutation.from_cycles(s, n) for s in self.generators]
            return generate(n, gens)
        factors = [(spec.realize(), domain) for spec, domain in self.factors]
        return direct_product(factors, degree=n)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "n": self.n}
        if self.generators:
            out["generators"] = list(self.generators)
        if self.factors:
            out["factors"] = [{
                "spec": spec.to_json(),
                "domain": list(domain)
            } for spec, domain in self.factors]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> GroupSpec:
        if not isinstance(obj, dict):
            raise ValueError(f"group spec must be an object, got {type(obj)}")
        try:
            kind = obj["kind"]
            n = obj["n"]
        except KeyError as exc:
            raise ValueError(f"group spec missing field {exc}") from exc
        if not isinstance(n, int):
            raise ValueError(f"group spec field 'n' must be int, got {n!r}")
        gens = tuple(obj.get("generators", ()))
        factors = tuple(
            (cls.from_json(f["spec"]), tuple(f["domain"]))
            for f in obj.get("factors", ()))
        return cls(kind=kind, n=n, generators=gens, factors=factors)

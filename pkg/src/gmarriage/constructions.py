"""Explicit counterexample constructions.

Each constructor returns a (group, system) pair whose claim - the
orbit condition holds yet no marriage exists - is re-verified by the
solver modules before the object is handed back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conditions import (VERDICT_SATISFIED, check_1_orbit,
                         check_k_orbit_exact)
from .groups import (GroupSpec, PermGroup, alternating, cyclic,
                     direct_product, symmetric)
from .marriage import SetSystem, find_marriage, is_valid_marriage
from .perm import Permutation
from .structure import (BlockSystem, is_primitive, is_transitive,
                        minimal_base, minimal_blocks, orbits,
                        transitive_constituent)

CLAIM_ORBIT = "orbit_holds_no_marriage"
CLAIM_2ORBIT = "two_orbit_holds_no_marriage"


@dataclass(frozen=True)
class Counterexample:
    group: PermGroup
    system: SetSystem
    claim: str
    provenance: str
    group_spec: GroupSpec | None = None


def _validate(ce: Counterexample) -> Counterexample:
    if check_1_orbit(ce.group, ce.system).verdict != VERDICT_SATISFIED:
        raise AssertionError(
            f"{ce.provenance}: 1-orbit condition unexpectedly fails")
    if find_marriage(ce.group, ce.system).found:
        raise AssertionError(
            f"{ce.provenance}: a marriage unexpectedly exists")
    if ce.claim == CLAIM_2ORBIT:
        report = check_k_orbit_exact(ce.group, ce.system, 2)
        if report.verdict != VERDICT_SATISFIED:
            raise AssertionError(
                f"{ce.provenance}: 2-orbit condition unexpectedly fails")
    return ce


def keevash_example() -> Counterexample:
    """Degree 3: the cyclic group with V = ({2}, {1}, {3}) satisfies the
    orbit condition but has no marriage."""
    G = cyclic(3)
    V = SetSystem.from_sets(3, [[2], [1], [3]])
    return _validate(
        Counterexample(G, V, CLAIM_ORBIT, "keevash", GroupSpec("cyclic", 3)))


def prop_1_5_example() -> Counterexample:
    """Degree 3: Alt(3) with V = ({1,3}, {2,3}, {1,2}) satisfies even the
    2-orbit condition but has no marriage."""
    G = alternating(3)
    V = SetSystem.from_sets(3, [[1, 3], [2, 3], [1, 2]])
    return _validate(
        Counterexample(G, V, CLAIM_2ORBIT, "prop-1-5",
                       GroupSpec("alternating", 3)))


def imprimitive_counterexample(G: PermGroup,
                               blocks: BlockSystem) -> Counterexample:
    """Three-point cyclic constraint across a block boundary.

    x, y are the two least points of the least block and z the least
    point of the next block; V_x = {y,z}, V_y = {x,z}, V_z = {x,y},
    everything else unconstrained.  Any valid g would 3-cycle {x,y,z}
    and break the block system.
    """
    if not is_transitive(G):
        raise ValueError("group must be transitive")
    if is_primitive(G):
        raise ValueError("group must be imprimitive")
    cells = sorted(tuple(sorted(c)) for c in blocks.blocks)
    if len(cells[0]) < 2:
        raise ValueError("first block too small to pick two points")
    x, y = cells[0][0], cells[0][1]
    z = cells[1][0]
    n = G.degree
    sets = [list(range(1, n + 1)) for _ in range(n)]
    sets[x - 1] = [y, z]
    sets[y - 1] = [x, z]
    sets[z - 1] = [x, y]
    V = SetSystem.from_sets(n, sets)
    return _validate(
        Counterexample(G, V, CLAIM_ORBIT,
                       f"imprimitive(x={x},y={y},z={z})"))


def base_counterexample(G: PermGroup) -> Counterexample:
    """Pin a minimal base: V_b = {b, spare} on base points forces any
    valid element to fix the base, hence be the identity, which the
    spare position then rejects."""
    if not is_transitive(G):
        raise ValueError("group must be transitive")
    if not is_primitive(G):
        raise ValueError("group must be primitive")
    n = G.degree
    if G.order == math.factorial(n):
        raise ValueError("the full symmetric group is excluded")
    base = minimal_base(G).base
    k = len(base)
    if k > n - 2:
        raise AssertionError(
            f"b(G) = {k} > n-2 contradicts the primitive base bound")
    spare = min(p for p in range(1, n + 1) if p not in base)
    base_set = set(base)
    sets = []
    for i in range(1, n + 1):
        if i in base_set:
            sets.append([i, spare])
        elif i == spare:
            sets.append(
                [p for p in range(1, n + 1)
                 if p not in base_set and p != spare])
        else:
            sets.append([p for p in range(1, n + 1) if p not in base_set])
    V = SetSystem.from_sets(n, sets)
    return _validate(
        Counterexample(G, V, CLAIM_ORBIT,
                       f"base(B={list(base)},spare={spare})"))


def forced_fix_holds(ce: Counterexample) -> bool:
    """Forcing step of the base construction: every group element that
    satisfies the system at all positions except the spare one fixes
    each base point.  (The full system then pins g = id, which the
    spare position rejects.)"""
    base = minimal_base(ce.group).base
    spare = min(p for p in range(1, ce.group.degree + 1) if p not in base)
    masks = ce.system.masks
    n = ce.system.n
    for g in ce.group:
        key = g.images
        if all(masks[j] >> (key[j] - 1) & 1 for j in range(n)
               if j != spare - 1):
            if not all(key[b - 1] == b for b in base):
                return False
    return True


def subdirect_counterexample(G: PermGroup,
                             h: Permutation | None = None) -> Counterexample:
    """Force equality with a product element h outside G.

    Every transitive constituent of G must be the full symmetric group
    on its orbit.  With V'_j = {h(j)} + (points outside j's orbit), any
    valid g in G is forced to agree with h everywhere - impossible.
    When h is omitted the canonically least element of the product
    minus G is used.
    """
    part = orbits(G)
    n = G.degree
    for orbit in part.orbits:
        constituent = transitive_constituent(G, orbit)
        if constituent.order != math.factorial(len(orbit)):
            raise ValueError(
                f"constituent on {orbit} is not the full symmetric group")
    product = direct_product([(symmetric(len(o)), o) for o in part.orbits],
                             degree=n)
    if h is None:
        h = next((g for g in product if g not in G), None)
        if h is None:
            raise ValueError("G is the whole product; no h exists")
    else:
        if h not in product:
            raise ValueError("h must preserve every orbit of G")
        if h in G:
            raise ValueError("h must lie outside G")
    orbit_of = {p: set(orbit) for orbit in part.orbits for p in orbit}
    sets = []
    for j in range(1, n + 1):
        outside = [p for p in range(1, n + 1) if p not in orbit_of[j]]
        sets.append(sorted([h(j)] + outside))
    V = SetSystem.from_sets(n, sets)
    return _validate(
        Counterexample(G, V, CLAIM_ORBIT,
                       f"subdirect(h={h.cycle_string()})"))


def subdirect_h(ce: Counterexample) -> Permutation:
    """Recover h from a subdirect counterexample: h(j) is the unique
    allowed point of position j inside j's own orbit."""
    part = orbits(ce.group)
    n = ce.group.degree
    images = [0] * n
    for orbit in part.orbits:
        omega = set(orbit)
        for j in orbit:
            inside = [p for p in ce.system.sets()[j - 1] if p in omega]
            if len(inside) != 1:
                raise ValueError("not a subdirect-construction system")
            images[j - 1] = inside[0]
    return Permutation(images)


def forcing_holds(ce: Counterexample) -> bool:
    """Forcing step of the subdirect construction: within the full
    product of symmetric groups on the orbits, h is the only element
    satisfying the system."""
    h = subdirect_h(ce)
    part = orbits(ce.group)
    product = direct_product(
        [(symmetric(len(o)), o) for o in part.orbits],
        degree=ce.group.degree)
    satisfiers = [g for g in product if is_valid_marriage(g, ce.system)]
    return satisfiers == [h]


def lifted_counterexample(G: PermGroup) -> Counterexample:
    """Counterexample for an intransitive group with a non-symmetric
    transitive constituent: build the transitive-case counterexample on
    that orbit and pad every other position with [n]."""
    part = orbits(G)
    target = None
    for orbit in part.orbits:
        constituent = transitive_constituent(G, orbit)
        if constituent.order != math.factorial(len(orbit)):
            target = (orbit, constituent)
            break
    if target is None:
        raise ValueError("every constituent is symmetric; nothing to lift")
    orbit, constituent = target
    if is_primitive(constituent):
        inner = base_counterexample(constituent)
    else:
        inner = imprimitive_counterexample(constituent,
                                           minimal_blocks(constituent)[0])
    n = G.degree
    labels = sorted(orbit)
    sets = [list(range(1, n + 1)) for _ in range(n)]
    for local_pos, j in enumerate(labels):
        sets[j - 1] = [labels[q - 1] for q in inner.system.sets()[local_pos]]
    V = SetSystem.from_sets(n, sets)
    return _validate(
        Counterexample(G, V, CLAIM_ORBIT,
                       f"lifted(orbit={list(orbit)};{inner.provenance})"))

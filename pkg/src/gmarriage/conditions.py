"""Orbit conditions on set systems.

The 1-orbit condition asks, for every nonempty Y subset of [n], for a
group element whose image of Y lands inside the union of the V_y.  The
k-orbit condition lifts this to tuple sets Y inside [n]^k, where a
tuple y is covered by the box V_y' = V_{y'_1} x ... x V_{y'_k}.

Exact checking enumerates every nonempty Y and is only feasible for
n^k <= 9.  Beyond that, a bounded search over a structured pool of
candidate tuples (constants, deleted-index tuples, cyclic shifts - the
families the failure analysis actually needs) looks for small
unsatisfiable Y.  A hit is a sound certificate of failure; exhausting
the bound is only "satisfied up to the bound", never full satisfaction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import PermGroup
from .marriage import SetSystem, find_marriage
from .perm import Permutation

EXACT_SPACE_CAP = 9

VERDICT_SATISFIED = "satisfied"
VERDICT_VIOLATED = "violated"
VERDICT_BOUNDED = "satisfied_up_to_bound"


@dataclass(frozen=True)
class TuplePool:
    arity: int
    tuples: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Witness:
    """A nonempty tuple set Y that no group element satisfies."""

    arity: int
    tuples: tuple[tuple[int, ...], ...]
    kind: str  # "exact" | "bounded"


@dataclass(frozen=True)
class OrbitCheckReport:
    verdict: str
    witness: Witness | None = None
    bound: int | None = None


@dataclass(frozen=True)
class ResidualStructure:
    """The forced shape of a system that satisfies the (n-1)-orbit
    condition without admitting a marriage: V_i = [n] - {a_i} with a a
    bijection, plus per-position elements g_i realizing a_i = g_i(i)
    while satisfying every other position."""

    g_list: tuple[Permutation, ...]
    a_list: tuple[int, ...]


def _tuple_satisfied(g_images: tuple[int, ...], y: tuple[int, ...],
                     Y: tuple[tuple[int, ...], ...],
                     masks: tuple[int, ...]) -> bool:
    """Does the image of y under g land in the box of some y' in Y?"""
    img = tuple(g_images[p - 1] for p in y)
    for y_prime in Y:
        if all(masks[q - 1] >> (p - 1) & 1 for p, q in zip(img, y_prime)):
            return True
    return False


def tuple_set_satisfiable(G: PermGroup, V: SetSystem,
                          Y: tuple[tuple[int, ...], ...]) -> bool:
    """Is there g in G with every tuple of Y covered by the box union?"""
    masks = V.masks
    for key in G.image_tuples():
        if all(_tuple_satisfied(key, y, Y, masks) for y in Y):
            return True
    return False


def make_witness(G: PermGroup, V: SetSystem, arity: int,
                 tuples: tuple[tuple[int, ...], ...], kind: str) -> Witness:
    """Build a Witness, re-validating it against the full element list."""
    if not tuples:
        raise ValueError("witness must be nonempty")
    if tuple_set_satisfiable(G, V, tuples):
        raise ValueError(f"tuple set {tuples} is satisfiable, not a witness")
    return Witness(arity, tuples, kind)


def check_1_orbit(G: PermGroup, V: SetSystem) -> OrbitCheckReport:
    """Exhaustive 1-orbit check over all 2^n - 1 nonempty Y, reporting
    the first violated Y in size-then-lex order."""
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    n = V.n
    masks = V.masks
    union = [0] * (1 << n)
    for y_mask in range(1, 1 << n):
        low = y_mask & -y_mask
        union[y_mask] = union[y_mask ^ low] | masks[low.bit_length() - 1]
    keys = G.image_tuples()
    img = [[0] * (1 << n) for _ in keys]
    for gi, key in enumerate(keys):
        row = img[gi]
        for y_mask in range(1, 1 << n):
            low = y_mask & -y_mask
            row[y_mask] = row[y_mask ^ low] | (
                1 << (key[low.bit_length() - 1] - 1))
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            y_mask = 0
            for p in combo:
                y_mask |= 1 << (p - 1)
            target = union[y_mask]
            if not any(img[gi][y_mask] & ~target == 0
                       for gi in range(len(keys))):
                witness = make_witness(G, V, 1,
                                       tuple((p,) for p in combo), "exact")
                return OrbitCheckReport(VERDICT_VIOLATED, witness)
    return OrbitCheckReport(VERDICT_SATISFIED)


def check_k_orbit_exact(G: PermGroup, V: SetSystem,
                        k: int) -> OrbitCheckReport:
    """Exhaustive k-orbit check over every nonempty Y in [n]^k.

    Doubly exponential; refuses anything beyond n^k <= 9.
    """
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    n = V.n
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    space = n ** k
    if space > EXACT_SPACE_CAP:
        raise ValueError(
            f"n^k = {space} exceeds exact-check cap {EXACT_SPACE_CAP}")
    all_tuples = list(itertools.product(range(1, n + 1), repeat=k))
    masks = V.masks
    keys = G.image_tuples()
    # ok[gi][yi] = bitmask over candidate y' indices whose box holds y^g
    ok: list[list[int]] = []
    for key in keys:
        row = []
        for y in all_tuples:
            img = tuple(key[p - 1] for p in y)
            bits = 0
            for yj, y_prime in enumerate(all_tuples):
                if all(masks[q - 1] >> (p - 1) & 1
                       for p, q in zip(img, y_prime)):
                    bits |= 1 << yj
            row.append(bits)
        ok.append(row)
    indices = list(range(space))
    for size in range(1, space + 1):
        for combo in itertools.combinations(indices, size):
            y_bits = 0
            for yi in combo:
                y_bits |= 1 << yi
            if not any(
                    all(ok[gi][yi] & y_bits for yi in combo)
                    for gi in range(len(keys))):
                tuples = tuple(all_tuples[yi] for yi in combo)
                witness = make_witness(G, V, k, tuples, "exact")
                return OrbitCheckReport(VERDICT_VIOLATED, witness)
    return OrbitCheckReport(VERDICT_SATISFIED)


def constant_tuple(j: int, k: int) -> tuple[int, ...]:
    return (j,) * k


def deleted_tuple(i: int, n: int) -> tuple[int, ...]:
    """(1, ..., i-1, i+1, ..., n): every point except i, ascending."""
    return tuple(p for p in range(1, n + 1) if p != i)


def cyclic_tuple(t: int, n: int) -> tuple[int, ...]:
    """(t, t+1, ..., t-2): n-1 consecutive points mod n starting at t."""
    return tuple((t - 1 + j) % n + 1 for j in range(n - 1))


def structured_pool(n: int, arity: int) -> TuplePool:
    """Candidate witness tuples: all constants, plus (at arity n-1) the
    deleted-index and cyclic-shift families, deduplicated in that order."""
    if not 1 <= arity <= n:
        raise ValueError(f"arity must be in 1..{n}, got {arity}")
    pool: list[tuple[int, ...]] = [
        constant_tuple(j, arity) for j in range(1, n + 1)
    ]
    if arity == n - 1:
        pool.extend(deleted_tuple(i, n) for i in range(1, n + 1))
        pool.extend(cyclic_tuple(t, n) for t in range(1, n + 1))
    seen: set[tuple[int, ...]] = set()
    unique = []
    for t in pool:
        if t not in seen:
            seen.add(t)
            unique.append(t)
    return TuplePool(arity, tuple(unique))


def full_pool(n: int, arity: int) -> TuplePool:
    """Every tuple in [n]^k, lexicographic."""
    if n ** arity > 4096:
        raise ValueError(f"full pool n^k = {n ** arity} too large")
    return TuplePool(
        arity, tuple(itertools.product(range(1, n + 1), repeat=arity)))


def check_k_orbit_bounded(G: PermGroup, V: SetSystem, k: int,
                          pool: TuplePool,
                          max_size: int) -> OrbitCheckReport:
    """Search Y subsets of the pool with 1 <= |Y| <= max_size in
    size-then-lex order; the first unsatisfiable Y is a sound witness
    of k-orbit failure.  Exhausting the bound is inconclusive."""
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    if not pool.tuples:
        raise ValueError("pool must be nonempty")
    if pool.arity != k:
        raise ValueError(f"pool arity {pool.arity} != k = {k}")
    for size in range(1, min(max_size, len(pool.tuples)) + 1):
        for combo in itertools.combinations(pool.tuples, size):
            if not tuple_set_satisfiable(G, V, combo):
                witness = make_witness(G, V, k, combo, "bounded")
                return OrbitCheckReport(VERDICT_VIOLATED, witness,
                                        bound=max_size)
    return OrbitCheckReport(VERDICT_BOUNDED, bound=max_size)


def residual_structure(G: PermGroup,
                       V: SetSystem) -> ResidualStructure | None:
    """Extract the residual structure of a marriage-free system, if any.

    Requires that V admits no marriage (raises otherwise).  Returns None
    unless every V_i = [n] - {a_i} with a a bijection AND for every i a
    group element g_i exists with g_i(i) = a_i, g_i(j) in V_j for all
    j != i, and g_i(i) in V_j for all j != i (canonical-least g_i is
    kept).  A None certifies that the (n-1)-orbit condition fails.
    """
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    if find_marriage(G, V).found:
        raise ValueError("precondition violated: the system has a marriage")
    a_list = residual_shape(V)
    if a_list is None:
        return None
    n = V.n
    masks = V.masks
    g_list = []
    for i in range(1, n + 1):
        a_i = a_list[i - 1]
        if not all(masks[j] >> (a_i - 1) & 1 for j in range(n)
                   if j != i - 1):
            return None
        found = None
        for g in G:
            key = g.images
            if key[i - 1] == a_i and all(
                    masks[j] >> (key[j] - 1) & 1 for j in range(n)
                    if j != i - 1):
                found = g
                break
        if found is None:
            return None
        g_list.append(found)
    assert len(set(g_list)) == n  # distinctness, forced by the constraints
    return ResidualStructure(tuple(g_list), tuple(a_list))


def residual_shape(V: SetSystem) -> tuple[int, ...] | None:
    """The bijection a with V_i = [n] - {a_i}, if the system has that
    shape; no group involved."""
    n = V.n
    full = (1 << n) - 1
    a_list = []
    for m in V.masks:
        missing = full ^ m
        if bin(missing).count("1") != 1:
            return None
        a_list.append(missing.bit_length())
    if len(set(a_list)) != n:
        return None
    return tuple(a_list)

"""The group-constrained marriage decision.

A set system assigns each position i a set V_i of allowed image points;
a marriage is a group element g with g(i) in V_i for every i.  Subsets
of [n] are bitmasks throughout (degree <= 16 keeps them in one word).
Every solver returns the lexicographically least valid witness so runs
are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import PermGroup
from .perm import Permutation
from .structure import symmetric_product_orbits

STRATEGY_ENUMERATION = "enumeration"
STRATEGY_MATCHING = "matching"
STRATEGY_DECOMPOSED = "decomposed"


@dataclass(frozen=True)
class SetSystem:
    """The family (V_1, ..., V_n) of subsets of [n]; empty sets allowed."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if len(self.masks) != self.n:
            raise ValueError(
                f"expected {self.n} sets, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for i, m in enumerate(self.masks, start=1):
            if m & ~full:
                raise ValueError(f"V_{i} has points outside 1..{self.n}")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> SetSystem:
        masks = []
        for i, s in enumerate(sets, start=1):
            m = 0
            for p in s:
                if not 1 <= p <= n:
                    raise ValueError(f"V_{i} point {p} out of range 1..{n}")
                m |= 1 << (p - 1)
            masks.append(m)
        return cls(n, tuple(masks))

    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(p for p in range(1, self.n + 1) if m >> (p - 1) & 1)
            for m in self.masks)

    def contains(self, position: int, point: int) -> bool:
        return bool(self.masks[position - 1] >> (point - 1) & 1)

    def encode(self) -> int:
        """Pack into one integer: field j (n bits wide) holds V_j."""
        code = 0
        for j, m in enumerate(self.masks):
            code |= m << (j * self.n)
        return code

    @classmethod
    def decode(cls, n: int, code: int) -> SetSystem:
        full = (1 << n) - 1
        return cls(n, tuple((code >> (j * n)) & full for j in range(n)))


@dataclass(frozen=True)
class MarriageResult:
    found: bool
    witness: Permutation | None
    strategy: str


def is_valid_marriage(g: Permutation, V: SetSystem) -> bool:
    return all(m >> (img - 1) & 1 for m, img in zip(V.masks, g.images))


def find_marriage(G: PermGroup, V: SetSystem) -> MarriageResult:
    """Scan the group in canonical order for the first valid element."""
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    masks = V.masks
    for g in G:
        if all(m >> (img - 1) & 1 for m, img in zip(masks, g.images)):
            assert is_valid_marriage(g, V) and g in G
            return MarriageResult(True, g, STRATEGY_ENUMERATION)
    return MarriageResult(False, None, STRATEGY_ENUMERATION)


@dataclass(frozen=True)
class HallReport:
    holds: bool
    violating: tuple[int, ...] | None


def hall_condition(V: SetSystem) -> HallReport:
    """Check |union of V_y over y in Y| >= |Y| for every nonempty Y,
    exhaustively, reporting the first violation in size-then-lex order."""
    n = V.n
    masks = V.masks
    union = [0] * (1 << n)
    for y_mask in range(1, 1 << n):
        low = y_mask & -y_mask
        union[y_mask] = union[y_mask ^ low] | masks[low.bit_length() - 1]
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            y_mask = 0
            for p in combo:
                y_mask |= 1 << (p - 1)
            if bin(union[y_mask]).count("1") < size:
                return HallReport(False, combo)
    return HallReport(True, None)


def _augment(pos: int, adj: Sequence[int], match_of_point: list[int],
             visited: list[bool]) -> bool:
    """Try to match position ``pos`` along an augmenting path."""
    m = adj[pos]
    while m:
        low = m & -m
        m ^= low
        point = low.bit_length()
        if visited[point]:
            continue
        visited[point] = True
        if match_of_point[point] == 0 or _augment(
                match_of_point[point], adj, match_of_point, visited):
            match_of_point[point] = pos
            return True
    return False


def _perfect_matching(masks: Sequence[int],
                      num_points: int) -> list[int] | None:
    """Match every position (one per mask) to a distinct allowed point,
    or return None.  Points live in 1..num_points."""
    npos = len(masks)
    adj = [0] + list(masks)
    match_of_point = [0] * (num_points + 1)
    for pos in range(1, npos + 1):
        visited = [False] * (num_points + 1)
        if not _augment(pos, adj, match_of_point, visited):
            return None
    images = [0] * npos
    for point in range(1, num_points + 1):
        if match_of_point[point]:
            images[match_of_point[point] - 1] = point
    return images


def hall_matching(V: SetSystem) -> MarriageResult:
    """Marriage against the full symmetric group via augmenting paths.

    When a perfect matching exists the witness is refined to the
    lexicographically least valid permutation, so the result matches
    find_marriage(Sym(n), V) exactly.
    """
    n = V.n
    if _perfect_matching(V.masks, n) is None:
        return MarriageResult(False, None, STRATEGY_MATCHING)
    images = _lex_least_system(V.masks, n)
    g = Permutation(images)
    assert is_valid_marriage(g, V)
    return MarriageResult(True, g, STRATEGY_MATCHING)


def _lex_least_system(masks: Sequence[int], n: int) -> list[int]:
    """Greedy lex-least perfect assignment; assumes one exists."""
    chosen: list[int] = []
    used = 0
    for pos in range(n):
        options = masks[pos] & ~used
        picked = None
        while options:
            low = options & -options
            options ^= low
            rest = [masks[j] & ~(used | low) for j in range(pos + 1, n)]
            if _perfect_matching(rest, n) is not None:
                picked = low.bit_length()
                used |= low
                break
        if picked is None:
            raise AssertionError("no perfect matching despite feasibility")
        chosen.append(picked)
    return chosen


def marriage_decomposed(G: PermGroup, V: SetSystem) -> MarriageResult:
    """Orbitwise Hall matching for a product of symmetric groups.

    Restricts the system to each orbit, solves each restriction by
    matching, and assembles the blockwise witness (which is the
    lex-least valid element of G overall).
    """
    if G.degree != V.n:
        raise ValueError(f"degree mismatch: {G.degree} vs {V.n}")
    part = symmetric_product_orbits(G)
    if part is None:
        raise ValueError("group is not a direct product of symmetric groups")
    n = V.n
    images = [0] * n
    for orbit in part.orbits:
        omega_mask = 0
        for p in orbit:
            omega_mask |= 1 << (p - 1)
        index = {p: i for i, p in enumerate(orbit)}
        m = len(orbit)
        restricted = []
        for j in orbit:
            mask = 0
            allowed = V.masks[j - 1] & omega_mask
            while allowed:
                low = allowed & -allowed
                allowed ^= low
                mask |= 1 << index[low.bit_length()]
            restricted.append(mask)
        if _perfect_matching(restricted, m) is None:
            return MarriageResult(False, None, STRATEGY_DECOMPOSED)
        local = _lex_least_system(restricted, m)
        for j, img_idx in zip(orbit, local):
            images[j - 1] = orbit[img_idx - 1]
    g = Permutation(images)
    assert is_valid_marriage(g, V) and g in G
    return MarriageResult(True, g, STRATEGY_DECOMPOSED)

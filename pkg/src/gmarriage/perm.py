"""Permutations of [n] = {1, ..., n} with cycle-notation I/O.

Points are 1-based everywhere in the public API.  Composition is
functional (right-to-left): ``(a * b)(i) == a(b(i))``.  Degrees are
capped at 16 so every subset of [n] fits in one machine word downstream.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Iterator

MAX_DEGREE = 16

_CYCLE_TOKEN = re.compile(r"\(\s*((?:\d+\s*)*)\)|\S")


@functools.total_ordering
class Permutation:
    """A bijection on [n], stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"images {imgs} are not a bijection on [{n}]")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> Permutation:
        """Parse whitespace-separated cycles like ``"(1 2 3)(4 5)"``.

        Points absent from every cycle are fixed; ``""`` and ``"()"``
        both give the identity.  Raises ValueError on malformed syntax,
        out-of-range points, or a point repeated across cycles.
        """
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for match in _CYCLE_TOKEN.finditer(text):
            if match.group(0).strip() and match.group(1) is None:
                raise ValueError(f"malformed cycle notation: {text!r}")
            body = match.group(1)
            if body is None:
                continue
            points = [int(tok) for tok in body.split()]
            for p in points:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} out of range 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} repeated in {text!r}")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a - 1] = b
        return cls(images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Functional composition: ``(self * other)(i) == self(other(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        imgs = self.images
        return Permutation(imgs[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def act_tuple(self, entries: tuple[int, ...]) -> tuple[int, ...]:
        """Entrywise image of a point tuple (repeats allowed)."""
        imgs = self.images
        n = self.degree
        for p in entries:
            if not 1 <= p <= n:
                raise ValueError(f"tuple entry {p} out of range 1..{n}")
        return tuple(imgs[p - 1] for p in entries)

    def act_set(self, points: Iterable[int]) -> frozenset[int]:
        imgs = self.images
        return frozenset(imgs[p - 1] for p in points)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if seen[start - 1] or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Canonical cycle notation; the identity prints as ``"()"``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def fixes(self, point: int) -> bool:
        return self.images[point - 1] == point

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __reduce__(self):
        return (Permutation, (self.images,))

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({self.cycle_string()!r}, {self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)


def parse_cycles(text: str, n: int) -> Permutation:
    return Permutation.from_cycles(text, n)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Right-to-left composition: ``compose(a, b)(i) == a(b(i))``."""
    return a * b


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def act_tuple(g: Permutation, entries: tuple[int, ...]) -> tuple[int, ...]:
    return g.act_tuple(entries)


def format_cycles(g: Permutation) -> str:
    return g.cycle_string()

"""Permutations of {1..n}, transpositions, and cycle-type extraction.

Conventions, fixed once and used everywhere:

- Points are one-based; no zero-based view is exposed.
- A permutation is stored by its image sequence: ``images[i-1]`` is the image
  of the point ``i``.
- Products compose right-to-left: ``compose(p, q)`` maps ``i`` to ``p(q(i))``,
  i.e. the right factor acts first.  Under this convention the three
  two-transposition factorizations of the 3-cycle 1->2->3->1 are
  (12)(23), (23)(13) and (13)(12).

Text formats: cycle notation ``"(1 2 3)(7 8 9 10)"`` with whitespace-separated
points and fixed points omitted, or an image list ``"2,3,1"``.  When parsing
cycle notation the degree defaults to the largest point mentioned.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import UsageError
from .partitions import Partition

__all__ = [
    "Permutation",
    "Transposition",
    "identity",
    "compose",
    "all_permutations",
    "all_transpositions",
    "parse_permutation",
]


@dataclass(frozen=True)
class Transposition:
    """A transposition (small, large) with ``1 <= small < large``."""

    small: int
    large: int

    def __post_init__(self):
        if not 1 <= self.small < self.large:
            raise ValueError(f"invalid transposition ({self.small} {self.large})")

    def as_permutation(self, degree: int) -> "Permutation":
        if self.large > degree:
            raise ValueError(f"transposition {self} does not fit in degree {degree}")
        images = list(range(1, degree + 1))
        images[self.small - 1], images[self.large - 1] = self.large, self.small
        return Permutation(tuple(images))

    def __str__(self) -> str:
        return f"({self.small} {self.large})"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def apply_transposition(self, t: Transposition) -> "Permutation":
        """Right-multiply by ``t``: swaps the images at positions small/large."""
        if t.large > self.degree:
            raise ValueError(f"transposition {t} does not fit in degree {self.degree}")
        images = list(self.images)
        images[t.small - 1], images[t.large - 1] = images[t.large - 1], images[t.small - 1]
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, fixed points included."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = []
            point = start
            while not seen[point - 1]:
                seen[point - 1] = True
                cycle.append(point)
                point = self.images[point - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        """Partition of n listing cycle lengths, fixed points included.

        >>> parse_permutation("(1 2 3 4 5 6)(7 8 9 10)").cycle_type()
        Partition((6, 4))
        """
        return Partition(len(c) for c in self.cycles())

    def reduced_cycle_type(self) -> Partition:
        """Cycle type with one subtracted from each part, zero parts dropped.

        Its size is the minimal number of transpositions multiplying to self.

        >>> parse_permutation("(1 2 3 4 5 6)(7 8 9 10)").reduced_cycle_type()
        Partition((5, 3))
        """
        return Partition(len(c) - 1 for c in self.cycles() if len(c) > 1)

    def cycles_count(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self.cycles())

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def identity(n: int) -> Permutation:
    """The identity permutation of S(n); n must be at least 1."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation(tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p*q acting as i -> p(q(i)); the right factor acts first.

    >>> t12, t23 = Transposition(1, 2), Transposition(2, 3)
    >>> str(compose(t12.as_permutation(3), t23.as_permutation(3)))
    '(1 2 3)'
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S(n) in lexicographic order of image sequences."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def all_transpositions(n: int) -> list[Transposition]:
    """The n(n-1)/2 transpositions of S(n), ordered by (large, small)."""
    return [Transposition(s, t) for t in range(2, n + 1) for s in range(1, t)]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation or an image list.

    >>> parse_permutation("2,3,1").images
    (2, 3, 1)
    >>> parse_permutation("(1 2)", degree=4).cycle_type()
    Partition((2, 1, 1))
    """
    text = text.strip()
    if not text:
        raise UsageError("empty permutation")
    if text.startswith("("):
        return _parse_cycles(text, degree)
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad permutation text {text!r}") from exc
    if degree is not None and degree != len(images):
        raise UsageError(f"image list has degree {len(images)}, expected {degree}")
    try:
        return Permutation(images)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_cycles(text: str, degree: int | None) -> Permutation:
    cycles: list[list[int]] = []
    consumed = 0
    for match in _CYCLE_RE.finditer(text):
        consumed += len(re.sub(r"\s", "", match.group(0)))
        body = match.group(1).replace(",", " ").split()
        try:
            cycles.append([int(p) for p in body])
        except ValueError as exc:
            raise UsageError(f"bad cycle {match.group(0)!r}") from exc
    if consumed != len(re.sub(r"\s", "", text)):
        raise UsageError(f"bad permutation text {text!r}")
    points = [p for c in cycles for p in c]
    if any(p < 1 for p in points):
        raise UsageError("points must be positive")
    if len(set(points)) != len(points):
        raise UsageError(f"repeated point in {text!r}")
    n = degree if degree is not None else max(points, default=1)
    if points and max(points) > n:
        raise UsageError(f"point {max(points)} exceeds degree {n}")
    images = list(range(1, n + 1))
    for cycle in cycles:
        for i, point in enumerate(cycle):
            images[point - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(tuple(images))


def product(factors: Iterable[Transposition], degree: int) -> Permutation:
    """Compose transpositions, rightmost factor applied first."""
    result = identity(degree)
    for t in factors:
        result = result.apply_transposition(t)
    return result

"""Compositions, order-preserving injections, and overlapping shuffles.

A composition is a finite sequence of positive integers; the empty
composition is allowed and indexes the unit of every algebra in this
package.  Weak compositions (entries allowed to be zero) are passed
around as plain integer sequences; ``positive_part`` turns one into a
composition by dropping its zeros.

The canonical order on compositions, used wherever a deterministic
sweep or serialization order is needed, is graded: first by the sum of
parts, then by length, then lexicographically.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Sequence


class Composition:
    """An immutable sequence of positive integer parts."""

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for part in parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def max_part(self) -> int:
        """Largest part, 0 for the empty composition."""
        return max(self.parts, default=0)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def sort_key(self):
        return (self.size(), len(self.parts), self.parts)

    def __lt__(self, other: Composition) -> bool:
        return self.sort_key() < other.sort_key()

    def to_list(self) -> list[int]:
        """Serialized form: a plain integer array."""
        return list(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Composition({list(self.parts)})"


def positive_part(weak: Sequence[int]) -> Composition:
    """Drop the zero entries of a weak composition, keeping the order."""
    for part in weak:
        if not isinstance(part, int) or part < 0:
            raise ValueError(f"weak composition entries must be >= 0, got {part!r}")
    return Composition(part for part in weak if part)


def enumerate_compositions(max_length: int, max_part: int) -> list[Composition]:
    """All compositions with at most ``max_length`` parts, each at most
    ``max_part``, in the canonical graded order.

    The count is sum(max_part**k for k in range(max_length + 1)).
    """
    if max_length < 0 or max_part < 0:
        raise ValueError("bounds must be >= 0")
    found = [
        Composition(parts)
        for length in range(max_length + 1)
        for parts in itertools.product(range(1, max_part + 1), repeat=length)
    ]
    found.sort(key=Composition.sort_key)
    return found


class OrderedInjection:
    """A strictly increasing map from [1..source_size] into [1..target_size]."""

    __slots__ = ("images", "target_size", "image_set")

    images: tuple[int, ...]
    target_size: int
    image_set: frozenset[int]

    def __init__(self, images: Iterable[int], target_size: int):
        images = tuple(images)
        if not isinstance(target_size, int) or target_size < 0:
            raise ValueError("target_size must be >= 0")
        previous = 0
        for image in images:
            if not isinstance(image, int) or not previous < image <= target_size:
                raise ValueError(
                    f"images must increase strictly within [1, {target_size}], got {images}"
                )
            previous = image
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "target_size", target_size)
        object.__setattr__(self, "image_set", frozenset(images))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedInjection is immutable")

    @property
    def source_size(self) -> int:
        return len(self.images)

    def part_at(self, parts: Sequence[int], target: int) -> int:
        """Route ``parts`` along the injection: the k-th part lands at
        position ``images[k]``; positions not hit receive 0."""
        if len(parts) != len(self.images):
            raise ValueError("parts length must equal source_size")
        for k, image in enumerate(self.images):
            if image == target:
                return parts[k]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedInjection):
            return NotImplemented
        return self.images == other.images and self.target_size == other.target_size

    def __hash__(self):
        return hash((self.images, self.target_size))

    def __repr__(self) -> str:
        return f"OrderedInjection({list(self.images)}, target_size={self.target_size})"


def enumerate_injections(source_size: int, target_size: int) -> list[OrderedInjection]:
    """All order-preserving injections [1..source_size] -> [1..target_size].

    There are C(target_size, source_size) of them, listed with images in
    lexicographic order; the list is empty when source_size exceeds
    target_size.
    """
    if source_size < 0 or target_size < 0:
        raise ValueError("sizes must be >= 0")
    return [
        OrderedInjection(images, target_size)
        for images in itertools.combinations(range(1, target_size + 1), source_size)
    ]


def overlapping_shuffles(alpha: Composition, beta: Composition) -> Counter[Composition]:
    """Multiset of overlapping shuffles of two compositions.

    An overlapping shuffle interleaves the parts of ``alpha`` and
    ``beta``, keeping each one's internal order, with any number of
    pairwise collisions where one part of each is added.  Concretely:
    for every n and every pair of order-preserving injections
    iota: [1..len(alpha)] -> [1..n], jota: [1..len(beta)] -> [1..n]
    whose images jointly cover [1..n], emit the composition whose i-th
    part is the alpha-part routed to i plus the beta-part routed to i.
    The result counts each outcome with multiplicity.
    """
    la, lb = len(alpha), len(beta)
    counts: Counter[Composition] = Counter()
    for n in range(max(la, lb), la + lb + 1):
        full = frozenset(range(1, n + 1))
        for iota in enumerate_injections(la, n):
            for jota in enumerate_injections(lb, n):
                if iota.image_set | jota.image_set != full:
                    continue
                counts[
                    Composition(
                        iota.part_at(alpha, i) + jota.part_at(beta, i)
                        for i in range(1, n + 1)
                    )
                ] += 1
    return counts

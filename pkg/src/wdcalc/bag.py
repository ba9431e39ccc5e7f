"""A small immutable multiset."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Iterator


class Bag:
    __slots__ = ("_counts", "_hash")

    def __init__(self, items: Iterable = ()):
        self._counts = Counter(items)
        self._hash = None

    @classmethod
    def from_counts(cls, counts) -> Bag:
        bag = cls()
        for item, n in dict(counts).items():
            if n < 0:
                raise ValueError("negative multiplicity")
            if n:
                bag._counts[item] += n
        return bag

    def count(self, item) -> int:
        return self._counts.get(item, 0)

    def counts(self) -> dict:
        return dict(self._counts)

    def distinct(self):
        return self._counts.keys()

    def sorted_items(self, key: Callable | None = None) -> list[tuple[object, int]]:
        return sorted(self._counts.items(), key=(lambda kv: key(kv[0])) if key else None)

    def map(self, fn) -> Bag:
        return Bag.from_counts(_merge((fn(item), n) for item, n in self._counts.items()))

    def filter(self, pred) -> Bag:
        return Bag.from_counts({item: n for item, n in self._counts.items() if pred(item)})

    def __iter__(self) -> Iterator:
        return self._counts.elements()

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __add__(self, other: Bag) -> Bag:
        if not isinstance(other, Bag):
            return NotImplemented
        return Bag.from_counts(self._counts + other._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bag):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Bag({dict(self._counts)!r})"


def _merge(pairs) -> Counter:
    c: Counter = Counter()
    for item, n in pairs:
        c[item] += n
    return c

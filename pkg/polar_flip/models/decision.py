"""Decision-LLR bookkeeping for bit-flipping decoders."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

__all__ = ["DecisionEntry", "DecisionList", "FlipTarget"]


@dataclass(frozen=True)
class DecisionEntry:
    """Reliability of one estimated information bit."""

    lam: float
    node_id: int
    local_d: int
    info_index: int

    @property
    def sort_key(self) -> Tuple[float, int]:
        return (self.lam, self.info_index)


@dataclass(frozen=True)
class FlipTarget:
    """The decision to invert during one flip trial."""

    entry: DecisionEntry

    @property
    def node_id(self) -> int:
        return self.entry.node_id

    @property
    def local_d(self) -> int:
        return self.entry.local_d


class DecisionList:
    """Bounded list of decision LLRs kept in ascending order.

    Works like an insert-sort unit: every insertion lands at its sorted
    position and whatever falls beyond ``capacity`` is dropped. Equal
    reliabilities are ordered by ascending information-bit index.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError(f"capacity must be >= 0, got {capacity}")
        self.capacity = capacity
        self._entries: List[DecisionEntry] = []
        self._keys: List[Tuple[float, int]] = []

    @classmethod
    def from_entries(cls, entries: Iterable[DecisionEntry], capacity: int) -> DecisionList:
        decisions = cls(capacity)
        for entry in entries:
            decisions.insert(entry)
        return decisions

    def insert(self, entry: DecisionEntry) -> bool:
        """Insert ``entry``; returns False when it did not make the cut."""
        if self.capacity == 0:
            return False
        key = entry.sort_key
        if len(self._entries) == self.capacity and key >= self._keys[-1]:
            return False
        position = bisect.bisect_right(self._keys, key)
        self._keys.insert(position, key)
        self._entries.insert(position, entry)
        if len(self._entries) > self.capacity:
            self._keys.pop()
            self._entries.pop()
        return True

    @property
    def is_full(self) -> bool:
        return len(self._entries) >= self.capacity

    @property
    def worst(self) -> Optional[DecisionEntry]:
        return self._entries[-1] if self._entries else None

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[DecisionEntry]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> DecisionEntry:
        return self._entries[index]

    def __repr__(self) -> str:
        return f"DecisionList(capacity={self.capacity}, entries={self._entries!r})"

    def to_list(self) -> List[DecisionEntry]:
        return list(self._entries)

"""
Ends of a tree with dynamics and their vertices.

An end is a child-index address read from the model's level-0 anchor:
letter i picks the child taken from level i to level i+1. Levels below 0
follow the anchor's ancestor line.
"""

import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Tuple

from errors import AddressOutOfRange
from twd.models import VertexRef
from twd.tree import TreeModel


class End(ABC):
    """An infinite address."""

    @abstractmethod
    def letter(self, i: int) -> int:
        ...

    def prefix(self, length: int) -> Tuple[int, ...]:
        return tuple(self.letter(i) for i in range(length))

    def word(self, length: int) -> str:
        return "".join(str(a) for a in self.prefix(length))


@dataclass(frozen=True)
class PeriodicEnd(End):
    """Eventually periodic address u v v v ..."""
    preperiod: Tuple[int, ...] = ()
    period: Tuple[int, ...] = (0,)

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(a < 0 for a in self.preperiod + self.period):
            raise ValueError("child indices must be non-negative")

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def normalized(self) -> "PeriodicEnd":
        """Shortest preperiod and primitive period describing the same address."""
        period = self.period
        for p in range(1, len(period) + 1):
            if len(period) % p == 0 and period[:p] * (len(period) // p) == period:
                period = period[:p]
                break
        pre = self.preperiod
        while pre and pre[-1] == period[-1]:
            pre = pre[:-1]
            period = period[-1:] + period[:-1]
        return PeriodicEnd(pre, period)

    @classmethod
    def parse(cls, preperiod: str, period: str) -> "PeriodicEnd":
        return cls(tuple(int(c) for c in preperiod), tuple(int(c) for c in period))

    def __str__(self) -> str:
        pre = "".join(map(str, self.preperiod))
        return f"{pre}({''.join(map(str, self.period))})^inf"


class GeneratedEnd(End):
    """
    An address produced by a word generator, extended on demand.

    ``generator(L)`` must return the first L letters as a string of digits.
    """

    def __init__(self, name: str, generator: Callable[[int], str], initial: int = 64):
        self.name = name
        self._generator = generator
        self._lock = threading.Lock()
        self._letters = generator(initial)

    def letter(self, i: int) -> int:
        if i >= len(self._letters):
            with self._lock:
                length = max(len(self._letters), 1)
                while length <= i:
                    length *= 2
                if length > len(self._letters):
                    self._letters = self._generator(length)
        return int(self._letters[i])

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"GeneratedEnd({self.name!r})"


class EndTrace:
    """
    Vertices of one end, computed lazily and cached for a single call.
    """

    def __init__(self, model: TreeModel, end: End):
        self.model = model
        self.end = end
        anchor = model.anchor()
        self._down: List[VertexRef] = [anchor]   # levels 0, 1, 2, ...
        self._up: List[VertexRef] = [anchor]     # levels 0, -1, -2, ...

    def vertex(self, level: int) -> VertexRef:
        if level >= 0:
            while len(self._down) <= level:
                depth = len(self._down) - 1
                current = self._down[-1]
                kids = self.model.children(current)
                index = self.end.letter(depth)
                if index >= len(kids):
                    raise AddressOutOfRange(
                        f"child index {index} at {current} but it has {len(kids)} children",
                        level=depth + 1, vertex=str(current),
                    )
                self._down.append(kids[index])
            return self._down[level]

        while len(self._up) <= -level:
            self._up.append(self.model.parent(self._up[-1]))
        return self._up[-level]

    def contains(self, v: VertexRef) -> bool:
        return self.vertex(v.level) == v


def end_vertex(model: TreeModel, end: End, level: int) -> VertexRef:
    """The vertex of ``end`` at ``level``."""
    if model.max_level is not None and level > model.max_level:
        raise AddressOutOfRange(f"level {level} is beyond the model's depth {model.max_level}",
                                level=level)
    return EndTrace(model, end).vertex(level)

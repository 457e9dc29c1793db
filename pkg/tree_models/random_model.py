"""
Randomly generated rooted trees with dynamics (H = 1).

Everything is derived lazily from ``seed`` and the vertex id, so two
instances with the same seed describe the same tree no matter in which
order they are explored. A vertex at level l >= 1 is named by its child
index path from the root; levels <= 0 form the root-ancestor line.
"""

import random
import threading
from typing import Dict, List, Optional

from errors import AddressOutOfRange
from twd.ends import End, GeneratedEnd
from twd.models import VertexRef
from twd.tree import TreeModel

LINE = ""
SAMPLE_CAP = 512


class RandomTreeModel(TreeModel):
    """
    The root has 2..max_branching children, every other vertex
    1..max_branching. F(v) for a child v of p is a seeded choice among the
    children of F(p), which keeps F children-preserving by construction.
    """

    H = 1
    rooted = True

    def __init__(self, seed: int, max_branching: int = 4, max_level: Optional[int] = None):
        if not 2 <= max_branching <= 10:
            raise ValueError(f"max_branching must lie in [2, 10], got {max_branching}")
        self.seed = seed
        self.max_branching = max_branching
        self.max_level = max_level
        self.name = f"random:{seed}"
        self._lock = threading.Lock()
        self._counts: Dict[str, int] = {}
        self._images: Dict[str, str] = {}

    def _rng(self, kind: str, vid: str) -> random.Random:
        return random.Random(f"{self.seed}:{kind}:{vid}")

    def _check(self, v: VertexRef):
        if v.level <= 0:
            if v.id != LINE:
                raise AddressOutOfRange(f"{v} is not on the root line", vertex=str(v))
            return
        if len(v.id) != v.level:
            raise AddressOutOfRange(f"{v} is not a vertex of {self.name}", vertex=str(v))
        if self.max_level is not None and v.level > self.max_level:
            raise AddressOutOfRange(f"{v} is beyond depth {self.max_level}", vertex=str(v))
        for depth in range(v.level):
            if int(v.id[depth]) >= self._count(v.id[:depth]):
                raise AddressOutOfRange(f"{v} is not a vertex of {self.name}", vertex=str(v))

    def _count(self, vid: str) -> int:
        with self._lock:
            if vid not in self._counts:
                low = 2 if vid == LINE else 1
                self._counts[vid] = self._rng("children", vid).randint(low, self.max_branching)
            return self._counts[vid]

    def anchor(self) -> VertexRef:
        return VertexRef(0, LINE)

    def children(self, v: VertexRef) -> List[VertexRef]:
        self._check(v)
        if v.level < 0:
            return [VertexRef(v.level + 1, LINE)]
        if self.max_level is not None and v.level >= self.max_level:
            return []
        return [VertexRef(v.level + 1, v.id + str(i)) for i in range(self._count(v.id))]

    def parent(self, v: VertexRef) -> VertexRef:
        self._check(v)
        return VertexRef(v.level - 1, v.id[:-1] if v.level > 0 else LINE)

    def _image_id(self, vid: str) -> str:
        if len(vid) <= 1:
            return LINE
        with self._lock:
            cached = self._images.get(vid)
        if cached is not None:
            return cached
        target_parent = self._image_id(vid[:-1])
        choice = self._rng("image", vid).randrange(self._count(target_parent))
        target = target_parent + str(choice)
        with self._lock:
            self._images[vid] = target
        return target

    def image(self, v: VertexRef) -> VertexRef:
        self._check(v)
        return VertexRef(v.level - 1, self._image_id(v.id) if v.level > 0 else LINE)

    def level_vertices(self, level: int) -> List[VertexRef]:
        """All vertices of a level, or the first SAMPLE_CAP of them in address order."""
        if level <= 0:
            return [VertexRef(level, LINE)]
        frontier = [VertexRef(0, LINE)]
        for _ in range(level):
            frontier = [c for v in frontier for c in self.children(v)][:SAMPLE_CAP]
        return frontier

    def fit_end(self, end: End, name: Optional[str] = None) -> GeneratedEnd:
        """
        The end of this tree whose i-th letter is ``end.letter(i)`` reduced
        modulo the child count met along the way.
        """
        def generator(length: int) -> str:
            vid = LINE
            for i in range(length):
                vid += str(end.letter(i) % self._count(vid))
            return vid

        return GeneratedEnd(name or f"fit({end})", generator, initial=16)

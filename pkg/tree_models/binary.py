"""
The tree with dynamics of a disconnected quadratic polynomial.

Levels <= 0 form the single root-ancestor line (id ""). A vertex at level
l >= 1 is a bit-word of length l: the parent drops the last bit and F
drops the first bit, so F is the one-sided shift and H = 1.
"""

from itertools import product
from typing import List, Optional

from errors import AddressOutOfRange
from twd.ends import End, PeriodicEnd
from twd.models import VertexRef
from twd.tree import TreeModel

LINE = ""


class BinaryModel(TreeModel):
    name = "binary"
    H = 1
    rooted = True

    def anchor(self) -> VertexRef:
        return VertexRef(0, LINE)

    def _check(self, v: VertexRef):
        if v.level <= 0:
            if v.id != LINE:
                raise AddressOutOfRange(f"{v} is not on the root line", vertex=str(v))
        elif len(v.id) != v.level or set(v.id) - {"0", "1"}:
            raise AddressOutOfRange(f"{v} is not a bit-word of its level", vertex=str(v))

    def children(self, v: VertexRef) -> List[VertexRef]:
        self._check(v)
        if v.level < 0:
            return [VertexRef(v.level + 1, LINE)]
        return [VertexRef(v.level + 1, v.id + bit) for bit in "01"]

    def parent(self, v: VertexRef) -> VertexRef:
        self._check(v)
        if v.level <= 1:
            return VertexRef(v.level - 1, LINE)
        return VertexRef(v.level - 1, v.id[:-1])

    def image(self, v: VertexRef) -> VertexRef:
        self._check(v)
        if v.level <= 1:
            return VertexRef(v.level - 1, LINE)
        return VertexRef(v.level - 1, v.id[1:])

    def level_vertices(self, level: int) -> List[VertexRef]:
        if level <= 0:
            return [VertexRef(level, LINE)]
        return [VertexRef(level, "".join(bits)) for bits in product("01", repeat=level)]

    def return_search_bound(self, end: End) -> Optional[int]:
        """
        For u v^inf with nonempty normalized u: the first-return target of
        x_l is the longest border of the length-l prefix, and a shift of a
        non-periodic address agrees with it on fewer than |u| + |v| letters,
        so targets stay below that horizon. Past |u| + horizon the border
        only depends on l mod |v|, hence one more period bounds the search.
        """
        if not isinstance(end, PeriodicEnd):
            return None
        normal = end.normalized()
        if not normal.preperiod:
            return None
        u, v = len(normal.preperiod), len(normal.period)
        return 2 * u + 2 * v

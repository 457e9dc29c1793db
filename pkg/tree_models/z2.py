"""
Trees on Z^2: vertices (l, m), parent (l-1, m // 2) for m >= 0 and
(l-1, 0) for m < 0.

Variant F is the automorphism (l, m) -> (l-H, m); variant G collapses
(l, m) -> (l-H, 0). Both preserve children, neither tree is rooted, and
H may be any integer (return operations reject H <= 0).

(l, 0) has infinitely many children; the model lists the two non-negative
ones followed by the first ``width`` negative ones.
"""

from enum import Enum
from typing import List, Optional

from config import TWD_CONFIG
from errors import AddressOutOfRange
from twd.ends import End, PeriodicEnd
from twd.models import VertexRef
from twd.tree import TreeModel


class Z2Variant(str, Enum):
    F = "F"
    G = "G"


class Z2Model(TreeModel):
    rooted = False

    def __init__(self, H: int, variant: Z2Variant = Z2Variant.F, width: Optional[int] = None):
        self.H = H
        self.variant = Z2Variant(variant)
        self.width = TWD_CONFIG["z2_width"] if width is None else width
        self.name = f"z2:{self.variant.value}:{H}"

    @staticmethod
    def _m(v: VertexRef) -> int:
        try:
            return int(v.id)
        except ValueError:
            raise AddressOutOfRange(f"{v} is not a Z^2 vertex", vertex=str(v))

    @staticmethod
    def vertex(level: int, m: int) -> VertexRef:
        return VertexRef(level, str(m))

    def anchor(self) -> VertexRef:
        return self.vertex(0, 0)

    def children(self, v: VertexRef) -> List[VertexRef]:
        m = self._m(v)
        if m < 0:
            return []
        kids = [self.vertex(v.level + 1, 2 * m), self.vertex(v.level + 1, 2 * m + 1)]
        if m == 0:
            kids += [self.vertex(v.level + 1, -j) for j in range(1, self.width + 1)]
        return kids

    def parent(self, v: VertexRef) -> VertexRef:
        m = self._m(v)
        return self.vertex(v.level - 1, m // 2 if m >= 0 else 0)

    def image(self, v: VertexRef) -> VertexRef:
        m = self._m(v)
        if self.variant == Z2Variant.F:
            return self.vertex(v.level - self.H, m)
        return self.vertex(v.level - self.H, 0)

    def level_vertices(self, level: int) -> List[VertexRef]:
        return [self.vertex(level, m) for m in range(-self.width, self.width + 1)]

    def return_search_bound(self, end: End) -> Optional[int]:
        """
        Along the end m stays 0 up to the first nonzero letter (index p)
        and is nonzero afterwards. Under F those deeper vertices never
        return; under G they return onto levels <= p, each target t <= p
        being hit by x_(t+H).
        """
        if not isinstance(end, PeriodicEnd):
            return None
        letters = end.preperiod + end.period
        p = next((i for i, a in enumerate(letters) if a != 0), None)
        if p is None:
            return None
        return p if self.variant == Z2Variant.F else p + self.H

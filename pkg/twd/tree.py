"""
The lazy tree-with-dynamics interface.

Trees are infinite, so models only expose evaluable functions; every
check in this package runs on an explicit finite truncation.
"""

from abc import ABC, abstractmethod
from typing import List, Optional

from twd.models import VertexRef


class TreeModel(ABC):
    """
    A genealogical tree with a children-preserving map F.

    F sends level l to level l - H and the image of a child of v is a
    child of F(v). Children lists are finite and ordered; an end's
    address indexes into them.
    """

    name: str = "model"
    H: int = 1
    rooted: bool = False
    max_level: Optional[int] = None  # deepest evaluable level, None if unbounded

    @abstractmethod
    def children(self, v: VertexRef) -> List[VertexRef]:
        ...

    @abstractmethod
    def parent(self, v: VertexRef) -> VertexRef:
        ...

    @abstractmethod
    def image(self, v: VertexRef) -> VertexRef:
        """F(v)."""

    @abstractmethod
    def anchor(self) -> VertexRef:
        """Level-0 vertex every end passes through (the root when rooted)."""

    @abstractmethod
    def level_vertices(self, level: int) -> List[VertexRef]:
        """Vertices at a level, or a deterministic sample of them when infinite."""

    def return_search_bound(self, end) -> Optional[int]:
        """
        A level L such that whenever x_t is the first-return target of some
        x_l, it is already the target of some x_l with l <= L. Scanning up to
        L without a hit proves the end nonrecurrent. None when the model
        cannot tell (always the case for recurrent ends).
        """
        return None

    def iterate(self, v: VertexRef, n: int) -> VertexRef:
        for _ in range(n):
            v = self.image(v)
        return v

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, H={self.H})"

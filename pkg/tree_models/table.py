"""
Finite tree-with-dynamics models given as explicit vertex tables.

Used for user JSON models and for trees derived from puzzles. The table
covers levels [lo, hi]; below lo the model continues as a single
root-ancestor line when ``root_line`` is set (only valid when each
tabulated level <= 0 has exactly one vertex).

JSON format::

    {"levels": [lo, hi], "H": 1, "root_line": true,
     "vertices": [{"id": "a", "level": 0, "parent": null}, ...],
     "F": [{"from": "b", "to": "a"}, ...]}
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from errors import AddressOutOfRange, ModelFormatError
from twd.models import VertexRef
from twd.tree import TreeModel

logger = logging.getLogger(__name__)

LINE_PREFIX = "~"


class VertexRecord(BaseModel):
    id: str
    level: int
    parent: Optional[str] = None


class ImageRecord(BaseModel):
    source: str = Field(..., alias="from")
    target: str = Field(..., alias="to")


class TableSpec(BaseModel):
    """Validated JSON document."""
    levels: Tuple[int, int]
    vertices: List[VertexRecord]
    F: List[ImageRecord] = Field(default_factory=list)
    H: int = 1
    root_line: Optional[bool] = None
    periodic_extension: Optional[dict] = None


class TableTreeModel(TreeModel):
    """Explicit vertices and images on a finite window of levels."""

    def __init__(
        self,
        vertices: List[VertexRecord],
        images: Dict[str, str],
        H: int,
        levels: Tuple[int, int],
        root_line: Optional[bool] = None,
        name: str = "table",
    ):
        self.name = name
        self.H = H
        self.lo, self.hi = levels
        self.max_level = self.hi

        self._level: Dict[str, int] = {}
        self._parent: Dict[str, Optional[str]] = {}
        self._children: Dict[str, List[str]] = {}
        self._by_level: Dict[int, List[str]] = {}
        for record in vertices:
            if record.id in self._level:
                raise ModelFormatError(f"duplicate vertex id {record.id!r}", vertex=record.id)
            if record.id.startswith(LINE_PREFIX):
                raise ModelFormatError(f"ids starting with {LINE_PREFIX!r} are reserved", vertex=record.id)
            if not self.lo <= record.level <= self.hi:
                raise ModelFormatError(f"vertex {record.id!r} lies outside levels [{self.lo}, {self.hi}]",
                                       vertex=record.id)
            self._level[record.id] = record.level
            self._parent[record.id] = record.parent
            self._children[record.id] = []
            self._by_level.setdefault(record.level, []).append(record.id)

        for record in vertices:
            if record.parent is not None:
                if record.parent not in self._level:
                    raise ModelFormatError(f"unknown parent {record.parent!r} of {record.id!r}",
                                           vertex=record.id)
                self._children[record.parent].append(record.id)

        for source, target in images.items():
            if source not in self._level or target not in self._level:
                raise ModelFormatError(f"image {source!r} -> {target!r} names an unknown vertex",
                                       vertex=source)
        self._images = dict(images)

        bottom = self._by_level.get(self.lo, [])
        if not bottom:
            raise ModelFormatError(f"the lowest level {self.lo} has no vertices", level=self.lo)
        # the line below the window attaches to the single bottom vertex
        single = len(bottom) == 1 and all(
            len(self._by_level.get(l, [])) == 1 for l in range(self.lo, min(self.hi, 0) + 1))
        if root_line and not single:
            raise ModelFormatError(f"{name}: root_line needs exactly one vertex at level {self.lo} and at every "
                                   f"level up to 0", level=self.lo, vertices=len(bottom))
        self.rooted = single if root_line is None else root_line
        logger.debug(f"{name}: levels [{self.lo}, {self.hi}], {len(self._level)} vertices, rooted={self.rooted}")
        self._line_top = self._by_level[self.lo][0] if self.rooted else None

    # ---- construction

    @classmethod
    def from_spec(cls, spec: TableSpec, name: str = "json") -> "TableTreeModel":
        if spec.periodic_extension:
            raise ModelFormatError("periodic_extension is not supported; tabulate the levels instead")
        images = {}
        for record in spec.F:
            if record.source in images:
                raise ModelFormatError(f"two images for {record.source!r}", vertex=record.source)
            images[record.source] = record.target
        return cls(spec.vertices, images, spec.H, spec.levels, spec.root_line, name=name)

    @classmethod
    def from_json(cls, source: Union[str, Path, dict], name: Optional[str] = None) -> "TableTreeModel":
        if isinstance(source, dict):
            data, label = source, name or "json"
        else:
            path = Path(source)
            try:
                data = json.loads(path.read_text())
            except (OSError, json.JSONDecodeError) as e:
                raise ModelFormatError(f"cannot read model {path}: {e}", path=str(path))
            label = name or f"json:{path}"
        try:
            spec = TableSpec.model_validate(data)
        except ValidationError as e:
            raise ModelFormatError(f"malformed model: {e.errors()[0]['msg']}")
        return cls.from_spec(spec, name=label)

    # ---- TreeModel

    def _line(self, level: int) -> VertexRef:
        return VertexRef(level, f"{LINE_PREFIX}{level}")

    def _known(self, v: VertexRef) -> bool:
        return self._level.get(v.id) == v.level

    def _is_line(self, v: VertexRef) -> bool:
        return self.rooted and v.level < self.lo and v.id == f"{LINE_PREFIX}{v.level}"

    def _require(self, v: VertexRef):
        if not (self._known(v) or self._is_line(v)):
            raise AddressOutOfRange(f"{v} is not a vertex of {self.name}", vertex=str(v))

    def anchor(self) -> VertexRef:
        if self.rooted:
            if self.lo <= 0:
                return VertexRef(0, self._by_level[0][0])
            return self._line(0)
        roots = self._by_level.get(0, [])
        if not roots:
            raise AddressOutOfRange(f"{self.name} has no level-0 vertex")
        return VertexRef(0, roots[0])

    def children(self, v: VertexRef) -> List[VertexRef]:
        self._require(v)
        if self._is_line(v):
            if v.level + 1 < self.lo:
                return [self._line(v.level + 1)]
            return [VertexRef(self.lo, self._line_top)]
        return [VertexRef(v.level + 1, c) for c in self._children[v.id]]

    def parent(self, v: VertexRef) -> VertexRef:
        self._require(v)
        if self._is_line(v) or (self.rooted and v.level == self.lo):
            return self._line(v.level - 1)
        p = self._parent[v.id]
        if p is None:
            raise AddressOutOfRange(f"{v} has no parent inside the window", vertex=str(v))
        return VertexRef(v.level - 1, p)

    def image(self, v: VertexRef) -> VertexRef:
        self._require(v)
        target = self._images.get(v.id)
        if target is not None and not self._is_line(v):
            return VertexRef(self._level[target], target)
        if self.rooted and v.level - self.H < self.lo:
            # below the window everything is the line
            return self._line(v.level - self.H)
        raise AddressOutOfRange(f"{v} has no image", vertex=str(v))

    def level_vertices(self, level: int) -> List[VertexRef]:
        if level < self.lo:
            return [self._line(level)] if self.rooted else []
        return [VertexRef(level, i) for i in self._by_level.get(level, [])]

    def to_json(self) -> dict:
        return {
            "levels": [self.lo, self.hi],
            "H": self.H,
            "root_line": self.rooted,
            "vertices": [
                {"id": i, "level": self._level[i], "parent": self._parent[i]}
                for level in sorted(self._by_level) for i in self._by_level[level]
            ],
            "F": [{"from": s, "to": t} for s, t in self._images.items()],
        }

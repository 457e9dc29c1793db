"""
Puzzle pieces of one depth, read off the angle classes.

Every class is a star of rays landing at one point, so it cuts the disk
into |class| sectors. Two elementary arcs lie in the same piece exactly
when they fall in the same sector of every class.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from errors import CrossingClasses, InconsistentImage, NonUniqueCritical
from yoccoz.angles import HALF, Angle, Arc, double, elementary_arcs, sector
from yoccoz.lamination import AngleClass

logger = logging.getLogger(__name__)


@dataclass
class CombPiece:
    index: int
    arcs: Tuple[Arc, ...]
    sectors: Tuple[int, ...]
    critical: bool = False
    parent: Optional[int] = None
    image: Optional[int] = None

    def contains(self, x: Angle) -> bool:
        return any(arc.contains(x) for arc in self.arcs)

    def meets_half_turn(self) -> bool:
        turned = [arc.rotated(HALF) for arc in self.arcs]
        return any(arc.meets(other) for arc in self.arcs for other in turned)

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.arcs) + "}"


@dataclass
class CombPuzzleLevel:
    """All pieces at one depth. Depths <= 0 have a single piece without arcs."""
    depth: int
    classes: Tuple[AngleClass, ...]
    pieces: List[CombPiece] = field(default_factory=list)

    def __post_init__(self):
        self._ordered = [list(c.angles) for c in self.classes]
        self._by_sectors: Optional[Dict[Tuple[int, ...], CombPiece]] = None

    def vector(self, x: Angle) -> Tuple[int, ...]:
        return tuple(sector(angles, x) for angles in self._ordered)

    def locate(self, x: Angle) -> int:
        """Index of the piece holding the (non-boundary) angle x."""
        if not self.classes:
            return 0
        if self._by_sectors is None:
            self._by_sectors = {p.sectors: p for p in self.pieces}
        piece = self._by_sectors.get(self.vector(x))
        if piece is not None:
            return piece.index
        raise InconsistentImage(f"angle {x} lies in no piece of depth {self.depth}", depth=self.depth)

    def critical_piece(self) -> str:
        return critical_piece(self)

    def piece_id(self, index: int) -> str:
        return f"P_{self.depth}" if self.depth <= 0 else f"P_{self.depth}^{index}"


def pieces(classes: Sequence[AngleClass], depth: int) -> CombPuzzleLevel:
    """
    Pieces of one depth, critical piece first, the others by smallest arc
    start. ``order_by_parent`` refines that order once parents are known.
    """
    level = CombPuzzleLevel(depth=depth, classes=tuple(classes) if depth > 0 else ())
    if not level.classes:
        level.pieces = [CombPiece(index=0, arcs=(), sectors=())]
        return level

    groups: Dict[Tuple[int, ...], List[Arc]] = {}
    angles = {a for c in level.classes for a in c.angles}
    for arc in elementary_arcs(angles):
        groups.setdefault(level.vector(arc.midpoint()), []).append(arc)

    found = [CombPiece(index=-1, arcs=tuple(arcs), sectors=v) for v, arcs in groups.items()]
    for piece in found:
        piece.critical = piece.meets_half_turn()
    found.sort(key=lambda p: (not p.critical, p.arcs[0].start))
    for i, piece in enumerate(found):
        piece.index = i
    level.pieces = found

    # stars with m spokes add m - 1 faces; anything else means crossing classes
    expected = 1 + sum(len(c) - 1 for c in level.classes)
    if len(found) != expected:
        raise CrossingClasses(f"depth {depth}: {len(found)} pieces, face count predicts {expected}",
                              depth=depth, pieces=len(found), expected=expected)
    logger.debug(f"depth {depth}: {len(found)} pieces")
    return level


def critical_index(level: CombPuzzleLevel) -> int:
    if level.depth < 1:
        return 0
    critical = [p.index for p in level.pieces if p.critical]
    if len(critical) != 1:
        raise NonUniqueCritical(f"depth {level.depth} has {len(critical)} critical pieces",
                                depth=level.depth, pieces=critical)
    return critical[0]


def critical_piece(level: CombPuzzleLevel) -> str:
    """Id of the piece meeting its own half-turn (the one holding the critical point)."""
    return level.piece_id(critical_index(level))


def _locate_all(arcs: Sequence[Arc], target: CombPuzzleLevel, transform, what: str, source: str) -> int:
    found = {target.locate(transform(arc.midpoint())) for arc in arcs}
    if len(found) != 1:
        raise InconsistentImage(f"arcs of {source} land in {len(found)} different {what} pieces",
                                piece=source, targets=sorted(found))
    return found.pop()


def piece_dynamics(level: CombPuzzleLevel, previous: CombPuzzleLevel) -> None:
    """
    Fill in parent and image of every piece of ``level`` from the level
    one depth up. Depth-1 pieces keep ``image = None``: f maps them into
    the depth-0 piece without being a piece map.
    """
    for piece in level.pieces:
        name = level.piece_id(piece.index)
        if not piece.arcs:
            piece.parent = 0
            continue
        piece.parent = _locate_all(piece.arcs, previous, lambda x: x, "parent", name)
        if level.depth >= 2:
            piece.image = _locate_all(piece.arcs, previous, double, "image", name)


def order_by_parent(level: CombPuzzleLevel) -> None:
    """Critical piece 0, then by (parent index, smallest arc start)."""
    level.pieces.sort(key=lambda p: (not p.critical, p.parent if p.parent is not None else -1,
                                     p.arcs[0].start if p.arcs else 0))
    for i, piece in enumerate(level.pieces):
        piece.index = i

"""
Puzzles cut out of trees with dynamics.
"""

import logging
from typing import Dict, Iterable, List, Optional

from errors import LabError
from puzzle.models import AbstractPuzzle, PuzzlePiece
from twd.models import VertexRef
from twd.tree import TreeModel

logger = logging.getLogger(__name__)


def piece_id(v: VertexRef) -> str:
    return f"{v.id or 'v'}@{v.level}"


def puzzle_from_model(
    model: TreeModel,
    lo: int,
    hi: int,
    exceptional_depths: Optional[Iterable[int]] = None,
) -> AbstractPuzzle:
    """
    The pieces of ``model`` between levels lo and hi, as a puzzle.

    The window starts from the model's sample at level lo and grows
    through children, so every piece below lo has its parent. Pieces at
    ``exceptional_depths`` drop their image and assert f(P) ⊂ F(P)
    instead, which resolves back to the same map.
    """
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    exceptional = set(exceptional_depths or ())

    levels: Dict[int, List[VertexRef]] = {lo: model.level_vertices(lo)}
    for level in range(lo, hi):
        levels[level + 1] = [c for v in levels[level] for c in model.children(v)]
    known = {v for vertices in levels.values() for v in vertices}

    pieces = []
    for level in range(lo, hi + 1):
        for v in levels[level]:
            parent = piece_id(model.parent(v)) if level > lo else None
            try:
                w = model.image(v)
            except LabError:
                w = None
            image = piece_id(w) if w in known else None
            if level in exceptional and image is not None:
                pieces.append(PuzzlePiece(id=piece_id(v), depth=level, parent=parent,
                                          exceptional=True, contained_in=image))
            else:
                pieces.append(PuzzlePiece(id=piece_id(v), depth=level, parent=parent, image=image))

    logger.debug(f"cut {len(pieces)} pieces from {model!r} on [{lo}, {hi}]")
    return AbstractPuzzle(window=(lo, hi), pieces=pieces)

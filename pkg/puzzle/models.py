"""
Abstract puzzles: pieces nested by depth with Markov-compatible images.

Pieces are purely combinatorial. A piece records its parent and either
its image under f or, for exceptional pieces, the containment assertion
f(P) ⊂ Q used to resolve the induced dynamics.
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError, model_validator

from errors import ModelFormatError


class PuzzlePiece(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: str
    depth: int
    parent: Optional[str] = Field(None, description="Parent piece; absent only at the top of the window")
    image: Optional[str] = Field(None, description="f(P) for non-exceptional pieces")
    exceptional: bool = False
    contained_in: Optional[str] = Field(
        None,
        alias="contained_in_image_of_parent",
        description="Piece Q with f(P) ⊂ Q ⊂ f(parent), exceptional pieces only",
    )

    @model_validator(mode="after")
    def check_image_kind(self):
        if self.exceptional and self.image is not None:
            raise ValueError(f"exceptional piece {self.id!r} cannot declare an image")
        if not self.exceptional and self.contained_in is not None:
            raise ValueError(f"only exceptional pieces carry a containment assertion ({self.id!r})")
        return self


class AbstractPuzzle(BaseModel):
    """Pieces over the depth window [lo, hi]."""

    window: Tuple[int, int]
    pieces: List[PuzzlePiece]
    periodic_extension: Optional[dict] = None

    _index: Dict[str, PuzzlePiece] = PrivateAttr(default_factory=dict)
    _children: Dict[str, List[str]] = PrivateAttr(default_factory=dict)
    _by_depth: Dict[int, List[str]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def check_window(self):
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        if self.periodic_extension:
            raise ValueError("periodic_extension is not supported; tabulate the depths instead")
        seen = set()
        for piece in self.pieces:
            if piece.id in seen:
                raise ValueError(f"duplicate piece id {piece.id!r}")
            seen.add(piece.id)
            if not lo <= piece.depth <= hi:
                raise ValueError(f"piece {piece.id!r} at depth {piece.depth} lies outside [{lo}, {hi}]")
        return self

    def model_post_init(self, __context) -> None:
        for piece in self.pieces:
            self._index[piece.id] = piece
            self._children.setdefault(piece.id, [])
            self._by_depth.setdefault(piece.depth, []).append(piece.id)
        for piece in self.pieces:
            if piece.parent in self._children:
                self._children[piece.parent].append(piece.id)

    @property
    def lo(self) -> int:
        return self.window[0]

    @property
    def hi(self) -> int:
        return self.window[1]

    def has(self, piece_id: Optional[str]) -> bool:
        return piece_id in self._index

    def piece(self, piece_id: str) -> PuzzlePiece:
        try:
            return self._index[piece_id]
        except KeyError:
            raise ModelFormatError(f"unknown piece {piece_id!r}", piece=piece_id)

    def children(self, piece_id: str) -> List[str]:
        return list(self._children.get(piece_id, []))

    def at_depth(self, depth: int) -> List[str]:
        return list(self._by_depth.get(depth, []))

    def ancestors(self, piece_id: str) -> List[str]:
        """The piece followed by its parents up to the top of the window."""
        chain = [piece_id]
        while True:
            parent = self._index[chain[-1]].parent
            if parent is None or parent not in self._index:
                return chain
            chain.append(parent)

    def is_standard(self) -> bool:
        """One piece at the bottom depth and at every depth <= 0 of the window."""
        return len(self._by_depth.get(self.lo, [])) == 1 and all(
            len(self._by_depth.get(d, [])) == 1 for d in range(self.lo, min(self.hi, 0) + 1))

    def counts(self) -> Dict[int, int]:
        return {d: len(self._by_depth.get(d, [])) for d in range(self.lo, self.hi + 1)}

    def exceptional_pieces(self) -> List[str]:
        return [p.id for p in self.pieces if p.exceptional]

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "pieces": [p.model_dump(by_alias=True, exclude_defaults=True) for p in self.pieces],
        }


class ReturnNest(BaseModel):
    """A return nest of pieces, index for index the return chain of the derived tree."""
    model_config = ConfigDict(frozen=True)

    k_lo: int = Field(..., le=0)
    levels: List[int]
    times: List[int]
    pieces: List[str] = Field(..., description="Piece (or root-line vertex) id at each level")
    nonrecurrent_at: Optional[int] = None

    @property
    def K(self) -> int:
        return self.k_lo + len(self.levels) - 1


def load_puzzle(source: Union[str, Path, dict]) -> AbstractPuzzle:
    """Read a puzzle from a JSON file or an already parsed dict."""
    if isinstance(source, dict):
        data = source
    else:
        path = Path(source)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ModelFormatError(f"cannot read puzzle {path}: {e}", path=str(path))
    try:
        return AbstractPuzzle.model_validate(data)
    except ValidationError as e:
        raise ModelFormatError(f"malformed puzzle: {e.errors()[0]['msg']}")

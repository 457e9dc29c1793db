"""
Markov-property validation of abstract puzzles.
"""

import logging
from collections import Counter
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from puzzle.models import AbstractPuzzle, PuzzlePiece


class MarkovViolationKind(str, Enum):
    UNKNOWN_PIECE = "unknown_piece"
    ORPHAN = "orphan"
    PARENT_DEPTH = "parent_depth"
    MISSING_IMAGE = "missing_image"
    PARENT_IMAGE_MISMATCH = "parent_image_mismatch"
    CONTAINMENT = "containment"
    EXCEPTIONAL_ANCESTRY = "exceptional_ancestry"
    NO_COMMON_ANCESTOR = "no_common_ancestor"
    NON_UNIFORM_SHIFT = "non_uniform_shift"


class MarkovViolation(BaseModel):
    kind: MarkovViolationKind
    witness: str = Field(..., description="Piece id exhibiting the problem")
    detail: str = ""


class MarkovReport(BaseModel):
    window: List[int]
    H: Optional[int] = Field(None, description="Uniform depth drop of declared images")
    pieces_checked: int = 0
    exceptional: List[str] = Field(default_factory=list)
    violations: List[MarkovViolation] = Field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


class MarkovValidator:
    """
    Checks a puzzle against:
    1. any two pieces have a common ancestor in the window
    2. every piece below the top depth has a parent one depth up
    3. f(P^p) = f(P)^p for non-exceptional pieces, and f(P) ⊂ Q ⊂ f(P^p)
       for exceptional ones
    4. every exceptional piece has a non-exceptional ancestor
    Relations that leave the window are skipped.
    """

    def __init__(self, puzzle: AbstractPuzzle):
        self.puzzle = puzzle
        self.logger = logging.getLogger(__name__)

    def validate(self) -> MarkovReport:
        puzzle = self.puzzle
        violations: List[MarkovViolation] = []

        def flag(kind: MarkovViolationKind, piece: PuzzlePiece, detail: str):
            violations.append(MarkovViolation(kind=kind, witness=piece.id, detail=detail))

        drops = Counter(
            piece.depth - puzzle.piece(piece.image).depth
            for piece in puzzle.pieces if puzzle.has(piece.image)
        )
        H = drops.most_common(1)[0][0] if drops else None
        edge = puzzle.lo + (H if H and H > 0 else 1)

        for piece in puzzle.pieces:
            # property 2
            if piece.parent is None:
                if piece.depth != puzzle.lo:
                    flag(MarkovViolationKind.ORPHAN, piece, "no parent below the top of the window")
            elif not puzzle.has(piece.parent):
                flag(MarkovViolationKind.UNKNOWN_PIECE, piece, f"unknown parent {piece.parent!r}")
            elif puzzle.piece(piece.parent).depth != piece.depth - 1:
                flag(MarkovViolationKind.PARENT_DEPTH, piece, f"parent {piece.parent!r} is not one depth up")

            if piece.exceptional:
                self._check_exceptional(piece, flag)
                continue

            if piece.image is None:
                if piece.depth >= edge:
                    flag(MarkovViolationKind.MISSING_IMAGE, piece, "non-exceptional piece without an image")
                continue
            if not puzzle.has(piece.image):
                flag(MarkovViolationKind.UNKNOWN_PIECE, piece, f"unknown image {piece.image!r}")
                continue

            image = puzzle.piece(piece.image)
            if H is not None and piece.depth - image.depth != H:
                flag(MarkovViolationKind.NON_UNIFORM_SHIFT, piece,
                     f"image drops {piece.depth - image.depth} depths, most pieces drop {H}")

            # property 3
            parent = puzzle.piece(piece.parent) if puzzle.has(piece.parent) else None
            if parent is None or parent.exceptional or not puzzle.has(parent.image):
                continue
            if image.parent is None:
                continue
            if image.parent != parent.image:
                flag(MarkovViolationKind.PARENT_IMAGE_MISMATCH, piece,
                     f"f(parent) = {parent.image!r} but parent of f(P) is {image.parent!r}")

        self._check_common_ancestor(violations)

        self.logger.debug(f"checked {len(puzzle.pieces)} pieces: {len(violations)} violation(s)")
        return MarkovReport(
            window=list(puzzle.window),
            H=H,
            pieces_checked=len(puzzle.pieces),
            exceptional=puzzle.exceptional_pieces(),
            violations=violations,
        )

    def _check_exceptional(self, piece: PuzzlePiece, flag):
        puzzle = self.puzzle
        ancestors = puzzle.ancestors(piece.id)[1:]
        if not any(not puzzle.piece(a).exceptional for a in ancestors):
            flag(MarkovViolationKind.EXCEPTIONAL_ANCESTRY, piece, "no non-exceptional ancestor in the window")
            return

        if piece.contained_in is None:
            return
        if not puzzle.has(piece.contained_in):
            flag(MarkovViolationKind.UNKNOWN_PIECE, piece, f"unknown containing piece {piece.contained_in!r}")
            return
        parent = puzzle.piece(piece.parent) if puzzle.has(piece.parent) else None
        if parent is None or parent.exceptional or not puzzle.has(parent.image):
            return
        # Q ⊂ f(P^p): f(P^p) is Q or one of its ancestors
        if parent.image not in puzzle.ancestors(piece.contained_in):
            flag(MarkovViolationKind.CONTAINMENT, piece,
                 f"{piece.contained_in!r} is not inside f(parent) = {parent.image!r}")

    def _check_common_ancestor(self, violations: List[MarkovViolation]):
        puzzle = self.puzzle
        tops = {}
        for piece in puzzle.pieces:
            tops.setdefault(puzzle.ancestors(piece.id)[-1], piece.id)
        if len(tops) > 1:
            first, *rest = sorted(tops)
            for top in rest:
                violations.append(MarkovViolation(
                    kind=MarkovViolationKind.NO_COMMON_ANCESTOR, witness=tops[top],
                    detail=f"top ancestor {top!r} differs from {first!r}",
                ))


def validate_markov(puzzle: AbstractPuzzle) -> MarkovReport:
    return MarkovValidator(puzzle).validate()

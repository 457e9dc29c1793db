"""
Induced dynamics of a puzzle, its tree with dynamics, and return nests.

The tree of a puzzle has the pieces as vertices, the piece parent as
parent and the induced map as F. Return nests of the puzzle are return
chains of that tree, so the nest machinery delegates to twd.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Union

from errors import ModelFormatError, NonUniformShift, UnresolvableExceptional
from puzzle.models import AbstractPuzzle, ReturnNest
from tree_models.table import TableTreeModel, VertexRecord
from twd.ends import End, EndTrace, PeriodicEnd
from twd.returns import ReturnAnalyzer

logger = logging.getLogger(__name__)


def induced_dynamics(puzzle: AbstractPuzzle) -> Dict[str, str]:
    """
    F_f on the window: declared images for non-exceptional pieces; an
    exceptional P maps to the unique child Q of F_f(P^p) compatible with
    the assertion f(P) ⊂ contained_in. Exceptional pieces are resolved
    depth by depth so F_f(P^p) is known first. Pieces whose image leaves
    the window are left out.
    """
    F: Dict[str, str] = {
        p.id: p.image for p in puzzle.pieces
        if not p.exceptional and puzzle.has(p.image)
    }

    exceptional = sorted((p for p in puzzle.pieces if p.exceptional), key=lambda p: (p.depth, p.id))
    for piece in exceptional:
        ancestors = puzzle.ancestors(piece.id)[1:]
        if all(puzzle.piece(a).exceptional for a in ancestors):
            raise UnresolvableExceptional(
                f"{piece.id!r} has no non-exceptional ancestor in the window", piece=piece.id)

        parent_image = F.get(piece.parent)
        if parent_image is None:
            logger.debug(f"{piece.id}: image of parent {piece.parent!r} leaves the window")
            continue

        candidates = puzzle.children(parent_image)
        if piece.contained_in is not None:
            if not puzzle.has(piece.contained_in):
                raise UnresolvableExceptional(
                    f"{piece.id!r} asserts containment in unknown piece {piece.contained_in!r}",
                    piece=piece.id)
            q_line = set(puzzle.ancestors(piece.contained_in))
            candidates = [
                c for c in candidates
                if c in q_line or piece.contained_in in puzzle.ancestors(c)
            ]
        if len(candidates) != 1:
            raise UnresolvableExceptional(
                f"{piece.id!r}: {len(candidates)} children of {parent_image!r} are compatible "
                f"with f(P) ⊂ {piece.contained_in!r}",
                piece=piece.id, candidates=sorted(candidates),
            )
        F[piece.id] = candidates[0]
        logger.debug(f"F({piece.id}) = {candidates[0]} (exceptional)")

    return F


def uniform_shift(puzzle: AbstractPuzzle, F: Dict[str, str]) -> int:
    drops = Counter(puzzle.piece(p).depth - puzzle.piece(q).depth for p, q in F.items())
    if len(drops) != 1:
        raise NonUniformShift(f"induced map drops depths by {sorted(drops)}", drops=sorted(drops))
    (H,) = drops
    return H


def tree_of_puzzle(puzzle: AbstractPuzzle, name: str = "puzzle") -> TableTreeModel:
    """
    The tree with dynamics of a puzzle. Standard puzzles (one piece per
    depth <= 0) continue upward as a root line below the window.
    """
    F = induced_dynamics(puzzle)
    H = uniform_shift(puzzle, F)
    vertices = [VertexRecord(id=p.id, level=p.depth, parent=p.parent) for p in puzzle.pieces]
    return TableTreeModel(vertices, F, H, puzzle.window, root_line=puzzle.is_standard(), name=name)


def nest_to_end(puzzle: AbstractPuzzle, ids: Sequence[str]) -> End:
    """
    The end of the derived tree through a nest of pieces given at
    consecutive depths. The nest is completed upward to depth 0 through
    parents; past its deepest piece the address takes child 0.
    """
    if not ids:
        raise ModelFormatError("a nest needs at least one piece")
    for upper, lower in zip(ids, ids[1:]):
        if puzzle.piece(lower).parent != upper:
            raise ModelFormatError(f"{lower!r} is not a child of {upper!r}", piece=lower)

    chain = list(reversed(puzzle.ancestors(ids[0])))[:-1] + list(ids)
    start = next((i for i, p in enumerate(chain) if puzzle.piece(p).depth == 0), None)
    if start is None:
        raise ModelFormatError("the nest does not reach depth 0 inside the window")
    if chain[start] != puzzle.at_depth(0)[0]:
        # ends are addressed from the derived tree's anchor, the first depth-0 piece
        raise ModelFormatError(f"the nest passes through {chain[start]!r}, not the anchor piece",
                               piece=chain[start])

    address = tuple(
        puzzle.children(upper).index(lower)
        for upper, lower in zip(chain[start:], chain[start + 1:])
    )
    return PeriodicEnd(address, (0,))


def return_nest(
    puzzle: AbstractPuzzle,
    nest: Union[End, Sequence[str]],
    l0: int = 0,
    K: int = 4,
    n_max: Optional[int] = None,
    k_lo: Optional[int] = None,
) -> ReturnNest:
    """The minimal return nest through depth l0 of a nest of pieces."""
    tree = tree_of_puzzle(puzzle)
    end = nest if isinstance(nest, End) else nest_to_end(puzzle, nest)
    chain = ReturnAnalyzer(tree).minimal_return_chain(end, l0=l0, K=K, n_max=n_max, k_lo=k_lo)
    trace = EndTrace(tree, end)
    pieces: List[str] = [trace.vertex(level).id for level in chain.levels]
    return ReturnNest(
        k_lo=chain.k_lo,
        levels=chain.levels,
        times=chain.times,
        pieces=pieces,
        nonrecurrent_at=chain.nonrecurrent_at,
    )

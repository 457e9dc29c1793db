"""
Abstract puzzles, their induced dynamics and return nests.
"""

from puzzle.builders import piece_id, puzzle_from_model
from puzzle.dynamics import induced_dynamics, nest_to_end, return_nest, tree_of_puzzle, uniform_shift
from puzzle.export import puzzle_to_dot, tree_to_dot
from puzzle.markov import MarkovReport, MarkovValidator, MarkovViolation, MarkovViolationKind, validate_markov
from puzzle.models import AbstractPuzzle, PuzzlePiece, ReturnNest, load_puzzle

__all__ = [
    "PuzzlePiece",
    "AbstractPuzzle",
    "ReturnNest",
    "load_puzzle",
    "MarkovReport",
    "MarkovViolation",
    "MarkovViolationKind",
    "MarkovValidator",
    "validate_markov",
    "induced_dynamics",
    "uniform_shift",
    "tree_of_puzzle",
    "nest_to_end",
    "return_nest",
    "puzzle_from_model",
    "piece_id",
    "tree_to_dot",
    "puzzle_to_dot",
]

__version__ = "1.0.0"

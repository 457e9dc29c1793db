"""
DOT export for trees with dynamics and puzzles.
Vertices of one level share a rank; F is drawn as dashed edges.
"""

from typing import List

from errors import LabError
from puzzle.dynamics import tree_of_puzzle
from puzzle.models import AbstractPuzzle
from twd.models import VertexRef
from twd.tree import TreeModel


def _node(v: VertexRef) -> str:
    return f'"{v.id or "v"}@{v.level}"'


def _level_to_dot(level: int, vertices: List[VertexRef]) -> str:
    """
    Outputs one level in DOT format.
    """
    level_dot = f'\t{{ rank=same; // level {level}\n'
    for v in vertices:
        level_dot += f'\t\t{_node(v)} [label="{v.id or "v"}"];\n'
    level_dot += '\t}\n'
    return level_dot


def tree_to_dot(model: TreeModel, lo: int, hi: int, dynamics: bool = True) -> str:
    """
    Returns the levels lo..hi of a model in DOT notation.
    """
    levels = {level: model.level_vertices(level) for level in range(lo, hi + 1)}
    shown = {v for vertices in levels.values() for v in vertices}

    graphstring = 'digraph {\n'
    graphstring += '\tnode [shape=box];\n'
    graphstring += '\trankdir=TB;\n'

    for level, vertices in levels.items():
        graphstring += _level_to_dot(level, vertices)

    for level, vertices in levels.items():
        if level == lo:
            continue
        for v in vertices:
            p = model.parent(v)
            if p in shown:
                graphstring += f'\t{_node(p)} -> {_node(v)};\n'

    if dynamics:
        for vertices in levels.values():
            for v in vertices:
                try:
                    w = model.image(v)
                except LabError:
                    continue
                if w in shown:
                    graphstring += f'\t{_node(v)} -> {_node(w)} [style=dashed, constraint=false];\n'

    graphstring += '}\n'
    return graphstring


def puzzle_to_dot(puzzle: AbstractPuzzle, dynamics: bool = True) -> str:
    return tree_to_dot(tree_of_puzzle(puzzle), puzzle.lo, puzzle.hi, dynamics=dynamics)

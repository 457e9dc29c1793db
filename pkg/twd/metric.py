"""
Gromov metric on ends: d(x, y) = gamma^(-L), L the last level where x and y agree.
"""

from twd.ends import End, EndTrace
from twd.models import GromovDistance
from twd.tree import TreeModel


def gromov_distance(model: TreeModel, x: End, y: End, gamma: float = 2.0,
                    l_max: int = 64) -> GromovDistance:
    if gamma <= 1:
        raise ValueError(f"gamma must exceed 1, got {gamma}")

    tx, ty = EndTrace(model, x), EndTrace(model, y)
    # both ends start at the anchor, so they agree at level 0
    agreement = 0
    for level in range(1, l_max + 1):
        if tx.vertex(level) != ty.vertex(level):
            return GromovDistance(distance=gamma ** -agreement, agreement_level=agreement)
        agreement = level
    return GromovDistance(distance=gamma ** -l_max, agreement_level=l_max, at_cap=True)

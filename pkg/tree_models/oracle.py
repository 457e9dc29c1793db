"""
Brute-force string oracle for the binary model.

F on the binary tree is the one-sided shift, so F^n(x_l) lies on the end
exactly when the length-(l-n) prefix is a suffix of the length-l prefix.
The first return of x_l is therefore l - b(l), where b is the longest
proper border. Everything here is deliberately naive (quadratic and
worse) so it stays independent of the return engine.
"""

from typing import List, Union

from errors import NoSuchLevel
from twd.ends import End


def _as_word(source: Union[str, End], length: int) -> str:
    if isinstance(source, End):
        return source.word(length)
    if len(source) < length:
        raise ValueError(f"word has {len(source)} letters, level {length} needs more")
    return source[:length]


def border_array(word: str) -> List[int]:
    """b(l) for l = 1..len(word), by checking every candidate border."""
    if not word:
        raise ValueError("word must be nonempty")
    borders = []
    for l in range(1, len(word) + 1):
        prefix = word[:l]
        best = 0
        for b in range(1, l):
            if prefix[:b] == prefix[l - b:]:
                best = b
        borders.append(best)
    return borders


def oracle_first_return(source: Union[str, End], level: int) -> int:
    if level < 1:
        raise ValueError(f"level must be positive, got {level}")
    word = _as_word(source, level)
    return level - border_array(word)[-1]


def oracle_minimal_chain(source: Union[str, End], K: int, scan: int = 1024) -> List[int]:
    """
    Levels l(0..K) with l(0) = 0 and l(k+1) the least l whose longest
    border has length l(k). A word source bounds the scan by its length.
    """
    word = source if isinstance(source, str) else _as_word(source, scan)
    borders = border_array(word)
    levels = [0]
    for _ in range(K):
        target = levels[-1]
        found = next((l for l in range(target + 1, len(word) + 1) if borders[l - 1] == target), None)
        if found is None:
            raise NoSuchLevel(f"no level up to {len(word)} has a border of length {target}", levels)
        levels.append(found)
    return levels


def oracle_chain_times(levels: List[int]) -> List[int]:
    """n_k = l(k) - l(k-1) for k >= 1 (H = 1)."""
    return [upper - lower for lower, upper in zip(levels, levels[1:])]

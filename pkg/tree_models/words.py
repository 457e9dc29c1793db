"""
Deterministic bit-words used as end addresses.

Fibonacci convention: S_1 = "0", S_2 = "01", S_(k+1) = S_k S_(k-1),
so the limit word starts 0100101001001...
"""

import random
from enum import Enum
from typing import Optional

from twd.ends import GeneratedEnd


class WordName(str, Enum):
    FIBONACCI = "fibonacci"
    THUE_MORSE = "thue_morse"
    PERIODIC = "periodic"
    RANDOM = "random"


def fibonacci(L: int) -> str:
    older, word = "0", "01"
    while len(word) < L:
        older, word = word, word + older
    return word[:L]


def thue_morse(L: int) -> str:
    return "".join(str(bin(i).count("1") % 2) for i in range(L))


def periodic(block: str, L: int) -> str:
    if not block:
        raise ValueError("periodic block must be nonempty")
    return (block * (L // len(block) + 1))[:L]


def random_word(seed: int, L: int) -> str:
    rng = random.Random(seed)
    return "".join(rng.choice("01") for _ in range(L))


def word_generators(name: WordName, L: int, block: Optional[str] = None,
                    seed: Optional[int] = None) -> str:
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    name = WordName(name)
    if name == WordName.FIBONACCI:
        return fibonacci(L)
    if name == WordName.THUE_MORSE:
        return thue_morse(L)
    if name == WordName.PERIODIC:
        return periodic(block or "", L)
    return random_word(0 if seed is None else seed, L)


def fibonacci_end() -> GeneratedEnd:
    return GeneratedEnd("fib", fibonacci)


def thue_morse_end() -> GeneratedEnd:
    return GeneratedEnd("tm", thue_morse)

"""
Catalog of built-in models and ends, addressed by short reference strings.

Model refs: binary, z2:F:<H>, z2:G:<H>, json:<path>,
random:<seed>[:<max_branching>[:<depth>]].
End refs: fib, tm, periodic:<word>, word:<preperiod>:<period>.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from errors import ModelFormatError
from tree_models.binary import BinaryModel
from tree_models.random_model import RandomTreeModel
from tree_models.table import TableTreeModel
from tree_models.words import fibonacci_end, thue_morse_end
from tree_models.z2 import Z2Model, Z2Variant
from twd.ends import End, PeriodicEnd
from twd.tree import TreeModel

logger = logging.getLogger(__name__)


@dataclass
class CatalogEntry:
    name: str
    description: str
    syntax: str
    factory: Callable[[List[str]], object]


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ModelFormatError(f"{what} must be an integer, got {text!r}")


def _bits(text: str, what: str) -> tuple:
    if not text.isdigit():
        raise ModelFormatError(f"{what} must be a string of digits, got {text!r}")
    return tuple(int(c) for c in text)


def _z2(variant: Z2Variant) -> Callable[[List[str]], TreeModel]:
    def build(args: List[str]) -> TreeModel:
        if len(args) != 1:
            raise ModelFormatError(f"expected z2:{variant.value}:<H>")
        return Z2Model(_int(args[0], "H"), variant)
    return build


def _random(args: List[str]) -> TreeModel:
    if not 1 <= len(args) <= 3:
        raise ModelFormatError("expected random:<seed>[:<max_branching>[:<depth>]]")
    seed = _int(args[0], "seed")
    branching = _int(args[1], "max_branching") if len(args) > 1 else 4
    depth = _int(args[2], "depth") if len(args) > 2 else None
    try:
        return RandomTreeModel(seed, branching, depth)
    except ValueError as e:
        raise ModelFormatError(str(e))


def _periodic(args: List[str]) -> End:
    if len(args) != 1 or not args[0]:
        raise ModelFormatError("expected periodic:<word>")
    return PeriodicEnd((), _bits(args[0], "period"))


def _word(args: List[str]) -> End:
    if len(args) != 2 or not args[1]:
        raise ModelFormatError("expected word:<preperiod>:<period>")
    pre = _bits(args[0], "preperiod") if args[0] else ()
    return PeriodicEnd(pre, _bits(args[1], "period"))


class ModelCatalog:
    """Resolves model and end references."""

    def __init__(self):
        self.models = self._create_models()
        self.ends = self._create_ends()

    def _create_models(self) -> Dict[str, CatalogEntry]:
        return {
            "binary": CatalogEntry("binary", "Disconnected quadratic tree, F = one-sided shift", "binary",
                                   lambda args: BinaryModel()),
            "z2:F": CatalogEntry("z2:F", "Z^2 tree with the automorphism (l, m) -> (l-H, m)", "z2:F:<H>",
                                 _z2(Z2Variant.F)),
            "z2:G": CatalogEntry("z2:G", "Z^2 tree with the collapse (l, m) -> (l-H, 0)", "z2:G:<H>",
                                 _z2(Z2Variant.G)),
            "json": CatalogEntry("json", "Tabulated model read from a JSON file", "json:<path>",
                                 lambda args: TableTreeModel.from_json(":".join(args))),
            "random": CatalogEntry("random", "Seeded random rooted tree with H = 1",
                                   "random:<seed>[:<max_branching>[:<depth>]]", _random),
        }

    def _create_ends(self) -> Dict[str, CatalogEntry]:
        return {
            "fib": CatalogEntry("fib", "Fibonacci word 0100101001001...", "fib", lambda args: fibonacci_end()),
            "tm": CatalogEntry("tm", "Thue-Morse word 0110100110010110...", "tm", lambda args: thue_morse_end()),
            "periodic": CatalogEntry("periodic", "Purely periodic address", "periodic:<word>", _periodic),
            "word": CatalogEntry("word", "Eventually periodic address u v v v ...", "word:<preperiod>:<period>",
                                 _word),
        }

    def _lookup(self, table: Dict[str, CatalogEntry], ref: str, what: str) -> Optional[object]:
        parts = ref.split(":")
        # two-part keys (z2:F) take precedence over one-part keys
        for width in (2, 1):
            key = ":".join(parts[:width])
            if len(parts) >= width and key in table:
                logger.debug(f"resolved {what} ref {ref!r} via {key!r}")
                return table[key].factory(parts[width:])
        raise ModelFormatError(f"unknown {what} ref {ref!r}; known: {sorted(table)}", ref=ref)

    def get_model(self, ref: str) -> TreeModel:
        return self._lookup(self.models, ref, "model")

    def get_end(self, ref: str) -> End:
        return self._lookup(self.ends, ref, "end")

    def get_all_models(self) -> List[Dict]:
        return [{"name": e.name, "syntax": e.syntax, "description": e.description} for e in self.models.values()]

    def get_all_ends(self) -> List[Dict]:
        return [{"name": e.name, "syntax": e.syntax, "description": e.description} for e in self.ends.values()]


# Global catalog instance
CATALOG = ModelCatalog()


def resolve_model(ref: str) -> TreeModel:
    return CATALOG.get_model(ref)


def resolve_end(ref: str) -> End:
    return CATALOG.get_end(ref)

"""
Built-in trees with dynamics, address words and the border oracle.
"""

from tree_models.binary import BinaryModel
from tree_models.catalog import CATALOG, ModelCatalog, resolve_end, resolve_model
from tree_models.oracle import border_array, oracle_chain_times, oracle_first_return, oracle_minimal_chain
from tree_models.random_model import RandomTreeModel
from tree_models.table import TableSpec, TableTreeModel
from tree_models.words import (
    WordName,
    fibonacci,
    fibonacci_end,
    periodic,
    random_word,
    thue_morse,
    thue_morse_end,
    word_generators,
)
from tree_models.z2 import Z2Model, Z2Variant

__all__ = [
    "BinaryModel",
    "Z2Model",
    "Z2Variant",
    "TableTreeModel",
    "TableSpec",
    "RandomTreeModel",
    "border_array",
    "oracle_first_return",
    "oracle_minimal_chain",
    "oracle_chain_times",
    "WordName",
    "word_generators",
    "fibonacci",
    "thue_morse",
    "periodic",
    "random_word",
    "fibonacci_end",
    "thue_morse_end",
    "ModelCatalog",
    "CATALOG",
    "resolve_model",
    "resolve_end",
]

__version__ = "1.0.0"

"""
Output formatting: CSV through pandas, JSON with sorted keys, DOT text.
Every formatter returns a string ending in a newline.
"""

import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd


class OutputFormat:
    CSV = "csv"
    JSON = "json"
    DOT = "dot"


def to_csv(rows: List[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    frame = pd.DataFrame(rows, columns=list(columns) if columns else None)
    return frame.to_csv(index=False, lineterminator="\n")


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n"


def render(payload: Any, fmt: str, rows: Optional[List[Dict[str, Any]]] = None,
           columns: Optional[Sequence[str]] = None) -> str:
    """JSON of ``payload`` or CSV of ``rows`` (falling back to the payload)."""
    if fmt == OutputFormat.CSV:
        if rows is None:
            rows = payload if isinstance(payload, list) else [payload]
        return to_csv(rows, columns)
    return to_json(payload)

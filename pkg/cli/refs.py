"""
Parsing of the short reference strings accepted on the command line.

r refs:      pow2 | identity | fib | const:<r> | sharp:<J>
             indicator:pow2:<a>:<b> | indicator:mod:<m>:<res>:<a>:<b>
             table:<r1,r2,...>:<tail r ref>
model refs:  see tree_models.catalog
end refs:    see tree_models.catalog
"""

from typing import List

from errors import InvalidRSpec
from metafib.models import RSpec
from tree_models.catalog import resolve_end, resolve_model

__all__ = ["parse_rspec", "parse_int_list", "parse_id_list", "resolve_model", "resolve_end"]


def _ints(parts: List[str], ref: str) -> List[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidRSpec(f"non-integer argument in r ref {ref!r}", ref=ref)


def parse_rspec(ref: str) -> RSpec:
    head, _, rest = ref.partition(":")
    args = rest.split(":") if rest else []
    try:
        if head == "pow2" and not args:
            return RSpec.power_of_two()
        if head == "identity" and not args:
            return RSpec.identity()
        if head == "fib" and not args:
            return RSpec.fibonacci()
        if head == "const" and len(args) == 1:
            return RSpec.constant(*_ints(args, ref))
        if head == "sharp" and len(args) == 1:
            (J,) = _ints(args, ref)
            if J < 1:
                raise InvalidRSpec(f"J must be positive in {ref!r}", ref=ref)
            return RSpec.sharpness(J)
        if head == "indicator" and args[:1] == ["pow2"] and len(args) == 3:
            return RSpec.indicator_power_of_two(*_ints(args[1:], ref))
        if head == "indicator" and args[:1] == ["mod"] and len(args) == 5:
            m, res, a, b = _ints(args[1:], ref)
            return RSpec.indicator_residue(m, res, a, b)
        if head == "table" and args:
            values = _ints([v for v in args[0].split(",") if v], ref)
            tail = parse_rspec(":".join(args[1:])) if len(args) > 1 else None
            return RSpec.table({k: r for k, r in enumerate(values, start=1)}, tail=tail)
    except ValueError as e:
        if isinstance(e, InvalidRSpec):
            raise
        raise InvalidRSpec(f"invalid r ref {ref!r}: {e}", ref=ref)
    raise InvalidRSpec(f"unknown r ref {ref!r}", ref=ref)


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InvalidRSpec(f"expected comma-separated integers, got {text!r}")


def parse_id_list(text: str) -> List[str]:
    return [v.strip() for v in text.split(",") if v.strip()]

"""JSON encoding and flag parsing shared by the CLI and the fixture replayer.

Rationals are serialized as strings ("3", "-1/2") so nothing is ever forced
through floating point.  Compositions serialize as arrays of integers, the
empty composition as [].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .compositions import canonical_key
from .errors import InvalidCompositionError
from .poly import SparsePoly


def frac_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def parse_frac(text: str | int) -> Fraction:
    return Fraction(text)


def parse_composition(text: str) -> tuple[int, ...]:
    """Comma-separated parts; the empty string is the empty composition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise InvalidCompositionError(f"cannot parse composition from {text!r}") from exc


def parse_partition_tuple(text: str) -> tuple[tuple[int, ...], ...]:
    """Semicolon-separated partitions, each a comma list."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_composition(chunk) for chunk in text.split(";"))


def string_key(exps: Sequence[int]) -> str:
    return ",".join(str(x) for x in exps)


def poly_to_json(f: SparsePoly) -> list[dict[str, Any]]:
    return [
        {"exp": list(exps), "coeff": frac_str(coeff)}
        for exps, coeff in f.sorted_terms()
    ]


def comp_map_to_json(coords: Mapping[tuple[int, ...], Fraction | int]) -> list[dict[str, Any]]:
    return [
        {"comp": list(comp), "coeff": frac_str(coords[comp])}
        for comp in sorted(coords, key=canonical_key)
        if coords[comp]
    ]


def comp_map_from_json(items: Iterable[Mapping[str, Any]]) -> dict[tuple[int, ...], Fraction]:
    return {tuple(entry["comp"]): parse_frac(entry["coeff"]) for entry in items}

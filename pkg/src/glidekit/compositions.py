"""Compositions, weak compositions, run encodings, and (semi)standardization.

A composition is a tuple of strictly positive integers, a weak composition a
tuple of nonnegative integers.  Both are represented as plain tuples; the
empty composition ``()`` is a first-class value (it indexes the unit class).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidCompositionError, SizeMismatchError

Composition = tuple[int, ...]
WeakComposition = tuple[int, ...]


def as_composition(parts: Iterable[int]) -> Composition:
    """Validate and normalize to a composition (every part >= 1)."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise InvalidCompositionError(f"composition parts must be >= 1: {alpha}")
    return alpha


def as_weak_composition(parts: Iterable[int]) -> WeakComposition:
    """Validate and normalize to a weak composition (every part >= 0)."""
    w = tuple(int(p) for p in parts)
    if any(p < 0 for p in w):
        raise InvalidCompositionError(f"weak composition parts must be >= 0: {w}")
    return w


def positive_part(w: Sequence[int]) -> Composition:
    """Delete all zero entries, preserving the order of the rest."""
    return tuple(p for p in w if p != 0)


def canonical_key(alpha: Sequence[int]) -> tuple[int, int, tuple[int, ...]]:
    """Sort key for compositions: by size, then length, then lexicographic.

    Used wherever composition-keyed mappings are serialized, so output is
    reproducible.
    """
    return (sum(alpha), len(alpha), tuple(alpha))


def run_encode(alpha: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Group equal adjacent parts into (value, multiplicity) runs."""
    runs: list[tuple[int, int]] = []
    for p in alpha:
        if runs and runs[-1][0] == p:
            runs[-1] = (p, runs[-1][1] + 1)
        else:
            runs.append((p, 1))
    return tuple(runs)


def run_decode(runs: Iterable[tuple[int, int]]) -> Composition:
    """Expand (value, multiplicity) runs back into a composition."""
    out: list[int] = []
    for value, mult in runs:
        out.extend([value] * mult)
    return tuple(out)


class SortingData(NamedTuple):
    """The shortest sorting permutation of a composition and its companion.

    ``omega`` is in one-line notation: omega[i-1] is the index (1-based) of
    the part placed i-th when the parts are sorted ascending, ties broken by
    original position.  ``beta`` has beta_i = omega^{-1}(i), a composition
    with pairwise distinct parts {1, ..., N}.
    """

    omega: tuple[int, ...]
    beta: Composition


def sorting_data(alpha: Sequence[int]) -> SortingData:
    n = len(alpha)
    omega = tuple(sorted(range(1, n + 1), key=lambda i: (alpha[i - 1], i)))
    inverse = [0] * n
    for i, w in enumerate(omega, start=1):
        inverse[w - 1] = i
    return SortingData(omega=omega, beta=tuple(inverse))


def _replace_nonzero(tau: Sequence[int], values: Sequence[int]) -> WeakComposition:
    nonzero = [i for i, p in enumerate(tau) if p != 0]
    if len(nonzero) != len(values):
        raise SizeMismatchError(
            f"expected {len(values)} nonzero entries, found {len(nonzero)} in {tuple(tau)}"
        )
    out = list(tau)
    for i, v in zip(nonzero, values):
        out[i] = v
    return tuple(out)


def standardize(tau: Sequence[int], data: SortingData) -> WeakComposition:
    """Rewrite the i-th nonzero entry of ``tau`` as beta_i."""
    return _replace_nonzero(tau, data.beta)


def semistandardize(tau: Sequence[int], alpha: Sequence[int]) -> WeakComposition:
    """Rewrite the i-th nonzero entry of ``tau`` as alpha_i."""
    return _replace_nonzero(tau, tuple(alpha))

"""String posets: zero-paddings of a composition, closed under componentwise max.

The poset P(alpha, n) lives inside length-n weak compositions, ordered
componentwise.  Adjoining a formal bottom element makes it a lattice; meets
that only exist through the bottom are reported as the BOTTOM sentinel.

The Mobius function here uses the convention that the values below any
element sum to 1 (so every minimal element gets 1); it is the negative of
the traditional bottom-augmented Mobius function.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .compositions import Composition, WeakComposition, as_composition
from .errors import OutOfRangeError, LengthMismatchError


class _Bottom:
    """Sentinel for the adjoined minimum element; never a string value."""

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = _Bottom()


def join(p: Sequence[int], q: Sequence[int]) -> WeakComposition:
    """Componentwise maximum."""
    if len(p) != len(q):
        raise LengthMismatchError(f"join of strings of lengths {len(p)} and {len(q)}")
    return tuple(max(a, b) for a, b in zip(p, q))


def leq(p: Sequence[int], q: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(p, q))


def atoms(alpha: Iterable[int], n: int) -> frozenset[WeakComposition]:
    """All length-n strings obtained from alpha by inserting zeros."""
    a = as_composition(alpha)
    k = len(a)
    if n < k:
        raise OutOfRangeError(f"need n >= {k} slots for {a}, got {n}")
    out = set()
    for positions in combinations(range(n), k):
        s = [0] * n
        for pos, part in zip(positions, a):
            s[pos] = part
        out.add(tuple(s))
    return frozenset(out)


class GlidePoset:
    """Closure of the zero-paddings of ``alpha`` under componentwise max.

    Elements are stored lexicographically sorted, so iteration order, linear
    extensions, and serialized output are deterministic.  Instances are
    immutable after construction.
    """

    def __init__(self, alpha: Composition, n: int, elements: frozenset[WeakComposition]):
        self.alpha = alpha
        self.n = n
        self.elements = tuple(sorted(elements))
        self.atom_set = atoms(alpha, n)
        self._index = {p: i for i, p in enumerate(self.elements)}
        self._mobius: dict[WeakComposition, int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._index

    def index(self, p: Sequence[int]) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise OutOfRangeError(f"{tuple(p)} is not an element of this poset") from None

    def _downset(self, p: WeakComposition) -> list[WeakComposition]:
        return [q for q in self.elements if leq(q, p)]

    def mobius(self) -> dict[WeakComposition, int]:
        """Unique table with sum over {q <= p} of mu(q) equal to 1, for all p.

        Computed bottom-up along the linear extension by increasing entry sum.
        """
        if self._mobius is None:
            mu: dict[WeakComposition, int] = {}
            for p in sorted(self.elements, key=lambda e: (sum(e), e)):
                below = sum(mu[q] for q in self.elements if q != p and leq(q, p))
                mu[p] = 1 - below
            self._mobius = mu
        return dict(self._mobius)

    def mobius_crosscut(self, sigma: Sequence[int]) -> int:
        """Independent Mobius oracle via subsets of atoms joining to sigma.

        Exponential in the number of atoms below sigma; intended for
        cross-validation at small sizes (at most ~20 atoms).
        """
        s = tuple(sigma)
        if s not in self._index:
            raise OutOfRangeError(f"{s} is not an element of this poset")
        below = [a for a in sorted(self.atom_set) if leq(a, s)]
        total = 0
        for r in range(1, len(below) + 1):
            for subset in combinations(below, r):
                acc = subset[0]
                for a in subset[1:]:
                    acc = join(acc, a)
                if acc == s:
                    total += (-1) ** r
        return -total

    def meet(self, p: Sequence[int], q: Sequence[int]):
        """Greatest common lower bound within the poset, or BOTTOM if none."""
        pt, qt = tuple(p), tuple(q)
        for x in (pt, qt):
            if x not in self._index:
                raise OutOfRangeError(f"{x} is not an element of this poset")
        bounds = [r for r in self.elements if leq(r, pt) and leq(r, qt)]
        if not bounds:
            return BOTTOM
        best = bounds[0]
        for r in bounds[1:]:
            best = join(best, r)
        # the join of all lower bounds is itself a lower bound, by closure
        return best

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations as index pairs (i, j) with element i covered by j."""
        by_sum: dict[int, list[WeakComposition]] = {}
        for e in self.elements:
            by_sum.setdefault(sum(e), []).append(e)
        out = []
        for p in self.elements:
            for q in self.elements:
                if p == q or not leq(p, q):
                    continue
                strictly_between = any(
                    z != p and z != q and leq(p, z) and leq(z, q)
                    for s in range(sum(p) + 1, sum(q))
                    for z in by_sum.get(s, ())
                )
                if not strictly_between:
                    out.append((self._index[p], self._index[q]))
        return sorted(out)

    def is_lattice_with_bottom(self) -> bool:
        """Check every pair has a join in the poset and a meet once BOTTOM is adjoined."""
        element_set = set(self.elements)
        for p, q in combinations(self.elements, 2):
            if join(p, q) not in element_set:
                return False
            m = self.meet(p, q)
            if m is not BOTTOM:
                if not (leq(m, p) and leq(m, q)):
                    return False
                for r in self.elements:
                    if leq(r, p) and leq(r, q) and not leq(r, m):
                        return False
        return True


def build_poset(alpha: Iterable[int], n: int) -> GlidePoset:
    """Join-closure of the zero-paddings of alpha inside length-n strings."""
    a = as_composition(alpha)
    base = atoms(a, n)
    elements = set(base)
    frontier = list(base)
    while frontier:
        snapshot = tuple(elements)
        fresh = []
        for p in frontier:
            for q in snapshot:
                j = join(p, q)
                if j not in elements:
                    elements.add(j)
                    fresh.append(j)
        frontier = fresh
    return GlidePoset(a, n, frozenset(elements))

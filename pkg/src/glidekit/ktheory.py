"""Truncated K-ring pipeline for products of projective spaces.

Everything happens in Q[y_1..y_n]/(y_i^(m+1)): structure classes of products
of projective subspaces are monomials in the y_i, unions of such products get
their class from an inclusion-exclusion weighted by a Mobius function on the
poset of components (computed here by its own downward recurrence, never
borrowed from the string-poset engine), and the Chern character substitutes
the truncated exponential series for each variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, gcd
from typing import Iterable, Sequence

from .compositions import Composition, as_composition, positive_part
from .errors import LengthMismatchError, OutOfRangeError
from .poly import SparsePoly


@dataclass(frozen=True)
class KRingElement:
    """Polynomial in y_1..y_n with every exponent capped at m.

    Reduction (dropping monomials with an exponent above the cap) is applied
    eagerly at construction and after every product.
    """

    poly: SparsePoly
    m: int

    def __post_init__(self):
        reduced = {
            e: c for e, c in self.poly.terms.items() if all(x <= self.m for x in e)
        }
        object.__setattr__(self, "poly", SparsePoly(self.poly.nvars, reduced))

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def __add__(self, other: "KRingElement") -> "KRingElement":
        self._check(other)
        return KRingElement(self.poly + other.poly, self.m)

    def __mul__(self, other: "KRingElement") -> "KRingElement":
        self._check(other)
        return KRingElement(self.poly * other.poly, self.m)

    def restrict(self, n: int, m: int) -> "KRingElement":
        """Map to fewer variables (killing the tail) and a lower cap."""
        if m > self.m:
            raise OutOfRangeError(f"cannot raise truncation degree {self.m} to {m}")
        return KRingElement(self.poly.restrict(n), m)

    def _check(self, other: "KRingElement") -> None:
        if self.m != other.m:
            raise LengthMismatchError(f"truncation degrees differ: {self.m} vs {other.m}")


def projective_structure_class(r: int, m: int) -> KRingElement:
    """Class of an r-dimensional linear subspace in one variable: y^(m-r)."""
    if not 0 <= r <= m:
        raise OutOfRangeError(f"need 0 <= r <= m, got r={r}, m={m}")
    return KRingElement(SparsePoly.monomial((m - r,)), m)


def line_bundle_to_y(coeffs: Sequence[Fraction | int], m: int) -> KRingElement:
    """Change of basis from twisting-sheaf classes to powers of y.

    ``coeffs[i]`` is the coefficient of the class twisted by -i; that class
    equals (1 - y)^i.
    """
    if len(coeffs) != m + 1:
        raise OutOfRangeError(f"expected {m + 1} coefficients, got {len(coeffs)}")
    out = [Fraction(0)] * (m + 1)
    for i, c in enumerate(coeffs):
        cf = Fraction(c)
        if not cf:
            continue
        for j in range(i + 1):
            out[j] += cf * (-1) ** j * comb(i, j)
    return KRingElement(SparsePoly(1, {(j,): c for j, c in enumerate(out) if c}), m)


def y_to_line_bundle(element: KRingElement) -> tuple[Fraction, ...]:
    """Inverse change of basis: expand powers of y over twisting-sheaf classes."""
    if element.nvars != 1:
        raise LengthMismatchError("line bundle expansion needs a one-variable element")
    m = element.m
    out = [Fraction(0)] * (m + 1)
    for (j,), c in element.poly.terms.items():
        for i in range(j + 1):
            out[i] += c * (-1) ** i * comb(j, i)
    return tuple(out)


@dataclass(frozen=True)
class SchubertUnion:
    """Union of products of projective subspaces dual to a padded cell.

    One component per order-preserving placement of alpha into n slots; the
    component records codimension data r_i = m - (padded alpha)_i.
    """

    alpha: Composition
    n: int
    m: int
    components: frozenset[tuple[int, ...]]


def z_locus(alpha: Iterable[int], n: int, m: int) -> SchubertUnion:
    a = as_composition(alpha)
    if n < len(a):
        raise OutOfRangeError(f"need n >= {len(a)} slots for {a}, got {n}")
    if a and m < max(a):
        raise OutOfRangeError(f"need m >= {max(a)} for {a}, got {m}")
    comps = set()
    for positions in combinations(range(n), len(a)):
        b = [0] * n
        for i, part in zip(positions, a):
            b[i] = part
        comps.add(tuple(m - x for x in b))
    return SchubertUnion(alpha=a, n=n, m=m, components=frozenset(comps))


def _intersection_closure(components: frozenset[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Close a set of subspace-dimension tuples under componentwise min."""
    elements = set(components)
    frontier = list(elements)
    while frontier:
        snapshot = tuple(elements)
        fresh = []
        for p in frontier:
            for q in snapshot:
                meet = tuple(min(a, b) for a, b in zip(p, q))
                if meet not in elements:
                    elements.add(meet)
                    fresh.append(meet)
        frontier = fresh
    return sorted(elements)


def knutson_class(alpha: Iterable[int], n: int, m: int) -> KRingElement:
    """Structure-sheaf class of the dual union, by Mobius inclusion-exclusion.

    The poset is the intersection closure of the components, ordered by
    inclusion (componentwise comparison of dimension tuples); its Mobius
    function is pinned by requiring the values above any element to sum to 1
    and is computed top-down here, independently of the string-poset engine.
    """
    locus = z_locus(alpha, n, m)
    elements = _intersection_closure(locus.components)
    mu: dict[tuple[int, ...], int] = {}
    for w in sorted(elements, key=lambda e: (-sum(e), e)):
        above = sum(
            mu[v] for v in elements if v != w and all(a >= b for a, b in zip(v, w))
        )
        mu[w] = 1 - above
    terms: dict[tuple[int, ...], int] = {}
    for w, c in mu.items():
        if c:
            terms[tuple(m - r for r in w)] = c
    return KRingElement(SparsePoly(n, terms), m)


@lru_cache(maxsize=None)
def chern_series_coeffs(m: int) -> tuple[Fraction, ...]:
    """Degree-m truncation of 1 - exp(-x): coefficient of x^j is (-1)^(j+1)/j!."""
    return tuple(
        Fraction(0) if j == 0 else Fraction((-1) ** (j + 1), factorial(j))
        for j in range(m + 1)
    )


@lru_cache(maxsize=None)
def _chern_power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Coefficient lists of the truncated series raised to powers 0..m."""
    series = chern_series_coeffs(m)
    powers = [(Fraction(1),) + (Fraction(0),) * m]
    current = powers[0]
    for _ in range(m):
        nxt = [Fraction(0)] * (m + 1)
        for i, a in enumerate(current):
            if not a:
                continue
            for j, b in enumerate(series):
                if b and i + j <= m:
                    nxt[i + j] += a * b
        current = tuple(nxt)
        powers.append(current)
    return tuple(powers)


def chern_substitute(element: KRingElement, m: int | None = None) -> SparsePoly:
    """Substitute the truncated exponential series for each variable.

    Replaces y_i by x_i - x_i^2/2 + x_i^3/6 - ... (up to degree m) and
    reduces modulo x_i^(m+1); coefficients stay exact rationals.
    """
    if m is None:
        m = element.m
    if m != element.m:
        raise OutOfRangeError(f"substitution degree {m} differs from element cap {element.m}")
    # all series coefficients become integers after scaling by m!, so the
    # hot accumulation runs on integers over one common denominator
    scale = factorial(m)
    int_table = [
        [(d, int(c * scale)) for d, c in enumerate(row) if c]
        for row in _chern_power_table(m)
    ]
    n = element.nvars
    lcm_coeff = 1
    for coeff in element.poly.terms.values():
        lcm_coeff = lcm_coeff * coeff.denominator // gcd(lcm_coeff, coeff.denominator)
    denominator = scale**n * lcm_coeff
    out: dict[tuple[int, ...], int] = {}
    for exps, coeff in element.poly.terms.items():
        active = [i for i, e in enumerate(exps) if e]
        start = (
            coeff.numerator
            * (lcm_coeff // coeff.denominator)
            * scale ** (n - len(active))
        )
        partial: dict[tuple[int, ...], int] = {(): start}
        for i in active:
            row = int_table[exps[i]]
            nxt: dict[tuple[int, ...], int] = {}
            for prefix, c in partial.items():
                for d, sc in row:
                    key = prefix + (d,)
                    nxt[key] = nxt.get(key, 0) + c * sc
            partial = nxt
        for key, c in partial.items():
            e = [0] * n
            for i, d in zip(active, key):
                e[i] = d
            et = tuple(e)
            v = out.get(et, 0) + c
            if v:
                out[et] = v
            else:
                del out[et]
    return SparsePoly(n, {e: Fraction(c, denominator) for e, c in out.items()})


def is_quasisymmetric(f: SparsePoly, n: int) -> bool:
    """Whether all placements of each composition carry equal coefficients."""
    if f.nvars != n:
        raise LengthMismatchError(f"polynomial has {f.nvars} variables, expected {n}")
    seen: set[Composition] = set()
    for exps in f.terms:
        gamma = positive_part(exps)
        if gamma in seen:
            continue
        seen.add(gamma)
        expected = f.coefficient(gamma + (0,) * (n - len(gamma)))
        for positions in combinations(range(n), len(gamma)):
            e = [0] * n
            for i, part in zip(positions, gamma):
                e[i] = part
            if f.coefficient(e) != expected:
                return False
    return True

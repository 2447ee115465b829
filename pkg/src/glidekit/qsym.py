"""The quasisymmetric coefficient algebra in the monomial basis.

Elements are finitely supported rational combinations of compositions (the
monomial-basis coordinates), optionally carrying a degree bound: truncated
elements stand in for genuinely infinite power series, and products silently
drop terms beyond the bound.

Also here: the generic construction that replaces the single variable ring by
an arbitrary graded ring with a basis, realizing monomial-type sums inside
tensor powers, with products read back off initial-segment tensors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Mapping

from .compositions import (
    Composition,
    as_composition,
    canonical_key,
    positive_part,
)
from .errors import (
    LengthMismatchError,
    NotQuasisymmetricError,
    OutOfRangeError,
    UnknownLabelError,
)
from .glides import glide_m_expansion
from .poly import SparsePoly

UNBOUNDED = None


@dataclass(frozen=True)
class QSymElement:
    """Monomial-basis coordinates with an optional degree bound.

    ``degree_bound`` of None means the element is exact (polynomial-like);
    a finite bound D means coordinates of size > D have been discarded and
    the element represents a truncation.
    """

    coords: Mapping[Composition, Fraction]
    degree_bound: int | None = UNBOUNDED

    def __post_init__(self):
        clean = {}
        for alpha, c in self.coords.items():
            a = as_composition(alpha)
            cf = Fraction(c)
            if self.degree_bound is not None and sum(a) > self.degree_bound:
                raise OutOfRangeError(
                    f"coordinate {a} exceeds degree bound {self.degree_bound}"
                )
            if cf:
                clean[a] = cf
        object.__setattr__(self, "coords", clean)

    @classmethod
    def monomial(cls, alpha: Iterable[int], degree_bound: int | None = UNBOUNDED) -> "QSymElement":
        return cls({as_composition(alpha): Fraction(1)}, degree_bound)

    def sorted_coords(self) -> list[tuple[Composition, Fraction]]:
        return sorted(self.coords.items(), key=lambda kv: canonical_key(kv[0]))

    def __add__(self, other: "QSymElement") -> "QSymElement":
        bound = _combined_bound(self.degree_bound, other.degree_bound)
        out = dict(self.coords)
        for a, c in other.coords.items():
            out[a] = out.get(a, Fraction(0)) + c
        return QSymElement(_truncate(out, bound), bound)

    def scale(self, factor: Fraction | int) -> "QSymElement":
        f = Fraction(factor)
        return QSymElement({a: c * f for a, c in self.coords.items()}, self.degree_bound)


def _combined_bound(b1: int | None, b2: int | None) -> int | None:
    if b1 is None:
        return b2
    if b2 is None:
        return b1
    return min(b1, b2)


def _truncate(coords: dict, bound: int | None) -> dict:
    if bound is None:
        return coords
    return {a: c for a, c in coords.items() if sum(a) <= bound}


def m_to_polynomial(alpha: Iterable[int], n: int) -> SparsePoly:
    """Truncate the monomial quasisymmetric function of alpha to n variables.

    The sum over strictly increasing placements; zero when alpha is longer
    than the variable count.
    """
    a = as_composition(alpha)
    terms = {}
    for positions in combinations(range(n), len(a)):
        e = [0] * n
        for i, part in zip(positions, a):
            e[i] = part
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def polynomial_to_m(f: SparsePoly, n: int) -> QSymElement:
    """Read monomial-basis coordinates off a quasisymmetric polynomial.

    The coordinate of a composition is the coefficient of its initial-segment
    monomial; raises if some placement of a composition carries a different
    coefficient (the input was not quasisymmetric).
    """
    if f.nvars != n:
        raise LengthMismatchError(f"polynomial has {f.nvars} variables, expected {n}")
    coords: dict[Composition, Fraction] = {}
    seen: set[Composition] = set()
    for exps in f.terms:
        gamma = positive_part(exps)
        if gamma in seen:
            continue
        seen.add(gamma)
        initial = gamma + (0,) * (n - len(gamma))
        expected = f.coefficient(initial)
        for positions in combinations(range(n), len(gamma)):
            e = [0] * n
            for i, part in zip(positions, gamma):
                e[i] = part
            if f.coefficient(e) != expected:
                raise NotQuasisymmetricError(
                    f"coefficient of {gamma} differs between placements "
                    f"{tuple(initial)} and {tuple(e)}"
                )
        if expected:
            coords[gamma] = expected
    return QSymElement(coords, UNBOUNDED)


def overlapping_shuffle(alpha: Iterable[int], beta: Iterable[int]) -> dict[Composition, int]:
    """Multiplicities of the overlapping shuffle product of two compositions.

    Sums over surjections that are strictly order preserving on each side:
    each side keeps its order, and a slot hit from both sides adds the two
    parts.
    """
    a, b = as_composition(alpha), as_composition(beta)
    m, n = len(a), len(b)
    out: dict[Composition, int] = {}
    for k in range(max(m, n), m + n + 1):
        for apos in combinations(range(k), m):
            aset = set(apos)
            for bpos in combinations(range(k), n):
                if len(aset | set(bpos)) != k:
                    continue
                gamma = [0] * k
                for i, part in zip(apos, a):
                    gamma[i] += part
                for i, part in zip(bpos, b):
                    gamma[i] += part
                g = tuple(gamma)
                out[g] = out.get(g, 0) + 1
    return out


def m_multiply(f: QSymElement, g: QSymElement) -> QSymElement:
    """Bilinear extension of the overlapping shuffle to monomial coordinates."""
    bound = _combined_bound(f.degree_bound, g.degree_bound)
    out: dict[Composition, Fraction] = {}
    for a, ca in f.coords.items():
        for b, cb in g.coords.items():
            if bound is not None and sum(a) + sum(b) > bound:
                continue
            c = ca * cb
            for gamma, mult in overlapping_shuffle(a, b).items():
                out[gamma] = out.get(gamma, Fraction(0)) + mult * c
    return QSymElement(_truncate(out, bound), bound)


def glide_element(alpha: Iterable[int], degree_bound: int) -> QSymElement:
    """The glide of alpha as truncated monomial-basis coordinates."""
    a = as_composition(alpha)
    return QSymElement(
        {g: Fraction(c) for g, c in glide_m_expansion(a, degree_bound).items()},
        degree_bound,
    )


def glide_expand(f: QSymElement, degree_bound: int) -> dict[Composition, Fraction]:
    """Expand monomial coordinates over the glide basis up to a degree bound.

    Strictly triangular: each glide equals its indexing monomial plus higher
    degree terms, so repeatedly peeling the lowest homogeneous layer
    terminates once the residual passes the bound.

    The input must carry the intended coordinates faithfully up to the bound.
    Coordinates read off an n-variable polynomial are faithful up to degree n
    (a composition of larger degree can be longer than n and hence invisible
    in n variables); beyond that window the expansion describes the
    truncation, not the power series it came from.
    """
    coords: dict[Composition, Fraction] = {}
    residual = {a: c for a, c in f.coords.items() if sum(a) <= degree_bound}
    while residual:
        d = min(sum(a) for a in residual)
        layer = {a: c for a, c in residual.items() if sum(a) == d}
        for a, c in layer.items():
            coords[a] = c
            for g, gc in glide_m_expansion(a, degree_bound).items():
                v = residual.get(g, Fraction(0)) - c * gc
                if v:
                    residual[g] = v
                else:
                    residual.pop(g, None)
    return coords


def glide_structure_constants(
    alpha: Iterable[int], beta: Iterable[int], degree_bound: int
) -> dict[Composition, Fraction]:
    """Glide-basis coordinates of a product of two glides, up to a degree bound."""
    fa = glide_element(alpha, degree_bound)
    fb = glide_element(beta, degree_bound)
    return glide_expand(m_multiply(fa, fb), degree_bound)


Label = Hashable


@dataclass(frozen=True)
class GradedRingData:
    """A graded ring with basis, given by degrees, structure constants, counit.

    ``multiply`` maps a pair of non-unit basis labels to a finitely supported
    label -> Fraction mapping; the unit is handled here.  ``contains`` tests
    label validity, so rings with infinitely many basis labels (one generator
    per degree, truncated tableau rings) can be given lazily.
    """

    unit: Label
    degree: Callable[[Label], int]
    multiply: Callable[[Label, Label], Mapping[Label, Fraction]]
    counit: Callable[[Label], Fraction]
    contains: Callable[[Label], bool]

    def check_label(self, label: Label) -> Label:
        if not self.contains(label):
            raise UnknownLabelError(f"unknown basis label {label!r}")
        return label

    def product(self, a: Label, b: Label) -> dict[Label, Fraction]:
        if a == self.unit:
            return {b: Fraction(1)}
        if b == self.unit:
            return {a: Fraction(1)}
        return {l: Fraction(c) for l, c in self.multiply(a, b).items() if c}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "GradedRingData":
        """Build from the JSON schema {basis, constants, counit, unit}.

        Labels are strings.  Structure constants are validated against the
        grading, and the counit must send the unit to 1 and positive-degree
        labels to 0 (a graded map to the ground ring concentrated in degree
        zero admits nothing else).
        """
        degrees = {entry["label"]: int(entry["degree"]) for entry in data["basis"]}
        unit = data.get("unit")
        if unit is None:
            zero_labels = [l for l, d in degrees.items() if d == 0]
            if len(zero_labels) != 1:
                raise UnknownLabelError(
                    f"expected exactly one degree-0 unit label, found {zero_labels}"
                )
            unit = zero_labels[0]
        if degrees.get(unit) != 0:
            raise UnknownLabelError(f"unit label {unit!r} must have degree 0")
        constants: dict[tuple[str, str], dict[str, Fraction]] = {}
        for left, rights in data.get("constants", {}).items():
            for right, terms in rights.items():
                expansion = {}
                for label, coeff in terms.items():
                    c = Fraction(coeff)
                    if not c:
                        continue
                    if label not in degrees:
                        raise UnknownLabelError(f"constants mention unknown label {label!r}")
                    if degrees[label] != degrees[left] + degrees[right]:
                        raise UnknownLabelError(
                            f"product {left!r}*{right!r} -> {label!r} violates the grading"
                        )
                    expansion[label] = c
                constants[(left, right)] = expansion
        counit_table = {l: Fraction(v) for l, v in data.get("counit", {}).items()}
        counit_table.setdefault(unit, Fraction(1))
        if counit_table[unit] != 1:
            raise UnknownLabelError("counit must send the unit label to 1")
        for l, v in counit_table.items():
            if degrees.get(l, -1) > 0 and v:
                raise UnknownLabelError(f"counit must vanish on positive-degree label {l!r}")

        def multiply(a: str, b: str) -> Mapping[str, Fraction]:
            if (a, b) in constants:
                return constants[(a, b)]
            if (b, a) in constants:
                return constants[(b, a)]
            return {}

        return cls(
            unit=unit,
            degree=lambda l: degrees[l],
            multiply=multiply,
            counit=lambda l: counit_table.get(l, Fraction(0)),
            contains=lambda l: l in degrees,
        )

    @classmethod
    def from_json_file(cls, path) -> "GradedRingData":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def cpinf_ring() -> GradedRingData:
    """One basis generator per positive degree, multiplying by degree addition.

    The basis label a stands for the a-th power of a single generator; with
    this ring the generic product reproduces the overlapping shuffle on
    ordinary compositions exactly.
    """
    return GradedRingData(
        unit=0,
        degree=lambda a: a,
        multiply=lambda a, b: {a + b: Fraction(1)},
        counit=lambda a: Fraction(1) if a == 0 else Fraction(0),
        contains=lambda a: isinstance(a, int) and a >= 0,
    )


LabelTuple = tuple[Label, ...]


def _validate_label_tuple(labels: Iterable[Label], ring: GradedRingData) -> LabelTuple:
    out = tuple(labels)
    for l in out:
        ring.check_label(l)
        if l == ring.unit:
            raise UnknownLabelError("label tuples must exclude the unit label")
    return out


def m_tensor(ring: GradedRingData, labels: Iterable[Label], n: int) -> dict[LabelTuple, Fraction]:
    """The monomial-type sum of a label tuple inside the n-fold tensor power."""
    theta = _validate_label_tuple(labels, ring)
    if len(theta) > n:
        raise OutOfRangeError(f"label tuple {theta} is too long for {n} tensor factors")
    out: dict[LabelTuple, Fraction] = {}
    for positions in combinations(range(n), len(theta)):
        key = [ring.unit] * n
        for i, l in zip(positions, theta):
            key[i] = l
        out[tuple(key)] = Fraction(1)
    return out


def _tensor_multiply(
    ring: GradedRingData,
    f: Mapping[LabelTuple, Fraction],
    g: Mapping[LabelTuple, Fraction],
) -> dict[LabelTuple, Fraction]:
    out: dict[LabelTuple, Fraction] = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            partial: dict[LabelTuple, Fraction] = {(): c1 * c2}
            for a, b in zip(k1, k2):
                factor = ring.product(a, b)
                nxt: dict[LabelTuple, Fraction] = {}
                for prefix, c in partial.items():
                    for l, lc in factor.items():
                        nxt[prefix + (l,)] = nxt.get(prefix + (l,), Fraction(0)) + c * lc
                partial = nxt
                if not partial:
                    break
            for key, c in partial.items():
                v = out.get(key, Fraction(0)) + c
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out


def qsym_r_product(
    theta: Iterable[Label],
    kappa: Iterable[Label],
    ring: GradedRingData,
    n: int,
) -> dict[LabelTuple, Fraction]:
    """Expand a product of two monomial-type sums over label tuples.

    Both factors are realized inside the n-fold tensor power and multiplied
    there; coordinates are read back off the initial-segment pure tensors
    (non-unit labels packed at the front), which pick out each basis element
    exactly once.
    """
    t = _validate_label_tuple(theta, ring)
    k = _validate_label_tuple(kappa, ring)
    if len(t) + len(k) > n:
        raise OutOfRangeError(
            f"need n >= {len(t) + len(k)} tensor factors, got {n}"
        )
    prod = _tensor_multiply(ring, m_tensor(ring, t, n), m_tensor(ring, k, n))
    out: dict[LabelTuple, Fraction] = {}
    for key, c in prod.items():
        nonunit = [l for l in key if l != ring.unit]
        length = len(nonunit)
        if tuple(key[:length]) == tuple(nonunit) and all(
            l == ring.unit for l in key[length:]
        ):
            out[tuple(nonunit)] = c
    return out


def qsym_r_product_shuffle(
    theta: Iterable[Label],
    kappa: Iterable[Label],
    ring: GradedRingData,
) -> dict[LabelTuple, Fraction]:
    """Cross-check route: overlapping shuffle of label tuples with collisions
    resolved through the ring's structure constants."""
    t = _validate_label_tuple(theta, ring)
    k = _validate_label_tuple(kappa, ring)
    m, n = len(t), len(k)
    out: dict[LabelTuple, Fraction] = {}
    for length in range(max(m, n), m + n + 1):
        for apos in combinations(range(length), m):
            aset = set(apos)
            for bpos in combinations(range(length), n):
                bset = set(bpos)
                if len(aset | bset) != length:
                    continue
                slots: list[dict[Label, Fraction]] = []
                amap = dict(zip(apos, t))
                bmap = dict(zip(bpos, k))
                for i in range(length):
                    if i in aset and i in bset:
                        slots.append(ring.product(amap[i], bmap[i]))
                    elif i in aset:
                        slots.append({amap[i]: Fraction(1)})
                    else:
                        slots.append({bmap[i]: Fraction(1)})
                partial: dict[LabelTuple, Fraction] = {(): Fraction(1)}
                for factor in slots:
                    nxt: dict[LabelTuple, Fraction] = {}
                    for prefix, c in partial.items():
                        for l, lc in factor.items():
                            key = prefix + (l,)
                            nxt[key] = nxt.get(key, Fraction(0)) + c * lc
                    partial = nxt
                    if not partial:
                        break
                for key, c in partial.items():
                    v = out.get(key, Fraction(0)) + c
                    if v:
                        out[key] = v
                    else:
                        del out[key]
    return out

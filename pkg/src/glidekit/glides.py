"""Glide polynomials via local string moves, barred strings, and Mobius data.

Strings live in the alphabet of nonnegative integers plus barred positive
symbols; a barred p is stored as -p (zero is never barred).  The local moves
rewrite a zero followed by an unbarred positive p:

    (M.1)  0 p  ->  p 0
    (M.2)  0 p  ->  p p-bar
    (M.2') 0 p  ->  p p          (the unbarred shadow of M.2)

Starting from the zero-paddings of a composition, the M.1/M.2 closure gives
the barred support, its bar-forgetting projection gives the unbarred support,
and the signed count of barred preimages gives the coefficients of the glide
polynomial.  The same polynomial arises from the poset Mobius function and
from a closed product of binomials; all three routes are implemented.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .compositions import (
    Composition,
    WeakComposition,
    as_composition,
    as_weak_composition,
    positive_part,
    run_encode,
)
from .errors import NotInCSetError, OutOfRangeError
from .poly import SparsePoly
from .poset import atoms, build_poset

GLIDE_METHODS = ("poset", "barred", "closed")


def barred_count(s: Sequence[int]) -> int:
    return sum(1 for x in s if x < 0)


def unbar(s: Sequence[int]) -> WeakComposition:
    """Forget bars: project a barred string onto a weak composition."""
    return tuple(abs(x) for x in s)


def _move_closure(seed: Iterable[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    """Closure of the seed strings under the barred moves (M.1) and (M.2)."""
    seen = set(seed)
    frontier = list(seen)
    while frontier:
        s = frontier.pop()
        for i in range(len(s) - 1):
            if s[i] == 0 and s[i + 1] > 0:
                p = s[i + 1]
                for replacement in ((p, 0), (p, -p)):
                    t = s[:i] + replacement + s[i + 2 :]
                    if t not in seen:
                        seen.add(t)
                        frontier.append(t)
    return frozenset(seen)


@lru_cache(maxsize=None)
def enumerate_C_tilde(alpha: Composition, n: int) -> frozenset[tuple[int, ...]]:
    """Barred strings reachable from the zero-paddings of alpha by M.1/M.2."""
    return _move_closure(atoms(as_composition(alpha), n))


def _run_sizes(alpha: Composition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    runs = run_encode(alpha)
    return tuple(v for v, _ in runs), tuple(m for _, m in runs)


@lru_cache(maxsize=None)
def enumerate_C(alpha: Composition, n: int) -> frozenset[WeakComposition]:
    """Unbarred move closure, by its block characterization.

    A string belongs iff its positive part consists of the runs of alpha in
    order, with the i-th run value repeated at least its original
    multiplicity.  Enumerating run sizes directly is polynomial, versus the
    exponential move closure (kept as enumerate_C_tilde for cross-checks).
    """
    a = as_composition(alpha)
    if n < len(a):
        raise OutOfRangeError(f"need n >= {len(a)} slots for {a}, got {n}")
    values, mults = _run_sizes(a)
    out: set[WeakComposition] = set()
    for sizes in _run_size_vectors(mults, n):
        pos = tuple(
            v for v, sz in zip(values, sizes) for _ in range(sz)
        )
        for positions in combinations(range(n), len(pos)):
            s = [0] * n
            for i, v in zip(positions, pos):
                s[i] = v
            out.add(tuple(s))
    return frozenset(out)


def _run_size_vectors(mults: tuple[int, ...], n: int):
    """All vectors of run sizes with sizes[i] >= mults[i] and total <= n."""
    if not mults:
        yield ()
        return
    slack = n - sum(mults)
    ranges = [range(m, m + slack + 1) for m in mults]
    for sizes in product(*ranges):
        if sum(sizes) <= n:
            yield sizes


def mu_closed(sigma: Sequence[int], alpha: Iterable[int]) -> int:
    """Closed-form coefficient from the block decomposition of sigma.

    With run value a_i appearing l_i >= N_i times, the value is
    (-1)^(sum l_i - sum N_i) * prod C(l_i - 1, N_i - 1).
    Raises if sigma admits no block decomposition over alpha's runs.
    """
    a = as_composition(alpha)
    s = as_weak_composition(sigma)
    values, mults = _run_sizes(a)
    sruns = run_encode(positive_part(s))
    if tuple(v for v, _ in sruns) != values:
        raise NotInCSetError(f"{s} has no block decomposition over {a}")
    sizes = tuple(m for _, m in sruns)
    if any(sz < m for sz, m in zip(sizes, mults)):
        raise NotInCSetError(f"{s} has too few entries in some block over {a}")
    sign = (-1) ** (sum(sizes) - sum(mults))
    prod_binom = 1
    for sz, m in zip(sizes, mults):
        prod_binom *= comb(sz - 1, m - 1)
    return sign * prod_binom


def mu_prime(sigma: Sequence[int], alpha: Iterable[int], n: int) -> int:
    """Signed count of barred preimages of sigma; zero off the move closure."""
    a = as_composition(alpha)
    s = as_weak_composition(sigma)
    if len(s) != n:
        raise OutOfRangeError(f"string {s} does not have length {n}")
    total = 0
    for t in enumerate_C_tilde(a, n):
        if unbar(t) == s:
            total += (-1) ** barred_count(t)
    return total


def glide_polynomial(alpha: Iterable[int], n: int, method: str = "closed") -> SparsePoly:
    """The signed generating polynomial of the move closure of alpha's paddings.

    Three equivalent routes:
      * "poset": Mobius recurrence on the componentwise-max closure;
      * "barred": signs from the barred move closure;
      * "closed": block enumeration with the binomial product formula.
    The lowest-degree homogeneous part is the monomial quasisymmetric
    polynomial of alpha in n variables.
    """
    a = as_composition(alpha)
    if n < len(a):
        raise OutOfRangeError(f"need n >= {len(a)} slots for {a}, got {n}")
    if method not in GLIDE_METHODS:
        raise OutOfRangeError(f"unknown method {method!r}, expected one of {GLIDE_METHODS}")
    if method == "poset":
        return SparsePoly(n, build_poset(a, n).mobius())
    if method == "barred":
        terms: dict[WeakComposition, int] = {}
        for t in enumerate_C_tilde(a, n):
            s = unbar(t)
            terms[s] = terms.get(s, 0) + (-1) ** barred_count(t)
        return SparsePoly(n, terms)
    values, mults = _run_sizes(a)
    terms = {}
    for sizes in _run_size_vectors(mults, n):
        sign = (-1) ** (sum(sizes) - sum(mults))
        coeff = sign
        for sz, m in zip(sizes, mults):
            coeff *= comb(sz - 1, m - 1)
        pos = tuple(v for v, sz in zip(values, sizes) for _ in range(sz))
        for positions in combinations(range(n), len(pos)):
            s = [0] * n
            for i, v in zip(positions, pos):
                s[i] = v
            terms[tuple(s)] = coeff
    return SparsePoly(n, terms)


def monomial_glide_weak(a: Iterable[int]) -> SparsePoly:
    """Signed generating polynomial of the move closure of one weak composition.

    When ``a`` is a composition padded with leading zeros this recovers
    glide_polynomial on that composition; without leading room for moves it
    degenerates to the single monomial y^a.
    """
    start = as_weak_composition(a)
    terms: dict[WeakComposition, int] = {}
    for t in _move_closure([start]):
        s = unbar(t)
        terms[s] = terms.get(s, 0) + (-1) ** barred_count(t)
    return SparsePoly(len(start), terms)


def glide_m_expansion(alpha: Iterable[int], degree_bound: int) -> dict[Composition, int]:
    """Coordinates of the glide of alpha on monomial-basis compositions.

    Keys are the compositions obtained by inflating each run of alpha, with
    values from the closed binomial formula, kept up to the degree bound.
    The coordinate of alpha itself is 1 and every other key has strictly
    larger size.
    """
    a = as_composition(alpha)
    values, mults = _run_sizes(a)
    out: dict[Composition, int] = {}
    if sum(a) > degree_bound:
        return out
    if not values:
        return {(): 1}

    def extend(i: int, prefix: tuple[int, ...], degree: int, coeff: int) -> None:
        if i == len(values):
            out[prefix] = coeff
            return
        v, m = values[i], mults[i]
        sz = m
        while degree + sz * v <= degree_bound:
            extend(
                i + 1,
                prefix + (v,) * sz,
                degree + sz * v,
                coeff * (-1) ** (sz - m) * comb(sz - 1, m - 1),
            )
            sz += 1

    extend(0, (), 0, 1)
    return out


def check_binomial_identity(N: int, l: int) -> bool:
    """Alternating binomial sum telescoping to 1; a self-test of exact arithmetic."""
    if not 1 <= N <= l:
        raise OutOfRangeError(f"need 1 <= N <= l, got N={N}, l={l}")
    total = sum((-1) ** (j - N) * comb(j - 1, N - 1) * comb(l, j) for j in range(N, l + 1))
    return total == 1

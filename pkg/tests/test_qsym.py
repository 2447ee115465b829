import json
import random
from fractions import Fraction

import pytest

from glidekit.errors import (
    NotQuasisymmetricError,
    OutOfRangeError,
    UnknownLabelError,
)
from glidekit.glides import glide_polynomial
from glidekit.poly import SparsePoly
from glidekit.qsym import (
    GradedRingData,
    QSymElement,
    cpinf_ring,
    glide_element,
    glide_expand,
    glide_structure_constants,
    m_multiply,
    m_to_polynomial,
    overlapping_shuffle,
    polynomial_to_m,
    qsym_r_product,
    qsym_r_product_shuffle,
)

from conftest import all_compositions


def test_m_to_polynomial_examples():
    assert m_to_polynomial((1, 3), 3) == SparsePoly(
        3, {(1, 3, 0): 1, (1, 0, 3): 1, (0, 1, 3): 1}
    )
    assert m_to_polynomial((), 2) == SparsePoly.one(2)
    assert m_to_polynomial((1, 1), 2) == SparsePoly(2, {(1, 1): 1})
    # too long for the variable count: the zero polynomial
    assert m_to_polynomial((1, 2, 1), 2).is_zero()


def test_polynomial_to_m_examples():
    f = m_to_polynomial((1, 3), 3)
    assert polynomial_to_m(f, 3).coords == {(1, 3): Fraction(1)}
    with pytest.raises(NotQuasisymmetricError):
        polynomial_to_m(SparsePoly(2, {(1, 0): 1}), 2)

    g = polynomial_to_m(glide_polynomial((1, 3), 4), 4)
    assert g.coords == {
        (1, 3): 1,
        (1, 1, 3): -1,
        (1, 3, 3): -1,
        (1, 1, 1, 3): 1,
        (1, 1, 3, 3): 1,
        (1, 3, 3, 3): 1,
    }


def test_polynomial_to_m_roundtrip():
    for alpha in all_compositions(5):
        for n in range(len(alpha), len(alpha) + 3):
            f = m_to_polynomial(alpha, n)
            coords = polynomial_to_m(f, n).coords
            if len(alpha) <= n and alpha:
                assert coords == {alpha: Fraction(1)}
            rebuilt = SparsePoly.zero(n)
            for g, c in coords.items():
                rebuilt = rebuilt + m_to_polynomial(g, n).scale(c)
            assert rebuilt == f


def test_overlapping_shuffle_examples():
    assert overlapping_shuffle((3,), (1, 3)) == {
        (3, 1, 3): 1,
        (1, 3, 3): 2,
        (4, 3): 1,
        (1, 6): 1,
    }
    assert overlapping_shuffle((2, 1), ()) == {(2, 1): 1}
    assert overlapping_shuffle((1,), (1,)) == {(1, 1): 2, (2,): 1}


def test_m_multiply_examples():
    prod = m_multiply(QSymElement.monomial((3,)), QSymElement.monomial((1, 3)))
    assert prod.coords == {
        (3, 1, 3): 1,
        (1, 3, 3): 2,
        (4, 3): 1,
        (1, 6): 1,
    }
    one = QSymElement.monomial(())
    f = QSymElement({(2, 1): Fraction(5, 3), (1,): Fraction(-2)})
    assert m_multiply(one, f).coords == f.coords
    prod11 = m_multiply(QSymElement.monomial((1,)), QSymElement.monomial((1,)))
    assert prod11.coords == {(1, 1): 2, (2,): 1}


def test_m_multiply_matches_polynomial_oracle_small():
    for alpha in all_compositions(3):
        for beta in all_compositions(3):
            n = len(alpha) + len(beta) + 1
            prod = m_multiply(QSymElement.monomial(alpha), QSymElement.monomial(beta))
            lhs = m_to_polynomial(alpha, n) * m_to_polynomial(beta, n)
            rhs = SparsePoly.zero(n)
            for g, c in prod.coords.items():
                rhs = rhs + m_to_polynomial(g, n).scale(c)
            assert lhs == rhs, (alpha, beta)


def test_m_multiply_commutative_associative_random():
    rng = random.Random(11)
    comps = [a for a in all_compositions(4) if a]
    for _ in range(15):
        a, b, c = (QSymElement.monomial(rng.choice(comps)) for _ in range(3))
        assert m_multiply(a, b).coords == m_multiply(b, a).coords
        left = m_multiply(m_multiply(a, b), c)
        right = m_multiply(a, m_multiply(b, c))
        assert left.coords == right.coords


def test_degree_bound_truncation():
    f = QSymElement.monomial((2,), degree_bound=3)
    g = QSymElement.monomial((2,), degree_bound=3)
    assert m_multiply(f, g).coords == {}
    h = m_multiply(QSymElement.monomial((1,), 3), QSymElement.monomial((1,), 3))
    assert h.coords == {(1, 1): 2, (2,): 1}
    assert h.degree_bound == 3
    with pytest.raises(OutOfRangeError):
        QSymElement({(2, 2): Fraction(1)}, degree_bound=3)


def test_glide_expand_examples():
    # triangularity: a glide expands to itself; the degree bound stays at or
    # below the variable count, where the truncation is coordinate-faithful
    for alpha in [(1, 3), (2,), (1, 1)]:
        n = len(alpha) + 2
        f = polynomial_to_m(glide_polynomial(alpha, n), n)
        assert glide_expand(f, n) == {alpha: Fraction(1)}

    assert glide_expand(QSymElement.monomial((1,)), 2) == {
        (1,): Fraction(1),
        (1, 1): Fraction(1),
    }
    # after two peels the residual passes degree 2: coordinates stop there
    assert glide_expand(QSymElement.monomial((1,)), 3) == {
        (1,): Fraction(1),
        (1, 1): Fraction(1),
        (1, 1, 1): Fraction(1),
    }

    combo = glide_element((1, 3), 4) + glide_element((2,), 4)
    assert glide_expand(combo, 4) == {(2,): Fraction(1), (1, 3): Fraction(1)}


def test_glide_expand_reconstructs_input():
    # the expansion re-assembles to the original coordinates up to the bound
    f = QSymElement({(1,): Fraction(2), (2, 1): Fraction(-1, 3)})
    bound = 5
    coords = glide_expand(f, bound)
    rebuilt = QSymElement({}, bound)
    for alpha, c in coords.items():
        rebuilt = rebuilt + glide_element(alpha, bound).scale(c)
    expected = {a: c for a, c in f.coords.items() if sum(a) <= bound}
    assert rebuilt.coords == expected


def test_glide_structure_constants_examples():
    assert glide_structure_constants((1,), (1,), 2) == {
        (2,): Fraction(1),
        (1, 1): Fraction(2),
    }
    assert glide_structure_constants((), (1, 2), 4) == {(1, 2): Fraction(1)}


def test_glide_structure_constants_stable_in_degree():
    for a, b in [((1,), (1,)), ((2,), (1, 1)), ((1, 2), (1,))]:
        lo = glide_structure_constants(a, b, 4)
        hi = glide_structure_constants(a, b, 5)
        assert lo == {g: c for g, c in hi.items() if sum(g) <= 4}


def test_glide_structure_constants_polynomial_oracle():
    # oracle: multiply the glides as honest polynomials in n variables, read
    # off monomial coordinates, and expand; faithful up to degree n
    for a, b in [((1,), (1,)), ((1,), (2,)), ((1, 1), (1,))]:
        n = 4
        product = glide_polynomial(a, n) * glide_polynomial(b, n)
        via_polys = glide_expand(polynomial_to_m(product, n), n)
        direct = glide_structure_constants(a, b, n)
        assert via_polys == direct, (a, b)


def test_qsym_r_product_reproduces_shuffle():
    ring = cpinf_ring()
    for alpha in all_compositions(3):
        for beta in all_compositions(3):
            n = len(alpha) + len(beta) + 1
            got = qsym_r_product(alpha, beta, ring, n)
            expected = {
                g: Fraction(c) for g, c in overlapping_shuffle(alpha, beta).items()
            }
            assert got == expected, (alpha, beta)


def test_qsym_r_product_routes_agree():
    ring = cpinf_ring()
    rng = random.Random(5)
    comps = [a for a in all_compositions(4) if a]
    for _ in range(10):
        a, b = rng.choice(comps), rng.choice(comps)
        n = len(a) + len(b)
        assert qsym_r_product(a, b, ring, n) == qsym_r_product_shuffle(a, b, ring)


def test_qsym_r_product_stable_in_n():
    ring = cpinf_ring()
    for a, b in [((2,), (1, 3)), ((1, 1), (2,))]:
        base = len(a) + len(b)
        assert qsym_r_product(a, b, ring, base) == qsym_r_product(a, b, ring, base + 2)


def test_qsym_r_product_errors():
    ring = cpinf_ring()
    with pytest.raises(OutOfRangeError):
        qsym_r_product((1, 2), (1,), ring, 2)
    with pytest.raises(UnknownLabelError):
        qsym_r_product((0,), (1,), ring, 3)  # unit label inside a tuple
    with pytest.raises(UnknownLabelError):
        qsym_r_product((-2,), (1,), ring, 3)


RING_JSON = {
    "basis": [
        {"label": "1", "degree": 0},
        {"label": "x", "degree": 1},
        {"label": "x2", "degree": 2},
    ],
    "constants": {"x": {"x": {"x2": "1"}}},
    "counit": {"1": "1", "x": "0", "x2": "0"},
}


def test_graded_ring_from_dict(tmp_path):
    ring = GradedRingData.from_dict(RING_JSON)
    assert ring.unit == "1"
    assert ring.degree("x2") == 2
    assert ring.product("x", "x") == {"x2": Fraction(1)}
    assert ring.product("x", "x2") == {}
    assert ring.counit("1") == 1 and ring.counit("x") == 0
    # file-based loading uses the same schema
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(RING_JSON), encoding="utf-8")
    ring2 = GradedRingData.from_json_file(path)
    out = qsym_r_product(("x",), ("x",), ring2, 2)
    assert out == {("x", "x"): Fraction(2), ("x2",): Fraction(1)}


def test_graded_ring_validation():
    bad_grading = {
        "basis": [{"label": "1", "degree": 0}, {"label": "x", "degree": 1}],
        "constants": {"x": {"x": {"x": "1"}}},
    }
    with pytest.raises(UnknownLabelError):
        GradedRingData.from_dict(bad_grading)
    bad_counit = dict(RING_JSON, counit={"1": "1", "x": "2"})
    with pytest.raises(UnknownLabelError):
        GradedRingData.from_dict(bad_counit)

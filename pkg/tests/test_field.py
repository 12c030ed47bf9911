from __future__ import annotations

import itertools

import pytest

from treecodes.errors import FieldError
from treecodes.field import (FieldElement, FieldSpec, discrete_log, gf3, is_irreducible,
                             is_permutation_polynomial, is_square, prime_field)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_gf3_axioms(m):
    F = gf3(m)
    q = F.order
    assert q == 3 ** m
    els = range(q)
    sample = els if q <= 27 else range(0, q, 7)
    for a, b, c in itertools.product(sample, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
    assert sorted(F.exp) == list(range(1, q))


def test_gf3_modulus_choices():
    assert gf3(1).modulus == (1, 1)  # x alone has order 1 in F_3
    assert gf3(2).modulus == (1, 1, 2)
    assert all(is_irreducible(3, gf3(m).modulus) for m in range(1, 6))


def test_prime_field_small():
    F = prime_field(5)
    assert F.add(3, 4) == 2 and F.inv(2) == 3
    assert F.generator.value == 2
    with pytest.raises(FieldError):
        prime_field(9)


def test_bad_moduli_rejected():
    with pytest.raises(FieldError):
        FieldSpec(3, 2, (1, 0, 1))  # x^2 + 1: irreducible but x has order 4
    with pytest.raises(FieldError):
        FieldSpec(3, 2, (1, 0, 2))  # x^2 - 1 reducible
    with pytest.raises(FieldError):
        FieldSpec(4, 1, (1, 1))


def test_element_operators_and_errors():
    F = gf3(2)
    a, b = F.element(4), F.element(7)
    assert (a * b) / b == a
    assert a + (-a) == F.zero
    assert a ** (F.order - 1) == F.one
    assert 3 * a == F.zero
    with pytest.raises(FieldError):
        F.zero.inv()
    with pytest.raises(FieldError):
        a + gf3(3).element(1)
    with pytest.raises(FieldError):
        FieldElement(F, 9)


def test_discrete_log_and_squares():
    F = gf3(2)
    g = F.generator
    for k in range(F.order - 1):
        assert discrete_log(g ** k) == k
    squares = {(x * x).value for x in F.elements() if x}
    assert squares == {x for x in range(1, 9) if is_square(F.element(x))}


def test_permutation_polynomials():
    F = gf3(2)
    e = F.element
    assert is_permutation_polynomial([e(0), e(0), e(0), e(1)])  # x^3 is additive in char 3
    assert not is_permutation_polynomial([e(0), e(0), e(1)])    # x^2
    # a x^3 - b x + c permutes iff a b is a nonsquare
    for a, b in itertools.product(range(1, 9), repeat=2):
        poly = [e(0), -e(b), e(0), e(a)]
        assert is_permutation_polynomial(poly) == (not is_square(e(a) * e(b)))

import random
from types import SimpleNamespace

import pytest

from siegeltrace.census import FrobeniusClass
from siegeltrace.sp4char import (FREUDENTHAL_BUDGET, LocalSystem, _Poly,
                                 character_polynomial, freudenthal_agreement,
                                 freudenthal_oracle, h_sequence, sp4_trace,
                                 sp4_trace_polynomial, weyl_dimension)


def cls(a1, a2, p):
    return FrobeniusClass(p=p, a1=a1, a2=a2)


def test_local_system_validation():
    LocalSystem(0, 0)
    LocalSystem(5, 5)
    with pytest.raises(ValueError):
        LocalSystem(2, 3)
    with pytest.raises(ValueError):
        LocalSystem(3, -1)


def test_parity_flag():
    assert LocalSystem(4, 2).parity_even
    assert not LocalSystem(4, 1).parity_even


def test_character_anchors():
    c = cls(3, 7, 5)
    assert sp4_trace(LocalSystem(0, 0), c) == 1
    assert sp4_trace(LocalSystem(1, 0), c) == 3
    assert sp4_trace(LocalSystem(1, 1), c) == 7 - 5
    assert sp4_trace(LocalSystem(2, 1), c) == 3 * 7 - 2 * 5 * 3


def test_h_sequence_satisfies_recurrence():
    c = cls(2, -3, 7)
    hs = h_sequence(c, 8)
    assert hs[0] == 1 and hs[1] == 2
    for j in range(4, 9):
        assert hs[j] == (c.a1 * hs[j - 1] - c.a2 * hs[j - 2]
                         + c.p * c.a1 * hs[j - 3] - c.p ** 2 * hs[j - 4])


def test_weyl_dimension_at_identity_class():
    identity = cls(4, 6, 1)
    for l in range(FREUDENTHAL_BUDGET + 1):
        for m in range(min(l, FREUDENTHAL_BUDGET - l) + 1):
            sys = LocalSystem(l, m)
            assert sp4_trace(sys, identity) == weyl_dimension(sys)


def test_twist_parity():
    rng = random.Random(3)
    for _ in range(100):
        l = rng.randint(0, 9)
        m = rng.randint(0, l)
        a1, a2, p = rng.randint(-8, 8), rng.randint(-20, 20), rng.randint(1, 9)
        sys = LocalSystem(l, m)
        assert sp4_trace(sys, cls(-a1, a2, p)) == \
            (-1) ** (l + m) * sp4_trace(sys, cls(a1, a2, p))


def test_freudenthal_small_tables():
    assert freudenthal_oracle(LocalSystem(1, 0)) == {
        (1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    assert freudenthal_oracle(LocalSystem(1, 1)) == {
        (1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}
    ten = freudenthal_oracle(LocalSystem(2, 0))
    assert sum(ten.values()) == 10
    assert ten[(0, 0)] == 2


def test_freudenthal_budget_guard():
    with pytest.raises(ValueError):
        freudenthal_oracle(LocalSystem(20, 6))


def test_oracle_sums_to_weyl_dimension():
    for (l, m) in [(6, 0), (5, 3), (4, 4), (7, 1), (6, 6), (12, 0)]:
        table = freudenthal_oracle(LocalSystem(l, m))
        assert sum(table.values()) == weyl_dimension(LocalSystem(l, m))


def test_character_polynomial_identity_up_to_12():
    """Acceptance core: production formula == Freudenthal rewrite, as
    polynomials in (a1, a2, p), for every system with l + m <= 12."""
    for l in range(13):
        for m in range(min(l, 12 - l) + 1):
            sys = LocalSystem(l, m)
            assert character_polynomial(sys) == sp4_trace_polynomial(sys)


def test_random_evaluation_agreement():
    for (l, m) in [(0, 0), (3, 1), (5, 5), (6, 2), (12, 0), (7, 5)]:
        assert freudenthal_agreement(LocalSystem(l, m), samples=50)


def test_poly_helper_arithmetic():
    x = _Poly.variable(0)
    y = _Poly.variable(1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (1 + x) * (1 - x) == 1 - x * x
    assert x.evaluate((3, 0, 0)) == 3
    assert ((x + 2) * (y + 5)).evaluate((1, 1, 0)) == 18


def test_generic_class_accepts_polynomials():
    generic = SimpleNamespace(a1=_Poly.variable(0), a2=_Poly.variable(1),
                              p=_Poly.variable(2))
    value = sp4_trace(LocalSystem(1, 1), generic)
    assert value == _Poly({(0, 1, 0): 1, (0, 0, 1): -1})  # a2 - p

"""Kernel values and identity sweeps.

Expected values come from independent routes: hand-checked constants,
stdlib math.comb / math.factorial, and literal summation loops inline.
"""

import math

import pytest

from termirial.core import (
    binomial,
    convolution_terms,
    factorial,
    pascal_check,
    termirial,
    termirial_expr,
    termirial_p,
    termirial_p_binomial,
)


def test_factorial_base_cases():
    assert factorial(0) == 1
    assert factorial(1) == 1
    assert factorial(5) == 120  # 1*2*3*4*5


def test_factorial_matches_stdlib():
    for n in range(0, 40):
        assert factorial(n) == math.factorial(n)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_known_values():
    assert binomial(5, 2) == 10
    assert binomial(103, 4) == 4421275


def test_binomial_edges():
    for n in range(0, 12):
        assert binomial(n, 0) == 1
        assert binomial(n, n) == 1
        assert binomial(n, n + 1) == 0
    assert binomial(3, 30) == 0


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -1)


def test_binomial_matches_stdlib_and_symmetry():
    for n in range(0, 41):
        for k in range(0, n + 1):
            value = binomial(n, k)
            assert value == math.comb(n, k)
            assert value == binomial(n, n - k)


def test_triangular_values():
    assert termirial(4) == 10
    assert termirial(1) == 1
    assert termirial(100) == 5050  # sum(range(1, 101))


def test_triangular_doubling_identity():
    for n in range(1, 51):
        assert 2 * termirial(n) == n * (n + 1)


def test_triangular_is_order_one():
    for n in range(0, 60):
        assert termirial(n) == termirial_p(n, 1)


def test_termirial_p_known_values():
    assert termirial_p(4, 2) == 20
    assert termirial_p(100, 3) == 4421275


def test_termirial_p_low_orders():
    for n in range(1, 31):
        assert termirial_p(n, -1) == 1
        assert termirial_p(n, 0) == n
    for p in range(-1, 13):
        assert termirial_p(1, p) == 1


def test_termirial_p_zero_boundary():
    # documented extension: the empty sum reads 0, the constant order reads 1
    assert termirial_p(0, -1) == 1
    for p in range(0, 10):
        assert termirial_p(0, p) == 0


def test_termirial_p_rejects_bad_arguments():
    with pytest.raises(ValueError):
        termirial_p(4, -2)
    with pytest.raises(ValueError):
        termirial_p(-1, 2)


def test_both_closed_forms_match_stdlib():
    for n in range(1, 31):
        for p in range(-1, 9):
            expected = math.comb(n + p, p + 1)
            assert termirial_p(n, p) == expected, (n, p)
            assert termirial_p_binomial(n, p) == expected, (n, p)


def test_binomial_route_spot_values():
    assert termirial_p_binomial(4, 1) == 10
    assert termirial_p_binomial(4, 2) == 20
    for n in range(1, 25):
        assert termirial_p_binomial(n, 0) == n


def test_summation_recurrence():
    for n in range(1, 31):
        for p in range(0, 7):
            assert termirial_p(n, p) == sum(termirial_p(k, p - 1) for k in range(1, n + 1))


def test_strictly_increasing_in_n_and_order():
    for n in range(2, 21):
        for p in range(0, 9):
            assert termirial_p(n + 1, p) > termirial_p(n, p)
            assert termirial_p(n, p + 1) > termirial_p(n, p)
    # n = 1 is flat across orders
    for p in range(-1, 9):
        assert termirial_p(1, p + 1) >= termirial_p(1, p)


def test_pascal_rule_examples():
    assert pascal_check(3, 1) == (20, 20)  # 10 + 10 on the left
    assert pascal_check(1, 0) == (3, 3)  # 2 + 1 on the left
    for n in range(1, 20):
        assert pascal_check(n, -1) == (1 + n, n + 1)


def test_pascal_rule_sweep():
    for n in range(1, 51):
        for p in range(-1, 11):
            lhs, rhs = pascal_check(n, p)
            assert lhs == rhs, (n, p)


def test_convolution_example():
    terms = convolution_terms(2, 2, 2)
    assert terms == [4, 6, 6, 4]
    assert sum(terms) == termirial_p(4, 2) == 20


def test_convolution_term_count():
    for p in range(-1, 10):
        assert len(convolution_terms(3, 4, p)) == p + 2


def test_convolution_order_one_terms():
    for n in range(1, 20):
        for m in range(1, 20):
            assert convolution_terms(n, m, 1) == [m * (m + 1) // 2, n * m, n * (n + 1) // 2]


def test_convolution_order_minus_one():
    for n in range(1, 10):
        for m in range(1, 10):
            assert convolution_terms(n, m, -1) == [1]
            assert termirial_p(n + m, -1) == 1


def test_convolution_sums_to_whole():
    for n in range(1, 16):
        for m in range(1, 16):
            for p in range(-1, 8):
                assert sum(convolution_terms(n, m, p)) == termirial_p(n + m, p), (n, m, p)


def test_split_identity_order_one():
    for n in range(1, 51):
        for m in range(1, 51):
            assert termirial(n + m) == termirial(n) + n * m + termirial(m)


def test_split_identity_order_two():
    # four-term split of the tetrahedral number
    for n in range(1, 51):
        for m in range(1, 51):
            whole = termirial_p(n + m, 2)
            assert whole == termirial_p(n, 2) + n * termirial(m) + m * termirial(n) + termirial_p(m, 2)


def test_identities_hold_at_zero_boundary():
    # not required on the positive domain, but the n = 0 extension keeps them true
    for m in range(0, 9):
        assert termirial(0 + m) == termirial(0) + 0 * m + termirial(m)
        for p in range(-1, 6):
            assert sum(convolution_terms(0, m, p)) == termirial_p(m, p)
            lhs, rhs = pascal_check(0, p)
            assert lhs == rhs


def test_termirial_expr_binomial_form():
    expr = termirial_expr(100, 3)
    assert expr.value == 4421275
    assert expr.binomial_form == (103, 4)
    assert termirial_expr(0, -1).value == 1
    for n in range(0, 15):
        for p in range(-1, 6):
            if n == 0 and p == -1:
                continue  # the formal form C(-1, 0) is outside binomial()'s domain
            e = termirial_expr(n, p)
            top, bottom = e.binomial_form
            assert (top, bottom) == (n + p, p + 1)
            assert e.value == binomial(top, bottom)

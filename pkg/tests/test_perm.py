import random

import pytest
from hypothesis import given, strategies as st

from ccckit import perm as p

from util import random_perm


def _perm_of(images):
    return p.perm_from_mapping(dict(zip(range(1, len(images) + 1), images)))


perm_st = st.permutations(list(range(1, 7))).map(_perm_of)


def test_composition_is_right_to_left():
    a = p.perm_from_cycles([[1, 2]])
    b = p.perm_from_cycles([[2, 3]])
    # (a o b)(3) = a(b(3)) = a(2) = 1
    assert p.compose(a, b)(3) == 1
    assert p.render_cycles(p.compose(a, b)) == "(1 2 3)"  # 1->2, 2->3, 3->1


def test_no_fixed_points_stored():
    q = p.perm_from_mapping({1: 2, 2: 1, 5: 5})
    assert q.support == (1, 2)


def test_not_a_bijection():
    with pytest.raises(ValueError):
        p.perm_from_mapping({1: 2, 3: 2})
    with pytest.raises(ValueError):
        p.perm_from_cycles([[1, 2], [2, 3]])


@given(perm_st, perm_st)
def test_inverse_and_composition(a, b):
    assert p.compose(a, p.inverse(a)) == p.IDENTITY
    assert p.inverse(p.compose(a, b)) == p.compose(p.inverse(b), p.inverse(a))


@given(perm_st, perm_st)
def test_sign_is_multiplicative(a, b):
    assert p.sign(p.compose(a, b)) == p.sign(a) * p.sign(b)


def test_parity_oracles():
    assert p.parity(p.perm_from_cycles([[1, 2]])) == "odd"
    assert p.parity(p.perm_from_cycles([[1, 2, 3]])) == "even"
    assert p.parity(p.block_swap(2)) == "even"
    assert p.parity(p.block_swap(3)) == "odd"
    assert p.parity(p.IDENTITY) == "even"


def test_cycles_normal_form():
    q = p.perm_from_cycles([[3, 1, 2], [5, 4]])
    assert p.cycles(q) == [[1, 2, 3], [4, 5]]
    assert p.render_cycles(q) == "(1 2 3)(4 5)"


def test_block_swap_is_involution():
    for n in (1, 2, 5):
        t = p.block_swap(n)
        assert p.compose(t, t) == p.IDENTITY
        assert t(1) == n + 1 and t(n + 1) == 1


@given(perm_st)
def test_parse_render_roundtrip(a):
    assert p.parse_cycles(p.render_cycles(a)) == a


def test_parse_cycles_forms():
    assert p.parse_cycles("(1 2)(3 4)") == p.perm_from_cycles([[1, 2], [3, 4]])
    assert p.parse_cycles("(1, 2, 3)") == p.perm_from_cycles([[1, 2, 3]])
    assert p.parse_cycles("()") == p.IDENTITY
    with pytest.raises(ValueError):
        p.parse_cycles("(1 2")


def test_random_perm_helper_deterministic():
    assert random_perm(random.Random(3)) == random_perm(random.Random(3))

import pytest
from hypothesis import given, strategies as st

from ccckit import freegroup as fg

letters_st = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=20)


def test_reduction_oracle():
    assert fg.reduce_letters([1, 2, -2, 3]) == (1, 3)
    assert fg.reduce_letters([1, -1]) == ()
    assert fg.reduce_letters([1, 2, -2, -1, 3]) == (3,)


@given(letters_st)
def test_reduction_idempotent(letters):
    once = fg.reduce_letters(letters)
    assert fg.reduce_letters(once) == once


@given(letters_st)
def test_word_times_inverse_is_trivial(letters):
    u = fg.word(3, letters)
    assert fg.word_mul(u, fg.word_inv(u)).letters == ()


@given(letters_st, letters_st, letters_st)
def test_word_mul_associative(a, b, c):
    u, v, w = (fg.word(3, x) for x in (a, b, c))
    assert fg.word_mul(fg.word_mul(u, v), w) == fg.word_mul(u, fg.word_mul(v, w))


def test_unreduced_word_rejected():
    with pytest.raises(ValueError):
        fg.FreeWord(2, (1, -1))
    with pytest.raises(ValueError):
        fg.word(2, (3,))


def test_render_parse_roundtrip():
    u = fg.word(3, (1, -2, 3, 3))
    assert fg.render_word(u) == "x1 X2 x3 x3"
    assert fg.parse_word(3, "x1 X2 x3 x3") == u
    assert fg.parse_word(3, "1 -2 3 3") == u
    assert fg.parse_word(3, "1") == fg.word(3, ())


def test_nielsen_aut():
    phi = fg.nielsen_aut(2, 1, 2)
    assert fg.render_word(phi.images[0]) == "x1 x2"
    sq = fg.aut_compose(phi, phi)
    assert fg.render_word(sq.images[0]) == "x1 x2 x2"
    assert fg.aut_compose(phi, fg.aut_inverse(phi)) == fg.identity_aut(2)


@given(letters_st, letters_st)
def test_substitute_is_homomorphism(a, b):
    phi = fg.aut_compose(fg.nielsen_aut(3, 1, 2), fg.permutation_aut(3, {1: 2, 2: 3, 3: 1}))
    u, v = fg.word(3, a), fg.word(3, b)
    assert fg.substitute(phi, fg.word_mul(u, v)) == fg.word_mul(
        fg.substitute(phi, u), fg.substitute(phi, v))


def test_bad_inverse_pair_rejected():
    w1 = fg.word(2, (1, 2))
    w2 = fg.word(2, (2,))
    with pytest.raises(ValueError):
        fg.FreeAutomorphism(2, (w1, w2), (w1, w2))


def test_permutation_aut_validation():
    with pytest.raises(ValueError):
        fg.permutation_aut(3, {1: 2, 2: 2})


def test_inversion_is_involution():
    phi = fg.inversion_aut(2, 1)
    assert fg.aut_compose(phi, phi) == fg.identity_aut(2)


def test_extend_rank_fixes_new_generators():
    phi = fg.extend_rank(fg.nielsen_aut(2, 1, 2), 4)
    assert phi.rank == 4
    assert phi.images[2].letters == (3,)
    assert phi.images[3].letters == (4,)
    with pytest.raises(ValueError):
        fg.extend_rank(phi, 2)


def test_block_swap_aut():
    t = fg.block_swap_aut(2)
    fam = fg.FreeAutFamily(4)
    assert fam.is_identity(fam.mul(t, t))
    assert t.images[0].letters == (3,)
    assert t.images[2].letters == (1,)
    # conjugation moves first-block support to the second block
    phi = fg.extend_rank(fg.nielsen_aut(2, 1, 2), 4)
    moved = fam.mul(fam.mul(t, phi), fam.inv(t))
    assert moved.images[2].letters == (3, 4)
    assert moved.images[0].letters == (1,)

import itertools

import pytest
from hypothesis import given, strategies as st

from ccckit import matrixring as m
from ccckit import perm as p
from ccckit.core import GeneratorSet, verify_ccc


def leibniz_det(a: m.SquareMatrix) -> int:
    """Independent determinant oracle: sum over permutations."""
    n = a.size
    total = 0
    for sigma in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= a.entries[i][sigma[i]]
        total += prod
    return total % a.modulus if a.modulus is not None else total


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def int_matrix(draw, n_max=4):
    n = draw(st.integers(min_value=1, max_value=n_max))
    rows = [[draw(small_entries) for _ in range(n)] for _ in range(n)]
    return m.matrix(rows)


@given(int_matrix())
def test_det_matches_leibniz(a):
    assert m.det(a) == leibniz_det(a)


@given(int_matrix(n_max=3), int_matrix(n_max=3))
def test_det_multiplicative(a, b):
    if a.size != b.size:
        return
    assert m.det(m.mat_mul(a, b)) == m.det(a) * m.det(b)


def test_det_oracles():
    assert m.det(m.matrix([[2, 0], [0, 3]])) == 6
    assert m.det(m.matrix([[1, 2], [3, 4]])) == -2
    assert m.det(m.matrix([[0, 1], [1, 0]])) == -1
    assert m.det(m.identity_matrix(5)) == 1
    assert m.det(m.matrix([[1, 2], [3, 4]], 5)) == 3


def test_perm_matrix_det_is_sign():
    for cycles in ([[1, 2]], [[1, 2, 3]], [[1, 2], [3, 4]], [[1, 4, 2, 3]]):
        sigma = p.perm_from_cycles(cycles)
        assert m.det(m.perm_to_matrix(sigma, 4)) == p.sign(sigma)


def test_perm_matrix_is_a_homomorphism():
    a = p.perm_from_cycles([[1, 2, 3]])
    b = p.perm_from_cycles([[2, 4]])
    assert m.perm_to_matrix(p.compose(a, b), 4) == m.mat_mul(
        m.perm_to_matrix(a, 4), m.perm_to_matrix(b, 4))


def test_inverse_roundtrip():
    a = m.mat_mul(m.elementary(3, 1, 2, 2), m.elementary(3, 3, 1, -1))
    assert m.mat_mul(a, m.mat_inv(a)) == m.identity_matrix(3)
    b = m.matrix([[2, 1], [1, 1]], 5)
    assert m.mat_mul(b, m.mat_inv(b)) == m.identity_matrix(2, 5)


def test_not_invertible():
    with pytest.raises(m.NotInvertibleError):
        m.mat_inv(m.matrix([[2, 0], [0, 1]]))  # det 2, not a unit in Z
    with pytest.raises(m.NotInvertibleError):
        m.mat_inv(m.matrix([[5, 0], [0, 1]], 10))
    # but det 2 is a unit mod 5
    assert m.mat_mul(m.matrix([[2, 0], [0, 1]], 5),
                     m.mat_inv(m.matrix([[2, 0], [0, 1]], 5))) == m.identity_matrix(2, 5)


def test_form_matrices():
    assert m.form_matrix(m.FormTag("symplectic", 4)).entries == (
        (0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))
    assert m.form_matrix(m.FormTag("split-orthogonal", 4)).entries == (
        (1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))
    with pytest.raises(ValueError):
        m.FormTag("symplectic", 3)


def test_preserves_form():
    j = m.form_matrix(m.FormTag("symplectic", 2))
    assert m.preserves_form(j, m.FormTag("symplectic", 2))
    assert m.preserves_form(m.elementary(2, 1, 2, 7), m.FormTag("symplectic", 2))
    assert not m.preserves_form(m.matrix([[2, 0], [0, 1]]), m.FormTag("symplectic", 2))
    flip = m.matrix([[-1, 0], [0, 1]])
    assert m.preserves_form(flip, m.FormTag("split-orthogonal", 2))


def test_corner_embed_is_homomorphism():
    a = m.elementary(2, 1, 2, 3)
    b = m.matrix([[0, -1], [1, 0]])
    assert m.corner_embed(m.mat_mul(a, b), 4) == m.mat_mul(
        m.corner_embed(a, 4), m.corner_embed(b, 4))
    assert m.corner_embed(m.identity_matrix(2), 4) == m.identity_matrix(4)


def test_sp_embed_twisted_law():
    """The literal symplectic stabilization preserves the form but is a
    homomorphism only after correcting by the image of the identity."""
    a = m.elementary(2, 1, 2, 3)
    b = m.matrix([[0, -1], [1, 0]])
    ea, eb = m.sp_embed(a), m.sp_embed(b)
    assert m.preserves_form(ea, m.FormTag("symplectic", 4))
    assert m.sp_embed(m.identity_matrix(2)) != m.identity_matrix(4)
    assert m.sp_embed(m.mat_mul(a, b)) != m.mat_mul(ea, eb)
    corrector = m.mat_inv(m.sp_embed(m.identity_matrix(2)))
    assert m.sp_embed(m.mat_mul(a, b)) == m.mat_mul(m.mat_mul(ea, eb), corrector)


def test_sp_corner_embed_is_homomorphism():
    a = m.elementary(2, 1, 2, 3)
    b = m.matrix([[0, -1], [1, 0]])
    assert m.sp_corner_embed(m.mat_mul(a, b)) == m.mat_mul(
        m.sp_corner_embed(a), m.sp_corner_embed(b))
    assert m.sp_corner_embed(m.identity_matrix(2)) == m.identity_matrix(4)
    assert m.preserves_form(m.sp_corner_embed(a), m.FormTag("symplectic", 4))
    assert m.sp_corner_embed(a) == m.mat_mul(m.sp_embed(a),
                                             m.mat_inv(m.sp_embed(m.identity_matrix(2))))


def test_sp_embed_rejects_non_symplectic():
    with pytest.raises(ValueError):
        m.sp_embed(m.matrix([[2, 0], [0, 1]]))


def test_sp_perm_embed_is_symplectic():
    t = m.sp_perm_embed(p.block_swap(2), 4)
    assert m.preserves_form(t, m.FormTag("symplectic", 8))
    assert m.det(t) == 1


def test_classical_witness_shapes():
    fam, w = m.classical_witness("SL", 2)
    assert fam.size == 4 and w.mode.n == 2
    assert fam.is_identity(fam.mul(w.t, w.t))
    fam, w = m.classical_witness("Sp", 2)
    assert fam.size == 8
    assert m.preserves_form(w.t, m.FormTag("symplectic", 8))
    fam, w = m.classical_witness("Onn", 3)
    assert fam.size == 12
    assert m.preserves_form(w.t, m.FormTag("split-orthogonal", 12))


def test_classical_witness_odd_needs_stabilization():
    with pytest.raises(m.StabilizationError):
        m.classical_witness("SL", 3)
    # Onn has no parity restriction
    m.classical_witness("Onn", 1)


def test_witness_battery_sl2():
    fam, w = m.classical_witness("SL", 2)
    gens = tuple(m.corner_embed(g, 4) for g in
                 (m.elementary(2, 1, 2, 1), m.elementary(2, 2, 1, 1)))
    report = verify_ccc(GeneratorSet(fam, gens), w)
    assert report.passed, report.counterexample


def test_support_indices():
    assert m.support_indices(m.elementary(4, 1, 3, 2)) == {1, 3}
    assert m.support_indices(m.identity_matrix(3)) == set()


def test_render_parse_roundtrip():
    a = m.matrix([[1, -2], [0, 1]])
    assert m.parse_matrix(m.render_matrix(a)) == a
    b = m.matrix([[1, 3], [2, 4]], 5)
    assert m.parse_matrix(m.render_matrix(b)) == b
    assert m.parse_matrix("[[1, 0], [0, 1]]") == m.identity_matrix(2)


def test_matrix_family_checks():
    fam = m.MatrixFamily(2)
    with pytest.raises(Exception):
        fam.check_element(m.identity_matrix(3))
    with pytest.raises(Exception):
        fam.check_element(m.identity_matrix(2, 5))

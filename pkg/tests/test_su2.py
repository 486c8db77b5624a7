import pytest

from jordan.exact import HalfInt, Mat, Q, commutator, sqrt_rat
from jordan.su2 import (
    alpha, e_basis_generators, h_matrix, rep_space, to_e_basis, v_to_e_change, zminus_matrix, zplus_matrix,
)

SPINS = [HalfInt(t) for t in range(9)]


def test_h_matrix_examples():
    assert h_matrix(0) == Mat.from_rows([[Q(0)]])
    assert h_matrix(Q(1, 2)) == Mat.diag([Q(-1), Q(1)])
    assert h_matrix(1) == Mat.diag([Q(-2), Q(0), Q(2)])


def test_ladder_actions():
    zp = zplus_matrix(Q(1, 2))
    assert zp.apply([Q(1), Q(0)]) == (0, 1)
    assert zp.apply([Q(0), Q(1)]) == (0, 0)
    # Z- v_0 = 2 v_{-1} on V^(1)
    assert zminus_matrix(1).apply([Q(0), Q(1), Q(0)]) == (2, 0, 0)


@pytest.mark.parametrize("j", SPINS, ids=str)
def test_sl2_relations(j):
    h, zp, zm = h_matrix(j), zplus_matrix(j), zminus_matrix(j)
    assert commutator(h, zp) == zp.scale(2)
    assert commutator(h, zm) == zm.scale(-2)
    assert commutator(zp, zm) == h
    assert (zp ** (j.twice + 1)).is_zero()
    assert (zm ** (j.twice + 1)).is_zero()


def test_alpha_values():
    assert alpha(1, 1) == sqrt_rat(2)
    assert alpha(Q(3, 2), Q(-3, 2)) == sqrt_rat(Q(1, 6))
    assert v_to_e_change(1)[2, 2] == sqrt_rat(2)


@pytest.mark.parametrize("j", SPINS, ids=str)
def test_e_basis_ladders_are_transposes(j):
    g = e_basis_generators(j)
    assert g["Z+"].T == g["Z-"]
    for i, m in enumerate(rep_space(j).weights()[:-1]):
        jm = j.value
        assert g["Z+"][i + 1, i] ** 2 == (jm - m.value) * (jm + m.value + 1)


def test_e_basis_half_spin_entry():
    assert e_basis_generators(Q(1, 2))["Z+"][1, 0] == 1


def test_to_e_basis_rejects_wrong_shape():
    with pytest.raises(ValueError):
        to_e_basis(Mat.identity(3), Q(1, 2))

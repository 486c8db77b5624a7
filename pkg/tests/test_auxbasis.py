import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan import auxbasis as ax
from jordan.exact import H, HalfInt, HPoly, Q, at_h
from jordan.tensor import tensor_space

PAIRS = [(HalfInt(a), HalfInt(s - a)) for s in range(9) for a in range(s + 1)]
labels = st.integers(-12, 12).map(HalfInt)
orders = st.integers(0, 8)


def ids(p):
    return ",".join(str(x) for x in p)


def test_b_coeff_examples():
    assert ax.b_coeff(Q(3, 2), -2, 0, 0) == 1
    assert ax.b_coeff(1, 1, -1, 3) == 0
    assert ax.b_coeff(1, 1, 2, -1) == 0


@given(labels, labels, orders, orders)
def test_b_symmetry(m1, m2, k, l):
    assert ax.b_coeff(m1, m2, k, l) == ax.b_coeff(m2, m1, l, k)


@given(labels, labels, orders, orders)
def test_a_is_monomial_of_degree_k_plus_l(m1, m2, k, l):
    a = ax.a_coeff(m1, m2, k, l)
    assert not a or a.is_monomial_in(k + l)


@given(labels, labels, orders, orders)
def test_telescoping(m1, m2, k, l):
    assert ax.telescoping_lhs(m1, m2, k, l) == ax.b_coeff(m1, m2, k, l)


@given(labels, labels, orders, st.integers(1, 8))
def test_partial_sums_of_b_differences(m1, m2, k, l):
    if m1.twice + k == 0:
        with pytest.raises(ZeroDivisionError):
            ax.resb_rhs(m1, m2, k, l)
        return
    assert ax.resb_lhs(m1, m2, k, l) == ax.resb_rhs(m1, m2, k, l)


def test_w_top_vector_is_pure_tensor():
    w = ax.w_vector(1, Q(3, 2), 1, Q(3, 2))
    sp = tensor_space(1, Q(3, 2))
    assert all(c == (1 if i == sp.index(1, Q(3, 2)) else 0) for i, c in enumerate(w.coords))


def test_w_half_half_lowest():
    w = ax.w_vector(Q(1, 2), Q(1, 2), Q(-1, 2), Q(-1, 2))
    # b_{1,0} = 1, b_{0,1} = 1, b_{1,1} = 0, so a_{1,1} = -(h/2)^2 (0 - 1)
    assert w.coords == (HPoly.const(1), H / 2, -H / 2, H ** 2 / 4)


@pytest.mark.parametrize("pair", PAIRS, ids=ids)
def test_w_at_h0_is_identity(pair):
    w0 = at_h(ax.w_matrix(*pair))
    n = w0.rows
    assert all(w0[i, c] == (1 if i == c else 0) for i in range(n) for c in range(n))


def test_w_vector_rejects_bad_labels():
    with pytest.raises(ValueError):
        ax.w_vector(1, 1, 2, 0)
    with pytest.raises(ValueError):
        ax.w_vector(1, 1, Q(1, 2), 0)


@pytest.mark.parametrize("pair", PAIRS, ids=ids)
def test_propositions(pair):
    r = ax.verify_propositions(*pair)
    assert r.passed, r.first_failure


def test_named_pairs():
    for pair in [(0, 0), (Q(1, 2), Q(1, 2)), (2, Q(3, 2))]:
        assert ax.verify_propositions(*pair).passed

import pytest

from jordan import tensor as tn
from jordan.exact import HalfInt, HPoly, Mat, Q, at_h, kron

PAIRS = [(HalfInt(a), HalfInt(s - a)) for s in range(9) for a in range(s + 1)]
SMALL_PAIRS = [p for p in PAIRS if p[0].twice + p[1].twice <= 6]


def ids(p):
    return ",".join(str(x) for x in p)


def test_tensor_space_index_matches_kron():
    sp = tn.tensor_space(1, Q(1, 2))
    assert sp.dim == 6
    for i, (m1, m2) in enumerate(sp.labels()):
        assert sp.index(m1, m2) == i
    # e_{i} (x) e_{j} sits at i * dim2 + j
    e1 = Mat.from_columns([[Q(0), Q(1), Q(0)]])
    e2 = Mat.from_columns([[Q(1), Q(0)]])
    v = kron(e1, e2).column(0)
    assert v.index(1) == sp.index(0, Q(-1, 2))


def test_trivial_pair_coproducts_vanish():
    for tag in tn.COPROD_TAGS:
        m = tn.coprod_matrix(tag, 0, 0)
        assert m.shape == (1, 1) and m.is_zero()


@pytest.mark.parametrize("pair", PAIRS, ids=ids)
def test_constructions_agree(pair):
    r = tn.verify_coprod_constructions(*pair)
    assert r.passed, r.first_failure


@pytest.mark.parametrize("pair", PAIRS, ids=ids)
def test_homomorphism(pair):
    r = tn.verify_coprod_homomorphism(*pair)
    assert r.passed, r.first_failure


@pytest.mark.parametrize("pair", PAIRS, ids=ids)
def test_classical_limit(pair):
    for tag in ("H", "Z+", "Z-"):
        assert at_h(tn.coprod_matrix(tag, *pair)) == tn.classical_coprod(tag, *pair)
    assert at_h(tn.coprod_matrix("X", *pair)) == tn.classical_coprod("Z+", *pair)
    assert at_h(tn.coprod_matrix("Y", *pair)) == tn.classical_coprod("Z-", *pair)


def test_zplus_series_matches_tanh_on_named_pair():
    assert tn.coprod_zplus_series(1, Q(1, 2)) == tn.coprod_zplus_tanh(1, Q(1, 2))


@pytest.mark.parametrize("triple", [(0, 0, 0), (Q(1, 2),) * 3, (1, Q(1, 2), Q(1, 2)), (1, 1, Q(1, 2))], ids=str)
def test_coassociativity_examples(triple):
    r = tn.verify_coassociativity(*triple)
    assert r.passed, r.first_failure


def test_coassociativity_matches_rebuilt_exponential():
    f = [tn.irrep_factor(j) for j in (1, Q(1, 2), 1)]
    fast = tn.tensor_factor(tn.tensor_factor(f[0], f[1]), f[2])
    slow = tn.tensor_factor(tn.tensor_factor(f[0], f[1], rebuild_exp=True), f[2], rebuild_exp=True)
    assert all(fast[k] == slow[k] for k in fast)


def test_coassociativity_cap():
    with pytest.raises(ValueError):
        tn.verify_coassociativity(2, 2, 2, max_dim=64)


@pytest.mark.parametrize("pair", SMALL_PAIRS, ids=ids)
def test_raising_coproducts_strictly_raise_total_weight(pair):
    sp = tn.tensor_space(*pair)
    weights = [m1 + m2 for m1, m2 in sp.labels()]
    for tag in ("X", "Z+"):
        m = tn.coprod_matrix(tag, *pair)
        for r in range(sp.dim):
            for c in range(sp.dim):
                if m[r, c]:
                    assert weights[r] > weights[c]

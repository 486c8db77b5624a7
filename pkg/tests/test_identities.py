import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from jordan import identities as ids
from jordan.exact import Q, pochhammer


def test_lemma1_examples():
    assert ids.lemma1(1).lhs == ids.lemma1(1).rhs == Q(-1, 2)
    assert ids.lemma1(2).lhs == Q(-1, 8) and ids.lemma1(2).passed
    with pytest.raises(ValueError):
        ids.lemma1(0)


@pytest.mark.parametrize("k", range(1, 41))
def test_lemma1(k):
    assert ids.lemma1(k).passed


def test_lemma2_examples():
    assert all(ids.fn_sum(2, n) == 1 for n in range(3))
    c = ids.lemma2(3, 0)
    assert c.lhs == c.rhs == 2
    with pytest.raises(ValueError):
        ids.lemma2(1, 0)
    with pytest.raises(ValueError):
        ids.lemma2_closed_form(4, 3)


@pytest.mark.parametrize("n", range(3))
@pytest.mark.parametrize("s", range(2, 41))
def test_lemma2(s, n):
    assert ids.lemma2(s, n).passed


def test_lemma3_single_term():
    a, b, c = Q(2, 3), Q(-5, 7), Q(9, 4)
    case = ids.lemma3(a, b, c, 0)
    assert case.lhs == case.rhs == c - 1 - a * b


@given(rationals, rationals, rationals, st.integers(0, 20))
def test_lemma3_property(a, b, c, n):
    if not pochhammer(c, n):
        with pytest.raises(ids.PoleError):
            ids.lemma3(a, b, c, n)
        return
    assert ids.lemma3(a, b, c, n).passed


def test_lemma3_seeded_batches():
    cases, poles = ids.lemma3_random_cases(500, seed=0)
    assert len(cases) == 500 and all(c.passed for c in cases)
    again, poles_again = ids.lemma3_random_cases(500, seed=0)
    assert [c.params for c in again] == [c.params for c in cases] and poles == poles_again
    labelled, _ = ids.lemma3_label_cases(seed=1)
    assert all(c.passed for c in labelled)


def test_recurrences():
    r = ids.verify_recurrences()
    assert r.passed, r.first_failure


def test_verify_lemmas_report():
    r = ids.verify_lemmas(max_k=10, max_s=10, random_cases=50, seed=3)
    assert r.passed, r.first_failure

import pytest
from hypothesis import given, strategies as st

from boxres.monomial import (
    CyclicInterval,
    DegreeError,
    DimensionError,
    Monomial,
    borel_leq,
    cyclic_shift,
    delta,
    divides,
    in_Ii,
    lcm,
    monomials_of_degree,
    parse_pretty,
)


def M(text, n=3):
    return parse_pretty(text, n)


def test_lcm_examples():
    assert lcm(M("a^2b"), M("ac")) == M("a^2bc")
    assert lcm(M("abc"), M("abc")) == M("abc")
    # an edge label in the star of abc
    assert lcm(M("ab^2"), M("abc")) == M("ab^2c")


def test_mixed_n_is_an_error():
    with pytest.raises(DimensionError):
        lcm(M("a", 2), M("a", 3))
    with pytest.raises(DimensionError):
        divides(M("a", 2), M("a", 3))


def test_divides_examples():
    assert divides(M("abc"), M("a^2b^2c^2"))
    assert not divides(M("a^2"), M("ab"))
    assert divides(M("abc"), M("ab^2c^2"))


def test_cyclic_shift_examples():
    assert cyclic_shift(M("a^2b"), 1) == M("b^2c")
    assert cyclic_shift(M("a^2b"), 3) == M("a^2b")
    for k in range(-4, 5):
        assert cyclic_shift(M("abc"), k) == M("abc")


def test_borel_leq_examples():
    assert borel_leq(M("a^2c"), M("abc"), 1)
    assert not borel_leq(M("bc^2"), M("abc"), 1)
    for i in (1, 2, 3):
        assert borel_leq(M("ab^2"), M("ab^2"), i)
    with pytest.raises(DegreeError):
        borel_leq(M("a"), M("ab"))


def test_delta_examples():
    assert delta(M("ab^2"), 1, 2) == 1
    assert delta(M("ac^2"), 1, 2) == -1
    for i in (1, 2, 3):
        for s in (1, 2, 3):
            assert delta(M("abc"), i, s) == 0


def test_in_Ii_examples():
    assert in_Ii(M("ac^2"), 3)
    assert not in_Ii(M("ac^2"), 1)
    assert all(in_Ii(M("abc"), i) for i in (1, 2, 3))
    with pytest.raises(DegreeError):
        in_Ii(M("ab"), 1)


def test_cyclic_interval():
    iv = CyclicInterval(3, 1, 4)
    assert iv.elements() == (3, 4, 1)
    assert len(CyclicInterval(2, 1, 4)) == 4
    assert CyclicInterval(2, 3, 4).monomial() == M("bc", 4)


def test_text_roundtrip_and_order():
    m = Monomial((2, 1, 0))
    assert m.text() == "2 1 0"
    assert Monomial.parse("2 1 0") == m
    assert M("c") < M("a")  # same degree, exponent tuples compared lexicographically
    assert M("a") < M("c^2")
    with pytest.raises(DimensionError):
        Monomial((3,))


degree_n = st.integers(2, 5).flatmap(lambda n: st.sampled_from(monomials_of_degree(n, n)))


@given(degree_n)
def test_every_degree_n_monomial_lies_in_some_Ii(f):
    assert any(in_Ii(f, i) for i in range(1, f.n + 1))


def test_every_degree_n_monomial_lies_in_some_Ii_exhaustive():
    for n in range(2, 6):
        for f in monomials_of_degree(n, n):
            assert any(in_Ii(f, i) for i in range(1, n + 1))


@given(degree_n, st.integers(-7, 7))
def test_shift_preserves_degree_and_has_period_n(f, k):
    g = cyclic_shift(f, k)
    assert g.degree == f.degree
    assert cyclic_shift(g, -k) == f
    assert cyclic_shift(f, k + f.n) == g


def same_slice():
    def pick(args):
        n, d = args
        pool = monomials_of_degree(n, d)
        return st.tuples(st.sampled_from(pool), st.sampled_from(pool), st.sampled_from(pool), st.integers(1, n))

    return st.tuples(st.integers(2, 4), st.integers(1, 4)).flatmap(pick)


@given(same_slice())
def test_borel_order_is_a_partial_order(data):
    f, g, h, i = data
    assert borel_leq(f, f, i)
    if borel_leq(f, g, i) and borel_leq(g, f, i):
        assert f == g
    if borel_leq(f, g, i) and borel_leq(g, h, i):
        assert borel_leq(f, h, i)


@given(same_slice())
def test_borel_order_is_equivariant(data):
    f, g, _, i = data
    n = f.n
    assert borel_leq(f, g, i) == borel_leq(cyclic_shift(f, 1), cyclic_shift(g, 1), i % n + 1)


@given(degree_n, st.data())
def test_delta_telescopes(f, data):
    n = f.n
    i = data.draw(st.integers(1, n))
    s = data.draw(st.integers(1, n))
    # full cycle
    assert delta(f, i, (i - 2) % n + 1) == f.degree - n
    # split [1, n] at s, as in the decomposition argument
    if s < n:
        assert delta(f, 1, s) + delta(f, s + 1, n) == delta(f, 1, n)
    # wrap-around: [r, s] = [r, n] + [1, s] for s < r
    r = data.draw(st.integers(1, n))
    if s < r:
        assert delta(f, r, s) == delta(f, r, n) + delta(f, 1, s)

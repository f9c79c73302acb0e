import pytest

from boxres.cellcomplex import empty_complex, from_face_data, make_key, union
from boxres.homology import (
    FieldSpec,
    acyclicity_sweep,
    chain_homology,
    is_acyclic,
    koszul_betti_oracle,
    lcm_closure,
    reduced_homology,
    simplicial_reduced_homology,
    thread_count,
    upper_koszul_complex,
)
from boxres.ideal import MonomialIdeal, power_ideal
from boxres.monomial import divisors, parse_pretty

from conftest import X, Xhat, Y, Yhat

GF = FieldSpec(32003)


def P(text, n=3):
    return parse_pretty(text, n)


def simplex(names, n=3):
    from itertools import combinations

    vs = [P(v, n) for v in names]
    entries = []
    for r in range(1, len(vs) + 1):
        for sub in combinations(vs, r):
            key = make_key(sub)
            facets = [make_key(s) for s in combinations(key, r - 1)] if r > 1 else []
            entries.append((key, facets))
    return from_face_data(n, entries)


def test_field_spec():
    assert str(FieldSpec(0)) == "QQ"
    assert str(FieldSpec(3)) == "GF(3)"
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(-1)


def test_chain_homology_of_a_circle():
    # 3 vertices, 3 edges, boundary of a triangle, no augmentation
    d1 = [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
    assert chain_homology([3, 3], [None, d1], GF) == [1, 1]


def test_reduced_homology_small_cases():
    assert reduced_homology(empty_complex(3)) == (1,)
    point = simplex(["a^3"])
    assert not any(reduced_homology(point))
    T = simplex(["a^3", "a^2b", "a^2c"])
    assert is_acyclic(T)
    ring = T.restrict(lambda f: f.dim < 2)
    assert reduced_homology(ring, GF) == (0, 0, 1)


def test_two_disjoint_triangles_fail():
    A = simplex(["a^3", "a^2b", "a^2c"])
    B = simplex(["c^3", "bc^2", "ac^2"])
    U = union(A, B)
    hom = reduced_homology(U, GF)
    assert hom[1] == 1  # H~_0
    report = acyclicity_sweep(U)
    assert not report.ok
    alphas = {alpha for alpha, _ in report.failures}
    assert U.label_lcm() in alphas


def test_hole_in_X3_is_detected():
    # drop the three squares through abc
    X3 = X(3)
    m = P("abc")
    holed = X3.restrict(lambda f: not (f.dim == 2 and m in f.key))
    report = acyclicity_sweep(holed)
    assert not report.ok
    failing = {alpha for alpha, _ in report.failures}
    assert P("a^2b^2c^2") in failing
    for alpha, hom in report.failures:
        assert hom[2] >= 1 and hom[:2] == (0, 0)
    # the three edges through abc cut the hole into three loops
    assert dict(report.failures)[P("a^2b^2c^2")][2] == 3
    assert report.lines()[0].startswith("ALPHA ") and "H~1=" in report.lines()[0]
    assert report.lines()[-1].startswith(f"checked={report.checked} failures={len(report.failures)}")


def test_sweep_passes_on_constructions():
    for n in (2, 3, 4):
        for C in (X(n), Xhat(n), Y(n), Yhat(n)):
            r = acyclicity_sweep(C)
            assert r.ok and r.checked == r.lattice_size


def test_exhaustive_sweep_agrees_with_lattice_sweep():
    for C in (X(3), Xhat(3), Y(3), Yhat(3), Y(4), Yhat(4)):
        fast = acyclicity_sweep(C)
        full = acyclicity_sweep(C, exhaustive=True)
        assert fast.ok and full.ok
        assert full.checked == len(divisors(C.label_lcm())) >= fast.checked


def test_exhaustive_sweep_reports_the_same_holes():
    holed = X(3).restrict(lambda f: not (f.dim == 2 and P("abc") in f.key))
    fast = {a for a, _ in acyclicity_sweep(holed).failures}
    full = {a for a, _ in acyclicity_sweep(holed, exhaustive=True).failures}
    assert fast <= full
    # every exhaustive failure restricts to a lattice failure
    from boxres.monomial import divides, lcm_all

    for alpha in full:
        beta = lcm_all([v for v in holed.vertices() if divides(v, alpha)])
        assert beta in fast


def test_sweep_is_thread_independent():
    C = Xhat(4)
    one = acyclicity_sweep(C, threads=1)
    four = acyclicity_sweep(C, threads=4)
    assert one == four


def test_thread_count(monkeypatch):
    monkeypatch.setenv("BOXRES_THREADS", "3")
    assert thread_count() == 3
    assert thread_count(2) == 2
    monkeypatch.delenv("BOXRES_THREADS")
    assert thread_count() == 1


def test_lcm_closure_small():
    a, b = P("a"), P("b")
    assert lcm_closure([a, b]) == sorted([a, b, a * b])


def test_simplicial_homology_examples():
    # hollow triangle on {0,1,2}
    faces = [(), (0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]
    assert simplicial_reduced_homology(faces, GF) == (0, 0, 1)
    assert simplicial_reduced_homology([()], GF) == (1,)
    assert simplicial_reduced_homology([], GF) == ()


def test_upper_koszul_complex():
    I = power_ideal(2, 2)
    # alpha = ab^2: removing a or b or nothing stays inside, removing both leaves b
    K = upper_koszul_complex(I, P("ab^2", 2))
    assert sorted(K) == [(), (0,), (1,)]


def test_oracle_small_ideals():
    I = MonomialIdeal.of([P("a"), P("b")])
    table = koszul_betti_oracle(I)
    assert table.entries == {(0, 1): 2, (1, 2): 1}
    assert koszul_betti_oracle(power_ideal(3, 2)).entries == {(0, 2): 6, (1, 3): 8, (2, 4): 3}


def _unique_facet_vertices(C):
    maxi = C.maximal_faces()
    out = []
    for v in C.vertices():
        holding = [f for f in maxi if v in f.key]
        if len(holding) == 1 and holding[0].dim > 0:
            out.append(v)
    return out


def _trim(hom):
    hom = list(hom)
    while hom and not hom[-1]:
        hom.pop()
    return hom


def test_vertex_deletion_preserves_homology():
    hits = 0
    for C in (X(3), Xhat(3), Y(3), Yhat(3), Yhat(4)):
        for alpha in lcm_closure(C.vertices()):
            R = C.restrict_leq(alpha)
            for v in _unique_facet_vertices(R):
                assert _trim(reduced_homology(R.delete_star(v), GF)) == _trim(reduced_homology(R, GF))
                hits += 1
    assert hits > 50

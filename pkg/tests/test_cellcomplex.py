import json

import pytest

from boxres.boxes import gamma
from boxres.cellcomplex import (
    ComplexError,
    Face,
    LabelledComplex,
    empty_complex,
    from_face_data,
    geometric_sign,
    intersection,
    key_id,
    make_key,
    parse_id,
    propagate_top_orientation,
    union,
)
from boxres.monomial import parse_pretty

from conftest import X, Xhat, Y, Yhat


def P(text, n=3):
    return parse_pretty(text, n)


def triangle(*names, n=3):
    vs = [P(v, n) for v in names]
    edges = [make_key([a, b]) for i, a in enumerate(vs) for b in vs[i + 1 :]]
    entries = [(make_key([v]), []) for v in vs]
    entries += [(e, [make_key([v]) for v in e]) for e in edges]
    entries.append((make_key(vs), edges))
    return from_face_data(n, entries)


def test_key_and_id_roundtrip():
    key = make_key([P("ab^2"), P("a^2b")])
    assert key_id(key) == "1 2 0;2 1 0"
    assert parse_id(key_id(key)) == key
    with pytest.raises(ComplexError):
        make_key([])


def test_triangle_basics():
    T = triangle("a^3", "a^2b", "a^2c")
    T.validate()
    assert T.f_vector() == (3, 3, 1)
    assert T.label_lcm() == P("a^3bc")
    assert [f.dim for f in T.maximal_faces()] == [2]


def test_labels_are_lcms():
    Xhat(3).check_labels()
    top = [f for f in Xhat(3) if f.dim == 2 and len(f.key) == 6][0]
    assert top.label == P("a^2b^2c^2")


def test_geometric_signs_of_an_edge():
    e = make_key([P("a^2b"), P("a^2c")])
    s1 = geometric_sign((e[0],), e)
    s2 = geometric_sign((e[1],), e)
    assert {s1, s2} == {1, -1}


def test_boundary_squared_zero_on_all_constructions():
    for n in (2, 3, 4):
        for C in (X(n), Xhat(n), Y(n), Yhat(n)):
            assert C.boundary_squared_violations() == []


def test_flipped_sign_breaks_d_squared():
    T = triangle("a^3", "a^2b", "a^2c")
    top = T.faces_of_dim(2)[0]
    (g, s), *rest = top.boundary
    faces = dict(T.faces)
    faces[top.key] = Face(top.key, 2, top.label, tuple(sorted([(g, -s)] + rest)))
    broken = LabelledComplex(3, faces)
    assert broken.boundary_squared_violations()
    with pytest.raises(ComplexError):
        broken.check_boundary_squared()


def test_missing_facet_is_rejected():
    T = triangle("a^3", "a^2b", "a^2c")
    faces = dict(T.faces)
    del faces[make_key([P("a^3"), P("a^2b")])]
    with pytest.raises(ComplexError):
        LabelledComplex(3, faces)


def test_wrong_label_is_rejected():
    T = triangle("a^3", "a^2b", "a^2c")
    top = T.faces_of_dim(2)[0]
    faces = dict(T.faces)
    faces[top.key] = Face(top.key, 2, P("a^3b^2c"), top.boundary)
    with pytest.raises(ComplexError):
        LabelledComplex(3, faces).check_labels()


def test_degenerate_face_is_rejected():
    # three collinear points do not span a triangle
    vs = [P("a^3"), P("a^2b"), P("ab^2")]
    edges = [make_key([vs[0], vs[1]]), make_key([vs[1], vs[2]]), make_key([vs[0], vs[2]])]
    entries = [(make_key([v]), []) for v in vs] + [(e, list((v,) for v in e)) for e in edges]
    entries.append((make_key(vs), edges))
    with pytest.raises(ComplexError):
        from_face_data(3, entries)


def test_restrict_examples():
    X3 = X(3)
    assert len(X3.restrict_leq(P("abc"))) == 1
    assert len(X3.restrict_lt(P("abc"))) == 0
    R = X3.restrict_leq(P("a^2bc"))
    assert R.f_vector() == (3, 2)


def test_restriction_factors_through_the_lcm_lattice():
    # X_{<=alpha} only depends on the set of vertex labels dividing alpha
    from boxres.homology import lcm_closure
    from boxres.monomial import divides, divisors, lcm_all

    X3 = X(3)
    lattice = lcm_closure(X3.vertices())
    for alpha in divisors(X3.label_lcm()):
        below = [v for v in X3.vertices() if divides(v, alpha)]
        if not below:
            assert len(X3.restrict_leq(alpha)) == 0
            continue
        beta = lcm_all(below)
        assert beta in lattice
        assert X3.restrict_leq(alpha).face_keys() == X3.restrict_leq(beta).face_keys()


def test_delete_star():
    m = P("abc")
    D = X(3).delete_star(m)
    assert m not in D.vertices()
    # faces through m number C(3, p)
    assert D.f_vector() == (9, 12, 3)
    with pytest.raises(ComplexError):
        D.delete_star(m)


def test_union_and_intersection():
    A = gamma(P("abc"), 1)
    B = gamma(P("abc"), 2)
    U = union(A, B)
    U.validate()
    I = intersection(A, B)
    assert set(I.vertices()) <= set(A.vertices()) & set(B.vertices())
    assert intersection(A, A) == A
    assert union(A, A) == A


def test_shift_matches_rebuilt_complex():
    from boxres.constructions import build_Xi

    for n in (3, 4):
        for i in range(1, n + 1):
            assert build_Xi(n, i).shift(1).face_keys() == build_Xi(n, i % n + 1).face_keys()


def test_X_is_shift_invariant():
    for n in (3, 4):
        assert X(n).shift(1) == X(n)


def test_json_roundtrip_and_determinism():
    for C in (X(3), Xhat(3), Yhat(4)):
        text = C.to_json()
        assert LabelledComplex.from_json(text) == C
        assert LabelledComplex.from_json(text).to_json() == text


def test_json_rejects_mismatched_id():
    doc = json.loads(Y(2).to_json())
    doc["faces"][0]["id"] = "9 9"
    with pytest.raises(ComplexError):
        LabelledComplex.from_json(json.dumps(doc))
    with pytest.raises(ComplexError):
        LabelledComplex.from_json("{}")


def test_empty_complex():
    E = empty_complex(3)
    assert len(E) == 0 and E.dim == -1 and E.f_vector() == ()


def test_top_cell_orientation_agrees_with_geometry():
    # propagated signs on the collapsed cell equal the geometric ones up to one global sign
    for n in (2, 3, 4):
        Yh = Yhat(n)
        top = Yh.faces_of_dim(Yh.dim)[0]
        ratios = {s * geometric_sign(g, top.key) for g, s in top.boundary}
        assert len(ratios) == 1, n


def test_propagation_detects_non_sphere():
    # a triangle's 2-faces are not ridges of any 3-cell boundary
    T = triangle("a^3", "a^2b", "a^2c")
    with pytest.raises(ComplexError):
        propagate_top_orientation(T, 3)

from helpers import sneni_corpus
from sl3webs import zoo
from sl3webs.classify import (blocks, bounded_face_profile, classify_web,
                              is_1_elliptic, is_non_elliptic,
                              is_semi_non_elliptic, is_semi_superficial,
                              is_superficial, nested_faces)
from sl3webs.webs import disjoint_union


def test_circle():
    c = zoo.circle_web()
    assert bounded_face_profile(c) == [1]
    assert not is_non_elliptic(c)
    assert not is_semi_non_elliptic(c)


def test_theta():
    th = zoo.theta_web()
    assert bounded_face_profile(th) == [2, 2]
    assert not is_non_elliptic(th)
    assert not is_semi_non_elliptic(th)  # bigons are not allowed either


def test_arc_and_y_have_no_bounded_faces():
    for w in (zoo.arc(), zoo.y_web(), zoo.w0()):
        assert bounded_face_profile(w) == []
        assert is_non_elliptic(w)
        assert is_superficial(w)
        assert is_semi_non_elliptic(w)


def test_square_ladder():
    sq = zoo.square_web()
    assert bounded_face_profile(sq) == [4]
    assert not is_non_elliptic(sq)
    assert is_superficial(sq)
    assert is_semi_non_elliptic(sq)
    assert is_1_elliptic(sq)
    assert not is_semi_superficial(sq)  # nothing is nested


def test_triple_ladder_is_one_elliptic_but_not_semi():
    l3 = zoo.ladder(3)
    assert bounded_face_profile(l3) == [4, 4]
    assert [len(b) for b in blocks(l3)] == [2]  # the squares share the middle rung
    assert not is_semi_non_elliptic(l3)
    assert is_1_elliptic(l3)


def test_two_separate_squares_are_semi_non_elliptic():
    w = disjoint_union(zoo.square_web(), zoo.square_web())
    assert bounded_face_profile(w) == [4, 4]
    assert len(blocks(w)) == 2
    assert is_semi_non_elliptic(w)
    assert is_1_elliptic(w)


def test_drum_is_not_superficial():
    d = zoo.drum()
    assert bounded_face_profile(d) == [4, 4, 4, 4, 4, 4, 6]
    assert nested_faces(d)  # the inner hexagon hides from the outer face
    assert not is_superficial(d)
    assert not is_semi_non_elliptic(d)  # six squares in one block
    assert not is_1_elliptic(d)


def test_flower_is_non_elliptic_but_not_superficial():
    w = zoo.kk_w()
    assert bounded_face_profile(w) == [6] * 7
    assert is_non_elliptic(w)
    assert not is_superficial(w)
    assert len(nested_faces(w)) == 1
    assert is_semi_non_elliptic(w)


def test_flower_with_one_squared_petal_is_semi_superficial():
    w = zoo.flower(squared_petals=(0,))
    profile = bounded_face_profile(w)
    assert profile.count(4) == 1
    assert not is_superficial(w)
    assert is_semi_superficial(w)


def test_semi_superficial_needs_the_square_next_to_the_hexagon():
    # two squared petals: two squares, so not semi-superficial
    w = zoo.flower(squared_petals=(0, 1))
    assert not is_semi_superficial(w)


def test_sneni_corpus_is_what_it_claims():
    for w in sneni_corpus(max_len=4):
        assert is_superficial(w)
        assert is_semi_non_elliptic(w)
        assert not is_non_elliptic(w)  # each member keeps one square


def test_classify_web_report():
    info = classify_web(zoo.square_web())
    assert info["profile"] == [4]
    assert info["blocks"] == [[0]]
    assert info["nested_faces"] == []
    assert info["non_elliptic"] is False
    assert info["superficial"] is True
    assert info["semi_non_elliptic"] is True
    assert info["one_elliptic"] is True
    assert info["semi_superficial"] is False

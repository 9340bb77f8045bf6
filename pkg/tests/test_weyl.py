import itertools

import pytest

from admshell import InputError
from conftest import datum


ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "G2": 12, "GL3": 6, "A1xA1": 4}


@pytest.mark.parametrize("name,order", sorted(ORDERS.items()))
def test_group_orders(name, order):
    assert len(datum(name).weyl_group()) == order


def test_multiply_invert_apply():
    d = datum("A2")
    W = d.weyl_group()
    s1, s2 = W.simple(0), W.simple(1)
    assert (s1 * s1).is_identity
    theta = d.components[0][1]
    assert s1.apply_weight(d.simple_roots[1]) == theta
    assert (s1 * s2).inverse() == s2.inverse() * s1.inverse() == s2 * s1
    with pytest.raises(InputError):
        s1 * datum("A1").weyl_group().simple(0)


def test_gl3_apply_permutes_coordinates():
    W = datum("GL3").weyl_group()
    assert W.simple(0).apply_coweight((1, 0, 0)) == (0, 1, 0)


def test_length_matches_inversion_count():
    for name in ["A2", "B2", "G2"]:
        d = datum(name)
        W = d.weyl_group()
        for w in W:
            assert w.length == len(W.inversions(w))
            assert w.length == len(w.word)


def _reduced_words(W, w):
    if w.is_identity:
        yield ()
        return
    d = W.datum
    winv = w.inverse()
    for i in range(d.nsimple):
        if d.root_sign(winv.apply_weight(d.simple_roots[i])) < 0:
            for rest in _reduced_words(W, W.simple(i) * w):
                yield (i,) + rest


def _is_subword(small, big):
    it = iter(big)
    return all(ch in it for ch in small)


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_bruhat_matches_subword_oracle(name):
    # subword property: u <= v iff some reduced word of u is a subword of one
    # (equivalently any) fixed reduced word of v
    W = datum(name).weyl_group()
    words = {w: list(_reduced_words(W, w)) for w in W}
    for u in W:
        for v in W:
            oracle = any(_is_subword(bu, v.word) for bu in words[u])
            assert W.bruhat_leq(u, v) == oracle


def test_bruhat_examples():
    W = datum("A2").weyl_group()
    s1, s2 = W.simple(0), W.simple(1)
    for w in W:
        assert W.bruhat_leq(W.identity, w)
    assert W.bruhat_leq(s1, s2 * s1)
    assert not W.bruhat_leq(s1 * s2, s2 * s1)
    # weak-order containment of inversion sets implies Bruhat order
    for u in W:
        for v in W:
            if set(W.inversions(u)) <= set(W.inversions(v)):
                assert W.bruhat_leq(u, v)


def test_canonical_word_is_lex_least_reduced_word():
    for name in ["A2", "B2"]:
        W = datum(name).weyl_group()
        for w in W:
            assert w.word == min(_reduced_words(W, w))


def test_length_parity():
    for name in ["A2", "B2", "A3"]:
        W = datum(name).weyl_group()
        for u, v in itertools.product(W, repeat=2):
            assert ((u * v).length - u.length - v.length) % 2 == 0


def test_longest_elements():
    W = datum("A2").weyl_group()
    s1, s2 = W.simple(0), W.simple(1)
    w0 = W.longest_element()
    assert w0 == s1 * s2 * s1 and w0.length == 3
    assert W.longest_element([0]) == s1
    assert datum("B2").weyl_group().longest_element().length == 4
    d = datum("A2")
    for sub in [(0,), (0, 1)]:
        wl = W.longest_element(sub)
        assert wl * wl == W.identity
        for i in sub:
            assert d.root_sign(wl.apply_weight(d.simple_roots[i])) < 0


def test_min_coset_reps():
    d = datum("GL3")
    W = d.weyl_group()
    s1, s2 = W.simple(0), W.simple(1)
    assert W.min_coset_reps([1]) == [W.identity, s1, s2 * s1]
    assert W.min_coset_reps([]) == sorted(W.elements,
                                          key=lambda w: (w.length, w.word))
    assert W.min_coset_reps([0, 1]) == [W.identity]
    for name in ["A2", "B2", "A3"]:
        dd = datum(name)
        WW = dd.weyl_group()
        for r in range(dd.nsimple + 1):
            for J in itertools.combinations(range(dd.nsimple), r):
                reps = WW.min_coset_reps(J)
                subgroup = WW.subgroup([WW.simple(j) for j in J])
                assert len(reps) * len(subgroup) == len(WW)
                for w in reps:
                    for u in subgroup:
                        assert (w * u).length == w.length + u.length


def test_max_deodhar_lift():
    W = datum("A2").weyl_group()
    s1, s2 = W.simple(0), W.simple(1)
    assert W.max_deodhar_lift(s2, [], s2) == s2
    assert W.max_deodhar_lift(W.identity, [0], s1 * s2) == s1
    assert W.max_deodhar_lift(W.identity, [0], s2) == W.identity
    with pytest.raises(InputError):
        W.max_deodhar_lift(s1 * s2, [0], s2)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repgeo import (
    Assignment,
    ContextMismatch,
    FreeContext,
    GroupAtom,
    ModuleAtom,
    PrimeField,
    eval_atom,
    eval_module,
    eval_word,
    identity_word,
    invert_word,
    module_act,
    module_add,
    module_scale,
    module_term,
    module_zero,
    multiply_words,
    reduce_word,
    ring_add,
    ring_from_terms,
    ring_mul,
    ring_one,
    ring_scale,
    ring_zero,
    xgen,
    ygen,
)

CTX = FreeContext(("x",), ("y1", "y2"))
GF2 = PrimeField(2)
GF3 = PrimeField(3)


raw_words = st.lists(
    st.tuples(st.integers(0, 1), st.integers(-3, 3)), min_size=0, max_size=8
)


def ring_elems(field):
    words = raw_words.map(lambda raw: reduce_word(CTX, raw))
    return st.lists(
        st.tuples(words, st.integers(0, field.p - 1)), min_size=0, max_size=4
    ).map(lambda pairs: ring_from_terms(CTX, field, pairs))


# -- words -------------------------------------------------------------------


def test_reduce_examples():
    assert reduce_word(CTX, [(0, 1), (0, -1)]).is_identity()
    w = reduce_word(CTX, [(0, 1), (1, 1), (1, -1), (0, 1)])
    assert w.letters == ((0, 2),)
    already = reduce_word(CTX, [(0, 2), (1, -1)])
    assert reduce_word(CTX, already.letters) == already


def test_word_examples():
    y = ygen(CTX, 0)
    assert multiply_words(y, invert_word(y)).is_identity()
    u = multiply_words(ygen(CTX, 0), ygen(CTX, 1))
    assert invert_word(u).letters == ((1, -1), (0, -1))
    assert multiply_words(ygen(CTX, 0, 2), ygen(CTX, 0, -1)) == ygen(CTX, 0)


def test_thousand_random_words_reduce_and_cancel():
    rng = random.Random(2024)
    for _ in range(1000):
        raw = [(rng.randint(0, 1), rng.randint(-3, 3)) for _ in range(rng.randint(0, 8))]
        w = reduce_word(CTX, raw)
        # idempotent normal form
        assert reduce_word(CTX, w.letters) == w
        # no zero exponents, no adjacent equal variables
        assert all(e != 0 for _, e in w.letters)
        assert all(a[0] != b[0] for a, b in zip(w.letters, w.letters[1:]))
        assert multiply_words(w, invert_word(w)).is_identity()


@given(raw_words, raw_words, raw_words)
def test_word_associativity(a, b, c):
    u, v, w = (reduce_word(CTX, r) for r in (a, b, c))
    assert multiply_words(multiply_words(u, v), w) == multiply_words(u, multiply_words(v, w))


# -- ring laws ---------------------------------------------------------------


@pytest.mark.parametrize("field", [GF2, GF3])
def test_ring_examples(field):
    y = ygen(CTX, 0)
    ry = ring_from_terms(CTX, field, [(y, 1)])
    assert ring_add(ry, ring_scale(-1, ry)).is_zero()
    one_plus_y = ring_add(ring_one(CTX, field), ry)
    sq = ring_mul(one_plus_y, one_plus_y)
    if field.p == 2:
        expected = ring_add(
            ring_one(CTX, field), ring_from_terms(CTX, field, [(ygen(CTX, 0, 2), 1)])
        )
        assert sq == expected


def test_gf2_char2():
    y = ring_from_terms(CTX, GF2, [(ygen(CTX, 0), 1)])
    assert ring_add(y, y).is_zero()


@settings(max_examples=60)
@given(ring_elems(GF3), ring_elems(GF3), ring_elems(GF3))
def test_ring_laws(r, s, t):
    assert ring_add(r, s) == ring_add(s, r)
    assert ring_add(ring_add(r, s), t) == ring_add(r, ring_add(s, t))
    assert ring_mul(r, ring_add(s, t)) == ring_add(ring_mul(r, s), ring_mul(r, t))
    one = ring_one(CTX, GF3)
    assert ring_mul(r, one) == r == ring_mul(one, r)
    assert ring_add(r, ring_zero(CTX, GF3)) == r


# -- module laws -------------------------------------------------------------


@settings(max_examples=60)
@given(ring_elems(GF3), ring_elems(GF3))
def test_module_act_laws(r, s):
    u = module_add(
        xgen(CTX, GF3, 0), module_term(CTX, GF3, 0, r)
    )
    assert module_act(u, ring_mul(r, s)) == module_act(module_act(u, r), s)
    v = module_term(CTX, GF3, 0, s)
    assert module_act(module_add(u, v), r) == module_add(module_act(u, r), module_act(v, r))


def test_module_examples(gf2):
    x = xgen(CTX, gf2, 0)
    xy = module_act(x, ring_from_terms(CTX, gf2, [(ygen(CTX, 0), 1)]))
    assert module_add(xy, module_scale(-1, xy)).is_zero()
    assert module_act(x, ring_from_terms(CTX, gf2, [(ygen(CTX, 0), 1)])) == xy
    witness = module_add(xy, module_scale(-1, x))
    (xi, r), = witness.parts
    assert r.num_terms() == 2


# -- evaluation --------------------------------------------------------------


def _asg(rep, xv, yv):
    return Assignment(rep, (xv,), yv)


def test_eval_word_examples(r1, r2):
    c = FreeContext(("x",), ("y",))
    y = ygen(c, 0)
    a = Assignment(r1, ((0, 0),), (1,))
    assert eval_word(a, multiply_words(y, y)) == 0
    assert eval_word(a, identity_word(c)) == 0
    b = Assignment(r2, ((0, 0),), (r2.group.index("b"),))
    assert eval_word(b, y) == r2.group.index("b")


def test_eval_module_examples(r1):
    c = FreeContext(("x",), ("y",))
    x = xgen(c, r1.field, 0)
    y = ring_from_terms(c, r1.field, [(ygen(c, 0), 1)])
    u = module_add(module_act(x, y), module_scale(-1, x))  # x.y - x
    a = Assignment(r1, ((1, 0),), (1,))
    assert eval_module(a, u) == (1, 1)
    a = Assignment(r1, ((1, 1),), (1,))
    assert eval_module(a, u) == (0, 0)
    assert eval_module(a, module_zero(c, r1.field)) == (0, 0)


def test_eval_atom_examples(r1, r2):
    c = FreeContext(("x",), ("y",))
    x = xgen(c, r1.field, 0)
    yw = ygen(c, 0)
    y = ring_from_terms(c, r1.field, [(yw, 1)])
    u = module_add(module_act(x, y), module_scale(-1, x))
    assert eval_atom(Assignment(r1, ((1, 1),), (1,)), ModuleAtom(u))
    assert not eval_atom(Assignment(r1, ((0, 0),), (1,)), GroupAtom(yw))
    for v in r2.vectors():
        assert eval_atom(Assignment(r2, (v,), (r2.group.index("b"),)), ModuleAtom(u))


def test_eval_is_homomorphic(r1):
    rng = random.Random(5)
    c = CTX
    f = r1.field
    for _ in range(200):
        raw1 = [(rng.randint(0, 1), rng.randint(-2, 2)) for _ in range(rng.randint(0, 5))]
        raw2 = [(rng.randint(0, 1), rng.randint(-2, 2)) for _ in range(rng.randint(0, 5))]
        u = reduce_word(c, raw1)
        v = reduce_word(c, raw2)
        asg = Assignment(
            r1,
            ((rng.randint(0, 1), rng.randint(0, 1)),),
            (rng.randint(0, 1), rng.randint(0, 1)),
        )
        g = r1.group
        assert eval_word(asg, multiply_words(u, v)) == g.table[eval_word(asg, u)][
            eval_word(asg, v)
        ]
        m1 = module_term(c, f, 0, ring_from_terms(c, f, [(u, 1)]))
        m2 = module_term(c, f, 0, ring_from_terms(c, f, [(v, 1)]))
        s = eval_module(asg, module_add(m1, m2))
        e1 = eval_module(asg, m1)
        e2 = eval_module(asg, m2)
        assert s == tuple((a + b) % r1.p for a, b in zip(e1, e2))
        # acting by a single word then evaluating = evaluating then acting
        acted = module_act(m1, ring_from_terms(c, f, [(v, 1)]))
        assert eval_module(asg, acted) == r1.apply(e1, eval_word(asg, v))


def test_eval_factors_through_canonical_form(r1):
    rng = random.Random(9)
    c = CTX
    f = r1.field
    for _ in range(100):
        raw = [(rng.randint(0, 1), rng.randint(-2, 2)) for _ in range(6)]
        w = reduce_word(c, raw)
        asg = Assignment(r1, ((1, 0),), (1, 0))
        # evaluate the raw letters directly through the group
        acc = 0
        for vidx, e in raw:
            acc = r1.group.table[acc][r1.group.power(asg.ymap[vidx], e)]
        assert acc == eval_word(asg, w)


def test_context_mismatch_raises():
    other = FreeContext(("x",), ("z",))
    with pytest.raises(ContextMismatch):
        multiply_words(ygen(CTX, 0), ygen(other, 0))
    with pytest.raises(ContextMismatch):
        ring_add(ring_one(CTX, GF2), ring_one(other, GF2))

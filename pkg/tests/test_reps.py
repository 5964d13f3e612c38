import random
from itertools import product

import pytest

from repgeo import (
    NotAnAction,
    check_rep_hom,
    compose_rep_homs,
    enumerate_rep_homs,
    faithful_image,
    make_representation,
    rep_isomorphic,
    rep_kernel,
    stabilizer,
)
from repgeo.groups import normality_witness
from repgeo.linalg import mat_identity
from repgeo.sampling import random_representation


def test_r1_action_examples(r1):
    a = r1.group.index("a")
    assert r1.apply((1, 0), a) == (0, 1)
    assert r1.apply((1, 1), a) == (1, 1)
    assert r1.apply((1, 0), 0) == (1, 0)


def test_not_an_action(gf2, z2):
    with pytest.raises(NotAnAction) as e:
        make_representation(gf2, 2, z2, {"a": [[0, 1], [1, 1]]})
    assert (e.value.g, e.value.h) == ("a", "a")


def test_missing_matrix_rejected(gf2, v4):
    with pytest.raises(Exception):
        make_representation(gf2, 2, v4, {"a": [[0, 1], [1, 0]]})


def test_stabilizer(r1):
    assert stabilizer(r1, (1, 1)).members == (0, 1)
    assert stabilizer(r1, (1, 0)).members == (0,)
    assert stabilizer(r1, (0, 0)).members == (0, 1)


def test_kernels(r1, r2, trivial_rep):
    assert rep_kernel(r1).members == (0,)
    assert rep_kernel(r2).names() == ("1", "b")
    assert rep_kernel(trivial_rep).order == 2


def test_kernel_equals_stabilizer_intersection():
    rng = random.Random(7)
    for _ in range(8):
        rep = random_representation(rng)
        if rep.p**rep.dim > 256:
            continue
        members = set(range(rep.group.order))
        for v in rep.vectors():
            members &= set(stabilizer(rep, v).members)
        assert set(rep_kernel(rep).members) == members
        assert normality_witness(rep.group, rep_kernel(rep)) is None


def test_faithful_image_of_r2(r1, r2):
    fi = faithful_image(r2)
    assert fi.quotient.group.order == 2
    assert rep_kernel(fi.quotient).order == 1
    assert rep_isomorphic(fi.quotient, r1) is not None
    # induced action agrees pointwise: v . sigma(g) = v . g
    for g in range(r2.group.order):
        for v in r2.vectors():
            assert fi.quotient.apply(v, fi.sigma[g]) == r2.apply(v, g)


def test_faithful_image_fixed_points(r1, trivial_rep):
    fi = faithful_image(r1)
    assert fi.sigma == tuple(range(r1.group.order))
    assert fi.quotient.act == r1.act
    assert rep_isomorphic(fi.quotient, r1) is not None
    fi = faithful_image(trivial_rep)
    assert fi.quotient.group.order == 1


def test_rep_hom_count_r1_r1(r1):
    homs = enumerate_rep_homs(r1, r1)
    assert len(homs) == 8
    by_beta = {}
    for h in homs:
        by_beta.setdefault(h.grouphom.image, []).append(h)
    assert {len(v) for v in by_beta.values()} == {4}
    for h in homs:
        assert check_rep_hom(h)


def test_rep_hom_count_matches_naive(r1):
    # every 2x2 matrix over GF(2) against both group endomorphisms of Z2
    count = 0
    for flat in product(range(2), repeat=4):
        m = (flat[0:2], flat[2:4])
        for image in [(0, 0), (0, 1)]:
            ok = all(
                _mat_eq(
                    _mul2(r1.act[g], m), _mul2(m, r1.act[image[g]])
                )
                for g in range(2)
            )
            if ok:
                count += 1
    assert count == len(enumerate_rep_homs(r1, r1)) == 8


def _mul2(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) % 2 for j in range(2))
        for i in range(2)
    )


def _mat_eq(a, b):
    return tuple(map(tuple, a)) == tuple(map(tuple, b))


def test_specific_cross_homs(r1, r2):
    ident = mat_identity(2)
    homs12 = enumerate_rep_homs(r1, r2)
    a2 = r2.group.index("a")
    assert any(h.matrix == ident and h.grouphom.image == (0, a2) for h in homs12)
    homs21 = enumerate_rep_homs(r2, r1)
    ones = ((1, 1), (1, 1))
    b2 = r2.group.index("b")
    expected = [0] * 4
    expected[r2.group.index("a")] = 0
    expected[b2] = 1
    expected[r2.group.index("a·b")] = 1
    assert any(
        h.matrix == ones and h.grouphom.image == tuple(expected) for h in homs21
    )


def test_rep_isomorphic(r1, r2):
    assert rep_isomorphic(r1, r1) is not None
    assert rep_isomorphic(r1, r2) is None
    fi = faithful_image(r2)
    iso = rep_isomorphic(fi.quotient, r1)
    assert iso is not None and check_rep_hom(iso)


def test_composition_closure(r1, r2):
    rng = random.Random(3)
    homs12 = enumerate_rep_homs(r1, r2)
    homs21 = enumerate_rep_homs(r2, r1)
    for _ in range(20):
        f = rng.choice(homs12)
        g = rng.choice(homs21)
        assert check_rep_hom(compose_rep_homs(f, g))


def test_action_law_random():
    rng = random.Random(11)
    for _ in range(6):
        rep = random_representation(rng)
        n = rep.group.order
        for g in range(n):
            for h in range(n):
                from repgeo.linalg import mat_mul

                assert mat_mul(rep.p, rep.act[g], rep.act[h]) == rep.act[rep.group.table[g][h]]
        assert rep.act[0] == mat_identity(rep.dim)

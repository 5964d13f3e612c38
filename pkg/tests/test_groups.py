from itertools import product

import pytest

from repgeo import (
    NotAGroup,
    NotNormal,
    cyclic_group,
    enumerate_group_homs,
    group_from_table,
    product_group,
    quotient_group,
    subgroup,
    trivial_group,
)
from repgeo.errors import InvalidInput
from repgeo.sampling import symmetric_group_3


def test_z2_from_table():
    g = group_from_table(["1", "a"], [[0, 1], [1, 0]])
    assert g.order == 2
    assert g.inverses == (0, 1)


def test_trivial_from_table():
    g = group_from_table(["1"], [[0]])
    assert g.order == 1


def test_latin_square_rejected():
    with pytest.raises(NotAGroup) as e:
        group_from_table(["1", "a"], [[0, 1], [1, 1]])
    assert e.value.reason in ("latin-square", "identity")


def test_identity_rejected():
    with pytest.raises(NotAGroup) as e:
        group_from_table(["1", "a"], [[1, 0], [0, 1]])
    assert e.value.reason == "identity"


# smallest non-associative loop with identity: order 5
_LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def test_associativity_rejected_with_witness():
    with pytest.raises(NotAGroup) as e:
        group_from_table(list("1abcd"), _LOOP5)
    assert e.value.reason == "associativity"
    i, j, k = e.value.witness
    t = _LOOP5
    assert t[t[i][j]][k] != t[i][t[j][k]]


def test_cyclic_tables():
    z2 = cyclic_group(2)
    assert z2.table == ((0, 1), (1, 0))
    assert trivial_group().order == 1
    z4 = cyclic_group(4)
    assert z4.names[2] == "g^2"
    assert z4.inverses[2] == 2  # g^2 is self-inverse


def test_product_klein_four():
    v4 = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))
    assert v4.order == 4
    assert set(v4.names) == {"1", "a", "b", "a·b"}
    assert all(v4.inverses[i] == i for i in range(4))


def test_product_with_trivial_is_isomorphic_copy():
    z3 = cyclic_group(3, "c")
    g = product_group(trivial_group(), z3)
    assert g.table == z3.table


def test_product_z2_z3_is_cyclic_of_order_6():
    g = product_group(cyclic_group(2, "a"), cyclic_group(3, "c"))
    assert g.order == 6
    assert any(g.element_order(i) == 6 for i in range(6))


def test_product_name_clash_rejected():
    with pytest.raises(InvalidInput):
        product_group(cyclic_group(2), cyclic_group(2))


def test_quotient_klein_by_b():
    v4 = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))
    n = subgroup(v4, [0, v4.index("b")])
    q, sigma = quotient_group(v4, n)
    assert q.order == 2
    # elements of v4 in index order are 1, b, a, a·b
    assert sigma == (0, 0, 1, 1)


def test_quotient_by_trivial_and_whole():
    g = symmetric_group_3()
    q, sigma = quotient_group(g, subgroup(g, [0]))
    assert q.table == g.table and sigma == tuple(range(6))
    q, sigma = quotient_group(g, subgroup(g, range(6)))
    assert q.order == 1 and set(sigma) == {0}


def test_quotient_requires_normal():
    g = symmetric_group_3()
    h = subgroup(g, [0, 1])  # a transposition: not normal
    with pytest.raises(NotNormal):
        quotient_group(g, h)


def _naive_hom_count(g, h):
    count = 0
    for image in product(range(h.order), repeat=g.order):
        if image[0] != 0:
            continue
        if all(
            image[g.table[i][j]] == h.table[image[i]][image[j]]
            for i in range(g.order)
            for j in range(g.order)
        ):
            count += 1
    return count


def test_hom_counts_spec_examples():
    z2 = cyclic_group(2, "a")
    z3 = cyclic_group(3, "c")
    v4 = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))
    assert len(enumerate_group_homs(v4, z2)) == 4
    assert len(enumerate_group_homs(z2, v4)) == 4
    assert len(enumerate_group_homs(z3, z2)) == 1


@pytest.mark.parametrize("gi", range(4))
@pytest.mark.parametrize("hi", range(4))
def test_hom_enumeration_matches_naive_filter(gi, hi):
    small = [
        trivial_group(),
        cyclic_group(2, "a"),
        cyclic_group(3, "c"),
        product_group(cyclic_group(2, "a"), cyclic_group(2, "b")),
    ]
    g, h = small[gi], small[hi]
    homs = enumerate_group_homs(g, h)
    # complete, duplicate-free, sorted
    images = [x.image for x in homs]
    assert images == sorted(set(images))
    assert len(homs) == _naive_hom_count(g, h)
    # every hom re-verifies by full sweep
    for hom in homs:
        assert all(
            hom.image[g.table[i][j]] == h.table[hom.image[i]][hom.image[j]]
            for i in range(g.order)
            for j in range(g.order)
        )


def test_subgroup_validation():
    z4 = cyclic_group(4)
    with pytest.raises(InvalidInput):
        subgroup(z4, [0, 1])  # not closed
    s = subgroup(z4, [0, 2])
    assert s.members == (0, 2)

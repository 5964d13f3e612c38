"""Finite group representations over GF(p): the pair (V, G).

A representation stores one invertible action matrix per group element,
with the row-vector right-action convention v . act[g].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .config import DEFAULT_CAPS, EnumerationCaps
from .errors import (
    DimensionMismatch,
    EnumerationCapExceeded,
    FieldMismatch,
    InvalidInput,
    NotAnAction,
)
from .groups import FiniteGroup, GroupHom, Subgroup, enumerate_group_homs, quotient_group, subgroup
from .linalg import (
    Matrix,
    PrimeField,
    Vector,
    all_vectors,
    is_invertible,
    mat_identity,
    mat_mul,
    nullspace,
    span_elements,
    vec_mat,
)


@dataclass(frozen=True)
class Representation:
    field: PrimeField
    dim: int
    group: FiniteGroup
    act: tuple[Matrix, ...]  # index-aligned with group elements

    @property
    def p(self) -> int:
        return self.field.p

    def apply(self, v: Vector, g: int) -> Vector:
        if len(v) != self.dim:
            raise DimensionMismatch("vector length != dim")
        if not 0 <= g < self.group.order:
            raise InvalidInput(f"element index {g} out of range")
        return vec_mat(self.p, v, self.act[g])

    def vectors(self) -> list[Vector]:
        return all_vectors(self.p, self.dim)


def make_representation(
    field: PrimeField,
    dim: int,
    group: FiniteGroup,
    act: Mapping[str | int, Sequence[Sequence[int]]],
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> Representation:
    if dim < 1 or dim > caps.max_dim:
        raise DimensionMismatch(f"dim must be in [1, {caps.max_dim}]")
    if group.order > caps.max_group_order:
        raise EnumerationCapExceeded(caps.max_group_order, group.order, "group order")
    p = field.p
    mats: list[Matrix | None] = [None] * group.order
    mats[0] = mat_identity(dim)
    for key, m in act.items():
        idx = group.index(key) if isinstance(key, str) else key
        if not 0 <= idx < group.order:
            raise InvalidInput(f"element index {idx} out of range")
        rows = tuple(tuple(x % p for x in r) for r in m)
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise DimensionMismatch(
                f"matrix for {group.names[idx]} is not {dim}x{dim}"
            )
        if idx == 0:
            if rows != mat_identity(dim):
                raise NotAnAction("1", "1")
            continue
        mats[idx] = rows
    missing = [group.names[i] for i, m in enumerate(mats) if m is None]
    if missing:
        raise InvalidInput(f"missing action matrices for: {', '.join(missing)}")
    full = tuple(m for m in mats if m is not None)
    # full multiplicativity sweep; invertibility follows from it
    for i in range(group.order):
        for j in range(group.order):
            if mat_mul(p, full[i], full[j]) != full[group.table[i][j]]:
                raise NotAnAction(group.names[i], group.names[j])
    return Representation(field, dim, group, full)


def stabilizer(rep: Representation, v: Vector) -> Subgroup:
    members = [g for g in range(rep.group.order) if rep.apply(v, g) == tuple(v)]
    return subgroup(rep.group, members)


def rep_kernel(rep: Representation) -> Subgroup:
    """Elements acting as the identity matrix.

    By linearity this equals the intersection of all stabilizers; the
    equality is exercised in the test suite by brute force.
    """
    ident = mat_identity(rep.dim)
    return subgroup(rep.group, [g for g in range(rep.group.order) if rep.act[g] == ident])


@dataclass(frozen=True)
class FaithfulImage:
    original: Representation
    quotient: Representation
    sigma: tuple[int, ...]  # original element index -> coset index


def faithful_image(rep: Representation) -> FaithfulImage:
    n = rep_kernel(rep)
    q, sigma = quotient_group(rep.group, n)
    # all members of a coset act identically because kernel members act as I
    act: dict[int, Matrix] = {}
    for g in range(rep.group.order):
        c = sigma[g]
        if c in act:
            assert act[c] == rep.act[g], "coset action not well-defined"
        else:
            act[c] = rep.act[g]
    quotient = make_representation(
        rep.field, rep.dim, q, {c: m for c, m in act.items() if c != 0}
    )
    assert rep_kernel(quotient).order == 1
    return FaithfulImage(rep, quotient, sigma)


@dataclass(frozen=True)
class RepHom:
    """(alpha, beta): alpha is v -> v . matrix, beta the group hom."""

    source: Representation
    target: Representation
    matrix: Matrix  # dim(source) x dim(target)
    grouphom: GroupHom


def check_rep_hom(h: RepHom) -> bool:
    """Direct definitional sweep, independent of the solver that found h."""
    p = h.source.p
    if h.source.field != h.target.field:
        return False
    for g in range(h.source.group.order):
        if mat_mul(p, h.source.act[g], h.matrix) != mat_mul(
            p, h.matrix, h.target.act[h.grouphom.image[g]]
        ):
            return False
    # beta itself must be a homomorphism
    img = h.grouphom.image
    t1, t2 = h.source.group.table, h.target.group.table
    return all(
        img[t1[i][j]] == t2[img[i]][img[j]]
        for i in range(h.source.group.order)
        for j in range(h.source.group.order)
    )


def compose_rep_homs(f: RepHom, g: RepHom) -> RepHom:
    if f.target != g.source:
        raise InvalidInput("rep hom composition mismatch")
    from .groups import compose_group_homs

    return RepHom(
        f.source,
        g.target,
        mat_mul(f.source.p, f.matrix, g.matrix),
        compose_group_homs(f.grouphom, g.grouphom),
    )


def enumerate_rep_homs(
    r: Representation, s: Representation, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[RepHom]:
    """All representation homomorphisms (alpha, beta): R -> S.

    For each group hom beta the equivariance conditions are linear in
    the entries of the matrix; we enumerate the nullspace.  Order is
    deterministic: beta image table first, then matrix entries.
    """
    if r.field != s.field:
        raise FieldMismatch("representations over different fields")
    p = r.p
    nunk = r.dim * s.dim
    out: list[RepHom] = []
    for beta in enumerate_group_homs(r.group, s.group, caps):
        rows = []
        for g in range(r.group.order):
            ra = r.act[g]
            sa = s.act[beta.image[g]]
            for i in range(r.dim):
                for j in range(s.dim):
                    row = [0] * nunk
                    for k in range(r.dim):
                        row[k * s.dim + j] = (row[k * s.dim + j] + ra[i][k]) % p
                    for l in range(s.dim):
                        row[i * s.dim + l] = (row[i * s.dim + l] - sa[l][j]) % p
                    rows.append(row)
        basis = nullspace(p, rows, nunk)
        count = p ** len(basis)
        if count > caps.max_matrices_per_beta:
            raise EnumerationCapExceeded(caps.max_matrices_per_beta, count, "matrices per beta")
        entries = sorted(span_elements(p, basis, nunk))
        for e in entries:
            m = tuple(tuple(e[i * s.dim : (i + 1) * s.dim]) for i in range(r.dim))
            out.append(RepHom(r, s, m, beta))
    return out


def rep_isomorphic(
    r: Representation, s: Representation, caps: EnumerationCaps = DEFAULT_CAPS
) -> RepHom | None:
    """First isomorphism in enumeration order, or None."""
    if r.field != s.field:
        raise FieldMismatch("representations over different fields")
    if r.dim != s.dim or r.group.order != s.group.order:
        return None
    for h in enumerate_rep_homs(r, s, caps):
        if h.grouphom.is_bijective() and is_invertible(r.p, h.matrix):
            return h
    return None


def kernel_of_matrix_family(p: int, mats: Sequence[Matrix], dim: int) -> list[Vector]:
    """Basis of the joint left kernel {v : v . A = 0 for every A}."""
    if not mats:
        return [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    # stack the columns of every matrix as equation rows on v
    rows = []
    for a in mats:
        for col in zip(*a):
            rows.append(list(col))
    return nullspace(p, rows, dim)

"""Canonical arithmetic in the free two-sorted model and its evaluation.

The two sorts are: reduced words of the free group on the y-variables,
and elements of the free module over the group ring, spanned by the
x-variables.  Everything is stored in canonical form so equality is
structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ContextMismatch, FieldMismatch, InvalidInput
from .groups import FiniteGroup
from .linalg import PrimeField, Vector, vec_add, vec_scale, zero_vec
from .reps import Representation


@dataclass(frozen=True)
class FreeContext:
    xvars: tuple[str, ...]
    yvars: tuple[str, ...]

    def __post_init__(self):
        names = self.xvars + self.yvars
        if len(set(names)) != len(names):
            raise InvalidInput("variable names not distinct")

    def xindex(self, name: str) -> int:
        try:
            return self.xvars.index(name)
        except ValueError:
            raise InvalidInput(f"no x-variable {name!r}") from None

    def yindex(self, name: str) -> int:
        try:
            return self.yvars.index(name)
        except ValueError:
            raise InvalidInput(f"no y-variable {name!r}") from None


def _same_ctx(a, b) -> None:
    if a.context != b.context:
        raise ContextMismatch("operands built over different contexts")


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word, run-length encoded as (yvar index, exponent)."""

    context: FreeContext
    letters: tuple[tuple[int, int], ...]

    def is_identity(self) -> bool:
        return not self.letters

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)


def reduce_word(ctx: FreeContext, raw: Iterable[tuple[int, int]]) -> GroupWord:
    stack: list[list[int]] = []
    for v, e in raw:
        if not 0 <= v < len(ctx.yvars):
            raise InvalidInput(f"y-variable index {v} out of range")
        if e == 0:
            continue
        if stack and stack[-1][0] == v:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([v, e])
    return GroupWord(ctx, tuple((v, e) for v, e in stack))


def identity_word(ctx: FreeContext) -> GroupWord:
    return GroupWord(ctx, ())


def ygen(ctx: FreeContext, i: int, e: int = 1) -> GroupWord:
    return reduce_word(ctx, [(i, e)])


def multiply_words(u: GroupWord, v: GroupWord) -> GroupWord:
    _same_ctx(u, v)
    return reduce_word(u.context, list(u.letters) + list(v.letters))


def invert_word(u: GroupWord) -> GroupWord:
    return reduce_word(u.context, [(v, -e) for v, e in reversed(u.letters)])


def word_key(w: GroupWord) -> tuple:
    """Shortlex key: total length first, then expanded letters with
    positive exponents before negative."""
    expanded = []
    for v, e in w.letters:
        sign = 0 if e > 0 else 1
        expanded.extend([(v, sign)] * abs(e))
    return (len(expanded), tuple(expanded))


@dataclass(frozen=True)
class RingElement:
    """Group-ring element: finite sum of coefficient * reduced word."""

    context: FreeContext
    field: PrimeField
    terms: tuple[tuple[GroupWord, int], ...]  # sorted by word_key, coeffs in [1, p)

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)


def _canon_ring(ctx: FreeContext, field: PrimeField, acc: dict[GroupWord, int]) -> RingElement:
    terms = tuple(
        (w, c % field.p)
        for w, c in sorted(acc.items(), key=lambda t: word_key(t[0]))
        if c % field.p
    )
    return RingElement(ctx, field, terms)


def ring_zero(ctx: FreeContext, field: PrimeField) -> RingElement:
    return RingElement(ctx, field, ())


def ring_from_terms(
    ctx: FreeContext, field: PrimeField, pairs: Iterable[tuple[GroupWord, int]]
) -> RingElement:
    acc: dict[GroupWord, int] = {}
    for w, c in pairs:
        if w.context != ctx:
            raise ContextMismatch("word over a different context")
        acc[w] = acc.get(w, 0) + c
    return _canon_ring(ctx, field, acc)


def ring_one(ctx: FreeContext, field: PrimeField) -> RingElement:
    return ring_from_terms(ctx, field, [(identity_word(ctx), 1)])


def word_to_ring(field: PrimeField, w: GroupWord) -> RingElement:
    return ring_from_terms(w.context, field, [(w, 1)])


def _check_ring_pair(r: RingElement, s: RingElement) -> None:
    _same_ctx(r, s)
    if r.field != s.field:
        raise FieldMismatch("ring elements over different fields")


def ring_add(r: RingElement, s: RingElement) -> RingElement:
    _check_ring_pair(r, s)
    acc = dict(r.terms)
    for w, c in s.terms:
        acc[w] = acc.get(w, 0) + c
    return _canon_ring(r.context, r.field, acc)


def ring_scale(lam: int, r: RingElement) -> RingElement:
    return _canon_ring(r.context, r.field, {w: lam * c for w, c in r.terms})


def ring_neg(r: RingElement) -> RingElement:
    return ring_scale(-1, r)


def ring_mul(r: RingElement, s: RingElement) -> RingElement:
    _check_ring_pair(r, s)
    acc: dict[GroupWord, int] = {}
    for w1, c1 in r.terms:
        for w2, c2 in s.terms:
            w = multiply_words(w1, w2)
            acc[w] = acc.get(w, 0) + c1 * c2
    return _canon_ring(r.context, r.field, acc)


def ring_key(r: RingElement) -> tuple:
    return (len(r.terms), tuple((word_key(w), c) for w, c in r.terms))


@dataclass(frozen=True)
class ModuleElement:
    """Free-module element: x-variable -> nonzero ring coefficient."""

    context: FreeContext
    field: PrimeField
    parts: tuple[tuple[int, RingElement], ...]  # sorted by x index

    def is_zero(self) -> bool:
        return not self.parts

    def num_terms(self) -> int:
        return sum(r.num_terms() for _, r in self.parts)


def _canon_module(
    ctx: FreeContext, field: PrimeField, acc: dict[int, RingElement]
) -> ModuleElement:
    parts = tuple((x, r) for x, r in sorted(acc.items()) if not r.is_zero())
    return ModuleElement(ctx, field, parts)


def module_zero(ctx: FreeContext, field: PrimeField) -> ModuleElement:
    return ModuleElement(ctx, field, ())


def module_term(ctx: FreeContext, field: PrimeField, x: int, r: RingElement) -> ModuleElement:
    if not 0 <= x < len(ctx.xvars):
        raise InvalidInput(f"x-variable index {x} out of range")
    if r.context != ctx:
        raise ContextMismatch("ring element over a different context")
    return _canon_module(ctx, field, {x: r})


def xgen(ctx: FreeContext, field: PrimeField, x: int) -> ModuleElement:
    return module_term(ctx, field, x, ring_one(ctx, field))


def _check_module_pair(u: ModuleElement, v: ModuleElement) -> None:
    _same_ctx(u, v)
    if u.field != v.field:
        raise FieldMismatch("module elements over different fields")


def module_add(u: ModuleElement, v: ModuleElement) -> ModuleElement:
    _check_module_pair(u, v)
    acc = {x: r for x, r in u.parts}
    for x, r in v.parts:
        acc[x] = ring_add(acc[x], r) if x in acc else r
    return _canon_module(u.context, u.field, acc)


def module_scale(lam: int, u: ModuleElement) -> ModuleElement:
    return _canon_module(u.context, u.field, {x: ring_scale(lam, r) for x, r in u.parts})


def module_neg(u: ModuleElement) -> ModuleElement:
    return module_scale(-1, u)


def module_act(u: ModuleElement, r: RingElement) -> ModuleElement:
    if u.context != r.context:
        raise ContextMismatch("operands built over different contexts")
    if u.field != r.field:
        raise FieldMismatch("module/ring field mismatch")
    return _canon_module(u.context, u.field, {x: ring_mul(s, r) for x, s in u.parts})


def module_key(u: ModuleElement) -> tuple:
    return (u.num_terms(), tuple((x, ring_key(r)) for x, r in u.parts))


# ---------------------------------------------------------------------------
# Atoms, quasi-identities, equation systems


@dataclass(frozen=True)
class ModuleAtom:
    """The equation u = 0."""

    element: ModuleElement

    @property
    def context(self) -> FreeContext:
        return self.element.context


@dataclass(frozen=True)
class GroupAtom:
    """The equation w = 1."""

    word: GroupWord

    @property
    def context(self) -> FreeContext:
        return self.word.context


Atom = Union[ModuleAtom, GroupAtom]


def atom_key(a: Atom) -> tuple:
    if isinstance(a, GroupAtom):
        return (0, word_key(a.word))
    return (1, module_key(a.element))


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple[Atom, ...]
    conclusion: Atom

    def __post_init__(self):
        ctx = self.conclusion.context
        for a in self.premises:
            if a.context != ctx:
                raise ContextMismatch("quasi-identity atoms over different contexts")

    @property
    def context(self) -> FreeContext:
        return self.conclusion.context


@dataclass(frozen=True)
class EquationSystem:
    """A system (T1, T2); action-type systems have an empty group part."""

    context: FreeContext
    module_part: tuple[ModuleElement, ...]
    group_part: tuple[GroupWord, ...]

    def is_action_type(self) -> bool:
        return not self.group_part


def equation_system(
    ctx: FreeContext,
    module_part: Iterable[ModuleElement] = (),
    group_part: Iterable[GroupWord] = (),
) -> EquationSystem:
    ms = sorted(set(module_part), key=module_key)
    ws = sorted(set(group_part), key=word_key)
    for m in ms:
        if m.context != ctx:
            raise ContextMismatch("system member over a different context")
    for w in ws:
        if w.context != ctx:
            raise ContextMismatch("system member over a different context")
    return EquationSystem(ctx, tuple(ms), tuple(ws))


# ---------------------------------------------------------------------------
# Evaluation under a point of the affine space


@dataclass(frozen=True)
class Assignment:
    """A homomorphism out of the free model: generator images only."""

    rep: Representation
    xmap: tuple[Vector, ...]  # aligned with context.xvars
    ymap: tuple[int, ...]  # aligned with context.yvars; group element indices


def eval_word_raw(group: FiniteGroup, ymap: Sequence[int], w: GroupWord) -> int:
    acc = 0
    for v, e in w.letters:
        acc = group.table[acc][group.power(ymap[v], e)]
    return acc


def eval_word(asg: Assignment, w: GroupWord) -> int:
    return eval_word_raw(asg.rep.group, asg.ymap, w)


def eval_module_raw(
    rep: Representation,
    xmap: Sequence[Vector],
    ymap: Sequence[int],
    u: ModuleElement,
) -> Vector:
    p = rep.p
    out = zero_vec(rep.dim)
    for x, r in u.parts:
        base = xmap[x]
        for w, c in r.terms:
            g = eval_word_raw(rep.group, ymap, w)
            out = vec_add(p, out, vec_scale(p, c, rep.apply(base, g)))
    return out


def eval_module(asg: Assignment, u: ModuleElement) -> Vector:
    return eval_module_raw(asg.rep, asg.xmap, asg.ymap, u)


def eval_atom(asg: Assignment, a: Atom) -> bool:
    if isinstance(a, GroupAtom):
        return eval_word(asg, a.word) == 0
    return eval_module(asg, a.element) == zero_vec(asg.rep.dim)

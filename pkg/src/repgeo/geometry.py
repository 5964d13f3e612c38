"""Solution sets, closure operators, quasi-identity checking, and the
equivalence deciders with re-checkable certificates.

The affine space of a representation and a context is the finite set of
generator assignments; every decider here is an exhaustive filter over
it, guarded by caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence, Union

from .config import DEFAULT_BOUNDS, DEFAULT_CAPS, EnumerationCaps, SearchBounds
from .errors import FieldMismatch, InvalidInput, SearchSpaceCapExceeded
from .freemod import (
    Assignment,
    Atom,
    EquationSystem,
    FreeContext,
    GroupAtom,
    GroupWord,
    ModuleAtom,
    ModuleElement,
    QuasiIdentity,
    atom_key,
    equation_system,
    eval_atom,
    eval_module_raw,
    eval_word_raw,
    identity_word,
    module_add,
    module_key,
    module_term,
    module_zero,
    reduce_word,
    ring_from_terms,
    word_key,
)
from .groups import FiniteGroup, GroupHom, enumerate_group_homs
from .linalg import all_vectors, zero_vec
from .reps import (
    RepHom,
    Representation,
    check_rep_hom,
    enumerate_rep_homs,
    faithful_image,
    kernel_of_matrix_family,
)

# ---------------------------------------------------------------------------
# Assignment space


def enumerate_assignments(
    rep: Representation, ctx: FreeContext, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[Assignment]:
    """All points of the affine space, ordered by x-vectors then y-indices."""
    nx, ny = len(ctx.xvars), len(ctx.yvars)
    space = (rep.p**rep.dim) ** nx * rep.group.order**ny
    if space > caps.max_search_space:
        raise SearchSpaceCapExceeded(caps.max_search_space, space)
    vectors = all_vectors(rep.p, rep.dim)
    out = []
    for xm in product(vectors, repeat=nx):
        for ym in product(range(rep.group.order), repeat=ny):
            out.append(Assignment(rep, xm, ym))
    return out


def _satisfies_system(asg: Assignment, sys: EquationSystem) -> bool:
    z = zero_vec(asg.rep.dim)
    for u in sys.module_part:
        if eval_module_raw(asg.rep, asg.xmap, asg.ymap, u) != z:
            return False
    for w in sys.group_part:
        if eval_word_raw(asg.rep.group, asg.ymap, w) != 0:
            return False
    return True


@dataclass(frozen=True)
class SolutionSet:
    system: EquationSystem
    rep: Representation
    solutions: tuple[Assignment, ...]


def solution_set(
    rep: Representation, sys: EquationSystem, caps: EnumerationCaps = DEFAULT_CAPS
) -> SolutionSet:
    asgs = enumerate_assignments(rep, sys.context, caps)
    sols = tuple(a for a in asgs if _satisfies_system(a, sys))
    return SolutionSet(sys, rep, sols)


def in_closure(
    rep: Representation,
    sys: EquationSystem,
    a: Atom,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> bool:
    """Membership in the closure: the atom holds on every solution.

    An inconsistent system has an empty solution set, and the
    intersection over an empty family is everything: returns True.
    """
    if a.context != sys.context:
        raise InvalidInput("atom context differs from system context")
    return all(eval_atom(s, a) for s in solution_set(rep, sys, caps).solutions)


def in_at_closure(
    rep: Representation,
    t: Union[EquationSystem, Sequence[ModuleElement]],
    u: ModuleElement,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> bool:
    """Action-type closure membership: u vanishes on every solution of T."""
    if isinstance(t, EquationSystem):
        if not t.is_action_type():
            raise InvalidInput("action-type closure needs a system with no group part")
        sys = t
    else:
        sys = equation_system(u.context, t)
    return in_closure(rep, sys, ModuleAtom(u), caps)


def fulfills_qid(
    rep: Representation, q: QuasiIdentity, caps: EnumerationCaps = DEFAULT_CAPS
) -> tuple[bool, Optional[Assignment]]:
    """Whether every assignment satisfying the premises satisfies the
    conclusion; on failure, the enumeration-order-least violating
    assignment is returned."""
    for asg in enumerate_assignments(rep, q.context, caps):
        if all(eval_atom(asg, w) for w in q.premises) and not eval_atom(asg, q.conclusion):
            return False, asg
    return True, None


# ---------------------------------------------------------------------------
# Bounded enumeration of words, module elements, atoms


def scan_context(nx: int, ny: int) -> FreeContext:
    xs = ("x",) if nx == 1 else tuple(f"x{i+1}" for i in range(nx))
    ys = ("y",) if ny == 1 else tuple(f"y{i+1}" for i in range(ny))
    return FreeContext(xs, ys)


def bounded_words(ctx: FreeContext, max_len: int) -> list[GroupWord]:
    """All reduced words of length <= max_len, in shortlex order."""
    seen = {identity_word(ctx)}
    frontier = list(seen)
    alphabet = [(v, e) for v in range(len(ctx.yvars)) for e in (1, -1)]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for v, e in alphabet:
                w2 = reduce_word(ctx, list(w.letters) + [(v, e)])
                if w2 not in seen and w2.length() <= max_len:
                    seen.add(w2)
                    nxt.append(w2)
        frontier = nxt
    return sorted(seen, key=word_key)


def bounded_module_elements(
    ctx: FreeContext, field, bounds: SearchBounds
) -> list[ModuleElement]:
    """Nonzero module elements with at most bounds.max_terms terms total,
    words bounded by bounds.max_word_len, sorted canonically."""
    words = bounded_words(ctx, bounds.max_word_len)
    singles = []  # (x, word, coeff) primitive terms
    for x in range(len(ctx.xvars)):
        for w in words:
            for c in range(1, field.p):
                singles.append((x, w, c))
    out = []
    for k in range(1, bounds.max_terms + 1):
        for combo in combinations(range(len(singles)), k):
            picked = [singles[i] for i in combo]
            # distinct (x, word) slots only; merged duplicates would change
            # the term count
            if len({(x, w) for x, w, _ in picked}) != k:
                continue
            elem = module_zero(ctx, field)
            for x, w, c in picked:
                elem = module_add(
                    elem, module_term(ctx, field, x, ring_from_terms(ctx, field, [(w, c)]))
                )
            if not elem.is_zero():
                out.append(elem)
    uniq = sorted(set(out), key=module_key)
    return uniq


def bounded_atoms(ctx: FreeContext, field, bounds: SearchBounds) -> list[Atom]:
    atoms: list[Atom] = [GroupAtom(w) for w in bounded_words(ctx, bounds.max_word_len)]
    atoms.extend(ModuleAtom(u) for u in bounded_module_elements(ctx, field, bounds))
    return sorted(atoms, key=atom_key)


# ---------------------------------------------------------------------------
# Satisfaction masks (internal speed-up for the scans; semantics are the
# same exhaustive filters as above)


def _atom_sat_mask(rep: Representation, asgs: list[Assignment], a: Atom) -> int:
    m = 0
    for i, asg in enumerate(asgs):
        if eval_atom(asg, a):
            m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# Separation certificates (the finite form of embeddings into powers)


@dataclass(frozen=True)
class SeparationCertificate:
    """A hom family that is jointly injective on every sort of the source.

    For groups: every distinct pair of elements gets distinct images
    under some listed hom.  For representations additionally the joint
    matrix kernel is trivial.
    """

    source: object
    target: object
    homs: tuple
    notes: tuple[str, ...]


@dataclass(frozen=True)
class SeparationOutcome:
    certificate: Optional[SeparationCertificate]
    inseparable_sort: Optional[str] = None  # "group" or "vector"
    inseparable_pair: Optional[tuple] = None


def _separate_group(
    src: FiniteGroup, tgt: FiniteGroup, caps: EnumerationCaps
) -> SeparationOutcome:
    homs = enumerate_group_homs(src, tgt, caps)
    pairs = {(i, j) for i in range(src.order) for j in range(i + 1, src.order)}
    chosen: list[GroupHom] = []
    notes: list[str] = []
    for h in homs:
        new = {pq for pq in pairs if h.image[pq[0]] != h.image[pq[1]]}
        if new:
            chosen.append(h)
            for i, j in sorted(new):
                notes.append(
                    f"hom {len(chosen) - 1} separates ({src.names[i]}, {src.names[j]})"
                )
            pairs -= new
        if not pairs:
            break
    if pairs:
        i, j = min(pairs)
        return SeparationOutcome(None, "group", (src.names[i], src.names[j]))
    return SeparationOutcome(
        SeparationCertificate(src, tgt, tuple(chosen), tuple(notes))
    )


def _separate_rep(
    src: Representation, tgt: Representation, caps: EnumerationCaps
) -> SeparationOutcome:
    homs = enumerate_rep_homs(src, tgt, caps)
    g = src.group
    pairs = {(i, j) for i in range(g.order) for j in range(i + 1, g.order)}
    chosen: list[RepHom] = []
    notes: list[str] = []
    mats: list = []
    kdim = src.dim  # dimension of the current joint kernel
    for h in homs:
        new = {pq for pq in pairs if h.grouphom.image[pq[0]] != h.grouphom.image[pq[1]]}
        nk = len(kernel_of_matrix_family(src.p, mats + [h.matrix], src.dim))
        if new or nk < kdim:
            chosen.append(h)
            mats.append(h.matrix)
            for i, j in sorted(new):
                notes.append(
                    f"hom {len(chosen) - 1} separates group pair ({g.names[i]}, {g.names[j]})"
                )
            if nk < kdim:
                notes.append(f"hom {len(chosen) - 1} cuts joint kernel to dim {nk}")
            pairs -= new
            kdim = nk
        if not pairs and kdim == 0:
            break
    if pairs:
        i, j = min(pairs)
        return SeparationOutcome(None, "group", (g.names[i], g.names[j]))
    if kdim > 0:
        v = next(
            v for v in kernel_of_matrix_family(src.p, mats, src.dim) if any(v)
        )
        return SeparationOutcome(None, "vector", (v, zero_vec(src.dim)))
    return SeparationOutcome(
        SeparationCertificate(src, tgt, tuple(chosen), tuple(notes))
    )


def separates_points(source, target, caps: EnumerationCaps = DEFAULT_CAPS) -> SeparationOutcome:
    if isinstance(source, FiniteGroup) and isinstance(target, FiniteGroup):
        return _separate_group(source, target, caps)
    if isinstance(source, Representation) and isinstance(target, Representation):
        if source.field != target.field:
            raise FieldMismatch("representations over different fields")
        return _separate_rep(source, target, caps)
    raise InvalidInput("source and target must both be groups or both representations")


def validate_separation_certificate(cert: SeparationCertificate) -> bool:
    """Re-check a certificate through the definitional route: validate
    every hom by direct sweep and check injectivity pair by pair (and
    vector by vector), independently of the greedy construction."""
    if isinstance(cert.source, FiniteGroup):
        for h in cert.homs:
            img, t1, t2 = h.image, cert.source.table, cert.target.table
            if img[0] != 0:
                return False
            for i in range(cert.source.order):
                for j in range(cert.source.order):
                    if img[t1[i][j]] != t2[img[i]][img[j]]:
                        return False
        for i in range(cert.source.order):
            for j in range(i + 1, cert.source.order):
                if not any(h.image[i] != h.image[j] for h in cert.homs):
                    return False
        return True
    src: Representation = cert.source
    for h in cert.homs:
        if not check_rep_hom(h):
            return False
    g = src.group
    for i in range(g.order):
        for j in range(i + 1, g.order):
            if not any(h.grouphom.image[i] != h.grouphom.image[j] for h in cert.homs):
                return False
    from .linalg import vec_mat

    for v in src.vectors():
        if any(v) and not any(any(vec_mat(src.p, v, h.matrix)) for h in cert.homs):
            return False
    return True


# ---------------------------------------------------------------------------
# Verdicts


@dataclass(frozen=True)
class Equivalent:
    certificate: object


@dataclass(frozen=True)
class NotEquivalent:
    witness: object


@dataclass(frozen=True)
class Unknown:
    bounds: SearchBounds


Verdict = Union[Equivalent, NotEquivalent, Unknown]


@dataclass(frozen=True)
class GeoCertificate:
    forward: SeparationCertificate  # A embeds into a power of B
    backward: SeparationCertificate  # B embeds into a power of A


@dataclass(frozen=True)
class InseparabilityWitness:
    direction: str  # "forward" (A into B-power fails) or "backward"
    sort: str
    pair: tuple
    separating_qid: Optional[QuasiIdentity] = None


def geo_equivalent(
    a,
    b,
    caps: EnumerationCaps = DEFAULT_CAPS,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    search_qid: bool = True,
) -> Verdict:
    """Geometric equivalence via mutual embeddings into Cartesian powers,
    decided as point separation by the full hom family (exact for finite
    structures)."""
    fwd = separates_points(a, b, caps)
    bwd = separates_points(b, a, caps)
    if fwd.certificate is not None and bwd.certificate is not None:
        return Equivalent(GeoCertificate(fwd.certificate, bwd.certificate))
    bad = fwd if fwd.certificate is None else bwd
    direction = "forward" if fwd.certificate is None else "backward"
    qid = None
    if (
        search_qid
        and isinstance(a, Representation)
        and isinstance(b, Representation)
    ):
        qid = find_separating_qid(a, b, bounds, caps)
    return NotEquivalent(
        InseparabilityWitness(direction, bad.inseparable_sort, bad.inseparable_pair, qid)
    )


@dataclass(frozen=True)
class AtChainCertificate:
    """Equivalence chain: R ~at its faithful image, the faithful images
    are geometrically (hence action-type) equivalent, and symmetrically."""

    faithful_first: object  # FaithfulImage
    faithful_second: object
    quotient_geo: Equivalent


@dataclass(frozen=True)
class AtWitness:
    """An action-type system and candidate whose closure membership
    differs between the two representations."""

    system: EquationSystem
    candidate: ModuleElement
    in_first: bool
    in_second: bool


def validate_at_witness(
    r: Representation, s: Representation, w: AtWitness, caps: EnumerationCaps = DEFAULT_CAPS
) -> bool:
    return (
        in_at_closure(r, w.system, w.candidate, caps) == w.in_first
        and in_at_closure(s, w.system, w.candidate, caps) == w.in_second
        and w.in_first != w.in_second
    )


def find_at_witness(
    r: Representation,
    s: Representation,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> Optional[AtWitness]:
    """Deterministic bounded scan over action-type systems and candidates;
    first asymmetry wins and is re-checked before return."""
    if r.field != s.field:
        raise FieldMismatch("representations over different fields")
    for nx in range(1, bounds.max_xvars + 1):
        for ny in range(1, bounds.max_yvars + 1):
            ctx = scan_context(nx, ny)
            pool = bounded_module_elements(ctx, r.field, bounds)
            asgs_r = enumerate_assignments(r, ctx, caps)
            asgs_s = enumerate_assignments(s, ctx, caps)
            mask_r = {u: _atom_sat_mask(r, asgs_r, ModuleAtom(u)) for u in pool}
            mask_s = {u: _atom_sat_mask(s, asgs_s, ModuleAtom(u)) for u in pool}
            full_r = (1 << len(asgs_r)) - 1
            full_s = (1 << len(asgs_s)) - 1
            systems = [()]
            for k in range(1, bounds.max_system + 1):
                systems.extend(combinations(pool, k))
            for t in systems:
                sol_r = full_r
                sol_s = full_s
                for u in t:
                    sol_r &= mask_r[u]
                    sol_s &= mask_s[u]
                for u in pool:
                    mem_r = (sol_r & ~mask_r[u]) == 0
                    mem_s = (sol_s & ~mask_s[u]) == 0
                    if mem_r != mem_s:
                        w = AtWitness(equation_system(ctx, t), u, mem_r, mem_s)
                        if validate_at_witness(r, s, w, caps):
                            return w
    return None


def at_equivalent(
    r: Representation,
    s: Representation,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> Verdict:
    """Action-type equivalence, as a semi-decision.

    Equivalent only via the faithful-image chain; NotEquivalent only via
    a concrete bounded witness; otherwise Unknown.
    """
    fi_r = faithful_image(r)
    fi_s = faithful_image(s)
    g = geo_equivalent(fi_r.quotient, fi_s.quotient, caps, bounds, search_qid=False)
    if isinstance(g, Equivalent):
        return Equivalent(AtChainCertificate(fi_r, fi_s, g))
    w = find_at_witness(r, s, bounds, caps)
    if w is not None:
        return NotEquivalent(w)
    return Unknown(bounds)


def paper_witness_qid(ctx: FreeContext, field) -> QuasiIdentity:
    """The one-variable implication (x.y - x = 0) => (y = 1)."""
    y = reduce_word(ctx, [(0, 1)])
    one = identity_word(ctx)
    u = module_term(
        ctx, field, 0, ring_from_terms(ctx, field, [(y, 1), (one, -1)])
    )
    return QuasiIdentity((ModuleAtom(u),), GroupAtom(y))


def find_separating_qid(
    r: Representation,
    s: Representation,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> Optional[QuasiIdentity]:
    """First bounded quasi-identity on which the two representations
    disagree, scanning premises and conclusions over the bounded atom
    space.  The audit's witness implication is always in the scan."""
    if r.field != s.field:
        raise FieldMismatch("representations over different fields")
    for nx in range(1, bounds.max_xvars + 1):
        for ny in range(1, bounds.max_yvars + 1):
            ctx = scan_context(nx, ny)
            atoms = bounded_atoms(ctx, r.field, bounds)
            wq = paper_witness_qid(ctx, r.field)
            pool = set(atoms) | set(wq.premises) | {wq.conclusion}
            atoms = sorted(pool, key=atom_key)
            asgs_r = enumerate_assignments(r, ctx, caps)
            asgs_s = enumerate_assignments(s, ctx, caps)
            mask_r = {a: _atom_sat_mask(r, asgs_r, a) for a in atoms}
            mask_s = {a: _atom_sat_mask(s, asgs_s, a) for a in atoms}
            full_r = (1 << len(asgs_r)) - 1
            full_s = (1 << len(asgs_s)) - 1
            prem_sets = [()]
            for k in range(1, bounds.max_premises + 1):
                prem_sets.extend(combinations(atoms, k))
            for prems in prem_sets:
                pr = full_r
                ps = full_s
                for a in prems:
                    pr &= mask_r[a]
                    ps &= mask_s[a]
                for concl in atoms:
                    ok_r = (pr & ~mask_r[concl]) == 0
                    ok_s = (ps & ~mask_s[concl]) == 0
                    if ok_r != ok_s:
                        q = QuasiIdentity(tuple(prems), concl)
                        # re-verify through the direct evaluator
                        vr, _ = fulfills_qid(r, q, caps)
                        vs, _ = fulfills_qid(s, q, caps)
                        if vr != vs:
                            return q
    return None

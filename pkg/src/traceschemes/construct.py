"""Generators for traceability schemes: shared-core systems, finite-geometry
designs, the common-point design extension, and the greedy packing.

All generators emit canonical :class:`~traceschemes.core.SetSystem` objects
with a fixed point numbering (field elements ordered by coefficient tuples,
projective points by normalized homogeneous coordinates, the infinite point
last), so repeated runs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb, isqrt

from .core import BudgetExceeded, ParamsInvalid, SetSystem, new_set_system
from .gf import GF, gf
from .verify import verify_design


class NotADesign(ParamsInvalid):
    """Extension base failed its design verification."""


class CongruenceViolated(ParamsInvalid):
    """Appended-point count d incompatible with the width congruence."""


@dataclass(frozen=True)
class DesignDescriptor:
    """Names a design family instance underlying a construction."""

    family: str
    tau: int
    v: int
    w: int
    lam: int = 1
    detail: str = ""


@dataclass(frozen=True)
class ExtensionCertificate:
    """Records why an extended design is a strength-t traceability scheme.

    The certified system has d common points appended to every block of a
    tau-(v-d, w-d, 1) design, with w == d+1 (mod t*t); certified TS
    verification re-derives the whole argument from the system itself.
    """

    base: DesignDescriptor
    d: int
    t: int
    tau: int


def trivial_ts(v: int, w: int) -> SetSystem:
    """v-w+1 blocks sharing a common (w-1)-core, one extra point each.

    A traceability scheme at every strength: outside the core, every block
    owns a unique point.
    """
    if not v >= w >= 1:
        raise ParamsInvalid(f"need v >= w >= 1, got v={v} w={w}")
    core = list(range(w - 1))
    blocks = [core + [j] for j in range(w - 1, v)]
    return new_set_system(v, blocks)


# ---------------------------------------------------------------------------
# finite-geometry designs


def _canon_projective(field: GF, vec: tuple[int, ...]) -> tuple[int, ...]:
    for c in vec:
        if c:
            inv = field.inv[c]
            return tuple(field.mul[inv][x] for x in vec)
    raise ValueError("zero vector has no projective representative")


def _projective_points(field: GF, dim: int) -> list[tuple[int, ...]]:
    pts = {(0,) * i + (1,) + tail
           for i in range(dim)
           for tail in product(range(field.q), repeat=dim - i - 1)}
    return sorted(pts)


def _vec_add(field: GF, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(field.add[x][y] for x, y in zip(a, b))


def _vec_scale(field: GF, c: int, a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(field.mul[c][x] for x in a)


def pg_lines(n: int, q: int) -> SetSystem:
    """Lines of the n-dimensional projective geometry over GF(q).

    Points are the 1-dimensional subspaces of GF(q)^(n+1), blocks the
    2-dimensional ones; a 2-design with index 1, width q+1, on
    q^n + ... + q + 1 points.
    """
    if n < 2:
        raise ParamsInvalid(f"projective dimension n={n} must be >= 2")
    field = gf(q)
    pts = _projective_points(field, n + 1)
    index = {pt: i for i, pt in enumerate(pts)}
    lines: set[frozenset[int]] = set()
    for i, j in combinations(range(len(pts)), 2):
        p_vec, q_vec = pts[i], pts[j]
        members = {index[_canon_projective(field, q_vec)]}
        for lam in range(field.q):
            members.add(index[_canon_projective(
                field, _vec_add(field, p_vec, _vec_scale(field, lam, q_vec)))])
        lines.add(frozenset(members))
    return new_set_system(len(pts), [sorted(line) for line in lines])


def ag_lines(n: int, q: int) -> SetSystem:
    """Lines of the n-dimensional affine geometry over GF(q).

    Points are the vectors of GF(q)^n, blocks the affine lines; a 2-design
    with index 1, width q, on q^n points.
    """
    if n < 2:
        raise ParamsInvalid(f"affine dimension n={n} must be >= 2")
    field = gf(q)
    pts = sorted(product(range(q), repeat=n))
    index = {pt: i for i, pt in enumerate(pts)}
    lines: set[frozenset[int]] = set()
    for i, j in combinations(range(len(pts)), 2):
        base, other = pts[i], pts[j]
        direction = tuple(field.sub(x, y) for x, y in zip(other, base))
        members = frozenset(index[_vec_add(field, base, _vec_scale(field, lam, direction))]
                            for lam in range(q))
        lines.add(members)
    return new_set_system(len(pts), [sorted(line) for line in lines])


def _mobius_to_base(field: GF, a: int | None, b: int | None, c: int | None):
    """Coefficients of the fractional-linear map sending (a, b, c) -> (0, 1, oo).

    None stands for the infinite point.  Returns (alpha, beta, gamma, delta)
    for z -> (alpha*z + beta) / (gamma*z + delta).
    """
    sub, mul = field.sub, field.mul
    if a is None:
        return 0, sub(b, c), 1, field.neg[c]
    if b is None:
        return 1, field.neg[a], 1, field.neg[c]
    if c is None:
        return 1, field.neg[a], 0, sub(b, a)
    return sub(b, c), field.neg[mul[a][sub(b, c)]], sub(b, a), field.neg[mul[c][sub(b, a)]]


def _mobius_apply(field: GF, coeffs, z: int | None) -> int | None:
    alpha, beta, gamma, delta = coeffs
    if z is None:
        return None if gamma == 0 else field.div(alpha, gamma)
    num = field.add[field.mul[alpha][z]][beta]
    den = field.add[field.mul[gamma][z]][delta]
    return None if den == 0 else field.div(num, den)


def inversive_plane(q: int) -> SetSystem:
    """Circle geometry on the projective line over GF(q^2).

    Points are the q^2 field elements plus one infinite point (numbered
    last); blocks are the images of the order-q subline under all
    fractional-linear maps, i.e. the circles through each point triple.
    A 3-design with index 1, width q+1, and q^3 + q blocks.
    """
    field = gf(q * q)
    sub_members = set(field.subfield(q))
    inf_id = field.q
    v = field.q + 1

    def pt_id(z: int | None) -> int:
        return inf_id if z is None else z

    def pt_of(i: int) -> int | None:
        return None if i == inf_id else i

    def circle_through(ids: tuple[int, int, int]) -> frozenset[int]:
        coeffs = _mobius_to_base(field, *(pt_of(i) for i in ids))
        members = []
        for i in range(v):
            img = _mobius_apply(field, coeffs, pt_of(i))
            if img is None or img in sub_members:
                members.append(i)
        return frozenset(members)

    circles: set[frozenset[int]] = set()
    covered: set[tuple[int, int, int]] = set()
    for triple in combinations(range(v), 3):
        if triple in covered:
            continue
        circle = circle_through(triple)
        circles.add(circle)
        covered.update(combinations(sorted(circle), 3))
    return new_set_system(v, [sorted(c) for c in circles])


def hermitian_unital(q: int) -> SetSystem:
    """Unital of the Hermitian curve in the projective plane over GF(q^2).

    Points are the q^3 + 1 solutions of x^(q+1) + y^(q+1) + z^(q+1) = 0,
    blocks the secant-line sections; a 2-design with index 1, width q+1,
    and q^2 (q^2 - q + 1) blocks.
    """
    field = gf(q * q)
    pts = _projective_points(field, 3)
    curve = [pt for pt in pts
             if not _hermitian_form(field, q, pt)]
    index = {pt: i for i, pt in enumerate(curve)}
    on_curve = set(curve)
    blocks: set[frozenset[int]] = set()
    for i, j in combinations(range(len(curve)), 2):
        p_vec, q_vec = curve[i], curve[j]
        section = set()
        cq = _canon_projective(field, q_vec)
        if cq in on_curve:
            section.add(index[cq])
        for lam in range(field.q):
            pt = _canon_projective(field, _vec_add(field, p_vec, _vec_scale(field, lam, q_vec)))
            if pt in on_curve:
                section.add(index[pt])
        blocks.add(frozenset(section))
    return new_set_system(len(curve), [sorted(b) for b in blocks])


def _hermitian_form(field: GF, q: int, vec: tuple[int, ...]) -> int:
    total = 0
    for x in vec:
        total = field.add[total][field.pow(x, q + 1)]
    return total


# ---------------------------------------------------------------------------
# design extension and packing


def extend_design(base: SetSystem, d: int, t: int,
                  descriptor: DesignDescriptor | None = None) -> tuple[SetSystem, ExtensionCertificate]:
    """Append d fresh points to every block of a suitable design.

    The base must be a tau-(v0, w0, 1) design with tau = ceil((w0+d)/t^2)
    and w0 + d == d + 1 (mod t^2); the result is a strength-t traceability
    scheme on v0 + d points with the same number of blocks, plus a
    certificate that certified verification re-checks from scratch.
    """
    if t < 2:
        raise ParamsInvalid(f"strength t={t} must be >= 2")
    tt = t * t
    if not 0 <= d <= tt - 1:
        raise CongruenceViolated(f"d={d} outside [0, {tt - 1}]")
    w = base.w + d
    if w % tt != (d + 1) % tt:
        raise CongruenceViolated(f"width {base.w}+{d} is not d+1 (mod {tt})")
    tau = -(-w // tt)
    outcome = verify_design(base, tau, 1)
    if not outcome.holds:
        raise NotADesign(f"base is not a {tau}-design with index 1: {outcome.detail}")
    fresh = list(range(base.v, base.v + d))
    blocks = [list(b) + fresh for b in base.blocks]
    extended = new_set_system(base.v + d, blocks)
    if descriptor is None:
        descriptor = DesignDescriptor(family="explicit", tau=tau, v=base.v, w=base.w)
    cert = ExtensionCertificate(base=descriptor, d=d, t=t, tau=tau)
    return extended, cert


def design_max_strength(tau: int, w: int) -> int:
    """Traceability strength certified for a tau-(v, w, 1) design."""
    if tau < 2:
        raise ParamsInvalid(f"design strength tau={tau} must be >= 2")
    return isqrt((w - 1) // (tau - 1))


def _colex_subsets(v: int, k: int):
    """Ascending k-tuples from range(v) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, v):
        for rest in _colex_subsets(top, k - 1):
            yield rest + (top,)


def greedy_packing_ts(v: int, w: int, t: int, budget: int = 10_000_000) -> SetSystem:
    """Maximal ceil(w/t^2)-packing grown greedily in colex order.

    Streams all w-subsets in colexicographic order and keeps each one that
    meets every kept block in fewer than ceil(w/t^2) points.  The result is
    a strength-t traceability scheme of size at least
    C(v, tau) / C(w, tau)^2 with tau = ceil(w/t^2).
    """
    if not v >= w >= t >= 2:
        raise ParamsInvalid(f"need v >= w >= t >= 2, got v={v} w={w} t={t}")
    if comb(v, w) > budget:
        raise BudgetExceeded(f"C({v},{w}) = {comb(v, w)} exceeds budget {budget}")
    tau = -(-w // (t * t))
    kept_masks: list[int] = []
    kept: list[tuple[int, ...]] = []
    for cand in _colex_subsets(v, w):
        m = 0
        for p in cand:
            m |= 1 << p
        if all((m & km).bit_count() < tau for km in kept_masks):
            kept.append(cand)
            kept_masks.append(m)
    return new_set_system(v, kept)

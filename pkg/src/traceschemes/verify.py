"""Exact decision procedures for set-system properties, with checkable witnesses.

Five properties are decided: tau-design, tau-packing, strength-t cover-free
family (CFF), strength-t parent-identifying set system (IPPS, plus its
variant over pirate sets larger than one block width), and strength-t
traceability scheme (TS).  Exhaustive mode enumerates the full quantifier
space and is decisive; certified mode for TS proves the property from a
pairwise-intersection packing condition or from a design-extension
certificate, and says "inconclusive" otherwise.

Every violation is reported as a structured witness that re-validates
against the raw system by direct recomputation (see :func:`check_witness`),
independent of any verifier state.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import (
    FormatError,
    ParamsInvalid,
    SetSystem,
    TauOutOfRange,
    _mask,
    new_set_system,
)

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

EXHAUSTIVE = "exhaustive"
CERTIFIED = "certified"

BUDGET_EXCEEDED = "BudgetExceeded"
DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class CffCover:
    """A block contained in the union of at most ``strength`` others."""

    target: int
    cover: tuple[int, ...]
    strength: int


@dataclass(frozen=True)
class TsEvasion:
    """A pirate set tying-or-beating every coalition member from outside.

    ``pirate`` is a w-subset of the coalition's union such that the block
    ``outsider`` satisfies |pirate & outsider| >= |pirate & member| for
    every coalition member.
    """

    coalition: tuple[int, ...]
    pirate: tuple[int, ...]
    outsider: int


@dataclass(frozen=True)
class IppsAmbiguity:
    """A pirate set whose covers of size <= strength share no common block."""

    pirate: tuple[int, ...]
    parents: tuple[tuple[int, ...], ...]
    strength: int


Witness = CffCover | TsEvasion | IppsAmbiguity


@dataclass(frozen=True)
class VerifyOutcome:
    verdict: str
    mode: str
    witness: Witness | None = None
    detail: str = ""
    work: int = 0

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    @property
    def inconclusive(self) -> bool:
        return self.verdict == INCONCLUSIVE


class _BudgetStop(Exception):
    pass


class _Work:
    __slots__ = ("count", "budget")

    def __init__(self, budget: int) -> None:
        self.count = 0
        self.budget = budget

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.count > self.budget:
            raise _BudgetStop


def _point_blocks(s: SetSystem) -> list[list[int]]:
    pb: list[list[int]] = [[] for _ in range(s.v)]
    for i, b in enumerate(s.blocks):
        for p in b:
            pb[p].append(i)
    return pb


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# designs and packings


def verify_design(s: SetSystem, tau: int, lam: int, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Holds iff every tau-subset of the ground set lies in exactly lam blocks."""
    if not 1 <= tau <= s.w:
        raise TauOutOfRange(f"tau={tau} outside [1, {s.w}]")
    work = _Work(budget)
    try:
        counts: Counter[tuple[int, ...]] = Counter()
        for b in s.blocks:
            work.tick(comb(s.w, tau))
            for sub in combinations(b, tau):
                counts[sub] += 1
        offenders = [sub for sub, c in counts.items() if c != lam]
        missing: tuple[int, ...] | None = None
        if lam > 0 and len(counts) < comb(s.v, tau):
            for sub in combinations(range(s.v), tau):
                work.tick()
                if sub not in counts:
                    missing = sub
                    break
        if not offenders and missing is None:
            return VerifyOutcome(HOLDS, EXHAUSTIVE, work=work.count)
        cands = ([min(offenders)] if offenders else []) + ([missing] if missing is not None else [])
        sub = min(cands)
        got = counts.get(sub, 0)
        detail = f"{tau}-subset {list(sub)} covered {got} times (expected {lam})"
        return VerifyOutcome(VIOLATED, EXHAUSTIVE, detail=detail, work=work.count)
    except _BudgetStop:
        return VerifyOutcome(INCONCLUSIVE, EXHAUSTIVE, detail=BUDGET_EXCEEDED, work=work.count)


def verify_packing(s: SetSystem, tau: int, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Holds iff every tau-subset lies in at most one block."""
    if not 1 <= tau <= s.w:
        raise TauOutOfRange(f"tau={tau} outside [1, {s.w}]")
    work = _Work(budget)
    try:
        # Equivalent to every pairwise block intersection having size < tau.
        repeated: tuple[int, ...] | None = None
        for i, j in combinations(range(s.m), 2):
            work.tick()
            inter = s.masks[i] & s.masks[j]
            if inter.bit_count() >= tau:
                shared = tuple(p for p in s.blocks[i] if inter >> p & 1)
                cand = min(combinations(shared, tau))
                if repeated is None or cand < repeated:
                    repeated = cand
        if repeated is None:
            return VerifyOutcome(HOLDS, EXHAUSTIVE, work=work.count)
        detail = f"{tau}-subset {list(repeated)} covered more than once"
        return VerifyOutcome(VIOLATED, EXHAUSTIVE, detail=detail, work=work.count)
    except _BudgetStop:
        return VerifyOutcome(INCONCLUSIVE, EXHAUSTIVE, detail=BUDGET_EXCEEDED, work=work.count)


# ---------------------------------------------------------------------------
# cover-free families


def _find_cover(s: SetSystem, pb: list[list[int]], target: int, limit: int,
                work: _Work) -> tuple[int, ...] | None:
    """First cover (fixed search order) of block ``target`` by <= limit others."""
    tmask = s.masks[target]
    masks = s.masks

    def rec(chosen: tuple[int, ...], covered: int) -> tuple[int, ...] | None:
        work.tick()
        rest = tmask & ~covered
        if rest == 0:
            return chosen
        depth_left = limit - len(chosen)
        if depth_left <= 0 or rest.bit_count() > depth_left * s.w:
            return None
        p = (rest & -rest).bit_length() - 1
        for b in pb[p]:
            if b != target and b not in chosen:
                got = rec(chosen + (b,), covered | masks[b])
                if got is not None:
                    return got
        return None

    return rec((), 0)


def verify_cff(s: SetSystem, t: int, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Holds iff no block is contained in the union of at most t others."""
    if t < 1:
        raise ParamsInvalid(f"strength t={t} must be >= 1")
    if s.m < 1:
        raise ParamsInvalid("cover-free check needs at least one block")
    work = _Work(budget)
    pb = _point_blocks(s)
    limit = min(t, s.m - 1)
    try:
        for b0 in range(s.m):
            cover = _find_cover(s, pb, b0, limit, work)
            if cover is not None:
                wit = CffCover(target=b0, cover=tuple(sorted(cover)), strength=t)
                return VerifyOutcome(VIOLATED, EXHAUSTIVE, witness=wit, work=work.count)
        return VerifyOutcome(HOLDS, EXHAUSTIVE, work=work.count)
    except _BudgetStop:
        return VerifyOutcome(INCONCLUSIVE, EXHAUSTIVE, detail=BUDGET_EXCEEDED, work=work.count)


# ---------------------------------------------------------------------------
# traceability schemes


def _coalitions_lex(m: int, t: int):
    """All index tuples of size 2..t over range(m), in lexicographic order."""

    def rec(prefix: tuple[int, ...], start: int):
        for nxt in range(start, m):
            tup = prefix + (nxt,)
            if len(tup) >= 2:
                yield tup
            if len(tup) < t:
                yield from rec(tup, nxt + 1)

    if t >= 2 and m >= 2:
        yield from rec((), 0)


def _greedy_evasion(coal_masks: list[int], o_mask: int, upoints: list[int],
                    w: int) -> tuple[int, ...] | None:
    """Adversarial pirate-set builder; only ever returns a true evasion.

    Takes everything the outsider shares with the union, then fills up to
    width ``w`` with points that keep the running maximum coalition overlap
    as low as possible (ties to the smallest point).
    """
    chosen = [p for p in upoints if o_mask >> p & 1]
    if len(chosen) > w:
        return None
    base = len(chosen)
    t_mask = _mask(chosen)
    counts = [(t_mask & cm).bit_count() for cm in coal_masks]
    avail = [p for p in upoints if not (o_mask >> p & 1)]
    while len(chosen) < w:
        best_p = -1
        best_max = None
        for p in avail:
            new_max = max(c + (1 if cm >> p & 1 else 0) for c, cm in zip(counts, coal_masks))
            if best_max is None or new_max < best_max:
                best_max, best_p = new_max, p
        avail.remove(best_p)
        chosen.append(best_p)
        counts = [c + (1 if cm >> best_p & 1 else 0) for c, cm in zip(counts, coal_masks)]
    if base >= max(counts):
        return tuple(sorted(chosen))
    return None


def _ts_coalition_witness(s: SetSystem, coalition: tuple[int, ...],
                          work: _Work) -> tuple[tuple[int, ...], int] | None:
    """Lexicographically first (pirate set, outsider) evading this coalition.

    Runs the cheap greedy adversary per eligible outsider first; whether or
    not it hits, the exact lexicographic scan decides (and canonicalizes the
    witness).  Returns None iff the coalition cannot be evaded.
    """
    masks = s.masks
    union = s.union_mask(coalition)
    upoints = [p for p in range(s.v) if union >> p & 1]
    if len(upoints) < s.w:
        return None
    sc = len(coalition)
    in_coal = set(coalition)
    work.tick(s.m)  # eligibility scan below
    # An outsider needs |T & B| >= max member overlap >= ceil(w / sc).
    floor_thr = _ceil_div(s.w, sc)
    eligible = [o for o in range(s.m)
                if o not in in_coal and (masks[o] & union).bit_count() >= floor_thr]
    if not eligible:
        return None
    coal_masks = [masks[j] for j in coalition]
    greedy_hit = False
    for o in eligible:
        work.tick(s.w)
        if _greedy_evasion(coal_masks, masks[o] & union, upoints, s.w) is not None:
            greedy_hit = True
            break
    # Exact scan; first hit in (pirate, outsider) order is the canonical witness.
    elig_masks = [(o, masks[o]) for o in eligible]
    for tpts in combinations(upoints, s.w):
        t_mask = _mask(tpts)
        work.tick(sc + len(eligible))
        thr = max((t_mask & cm).bit_count() for cm in coal_masks)
        for o, om in elig_masks:
            if (t_mask & om).bit_count() >= thr:
                return tpts, o
    assert not greedy_hit, "greedy adversary produced an unconfirmed evasion"
    return None


def _extension_certificate_holds(s: SetSystem, t: int, cert) -> tuple[bool, str]:
    """Re-derive the design-extension argument from the raw system.

    ``cert`` only names (d, t, tau); everything is recomputed: the d
    appended points must lie in every block, the width must satisfy
    w == d+1 (mod t*t), and stripping the appended points must leave a
    tau-(v-d, w-d, 1) design.
    """
    d = getattr(cert, "d", None)
    cert_t = getattr(cert, "t", None)
    tau = getattr(cert, "tau", None)
    if d is None or cert_t is None or tau is None:
        return False, "certificate missing fields"
    if cert_t != t:
        return False, f"certificate strength {cert_t} != requested {t}"
    tt = t * t
    if not 0 <= d <= tt - 1:
        return False, f"certificate d={d} outside [0, {tt - 1}]"
    if s.w % tt != (d + 1) % tt:
        return False, f"width {s.w} is not d+1 (mod t^2) for d={d}"
    if tau != _ceil_div(s.w, tt):
        return False, f"certificate tau={tau} != ceil(w/t^2)"
    appended = _mask(range(s.v - d, s.v))
    if any(mask & appended != appended for mask in s.masks):
        return False, "appended points missing from some block"
    base_blocks = [[p for p in b if p < s.v - d] for b in s.blocks]
    try:
        base = new_set_system(s.v - d, base_blocks)
    except Exception as exc:
        return False, f"stripped base system invalid: {exc}"
    if not verify_design(base, tau, 1).holds:
        return False, f"stripped base is not a {tau}-design with index 1"
    return True, f"extension certificate: {tau}-design base plus {d} common points"


def verify_ts(s: SetSystem, t: int, mode: str = EXHAUSTIVE,
              budget: int = DEFAULT_BUDGET, certificate=None) -> VerifyOutcome:
    """Decide the strength-t traceability property.

    Exhaustive mode checks every coalition of 2..t blocks, every w-subset
    of its union and every outside block (size-1 coalitions cannot be
    evaded because blocks are distinct).  Certified mode accepts a pairwise
    intersection bound (every two blocks share < ceil(w/t^2) points) or a
    design-extension certificate, and is otherwise inconclusive.
    """
    if t < 1:
        raise ParamsInvalid(f"strength t={t} must be >= 1")
    if mode == CERTIFIED:
        work = _Work(budget)
        if s.m <= 1:
            return VerifyOutcome(HOLDS, CERTIFIED, detail="at most one block", work=0)
        tau = _ceil_div(s.w, t * t)
        pk = verify_packing(s, tau, budget)
        if pk.holds:
            detail = f"pairwise intersections below {tau} certify strength {t}"
            return VerifyOutcome(HOLDS, CERTIFIED, detail=detail, work=pk.work)
        if certificate is not None:
            ok, why = _extension_certificate_holds(s, t, certificate)
            if ok:
                return VerifyOutcome(HOLDS, CERTIFIED, detail=why, work=pk.work)
            return VerifyOutcome(INCONCLUSIVE, CERTIFIED, detail=why, work=pk.work)
        return VerifyOutcome(INCONCLUSIVE, CERTIFIED,
                             detail="no packing certificate; run exhaustive mode",
                             work=pk.work)
    if mode != EXHAUSTIVE:
        raise ParamsInvalid(f"unknown mode {mode!r}")
    work = _Work(budget)
    if t == 1 or s.m <= 1:
        return VerifyOutcome(HOLDS, EXHAUSTIVE, detail="size-1 coalitions cannot be evaded",
                             work=0)
    try:
        for coalition in _coalitions_lex(s.m, t):
            found = _ts_coalition_witness(s, coalition, work)
            if found is not None:
                tpts, o = found
                wit = TsEvasion(coalition=coalition, pirate=tpts, outsider=o)
                return VerifyOutcome(VIOLATED, EXHAUSTIVE, witness=wit, work=work.count)
        return VerifyOutcome(HOLDS, EXHAUSTIVE, work=work.count)
    except _BudgetStop:
        return VerifyOutcome(INCONCLUSIVE, EXHAUSTIVE, detail=BUDGET_EXCEEDED, work=work.count)


# ---------------------------------------------------------------------------
# parent-identifying set systems


def _cover_common(s: SetSystem, pb: list[list[int]], t_mask: int, limit: int,
                  work: _Work) -> set[int] | None:
    """Intersection of all covers of ``t_mask`` by <= limit blocks.

    Returns None when no cover exists.  Every minimal cover is visited, so
    the running intersection equals the intersection over all covers; the
    search aborts as soon as the intersection is known to be empty.
    """
    masks = s.masks
    common: set[int] | None = None

    def rec(chosen: tuple[int, ...], covered: int) -> bool:
        nonlocal common
        work.tick()
        rest = t_mask & ~covered
        if rest == 0:
            cs = set(chosen)
            common = cs if common is None else common & cs
            return not common
        if len(chosen) >= limit:
            return False
        p = (rest & -rest).bit_length() - 1
        for b in pb[p]:
            if b not in chosen:
                if rec(chosen + (b,), covered | masks[b]):
                    return True
        return False

    rec((), 0)
    return common


def _minimal_covers(s: SetSystem, pb: list[list[int]], t_mask: int, limit: int,
                    work: _Work) -> list[tuple[int, ...]]:
    """All minimal covers of ``t_mask`` of size <= limit, sorted."""
    masks = s.masks
    found: set[frozenset[int]] = set()

    def rec(chosen: tuple[int, ...], covered: int) -> None:
        work.tick()
        rest = t_mask & ~covered
        if rest == 0:
            found.add(frozenset(chosen))
            return
        if len(chosen) >= limit:
            return
        p = (rest & -rest).bit_length() - 1
        for b in pb[p]:
            if b not in chosen:
                rec(chosen + (b,), covered | masks[b])

    rec((), 0)
    minimal = [c for c in found if not any(o < c for o in found)]
    return sorted(tuple(sorted(c)) for c in minimal)


def _ipps_pirate_sets(s: SetSystem, t: int, sizes: tuple[int, ...],
                      work: _Work) -> list[tuple[int, ...]]:
    """Deduplicated pirate-set candidates: subsets of coalition unions.

    Any set coverable by <= t blocks is a subset of some min(t, m)-coalition
    union, so enumerating those unions is exhaustive.
    """
    se = min(t, s.m)
    seen: set[tuple[int, ...]] = set()
    for coalition in combinations(range(s.m), se):
        union = s.union_mask(coalition)
        upoints = [p for p in range(s.v) if union >> p & 1]
        for k in sizes:
            if k > len(upoints):
                continue
            work.tick(comb(len(upoints), k))
            for tpts in combinations(upoints, k):
                seen.add(tpts)
    return sorted(seen)


def _verify_ipps_over(s: SetSystem, t: int, sizes: tuple[int, ...],
                      budget: int) -> VerifyOutcome:
    if t < 1:
        raise ParamsInvalid(f"strength t={t} must be >= 1")
    work = _Work(budget)
    if s.m == 0:
        return VerifyOutcome(HOLDS, EXHAUSTIVE, work=0)
    pb = _point_blocks(s)
    try:
        for tpts in _ipps_pirate_sets(s, t, sizes, work):
            t_mask = _mask(tpts)
            common = _cover_common(s, pb, t_mask, t, work)
            if common is not None and not common:
                parents = _minimal_covers(s, pb, t_mask, t, work)
                wit = IppsAmbiguity(pirate=tpts, parents=tuple(parents), strength=t)
                return VerifyOutcome(VIOLATED, EXHAUSTIVE, witness=wit, work=work.count)
        return VerifyOutcome(HOLDS, EXHAUSTIVE, work=work.count)
    except _BudgetStop:
        return VerifyOutcome(INCONCLUSIVE, EXHAUSTIVE, detail=BUDGET_EXCEEDED, work=work.count)


def verify_ipps(s: SetSystem, t: int, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Holds iff every width-w pirate set with a cover has a common parent block."""
    return _verify_ipps_over(s, t, (s.w,), budget)


def verify_ipps_star(s: SetSystem, t: int, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Like :func:`verify_ipps` but pirate sets range over sizes w..t*w."""
    sizes = tuple(range(s.w, t * s.w + 1))
    return _verify_ipps_over(s, t, sizes, budget)


# ---------------------------------------------------------------------------
# witness re-validation and text form


def check_witness(s: SetSystem, wit: Witness) -> tuple[bool, str]:
    """Re-validate a witness against the raw system by direct recomputation."""
    m = s.m
    if isinstance(wit, CffCover):
        if not 0 <= wit.target < m:
            return False, "target index out of range"
        if len(set(wit.cover)) != len(wit.cover) or not wit.cover:
            return False, "cover indices not distinct or empty"
        if any(not 0 <= i < m for i in wit.cover) or wit.target in wit.cover:
            return False, "cover indices invalid"
        if wit.strength < 1 or len(wit.cover) > wit.strength:
            return False, f"cover size {len(wit.cover)} exceeds strength {wit.strength}"
        union = s.union_mask(wit.cover)
        if s.masks[wit.target] & ~union:
            return False, "cover does not contain the target block"
        return True, "cover verified"
    if isinstance(wit, TsEvasion):
        coal = wit.coalition
        if not coal or len(set(coal)) != len(coal):
            return False, "coalition empty or repeated"
        if any(not 0 <= i < m for i in coal):
            return False, "coalition index out of range"
        if not 0 <= wit.outsider < m or wit.outsider in coal:
            return False, "outsider invalid"
        pirate = wit.pirate
        if len(pirate) != s.w or any(pirate[i] >= pirate[i + 1] for i in range(len(pirate) - 1)):
            return False, "pirate set must be an ascending w-subset"
        if any(not 0 <= p < s.v for p in pirate):
            return False, "pirate point out of range"
        t_mask = _mask(pirate)
        if t_mask & ~s.union_mask(coal):
            return False, "pirate set not inside the coalition union"
        out_overlap = (t_mask & s.masks[wit.outsider]).bit_count()
        for j in coal:
            if out_overlap < (t_mask & s.masks[j]).bit_count():
                return False, f"outsider overlap below member {j}"
        return True, "evasion verified"
    if isinstance(wit, IppsAmbiguity):
        pirate = wit.pirate
        if len(pirate) < s.w or any(pirate[i] >= pirate[i + 1] for i in range(len(pirate) - 1)):
            return False, "pirate set must be ascending with at least w points"
        if any(not 0 <= p < s.v for p in pirate):
            return False, "pirate point out of range"
        if not wit.parents:
            return False, "no parent sets listed"
        t_mask = _mask(pirate)
        for parent in wit.parents:
            if not parent or len(set(parent)) != len(parent):
                return False, "parent set empty or repeated"
            if any(not 0 <= i < m for i in parent):
                return False, "parent index out of range"
            if len(parent) > wit.strength:
                return False, "parent set larger than strength"
            if t_mask & ~s.union_mask(parent):
                return False, "a parent set does not cover the pirate set"
        shared = set(wit.parents[0])
        for parent in wit.parents[1:]:
            shared &= set(parent)
        if shared:
            return False, "parent sets share a common block"
        return True, "ambiguity verified"
    return False, f"unknown witness type {type(wit).__name__}"


def render_witness(wit: Witness) -> str:
    """Deterministic text block, one line per component."""
    if isinstance(wit, CffCover):
        lines = ["witness cff-cover",
                 f"strength {wit.strength}",
                 f"target {wit.target}",
                 "cover " + " ".join(map(str, wit.cover))]
    elif isinstance(wit, TsEvasion):
        lines = ["witness ts-evasion",
                 "coalition " + " ".join(map(str, wit.coalition)),
                 "pirate " + " ".join(map(str, wit.pirate)),
                 f"outsider {wit.outsider}"]
    elif isinstance(wit, IppsAmbiguity):
        lines = ["witness ipps-ambiguity",
                 f"strength {wit.strength}",
                 "pirate " + " ".join(map(str, wit.pirate))]
        lines.extend("parent " + " ".join(map(str, p)) for p in wit.parents)
    else:
        raise FormatError(f"cannot render {type(wit).__name__}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> Witness:
    """Parse the text block produced by :func:`render_witness`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("witness "):
        raise FormatError("missing 'witness <kind>' line")
    kind = lines[0].split(None, 1)[1]
    fields: dict[str, list[list[int]]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        key, vals = parts[0], parts[1:]
        if not all(v.lstrip("-").isdigit() for v in vals):
            raise FormatError(f"non-integer value in line {ln!r}")
        fields.setdefault(key, []).append([int(v) for v in vals])

    def one(key: str, width: int | None = None) -> list[int]:
        if key not in fields or len(fields[key]) != 1:
            raise FormatError(f"expected exactly one '{key}' line")
        vals = fields[key][0]
        if width is not None and len(vals) != width:
            raise FormatError(f"'{key}' expects {width} value(s)")
        return vals

    if kind == "cff-cover":
        if set(fields) != {"strength", "target", "cover"}:
            raise FormatError("cff-cover needs strength, target, cover lines")
        return CffCover(target=one("target", 1)[0],
                        cover=tuple(one("cover")),
                        strength=one("strength", 1)[0])
    if kind == "ts-evasion":
        if set(fields) != {"coalition", "pirate", "outsider"}:
            raise FormatError("ts-evasion needs coalition, pirate, outsider lines")
        return TsEvasion(coalition=tuple(one("coalition")),
                         pirate=tuple(one("pirate")),
                         outsider=one("outsider", 1)[0])
    if kind == "ipps-ambiguity":
        if set(fields) != {"strength", "pirate", "parent"}:
            raise FormatError("ipps-ambiguity needs strength, pirate, parent lines")
        parents = tuple(tuple(p) for p in fields["parent"])
        return IppsAmbiguity(pirate=tuple(one("pirate")),
                             parents=parents,
                             strength=one("strength", 1)[0])
    raise FormatError(f"unknown witness kind {kind!r}")

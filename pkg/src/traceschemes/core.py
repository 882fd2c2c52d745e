"""Immutable uniform set systems: blocks, intersections, own-subsets, text format.

A set system is a ground set {0, ..., v-1} together with a collection of
distinct w-subsets (blocks).  Everything downstream (verifiers, bounds,
constructions, searches) consumes the ``SetSystem`` built here.  Blocks are
kept in canonical lexicographic order so all outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_GROUND_SET = 4096


class SchemeError(Exception):
    """Base class for all errors raised by this package."""


class NonUniformBlocks(SchemeError):
    """Blocks of differing widths were supplied."""


class DuplicateBlock(SchemeError):
    """The same block was supplied more than once."""


class PointOutOfRange(SchemeError):
    """A point index falls outside [0, v)."""


class TauOutOfRange(SchemeError):
    """Subset size tau outside [1, w]."""


class ParamsInvalid(SchemeError):
    """Scheme parameters violate v >= w >= t >= 2 or another constraint."""


class FormatError(SchemeError):
    """Malformed set-system or witness text."""


class BudgetExceeded(SchemeError):
    """An enumeration outgrew its work budget."""


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@dataclass(frozen=True)
class SetSystem:
    """Uniform set system over ground set {0, ..., v-1}.

    Immutable after construction; safe to share across workers.  ``blocks``
    is lexicographically sorted, each block strictly ascending.  ``masks``
    holds one bitmask per block for fast intersection counting.
    """

    v: int
    w: int
    blocks: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False, compare=False, default=())

    @property
    def m(self) -> int:
        return len(self.blocks)

    def block_mask(self, index: int) -> int:
        return self.masks[index]

    def union_mask(self, indices: Iterable[int]) -> int:
        u = 0
        for i in indices:
            u |= self.masks[i]
        return u

    def points_of(self, mask: int) -> tuple[int, ...]:
        return tuple(p for p in range(self.v) if mask >> p & 1)


def new_set_system(v: int, blocks: Sequence[Sequence[int]], width: int | None = None) -> SetSystem:
    """Validate and canonicalize a set system.

    Blocks are sorted lexicographically; each block must be a strictly
    ascending sequence of in-range points, all of one width.  ``width`` is
    only consulted when ``blocks`` is empty.
    """
    if not isinstance(v, int) or v < 0:
        raise ParamsInvalid(f"ground set size must be a nonnegative integer, got {v!r}")
    if v > MAX_GROUND_SET:
        raise ParamsInvalid(f"ground set size {v} exceeds cap {MAX_GROUND_SET}")
    canon: list[tuple[int, ...]] = []
    for raw in blocks:
        b = tuple(raw)
        if any(not isinstance(p, int) for p in b):
            raise PointOutOfRange(f"non-integer point in block {b!r}")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise FormatError(f"block {b!r} is not strictly ascending")
        if b and (b[0] < 0 or b[-1] >= v):
            raise PointOutOfRange(f"block {b!r} has a point outside [0, {v})")
        canon.append(b)
    if canon:
        w = len(canon[0])
        if any(len(b) != w for b in canon):
            raise NonUniformBlocks("blocks have differing widths")
        if w == 0:
            raise NonUniformBlocks("blocks must be nonempty")
    else:
        w = width or 0
    canon.sort()
    for i in range(len(canon) - 1):
        if canon[i] == canon[i + 1]:
            raise DuplicateBlock(f"block {canon[i]!r} appears more than once")
    blocks_t = tuple(canon)
    return SetSystem(v=v, w=w, blocks=blocks_t, masks=tuple(_mask(b) for b in blocks_t))


def intersection_size(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of points shared by two blocks."""
    return len(set(a) & set(b))


@dataclass(frozen=True)
class SchemeParams:
    """Parameter triple (t, w, v) with v >= w >= t >= 2."""

    t: int
    w: int
    v: int

    def __post_init__(self) -> None:
        if not (self.v >= self.w >= self.t >= 2):
            raise ParamsInvalid(f"need v >= w >= t >= 2, got t={self.t} w={self.w} v={self.v}")


@dataclass(frozen=True)
class OwnSubsetReport:
    """All tau-subsets of one block contained in no other block."""

    block_index: int
    size: int
    own_subsets: tuple[tuple[int, ...], ...]
    count: int


def enumerate_own_subsets(s: SetSystem, block_index: int, tau: int) -> OwnSubsetReport:
    """List every tau-subset of the given block lying in no other block."""
    if not 0 <= block_index < s.m:
        raise PointOutOfRange(f"block index {block_index} outside [0, {s.m})")
    if not 1 <= tau <= s.w:
        raise TauOutOfRange(f"tau={tau} outside [1, {s.w}]")
    block = s.blocks[block_index]
    # Only blocks meeting this one in >= tau points can absorb a tau-subset.
    mask = s.masks[block_index]
    rivals = [m for i, m in enumerate(s.masks)
              if i != block_index and (m & mask).bit_count() >= tau]
    own = []
    for sub in combinations(block, tau):
        sm = _mask(sub)
        if all(sm & r != sm for r in rivals):
            own.append(sub)
    return OwnSubsetReport(block_index=block_index, size=tau,
                           own_subsets=tuple(own), count=len(own))


def render_set_system(s: SetSystem) -> str:
    """Canonical text form: header line then one ascending block per line."""
    lines = [f"setsystem v={s.v} w={s.w} m={s.m}"]
    lines.extend(" ".join(str(p) for p in b) for b in s.blocks)
    return "\n".join(lines) + "\n"


def parse_set_system(text: str) -> SetSystem:
    """Parse the text format produced by :func:`render_set_system`.

    Rejects trailing garbage, out-of-range points, width mismatches and a
    block count that disagrees with the header.  ``#`` lines and blank
    lines are ignored.
    """
    header: tuple[int, int, int] | None = None
    body: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            fields = line.split()
            if len(fields) != 4 or fields[0] != "setsystem":
                raise FormatError(f"line {lineno}: expected 'setsystem v=.. w=.. m=..'")
            vals = {}
            for f in fields[1:]:
                key, _, num = f.partition("=")
                if key not in ("v", "w", "m") or not num.lstrip("-").isdigit():
                    raise FormatError(f"line {lineno}: bad header field {f!r}")
                vals[key] = int(num)
            if set(vals) != {"v", "w", "m"} or min(vals.values()) < 0:
                raise FormatError(f"line {lineno}: bad header {line!r}")
            header = (vals["v"], vals["w"], vals["m"])
            continue
        parts = line.split()
        if not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: trailing garbage {line!r}")
        body.append([int(p) for p in parts])
    if header is None:
        raise FormatError("missing 'setsystem' header line")
    v, w, m = header
    if len(body) != m:
        raise FormatError(f"header declares m={m} but found {len(body)} blocks")
    if any(len(b) != w for b in body):
        raise FormatError(f"block width disagrees with header w={w}")
    try:
        return new_set_system(v, body, width=w)
    except SchemeError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise FormatError(str(exc)) from exc

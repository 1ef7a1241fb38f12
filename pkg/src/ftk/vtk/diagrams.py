"""Chord diagrams on a circle with directed chords, and their decorations.

Internal representation: the boundary of a diagram with k chords is a tuple
of 2k endpoint codes, read once around the circle in the positive direction.
An endpoint code is ``chord_id * 2 + role`` with role 0 for the tail of the
arrow and 1 for the head.  Section i of the boundary lies between endpoint i
and endpoint i+1 (cyclically); a numbered diagram carries one nonnegative
integer per section (a single number when k = 0).

Canonical forms relabel chords in first-visit order and take the
lexicographically smallest rotation, so equality of canonical keys is
equality of diagrams up to rotation.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

TAIL, HEAD = 0, 1


def _rotations_canon(bnd):
    """All rotations of bnd, chords relabeled in first-visit order."""
    L = len(bnd)
    for r in range(L):
        relabel = {}
        word = []
        for i in range(r, r + L):
            e = bnd[i % L]
            cid = e >> 1
            nid = relabel.get(cid)
            if nid is None:
                nid = len(relabel)
                relabel[cid] = nid
            word.append((nid << 1) | (e & 1))
        yield r, tuple(word), relabel


def canon_cd(bnd) -> tuple:
    """Canonical boundary word of a bare chord diagram."""
    if not bnd:
        return ()
    return min(w for _, w, _ in _rotations_canon(bnd))


def canon_ncd(bnd, nums):
    """Canonical (boundary, numbers) of a numbered chord diagram."""
    if not bnd:
        return (), (nums[0],)
    L = len(bnd)
    best = None
    for r, word, _ in _rotations_canon(bnd):
        rnums = tuple(nums[(r + i) % L] for i in range(L))
        cand = (word, rnums)
        if best is None or cand < best:
            best = cand
    return best


def canon_bgd(bnd, nums, signs):
    """Canonical (boundary, numbers, signs) of a signed numbered diagram."""
    if not bnd:
        return (), (nums[0],), ()
    L = len(bnd)
    best = None
    for r, word, relabel in _rotations_canon(bnd):
        rnums = tuple(nums[(r + i) % L] for i in range(L))
        rsigns = [1] * len(relabel)
        for old, new in relabel.items():
            rsigns[new] = signs[old]
        cand = (word, rnums, tuple(rsigns))
        if best is None or cand < best:
            best = cand
    return best


def delete_chords(bnd, nums, drop: frozenset):
    """Remove the chords in `drop`, merging section counts additively.

    Removing an endpoint joins its two flanking sections; the numbers add,
    so the total count (the braid index) is preserved.
    """
    if not drop:
        return bnd, nums
    L = len(bnd)
    keep_pos = [i for i in range(L) if (bnd[i] >> 1) not in drop]
    if not keep_pos:
        return (), (sum(nums),)
    new_bnd = []
    new_nums = []
    for j, pos in enumerate(keep_pos):
        new_bnd.append(bnd[pos])
        nxt = keep_pos[(j + 1) % len(keep_pos)]
        total = 0
        i = pos
        while True:
            total += nums[i]
            i = (i + 1) % L
            if i == nxt:
                break
            if i == pos:  # single survivor wraps the whole circle
                break
        new_nums.append(total)
    # relabel chord ids densely in first-visit order
    relabel = {}
    out = []
    for e in new_bnd:
        cid = e >> 1
        if cid not in relabel:
            relabel[cid] = len(relabel)
        out.append((relabel[cid] << 1) | (e & 1))
    return tuple(out), tuple(new_nums)


@dataclass(frozen=True)
class ChordDiagram:
    """A directed chord diagram up to rotation (stored canonically)."""

    boundary: tuple

    def __post_init__(self):
        bnd = self.boundary
        tails = sorted(e >> 1 for e in bnd if (e & 1) == TAIL)
        heads = sorted(e >> 1 for e in bnd if (e & 1) == HEAD)
        k = len(bnd) // 2
        if tails != list(range(k)) or heads != list(range(k)):
            raise ValueError("each chord needs exactly one tail and one head")
        if canon_cd(bnd) != bnd:
            raise ValueError("boundary is not in canonical form")

    @classmethod
    def from_raw(cls, bnd) -> "ChordDiagram":
        return cls(canon_cd(tuple(bnd)))

    @classmethod
    def from_pairs(cls, pairs, size: int) -> "ChordDiagram":
        """pairs: iterable of (tail_position, head_position) on a circle of
        `size` boundary positions."""
        bnd = [None] * size
        for cid, (t, h) in enumerate(pairs):
            bnd[t] = (cid << 1) | TAIL
            bnd[h] = (cid << 1) | HEAD
        if any(e is None for e in bnd):
            raise ValueError("positions do not cover the circle")
        return cls.from_raw(bnd)

    @property
    def chords(self) -> int:
        return len(self.boundary) // 2

    def key(self) -> bytes:
        return bytes(self.boundary)

    def to_json(self) -> str:
        pos = {}
        for i, e in enumerate(self.boundary):
            pos.setdefault(e >> 1, {})["head" if e & 1 else "tail"] = i
        return json.dumps({"chords": [pos[c] for c in sorted(pos)]})

    def __repr__(self):
        bits = " ".join(("H" if e & 1 else "T") + str(e >> 1) for e in self.boundary)
        return f"ChordDiagram({bits or 'empty'})"


@dataclass(frozen=True)
class NumberedChordDiagram:
    """Chord diagram with a nonnegative integer per boundary section."""

    boundary: tuple
    numbers: tuple

    def __post_init__(self):
        want = len(self.boundary) if self.boundary else 1
        if len(self.numbers) != want:
            raise ValueError(f"need {want} section numbers, got {len(self.numbers)}")
        if any(a < 0 for a in self.numbers):
            raise ValueError("section numbers must be nonnegative")

    @classmethod
    def from_raw(cls, bnd, nums) -> "NumberedChordDiagram":
        b, m = canon_ncd(tuple(bnd), tuple(nums))
        return cls(b, m)

    @property
    def chords(self) -> int:
        return len(self.boundary) // 2

    @property
    def total(self) -> int:
        return sum(self.numbers)

    def cd(self) -> ChordDiagram:
        return ChordDiagram.from_raw(self.boundary)

    def key(self) -> bytes:
        return bytes(self.boundary) + b"|" + json.dumps(self.numbers).encode()


@dataclass(frozen=True)
class BraidedGaussDiagram:
    """Numbered diagram with a sign per chord; braid index = total count."""

    boundary: tuple
    numbers: tuple
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != len(self.boundary) // 2:
            raise ValueError("need one sign per chord")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        if self.braid_index <= 0:
            raise ValueError("braid index must be positive")

    @classmethod
    def from_raw(cls, bnd, nums, signs) -> "BraidedGaussDiagram":
        b, m, s = canon_bgd(tuple(bnd), tuple(nums), tuple(signs))
        return cls(b, m, s)

    @property
    def chords(self) -> int:
        return len(self.boundary) // 2

    @property
    def braid_index(self) -> int:
        return sum(self.numbers)

    def ncd(self) -> NumberedChordDiagram:
        if any(s != 1 for s in self.signs):
            raise ValueError("only all-positive diagrams forget to numbered diagrams")
        return NumberedChordDiagram.from_raw(self.boundary, self.numbers)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

_EXACT_CACHE: dict = {}


def enumerate_cds_exact(k: int):
    """All canonical chord diagrams with exactly k chords, sorted by key."""
    if k in _EXACT_CACHE:
        return _EXACT_CACHE[k]
    if k == 0:
        out = [ChordDiagram(())]
        _EXACT_CACHE[0] = out
        return out
    seen = set()
    L = 2 * k
    slots = list(range(L))

    def rec(free, pairs):
        if not free:
            for dirs in itertools.product((0, 1), repeat=k):
                bnd = [0] * L
                for cid, ((a, b), d) in enumerate(zip(pairs, dirs)):
                    t, h = (a, b) if d == 0 else (b, a)
                    bnd[t] = (cid << 1) | TAIL
                    bnd[h] = (cid << 1) | HEAD
                seen.add(canon_cd(tuple(bnd)))
            return
        a = free[0]
        for j in range(1, len(free)):
            b = free[j]
            rec(free[1:j] + free[j + 1 :], pairs + [(a, b)])

    rec(slots, [])
    out = [ChordDiagram(b) for b in sorted(seen)]
    _EXACT_CACHE[k] = out
    return out


def enumerate_cds(max_chords: int):
    """All canonical chord diagrams with at most max_chords chords.

    Deterministic order: by chord count, then by canonical boundary word.
    Includes the empty diagram.
    """
    if max_chords < 0:
        raise ValueError("max_chords must be >= 0")
    out = []
    for k in range(max_chords + 1):
        out.extend(enumerate_cds_exact(k))
    return out

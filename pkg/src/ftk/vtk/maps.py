"""The unitary embedding and the Catalan-weighted insertion expansion.

`u_embed` realizes a chord diagram as the numbered diagram with every
section count 1.  `v_expand` goes the other way: it expands a numbered
diagram into a weighted sum of bare chord diagrams by inserting isolated
chords into its sections, one weight factor f(a_i, b_i) per section, and
truncating any term that would exceed the chord budget.

An inserted isolated chord occupies two adjacent new endpoints, tail
immediately followed by head in the positive circle direction.  The whole
dimension computation is sensitive to this convention being applied
consistently; nothing depends on which of the two orientations was picked.
"""

from __future__ import annotations

from math import comb

from ..algebra import FormalSum
from .diagrams import HEAD, TAIL, NumberedChordDiagram, ChordDiagram, canon_cd


def catalan(b: int) -> int:
    """b-th Catalan number, C_0 = 1."""
    if b < 0:
        raise ValueError("Catalan numbers need b >= 0")
    return comb(2 * b, b) // (b + 1)


_F_CACHE: dict = {}


def coeff_f(a: int, b: int) -> int:
    """Insertion weight: f(0,b) = C_b, f(a,0) = 1, f(1,b>0) = 0, and
    f(a,b) = f(a-1,b) - f(a-2,b-1) otherwise."""
    if a < 0 or b < 0:
        raise ValueError("coeff_f needs nonnegative arguments")
    if b == 0:
        return 1
    if a == 0:
        return catalan(b)
    if a == 1:
        return 0
    key = (a, b)
    val = _F_CACHE.get(key)
    if val is None:
        val = coeff_f(a - 1, b) - coeff_f(a - 2, b - 1)
        _F_CACHE[key] = val
    return val


def u_embed(cd: ChordDiagram) -> NumberedChordDiagram:
    """Unitary image: every section count 1 (a single 1 for the empty
    diagram, which we realize at braid index 1)."""
    L = len(cd.boundary)
    return NumberedChordDiagram(cd.boundary, (1,) * (L if L else 1))


def _insert_pairs(bnd, where):
    """Insert `where[i]` isolated (tail, head) pairs into section i."""
    L = len(bnd)
    nid = L // 2
    out = []
    if L == 0:
        for _ in range(where.get(0, 0)):
            out.append((nid << 1) | TAIL)
            out.append((nid << 1) | HEAD)
            nid += 1
        return tuple(out)
    for i in range(L):
        out.append(bnd[i])
        for _ in range(where.get(i, 0)):
            out.append((nid << 1) | TAIL)
            out.append((nid << 1) | HEAD)
            nid += 1
    return tuple(out)


def v_expand_raw(bnd, nums, n: int) -> dict:
    """v on a raw (boundary, numbers) pair; returns {canonical_cd: coeff}."""
    k = len(bnd) // 2
    acc: dict = {}
    if k > n:
        return acc
    budget = n - k
    # sections with count 1 only admit b = 0 (f(1, b>0) = 0), so skip them
    open_sections = [(i, a) for i, a in enumerate(nums) if a != 1]

    def rec(idx: int, left: int, weight: int, where: dict):
        if idx == len(open_sections):
            key = canon_cd(_insert_pairs(bnd, where))
            acc[key] = acc.get(key, 0) + weight
            return
        i, a = open_sections[idx]
        for b in range(left + 1):
            w = coeff_f(a, b)
            if w == 0:
                continue
            if b:
                where[i] = b
            rec(idx + 1, left - b, weight * w, where)
            if b:
                del where[i]

    rec(0, budget, 1, {})
    return {key: c for key, c in acc.items() if c}


def v_expand(X: NumberedChordDiagram, n: int) -> FormalSum:
    """Truncated insertion expansion of X as a sum of chord diagram keys."""
    raw = v_expand_raw(X.boundary, X.numbers, n)
    return FormalSum((bytes(b), c) for b, c in raw.items())

"""Relation rows presenting the rank-n group on chord diagram generators.

Three families of numbered-diagram relations are expanded through the
insertion map and assembled into one integer matrix:

* type 1: the eight-term braid-move pattern.  Three chords meet pairwise in
  a local triangle; on each of the three arcs carrying two of the six
  endpoints the two endpoints sit adjacently with section count 0, and the
  move swaps the order of both endpoints on every arc at once.  Terms where
  one of the three chords is made virtual (deleted, sections merging) carry
  the same sign as the full term; the opposite side enters negatively.
  Instances are embedded into every chord diagram with at most n+1 chords,
  ambient section numbers all 1.  Mirrored instances are linear combinations
  of these (reflection maps the left pattern onto the right one), so they
  are not emitted separately.

* type 2: stabilization.  A new chord is inserted into a section, splitting
  its count a into a_1 + a_2 with a single count of 1 between tail and head;
  plus the same diagram with a -> a+1; minus the original.  Generic splits
  die under the insertion expansion (that is the f-identity), but instances
  whose flanking counts land in one merged section, e.g. stabilizing the
  bare circle, survive and are required for the presentation: without them
  the rank-2 dimension comes out 4 instead of 3.

* type 3: root shifts.  Both endpoints of one chord move one unit in the
  same circular direction, so the section ahead of each endpoint donates a
  count to the section behind it (coincident flanking sections cancel and
  keep their count).  Requires a count >= 1 ahead of both endpoints.

Number patterns follow the restricted relation set: section counts in
{0, 1} with at most two zeros, everything else 1.  All emitted rows are
images of genuine braid-word relations, so enlarging the instance set can
only confirm the rank; the dimension table is the arbiter of completeness.
"""

from __future__ import annotations

import itertools

from ..algebra import FormalSum, dedupe_rows, row_basis
from .diagrams import HEAD, TAIL, delete_chords, enumerate_cds, enumerate_cds_exact
from .maps import v_expand_raw


def _fs(raw: dict) -> FormalSum:
    return FormalSum((bytes(b), c) for b, c in raw.items())


def _acc(acc: dict, raw: dict, sign: int):
    for key, coeff in raw.items():
        c = acc.get(key, 0) + sign * coeff
        if c:
            acc[key] = c
        elif key in acc:
            del acc[key]


def _number_patterns(n_sections: int, max_zeros: int = 2):
    """All-1 assignments with up to max_zeros sections set to 0."""
    yield (1,) * n_sections
    for nz in range(1, max_zeros + 1):
        for zeros in itertools.combinations(range(n_sections), nz):
            nums = [1] * n_sections
            for z in zeros:
                nums[z] = 0
            yield tuple(nums)


def _ncd_instances(k: int, max_zeros: int = 2):
    """Canonical (boundary, numbers) pairs over all k-chord diagrams."""
    from .diagrams import canon_ncd

    seen = set()
    for cd in enumerate_cds_exact(k):
        L = len(cd.boundary)
        for nums in _number_patterns(L if L else 1, max_zeros):
            inst = canon_ncd(cd.boundary, nums)
            if inst not in seen:
                seen.add(inst)
                yield inst


def generate_type3(n: int):
    """Root-shift relation rows, already expanded to chord diagram sums."""
    if n < 1:
        raise ValueError("type 3 relations need n >= 1")
    rows = []
    for k in range(1, n + 1):
        for bnd, nums in _ncd_instances(k):
            L = len(bnd)
            base = v_expand_raw(bnd, nums, n)
            for c in range(k):
                pt = bnd.index(c << 1)
                ph = bnd.index((c << 1) | HEAD)
                for ahead_t, ahead_h, sign in ((pt, ph, -1), ((pt - 1) % L, (ph - 1) % L, +1)):
                    if nums[ahead_t] < 1 or nums[ahead_h] < 1:
                        continue
                    moved = list(nums)
                    moved[ahead_t] -= 1
                    moved[(ahead_t + sign) % L] += 1
                    moved[ahead_h] -= 1
                    moved[(ahead_h + sign) % L] += 1
                    acc = dict(base)
                    _acc(acc, v_expand_raw(bnd, tuple(moved), n), -1)
                    if acc:
                        rows.append(_fs(acc))
    return dedupe_rows(rows)


def generate_type2(n: int):
    """Stabilization relation rows (new chord + incremented count - base)."""
    if n < 1:
        raise ValueError("type 2 relations need n >= 1")
    rows = []
    for k in range(0, n):
        for bnd, nums in _ncd_instances(k):
            L = len(bnd)
            base = v_expand_raw(bnd, nums, n)
            new_t = (k << 1) | TAIL
            new_h = (k << 1) | HEAD
            n_sections = L if L else 1
            for s in range(n_sections):
                a = nums[s]
                if k == 0 and a == 0:
                    continue  # no positive braid index to stabilize
                bumped = list(nums)
                bumped[s] += 1
                acc: dict = {}
                _acc(acc, v_expand_raw(bnd, tuple(bumped), n), +1)
                _acc(acc, base, -1)
                for a1 in range(a + 1):
                    a2 = a - a1
                    if L:
                        bnd2 = bnd[: s + 1] + (new_t, new_h) + bnd[s + 1 :]
                        nums2 = nums[:s] + (a1, 1, a2) + nums[s + 1 :]
                    else:
                        bnd2 = (new_t, new_h)
                        nums2 = (1, a)
                    acc2 = dict(acc)
                    _acc(acc2, v_expand_raw(bnd2, nums2, n), +1)
                    if acc2:
                        rows.append(_fs(acc2))
                    if not L:
                        break  # splits of the lone section all coincide
    return dedupe_rows(rows)


def generate_type1(n: int):
    """Braid-move relation rows over all pattern embeddings."""
    if n < 2:
        raise ValueError("type 1 relations need n >= 2")
    rows = []
    for c in range(3, n + 2):
        for cd in enumerate_cds_exact(c):
            bnd = cd.boundary
            L = len(bnd)
            pos = {e: i for i, e in enumerate(bnd)}
            occupied = [(i, j, k3) for i, j, k3 in _pattern_triples(bnd, pos)]
            for i1, i2, i3 in occupied:
                t1, h1 = pos[i1 << 1], pos[(i1 << 1) | HEAD]
                t2 = pos[i2 << 1]
                h2, h3 = pos[(i2 << 1) | HEAD], pos[(i3 << 1) | HEAD]
                nums = [1] * L
                nums[t1] = 0
                nums[h1] = 0
                nums[h2] = 0
                nums = tuple(nums)
                swapped = list(bnd)
                for a, b in ((t1, t2), (h1, pos[i3 << 1]), (h2, h3)):
                    swapped[a], swapped[b] = swapped[b], swapped[a]
                swapped = tuple(swapped)
                acc: dict = {}
                for side_bnd, sign in ((bnd, +1), (swapped, -1)):
                    if c <= n:
                        _acc(acc, v_expand_raw(side_bnd, nums, n), sign)
                    for drop in (i1, i2, i3):
                        b2, m2 = delete_chords(side_bnd, nums, frozenset((drop,)))
                        _acc(acc, v_expand_raw(b2, m2, n), sign)
                if acc:
                    rows.append(_fs(acc))
    return dedupe_rows(rows)


def _pattern_triples(bnd, pos):
    """Ordered chord triples (c1, c2, c3) forming the braid-move pattern:
    tail(c1) tail(c2) adjacent, head(c1) tail(c3) adjacent, head(c2) head(c3)
    adjacent, each pair enclosing a section."""
    L = len(bnd)
    k = L // 2
    for i1 in range(k):
        t1 = pos[i1 << 1]
        nxt = bnd[(t1 + 1) % L]
        if nxt & 1 or (nxt >> 1) == i1:
            continue
        i2 = nxt >> 1
        h1 = pos[(i1 << 1) | HEAD]
        nxt = bnd[(h1 + 1) % L]
        if nxt & 1 or (nxt >> 1) in (i1, i2):
            continue
        i3 = nxt >> 1
        h2 = pos[(i2 << 1) | HEAD]
        nxt = bnd[(h2 + 1) % L]
        if nxt != ((i3 << 1) | HEAD):
            continue
        yield i1, i2, i3


_ROWS_CACHE: dict = {}


def relation_rows(n: int):
    """Deduplicated integer relation rows for rank n, all three families."""
    if n not in _ROWS_CACHE:
        rows = []
        if n >= 2:
            rows.extend(generate_type1(n))
        if n >= 1:
            rows.extend(generate_type2(n))
            rows.extend(generate_type3(n))
        _ROWS_CACHE[n] = dedupe_rows(rows)
    return _ROWS_CACHE[n]


_BASIS_CACHE: dict = {}


def relation_basis(n: int, p: int, extra_rows=()):
    """(generators, colmap, reduced row basis) for rank n over F_p."""
    key = (n, p)
    if key in _BASIS_CACHE and not extra_rows:
        return _BASIS_CACHE[key]
    gens = enumerate_cds(n)
    colmap = {cd.key(): i for i, cd in enumerate(gens)}
    basis = row_basis(p, len(gens))
    for fs in relation_rows(n):
        basis.insert_row({colmap[k]: c for k, c in fs.items()})
    for fs in extra_rows:
        basis.insert_row({colmap[k]: c for k, c in fs.items()})
    result = (gens, colmap, basis)
    if not extra_rows:
        _BASIS_CACHE[key] = result
    return result


def vtk_dimension(n: int, p: int) -> int:
    """dim over F_p of the rank-n group tensored with Z/pZ."""
    if n < 0:
        raise ValueError("rank must be >= 0")
    if n < 2:
        gens = enumerate_cds(n)
        if n == 0:
            return len(gens)
        _, _, basis = relation_basis(n, p)
        return len(gens) - basis.rank
    gens, _, basis = relation_basis(n, p)
    return len(gens) - basis.rank

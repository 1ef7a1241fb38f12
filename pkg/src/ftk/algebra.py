"""Exact linear algebra over Z and Z/pZ, plus formal integer sums.

Everything downstream (cube complexes, chord diagram relations, loom sums)
speaks one currency: a FormalSum of opaque canonical keys.  This module never
interprets keys; it only adds, scales, and row-reduces them.  All arithmetic
is exact (arbitrary-precision integers, eager reduction mod p); there is no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ResourceLimitError(Exception):
    """Raised when an operation exceeds its configured desk-scale cap."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


class FormalSum:
    """Finite Z-linear combination of hashable canonical keys.

    Immutable; zero coefficients are never stored.  Keys are opaque byte
    strings (or any hashable), produced by each diagram kind's canonical().
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            c = acc.get(key, 0) + coeff
            if c:
                acc[key] = c
            elif key in acc:
                del acc[key]
        self._terms = acc
        self._hash = None

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def single(cls, key, coeff: int = 1) -> "FormalSum":
        return cls(((key, coeff),)) if coeff else cls()

    @classmethod
    def _from_clean(cls, terms: dict) -> "FormalSum":
        fs = cls.__new__(cls)
        fs._terms = terms
        fs._hash = None
        return fs

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            c = acc.get(key, 0) + coeff
            if c:
                acc[key] = c
            else:
                del acc[key]
        return FormalSum._from_clean(acc)

    def __neg__(self) -> "FormalSum":
        return FormalSum._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale(self, n: int) -> "FormalSum":
        if n == 0:
            return FormalSum.zero()
        if n == 1:
            return self
        return FormalSum._from_clean({k: n * c for k, c in self._terms.items()})

    def __rmul__(self, n: int) -> "FormalSum":
        return self.scale(n)

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        bits = " + ".join(f"{c}*{k!r}" for k, c in sorted(self._terms.items(), key=lambda kv: repr(kv[0])))
        return f"FormalSum({bits})"


@dataclass(frozen=True)
class AbelianInvariants:
    """Isomorphism class of a finitely generated abelian group.

    torsion is the chain of invariant factors d_1 | d_2 | ... (each >= 2).
    """

    torsion: tuple
    free_rank: int

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {self.torsion} violate divisibility")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"invariant factors must be >= 2, got {self.torsion}")


@dataclass(frozen=True)
class SparseIntMatrix:
    """Row-sparse integer matrix; at most one entry per (row, col)."""

    nrows: int
    ncols: int
    entries: tuple  # ((row, col, value), ...) with value != 0

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ValueError(f"entry ({r},{c}) out of bounds for {self.nrows}x{self.ncols}")
            if v == 0:
                raise ValueError(f"explicit zero stored at ({r},{c})")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))

    @classmethod
    def from_rows(cls, rows, ncols: int) -> "SparseIntMatrix":
        """rows: iterable of {col: value} dicts."""
        entries = []
        rows = list(rows)
        for r, row in enumerate(rows):
            for c, v in sorted(row.items()):
                if v:
                    entries.append((r, c, v))
        return cls(len(rows), ncols, tuple(entries))

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def to_triplet_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols} {len(self.entries)}"]
        for r, c, v in sorted(self.entries):
            lines.append(f"{r} {c} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> "SparseIntMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        nrows, ncols, nnz = (int(x) for x in lines[0].split())
        if len(lines) - 1 != nnz:
            raise ValueError(f"triplet header promises {nnz} entries, got {len(lines) - 1}")
        entries = []
        for ln in lines[1:]:
            r, c, v = ln.split()
            entries.append((int(r), int(c), int(v)))
        return cls(nrows, ncols, tuple(entries))


# ---------------------------------------------------------------------------
# Rank and row reduction over F_p
# ---------------------------------------------------------------------------


class RowBasisGF2:
    """Reduced echelon row basis over F_2, rows packed as bit masks."""

    def __init__(self):
        self.pivots = {}  # col -> row bitmask (fully inter-reduced)

    def reduce(self, mask: int) -> int:
        pivots = self.pivots
        while mask:
            c = (mask & -mask).bit_length() - 1
            piv = pivots.get(c)
            if piv is None:
                return mask
            mask ^= piv
        return 0

    def insert(self, mask: int) -> bool:
        mask = self.reduce(mask)
        if not mask:
            return False
        c = (mask & -mask).bit_length() - 1
        # keep the basis inter-reduced so coset representatives are unique
        for col, piv in list(self.pivots.items()):
            if (piv >> c) & 1:
                self.pivots[col] = piv ^ mask
        self.pivots[c] = mask
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


class RowBasisGFp:
    """Reduced echelon row basis over F_p (odd p), rows as {col: value}."""

    def __init__(self, p: int):
        self.p = p
        self.pivots = {}  # col -> row dict with row[col] == 1

    def reduce(self, row: dict) -> dict:
        p = self.p
        pivots = self.pivots
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                return row
            lam = row[c]
            for col, v in piv.items():
                nv = (row.get(col, 0) - lam * v) % p
                if nv:
                    row[col] = nv
                elif col in row:
                    del row[col]
        return row

    def insert(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = self.p
        c = min(row)
        inv = pow(row[c], p - 2, p)
        row = {col: (v * inv) % p for col, v in row.items()}
        for col, piv in self.pivots.items():
            lam = piv.get(c)
            if lam:
                for rcol, rv in row.items():
                    nv = (piv.get(rcol, 0) - lam * rv) % p
                    if nv:
                        piv[rcol] = nv
                    elif rcol in piv:
                        del piv[rcol]
        self.pivots[c] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class RowBasis:
    """Deterministic reduced row basis over F_p; reusable for coset reduction."""

    p: int
    ncols: int
    _impl: object = field(repr=False)

    @property
    def pivot_columns(self):
        return tuple(sorted(self._impl.pivots))

    @property
    def rank(self) -> int:
        return self._impl.rank

    def insert_row(self, row: dict) -> bool:
        """Add one row; returns True if it enlarged the row space."""
        if self.p == 2:
            mask = 0
            for c, v in row.items():
                if v % 2:
                    mask |= 1 << c
            return self._impl.insert(mask)
        return self._impl.insert(dict(row))

    def reduce_row(self, row: dict) -> dict:
        """Canonical representative of row modulo the current row space."""
        if self.p == 2:
            mask = 0
            for c, v in row.items():
                if v % 2:
                    mask |= 1 << c
            red = self._impl.reduce(mask)
            out = {}
            while red:
                c = (red & -red).bit_length() - 1
                out[c] = 1
                red &= red - 1
            return out
        return self._impl.reduce(row)

    def contains(self, row: dict) -> bool:
        return not self.reduce_row(row)


def row_basis(p: int, ncols: int) -> RowBasis:
    check_prime(p)
    impl = RowBasisGF2() if p == 2 else RowBasisGFp(p)
    return RowBasis(p, ncols, impl)


def row_reduce_mod_p(M: SparseIntMatrix, p: int) -> RowBasis:
    """Reduced echelon basis of M's row space over F_p.

    Deterministic: rows are inserted in index order and every pivot is the
    lowest available column, so the resulting basis (and any coset
    representative computed from it) is independent of how M was assembled.
    """
    basis = row_basis(p, M.ncols)
    for row in M.rows():
        basis.insert_row(row)
    return basis


def rank_mod_p(M: SparseIntMatrix, p: int) -> int:
    """Rank of M over the field with p elements."""
    return row_reduce_mod_p(M, p).rank


def coset_vector(v: FormalSum, basis: RowBasis, colmap: dict) -> tuple:
    """Unique reduced representative of v's coset modulo basis's row space.

    colmap sends canonical keys to column indices; a key of v absent from it
    is an error (the quotient has no such generator).
    """
    row = {}
    for key, coeff in v.items():
        if key not in colmap:
            raise KeyError(f"unknown canonical key {key!r}")
        c = colmap[key]
        row[c] = (row.get(c, 0) + coeff) % basis.p
    red = basis.reduce_row(row)
    out = [0] * basis.ncols
    for c, val in red.items():
        out[c] = val
    return tuple(out)


# ---------------------------------------------------------------------------
# Integer Smith normal form (desk scale)
# ---------------------------------------------------------------------------

SNF_MAX_CELLS = 2000 * 2000


def _gcd_ext(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def smith_normal_form(M: SparseIntMatrix, max_cells: int = SNF_MAX_CELLS) -> AbelianInvariants:
    """Invariant factors of coker(M), M read as relations on ncols generators.

    Classic elimination with gcd pivoting; inputs beyond max_cells raise
    ResourceLimitError.  Only desk-scale presentations need this; the big
    chord diagram computations run over F_p instead.
    """
    if M.nrows * M.ncols > max_cells:
        raise ResourceLimitError(
            f"smith_normal_form limited to {max_cells} cells, got {M.nrows}x{M.ncols}"
        )
    rows = [dict(r) for r in M.rows()]
    # dedupe identical relation rows early; they are common in cube complexes
    uniq = {}
    for r in rows:
        key = tuple(sorted(r.items()))
        if key and key not in uniq:
            uniq[key] = r
    A = [list(0 for _ in range(M.ncols)) for _ in uniq]
    for i, r in enumerate(uniq.values()):
        for c, v in r.items():
            A[i][c] = v
    m, n = len(A), M.ncols
    diag = []
    top = 0
    left = 0
    while top < m and left < n:
        # find a nonzero pivot with smallest absolute value (fewer steps)
        best = None
        for i in range(top, m):
            Ai = A[i]
            for j in range(left, n):
                v = Ai[j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
            if best is not None and abs(best[2]) == 1:
                break
        if best is None:
            break
        bi, bj, _ = best
        A[top], A[bi] = A[bi], A[top]
        for row in A:
            row[left], row[bj] = row[bj], row[left]
        while True:
            # clear column `left`
            for i in range(top + 1, m):
                if A[i][left]:
                    a, b = A[top][left], A[i][left]
                    if b % a == 0:
                        q = b // a
                        A[i] = [x - q * y for x, y in zip(A[i], A[top])]
                    else:
                        g, x, y = _gcd_ext(a, b)
                        au, bu = a // g, b // g
                        r_top = A[top]
                        r_i = A[i]
                        A[top] = [x * u + y * v for u, v in zip(r_top, r_i)]
                        A[i] = [-bu * u + au * v for u, v in zip(r_top, r_i)]
            # clear row `top`
            col_dirty = False
            for j in range(left + 1, n):
                if A[top][j]:
                    a, b = A[top][left], A[top][j]
                    if b % a == 0:
                        q = b // a
                        for i in range(top, m):
                            A[i][j] -= q * A[i][left]
                    else:
                        g, x, y = _gcd_ext(a, b)
                        au, bu = a // g, b // g
                        for i in range(top, m):
                            u, v = A[i][left], A[i][j]
                            A[i][left] = x * u + y * v
                            A[i][j] = -bu * u + au * v
                        col_dirty = True
            if not col_dirty and all(A[i][left] == 0 for i in range(top + 1, m)):
                break
        diag.append(abs(A[top][left]))
        top += 1
        left += 1
    # enforce divisibility chain d_1 | d_2 | ...
    diag = [d for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g, _, _ = _gcd_ext(a, b)
                g = abs(g)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    torsion = tuple(d for d in diag if d > 1)
    free_rank = M.ncols - len(diag)
    return AbelianInvariants(torsion=torsion, free_rank=free_rank)


def matrix_from_formal_sums(rows, generator_keys) -> SparseIntMatrix:
    """Assemble a relations-by-generators matrix from FormalSum rows."""
    colmap = {k: i for i, k in enumerate(generator_keys)}
    dict_rows = []
    for fs in rows:
        row = {}
        for key, coeff in fs.items():
            row[colmap[key]] = coeff
        dict_rows.append(row)
    return SparseIntMatrix.from_rows(dict_rows, len(generator_keys))


def dedupe_rows(rows):
    """Canonicalize (sign-normalize, sort) and dedupe FormalSum rows."""
    seen = set()
    out = []
    for fs in rows:
        if not fs:
            continue
        items = tuple(sorted(fs.items(), key=lambda kv: (repr(kv[0]), kv[1])))
        lead = items[0][1]
        if lead < 0:
            items = tuple((k, -c) for k, c in items)
        if items not in seen:
            seen.add(items)
            out.append(FormalSum(items))
    return out

"""Exact sparse linear algebra over Q and F_p.

Everything here is deterministic: reduced row echelon form is unique, so
ranks, kernel bases, homology dimensions, quotient bases and induced maps
depend only on the input matrix, never on pivot heuristics.  Internally
rows are dicts keyed by column; elimination picks, within each pivot
column (scanned left to right), the sparsest available row to limit
fill-in, and falls back to dense row lists when a matrix is small and
dense enough that dict overhead stops paying for itself.

Homology conventions used throughout the package: a pair (d_in, d_out)
means d_in maps INTO the middle space and d_out maps OUT of it, so the
subquotient is ker(d_out) / im(d_in).  The deterministic basis of the
subquotient consists of kernel-basis columns that extend the span of the
pivot columns of d_in, selected greedily left to right.
"""

from __future__ import annotations

from .errors import (
    CompositionNotZero,
    InconsistentSystem,
    NotChainEndomorphism,
    ShapeMismatch,
)
from .fields import Field

# Fallback tuning: switch to dense rows when fill exceeds DENSE_FILL and
# the matrix has at most DENSE_CAP cells.  Results never depend on this.
DENSE_FILL = 0.25
DENSE_CAP = 40_000


class SparseMatrix:
    """Immutable-by-convention sparse matrix with exact entries."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries=None):
        if nrows < 0 or ncols < 0:
            raise ShapeMismatch(f"negative shape ({nrows}, {ncols})")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ShapeMismatch(f"entry ({r}, {c}) outside shape ({nrows}, {ncols})")
            v = field.coerce(v)
            if not field.is_zero(v):
                clean[(r, c)] = v
        self.entries = clean

    # -- constructors --

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        one = field.one
        return cls(field, n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_rows(cls, field, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeMismatch("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(field, nrows, ncols, entries)

    @classmethod
    def column_vector(cls, field, values):
        return cls(field, len(values), 1, {(i, 0): v for i, v in enumerate(values)})

    # -- views --

    def to_rows(self):
        rows = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def row_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def column(self, j) -> dict:
        return {r: v for (r, c), v in self.entries.items() if c == j}

    def take_columns(self, cols):
        idx = {c: k for k, c in enumerate(cols)}
        entries = {}
        for (r, c), v in self.entries.items():
            k = idx.get(c)
            if k is not None:
                entries[(r, k)] = v
        return SparseMatrix(self.field, self.nrows, len(cols), entries)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"<SparseMatrix {self.nrows}x{self.ncols} over {self.field}, {self.nnz} entries>"

    # -- arithmetic --

    def __add__(self, other):
        self._match(other)
        f = self.field
        entries = dict(self.entries)
        for key, v in other.entries.items():
            cur = entries.get(key)
            nv = f.add(cur, v) if cur is not None else v
            if f.is_zero(nv):
                entries.pop(key, None)
            else:
                entries[key] = nv
        return SparseMatrix(f, self.nrows, self.ncols, entries)

    def __neg__(self):
        f = self.field
        return SparseMatrix(
            f, self.nrows, self.ncols, {k: f.neg(v) for k, v in self.entries.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        f = self.field
        s = f.coerce(s)
        if f.is_zero(s):
            return SparseMatrix(f, self.nrows, self.ncols)
        return SparseMatrix(
            f, self.nrows, self.ncols, {k: f.mul(v, s) for k, v in self.entries.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        f = self.field
        brows = other.row_dicts()
        acc: dict = {}
        for (i, k), v in self.entries.items():
            row = brows[k]
            if not row:
                continue
            for j, w in row.items():
                key = (i, j)
                cur = acc.get(key)
                p = f.mul(v, w)
                acc[key] = p if cur is None else f.add(cur, p)
        entries = {k: v for k, v in acc.items() if not f.is_zero(v)}
        return SparseMatrix(f, self.nrows, other.ncols, entries)

    def power(self, k: int):
        if self.nrows != self.ncols:
            raise ShapeMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        out = SparseMatrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def transpose(self):
        return SparseMatrix(
            self.field,
            self.ncols,
            self.nrows,
            {(c, r): v for (r, c), v in self.entries.items()},
        )

    def _match(self, other):
        if not isinstance(other, SparseMatrix):
            raise TypeError("expected a SparseMatrix")
        if self.field != other.field:
            raise ShapeMismatch("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(
                f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    # -- assembly --

    def hstack(self, other):
        if self.nrows != other.nrows or self.field != other.field:
            raise ShapeMismatch("hstack needs equal row counts over one field")
        entries = dict(self.entries)
        for (r, c), v in other.entries.items():
            entries[(r, c + self.ncols)] = v
        return SparseMatrix(self.field, self.nrows, self.ncols + other.ncols, entries)

    def vstack(self, other):
        if self.ncols != other.ncols or self.field != other.field:
            raise ShapeMismatch("vstack needs equal column counts over one field")
        entries = dict(self.entries)
        for (r, c), v in other.entries.items():
            entries[(r + self.nrows, c)] = v
        return SparseMatrix(self.field, self.nrows + other.nrows, self.ncols, entries)

    # -- text form --

    def dump(self) -> str:
        """Debug dump: a "rows cols" header, then one "r c num/den" line per entry."""
        lines = [f"{self.nrows} {self.ncols}"]
        fmt = self.field.format
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {fmt(self.entries[(r, c)])}")
        return "\n".join(lines)

    @classmethod
    def parse_dump(cls, field: Field, text: str) -> "SparseMatrix":
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        if not lines:
            raise ShapeMismatch("empty dump")
        try:
            nrows, ncols = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise ShapeMismatch(f"bad dump header {lines[0]!r}") from exc
        entries = {}
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise ShapeMismatch(f"bad dump line {ln!r}")
            entries[(int(parts[0]), int(parts[1]))] = field.parse(parts[2])
        return cls(field, nrows, ncols, entries)

    def to_triples(self):
        fmt = self.field.format
        return [[r, c, fmt(self.entries[(r, c)])] for (r, c) in sorted(self.entries)]


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Kronecker product; the left factor indexes the most significant digit."""
    if a.field != b.field:
        raise ShapeMismatch("field mismatch")
    f = a.field
    entries = {}
    for (ia, ja), va in a.entries.items():
        for (ib, jb), vb in b.entries.items():
            entries[(ia * b.nrows + ib, ja * b.ncols + jb)] = f.mul(va, vb)
    return SparseMatrix(f, a.nrows * b.nrows, a.ncols * b.ncols, entries)


# ---------------------------------------------------------------------------
# elimination core


def _axpy(target: dict, coeff, source: dict, field):
    # target -= coeff * source, dropping exact zeros
    for c, v in source.items():
        cur = target.get(c)
        nv = field.neg(field.mul(coeff, v)) if cur is None else field.sub(cur, field.mul(coeff, v))
        if field.is_zero(nv):
            target.pop(c, None)
        else:
            target[c] = nv


def _rref_sparse(work, ncols, field, limit):
    pivot_cols, pivot_rows = [], []
    for col in range(limit):
        best = -1
        best_len = -1
        for idx, row in enumerate(work):
            if col in row and (best < 0 or len(row) < best_len):
                best, best_len = idx, len(row)
        if best < 0:
            continue
        row = work.pop(best)
        piv = row[col]
        if piv != field.one:
            inv = field.inv(piv)
            row = {c: field.mul(v, inv) for c, v in row.items()}
        for bucket in (pivot_rows, work):
            for other in bucket:
                coeff = other.get(col)
                if coeff is not None:
                    _axpy(other, coeff, row, field)
        pivot_cols.append(col)
        pivot_rows.append(row)
    residual = [r for r in work if r]
    return pivot_cols, pivot_rows, residual


def _rref_dense(work, ncols, field, limit):
    dense = []
    for row in work:
        lst = [field.zero] * ncols
        for c, v in row.items():
            lst[c] = v
        dense.append(lst)
    pivot_cols, pivot_rows = [], []
    for col in range(limit):
        best = next((i for i, r in enumerate(dense) if not field.is_zero(r[col])), -1)
        if best < 0:
            continue
        row = dense.pop(best)
        inv = field.inv(row[col])
        if inv != field.one:
            row = [field.mul(v, inv) for v in row]
        for bucket in (pivot_rows, dense):
            for other in bucket:
                coeff = other[col]
                if not field.is_zero(coeff):
                    for c in range(col, ncols):
                        other[c] = field.sub(other[c], field.mul(coeff, row[c]))
                    other[col] = field.zero
        pivot_cols.append(col)
        pivot_rows.append(row)
    to_dict = lambda lst: {c: v for c, v in enumerate(lst) if not field.is_zero(v)}
    residual = [d for d in (to_dict(r) for r in dense) if d]
    return pivot_cols, [to_dict(r) for r in pivot_rows], residual


def _rref(rows, ncols, field, pivot_limit=None):
    """Reduced row echelon form of a list of dict rows.

    Returns (pivot_cols, pivot_rows, residual_rows); pivot search is
    restricted to columns < pivot_limit, and residual rows are the
    nonzero leftovers supported entirely on columns >= pivot_limit.
    """
    limit = ncols if pivot_limit is None else pivot_limit
    work = [dict(r) for r in rows if r]
    nnz = sum(len(r) for r in work)
    cells = len(work) * ncols
    if cells and cells <= DENSE_CAP and nnz > DENSE_FILL * cells:
        return _rref_dense(work, ncols, field, limit)
    return _rref_sparse(work, ncols, field, limit)


# ---------------------------------------------------------------------------
# public operations


def rank(m: SparseMatrix) -> int:
    pivot_cols, _, _ = _rref(m.row_dicts(), m.ncols, m.field)
    return len(pivot_cols)


def rref(m: SparseMatrix):
    """Return (pivot_columns, R) with R the unique reduced echelon form."""
    pivot_cols, pivot_rows, _ = _rref(m.row_dicts(), m.ncols, m.field)
    entries = {}
    for i, row in enumerate(pivot_rows):
        for c, v in row.items():
            entries[(i, c)] = v
    return tuple(pivot_cols), SparseMatrix(m.field, len(pivot_rows), m.ncols, entries)


def kernel_basis(m: SparseMatrix) -> SparseMatrix:
    """Columns form the canonical basis of the right kernel.

    One column per free column of m, ordered by free column index; the
    free coordinate is 1 and pivot coordinates are read off the RREF.
    """
    f = m.field
    pivot_cols, pivot_rows, _ = _rref(m.row_dicts(), m.ncols, f)
    pivot_set = set(pivot_cols)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    entries = {}
    for j, fc in enumerate(free):
        entries[(fc, j)] = f.one
        for pc, prow in zip(pivot_cols, pivot_rows):
            v = prow.get(fc)
            if v is not None:
                entries[(pc, j)] = f.neg(v)
    return SparseMatrix(f, m.ncols, len(free), entries)


def image_basis(m: SparseMatrix):
    """Return (pivot_columns, B) where B holds the columns of m at pivot positions."""
    pivot_cols, _, _ = _rref(m.row_dicts(), m.ncols, m.field)
    return tuple(pivot_cols), m.take_columns(pivot_cols)


def solve_columns(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Solve a X = b column by column; raises InconsistentSystem if unsolvable.

    Free variables are set to zero, so the solution is deterministic.
    """
    if a.nrows != b.nrows:
        raise ShapeMismatch(f"lhs has {a.nrows} rows, rhs has {b.nrows}")
    f = a.field
    aug = a.hstack(b)
    pivot_cols, pivot_rows, residual = _rref(aug.row_dicts(), aug.ncols, f, pivot_limit=a.ncols)
    if residual:
        bad = sorted(c - a.ncols for row in residual for c in row)[0]
        raise InconsistentSystem(f"rhs column {bad} is not in the span of the lhs columns")
    entries = {}
    for pc, row in zip(pivot_cols, pivot_rows):
        for c, v in row.items():
            if c >= a.ncols:
                entries[(pc, c - a.ncols)] = v
    return SparseMatrix(f, a.ncols, b.ncols, entries)


def columns_in_span(a: SparseMatrix, b: SparseMatrix) -> bool:
    """Is every column of b a linear combination of the columns of a?"""
    if a.nrows != b.nrows:
        raise ShapeMismatch(f"lhs has {a.nrows} rows, rhs has {b.nrows}")
    aug = a.hstack(b)
    _, _, residual = _rref(aug.row_dicts(), aug.ncols, a.field, pivot_limit=a.ncols)
    return not residual


def _check_pair(d_in: SparseMatrix, d_out: SparseMatrix):
    if d_in.field != d_out.field:
        raise ShapeMismatch("differentials live over different fields")
    if d_out.ncols != d_in.nrows:
        raise ShapeMismatch(
            f"middle space mismatch: d_out has {d_out.ncols} columns, d_in has {d_in.nrows} rows"
        )
    if not (d_out * d_in).is_zero():
        raise CompositionNotZero("d_out composed with d_in is nonzero")


def homology_dim(d_in: SparseMatrix, d_out: SparseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) after verifying d_out * d_in = 0."""
    _check_pair(d_in, d_out)
    return (d_out.ncols - rank(d_out)) - rank(d_in)


def homology_basis(d_in: SparseMatrix, d_out: SparseMatrix) -> SparseMatrix:
    """Deterministic representatives of ker(d_out)/im(d_in), as columns."""
    _check_pair(d_in, d_out)
    _, b_im = image_basis(d_in)
    kern = kernel_basis(d_out)
    return _complete_basis(b_im, kern)


def _complete_basis(b_im: SparseMatrix, kern: SparseMatrix) -> SparseMatrix:
    # kernel columns that enlarge the span of b_im, greedy left to right
    pivot_cols, _, _ = _rref(b_im.hstack(kern).row_dicts(), b_im.ncols + kern.ncols, b_im.field)
    chosen = [c - b_im.ncols for c in pivot_cols if c >= b_im.ncols]
    return kern.take_columns(chosen)


def induced_map_on_quotient(
    f: SparseMatrix,
    d_in: SparseMatrix,
    d_out: SparseMatrix,
    *,
    assume_chain_map: bool = False,
) -> SparseMatrix:
    """Matrix of the map induced by f on ker(d_out)/im(d_in).

    f must be an endomorphism of the middle space that preserves both
    im(d_in) and ker(d_out); unless assume_chain_map is set (for callers
    that already verified a strict chain-map identity) both conditions
    are checked and NotChainEndomorphism is raised on failure.  The
    subquotient basis is the one produced by homology_basis.
    """
    _check_pair(d_in, d_out)
    n = d_in.nrows
    if f.nrows != n or f.ncols != n:
        raise ShapeMismatch(f"endomorphism must be {n}x{n}, got {f.nrows}x{f.ncols}")
    if f.field != d_in.field:
        raise ShapeMismatch("endomorphism lives over a different field")
    kern = kernel_basis(d_out)
    _, b_im = image_basis(d_in)
    if not assume_chain_map:
        if not columns_in_span(d_in, f * d_in):
            raise NotChainEndomorphism("map does not preserve the image of d_in")
        if not (d_out * (f * kern)).is_zero():
            raise NotChainEndomorphism("map does not preserve the kernel of d_out")
    reps = _complete_basis(b_im, kern)
    if reps.ncols == 0:
        return SparseMatrix(f.field, 0, 0)
    frame = b_im.hstack(reps)
    try:
        coords = solve_columns(frame, f * reps)
    except InconsistentSystem as exc:
        raise NotChainEndomorphism(
            "image of a representative leaves the cycle space"
        ) from exc
    entries = {
        (r - b_im.ncols, c): v
        for (r, c), v in coords.entries.items()
        if r >= b_im.ncols
    }
    return SparseMatrix(f.field, reps.ncols, reps.ncols, entries)


def charpoly(m: SparseMatrix) -> list:
    """Coefficients of det(x I - m), leading coefficient first.

    Samuelson-Berkowitz: division-free, so it works verbatim over Q and
    every F_p.  Intended for the small matrices that appear on homology.
    """
    if m.nrows != m.ncols:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    f = m.field
    n = m.nrows
    rows = m.to_rows()
    poly = [f.one]
    for k in range(1, n + 1):
        corner = rows[k - 1][k - 1]
        r_vec = rows[k - 1][:k - 1]
        c_vec = [rows[i][k - 1] for i in range(k - 1)]
        block = [row[:k - 1] for row in rows[:k - 1]]
        items = [f.one, f.neg(corner)]
        vec = c_vec
        for _ in range(k - 1):
            s = f.zero
            for rv, vv in zip(r_vec, vec):
                s = f.add(s, f.mul(rv, vv))
            items.append(f.neg(s))
            vec = [
                _dot(f, block_row, vec) for block_row in block
            ]
        new = [f.zero] * (k + 1)
        for i, it in enumerate(items):
            if f.is_zero(it):
                continue
            for j, pj in enumerate(poly):
                if i + j <= k:
                    new[i + j] = f.add(new[i + j], f.mul(it, pj))
        poly = new
    return poly


def _dot(f, xs, ys):
    s = f.zero
    for x, y in zip(xs, ys):
        s = f.add(s, f.mul(x, y))
    return s

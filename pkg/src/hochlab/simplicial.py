"""The cyclic and dihedral categories, and validators for their modules.

A morphism [n] -> [m] of the cyclic category is an equivalence class of
monotone maps f: Z -> Z with f(i + n + 1) = f(i) + m + 1, where f and g
are identified when f - g is a constant multiple of m + 1.  We store the
representative with 0 <= f(0) <= m, determined by its values on 0..n.
The dihedral category adds a flip generated by the reversal functor
(r(f))(p) = m - f(n - p).

Module validators take families of exact matrices and check the full
relation lists: the classical simplicial identities, the cyclic
compatibilities d_i t_n = t_{n-1} d_{i-1} (1 <= i <= n), d_0 t_n = d_n,
s_i t_n = t_{n+1} s_{i-1} (1 <= i <= n), s_0 t_n = t_{n+1}^2 s_n and
t_n^{n+1} = id, and the dihedral ones r_n^2 = id, r_n t_n r_n = t_n^{-1},
d_i r_n = r_{n-1} d_{n-i}, s_i r_n = r_{n+1} s_{n-i}.  These lists hold
verbatim for the unsigned structure operators; the chain-level signs
live in the hochschild module.
"""

from __future__ import annotations

from .errors import DomainMismatch, IndexOutOfRange, ShapeMismatch
from .exactlin import SparseMatrix
from .fields import Field
from .validation import ValidationReport


class LambdaMorphism:
    """A cyclic-category morphism [src_n] -> [tgt_m] in normalized form."""

    __slots__ = ("src_n", "tgt_m", "values")

    def __init__(self, src_n: int, tgt_m: int, values):
        if src_n < 0 or tgt_m < 0:
            raise IndexOutOfRange("objects [n] need n >= 0")
        values = list(values)
        if len(values) != src_n + 1:
            raise ValueError(f"need {src_n + 1} values, got {len(values)}")
        # normalize: translate by a multiple of m+1 so 0 <= f(0) <= m
        period = tgt_m + 1
        shift = values[0] - (values[0] % period)
        values = [v - shift for v in values]
        for a, b in zip(values, values[1:]):
            if b < a:
                raise ValueError(f"values {values} are not monotone")
        if values[-1] > values[0] + period:
            raise ValueError(f"values {values} exceed one period")
        self.src_n = src_n
        self.tgt_m = tgt_m
        self.values = tuple(values)

    def __call__(self, x: int) -> int:
        """Evaluate the equivariant extension at any integer."""
        q, r = divmod(x, self.src_n + 1)
        return self.values[r] + q * (self.tgt_m + 1)

    def __eq__(self, other):
        return (
            isinstance(other, LambdaMorphism)
            and self.src_n == other.src_n
            and self.tgt_m == other.tgt_m
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.src_n, self.tgt_m, self.values))

    def __repr__(self):
        vals = " ".join(str(v) for v in self.values)
        return f"<Lambda [{self.src_n}]->[{self.tgt_m}]: {vals}>"

    def __mul__(self, other):
        return compose(self, other)

    @property
    def is_simplicial(self) -> bool:
        return self.values[-1] <= self.tgt_m

    def serialize(self) -> str:
        return f"{self.src_n} {self.tgt_m}: " + " ".join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text: str) -> "LambdaMorphism":
        head, _, tail = text.partition(":")
        try:
            n, m = (int(t) for t in head.split())
            values = [int(t) for t in tail.split()]
        except ValueError as exc:
            raise ValueError(f"bad morphism literal {text!r}") from exc
        return cls(n, m, values)


def identity(n: int) -> LambdaMorphism:
    return LambdaMorphism(n, n, range(n + 1))


def tau(n: int) -> LambdaMorphism:
    """The cyclic generator of Lambda([n],[n]): shift by one."""
    return LambdaMorphism(n, n, [i + 1 for i in range(n + 1)])


def tau_power(n: int, k: int) -> LambdaMorphism:
    return LambdaMorphism(n, n, [i + (k % (n + 1)) for i in range(n + 1)])


def face(n: int, i: int) -> LambdaMorphism:
    """The coface [n-1] -> [n] missing i."""
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"face({n}, {i})")
    return LambdaMorphism(n - 1, n, [q if q < i else q + 1 for q in range(n)])


def degeneracy(n: int, j: int) -> LambdaMorphism:
    """The codegeneracy [n+1] -> [n] hitting j twice."""
    if n < 0 or not 0 <= j <= n:
        raise IndexOutOfRange(f"degeneracy({n}, {j})")
    return LambdaMorphism(n + 1, n, [q if q <= j else q - 1 for q in range(n + 2)])


def compose(g: LambdaMorphism, f: LambdaMorphism) -> LambdaMorphism:
    if f.tgt_m != g.src_n:
        raise DomainMismatch(
            f"cannot compose [{g.src_n}]->[{g.tgt_m}] after [{f.src_n}]->[{f.tgt_m}]"
        )
    return LambdaMorphism(f.src_n, g.tgt_m, [g(v) for v in f.values])


def reversal(f: LambdaMorphism) -> LambdaMorphism:
    """The involutive reversal functor: (r(f))(p) = m - f(n - p)."""
    n, m = f.src_n, f.tgt_m
    return LambdaMorphism(n, m, [m - f.values[n - p] for p in range(n + 1)])


def normal_form(f: LambdaMorphism) -> tuple[int, LambdaMorphism]:
    """Factor f = simp o tau(src)^k with simp simplicial; k is unique.

    k counts how many values wrap past the target period, and the
    simplicial part is read off by rotating the value list back.
    """
    n, m = f.src_n, f.tgt_m
    k = sum(1 for v in f.values if v > m)
    period = m + 1
    values = [
        f.values[j - k] if j >= k else f.values[j - k + n + 1] - period
        for j in range(n + 1)
    ]
    simp = LambdaMorphism(n, m, values)
    assert simp.is_simplicial
    return k, simp


class DihedralMorphism:
    """A morphism of the dihedral category: a Lambda morphism plus a flip."""

    __slots__ = ("lam", "flip")

    def __init__(self, lam: LambdaMorphism, flip: bool):
        self.lam = lam
        self.flip = bool(flip)

    def __eq__(self, other):
        return (
            isinstance(other, DihedralMorphism)
            and self.lam == other.lam
            and self.flip == other.flip
        )

    def __hash__(self):
        return hash((self.lam, self.flip))

    def __repr__(self):
        tag = "-" if self.flip else "+"
        return f"<Dihedral {tag} {self.lam!r}>"

    def __mul__(self, other):
        return dihedral_compose(self, other)


def dihedral_identity(n: int) -> DihedralMorphism:
    return DihedralMorphism(identity(n), False)


def rho(n: int) -> DihedralMorphism:
    """The flip generator at [n]."""
    return DihedralMorphism(identity(n), True)


def dihedral_compose(g: DihedralMorphism, f: DihedralMorphism) -> DihedralMorphism:
    # Grothendieck-construction law: the outer flip twists the inner map
    inner = reversal(f.lam) if g.flip else f.lam
    return DihedralMorphism(compose(g.lam, inner), g.flip != f.flip)


# ---------------------------------------------------------------------------
# cyclic and dihedral module data


class CyclicModuleData:
    """Matrices of a cyclic module truncated at a top degree.

    faces[n][i] maps degree n to n-1 (n >= 1), degeneracies[n][j] maps
    degree n to n+1 (all n <= N; at n = N the target degree N+1 is
    virtual, its dimension read off the matrices), cyclic[n] is the
    unsigned rotation in degree n.
    """

    def __init__(self, field: Field, dims, faces, degeneracies, cyclic):
        self.field = field
        self.dims = list(dims)
        self.max_degree = len(self.dims) - 1
        self.faces = [list(row) for row in faces]
        self.degeneracies = [list(row) for row in degeneracies]
        self.cyclic = list(cyclic)
        self._validate_shapes()

    def _validate_shapes(self):
        n_top = self.max_degree
        if n_top < 0:
            raise ShapeMismatch("need at least degree 0")
        if len(self.faces) != n_top + 1 or len(self.degeneracies) != n_top + 1:
            raise ShapeMismatch("face/degeneracy lists must cover degrees 0..N")
        if len(self.cyclic) != n_top + 1:
            raise ShapeMismatch("cyclic list must cover degrees 0..N")
        if self.faces[0]:
            raise ShapeMismatch("degree 0 has no faces")
        for n in range(n_top + 1):
            if n >= 1:
                if len(self.faces[n]) != n + 1:
                    raise ShapeMismatch(f"degree {n} needs faces d_0..d_{n}")
                for i, d in enumerate(self.faces[n]):
                    if (d.nrows, d.ncols) != (self.dims[n - 1], self.dims[n]):
                        raise ShapeMismatch(f"face d_{i} in degree {n} has wrong shape")
            if len(self.degeneracies[n]) != n + 1:
                raise ShapeMismatch(f"degree {n} needs degeneracies s_0..s_{n}")
            target = self.dims[n + 1] if n < n_top else None
            for j, s in enumerate(self.degeneracies[n]):
                if s.ncols != self.dims[n]:
                    raise ShapeMismatch(f"degeneracy s_{j} in degree {n} has wrong source")
                if target is None:
                    target = s.nrows
                if s.nrows != target:
                    raise ShapeMismatch(f"degeneracy s_{j} in degree {n} has wrong target")
            t = self.cyclic[n]
            if (t.nrows, t.ncols) != (self.dims[n], self.dims[n]):
                raise ShapeMismatch(f"cyclic operator in degree {n} has wrong shape")


class DihedralModuleData:
    """A cyclic module together with unsigned reflections r_n per degree."""

    def __init__(self, cyclic_data: CyclicModuleData, reflections):
        self.cyclic_data = cyclic_data
        self.reflections = list(reflections)
        if len(self.reflections) != cyclic_data.max_degree + 1:
            raise ShapeMismatch("reflection list must cover degrees 0..N")
        for n, r in enumerate(self.reflections):
            if (r.nrows, r.ncols) != (cyclic_data.dims[n], cyclic_data.dims[n]):
                raise ShapeMismatch(f"reflection in degree {n} has wrong shape")


def check_cyclic_module(data: CyclicModuleData) -> ValidationReport:
    """Verify every simplicial and cyclic relation representable in range."""
    report = ValidationReport("cyclic module")
    d, s, t = data.faces, data.degeneracies, data.cyclic
    top = data.max_degree

    def expect(rule, where, lhs, rhs):
        report.tick()
        if lhs != rhs:
            report.record(rule, where)

    for n in range(2, top + 1):
        for j in range(n + 1):
            for i in range(j):
                expect("dd", (n, i, j), d[n - 1][i] * d[n][j], d[n - 1][j - 1] * d[n][i])
    for n in range(top):
        for j in range(n + 1):
            for i in range(j + 1):
                expect("ss", (n, i, j), s[n + 1][i] * s[n][j], s[n + 1][j + 1] * s[n][i])
    for n in range(top):
        eye = SparseMatrix.identity(data.field, data.dims[n])
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = d[n + 1][i] * s[n][j]
                if i in (j, j + 1):
                    expect("ds", (n, i, j), lhs, eye)
                elif i < j:
                    if n >= 1:
                        expect("ds", (n, i, j), lhs, s[n - 1][j - 1] * d[n][i])
                else:
                    if n >= 1:
                        expect("ds", (n, i, j), lhs, s[n - 1][j] * d[n][i - 1])
    for n in range(top + 1):
        eye = SparseMatrix.identity(data.field, data.dims[n])
        expect("t_power", (n,), t[n].power(n + 1), eye)
        if n >= 1:
            expect("dt", (n, 0), d[n][0] * t[n], d[n][n])
            for i in range(1, n + 1):
                expect("dt", (n, i), d[n][i] * t[n], t[n - 1] * d[n][i - 1])
        if n < top:
            expect("st", (n, 0), s[n][0] * t[n], t[n + 1].power(2) * s[n][n])
            for i in range(1, n + 1):
                expect("st", (n, i), s[n][i] * t[n], t[n + 1] * s[n][i - 1])
    return report


def check_dihedral_module(data: DihedralModuleData) -> ValidationReport:
    """Verify the dihedral relations on top of the cyclic ones."""
    report = check_cyclic_module(data.cyclic_data)
    report.subject = "dihedral module"
    cyc = data.cyclic_data
    d, s, t, r = cyc.faces, cyc.degeneracies, cyc.cyclic, data.reflections
    top = cyc.max_degree

    def expect(rule, where, lhs, rhs):
        report.tick()
        if lhs != rhs:
            report.record(rule, where)

    for n in range(top + 1):
        eye = SparseMatrix.identity(cyc.field, cyc.dims[n])
        expect("rr", (n,), r[n] * r[n], eye)
        expect("rtr", (n,), r[n] * t[n] * r[n], t[n].power(n))
        if n >= 1:
            for i in range(n + 1):
                expect("dr", (n, i), d[n][i] * r[n], r[n - 1] * d[n][n - i])
        if n < top:
            for i in range(n + 1):
                expect("sr", (n, i), s[n][i] * r[n], r[n + 1] * s[n][n - i])
    return report

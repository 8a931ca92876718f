"""Finite-dimensional algebras with optional Hopf, ribbon, and involution data.

Algebras are given by sparse structure constants over an exact field and
are validated eagerly: no invalid multiplication table survives into the
chain-level machinery.  Constructors cover group algebras (with their
standard Hopf structure and the inversion anti-involution), Drinfeld
doubles of finite groups (ribbon included), matrix algebras, and finitely
presented linear categories.

Conventions: vectors are dense coefficient lists over the algebra's
field; mu maps a basis pair (i, j) to the sparse expansion of e_i e_j;
composition of permutations is (f g)(x) = f(g(x)).
"""

from __future__ import annotations

import warnings
from itertools import permutations

from .errors import (
    AlgebraInvalid,
    CategoryInvalid,
    HopfDataInvalid,
    HopfDataMissing,
    InvalidGroup,
    InvolutionInvalid,
    RibbonInvalid,
)
from .exactlin import SparseMatrix, rank
from .fields import Field
from .validation import ValidationReport


class Algebra:
    """Unital associative algebra from sparse structure constants.

    mu is a dict {(i, j): {k: c}} giving e_i e_j = sum_k c e_k with zero
    products omitted; unit is a dense coefficient vector.  Optional hopf,
    ribbon, and involution attributes start as None and are attached by
    the constructors below, each attachment re-validated.
    """

    def __init__(self, field: Field, mu, unit, basis_labels=None, validate=True):
        self.field = field
        self.dim = len(unit)
        if self.dim < 1:
            raise AlgebraInvalid("need dim >= 1")
        self.unit = [field.coerce(x) for x in unit]
        self.mu = {}
        for (i, j), terms in mu.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraInvalid(f"mu index ({i}, {j}) out of range")
            clean = {}
            for k, c in terms.items():
                if not 0 <= k < self.dim:
                    raise AlgebraInvalid(f"mu target {k} out of range")
                c = field.coerce(c)
                if not field.is_zero(c):
                    clean[k] = c
            if clean:
                self.mu[(i, j)] = clean
        if basis_labels is None:
            basis_labels = [f"e{i}" for i in range(self.dim)]
        if len(basis_labels) != self.dim:
            raise AlgebraInvalid("label count must match dim")
        self.basis_labels = list(basis_labels)
        self.hopf = None
        self.ribbon = None
        self.involution = None
        if validate:
            check_algebra(self).raise_if_failed(AlgebraInvalid)

    # -- arithmetic on dense coefficient vectors

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def product_basis(self, i, j):
        return self.mu.get((i, j), {})

    def multiply(self, a, b):
        F = self.field
        out = self.zero_vector()
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                if F.is_zero(y):
                    continue
                xy = F.mul(x, y)
                for k, c in self.product_basis(i, j).items():
                    out[k] = F.add(out[k], F.mul(xy, c))
        return out

    def power(self, a, k):
        if k < 0:
            raise ValueError("negative algebra power")
        out = list(self.unit)
        for _ in range(k):
            out = self.multiply(out, a)
        return out

    def left_mult_matrix(self, v):
        """Matrix of x -> v x in the basis."""
        F = self.field
        entries = {}
        for i, x in enumerate(v):
            if F.is_zero(x):
                continue
            for j in range(self.dim):
                for k, c in self.product_basis(i, j).items():
                    key = (k, j)
                    acc = F.add(entries.get(key, F.zero), F.mul(x, c))
                    if F.is_zero(acc):
                        entries.pop(key, None)
                    else:
                        entries[key] = acc
        return SparseMatrix(F, self.dim, self.dim, entries)

    def right_mult_matrix(self, v):
        """Matrix of x -> x v in the basis."""
        F = self.field
        entries = {}
        for j_slot, x in enumerate(v):
            if F.is_zero(x):
                continue
            for j in range(self.dim):
                for k, c in self.product_basis(j, j_slot).items():
                    key = (k, j)
                    acc = F.add(entries.get(key, F.zero), F.mul(x, c))
                    if F.is_zero(acc):
                        entries.pop(key, None)
                    else:
                        entries[key] = acc
        return SparseMatrix(F, self.dim, self.dim, entries)

    def label(self, i):
        return self.basis_labels[i]

    def __repr__(self):
        extras = "".join(
            tag
            for tag, val in (
                ("+hopf", self.hopf),
                ("+ribbon", self.ribbon),
                ("+involution", self.involution),
            )
            if val is not None
        )
        return f"<Algebra dim={self.dim}{extras}>"

    # -- structure attachment, each validated on the spot

    def attach_hopf(self, hopf):
        hopf.validate(self).raise_if_failed(HopfDataInvalid)
        self.hopf = hopf
        return self

    def attach_ribbon(self, ribbon):
        ribbon.validate(self).raise_if_failed(RibbonInvalid)
        self.ribbon = ribbon
        return self

    def attach_involution(self, w):
        w.validate(self).raise_if_failed(InvolutionInvalid)
        self.involution = w
        return self


def check_algebra(A: Algebra) -> ValidationReport:
    """Exhaustive associativity and unit axioms; names every bad triple.

    Works on sparse coefficient dicts so the cubic sweep stays cheap for
    permutation-like multiplication tables.
    """
    report = ValidationReport("algebra")
    F = A.field

    def mul_sparse(u, v):
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                xy = F.mul(x, y)
                for k, c in A.product_basis(i, j).items():
                    acc = F.add(out.get(k, F.zero), F.mul(xy, c))
                    if F.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    unit_terms = {i: c for i, c in enumerate(A.unit) if not F.is_zero(c)}
    for i in range(A.dim):
        e = {i: F.one}
        report.tick(2)
        if mul_sparse(unit_terms, e) != e:
            report.record("left_unit", (i,))
        if mul_sparse(e, unit_terms) != e:
            report.record("right_unit", (i,))
    for i in range(A.dim):
        for j in range(A.dim):
            prod_ij = A.product_basis(i, j)
            for k in range(A.dim):
                report.tick()
                left = mul_sparse(prod_ij, {k: F.one})
                right = mul_sparse({i: F.one}, A.product_basis(j, k))
                if left != right:
                    report.record("assoc", (i, j, k))
    return report


class HopfData:
    """Comultiplication, counit, and antipode in basis coordinates.

    comul maps basis index i to {(j, k): c} with Delta(e_i) = sum c e_j (x) e_k;
    counit is a dense covector; antipode is an exact matrix.
    """

    def __init__(self, comul, counit, antipode: SparseMatrix):
        self.comul = {i: dict(terms) for i, terms in comul.items()}
        self.counit = list(counit)
        self.antipode = antipode

    def comul_terms(self, i):
        return self.comul.get(i, {})

    def apply_antipode(self, v):
        col = self.antipode * SparseMatrix.column_vector(self.antipode.field, v)
        return [col.entries.get((r, 0), self.antipode.field.zero) for r in range(len(v))]

    def validate(self, A: Algebra) -> ValidationReport:
        report = ValidationReport("hopf data")
        F = A.field
        if len(self.counit) != A.dim or self.antipode.nrows != A.dim or self.antipode.ncols != A.dim:
            report.record("shape", None, "counit/antipode must match dim")
            return report
        s_of = [self.apply_antipode(A.basis_vector(i)) for i in range(A.dim)]
        for i in range(A.dim):
            terms = self.comul_terms(i)
            # counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
            left = A.zero_vector()
            right = A.zero_vector()
            for (j, k), c in terms.items():
                left[k] = F.add(left[k], F.mul(c, self.counit[j]))
                right[j] = F.add(right[j], F.mul(c, self.counit[k]))
            report.tick(2)
            if left != A.basis_vector(i):
                report.record("counit_left", (i,))
            if right != A.basis_vector(i):
                report.record("counit_right", (i,))
            # coassociativity on e_i, as sparse triple tensors
            lhs, rhs = {}, {}
            for (j, k), c in terms.items():
                for (p, q), d in self.comul_terms(j).items():
                    key = (p, q, k)
                    lhs[key] = F.add(lhs.get(key, F.zero), F.mul(c, d))
                for (p, q), d in self.comul_terms(k).items():
                    key = (j, p, q)
                    rhs[key] = F.add(rhs.get(key, F.zero), F.mul(c, d))
            report.tick()
            if {k: v for k, v in lhs.items() if not F.is_zero(v)} != {
                k: v for k, v in rhs.items() if not F.is_zero(v)
            }:
                report.record("coassoc", (i,))
            # antipode axiom: m(S (x) id)Delta = unit * eps = m(id (x) S)Delta
            want = [F.mul(self.counit[i], u) for u in A.unit]
            left = A.zero_vector()
            right = A.zero_vector()
            for (j, k), c in terms.items():
                for pos, val in enumerate(A.multiply(s_of[j], A.basis_vector(k))):
                    left[pos] = F.add(left[pos], F.mul(c, val))
                for pos, val in enumerate(A.multiply(A.basis_vector(j), s_of[k])):
                    right[pos] = F.add(right[pos], F.mul(c, val))
            report.tick(2)
            if left != want:
                report.record("antipode_left", (i,))
            if right != want:
                report.record("antipode_right", (i,))
        for i in range(A.dim):
            for j in range(A.dim):
                report.tick()
                lhs = self.apply_antipode(A.multiply(A.basis_vector(i), A.basis_vector(j)))
                if lhs != A.multiply(s_of[j], s_of[i]):
                    report.record("anti_hom", (i, j))
        return report


class AntiInvolution:
    """An algebra anti-automorphism w with w(1) = 1 and w squared = id."""

    def __init__(self, matrix: SparseMatrix):
        self.matrix = matrix

    def apply(self, v):
        col = self.matrix * SparseMatrix.column_vector(self.matrix.field, v)
        return [col.entries.get((r, 0), self.matrix.field.zero) for r in range(len(v))]

    def validate(self, A: Algebra) -> ValidationReport:
        report = ValidationReport("anti-involution")
        if self.matrix.nrows != A.dim or self.matrix.ncols != A.dim:
            report.record("shape", None, "matrix must be dim x dim")
            return report
        report.tick(2)
        if self.apply(A.unit) != A.unit:
            report.record("unit_fixed", None)
        if self.matrix * self.matrix != SparseMatrix.identity(A.field, A.dim):
            report.record("involutive", None)
        w_of = [self.apply(A.basis_vector(i)) for i in range(A.dim)]
        for i in range(A.dim):
            for j in range(A.dim):
                report.tick()
                lhs = self.apply(A.multiply(A.basis_vector(i), A.basis_vector(j)))
                if lhs != A.multiply(w_of[j], w_of[i]):
                    report.record("anti_hom", (i, j))
        return report


class RibbonData:
    """A central invertible element v with a stored inverse."""

    def __init__(self, v, v_inv):
        self.v = list(v)
        self.v_inv = list(v_inv)

    def power(self, A: Algebra, k: int):
        base = self.v if k >= 0 else self.v_inv
        return A.power(base, abs(k))

    def validate(self, A: Algebra) -> ValidationReport:
        report = ValidationReport("ribbon data")
        if len(self.v) != A.dim or len(self.v_inv) != A.dim:
            report.record("shape", None, "v and v_inv must have length dim")
            return report
        report.tick(2)
        if A.multiply(self.v, self.v_inv) != A.unit:
            report.record("inverse", ("v*v_inv",))
        if A.multiply(self.v_inv, self.v) != A.unit:
            report.record("inverse", ("v_inv*v",))
        for i in range(A.dim):
            report.tick()
            e = A.basis_vector(i)
            if A.multiply(self.v, e) != A.multiply(e, self.v):
                report.record("central", (i,))
        return report


# ---------------------------------------------------------------------------
# finite groups


def _cycle_label(perm):
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + "".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) or "e"


class FiniteGroup:
    """A finite group as a multiplication table of indices."""

    def __init__(self, table, labels=None, validate=True):
        self.order = len(table)
        self.table = [list(row) for row in table]
        if labels is None:
            labels = [f"g{i}" for i in range(self.order)]
        self.labels = list(labels)
        if len(self.labels) != self.order:
            raise InvalidGroup("label count must match order")
        if validate:
            self._validate()
        self.identity = next(
            e for e in range(self.order)
            if all(self.table[e][x] == x == self.table[x][e] for x in range(self.order))
        )
        self.inverse_table = [
            next(h for h in range(self.order) if self.table[g][h] == self.identity)
            for g in range(self.order)
        ]

    def _validate(self):
        n = self.order
        if n < 1:
            raise InvalidGroup("empty table")
        for row in self.table:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise InvalidGroup("table is not order x order over valid indices")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise InvalidGroup(f"associativity fails at ({i}, {j}, {k})")
        has_identity = any(
            all(self.table[e][x] == x == self.table[x][e] for x in range(n)) for e in range(n)
        )
        if not has_identity:
            raise InvalidGroup("no identity element")
        e = next(
            e for e in range(n) if all(self.table[e][x] == x for x in range(n))
        )
        for g in range(n):
            if not any(self.table[g][h] == e for h in range(n)):
                raise InvalidGroup(f"element {g} has no inverse")

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self.inverse_table[i]

    def index_of(self, label):
        return self.labels.index(label)

    def __repr__(self):
        return f"<FiniteGroup order={self.order}>"

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise InvalidGroup("cyclic group needs n >= 1")
        labels = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(table, labels)

    @classmethod
    def symmetric(cls, n):
        perms = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(f[g[x]] for x in range(n))] for g in perms]
            for f in perms
        ]
        return cls(table, [_cycle_label(p) for p in perms])


# ---------------------------------------------------------------------------
# constructors


def group_algebra(G: FiniteGroup, field: Field) -> Algebra:
    """k[G] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g inverse, w = S."""
    mu = {(i, j): {G.mul(i, j): 1} for i in range(G.order) for j in range(G.order)}
    unit = [0] * G.order
    unit[G.identity] = 1
    A = Algebra(field, mu, unit, list(G.labels))
    comul = {i: {(i, i): field.one} for i in range(G.order)}
    counit = [field.one] * G.order
    antipode = SparseMatrix(
        field, G.order, G.order, {(G.inv(i), i): field.one for i in range(G.order)}
    )
    A.attach_hopf(HopfData(comul, counit, antipode))
    A.attach_involution(AntiInvolution(antipode))
    return A


def drinfeld_double(G: FiniteGroup, field: Field, ribbon_convention="v-inv") -> Algebra:
    """The double D(G) on basis (g, h), with its ribbon element and w = S.

    Product: (g, h)(g', h') = [g' = h^-1 g h] (g, hh'); unit sums (g, e);
    S(g, h) = (h^-1 g^-1 h, h^-1).  The element sum_g (g, g) and its
    flip sum_g (g, g^-1) are mutually inverse and central; the convention
    flag decides which one is stored as v_inv.
    """
    if ribbon_convention not in ("v-inv", "v"):
        raise ValueError(f"unknown ribbon convention {ribbon_convention!r}")
    o = G.order
    if field.characteristic and o % field.characteristic == 0:
        warnings.warn(
            f"field characteristic {field.characteristic} divides the group order {o}; "
            "the double is not semisimple and ribbon behavior is untested there"
        )
    dim = o * o
    idx = lambda g, h: g * o + h
    mu = {}
    for g in range(o):
        for h in range(o):
            conj = G.mul(G.inv(h), G.mul(g, h))
            for h2 in range(o):
                mu[(idx(g, h), idx(conj, h2))] = {idx(g, G.mul(h, h2)): 1}
    unit = [0] * dim
    for g in range(o):
        unit[idx(g, G.identity)] = 1
    labels = [f"({G.labels[g]}|{G.labels[h]})" for g in range(o) for h in range(o)]
    A = Algebra(field, mu, unit, labels)

    comul = {}
    for g in range(o):
        for h in range(o):
            comul[idx(g, h)] = {
                (idx(g1, h), idx(G.mul(G.inv(g1), g), h)): field.one for g1 in range(o)
            }
    counit = [field.one if g == G.identity else field.zero for g in range(o) for _ in range(o)]
    antipode_entries = {}
    for g in range(o):
        for h in range(o):
            hi = G.inv(h)
            target = idx(G.mul(hi, G.mul(G.inv(g), h)), hi)
            antipode_entries[(target, idx(g, h))] = field.one
    antipode = SparseMatrix(field, dim, dim, antipode_entries)
    A.attach_hopf(HopfData(comul, counit, antipode))

    diag = [0] * dim
    flip = [0] * dim
    for g in range(o):
        diag[idx(g, g)] = 1
        flip[idx(g, G.inv(g))] = 1
    if ribbon_convention == "v-inv":
        A.attach_ribbon(RibbonData(flip, diag))
    else:
        A.attach_ribbon(RibbonData(diag, flip))
    A.attach_involution(AntiInvolution(antipode))
    return A


def with_trivial_ribbon(A: Algebra) -> Algebra:
    """Attach v = v_inv = 1; the twist then acts trivially everywhere."""
    A.attach_ribbon(RibbonData(list(A.unit), list(A.unit)))
    return A


def matrix_algebra(A: Algebra, n: int) -> Algebra:
    """n x n matrices over A; ribbon and involution transport when present."""
    if n < 1:
        raise AlgebraInvalid("matrix algebra needs n >= 1")
    F = A.field
    d = A.dim
    idx = lambda r, c, a: (r * n + c) * d + a
    mu = {}
    for r in range(n):
        for c in range(n):
            for c2 in range(n):
                for a in range(d):
                    for b in range(d):
                        terms = A.product_basis(a, b)
                        if terms:
                            mu[(idx(r, c, a), idx(c, c2, b))] = {
                                idx(r, c2, k): coef for k, coef in terms.items()
                            }
    unit = [F.zero] * (n * n * d)
    for r in range(n):
        for a in range(d):
            unit[idx(r, r, a)] = A.unit[a]
    labels = [
        f"E{r + 1}{c + 1}({A.basis_labels[a]})"
        for r in range(n)
        for c in range(n)
        for a in range(d)
    ]
    M = Algebra(F, mu, unit, labels)
    if A.ribbon is not None:
        v = [F.zero] * (n * n * d)
        v_inv = [F.zero] * (n * n * d)
        for r in range(n):
            for a in range(d):
                v[idx(r, r, a)] = A.ribbon.v[a]
                v_inv[idx(r, r, a)] = A.ribbon.v_inv[a]
        M.attach_ribbon(RibbonData(v, v_inv))
    if A.involution is not None:
        w = A.involution.matrix
        entries = {}
        for (k, a), coef in w.entries.items():
            for r in range(n):
                for c in range(n):
                    entries[(idx(c, r, k), idx(r, c, a))] = coef
        M.attach_involution(AntiInvolution(SparseMatrix(F, n * n * d, n * n * d, entries)))
    return M


# ---------------------------------------------------------------------------
# presented linear categories


class PresentedCategory:
    """A finite linear category: labeled objects, hom bases, composition.

    hom_dims[(x, y)] is the dimension of the morphism space x -> y;
    composition[(x, y, z)] maps (k_gf pairs) to sparse composites, with
    comp(g, f) = g after f; identities[x] is a vector in hom (x, x).
    """

    def __init__(self, field: Field, objects, hom_dims, composition, identities, validate=True):
        self.field = field
        self.objects = list(objects)
        if not self.objects:
            raise CategoryInvalid("need at least one object")
        self.hom_dims = {
            (x, y): hom_dims.get((x, y), 0) for x in self.objects for y in self.objects
        }
        self.composition = composition
        self.identities = identities
        if validate:
            self.check().raise_if_failed(CategoryInvalid)

    def hom_dim(self, x, y):
        return self.hom_dims[(x, y)]

    def compose_basis(self, x, y, z, k_g, k_f):
        """Sparse expansion of (basis morphism k_g of y->z) after (k_f of x->y)."""
        return self.composition.get((x, y, z), {}).get((k_g, k_f), {})

    def compose_vectors(self, x, y, z, g, f):
        F = self.field
        out = [F.zero] * self.hom_dim(x, z)
        for kg, cg in enumerate(g):
            if F.is_zero(cg):
                continue
            for kf, cf in enumerate(f):
                if F.is_zero(cf):
                    continue
                scale = F.mul(cg, cf)
                for k, c in self.compose_basis(x, y, z, kg, kf).items():
                    out[k] = F.add(out[k], F.mul(scale, c))
        return out

    def identity_vector(self, x):
        return [self.field.coerce(c) for c in self.identities[x]]

    def check(self) -> ValidationReport:
        report = ValidationReport("presented category")
        F = self.field
        for x in self.objects:
            if len(self.identities.get(x, ())) != self.hom_dim(x, x):
                report.record("identity_shape", (x,))
                return report
        for x in self.objects:
            for y in self.objects:
                for k in range(self.hom_dim(x, y)):
                    f = [F.one if i == k else F.zero for i in range(self.hom_dim(x, y))]
                    report.tick(2)
                    if self.compose_vectors(x, x, y, f, self.identity_vector(x)) != f:
                        report.record("right_identity", (x, y, k))
                    if self.compose_vectors(x, y, y, self.identity_vector(y), f) != f:
                        report.record("left_identity", (x, y, k))
        for x in self.objects:
            for y in self.objects:
                for z in self.objects:
                    for u in self.objects:
                        self._check_assoc(report, x, y, z, u)
        return report

    def _check_assoc(self, report, x, y, z, u):
        F = self.field
        for kf in range(self.hom_dim(x, y)):
            f = [F.one if i == kf else F.zero for i in range(self.hom_dim(x, y))]
            for kg in range(self.hom_dim(y, z)):
                g = [F.one if i == kg else F.zero for i in range(self.hom_dim(y, z))]
                gf = self.compose_vectors(x, y, z, g, f)
                for kh in range(self.hom_dim(z, u)):
                    h = [F.one if i == kh else F.zero for i in range(self.hom_dim(z, u))]
                    report.tick()
                    left = self.compose_vectors(x, z, u, self.compose_vectors(y, z, u, h, g), f)
                    right = self.compose_vectors(x, y, u, h, gf)
                    if left != right:
                        report.record("assoc", (x, y, z, u, kh, kg, kf))

    def total_algebra(self) -> Algebra:
        """The category algebra: direct sum of all hom spaces, composition
        as product, zero for non-composable pairs, unit = sum of identities."""
        F = self.field
        offset = {}
        pos = 0
        for x in self.objects:
            for y in self.objects:
                offset[(x, y)] = pos
                pos += self.hom_dim(x, y)
        total = pos
        mu = {}
        for x in self.objects:
            for y in self.objects:
                for z in self.objects:
                    base_f = offset[(x, y)]
                    base_g = offset[(y, z)]
                    base_h = offset[(x, z)]
                    for kg in range(self.hom_dim(y, z)):
                        for kf in range(self.hom_dim(x, y)):
                            terms = self.compose_basis(x, y, z, kg, kf)
                            if terms:
                                mu[(base_g + kg, base_f + kf)] = {
                                    base_h + k: c for k, c in terms.items()
                                }
        unit = [F.zero] * total
        for x in self.objects:
            for k, c in enumerate(self.identity_vector(x)):
                unit[offset[(x, x)] + k] = c
        labels = [
            f"[{x}->{y}]{k}"
            for x in self.objects
            for y in self.objects
            for k in range(self.hom_dim(x, y))
        ]
        return Algebra(F, mu, unit, labels)

    @classmethod
    def one_object(cls, A: Algebra, label="*"):
        """A as the endomorphisms of a single object."""
        comp = {(label, label, label): {
            (i, j): dict(terms) for (i, j), terms in A.mu.items()
        }}
        return cls(
            A.field,
            [label],
            {(label, label): A.dim},
            comp,
            {label: list(A.unit)},
        )

    @classmethod
    def repeated_object(cls, A: Algebra, count: int):
        """count interchangeable copies of one object, every hom space A.

        The category algebra of this presentation is the count x count
        matrix algebra over A.
        """
        if count < 1:
            raise CategoryInvalid("need at least one copy")
        objects = [f"*{i}" for i in range(count)]
        comp = {}
        for x in objects:
            for y in objects:
                for z in objects:
                    comp[(x, y, z)] = {(i, j): dict(terms) for (i, j), terms in A.mu.items()}
        return cls(
            A.field,
            objects,
            {(x, y): A.dim for x in objects for y in objects},
            comp,
            {x: list(A.unit) for x in objects},
        )


# ---------------------------------------------------------------------------
# the coadjoint module and its invariants


class ModuleAction:
    """A left module structure as one action matrix per algebra basis element."""

    def __init__(self, algebra: Algebra, matrices):
        self.algebra = algebra
        self.matrices = list(matrices)

    def act_matrix(self, i):
        return self.matrices[i]

    def validate(self) -> ValidationReport:
        report = ValidationReport("module action")
        A = self.algebra
        F = A.field
        module_dim = self.matrices[0].nrows
        unit_action = SparseMatrix.zeros(F, module_dim, module_dim)
        for i, c in enumerate(A.unit):
            if not F.is_zero(c):
                unit_action = unit_action + self.matrices[i].scale(c)
        report.tick()
        if unit_action != SparseMatrix.identity(F, module_dim):
            report.record("unit_acts_as_identity", None)
        for i in range(A.dim):
            for j in range(A.dim):
                report.tick()
                lhs = SparseMatrix.zeros(F, module_dim, module_dim)
                for k, c in A.product_basis(i, j).items():
                    lhs = lhs + self.matrices[k].scale(c)
                if lhs != self.matrices[i] * self.matrices[j]:
                    report.record("action_multiplicative", (i, j))
        return report


def coadjoint_module(A: Algebra) -> ModuleAction:
    """The dual of A with a acting by alpha -> alpha(S(a') . a'').

    In dual-basis coordinates the action matrix of e_i has entry (b, l)
    equal to the e_l-coefficient of sum S(e_i') e_b e_i''.
    """
    if A.hopf is None:
        raise HopfDataMissing("coadjoint module needs hopf data")
    F = A.field
    matrices = []
    for i in range(A.dim):
        entries = {}
        for (j, k), c in A.hopf.comul_terms(i).items():
            s_j = A.hopf.apply_antipode(A.basis_vector(j))
            for b in range(A.dim):
                mid = A.multiply(s_j, A.basis_vector(b))
                full = A.multiply(mid, A.basis_vector(k))
                for l, coef in enumerate(full):
                    if F.is_zero(coef):
                        continue
                    key = (b, l)
                    acc = F.add(entries.get(key, F.zero), F.mul(c, coef))
                    if F.is_zero(acc):
                        entries.pop(key, None)
                    else:
                        entries[key] = acc
        matrices.append(SparseMatrix(F, A.dim, A.dim, entries))
    action = ModuleAction(A, matrices)
    action.validate().raise_if_failed(HopfDataInvalid)
    return action


def coadjoint_invariants_dim(A: Algebra) -> int:
    """dim of the functionals with a . alpha = eps(a) alpha for all a."""
    if A.hopf is None:
        raise HopfDataMissing("invariants need hopf data")
    action = coadjoint_module(A)
    F = A.field
    blocks = []
    for i in range(A.dim):
        eps_scaled = SparseMatrix.identity(F, A.dim).scale(A.hopf.counit[i])
        blocks.append(action.act_matrix(i) - eps_scaled)
    stacked = blocks[0]
    for blk in blocks[1:]:
        stacked = stacked.vstack(blk)
    return A.dim - rank(stacked)

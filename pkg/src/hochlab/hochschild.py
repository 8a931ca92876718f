"""Hochschild chain complexes with their cyclic and dihedral symmetries.

The bundle built here carries, per degree n up to a truncation N, the
chain space C_n = A tensor (n+1) (or loops of morphisms for a presented
category), the faces, degeneracies, and the unsigned rotation stored as
CyclicModuleData, the boundary b, and the Connes operator B.

Sign conventions, fixed once: the module data keeps unsigned structure
operators (those satisfy the textbook relation lists verbatim); chain
maps carry the signs.  The signed rotation is (-1)^n times the rotation,
the signed reflection is (-1)^(n(n+1)/2) times the w-twisted reversal,
b = sum (-1)^i d_i, and B = (1 - t) s N built from the signed rotation,
the extra degeneracy, and the norm.  b b = 0, B B = 0, and b B + B b = 0
are enforced by the test suite as exact matrix identities.

Homology-level actions: the Dehn twist multiplies one tensor leg by the
ribbon element and descends to HH_n; the reflection descends the signed
reflection.  Both go through honest subspace-preservation checks before
a matrix on homology is produced.
"""

from __future__ import annotations

from itertools import product

from .algebra import Algebra, AntiInvolution, PresentedCategory
from .errors import (
    CharNotZero,
    IndexOutOfRange,
    InvolutionMissing,
    NotChainEndomorphism,
    NotChainMap,
    RibbonMissing,
    SizeBoundExceeded,
)
from .exactlin import (
    SparseMatrix,
    charpoly,
    columns_in_span,
    homology_basis,
    homology_dim,
    image_basis,
    induced_map_on_quotient,
    kron,
    rank,
    solve_columns,
    _complete_basis,
)
from .simplicial import (
    CyclicModuleData,
    DihedralModuleData,
    check_cyclic_module,
    check_dihedral_module,
)

DEFAULT_MAX_CELLS = 10 ** 6


def _decode(idx, dim, length):
    out = []
    for _ in range(length):
        idx, r = divmod(idx, dim)
        out.append(r)
    return tuple(reversed(out))


def _encode(tup, dim):
    idx = 0
    for x in tup:
        idx = idx * dim + x
    return idx


class HochschildComplexBundle:
    """Chain data of one algebra or category, truncated at max_degree."""

    def __init__(self, source, field, cyclic_data: CyclicModuleData, b, connes):
        self.source = source
        self.field = field
        self.cyclic = cyclic_data
        self.dims = cyclic_data.dims
        self.max_degree = cyclic_data.max_degree
        self.b = b
        self.connes = connes
        self.dihedral = None
        self._hom_basis = {}

    def __repr__(self):
        kinds = "+dihedral" if self.dihedral is not None else ""
        return f"<HochschildComplexBundle N={self.max_degree} dims={self.dims}{kinds}>"

    def boundary(self, n):
        return self.b[n]

    def connes_b(self, n):
        if not 0 <= n < self.max_degree:
            raise IndexOutOfRange(f"B_{n} needs degree below {self.max_degree}")
        return self.connes[n]

    def b_prime(self, n):
        """The bar-type boundary omitting the wrap-around face."""
        faces = self.cyclic.faces[n]
        acc = SparseMatrix.zeros(self.field, self.dims[n - 1], self.dims[n])
        for i in range(n):
            acc = acc + faces[i].scale((-1) ** i)
        return acc

    def signed_rotation(self, n):
        return self.cyclic.cyclic[n].scale((-1) ** n)

    def signed_reflection(self, n):
        if self.dihedral is None:
            raise InvolutionMissing("bundle has no dihedral structure")
        return self.dihedral.reflections[n].scale((-1) ** (n * (n + 1) // 2))

    def homology_dim(self, n):
        self._need_homology_degree(n)
        return homology_dim(self.b[n + 1], self.b[n])

    def homology_basis(self, n):
        self._need_homology_degree(n)
        if n not in self._hom_basis:
            self._hom_basis[n] = homology_basis(self.b[n + 1], self.b[n])
        return self._hom_basis[n]

    def induced_on_homology(self, f, n, assume_chain_map=False):
        self._need_homology_degree(n)
        return induced_map_on_quotient(
            f, self.b[n + 1], self.b[n], assume_chain_map=assume_chain_map
        )

    def _need_homology_degree(self, n):
        if not 0 <= n < self.max_degree:
            raise IndexOutOfRange(
                f"homology in degree {n} needs the boundary from degree {n + 1}; "
                f"this bundle is truncated at {self.max_degree}"
            )


# ---------------------------------------------------------------------------
# construction from an algebra


def _algebra_cyclic_data(A: Algebra, top: int) -> CyclicModuleData:
    F = A.field
    d = A.dim
    dims = [d ** (n + 1) for n in range(top + 1)]
    unit_terms = [(k, c) for k, c in enumerate(A.unit) if not F.is_zero(c)]

    faces = [[]]
    for n in range(1, top + 1):
        row = []
        for i in range(n + 1):
            entries = {}
            for col in range(dims[n]):
                tup = _decode(col, d, n + 1)
                if i < n:
                    prod = A.product_basis(tup[i], tup[i + 1])
                    head, tail = tup[:i], tup[i + 2:]
                else:
                    prod = A.product_basis(tup[n], tup[0])
                    head, tail = (), tup[1:n]
                for k, c in prod.items():
                    key = (_encode(head + (k,) + tail, d), col)
                    acc = F.add(entries.get(key, F.zero), c)
                    if F.is_zero(acc):
                        entries.pop(key, None)
                    else:
                        entries[key] = acc
            row.append(SparseMatrix(F, dims[n - 1], dims[n], entries))
        faces.append(row)

    degens = []
    for n in range(top + 1):
        target = d ** (n + 2)
        row = []
        for j in range(n + 1):
            entries = {}
            for col in range(dims[n]):
                tup = _decode(col, d, n + 1)
                for k, c in unit_terms:
                    entries[(_encode(tup[: j + 1] + (k,) + tup[j + 1:], d), col)] = c
            row.append(SparseMatrix(F, target, dims[n], entries))
        degens.append(row)

    cyclics = []
    for n in range(top + 1):
        entries = {}
        for col in range(dims[n]):
            tup = _decode(col, d, n + 1)
            entries[(_encode((tup[-1],) + tup[:-1], d), col)] = F.one
        cyclics.append(SparseMatrix(F, dims[n], dims[n], entries))

    return CyclicModuleData(F, dims, faces, degens, cyclics)


# ---------------------------------------------------------------------------
# construction from a presented category


class _LoopSpace:
    """Basis of degree-n loops: objects (X_0..X_n), legs f_i: X_{i+1} -> X_i."""

    def __init__(self, P: PresentedCategory, n: int):
        self.entries = []
        self.index = {}
        for objs in product(P.objects, repeat=n + 1):
            ranges = [
                range(P.hom_dim(objs[(i + 1) % (n + 1)], objs[i])) for i in range(n + 1)
            ]
            for legs in product(*ranges):
                self.index[(objs, legs)] = len(self.entries)
                self.entries.append((objs, legs))

    @property
    def size(self):
        return len(self.entries)


def _category_cyclic_data(P: PresentedCategory, top: int, max_cells: int):
    F = P.field
    spaces = []
    for n in range(top + 2):
        sp = _LoopSpace(P, n)
        if sp.size > max_cells:
            raise SizeBoundExceeded(
                f"degree {n} needs {sp.size} loop basis elements, bound is {max_cells}"
            )
        spaces.append(sp)
    dims = [spaces[n].size for n in range(top + 1)]

    faces = [[]]
    for n in range(1, top + 1):
        row = []
        for i in range(n + 1):
            entries = {}
            for col, (objs, legs) in enumerate(spaces[n].entries):
                if i < n:
                    terms = P.compose_basis(
                        objs[(i + 2) % (n + 1)], objs[i + 1], objs[i], legs[i], legs[i + 1]
                    )
                    new_objs = objs[: i + 1] + objs[i + 2:]
                    for k, c in terms.items():
                        new_legs = legs[:i] + (k,) + legs[i + 2:]
                        key = (spaces[n - 1].index[(new_objs, new_legs)], col)
                        acc = F.add(entries.get(key, F.zero), c)
                        if F.is_zero(acc):
                            entries.pop(key, None)
                        else:
                            entries[key] = acc
                else:
                    terms = P.compose_basis(objs[1], objs[0], objs[n], legs[n], legs[0])
                    new_objs = (objs[n],) + objs[1:n]
                    for k, c in terms.items():
                        new_legs = (k,) + legs[1:n]
                        key = (spaces[n - 1].index[(new_objs, new_legs)], col)
                        acc = F.add(entries.get(key, F.zero), c)
                        if F.is_zero(acc):
                            entries.pop(key, None)
                        else:
                            entries[key] = acc
            row.append(SparseMatrix(F, dims[n - 1], dims[n], entries))
        faces.append(row)

    degens = []
    for n in range(top + 1):
        row = []
        for j in range(n + 1):
            entries = {}
            for col, (objs, legs) in enumerate(spaces[n].entries):
                dup = objs[(j + 1) % (n + 1)]
                new_objs = objs[: j + 1] + (dup,) + objs[j + 1:]
                for k, c in enumerate(P.identity_vector(dup)):
                    if F.is_zero(c):
                        continue
                    new_legs = legs[: j + 1] + (k,) + legs[j + 1:]
                    entries[(spaces[n + 1].index[(new_objs, new_legs)], col)] = c
            row.append(SparseMatrix(F, spaces[n + 1].size, dims[n], entries))
        degens.append(row)

    cyclics = []
    for n in range(top + 1):
        entries = {}
        for col, (objs, legs) in enumerate(spaces[n].entries):
            rotated = ((objs[n],) + objs[:n], (legs[n],) + legs[:n])
            entries[(spaces[n].index[rotated], col)] = F.one
        cyclics.append(SparseMatrix(F, dims[n], dims[n], entries))

    return CyclicModuleData(F, dims, faces, degens, cyclics)


# ---------------------------------------------------------------------------
# bundles


def _finish_bundle(source, field, data: CyclicModuleData, validate: bool):
    top = data.max_degree
    b = [SparseMatrix.zeros(field, 0, data.dims[0])]
    for n in range(1, top + 1):
        acc = data.faces[n][0]
        for i in range(1, n + 1):
            acc = acc + data.faces[n][i].scale((-1) ** i)
        b.append(acc)
    connes = []
    for n in range(top):
        t_signed = data.cyclic[n].scale((-1) ** n)
        t_next_signed = data.cyclic[n + 1].scale((-1) ** (n + 1))
        norm = SparseMatrix.identity(field, data.dims[n])
        power = norm
        for _ in range(n):
            power = t_signed * power
            norm = norm + power
        extra = t_next_signed * data.degeneracies[n][n]
        eye_next = SparseMatrix.identity(field, data.dims[n + 1])
        connes.append((eye_next - t_next_signed) * (extra * norm))
    if validate:
        check_cyclic_module(data).raise_if_failed(NotChainMap)
    return HochschildComplexBundle(source, field, data, b, connes)


def hochschild_cyclic_module(
    A: Algebra, max_degree: int = 3, *, max_cells: int = DEFAULT_MAX_CELLS, validate: bool = True
) -> HochschildComplexBundle:
    """The cyclic module C_n = A tensor (n+1) with b and B, through max_degree."""
    if max_degree < 0:
        raise IndexOutOfRange("max_degree must be >= 0")
    if A.dim ** (max_degree + 1) > max_cells:
        raise SizeBoundExceeded(
            f"top degree needs {A.dim ** (max_degree + 1)} basis elements, "
            f"bound is {max_cells}"
        )
    data = _algebra_cyclic_data(A, max_degree)
    return _finish_bundle(A, A.field, data, validate)


def category_cyclic_module(
    P: PresentedCategory,
    max_degree: int = 3,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    validate: bool = True,
) -> HochschildComplexBundle:
    """The cyclic module of loops of composable morphisms, through max_degree."""
    if max_degree < 0:
        raise IndexOutOfRange("max_degree must be >= 0")
    data = _category_cyclic_data(P, max_degree, max_cells)
    return _finish_bundle(P, P.field, data, validate)


def dihedral_structure_from_involution(
    bundle: HochschildComplexBundle, w: AntiInvolution | None = None, *, validate: bool = True
) -> DihedralModuleData:
    """Attach reflections r_n(a_0 .. a_n) = w(a_0), w(a_n), .., w(a_1).

    The stored reflections are unsigned; signed_reflection supplies the
    (-1)^(n(n+1)/2) chain-level version.  w defaults to the involution
    attached to the source algebra.
    """
    A = bundle.source
    if not isinstance(A, Algebra):
        raise TypeError("dihedral structure is built from an algebra-sourced bundle")
    if w is None:
        w = A.involution
    if w is None:
        raise InvolutionMissing("no anti-involution available")
    F = bundle.field
    d = A.dim
    refl = []
    for n in range(bundle.max_degree + 1):
        size = bundle.dims[n]
        perm_entries = {}
        for col in range(size):
            tup = _decode(col, d, n + 1)
            rearranged = (tup[0],) + tuple(reversed(tup[1:]))
            perm_entries[(_encode(rearranged, d), col)] = F.one
        perm = SparseMatrix(F, size, size, perm_entries)
        w_tensor = w.matrix
        for _ in range(n):
            w_tensor = kron(w_tensor, w.matrix)
        refl.append(w_tensor * perm)
    dihedral = DihedralModuleData(bundle.cyclic, refl)
    if validate:
        check_dihedral_module(dihedral).raise_if_failed(NotChainMap)
    bundle.dihedral = dihedral
    return dihedral


# ---------------------------------------------------------------------------
# homology


def hh(bundle: HochschildComplexBundle, through_degree: int):
    """Hochschild homology dimensions for degrees 0..through_degree."""
    _need_degrees(bundle, through_degree)
    return [bundle.homology_dim(n) for n in range(through_degree + 1)]


def hc(bundle: HochschildComplexBundle, through_degree: int):
    """Cyclic homology dims from the quotient by im(1 - signed rotation)."""
    _need_char_zero(bundle)
    _need_degrees(bundle, through_degree)
    eye = lambda n: SparseMatrix.identity(bundle.field, bundle.dims[n])
    return _quotient_complex_dims(
        bundle,
        lambda n: [eye(n) - bundle.signed_rotation(n)],
        through_degree,
    )


def hd(bundle: HochschildComplexBundle, through_degree: int):
    """Dihedral homology dims: quotient by rotation and reflection jointly."""
    _need_char_zero(bundle)
    if bundle.dihedral is None:
        raise InvolutionMissing("dihedral homology needs dihedral structure")
    _need_degrees(bundle, through_degree)
    eye = lambda n: SparseMatrix.identity(bundle.field, bundle.dims[n])
    return _quotient_complex_dims(
        bundle,
        lambda n: [
            eye(n) - bundle.signed_rotation(n),
            eye(n) - bundle.signed_reflection(n),
        ],
        through_degree,
    )


def _need_char_zero(bundle):
    if bundle.field.characteristic:
        raise CharNotZero(
            "the quotient-complex model is only valid in characteristic zero"
        )


def _need_degrees(bundle, through_degree):
    if through_degree < 0 or through_degree + 1 > bundle.max_degree:
        raise IndexOutOfRange(
            f"degrees 0..{through_degree} need a bundle truncated above "
            f"{through_degree + 1}; this one stops at {bundle.max_degree}"
        )


def _quotient_complex_dims(bundle, rel_fn, through):
    """Homology of D_n = C_n / W_n with the induced boundary.

    W_n is spanned by the columns of rel_fn(n).  Representatives of D_n
    are identity columns completing a basis of W_n; the induced boundary
    is read off inside the frame [W basis | representatives].  The
    subspaces must be preserved by b, and the induced square must vanish;
    both are checked.
    """
    F = bundle.field
    w_basis, reps = {}, {}
    for n in range(through + 2):
        stack = None
        for m in rel_fn(n):
            stack = m if stack is None else stack.hstack(m)
        _, wb = image_basis(stack)
        w_basis[n] = wb
        reps[n] = _complete_basis(wb, SparseMatrix.identity(F, bundle.dims[n]))
    induced = {}
    for n in range(1, through + 2):
        if not columns_in_span(w_basis[n - 1], bundle.b[n] * w_basis[n]):
            raise NotChainMap(
                f"the boundary does not preserve the relation subspace in degree {n}"
            )
        frame = w_basis[n - 1].hstack(reps[n - 1])
        coords = solve_columns(frame, bundle.b[n] * reps[n])
        cut = w_basis[n - 1].ncols
        induced[n] = SparseMatrix(
            F,
            reps[n - 1].ncols,
            reps[n].ncols,
            {
                (r - cut, c): v
                for (r, c), v in coords.entries.items()
                if r >= cut
            },
        )
    out = []
    for n in range(through + 1):
        d_out = induced[n] if n >= 1 else SparseMatrix.zeros(F, 0, reps[0].ncols)
        out.append(homology_dim(induced[n + 1], d_out))
    return out


# ---------------------------------------------------------------------------
# the mapping-class-group actions


def balancing_endomorphism(bundle: HochschildComplexBundle, n: int, ells) -> SparseMatrix:
    """Multiply tensor leg i by the ribbon element to the power ells[i]."""
    A = bundle.source
    ribbon = getattr(A, "ribbon", None)
    if ribbon is None:
        raise RibbonMissing("balancing needs ribbon data on the source algebra")
    if not 0 <= n <= bundle.max_degree:
        raise IndexOutOfRange(f"degree {n} outside 0..{bundle.max_degree}")
    ells = tuple(ells)
    if len(ells) != n + 1:
        raise IndexOutOfRange(f"need {n + 1} leg exponents, got {len(ells)}")
    mats = {}
    acc = None
    for ell in ells:
        if ell not in mats:
            mats[ell] = A.left_mult_matrix(ribbon.power(A, ell))
        acc = mats[ell] if acc is None else kron(acc, mats[ell])
    return acc


def _strict_chain_map_check(bundle, op_at, n, what):
    """Verify op commutes with b in the degrees feeding HH_n."""
    for k in (n, n + 1):
        if k < 1:
            continue
        if bundle.b[k] * op_at(k) != op_at(k - 1) * bundle.b[k]:
            raise NotChainMap(f"{what} fails to commute with the boundary in degree {k}")


def dehn_twist_action(bundle: HochschildComplexBundle, n: int, leg: int = 0) -> SparseMatrix:
    """The twist on HH_n: ribbon multiplication on one tensor leg, descended.

    Leg 0 commutes with b strictly (the ribbon is central), which is
    verified and then assumed; other legs only descend up to homotopy, so
    they go through the full subspace-preservation checks.
    """
    bundle._need_homology_degree(n)
    if not 0 <= leg <= n:
        raise IndexOutOfRange(f"leg {leg} outside 0..{n}")

    def op_at(k):
        ells = [0] * (k + 1)
        if leg <= k:
            ells[leg] = 1
        return balancing_endomorphism(bundle, k, ells)

    try:
        if leg == 0:
            _strict_chain_map_check(bundle, op_at, n, "ribbon twist")
            return bundle.induced_on_homology(op_at(n), n, assume_chain_map=True)
        return bundle.induced_on_homology(op_at(n), n)
    except NotChainEndomorphism as exc:
        raise NotChainMap(str(exc)) from exc


def reflection_action(bundle: HochschildComplexBundle, n: int) -> SparseMatrix:
    """The signed reflection descended to HH_n; squares to the identity."""
    bundle._need_homology_degree(n)
    try:
        _strict_chain_map_check(bundle, bundle.signed_reflection, n, "signed reflection")
        return bundle.induced_on_homology(bundle.signed_reflection(n), n, assume_chain_map=True)
    except NotChainEndomorphism as exc:
        raise NotChainMap(str(exc)) from exc


class ActionReport:
    """Homology dimensions plus the twist and reflection matrices per degree."""

    def __init__(self, degrees):
        self.degrees = list(degrees)
        self.hh_dims = []
        self.twist = []
        self.reflection = []
        self.twist_order = []
        self.twist_invertible = []
        self.reflection_involutive = []
        self.commute = []

    @property
    def ok(self):
        return (
            all(self.twist_invertible)
            and all(self.reflection_involutive)
            and all(self.commute)
        )

    def to_dict(self):
        return {
            "degrees": self.degrees,
            "hh_dims": self.hh_dims,
            "twist": [m.to_triples() for m in self.twist],
            "reflection": [m.to_triples() for m in self.reflection],
            "twist_order": self.twist_order,
            "twist_invertible": self.twist_invertible,
            "reflection_involutive": self.reflection_involutive,
            "commute": self.commute,
            "ok": self.ok,
        }


def mcg_action_report(
    bundle: HochschildComplexBundle, through_degree: int | None = None, order_bound: int = 12
) -> ActionReport:
    """Verify the genus-one mapping-class relations on homology.

    Per degree: the reflection squares to the identity, the twist is
    invertible (inverse realized by the inverse ribbon element), the two
    commute, and the twist's multiplicative order is recorded when it is
    at most order_bound (None marks larger-or-infinite order).
    """
    if bundle.dihedral is None:
        raise InvolutionMissing("action report needs dihedral structure")
    if getattr(bundle.source, "ribbon", None) is None:
        raise RibbonMissing("action report needs ribbon data")
    if through_degree is None:
        through_degree = min(2, bundle.max_degree - 1)
    _need_degrees(bundle, through_degree)
    report = ActionReport(range(through_degree + 1))
    for n in report.degrees:
        dim_n = bundle.homology_dim(n)
        t_mat = dehn_twist_action(bundle, n)
        r_mat = reflection_action(bundle, n)
        eye = SparseMatrix.identity(bundle.field, dim_n)
        inv_ells = [0] * (n + 1)
        inv_ells[0] = -1
        t_inv = bundle.induced_on_homology(
            balancing_endomorphism(bundle, n, inv_ells), n
        )
        order = None
        power = eye
        for k in range(1, order_bound + 1):
            power = t_mat * power
            if power == eye:
                order = k
                break
        report.hh_dims.append(dim_n)
        report.twist.append(t_mat)
        report.reflection.append(r_mat)
        report.twist_order.append(order)
        report.twist_invertible.append(t_mat * t_inv == eye and t_inv * t_mat == eye)
        report.reflection_involutive.append(r_mat * r_mat == eye)
        report.commute.append(t_mat * r_mat == r_mat * t_mat)
    return report


class DistinguishVerdict:
    """Outcome of comparing two bundles by computable invariants."""

    def __init__(self):
        self.same_hh_dims = None
        self.same_cyclic_data = None
        self.same_rotation_ranks = None
        self.same_twist_charpolys = None
        self.reasons = []

    @property
    def distinguished(self):
        return bool(self.reasons)

    @property
    def verdict(self):
        return "DISTINGUISHED" if self.distinguished else "INDISTINGUISHABLE"

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "same_hh_dims": self.same_hh_dims,
            "same_cyclic_data": self.same_cyclic_data,
            "same_rotation_ranks": self.same_rotation_ranks,
            "same_twist_charpolys": self.same_twist_charpolys,
            "reasons": self.reasons,
        }


def compare_actions(
    bundle1: HochschildComplexBundle,
    bundle2: HochschildComplexBundle,
    through_degree: int | None = None,
) -> DistinguishVerdict:
    """Compare graded homology, cyclic data, and twist conjugation invariants.

    Rotation ranks (of powers of the signed rotation minus the identity)
    and characteristic polynomials of the twist on homology are base
    change invariant, so differing values certify inequivalence.
    """
    verdict = DistinguishVerdict()
    if through_degree is None:
        through_degree = min(bundle1.max_degree, bundle2.max_degree) - 1
    d1 = hh(bundle1, through_degree)
    d2 = hh(bundle2, through_degree)
    verdict.same_hh_dims = d1 == d2
    if not verdict.same_hh_dims:
        verdict.reasons.append(f"graded HH dims differ: {d1} vs {d2}")

    top = min(bundle1.max_degree, bundle2.max_degree)
    c1, c2 = bundle1.cyclic, bundle2.cyclic
    verdict.same_cyclic_data = c1.dims[: top + 1] == c2.dims[: top + 1] and all(
        c1.faces[n] == c2.faces[n]
        and c1.degeneracies[n] == c2.degeneracies[n]
        and c1.cyclic[n] == c2.cyclic[n]
        for n in range(top + 1)
    )

    def rotation_ranks(bundle):
        out = []
        for n in range(top + 1):
            t = bundle.signed_rotation(n)
            eye = SparseMatrix.identity(bundle.field, bundle.dims[n])
            power = eye
            ranks = []
            for _ in range(n + 1):
                power = t * power
                ranks.append(rank(power - eye))
            out.append(ranks)
        return out

    r1, r2 = rotation_ranks(bundle1), rotation_ranks(bundle2)
    verdict.same_rotation_ranks = r1 == r2
    if not verdict.same_rotation_ranks:
        verdict.reasons.append("rotation-power ranks differ")

    if (
        getattr(bundle1.source, "ribbon", None) is not None
        and getattr(bundle2.source, "ribbon", None) is not None
    ):
        p1 = [charpoly(dehn_twist_action(bundle1, n)) for n in range(through_degree + 1)]
        p2 = [charpoly(dehn_twist_action(bundle2, n)) for n in range(through_degree + 1)]
        verdict.same_twist_charpolys = p1 == p2
        if not verdict.same_twist_charpolys:
            bad = next(n for n in range(through_degree + 1) if p1[n] != p2[n])
            verdict.reasons.append(
                f"twist characteristic polynomials differ on HH_{bad}"
            )
    return verdict

"""Comodule algebras over a Hopf algebra, K-matrices and the braiding they induce.

A left H-comodule algebra is an algebra B with an algebra map
``delta: B -> H (x) B``.  The coaction is stored per basis element of B:
``delta(f_j) = sum coaction[j][(i, k)] e_i (x) f_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .hopf import (
    AlgebraData,
    HopfData,
    VerificationReport,
    _vec_add,
    antipode_inverse,
    apply_comult,
    check_algebra,
    leg_map,
    tensor_inverse,
    tensor_mult,
    tensor_unit,
)
from .linalg import (
    Matrix,
    SingularMatrix,
    TensorElement,
    embed_element,
    kron,
    rank,
    row_reduce,
    to_scalar,
)
from .parallel import ordered_map
from .quasitriangular import (
    ConstructionFailed,
    ModuleAction,
    RMatrix,
    act_tensor,
    braiding_c,
    braiding_c_inverse,
    tensor_modules,
)


class NotClosed(ValueError):
    def __init__(self, witness, msg="subspace is not a unital subalgebra"):
        super().__init__(f"{msg} (witness: {witness})")
        self.witness = witness


class NotCoideal(ValueError):
    def __init__(self, witness, msg="coaction leaves the subspace"):
        super().__init__(f"{msg} (witness: {witness})")
        self.witness = witness


class NotTriangular(ValueError):
    pass


class ComoduleAlgebraData:
    """An algebra B with a left coaction of the Hopf algebra H."""

    def __init__(self, H: HopfData, B: AlgebraData, coaction, name: str = "B",
                 inclusion: Matrix | None = None, subgroup: tuple[int, ...] | None = None):
        self.H = H
        self.B = B
        self.name = name
        table: dict[int, dict[tuple[int, int], Fraction]] = {}
        if isinstance(coaction, Mapping):
            items = [(j, i, k, c) for j, row in coaction.items() for (i, k), c in row.items()]
        else:
            items = coaction
        for j, i, k, c in items:
            j, i, k = int(j), int(i), int(k)
            if not (0 <= j < B.dim and 0 <= i < H.dim and 0 <= k < B.dim):
                raise IndexError(f"coaction index ({j},{i},{k}) out of range")
            c = to_scalar(c)
            if c:
                _vec_add(table.setdefault(j, {}), {(i, k): c})
        self.coaction = {j: r for j, r in table.items() if r}
        # columns: basis of B as elements of H, when B is a coideal subalgebra
        self.inclusion = inclusion
        # element indices of L when B = kL inside a group algebra
        self.subgroup = subgroup

    @property
    def dim(self) -> int:
        return self.B.dim

    def delta(self, j: int) -> dict[tuple[int, int], Fraction]:
        return self.coaction.get(j, {})

    def delta_element(self, b: Mapping[int, Fraction]) -> TensorElement:
        out: dict[tuple[int, int], Fraction] = {}
        for j, c in b.items():
            _vec_add(out, self.delta(j), c)
        return TensorElement((self.H.dim, self.B.dim), out)

    def coaction_entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [(j, i, k, c) for j in sorted(self.coaction) for (i, k), c in sorted(self.coaction[j].items())]

    def __repr__(self) -> str:
        return f"ComoduleAlgebraData({self.name}, dim={self.B.dim})"


def check_comodule_algebra(C: ComoduleAlgebraData) -> VerificationReport:
    H, B = C.H, C.B
    rep = VerificationReport("comodule algebra")
    algs = [H, B]
    dh, db = H.dim, B.dim

    unit_ok = C.delta_element(B.unit_vec()) == tensor_unit(algs)
    rep.add("coaction unital", None if unit_ok else ("1_B",))

    witness = None
    for a, b in product(range(db), repeat=2):
        lhs = C.delta_element(B.mul_basis(a, b))
        rhs = tensor_mult(algs, C.delta_element({a: Fraction(1)}), C.delta_element({b: Fraction(1)}))
        if lhs != rhs:
            witness = (B.labels[a], B.labels[b])
            break
    rep.add("coaction multiplicative", witness)

    witness = None
    images = [C.delta(j) for j in range(db)]
    for j in range(db):
        d = C.delta_element({j: Fraction(1)})
        lhs = apply_comult(H, d, 0)
        rhs = leg_map(d, 1, images, (dh, db))
        if lhs != rhs:
            witness = (B.labels[j],)
            break
    rep.add("coassociativity", witness)

    witness = None
    for j in range(db):
        out: dict[int, Fraction] = {}
        for (i, k), c in C.delta(j).items():
            _vec_add(out, {k: c * H.counit[i]})
        if out != {j: Fraction(1)}:
            witness = (B.labels[j],)
            break
    rep.add("counit", witness)
    return rep


def _express(columns: Matrix, vectors: Sequence[Sequence[Fraction]]):
    """Coordinates of each vector in the column basis, or None if outside the span."""
    n, k = columns.shape
    out = []
    for v in vectors:
        rows = {i: dict(columns.row(i)) for i in range(n)}
        for i, x in enumerate(v):
            if x:
                rows.setdefault(i, {})[k] = x
        reduced, pivots = row_reduce(Matrix(n, k + 1, rows))
        if k in pivots:
            out.append(None)
            continue
        coords = [Fraction(0)] * k
        for r, p in zip(reduced, pivots):
            coords[p] = r.get(k, Fraction(0))
        out.append(coords)
    return out


def coideal_subalgebra(H: HopfData, inclusion: Matrix, labels: Sequence[str] | None = None,
                       name: str = "B") -> ComoduleAlgebraData:
    """The subalgebra spanned by the columns of ``inclusion`` with delta = Delta restricted."""
    n, k = inclusion.shape
    if n != H.dim:
        raise ValueError("inclusion must have dim(H) rows")
    if rank(inclusion) != k:
        raise ValueError("inclusion must have full column rank")
    cols = [inclusion.column(j) for j in range(k)]
    if labels is None:
        labels = []
        for col in cols:
            nz = [i for i, c in enumerate(col) if c]
            labels.append(H.labels[nz[0]] if len(nz) == 1 and col[nz[0]] == 1 else
                          "+".join(f"{c}*{H.labels[i]}" for i, c in enumerate(col) if c))

    unit = _express(inclusion, [H.unit])[0]
    if unit is None:
        raise NotClosed("1", "subspace does not contain the unit")

    mult = []
    for a, b in product(range(k), repeat=2):
        pa = {i: c for i, c in enumerate(cols[a]) if c}
        pb = {i: c for i, c in enumerate(cols[b]) if c}
        coords = _express(inclusion, [H.to_list(H.mul(pa, pb))])[0]
        if coords is None:
            raise NotClosed(f"{labels[a]}*{labels[b]}")
        mult.extend((a, b, m, c) for m, c in enumerate(coords) if c)
    B = AlgebraData(k, mult, unit, labels)

    coaction = []
    for j in range(k):
        d = H.delta_element({i: c for i, c in enumerate(cols[j]) if c})
        for i in range(H.dim):
            second = [d.coeffs.get((i, m), Fraction(0)) for m in range(n)]
            if not any(second):
                continue
            coords = _express(inclusion, [second])[0]
            if coords is None:
                raise NotCoideal(labels[j])
            coaction.extend((j, i, m, c) for m, c in enumerate(coords) if c)
    return ComoduleAlgebraData(H, B, coaction, name=name, inclusion=inclusion)


def trivial_comodule(H: HopfData, B: AlgebraData, name: str = "B_triv") -> ComoduleAlgebraData:
    """B with the trivial coaction b -> 1 (x) b."""
    coaction = [(j, i, j, u) for j in range(B.dim) for i, u in enumerate(H.unit) if u]
    return ComoduleAlgebraData(H, B, coaction, name=name)


def restricted_counit(C: ComoduleAlgebraData) -> list[Fraction]:
    """The counit of H restricted to a coideal subalgebra."""
    if C.inclusion is None:
        raise ValueError("comodule algebra does not carry an inclusion into H")
    return [sum((C.H.counit[i] * c for i, c in enumerate(C.inclusion.column(j))), Fraction(0))
            for j in range(C.dim)]


# ---------------------------------------------------------------------------
# K-matrices


class KMatrix:
    """An invertible element of H (x) B with cached inverse (axioms not checked here)."""

    def __init__(self, C: ComoduleAlgebraData, element: TensorElement):
        if element.dims != (C.H.dim, C.B.dim):
            raise ValueError("K-matrix must live in H (x) B")
        self.C = C
        self.element = element
        self.inverse = tensor_inverse([C.H, C.B], element)
        self.verified = False

    def __repr__(self) -> str:
        return f"KMatrix({self.element!r})"


def k_axiom_sides(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: TensorElement):
    """Left and right sides of the three K-matrix axioms (the third per basis b)."""
    algs = [H, H, C.B]
    K23 = embed_element(K, algs, 2, 3)
    K13 = embed_element(K, algs, 1, 3)
    R21 = embed_element(R.element.swap(), algs, 1, 2)
    R12 = embed_element(R.element, algs, 1, 2)
    R21inv = embed_element(R.inverse.swap(), algs, 1, 2)
    first = (apply_comult(H, K, 0),
             tensor_mult(algs, tensor_mult(algs, tensor_mult(algs, K23, R21), K13), R21inv))
    images = [C.delta(j) for j in range(C.B.dim)]
    second = (leg_map(K, 1, images, (H.dim, C.B.dim)),
              tensor_mult(algs, tensor_mult(algs, R21, K13), R12))
    return first, second


def check_k_matrix(H: HopfData, R: RMatrix, C: ComoduleAlgebraData,
                   K: TensorElement | KMatrix) -> VerificationReport:
    """Check the three K-matrix axioms; on success ``report.value`` is a KMatrix.

    Raises SingularMatrix when K is not invertible in H (x) B.
    """
    Km = K if isinstance(K, KMatrix) else KMatrix(C, K)
    Ke = Km.element
    rep = VerificationReport("k-matrix")
    rep.add("invertible")
    (l1, r1), (l2, r2) = k_axiom_sides(H, R, C, Ke)
    rep.add("(Delta x Id)(K) = K23 R21 K13 R21^-1", None if l1 == r1 else ("mismatch",))
    rep.add("(Id x delta)(K) = R21 K13 R12", None if l2 == r2 else ("mismatch",))
    witness = None
    algs = [H, C.B]
    for b in range(C.B.dim):
        d = C.delta_element({b: Fraction(1)})
        if tensor_mult(algs, Ke, d) != tensor_mult(algs, d, Ke):
            witness = (C.B.labels[b],)
            break
    rep.add("K delta(b) = delta(b) K", witness)
    if rep.passed:
        Km.verified = True
        rep.value = Km
    return rep


def is_triangular_k(K: KMatrix) -> bool:
    return K.element == K.inverse


def braiding_e(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix,
               X: ModuleAction, M: ModuleAction) -> Matrix:
    """e_{X,M}(x (x) m) = sum K_i x (x) K^i m."""
    return act_tensor(K.element, [X, M])


def comodule_action(C: ComoduleAlgebraData, Y: ModuleAction, M: ModuleAction) -> ModuleAction:
    """Y |> M: the B-module Y (x) M with b acting through delta(b)."""
    mats = []
    for j in range(C.B.dim):
        m = Matrix.zeros(Y.dim * M.dim)
        for (i, k), c in C.delta(j).items():
            m = m + kron(Y.matrices[i], M.matrices[k]).scale(c)
        mats.append(m)
    return ModuleAction(Y.dim * M.dim, mats)


def braided_module_identities(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix,
                              X: ModuleAction, Y: ModuleAction, M: ModuleAction) -> dict[str, bool]:
    """Evaluate the braided-module identities as matrices on X(x)Y(x)M.

    Keys: ``brmod1``, ``brmod2``, ``reflection`` (the four-term identity mixing
    c and e) and ``module_map`` (e_{X,M} commutes with the B-action on X|>M).
    """
    I = Matrix.identity
    dx, dy, dm = X.dim, Y.dim, M.dim
    eXM = braiding_e(H, R, C, K, X, M)
    eYM = braiding_e(H, R, C, K, Y, M)
    cYX = kron(braiding_c(H, R, Y, X), I(dm))            # Y X M -> X Y M
    cXY = kron(braiding_c(H, R, X, Y), I(dm))            # X Y M -> Y X M
    cYX_inv = kron(braiding_c_inverse(H, R, Y, X), I(dm))  # X Y M -> Y X M
    id_x_eYM = kron(I(dx), eYM)
    id_y_eXM = kron(I(dy), eXM)

    XY = tensor_modules(H, X, Y)
    lhs1 = act_tensor(K.element, [XY, M])
    rhs1 = id_x_eYM @ cYX @ id_y_eXM @ cYX_inv
    YM = comodule_action(C, Y, M)
    lhs2 = act_tensor(K.element, [X, YM])
    rhs2 = cYX @ id_y_eXM @ cXY
    refl_l = cYX @ id_y_eXM @ cXY @ id_x_eYM
    refl_r = id_x_eYM @ cYX @ id_y_eXM @ cXY
    XM = comodule_action(C, X, M)
    natural = all(eXM @ XM.matrices[b] == XM.matrices[b] @ eXM for b in range(C.B.dim))
    return {"brmod1": lhs1 == rhs1, "brmod2": lhs2 == rhs2, "reflection": refl_l == refl_r,
            "module_map": natural}


def braided_module_verify(H, R, C, K, X, Y, M) -> bool:
    return all(braided_module_identities(H, R, C, K, X, Y, M).values())


# ---------------------------------------------------------------------------
# H-simplicity


class Simplicity(str, Enum):
    SIMPLE = "SIMPLE"
    NOT_SIMPLE = "NOT_SIMPLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class SimplicityCertificate:
    status: Simplicity
    operator_algebra_dim: int
    witness: list[list[Fraction]] | None = None

    def to_dict(self) -> dict:
        from .linalg import format_scalar

        d = {"status": self.status.value, "operator_algebra_dim": self.operator_algebra_dim}
        if self.witness is not None:
            d["witness"] = [[format_scalar(x) for x in v] for v in self.witness]
        return d


def costable_operators(C: ComoduleAlgebraData) -> list[Matrix]:
    """Left/right multiplications and the coaction components (f (x) Id) delta."""
    B, H = C.B, C.H
    ops = [B.left_mult(b) for b in range(B.dim)] + [B.right_mult(b) for b in range(B.dim)]
    for f in range(H.dim):
        rows: dict[int, dict[int, Fraction]] = {}
        for j in range(B.dim):
            for (i, k), c in C.delta(j).items():
                if i == f:
                    rows.setdefault(k, {})[j] = rows.get(k, {}).get(j, 0) + c
        ops.append(Matrix(B.dim, B.dim, rows))
    return [op for op in ops if not op.is_zero()]


def _span_basis(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    if not vectors:
        return []
    n = len(vectors[0])
    M = Matrix(len(vectors), n, {i: dict(enumerate(v)) for i, v in enumerate(vectors)})
    reduced, _ = row_reduce(M)
    return [[r.get(j, Fraction(0)) for j in range(n)] for r in reduced]


def _spin(v: list[Fraction], ops: list[Matrix]) -> list[list[Fraction]]:
    basis = _span_basis([v])
    frontier = list(basis)
    while frontier:
        images = [op.apply(w) for w in frontier for op in ops]
        new = _span_basis(basis + images)
        if len(new) == len(basis):
            break
        frontier = new
        basis = new
    return basis


def _flatten(m: Matrix) -> list[Fraction]:
    return [x for row in m.to_dense() for x in row]


def h_simplicity_certificate(C: ComoduleAlgebraData) -> SimplicityCertificate:
    """Certify absence (or presence) of nontrivial H-costable ideals.

    SIMPLE: the unital algebra generated by the operators is all of End(B),
    so no proper invariant subspace exists over any extension field.
    NOT_SIMPLE: spinning some basis vector gives a proper invariant subspace
    (returned as witness).  INCONCLUSIVE otherwise.
    """
    n = C.B.dim
    ops = costable_operators(C)
    # dimension of the generated unital operator algebra
    span = _span_basis([_flatten(Matrix.identity(n))] + [_flatten(op) for op in ops])
    while True:
        mats = [Matrix(n, n, {i: {j: v[i * n + j] for j in range(n)} for i in range(n)}) for v in span]
        grown = _span_basis(span + [_flatten(op @ m) for m in mats for op in ops])
        if len(grown) == len(span):
            break
        span = grown
    dim = len(span)
    if dim == n * n:
        return SimplicityCertificate(Simplicity.SIMPLE, dim)
    starts = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    spins = ordered_map(lambda v: _spin(v, ops), starts)
    for sub in spins:
        if 0 < len(sub) < n:
            return SimplicityCertificate(Simplicity.NOT_SIMPLE, dim, sub)
    return SimplicityCertificate(Simplicity.INCONCLUSIVE, dim)


# ---------------------------------------------------------------------------
# reflective algebra


def reflective_algebra_mult(H: HopfData, A: ComoduleAlgebraData) -> AlgebraData:
    """The algebra A (x) H* with ``xi a = a_[0] (xi <- a_[-1])``.

    ``<xi <- l, h> = <xi, l_(2) h S^-1(l_(1))>``; H* carries the convolution
    product.  Basis ``a_i (x) xi_k`` at flat index ``i*dim(H) + k``.  The
    result is checked for associativity; failure raises ConstructionFailed.
    """
    if A.H is not H and not A.H.same_structure(H):
        raise ValueError("comodule algebra lives over a different Hopf algebra")
    dh, da = H.dim, A.B.dim
    Sinv = antipode_inverse(H)

    # xi_k <- e_h  =  sum_y act[(k, h)][y] xi_y
    act: dict[tuple[int, int], dict[int, Fraction]] = {}
    for h in range(dh):
        for (h1, h2), c in H.delta(h).items():
            s = {m: Sinv[m, h1] for m in range(dh) if Sinv[m, h1]}
            for y in range(dh):
                val = H.mul(H.mul({h2: Fraction(1)}, {y: Fraction(1)}), s)
                for k, v in val.items():
                    _vec_add(act.setdefault((k, h), {}), {y: c * v})
    dual_mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    for z, row in H.comult.items():
        for (y, l), c in row.items():
            _vec_add(dual_mult.setdefault((y, l), {}), {z: c})

    def idx(i, k):
        return i * dh + k

    mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    B = A.B
    for i, k, j, l in product(range(da), range(dh), range(da), range(dh)):
        acc: dict[int, Fraction] = {}
        for (h, m), c in A.delta(j).items():
            left = B.mul_basis(i, m)
            if not left:
                continue
            for y, x in act.get((k, h), {}).items():
                for z, w in dual_mult.get((y, l), {}).items():
                    for a, v in left.items():
                        _vec_add(acc, {idx(a, z): c * x * w * v})
        if acc:
            mult[(idx(i, k), idx(j, l))] = acc
    unit = [Fraction(0)] * (da * dh)
    for i, u in enumerate(B.unit):
        for k, e in enumerate(H.counit):
            unit[idx(i, k)] = u * e
    labels = [f"{B.labels[i]}|{H.labels[k]}*" for i in range(da) for k in range(dh)]
    RA = AlgebraData(da * dh, mult, unit, labels)
    rep = check_algebra(RA)
    if not rep.passed:
        raise ConstructionFailed("reflective algebra", rep.failed())
    return RA


def reflective_augmentation(H: HopfData, A: ComoduleAlgebraData, eps_A: Sequence) -> list[Fraction]:
    """The covector ``a (x) xi -> eps_A(a) xi(1_H)`` on the reflective algebra."""
    eps_A = [to_scalar(c) for c in eps_A]
    return [eps_A[i] * H.unit[k] for i in range(A.B.dim) for k in range(H.dim)]


__all__ = [
    "ComoduleAlgebraData",
    "KMatrix",
    "NotClosed",
    "NotCoideal",
    "NotTriangular",
    "Simplicity",
    "SimplicityCertificate",
    "check_comodule_algebra",
    "coideal_subalgebra",
    "trivial_comodule",
    "restricted_counit",
    "check_k_matrix",
    "is_triangular_k",
    "braiding_e",
    "comodule_action",
    "braided_module_identities",
    "braided_module_verify",
    "h_simplicity_certificate",
    "reflective_algebra_mult",
    "reflective_augmentation",
]

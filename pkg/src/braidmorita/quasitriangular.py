"""R-matrices, the braiding they induce on modules, and the Drinfeld double."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .hopf import (
    AlgebraData,
    HopfData,
    VerificationReport,
    _vec_add,
    antipode_inverse,
    apply_comult,
    check_hopf,
    tensor_inverse,
    tensor_mult,
    tensor_mult_all,
    tensor_unit,
)
from .linalg import Matrix, SingularMatrix, TensorElement, embed_element, flip, kron, kron_all


class ConstructionFailed(RuntimeError):
    """A constructed structure did not pass its own axiom check."""

    def __init__(self, what: str, failed: Sequence[str]):
        super().__init__(f"{what} failed axioms: {', '.join(failed)}")
        self.failed = list(failed)


class RMatrix:
    """An invertible element of H (x) H with its inverse cached.

    Construction does not verify the R-matrix axioms; use
    :func:`check_r_matrix` for that.
    """

    def __init__(self, H: HopfData, element: TensorElement):
        if element.dims != (H.dim, H.dim):
            raise ValueError("R-matrix must live in H (x) H")
        self.H = H
        self.element = element
        self.inverse = tensor_inverse([H, H], element)  # SingularMatrix if not invertible
        self.verified = False

    @property
    def swapped(self) -> TensorElement:
        """R_21"""
        return self.element.swap()

    def __repr__(self) -> str:
        return f"RMatrix({self.element!r})"


@dataclass
class ModuleAction:
    """Action of an algebra on a space, one matrix per basis element."""

    dim: int
    matrices: list[Matrix]

    def act(self, a) -> Matrix:
        """Action matrix of an algebra element given as ``{basis index: coeff}``."""
        out = Matrix.zeros(self.dim)
        for i, c in a.items():
            out = out + self.matrices[i].scale(c)
        return out

    def verify(self, A: AlgebraData) -> bool:
        if len(self.matrices) != A.dim:
            return False
        if any(m.shape != (self.dim, self.dim) for m in self.matrices):
            return False
        if not self.act(A.unit_vec()).is_identity():
            return False
        for i, j in product(range(A.dim), repeat=2):
            if self.matrices[i] @ self.matrices[j] != self.act(A.mul_basis(i, j)):
                return False
        return True


def regular_module(A: AlgebraData) -> ModuleAction:
    return ModuleAction(A.dim, [A.left_mult(i) for i in range(A.dim)])


def trivial_module(H: HopfData) -> ModuleAction:
    """The one-dimensional module through the counit."""
    return ModuleAction(1, [Matrix(1, 1, {0: {0: c}}) for c in H.counit])


def tensor_modules(H: HopfData, X: ModuleAction, Y: ModuleAction) -> ModuleAction:
    """X (x) Y with h acting by Delta(h)."""
    mats = []
    for i in range(H.dim):
        m = Matrix.zeros(X.dim * Y.dim)
        for (j, k), c in H.delta(i).items():
            m = m + kron(X.matrices[j], Y.matrices[k]).scale(c)
        mats.append(m)
    return ModuleAction(X.dim * Y.dim, mats)


def act_tensor(u: TensorElement, modules: Sequence[ModuleAction]) -> Matrix:
    """Matrix of a tensor element acting leg-wise on M_1 (x) ... (x) M_m."""
    if len(u.dims) != len(modules):
        raise ValueError("one module per tensor leg required")
    total = 1
    for M in modules:
        total *= M.dim
    out = Matrix.zeros(total)
    for k, c in u.coeffs.items():
        out = out + kron_all(M.matrices[i] for M, i in zip(modules, k)).scale(c)
    return out


# ---------------------------------------------------------------------------


def check_r_matrix(H: HopfData, R: TensorElement | RMatrix) -> VerificationReport:
    """Check the three R-matrix axioms.  On success ``report.value`` is an RMatrix.

    Raises SingularMatrix when the candidate is not invertible.
    """
    Rm = R if isinstance(R, RMatrix) else RMatrix(H, R)
    Re = Rm.element
    rep = VerificationReport("r-matrix")
    rep.add("invertible")
    algs3 = [H, H, H]
    R12 = embed_element(Re, algs3, 1, 2)
    R13 = embed_element(Re, algs3, 1, 3)
    R23 = embed_element(Re, algs3, 2, 3)

    lhs = apply_comult(H, Re, 0)
    rep.add("(Delta x Id)(R) = R13 R23",
            None if lhs == tensor_mult(algs3, R13, R23) else ("mismatch",))
    lhs = apply_comult(H, Re, 1)
    rep.add("(Id x Delta)(R) = R13 R12",
            None if lhs == tensor_mult(algs3, R13, R12) else ("mismatch",))

    witness = None
    algs2 = [H, H]
    for h in range(H.dim):
        d = TensorElement((H.dim, H.dim), H.delta(h))
        if tensor_mult(algs2, Re, d) != tensor_mult(algs2, d.swap(), Re):
            witness = (H.labels[h],)
            break
    rep.add("R Delta(h) = Delta^op(h) R", witness)
    if rep.passed:
        Rm.verified = True
        rep.value = Rm
    else:
        rep.value = None
    return rep


def is_triangular_r(H: HopfData, R: RMatrix) -> bool:
    return R.element.swap() == R.inverse


def braiding_c(H: HopfData, R: RMatrix, X: ModuleAction, Y: ModuleAction) -> Matrix:
    """c_{X,Y}(x (x) y) = sum R^i y (x) R_i x, as a matrix X(x)Y -> Y(x)X."""
    return flip(X.dim, Y.dim) @ act_tensor(R.element, [X, Y])


def braiding_c_inverse(H: HopfData, R: RMatrix, X: ModuleAction, Y: ModuleAction) -> Matrix:
    """Inverse of c_{X,Y}, a map Y(x)X -> X(x)Y, built from R^{-1}."""
    return act_tensor(R.inverse, [X, Y]) @ flip(Y.dim, X.dim)


def _eye(n: int) -> Matrix:
    return Matrix.identity(n)


def yang_baxter_verify(H: HopfData, R: RMatrix, X: ModuleAction, Y: ModuleAction,
                       Z: ModuleAction) -> bool:
    """Both sides of the braid identity on X(x)Y(x)Z -> Z(x)Y(x)X."""
    dx, dy, dz = X.dim, Y.dim, Z.dim
    cXY = braiding_c(H, R, X, Y)
    cXZ = braiding_c(H, R, X, Z)
    cYZ = braiding_c(H, R, Y, Z)
    lhs = kron(cYZ, _eye(dx)) @ kron(_eye(dy), cXZ) @ kron(cXY, _eye(dz))
    rhs = kron(_eye(dz), cXY) @ kron(cXZ, _eye(dy)) @ kron(_eye(dx), cYZ)
    return lhs == rhs


def hexagon_verify(H: HopfData, R: RMatrix, X: ModuleAction, Y: ModuleAction,
                   Z: ModuleAction) -> dict[str, bool]:
    """The two hexagon identities for the braiding built from R."""
    dx, dy, dz = X.dim, Y.dim, Z.dim
    YZ = tensor_modules(H, Y, Z)
    XY = tensor_modules(H, X, Y)
    b1 = braiding_c(H, R, X, YZ) == (
        kron(_eye(dy), braiding_c(H, R, X, Z)) @ kron(braiding_c(H, R, X, Y), _eye(dz)))
    b2 = braiding_c(H, R, XY, Z) == (
        kron(braiding_c(H, R, X, Z), _eye(dy)) @ kron(_eye(dx), braiding_c(H, R, Y, Z)))
    return {"braid1": b1, "braid2": b2}


def braiding_is_module_map(H: HopfData, R: RMatrix, X: ModuleAction, Y: ModuleAction) -> bool:
    c = braiding_c(H, R, X, Y)
    XY = tensor_modules(H, X, Y)
    YX = tensor_modules(H, Y, X)
    return all(c @ XY.matrices[h] == YX.matrices[h] @ c for h in range(H.dim))


# ---------------------------------------------------------------------------
# Drinfeld double


def _iterated_comult(L: HopfData, a: int) -> dict[tuple[int, int, int], Fraction]:
    out: dict[tuple[int, int, int], Fraction] = {}
    for (a1, a23), c in L.delta(a).items():
        for (a2, a3), d in L.delta(a23).items():
            _vec_add(out, {(a1, a2, a3): c * d})
    return out


def drinfeld_double(L: HopfData):
    """The double D(L) = L*^cop (x) L and its canonical R-matrix.

    Basis ``f_p (x) e_a`` at flat index ``p*dim + a``.  Multiplication:
    ``(f (x) a)(f' (x) b) = f (a_1 -> f' <- S^-1(a_3)) (x) a_2 b`` with
    ``(a -> f' <- c)(y) = f'(c y a)``.  R = sum_d (eps (x) e_d) (x) (f_d (x) 1).
    Both outputs are certified; a failed axiom raises ConstructionFailed.
    """
    n = L.dim
    N = n * n
    Sinv = antipode_inverse(L)

    def idx(p, a):
        return p * n + a

    def s_inv(i):
        return {k: Sinv[k, i] for k in range(n) if Sinv[k, i]}

    # mult of dual basis functionals: f_p f_y = sum_k comult[k][(p, y)] f_k
    dual_mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    for k, row in L.comult.items():
        for (p, y), c in row.items():
            _vec_add(dual_mult.setdefault((p, y), {}), {k: c})

    mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(n):
        d3 = _iterated_comult(L, a)
        for q in range(n):
            # phi = a1 -> f_q <- S^-1(a3), expanded per (a2, weight)
            parts: dict[tuple[int, int], Fraction] = {}  # (y, a2) -> coeff
            for (a1, a2, a3), c in d3.items():
                left = s_inv(a3)
                for y in range(n):
                    prod_ = L.mul(L.mul(left, {y: Fraction(1)}), {a1: Fraction(1)})
                    v = prod_.get(q)
                    if v:
                        _vec_add(parts, {(y, a2): c * v})
            for p in range(n):
                for b in range(n):
                    acc: dict[int, Fraction] = {}
                    for (y, a2), c in parts.items():
                        fpart = dual_mult.get((p, y), {})
                        lpart = L.mul_basis(a2, b)
                        for k, x in fpart.items():
                            for m, z in lpart.items():
                                _vec_add(acc, {idx(k, m): c * x * z})
                    if acc:
                        mult[(idx(p, a), idx(q, b))] = acc

    unit = [Fraction(0)] * N
    for k in range(n):
        for m in range(n):
            unit[idx(k, m)] = L.counit[k] * L.unit[m]

    comult = []
    for (i, j), row in L.mult.items():
        for k, c in row.items():
            # Delta^cop on the dual: f_k -> sum mult[i][j][k] f_j (x) f_i
            for a in range(n):
                for (a1, a2), d in L.delta(a).items():
                    comult.append((idx(k, a), idx(j, a1), idx(i, a2), c * d))
    counit = [L.unit[k] * L.counit[a] for k in range(n) for a in range(n)]

    labels = [f"{L.labels[p]}*|{L.labels[a]}" for p in range(n) for a in range(n)]
    pre = HopfData(N, mult, unit, comult, counit, Matrix.identity(N), labels)

    # S_D(f (x) a) = (eps (x) S(a)) (S*^-1(f) (x) 1),  (S*^-1 f)(x) = f(S^-1 x)
    eps_vec = {k: L.counit[k] for k in range(n) if L.counit[k]}
    S_rows: dict[int, dict[int, Fraction]] = {}
    for p in range(n):
        # S*^-1(f_p) = sum_k f_p(S^-1 e_k) f_k
        sf = {k: Sinv[p, k] for k in range(n) if Sinv[p, k]}
        right = {idx(k, m): c * u for k, c in sf.items() for m, u in enumerate(L.unit) if u}
        for a in range(n):
            Sa = L.S({a: Fraction(1)})
            left = {idx(k, m): e * s for k, e in eps_vec.items() for m, s in Sa.items()}
            val = pre.mul(left, right)
            for i, c in val.items():
                S_rows.setdefault(i, {})[idx(p, a)] = c
    D = HopfData(N, mult, unit, comult, counit, Matrix(N, N, S_rows), labels)

    rep = check_hopf(D)
    if not rep.passed:
        raise ConstructionFailed("Drinfeld double", rep.failed())

    Rc: dict[tuple[int, int], Fraction] = {}
    for d in range(n):
        left = {idx(k, d): e for k, e in eps_vec.items()}
        right = {idx(d, m): u for m, u in enumerate(L.unit) if u}
        for i, x in left.items():
            for j, y in right.items():
                _vec_add(Rc, {(i, j): x * y})
    try:
        Rm = RMatrix(D, TensorElement((N, N), Rc))
    except SingularMatrix:
        raise ConstructionFailed("Drinfeld double R-matrix", ["invertible"]) from None
    rrep = check_r_matrix(D, Rm)
    if not rrep.passed:
        raise ConstructionFailed("Drinfeld double R-matrix", rrep.failed())
    return D, Rm


__all__ = [
    "RMatrix",
    "ModuleAction",
    "ConstructionFailed",
    "regular_module",
    "trivial_module",
    "tensor_modules",
    "act_tensor",
    "check_r_matrix",
    "is_triangular_r",
    "braiding_c",
    "braiding_c_inverse",
    "yang_baxter_verify",
    "hexagon_verify",
    "braiding_is_module_map",
    "drinfeld_double",
]

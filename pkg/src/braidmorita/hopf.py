"""Algebras, Hopf algebras and their axioms, all given by structure constants.

Conventions
-----------
* ``e_i e_j = sum_k mult[i, j][k] e_k``
* ``Delta(e_i) = sum comult[i][(j, k)] e_j (x) e_k``
* the antipode is a matrix acting on coefficient vectors:
  ``S(e_j) = sum_i S[i, j] e_i``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .linalg import (
    Matrix,
    SingularMatrix,
    TensorElement,
    invert_matrix,
    rank,
    to_scalar,
)

MultTable = dict[tuple[int, int], dict[int, Fraction]]
CoMultTable = dict[int, dict[tuple[int, int], Fraction]]


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"axiom": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class VerificationReport:
    subject: str
    results: list[AxiomResult] = field(default_factory=list)
    # verified object (RMatrix, KMatrix, ...) when every axiom passed
    value: object = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, witness=None, detail: str = "") -> AxiomResult:
        r = AxiomResult(name, witness is None, witness, detail)
        self.results.append(r)
        return r

    def failed(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "axioms": [r.to_dict() for r in self.results],
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            extra = f" witness={r.witness}" if r.witness is not None else ""
            lines.append(f"  [{mark}] {r.name}{extra}{' ' + r.detail if r.detail else ''}")
        return "\n".join(lines)


def _vec_add(acc: dict, vec: Mapping, c=1) -> None:
    for k, v in vec.items():
        w = acc.get(k, 0) + c * v
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)


class AlgebraData:
    """Finite-dimensional unital associative algebra by structure constants."""

    def __init__(self, dim: int, mult, unit: Sequence, labels: Sequence[str] | None = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise ValueError("need one label per basis element")
        if len(unit) != dim:
            raise ValueError("unit vector has wrong length")
        self.unit = [to_scalar(c) for c in unit]
        if isinstance(mult, Mapping):
            entries = [(i, j, k, c) for (i, j), row in mult.items() for k, c in row.items()]
        else:
            entries = mult
        table: MultTable = {}
        for i, j, k, c in entries:
            i, j, k = int(i), int(j), int(k)
            if not all(0 <= x < dim for x in (i, j, k)):
                raise IndexError(f"structure constant index ({i},{j},{k}) out of range")
            c = to_scalar(c)
            if c:
                _vec_add(table.setdefault((i, j), {}), {k: c})
        self.mult: MultTable = {ij: r for ij, r in table.items() if r}
        self._lmat: list[Matrix] | None = None

    # elements are coefficient dicts {basis index: coeff}

    def basis_vec(self, i: int) -> dict[int, Fraction]:
        return {i: Fraction(1)}

    def unit_vec(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.unit) if c}

    def mul_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self.mult.get((i, j), {})

    def mul(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, x in a.items():
            for j, y in b.items():
                row = self.mult.get((i, j))
                if row:
                    _vec_add(out, row, x * y)
        return out

    def to_list(self, a: Mapping[int, Fraction]) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        for i, c in a.items():
            v[i] = c
        return v

    def left_mult(self, i: int) -> Matrix:
        """Matrix of left multiplication by the basis element e_i."""
        if self._lmat is None:
            mats = []
            for a in range(self.dim):
                rows: dict[int, dict[int, Fraction]] = {}
                for j in range(self.dim):
                    for k, c in self.mult.get((a, j), {}).items():
                        rows.setdefault(k, {})[j] = c
                mats.append(Matrix(self.dim, self.dim, rows))
            self._lmat = mats
        return self._lmat[i]

    def right_mult(self, i: int) -> Matrix:
        rows: dict[int, dict[int, Fraction]] = {}
        for j in range(self.dim):
            for k, c in self.mult.get((j, i), {}).items():
                rows.setdefault(k, {})[j] = c
        return Matrix(self.dim, self.dim, rows)

    def left_mult_element(self, a: Mapping[int, Fraction]) -> Matrix:
        out = Matrix.zeros(self.dim)
        for i, c in a.items():
            out = out + self.left_mult(i).scale(c)
        return out

    def mult_entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [(i, j, k, c) for (i, j) in sorted(self.mult) for k, c in sorted(self.mult[(i, j)].items())]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}; have {self.labels}") from None

    def same_structure(self, other: "AlgebraData") -> bool:
        return self.dim == other.dim and self.mult == other.mult and self.unit == other.unit

    def __repr__(self) -> str:
        return f"AlgebraData(dim={self.dim}, basis={self.labels})"


class HopfData(AlgebraData):
    """Hopf algebra: an algebra plus comultiplication, counit and antipode."""

    def __init__(self, dim, mult, unit, comult, counit, antipode, labels=None):
        super().__init__(dim, mult, unit, labels)
        table: CoMultTable = {}
        if isinstance(comult, Mapping):
            items = [(i, j, k, c) for i, row in comult.items() for (j, k), c in row.items()]
        else:
            items = comult
        for i, j, k, c in items:
            i, j, k = int(i), int(j), int(k)
            if not all(0 <= x < dim for x in (i, j, k)):
                raise IndexError(f"comultiplication index ({i},{j},{k}) out of range")
            c = to_scalar(c)
            if c:
                _vec_add(table.setdefault(i, {}), {(j, k): c})
        self.comult: CoMultTable = {i: r for i, r in table.items() if r}
        if len(counit) != dim:
            raise ValueError("counit has wrong length")
        self.counit = [to_scalar(c) for c in counit]
        if isinstance(antipode, Matrix):
            S = antipode
        else:
            rows: dict[int, dict[int, object]] = {}
            for i, j, c in antipode:
                rows.setdefault(int(i), {})[int(j)] = c
            S = Matrix(dim, dim, rows)
        if S.shape != (dim, dim):
            raise ValueError("antipode has wrong shape")
        self.antipode = S
        # optional provenance: set for group algebras so classifiers can use the group
        self.group = None

    def delta(self, i: int) -> dict[tuple[int, int], Fraction]:
        return self.comult.get(i, {})

    def delta_element(self, a: Mapping[int, Fraction]) -> TensorElement:
        out: dict[tuple[int, int], Fraction] = {}
        for i, c in a.items():
            _vec_add(out, self.delta(i), c)
        return TensorElement((self.dim, self.dim), out)

    def eps(self, a: Mapping[int, Fraction]) -> Fraction:
        return sum((self.counit[i] * c for i, c in a.items()), Fraction(0))

    def S(self, a: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for j, c in a.items():
            for i in range(self.dim):
                v = self.antipode[i, j]
                if v:
                    _vec_add(out, {i: v * c})
        return out

    def comult_entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [(i, j, k, c) for i in sorted(self.comult) for (j, k), c in sorted(self.comult[i].items())]

    def same_structure(self, other: "HopfData") -> bool:
        return (
            super().same_structure(other)
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __repr__(self) -> str:
        return f"HopfData(dim={self.dim}, basis={self.labels})"


# ---------------------------------------------------------------------------
# tensor-product algebra helpers


def tensor_mult(algebras: Sequence[AlgebraData], u: TensorElement, v: TensorElement) -> TensorElement:
    """Product ``u v`` in A_1 (x) ... (x) A_m with factorwise multiplication."""
    dims = tuple(a.dim for a in algebras)
    if u.dims != dims or v.dims != dims:
        raise ValueError(f"tensor shapes {u.dims}, {v.dims} do not match algebras {dims}")
    out: dict[tuple[int, ...], Fraction] = {}
    tables = [a.mult for a in algebras]
    for ku, cu in u.coeffs.items():
        for kv, cv in v.coeffs.items():
            rows = []
            for t, i, j in zip(tables, ku, kv):
                r = t.get((i, j))
                if not r:
                    break
                rows.append(r)
            else:
                c0 = cu * cv
                for combo in product(*(r.items() for r in rows)):
                    c = c0
                    for _, x in combo:
                        c *= x
                    key = tuple(k for k, _ in combo)
                    w = out.get(key, 0) + c
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
    return TensorElement._raw(dims, out)


def tensor_mult_all(algebras: Sequence[AlgebraData], *elements: TensorElement) -> TensorElement:
    result = elements[0]
    for e in elements[1:]:
        result = tensor_mult(algebras, result, e)
    return result


def tensor_unit(algebras: Sequence[AlgebraData]) -> TensorElement:
    return TensorElement.pure([a.unit for a in algebras])


def leg_map(u: TensorElement, leg: int, images: Sequence[Mapping[tuple[int, ...], Fraction]],
            out_dims: Sequence[int]) -> TensorElement:
    """Apply a linear map to one leg (0-based). The leg may expand into several.

    ``images[i]`` maps basis index i of that leg to ``{out multi-index: coeff}``.
    """
    out_dims = tuple(out_dims)
    dims = u.dims[:leg] + out_dims + u.dims[leg + 1:]
    out: dict[tuple[int, ...], Fraction] = {}
    for k, c in u.coeffs.items():
        for sub, x in images[k[leg]].items():
            key = k[:leg] + tuple(sub) + k[leg + 1:]
            w = out.get(key, 0) + c * x
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return TensorElement._raw(dims, out)


def comult_images(H: HopfData) -> list[dict[tuple[int, int], Fraction]]:
    return [H.delta(i) for i in range(H.dim)]


def apply_comult(H: HopfData, u: TensorElement, leg: int) -> TensorElement:
    return leg_map(u, leg, comult_images(H), (H.dim, H.dim))


def tensor_inverse(algebras: Sequence[AlgebraData], u: TensorElement) -> TensorElement:
    """Two-sided inverse in the tensor-product algebra, via left multiplication."""
    L = left_mult_tensor(algebras, u)
    Linv = invert_matrix(L)  # raises SingularMatrix
    unit = tensor_unit(algebras)
    return TensorElement.from_vector(u.dims, Linv.apply(unit.to_vector()))


def left_mult_tensor(algebras: Sequence[AlgebraData], u: TensorElement) -> Matrix:
    """Matrix of left multiplication by u on A_1 (x) ... (x) A_m."""
    from .linalg import kron_all

    total = u.size
    out = Matrix.zeros(total)
    for k, c in u.coeffs.items():
        out = out + kron_all(a.left_mult(i) for a, i in zip(algebras, k)).scale(c)
    return out


def is_invertible_tensor(algebras: Sequence[AlgebraData], u: TensorElement) -> bool:
    L = left_mult_tensor(algebras, u)
    return rank(L) == L.nrows


# ---------------------------------------------------------------------------
# verifiers


def check_algebra(A: AlgebraData) -> VerificationReport:
    rep = VerificationReport("algebra")
    n = A.dim
    witness = None
    for i, j, k in product(range(n), repeat=3):
        left = A.mul(A.mul_basis(i, j), {k: Fraction(1)})
        right = A.mul({i: Fraction(1)}, A.mul_basis(j, k))
        if left != right:
            witness = (i, j, k)
            break
    rep.add("associativity", witness,
            "" if witness is None else f"({A.labels[i]}{A.labels[j]}){A.labels[k]} != "
                                       f"{A.labels[i]}({A.labels[j]}{A.labels[k]})")
    one = A.unit_vec()
    witness = None
    for i in range(n):
        e = {i: Fraction(1)}
        if A.mul(one, e) != e or A.mul(e, one) != e:
            witness = (i,)
            break
    rep.add("unit", witness)
    return rep


def check_hopf(H: HopfData) -> VerificationReport:
    rep = VerificationReport("hopf")
    alg = check_algebra(H)
    rep.results.extend(alg.results)
    n = H.dim
    algs = [H, H]

    witness = None
    for i in range(n):
        d = TensorElement((n, n), H.delta(i))
        if apply_comult(H, d, 0) != apply_comult(H, d, 1):
            witness = (i,)
            break
    rep.add("coassociativity", witness)

    witness = None
    for i in range(n):
        d = H.delta(i)
        left: dict[int, Fraction] = {}
        right: dict[int, Fraction] = {}
        for (j, k), c in d.items():
            _vec_add(left, {k: c * H.counit[j]})
            _vec_add(right, {j: c * H.counit[k]})
        e = {i: Fraction(1)}
        if left != e or right != e:
            witness = (i,)
            break
    rep.add("counit", witness)

    witness = None
    unit2 = tensor_unit(algs)
    if H.delta_element(H.unit_vec()) != unit2:
        witness = ("unit",)
    else:
        for i, j in product(range(n), repeat=2):
            lhs = H.delta_element(H.mul_basis(i, j))
            rhs = tensor_mult(algs, TensorElement((n, n), H.delta(i)), TensorElement((n, n), H.delta(j)))
            if lhs != rhs:
                witness = (i, j)
                break
    rep.add("comultiplication multiplicative", witness)

    witness = None
    if H.eps(H.unit_vec()) != 1:
        witness = ("unit",)
    else:
        for i, j in product(range(n), repeat=2):
            if H.eps(H.mul_basis(i, j)) != H.counit[i] * H.counit[j]:
                witness = (i, j)
                break
    rep.add("counit multiplicative", witness)

    witness = None
    one = H.unit_vec()
    for i in range(n):
        target = {k: H.counit[i] * c for k, c in one.items() if H.counit[i] * c}
        left: dict[int, Fraction] = {}
        right: dict[int, Fraction] = {}
        for (j, k), c in H.delta(i).items():
            _vec_add(left, H.mul(H.S({j: Fraction(1)}), {k: Fraction(1)}), c)
            _vec_add(right, H.mul({j: Fraction(1)}, H.S({k: Fraction(1)})), c)
        if left != target or right != target:
            witness = (i,)
            break
    rep.add("antipode", witness)
    return rep


def check_augmentation(A: AlgebraData, eps: Sequence) -> bool:
    """True iff ``eps`` (a covector) is a unital algebra map ``A -> k``."""
    eps = [to_scalar(c) for c in eps]
    if len(eps) != A.dim:
        raise ValueError("augmentation covector has wrong length")

    def ev(a):
        return sum((eps[i] * c for i, c in a.items()), Fraction(0))

    if ev(A.unit_vec()) != 1:
        return False
    return all(ev(A.mul_basis(i, j)) == eps[i] * eps[j] for i, j in product(range(A.dim), repeat=2))


def antipode_inverse(H: HopfData) -> Matrix:
    return invert_matrix(H.antipode)


def regular_action(A: AlgebraData) -> list[Matrix]:
    """Left-multiplication matrices ``L_{e_i}``: the regular module."""
    return [A.left_mult(i) for i in range(A.dim)]


def trace_form(A: AlgebraData) -> Matrix:
    n = A.dim
    traces = [A.left_mult(k).trace() for k in range(n)]
    rows = {}
    for i, j in product(range(n), repeat=2):
        t = sum((c * traces[k] for k, c in A.mul_basis(i, j).items()), Fraction(0))
        if t:
            rows.setdefault(i, {})[j] = t
    return Matrix(n, n, rows)


@dataclass
class SemisimplicityResult:
    semisimple: bool
    gram: Matrix


def semisimple_via_trace_form(A: AlgebraData) -> SemisimplicityResult:
    """Trace-form criterion, valid in characteristic zero.

    ``gram[i][j] = tr(L_{e_i} L_{e_j})``; the algebra is semisimple iff the
    form is nondegenerate.
    """
    gram = trace_form(A)
    return SemisimplicityResult(rank(gram) == A.dim, gram)


def dual_hopf(H: HopfData) -> HopfData:
    """Dual Hopf algebra on the dual basis: every structure map is transposed."""
    n = H.dim
    mult = [(a, b, k, c) for k, row in H.comult.items() for (a, b), c in row.items()]
    comult = [(k, i, j, c) for (i, j), row in H.mult.items() for k, c in row.items()]
    labels = [lab[:-1] if lab.endswith("*") else lab + "*" for lab in H.labels]
    D = HopfData(n, mult, list(H.counit), comult, list(H.unit), H.antipode.T, labels)
    return D


__all__ = [
    "AlgebraData",
    "HopfData",
    "VerificationReport",
    "AxiomResult",
    "SingularMatrix",
    "check_algebra",
    "check_hopf",
    "check_augmentation",
    "antipode_inverse",
    "regular_action",
    "semisimple_via_trace_form",
    "dual_hopf",
    "tensor_mult",
    "tensor_unit",
    "tensor_inverse",
    "leg_map",
    "apply_comult",
]

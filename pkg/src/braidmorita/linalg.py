"""Exact rational linear algebra on sparse matrices and tensor elements.

Every scalar is a :class:`fractions.Fraction`.  Matrices are stored as
dict-of-rows with zero entries dropped; semantics are those of a dense matrix.

Tensor products use one flat-index convention everywhere: the basis vector
``e_{i_1} (x) ... (x) e_{i_m}`` sits at ``i_1*(d_2*...*d_m) + ... + i_m``
(leftmost factor most significant), which is exactly what :func:`kron` does.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Mapping, Sequence

Scalar = Fraction


class SingularMatrix(ArithmeticError):
    """Raised when an inverse is requested for a non-invertible matrix."""


def to_scalar(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point scalars are not accepted; use 'p/q' strings")
    return Fraction(x)


def format_scalar(x) -> str:
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _clean_rows(rows: Mapping[int, Mapping[int, object]]) -> dict[int, dict[int, Fraction]]:
    out = {}
    for i, row in rows.items():
        r = {}
        for j, v in row.items():
            v = to_scalar(v)
            if v:
                r[j] = v
        if r:
            out[i] = r
    return out


class Matrix:
    """Sparse exact matrix. Treat instances as immutable."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows=None, *, _trusted=False):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative shape")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self._rows = {}
        elif _trusted:
            self._rows = rows
        else:
            self._rows = _clean_rows(rows)
            for i, row in self._rows.items():
                if not 0 <= i < nrows or any(not 0 <= j < ncols for j in row):
                    raise IndexError(f"entry outside {nrows}x{ncols}")

    # construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)}, _trusted=True)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> "Matrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(nrows, ncols, {i: dict(enumerate(r)) for i, r in enumerate(data)})

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], nrows: int | None = None) -> "Matrix":
        ncols = len(columns)
        if nrows is None:
            nrows = len(columns[0]) if ncols else 0
        rows: dict[int, dict[int, object]] = {}
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                if v:
                    rows.setdefault(i, {})[j] = v
        return cls(nrows, ncols, rows)

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "Matrix":
        """Matrix sending basis vector e_j to e_{perm[j]}."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        return cls(n, n, {perm[j]: {j: Fraction(1)} for j in range(n)}, _trusted=True)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self._rows.get(i, {}).get(j, Fraction(0))

    def row(self, i: int) -> dict[int, Fraction]:
        if not 0 <= i < self.nrows:
            raise IndexError(i)
        return dict(self._rows.get(i, {}))

    def items(self):
        """Yield ``(i, j, value)`` for the nonzero entries in row-major order."""
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in self._rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def column(self, j: int) -> list[Fraction]:
        return [self._rows.get(i, {}).get(j, Fraction(0)) for i in range(self.nrows)]

    # arithmetic -------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        orows = other._rows
        out = {}
        for i, row in self._rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return Matrix(self.nrows, other.ncols, out, _trusted=True)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {i: dict(r) for i, r in self._rows.items()}
        for i, row in other._rows.items():
            acc = out.setdefault(i, {})
            for j, v in row.items():
                w = acc.get(j, 0) + sign * v
                if w:
                    acc[j] = w
                else:
                    acc.pop(j, None)
            if not acc:
                del out[i]
        return Matrix(self.nrows, self.ncols, out, _trusted=True)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = to_scalar(c)
        if not c:
            return Matrix(self.nrows, self.ncols)
        rows = {i: {j: c * v for j, v in r.items()} for i, r in self._rows.items()}
        return Matrix(self.nrows, self.ncols, rows, _trusted=True)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def __str__(self) -> str:
        dense = [[format_scalar(v) for v in r] for r in self.to_dense()]
        width = max((len(s) for r in dense for s in r), default=1)
        return "\n".join(" ".join(s.rjust(width) for s in r) for r in dense)

    @property
    def T(self) -> "Matrix":
        out: dict[int, dict[int, Fraction]] = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                out.setdefault(j, {})[i] = v
        return Matrix(self.ncols, self.nrows, out, _trusted=True)

    def transpose(self) -> "Matrix":
        return self.T

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((r.get(i, Fraction(0)) for i, r in self._rows.items()), Fraction(0))

    def apply(self, vec: Sequence[object]) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        v = [to_scalar(x) for x in vec]
        out = [Fraction(0)] * self.nrows
        for i, row in self._rows.items():
            out[i] = sum((a * v[j] for j, a in row.items()), Fraction(0))
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.nrows)

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return invert_matrix(self) ** (-k)
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product with the leftmost-significant index convention."""
    rows = {}
    bn, bm = B.nrows, B.ncols
    brows = B._rows
    for i, arow in A._rows.items():
        for bi, brow in brows.items():
            r = {}
            for j, a in arow.items():
                off = j * bm
                for bj, b in brow.items():
                    r[off + bj] = a * b
            rows[i * bn + bi] = r
    return Matrix(A.nrows * bn, A.ncols * bm, rows, _trusted=True)


def kron_all(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        return Matrix.identity(1)
    return reduce(kron, mats)


def flip(dX: int, dY: int) -> Matrix:
    """Swap X (x) Y -> Y (x) X, i.e. e_i (x) e_j -> e_j (x) e_i."""
    if dX < 1 or dY < 1:
        raise ValueError("dimensions must be positive")
    perm = [j * dX + i for i in range(dX) for j in range(dY)]
    return Matrix.permutation(perm)


def row_reduce(M: Matrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    rows = [dict(r) for _, r in sorted(M._rows.items())]
    pivots: list[int] = []
    reduced: list[dict[int, Fraction]] = []
    # eliminate column by column, choosing the sparsest available pivot row
    pending = rows
    for col in range(M.ncols):
        cands = [k for k, r in enumerate(pending) if col in r]
        if not cands:
            continue
        k = min(cands, key=lambda k: len(pending[k]))
        prow = pending.pop(k)
        inv = 1 / prow[col]
        prow = {j: v * inv for j, v in prow.items()}
        for r in pending:
            c = r.get(col)
            if c:
                for j, v in prow.items():
                    w = r.get(j, 0) - c * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        for r in reduced:
            c = r.get(col)
            if c:
                for j, v in prow.items():
                    w = r.get(j, 0) - c * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        reduced.append(prow)
        pivots.append(col)
        pending = [r for r in pending if r]
    return reduced, pivots


def rank(M: Matrix) -> int:
    return len(row_reduce(M)[1])


def nullspace(M: Matrix) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, one vector per free column, in column order."""
    reduced, pivots = row_reduce(M)
    pivset = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * M.ncols
        v[free] = Fraction(1)
        for r, p in zip(reduced, pivots):
            c = r.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def column_space_basis(M: Matrix) -> list[int]:
    """Indices of a maximal linearly independent set of columns."""
    return row_reduce(M)[1]


def invert_matrix(M: Matrix) -> Matrix:
    if M.nrows != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = M.nrows
    aug_rows = {}
    for i in range(n):
        r = dict(M._rows.get(i, {}))
        r[n + i] = Fraction(1)
        aug_rows[i] = r
    reduced, pivots = row_reduce(Matrix(n, 2 * n, aug_rows, _trusted=True))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix(f"{n}x{n} matrix is singular")
    out = {}
    for i in range(n):
        r = {j - n: v for j, v in reduced[i].items() if j >= n}
        if r:
            out[i] = r
    return Matrix(n, n, out, _trusted=True)


def determinant(M: Matrix) -> Fraction:
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    rows = [dict(M._rows.get(i, {})) for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((k for k in range(col, n) if col in rows[k]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        prow = rows[col]
        p = prow[col]
        det *= p
        for k in range(col + 1, n):
            c = rows[k].get(col)
            if c:
                f = c / p
                r = rows[k]
                for j, v in prow.items():
                    w = r.get(j, 0) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
    return det


# ---------------------------------------------------------------------------
# tensor elements


def flat_index(dims: Sequence[int], idx: Sequence[int]) -> int:
    f = 0
    for d, i in zip(dims, idx):
        f = f * d + i
    return f


def multi_index(dims: Sequence[int], flat: int) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


class TensorElement:
    """Element of a tensor product of spaces of dimensions ``dims``.

    Coefficients are keyed by multi-index tuples; zero coefficients are not
    stored.  Instances are immutable by convention.
    """

    __slots__ = ("dims", "coeffs")

    def __init__(self, dims: Sequence[int], coeffs: Mapping[tuple[int, ...], object] | None = None):
        self.dims = tuple(dims)
        if any(d < 1 for d in self.dims):
            raise ValueError("tensor factor dimensions must be positive")
        clean = {}
        for k, v in (coeffs or {}).items():
            k = tuple(k)
            if len(k) != len(self.dims) or any(not 0 <= i < d for i, d in zip(k, self.dims)):
                raise IndexError(f"index {k} outside {self.dims}")
            v = to_scalar(v)
            if v:
                clean[k] = clean.get(k, 0) + v
                if not clean[k]:
                    del clean[k]
        self.coeffs = clean

    @classmethod
    def _raw(cls, dims, coeffs) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.dims = tuple(dims)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_vector(cls, dims: Sequence[int], vec: Sequence[object]) -> "TensorElement":
        dims = tuple(dims)
        total = 1
        for d in dims:
            total *= d
        if len(vec) != total:
            raise ValueError(f"vector of length {len(vec)} does not fit {dims}")
        return cls(dims, {multi_index(dims, f): v for f, v in enumerate(vec) if v})

    @classmethod
    def basis(cls, dims: Sequence[int], idx: Sequence[int], coeff=1) -> "TensorElement":
        return cls(dims, {tuple(idx): coeff})

    @classmethod
    def pure(cls, vectors: Sequence[Sequence[object]]) -> "TensorElement":
        """Elementary tensor v_1 (x) ... (x) v_m of coefficient vectors."""
        dims = [len(v) for v in vectors]
        coeffs = {}
        supports = [[(i, to_scalar(c)) for i, c in enumerate(v) if c] for v in vectors]
        for combo in product(*supports):
            c = Fraction(1)
            for _, x in combo:
                c *= x
            coeffs[tuple(i for i, _ in combo)] = c
        return cls._raw(dims, coeffs)

    @property
    def size(self) -> int:
        n = 1
        for d in self.dims:
            n *= d
        return n

    def to_vector(self) -> list[Fraction]:
        v = [Fraction(0)] * self.size
        for k, c in self.coeffs.items():
            v[flat_index(self.dims, k)] = c
        return v

    def terms(self):
        """Nonzero ``(multi_index, coeff)`` pairs in lexicographic order."""
        return sorted(self.coeffs.items())

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TensorElement._raw(self.dims, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def __neg__(self) -> "TensorElement":
        return self.scale(-1)

    def scale(self, c) -> "TensorElement":
        c = to_scalar(c)
        if not c:
            return TensorElement._raw(self.dims, {})
        return TensorElement._raw(self.dims, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, c) -> "TensorElement":
        if isinstance(c, TensorElement):
            raise TypeError("tensor elements multiply through an algebra; see hopf.tensor_mult")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.dims == other.dims and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dims, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{format_scalar(c)}*e{list(k)}" for k, c in self.terms()) or "0"
        return f"TensorElement({self.dims}: {body})"

    def _check(self, other: "TensorElement") -> None:
        if self.dims != other.dims:
            raise ValueError(f"tensor shapes differ: {self.dims} vs {other.dims}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def permute_legs(self, order: Sequence[int]) -> "TensorElement":
        """New element whose leg k is old leg ``order[k]`` (0-based)."""
        if sorted(order) != list(range(len(self.dims))):
            raise ValueError("not a permutation of legs")
        dims = tuple(self.dims[o] for o in order)
        return TensorElement._raw(
            dims, {tuple(k[o] for o in order): v for k, v in self.coeffs.items()})

    def swap(self) -> "TensorElement":
        """Two-leg flip u'(x)u'' -> u''(x)u'."""
        if len(self.dims) != 2:
            raise ValueError("swap needs a two-leg tensor")
        return self.permute_legs((1, 0))

    def tensor(self, other: "TensorElement") -> "TensorElement":
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out[k1 + k2] = v1 * v2
        return TensorElement._raw(self.dims + other.dims, out)


def embed_element(u: TensorElement, algebras: Sequence, p: int, q: int) -> TensorElement:
    """Place a two-leg element into legs ``p < q`` (1-based) of a longer tensor.

    ``algebras`` are objects exposing ``dim`` and ``unit`` (coefficient
    vector); the unit of each remaining factor fills the other legs.  This is
    the usual leg notation, e.g. ``R_13`` or ``K_23``.  To get ``R_21`` swap
    first: ``embed_element(R.swap(), algs, 1, 2)``.
    """
    m = len(algebras)
    if not (1 <= p < q <= m):
        raise IndexError(f"positions ({p}, {q}) invalid for {m} legs")
    if len(u.dims) != 2:
        raise ValueError("embed_element expects a two-leg element")
    dims = tuple(a.dim for a in algebras)
    if (dims[p - 1], dims[q - 1]) != u.dims:
        raise ValueError(f"element of shape {u.dims} does not match legs {p},{q} of {dims}")
    others = [k for k in range(m) if k not in (p - 1, q - 1)]
    unit_supports = [
        [(i, to_scalar(c)) for i, c in enumerate(algebras[k].unit) if c] for k in others
    ]
    out: dict[tuple[int, ...], Fraction] = {}
    for combo in product(*unit_supports):
        cu = Fraction(1)
        for _, c in combo:
            cu *= c
        for (a, b), v in u.coeffs.items():
            idx = [0] * m
            idx[p - 1] = a
            idx[q - 1] = b
            for k, (i, _) in zip(others, combo):
                idx[k] = i
            key = tuple(idx)
            w = out.get(key, 0) + v * cu
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return TensorElement._raw(dims, out)


def trace_of_product(A: Matrix, B: Matrix) -> Fraction:
    """trace(A @ B) without forming the product."""
    if A.ncols != B.nrows or A.nrows != B.ncols:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    total = Fraction(0)
    brows = B._rows
    for i, row in A._rows.items():
        for j, v in row.items():
            x = brows.get(j, {}).get(i)
            if x:
                total += v * x
    return total

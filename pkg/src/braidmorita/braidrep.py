"""Braid groups of Coxeter types A, BC and D and their representations on H^n (x) B.

Generators are named ``s1 .. s{n-1}`` and ``t``.  A word is a tuple of
``(name, exponent)`` pairs with exponent +1 or -1, read left to right as a
matrix product (so the rightmost letter acts first on vectors).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .comodule import ComoduleAlgebraData, KMatrix, NotTriangular, braiding_e, is_triangular_k
from .hopf import HopfData
from .linalg import Matrix, format_scalar, invert_matrix, kron, kron_all, trace_of_product
from .parallel import ordered_map
from .quasitriangular import ModuleAction, RMatrix, act_tensor, braiding_c, braiding_c_inverse, regular_module


class UnsupportedRank(ValueError):
    pass


class BadWord(ValueError):
    pass


Letter = tuple[str, int]


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"s1 t s2^-1"``; also accepts ``σ1`` and ``sigma1``.  Empty string or ``1`` is the identity."""
        text = text.strip()
        if text in ("", "1", "e", "ε"):
            return cls(())
        letters = []
        for tok in text.replace("*", " ").split():
            m = re.fullmatch(r"(?:s|σ|sigma)_?(\d+)(?:\^(-?1))?|t(?:\^(-?1))?", tok)
            if not m:
                raise BadWord(f"cannot parse braid letter {tok!r}")
            if tok.startswith("t"):
                letters.append(("t", int(m.group(3) or 1)))
            else:
                letters.append((f"s{int(m.group(1))}", int(m.group(2) or 1)))
        return cls(tuple(letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def _w(*names: str) -> BraidWord:
    return BraidWord(tuple((g, 1) for g in names))


@dataclass
class Presentation:
    type: str
    n: int
    generators: list[str]
    relations: list[tuple[BraidWord, BraidWord]]

    def check_word(self, w: BraidWord) -> None:
        for g, e in w.letters:
            if g not in self.generators or e not in (1, -1):
                raise BadWord(f"letter {g}^{e} not in presentation {self.type}_{self.n}")

    def relation_strings(self) -> list[str]:
        return [f"{a} = {b}" for a, b in self.relations]


def presentation(type_: str, n: int) -> Presentation:
    type_ = type_.upper()
    if type_ not in ("A", "BC", "D"):
        raise ValueError(f"unknown Coxeter type {type_!r}; use A, BC or D")
    if n < 2:
        raise UnsupportedRank(f"braid group presentations need n >= 2, got {n}")
    s = [f"s{i}" for i in range(1, n)]
    rels: list[tuple[BraidWord, BraidWord]] = []
    for i in range(1, n - 1):
        a, b = f"s{i}", f"s{i + 1}"
        rels.append((_w(a, b, a), _w(b, a, b)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((_w(f"s{i}", f"s{j}"), _w(f"s{j}", f"s{i}")))
    gens = list(s)
    if type_ == "BC":
        gens.append("t")
        for i in range(1, n - 1):
            rels.append((_w(f"s{i}", "t"), _w("t", f"s{i}")))
        last = f"s{n - 1}"
        rels.append((_w(last, "t", last, "t"), _w("t", last, "t", last)))
    elif type_ == "D":
        gens.append("t")
        # indices 1..n-3 and n-1; sigma_0 does not exist when n = 2
        for i in list(range(1, n - 2)) + [n - 1]:
            rels.append((_w(f"s{i}", "t"), _w("t", f"s{i}")))
        if n >= 3:
            m = f"s{n - 2}"
            rels.append((_w(m, "t", m), _w("t", m, "t")))
    return Presentation(type_, n, gens, rels)


@dataclass
class RelationCheck:
    ok: bool
    failing: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class BraidRep:
    pres: Presentation
    dim: int
    gens: dict[str, Matrix]
    inverses: dict[str, Matrix] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    def generator(self, name: str, exp: int) -> Matrix:
        if exp == 1:
            return self.gens[name]
        if name not in self.inverses:
            self.inverses[name] = invert_matrix(self.gens[name])
        return self.inverses[name]

    def matrix(self, w: BraidWord | str) -> Matrix:
        if isinstance(w, str):
            w = BraidWord.parse(w)
        self.pres.check_word(w)
        out = Matrix.identity(self.dim)
        for g, e in w.letters:
            out = out @ self.generator(g, e)
        return out


def _eye(n: int) -> Matrix:
    return Matrix.identity(n)


def _sigma_blocks(d: int, n: int, c: Matrix, tail: int) -> dict[str, Matrix]:
    return {f"s{i}": kron_all([_eye(d ** (i - 1)), c, _eye(d ** (n - i - 1) * tail)]) for i in range(1, n)}


def rep_type_a(H: HopfData, R: RMatrix, n: int, X: ModuleAction | None = None) -> BraidRep:
    X = X or regular_module(H)
    return rep_from_braiding(braiding_c(H, R, X, X), X.dim, n, braiding_c_inverse(H, R, X, X))


def rep_from_braiding(c: Matrix, d: int, n: int, c_inv: Matrix | None = None) -> BraidRep:
    """Type A assignment sigma_i -> I^(i-1) (x) c (x) I^(n-i-1) for any invertible d^2 x d^2 matrix c."""
    if c.nrows != d * d or c.ncols != d * d:
        raise ValueError(f"braiding matrix must be {d * d} x {d * d}")
    pres = presentation("A", n)
    ci = c_inv if c_inv is not None else invert_matrix(c)
    return BraidRep(pres, d ** n, _sigma_blocks(d, n, c, 1), _sigma_blocks(d, n, ci, 1),
                    {"type": "A", "n": n})


def _carriers(H, C, X, M):
    return X or regular_module(H), M or regular_module(C.B)


def rep_type_bc(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix, n: int,
                X: ModuleAction | None = None, M: ModuleAction | None = None) -> BraidRep:
    X, M = _carriers(H, C, X, M)
    pres = presentation("BC", n)
    d, m = X.dim, M.dim
    gens = _sigma_blocks(d, n, braiding_c(H, R, X, X), m)
    invs = _sigma_blocks(d, n, braiding_c_inverse(H, R, X, X), m)
    lead = _eye(d ** (n - 1))
    gens["t"] = kron(lead, braiding_e(H, R, C, K, X, M))
    invs["t"] = kron(lead, act_tensor(K.inverse, [X, M]))
    return BraidRep(pres, d ** n * m, gens, invs, {"type": "BC", "n": n})


def rep_type_d(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix, n: int,
               X: ModuleAction | None = None, M: ModuleAction | None = None) -> BraidRep:
    """Type D needs a symmetric module category, i.e. K = K^-1."""
    if not is_triangular_k(K):
        raise NotTriangular("type D representation requires a triangular K-matrix (K = K^-1)")
    X, M = _carriers(H, C, X, M)
    pres = presentation("D", n)
    d, m = X.dim, M.dim
    c = braiding_c(H, R, X, X)
    gens = _sigma_blocks(d, n, c, m)
    invs = _sigma_blocks(d, n, braiding_c_inverse(H, R, X, X), m)
    e = kron(_eye(d), braiding_e(H, R, C, K, X, M))
    block = e @ kron(c, _eye(m)) @ e
    lead = _eye(d ** (n - 2))
    gens["t"] = kron(lead, block)
    invs["t"] = kron(lead, invert_matrix(block))
    return BraidRep(pres, d ** n * m, gens, invs, {"type": "D", "n": n})


def verify_relations(rep: BraidRep) -> RelationCheck:
    for a, b in rep.pres.relations:
        if rep.matrix(a) != rep.matrix(b):
            return RelationCheck(False, f"{a} = {b}")
    return RelationCheck(True)


def trace_word(rep: BraidRep, w: BraidWord | str) -> Fraction:
    if isinstance(w, str):
        w = BraidWord.parse(w)
    rep.pres.check_word(w)
    if not w.letters:
        return Fraction(rep.dim)
    # trace(P G) = sum_ij P_ij G_ji saves forming the last product
    prefix = Matrix.identity(rep.dim)
    for g, e in w.letters[:-1]:
        prefix = prefix @ rep.generator(g, e)
    return trace_of_product(prefix, rep.generator(*w.letters[-1]))


def positive_words(generators: Sequence[str], maxlen: int) -> list[BraidWord]:
    """All positive words of length <= maxlen, shortest first, then lexicographic in generator order."""
    out = [BraidWord(())]
    for k in range(1, maxlen + 1):
        out.extend(_w(*combo) for combo in product(generators, repeat=k))
    return out


def signature_of(rep: BraidRep, maxlen: int) -> list[tuple[str, Fraction]]:
    words = positive_words(rep.pres.generators, maxlen)
    # share prefixes: trace of each word from the product of its parent
    cache: dict[tuple[Letter, ...], Matrix] = {(): Matrix.identity(rep.dim)}

    def prod(letters):
        if letters not in cache:
            cache[letters] = prod(letters[:-1]) @ rep.generator(*letters[-1])
        return cache[letters]

    for w in words:
        if len(w) < maxlen:
            prod(w.letters)

    def tr(w: BraidWord) -> Fraction:
        if len(w) < maxlen or not w.letters:
            return prod(w.letters).trace()
        return trace_of_product(prod(w.letters[:-1]), rep.generator(*w.letters[-1]))

    traces = ordered_map(tr, words)
    return [(str(w), t) for w, t in zip(words, traces)]


def signature(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix, n: int, maxlen: int):
    """Traces of rho_n^BC on all positive words up to length maxlen."""
    return signature_of(rep_type_bc(H, R, C, K, n), maxlen)


def signature_json(sig) -> list[dict]:
    return [{"word": w, "trace": format_scalar(t)} for w, t in sig]


__all__ = [
    "BadWord",
    "BraidRep",
    "BraidWord",
    "Presentation",
    "RelationCheck",
    "UnsupportedRank",
    "positive_words",
    "presentation",
    "rep_type_a",
    "rep_type_bc",
    "rep_type_d",
    "signature",
    "signature_json",
    "signature_of",
    "trace_word",
    "verify_relations",
]

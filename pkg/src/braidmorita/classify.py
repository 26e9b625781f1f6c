"""K-matrix solving and classification.

Group algebras kG with R_u, the conjugacy classification of pairs (L, a),
the branching solver for the K-matrix equations, and the invariant-based
distinguisher.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .braidrep import signature
from .comodule import (
    ComoduleAlgebraData,
    KMatrix,
    check_k_matrix,
    coideal_subalgebra,
    k_axiom_sides,
)
from .groups import GroupTable, enumerate_subgroups
from .hopf import HopfData, leg_map, semisimple_via_trace_form, tensor_mult, apply_comult
from .linalg import (
    Matrix,
    SingularMatrix,
    TensorElement,
    embed_element,
    format_scalar,
    nullspace,
)
from .poly import Poly
from .quasitriangular import RMatrix, check_r_matrix, is_triangular_r


class NotCentral(ValueError):
    pass


class NotInvolution(ValueError):
    pass


class HostMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# group algebras


def group_algebra(G: GroupTable) -> HopfData:
    n = G.order
    mult = [(a, b, G.mul(a, b), 1) for a in range(n) for b in range(n)]
    unit = [int(a == G.identity) for a in range(n)]
    comult = [(a, a, a, 1) for a in range(n)]
    antipode = [(G.inv(a), a, 1) for a in range(n)]
    H = HopfData(n, mult, unit, comult, [1] * n, antipode, G.labels)
    H.group = G
    return H


def r_u(G: GroupTable, u: int | str, H: HopfData | None = None) -> RMatrix:
    """R_u = 1/2 (1(x)1 + 1(x)u + u(x)1 - u(x)u) for a central involution u."""
    if isinstance(u, str):
        u = G.index(u)
    if not G.is_central(u):
        raise NotCentral(f"{G.labels[u]} is not central in {G.name}")
    if G.mul(u, u) != G.identity:
        raise NotInvolution(f"{G.labels[u]} does not square to the identity")
    H = H or group_algebra(G)
    e = G.identity
    half = Fraction(1, 2)
    coeffs: dict[tuple[int, int], Fraction] = {}
    for key, c in (((e, e), half), ((e, u), half), ((u, e), half), ((u, u), -half)):
        coeffs[key] = coeffs.get(key, 0) + c
    rep = check_r_matrix(H, TensorElement((G.order, G.order), coeffs))
    if not rep.passed:  # cannot happen for a central involution
        raise ValueError(f"R_u failed: {rep.failed()}")
    return rep.value


def subgroup_comodule(G: GroupTable, H: HopfData, L: Sequence[int]) -> ComoduleAlgebraData:
    """kL inside kG with the coaction Delta restricted."""
    L = tuple(sorted(L))
    cols = [[Fraction(int(i == l)) for i in range(G.order)] for l in L]
    C = coideal_subalgebra(H, Matrix.from_columns(cols), [G.labels[l] for l in L],
                           name=subgroup_name(G, L))
    C.subgroup = L
    return C


def subgroup_name(G: GroupTable, L: Sequence[int]) -> str:
    return "k{" + ",".join(G.labels[l] for l in sorted(L)) + "}"


def kG_k_matrices(G: GroupTable, u: int | str, L: Sequence[int]) -> list[TensorElement]:
    """{a (x) 1 : a in C_G(L)} for kL inside kG."""
    L = tuple(sorted(L))
    one = L.index(G.identity)
    return [TensorElement((G.order, len(L)), {(a, one): 1}) for a in G.centralizer(L)]


@dataclass
class PairClass:
    representative: tuple[tuple[int, ...], int]
    members: list[tuple[tuple[int, ...], int]]

    def labelled(self, G: GroupTable) -> list[tuple[list[str], str]]:
        return [(G.label_set(L), G.labels[a]) for L, a in self.members]


def _pair_key(pair):
    L, a = pair
    return (len(L), L, a)


def pair_conjugacy_classes(G: GroupTable, u: int | str | None = None) -> list[PairClass]:
    """Orbits of (L, a in C_G(L)) under simultaneous conjugation.

    ``u`` only selects R_u and does not change the orbits; it is validated.
    """
    if u is not None:
        u = G.index(u) if isinstance(u, str) else u
        if not G.is_central(u):
            raise NotCentral(f"{G.labels[u]} is not central in {G.name}")
        if G.mul(u, u) != G.identity:
            raise NotInvolution(f"{G.labels[u]} does not square to the identity")
    pairs = [(L, a) for L in enumerate_subgroups(G) for a in G.centralizer(L)]
    seen: set = set()
    classes = []
    for p in sorted(pairs, key=_pair_key):
        if p in seen:
            continue
        L, a = p
        orbit = {(G.conjugate_set(g, L), G.conj(g, a)) for g in range(G.order)}
        seen |= orbit
        members = sorted(orbit, key=_pair_key)
        classes.append(PairClass(members[0], members))
    return classes


def conjugator(G: GroupTable, p, q) -> int | None:
    """Smallest g (identity first) with g p g^-1 = q for pairs (L, a)."""
    (L, a), (L2, b) = p, q
    order = [G.identity] + [g for g in range(G.order) if g != G.identity]
    for g in order:
        if G.conj(g, a) == b and G.conjugate_set(g, L) == tuple(sorted(L2)):
            return g
    return None


# ---------------------------------------------------------------------------
# the K-matrix solver


class Status(str, Enum):
    FINITE = "FINITE"
    PARAMETRIC = "PARAMETRIC"
    RESIDUAL = "RESIDUAL"


@dataclass
class Family:
    """A leaf with free parameters: coefficients are polynomials in the parameters."""

    params: list[int]
    coeffs: dict[tuple[int, int], Poly]
    determinant: str
    sample: TensorElement | None

    def to_dict(self, labels_h, labels_b) -> dict:
        return {
            "parameters": [f"t{p}" for p in self.params],
            "element": [[labels_h[i], labels_b[j], str(c)] for (i, j), c in sorted(self.coeffs.items())],
            "determinant": self.determinant,
            "sample": None if self.sample is None else tensor_to_list(self.sample),
        }


@dataclass
class SolutionReport:
    status: Status
    solutions: list[TensorElement] = field(default_factory=list)
    families: list[Family] = field(default_factory=list)
    residual: list[list[Poly]] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def to_dict(self, H: HopfData | None = None, C: ComoduleAlgebraData | None = None) -> dict:
        from .io import format_tensor

        d: dict = {"status": self.status.value}
        if H is not None and C is not None:
            d["solutions"] = [format_tensor(s, [H.labels, C.B.labels]) for s in self.solutions]
            d["families"] = [f.to_dict(H.labels, C.B.labels) for f in self.families]
        else:
            d["solutions"] = [tensor_to_list(s) for s in self.solutions]
        d["residual"] = [[str(p) for p in sys] for sys in self.residual]
        d["trace"] = list(self.trace)
        return d


def tensor_to_list(u: TensorElement) -> list:
    return [[*k, format_scalar(c)] for k, c in sorted(u.coeffs.items())]


def _linear_constraints(H, R, C) -> list[list[Fraction]]:
    """Nullspace basis of axioms (ii) and (iii), as coefficient vectors over e_i (x) f_j."""
    dh, db = H.dim, C.B.dim
    algs3 = [H, H, C.B]
    R21 = embed_element(R.element.swap(), algs3, 1, 2)
    R12 = embed_element(R.element, algs3, 1, 2)
    images = [C.delta(j) for j in range(db)]
    deltas = [C.delta_element({b: Fraction(1)}) for b in range(db)]
    algs2 = [H, C.B]
    rows: dict[int, dict[int, Fraction]] = {}
    offset_iii = dh * dh * db
    for p in range(dh * db):
        E = TensorElement((dh, db), {divmod(p, db): 1})
        lhs = leg_map(E, 1, images, (dh, db))
        rhs = tensor_mult(algs3, tensor_mult(algs3, R21, embed_element(E, algs3, 1, 3)), R12)
        for k, c in (lhs - rhs).coeffs.items():
            r = (k[0] * dh + k[1]) * db + k[2]
            rows.setdefault(r, {})[p] = c
        for b, d in enumerate(deltas):
            diff = tensor_mult(algs2, E, d) - tensor_mult(algs2, d, E)
            for (i, j), c in diff.coeffs.items():
                r = offset_iii + (b * dh + i) * db + j
                rows.setdefault(r, {})[p] = c
    nrows = offset_iii + db * dh * db
    return nullspace(Matrix(nrows, dh * db, rows))


def _quadratic_system(H, R, C, basis: list[TensorElement]) -> list[Poly]:
    """Axiom (i) for K = sum_q t_q K_q, one polynomial per coordinate of H(x)H(x)B."""
    algs3 = [H, H, C.B]
    R21 = embed_element(R.element.swap(), algs3, 1, 2)
    R21inv = embed_element(R.inverse.swap(), algs3, 1, 2)
    polys: dict[tuple, Poly] = {}

    def add(coeffs, mono, sign):
        for k, c in coeffs.items():
            polys[k] = polys.get(k, Poly()) + Poly({mono: sign * c})

    middles = [tensor_mult(algs3, tensor_mult(algs3, R21, embed_element(Ks, algs3, 1, 3)), R21inv)
               for Ks in basis]
    for q, Kq in enumerate(basis):
        add(apply_comult(H, Kq, 0).coeffs, (q,), 1)
        K23 = embed_element(Kq, algs3, 2, 3)
        for s, mid in enumerate(middles):
            add(tensor_mult(algs3, K23, mid).coeffs, (q, s), -1)
    return [p for _, p in sorted(polys.items()) if not p.is_zero()]


class _Search:
    def __init__(self, nparams: int, trace: list[str], max_leaves: int = 4096):
        self.nparams = nparams
        self.trace = trace
        self.leaves: list[tuple[str, dict[int, Poly], list[Poly]]] = []
        self.max_leaves = max_leaves

    @staticmethod
    def _simplify(eqs: list[Poly]) -> list[Poly]:
        uniq = {}
        for e in eqs:
            if not e.is_zero():
                n = e.normalized()
                uniq[n] = n
        return sorted(uniq.values(), key=lambda p: (p.degree(), len(p.terms), str(p)))

    @staticmethod
    def _substitute(eqs, subs, var, value):
        eqs = [e.subs(var, value) for e in eqs]
        subs = {v: p.subs(var, value) for v, p in subs.items()}
        subs[var] = value
        return eqs, subs

    def run(self, eqs: list[Poly], subs: dict[int, Poly], path: str) -> None:
        while True:
            if len(self.leaves) >= self.max_leaves:
                self.leaves.append(("residual", subs, eqs))
                self.trace.append(f"{path or 'root'}: leaf budget exhausted")
                return
            eqs = self._simplify(eqs)
            if not eqs:
                self.leaves.append(("solved", subs, []))
                self.trace.append(f"{path or 'root'}: all equations satisfied")
                return
            if eqs[0].degree() == 0:
                self.trace.append(f"{path or 'root'}: inconsistent ({eqs[0]} = 0)")
                return
            if eqs[0].degree() == 1:
                e = eqs[0]
                v = min(e.variables())
                coef = e.coeff((v,))
                value = (e - Poly({(v,): coef})) * (-1 / coef)
                eqs, subs = self._substitute(eqs[1:], subs, v, value)
                continue
            break
        for e in eqs:
            v = e.common_variable()
            if v is None:
                continue
            cofactor = e.divide_by_var(v)
            rest = [x for x in eqs if x is not e]
            self.trace.append(f"{path or 'root'}: split {e} = 0 as t{v} * ({cofactor})")
            eqs0, subs0 = self._substitute(rest, subs, v, Poly())
            self.run(eqs0, subs0, f"{path}/t{v}=0")
            self.run(rest + [cofactor], dict(subs), f"{path}/{cofactor}=0")
            return
        self.trace.append(f"{path or 'root'}: no branching shape applies; residual")
        self.leaves.append(("residual", subs, eqs))


def solve_polynomial_system(eqs: Sequence[Poly], max_leaves: int = 4096):
    """Branch on the equations; returns (leaves, trace).

    Each leaf is ``(kind, subs, remaining)`` with kind "solved" or "residual";
    ``subs`` maps eliminated variables to affine expressions in the free ones.
    """
    trace: list[str] = []
    search = _Search(0, trace, max_leaves)
    search.run(list(eqs), {}, "")
    return search.leaves, trace


def _element_polys(basis, subs, nparams, dims) -> dict[tuple[int, int], Poly]:
    out: dict[tuple[int, int], Poly] = {}
    for q, Kq in enumerate(basis):
        tq = subs.get(q, Poly.var(q))
        for k, c in Kq.coeffs.items():
            out[k] = out.get(k, Poly()) + tq * c
    return {k: p for k, p in out.items() if not p.is_zero()}


def _determinant(H, C, coeffs: dict[tuple[int, int], Poly], params: list[int]):
    import sympy

    syms = {p: sympy.Symbol(f"t{p}") for p in params}
    dims = (H.dim, C.B.dim)
    n = dims[0] * dims[1]
    M = sympy.zeros(n, n)
    for (i, j), poly in coeffs.items():
        expr = sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[syms[v] for v in m])
                   for m, c in poly.terms.items())
        L = tensor_left_mult_basis(H, C, i, j)
        for r, col, v in L.items():
            M[r, col] += expr * sympy.Rational(v.numerator, v.denominator)
    return sympy.factor(M.det(method="berkowitz")), syms


def tensor_left_mult_basis(H, C, i, j) -> Matrix:
    from .linalg import kron

    return kron(H.left_mult(i), C.B.left_mult(j))


def _sample_points(params: list[int], radius: int = 2):
    from itertools import product as iproduct

    values = [0]
    for k in range(1, radius + 1):
        values += [k, -k]
    for combo in iproduct(values, repeat=len(params)):
        yield dict(zip(params, (Fraction(v) for v in combo)))


def solve_k(H: HopfData, R: RMatrix, C: ComoduleAlgebraData) -> SolutionReport:
    """Solve the K-matrix equations by linear reduction and quadratic branching."""
    trace: list[str] = []
    dh, db = H.dim, C.B.dim
    null = _linear_constraints(H, R, C)
    basis = [TensorElement.from_vector((dh, db), v) for v in null]
    trace.append(f"axioms (ii),(iii): {dh * db} unknowns reduce to {len(basis)} parameters")
    if not basis:
        trace.append("only K = 0 satisfies the linear axioms; no invertible solution")
        return SolutionReport(Status.FINITE, [], trace=trace)
    eqs = _quadratic_system(H, R, C, basis)
    trace.append(f"axiom (i): {len(eqs)} polynomial equations of degree <= 2")
    search = _Search(len(basis), trace)
    search.run(eqs, {}, "")

    solutions: dict[TensorElement, None] = {}
    families: list[Family] = []
    residual: list[list[Poly]] = []
    for kind, subs, rest in search.leaves:
        if kind == "residual":
            residual.append(rest)
            continue
        coeffs = _element_polys(basis, subs, len(basis), (dh, db))
        free = sorted({v for p in coeffs.values() for v in p.variables()})
        if not free:
            K = TensorElement((dh, db), {k: p.constant() for k, p in coeffs.items()})
            try:
                rep = check_k_matrix(H, R, C, K)
            except SingularMatrix:
                trace.append(f"leaf {tensor_to_list(K)} not invertible; discarded")
                continue
            if not rep.passed:  # would indicate a solver bug
                raise AssertionError(f"solver produced a non-solution failing {rep.failed()}")
            solutions[K] = None
            continue
        det, syms = _determinant(H, C, coeffs, free)
        if det == 0:
            trace.append(f"family in {['t%d' % v for v in free]} is never invertible; discarded")
            continue
        sample = None
        for point in _sample_points(free):
            if det.subs({syms[p]: point[p] for p in free}) == 0:
                continue
            K = TensorElement((dh, db), {k: p.evaluate(point) for k, p in coeffs.items()})
            if check_k_matrix(H, R, C, K).passed:
                sample = K
                break
        families.append(Family(free, coeffs, str(det), sample))

    sols = sorted(solutions, key=lambda K: sorted(K.coeffs.items()))
    if residual:
        status = Status.RESIDUAL
    elif families:
        status = Status.PARAMETRIC
    else:
        status = Status.FINITE
    return SolutionReport(status, sols, families, residual, trace)


# ---------------------------------------------------------------------------
# distinguishing braided Morita classes


class VerdictKind(str, Enum):
    DISTINGUISHED = "DISTINGUISHED"
    NOT_DISTINGUISHED = "NOT_DISTINGUISHED"
    EQUIVALENT = "EQUIVALENT"


@dataclass
class Verdict:
    kind: VerdictKind
    reason: str | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"verdict": self.kind.value, "reason": self.reason, "detail": self.detail}

    def __str__(self) -> str:
        return f"{self.kind.value}({self.reason})" if self.reason else self.kind.value


def _group_pair(H: HopfData, R: RMatrix, C: ComoduleAlgebraData, K: KMatrix):
    """(L, a) when the input is (kL, a (x) 1) over (kG, R_u); else None."""
    G = getattr(H, "group", None)
    if G is None or C.subgroup is None:
        return None
    if not any(R.element == r_u(G, u, H).element for u in G.central_involutions()):
        return None
    L = tuple(sorted(C.subgroup))
    one = L.index(G.identity)
    items = list(K.element.coeffs.items())
    if len(items) != 1 or items[0][1] != 1 or items[0][0][1] != one:
        return None
    return L, items[0][0][0]


def distinguish(H: HopfData, R: RMatrix, first: tuple, second: tuple,
                n: int = 2, maxlen: int = 1) -> Verdict:
    """Compare two quasitriangular comodule algebras (C, K) over (H, R).

    Necessary-condition invariants in order: dimension, semisimplicity, traces
    of the type-BC representation on positive words.  For group algebras the
    conjugacy criterion decides equivalence outright.
    """
    (C1, K1), (C2, K2) = first, second
    for C in (C1, C2):
        if C.H is not H and not C.H.same_structure(H):
            raise HostMismatch(f"{C.name} is a comodule algebra over a different Hopf algebra")
    K1 = K1 if isinstance(K1, KMatrix) else KMatrix(C1, K1)
    K2 = K2 if isinstance(K2, KMatrix) else KMatrix(C2, K2)

    if C1.dim != C2.dim:
        return Verdict(VerdictKind.DISTINGUISHED, "dimension", {"dims": [C1.dim, C2.dim]})
    ss1 = semisimple_via_trace_form(C1.B).semisimple
    ss2 = semisimple_via_trace_form(C2.B).semisimple
    if ss1 != ss2:
        return Verdict(VerdictKind.DISTINGUISHED, "semisimplicity", {"semisimple": [ss1, ss2]})
    sig1 = signature(H, R, C1, K1, n, maxlen)
    sig2 = signature(H, R, C2, K2, n, maxlen)
    for (w, a), (_, b) in zip(sig1, sig2):
        if a != b:
            return Verdict(VerdictKind.DISTINGUISHED, "trace",
                           {"word": w, "traces": [format_scalar(a), format_scalar(b)], "n": n})
    p1, p2 = _group_pair(H, R, C1, K1), _group_pair(H, R, C2, K2)
    if p1 is not None and p2 is not None:
        G = H.group
        g = conjugator(G, p1, p2)
        if g is not None:
            return Verdict(VerdictKind.EQUIVALENT, "conjugacy", {"g": G.labels[g]})
        return Verdict(VerdictKind.DISTINGUISHED, "conjugacy", {})
    return Verdict(VerdictKind.NOT_DISTINGUISHED, None, {"n": n, "maxlen": maxlen})


def morita_classes(H: HopfData, R: RMatrix, items: Sequence[tuple[str, ComoduleAlgebraData, TensorElement]],
                   n: int = 2, maxlen: int = 1) -> list[list[str]]:
    """Group labelled (C, K) inputs: two inputs share a class unless distinguish separates them."""
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            v = distinguish(H, R, items[i][1:], items[j][1:], n, maxlen)
            if v.kind != VerdictKind.DISTINGUISHED:
                parent[find(j)] = find(i)
    groups: dict[int, list[str]] = {}
    for i, it in enumerate(items):
        groups.setdefault(find(i), []).append(it[0])
    return list(groups.values())


__all__ = [
    "Family",
    "HostMismatch",
    "NotCentral",
    "NotInvolution",
    "PairClass",
    "SolutionReport",
    "Status",
    "Verdict",
    "VerdictKind",
    "conjugator",
    "distinguish",
    "enumerate_subgroups",
    "group_algebra",
    "kG_k_matrices",
    "morita_classes",
    "pair_conjugacy_classes",
    "r_u",
    "solve_k",
    "subgroup_comodule",
    "subgroup_name",
]

"""Built-in worked examples: group algebras with R_u and the Sweedler algebra with R_lambda."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .classify import group_algebra, kG_k_matrices, r_u, subgroup_comodule
from .comodule import (
    ComoduleAlgebraData,
    check_comodule_algebra,
    check_k_matrix,
    coideal_subalgebra,
    trivial_comodule,
)
from .groups import GroupTable, builtin_group, builtin_groups, cyclic, enumerate_subgroups
from .hopf import HopfData, VerificationReport, check_hopf
from .io import comodule_to_dict, dumps, format_tensor, hopf_to_dict
from .linalg import Matrix, TensorElement, format_scalar, to_scalar
from .quasitriangular import ConstructionFailed, RMatrix, check_r_matrix, drinfeld_double

H4_LABELS = ["1", "g", "x", "gx"]


def sweedler_hopf() -> HopfData:
    """Sweedler's 4-dimensional algebra: g^2 = 1, x^2 = 0, xg = -gx.

    Basis 1, g, x, gx; Delta(g) = g(x)g, Delta(x) = x(x)g + 1(x)x.
    """
    one, g, x, gx = range(4)
    mult = [
        (one, one, one, 1), (one, g, g, 1), (one, x, x, 1), (one, gx, gx, 1),
        (g, one, g, 1), (g, g, one, 1), (g, x, gx, 1), (g, gx, x, 1),
        (x, one, x, 1), (x, g, gx, -1),
        (gx, one, gx, 1), (gx, g, x, -1),
    ]
    comult = [
        (one, one, one, 1),
        (g, g, g, 1),
        (x, x, g, 1), (x, one, x, 1),
        (gx, gx, one, 1), (gx, g, gx, 1),
    ]
    counit = [1, 1, 0, 0]
    antipode = [(one, one, 1), (g, g, 1), (gx, x, 1), (x, gx, -1)]
    return HopfData(4, mult, [1, 0, 0, 0], comult, counit, antipode, H4_LABELS)


def r_lambda(H: HopfData, lam) -> TensorElement:
    """R_lambda = 1/2(1(x)1 + 1(x)g + g(x)1 - g(x)g) + lambda/2(x(x)x + x(x)gx + gx(x)gx - gx(x)x)."""
    lam = to_scalar(lam)
    half = Fraction(1, 2)
    one, g, x, gx = range(4)
    c = {
        (one, one): half, (one, g): half, (g, one): half, (g, g): -half,
        (x, x): half * lam, (x, gx): half * lam, (gx, gx): half * lam, (gx, x): -half * lam,
    }
    return TensorElement((4, 4), c)


def _columns(H: HopfData, labels: list[str]) -> Matrix:
    return Matrix.from_columns([[Fraction(int(i == H.index(l))) for i in range(H.dim)] for l in labels])


SWEEDLER_COIDEALS = {
    "k": ["1"],
    "k1+kg": ["1", "g"],
    "k1+kgx": ["1", "gx"],
    "H4": ["1", "g", "x", "gx"],
}


@dataclass
class CoidealEntry:
    C: ComoduleAlgebraData
    known_k: list[TensorElement]

    @property
    def name(self) -> str:
        return self.C.name


@dataclass
class CatalogEntry:
    name: str
    H: HopfData
    R: RMatrix
    coideals: list[CoidealEntry]
    note: str = ""

    def coideal(self, name: str) -> CoidealEntry:
        for c in self.coideals:
            if c.name == name:
                return c
        raise KeyError(f"entry {self.name} has no coideal {name!r}; have {[c.name for c in self.coideals]}")

    def pairs(self):
        """(label, C, K) for every known K-matrix, in catalog order."""
        out = []
        for ce in self.coideals:
            for K in ce.known_k:
                out.append((f"({ce.name}, {format_tensor(K, [self.H.labels, ce.C.B.labels])})", ce.C, K))
        return out


def verify_entry(entry: CatalogEntry) -> VerificationReport:
    """Run every verifier on an entry; all must pass."""
    rep = VerificationReport(f"catalog {entry.name}")
    rep.add("hopf", None if check_hopf(entry.H).passed else ("hopf",))
    rep.add("r-matrix", None if check_r_matrix(entry.H, entry.R.element).passed else ("R",))
    for ce in entry.coideals:
        ok = check_comodule_algebra(ce.C).passed
        rep.add(f"comodule {ce.name}", None if ok else (ce.name,))
        for K in ce.known_k:
            r = check_k_matrix(entry.H, entry.R, ce.C, K)
            rep.add(f"k-matrix {ce.name} {format_tensor(K, [entry.H.labels, ce.C.B.labels])}",
                    None if r.passed else tuple(r.failed()))
    return rep


def _certified(entry: CatalogEntry) -> CatalogEntry:
    rep = verify_entry(entry)
    if not rep.passed:
        raise ConstructionFailed(f"catalog entry {entry.name}", rep.failed())
    return entry


def sweedler(lam=0) -> CatalogEntry:
    """H4 with R_lambda, its four coideal subalgebras and their K-matrices."""
    lam = to_scalar(lam)
    H = sweedler_hopf()
    R = check_r_matrix(H, r_lambda(H, lam)).value
    coideals = []
    for name, labels in SWEEDLER_COIDEALS.items():
        C = coideal_subalgebra(H, _columns(H, labels), labels, name=name)
        known = [TensorElement((4, C.dim), {(0, 0): 1})]
        if lam == 0 and name in ("k", "k1+kg"):
            known.append(TensorElement((4, C.dim), {(1, 0): 1}))
        coideals.append(CoidealEntry(C, known))
    return _certified(CatalogEntry(f"H4_l{format_scalar(lam).replace('/', '_')}", H, R, coideals,
                                   "Sweedler algebra with R_lambda; K-lists split on lambda = 0"))


def group_entry(G: GroupTable, u) -> CatalogEntry:
    u = G.index(u) if isinstance(u, str) else u
    H = group_algebra(G)
    R = r_u(G, u, H)
    coideals = [CoidealEntry(subgroup_comodule(G, H, L), kG_k_matrices(G, u, L))
                for L in enumerate_subgroups(G)]
    return _certified(CatalogEntry(f"{G.name}_{G.labels[u]}", H, R, coideals,
                                   "group algebra with R_u; K = a(x)1 for a in C_G(L)"))


def trivial_h4() -> ComoduleAlgebraData:
    """H4 as a comodule algebra over itself with the trivial coaction b -> 1(x)b (not H-simple)."""
    H = sweedler_hopf()
    return trivial_comodule(H, H, name="H4_trivial")


def double_c2():
    """D(kC2) with its canonical R and the one-dimensional coideal k (trivial coaction)."""
    H = group_algebra(cyclic(2))
    D, R = drinfeld_double(H)
    C = coideal_subalgebra(D, Matrix.from_columns([D.unit]), ["1"], name="k")
    return D, R, C


def entry_names() -> list[str]:
    names = ["H4_l0", "H4_l1"]
    for G in builtin_groups():
        names += [f"{G.name}_{G.labels[u]}" for u in G.central_involutions()]
    return names


def load(name: str) -> CatalogEntry:
    m = re.fullmatch(r"H4_l(-?\d+(?:_\d+)?)", name)
    if m:
        return sweedler(m.group(1).replace("_", "/"))
    gname, _, u = name.partition("_")
    try:
        G = builtin_group(gname)
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; have {entry_names()}") from None
    return group_entry(G, G.index(u) if u else G.identity)


def all_entries() -> list[CatalogEntry]:
    return [load(n) for n in entry_names()]


def export(entry: CatalogEntry, directory: str | None = None) -> dict:
    """JSON documents for the entry; written as files when a directory is given."""
    host_file = f"{entry.name.lower()}.json"
    docs = {host_file: hopf_to_dict(entry.H, entry.R.element)}
    known = {}
    for ce in entry.coideals:
        fname = f"{entry.name.lower()}__{_slug(ce.name)}.json"
        docs[fname] = comodule_to_dict(ce.C, host_ref=host_file)
        known[ce.name] = [format_tensor(K, [entry.H.labels, ce.C.B.labels]) for K in ce.known_k]
    manifest = {"entry": entry.name, "note": entry.note, "hopf": host_file,
                "comodules": {ce.name: f"{entry.name.lower()}__{_slug(ce.name)}.json" for ce in entry.coideals},
                "known_k": known}
    docs["manifest.json"] = manifest
    if directory is not None:
        os.makedirs(directory, exist_ok=True)
        for fname, doc in docs.items():
            with open(os.path.join(directory, fname), "w", encoding="utf-8") as fh:
                fh.write(dumps(doc) + "\n")
    return docs


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_") or "trivial"

import time

import pytest

from braidmorita import catalog
from braidmorita.braidrep import signature
from braidmorita.classify import (
    HostMismatch, NotCentral, NotInvolution, Status, VerdictKind, conjugator, distinguish,
    group_algebra, kG_k_matrices, morita_classes, pair_conjugacy_classes, r_u, solve_k,
    solve_polynomial_system, subgroup_comodule,
)
from braidmorita.comodule import KMatrix
from braidmorita.groups import builtin_group, builtin_groups, enumerate_subgroups
from braidmorita.hopf import check_hopf
from braidmorita.linalg import TensorElement
from braidmorita.poly import Poly

t0, t1, t2 = Poly.var(0), Poly.var(1), Poly.var(2)
one = Poly.const(1)


def test_group_algebra():
    for G in builtin_groups():
        H = group_algebra(G)
        assert H.dim == G.order and check_hopf(H).passed and H.group is G


def test_r_u_errors():
    S3 = builtin_group("S3")
    with pytest.raises(NotCentral):
        r_u(S3, "(12)")
    with pytest.raises(NotInvolution):
        r_u(builtin_group("C4"), "g")


def test_subgroup_counts():
    counts = {G.name: len(enumerate_subgroups(G)) for G in builtin_groups()}
    assert counts == {"C2": 2, "C3": 2, "C4": 3, "C2xC2": 5, "S3": 6}


def test_pair_classes():
    S3 = builtin_group("S3")
    classes = pair_conjugacy_classes(S3, "e")
    assert len(classes) == 8 and sum(len(c.members) for c in classes) == 16
    C2 = builtin_group("C2")
    assert [len(c.members) for c in pair_conjugacy_classes(C2, "g")] == [1, 1, 1, 1]
    with pytest.raises(NotCentral):
        pair_conjugacy_classes(S3, "(12)")


def test_conjugator_prefers_identity():
    S3 = builtin_group("S3")
    L12 = S3.closure([S3.index("(12)")])
    L13 = S3.closure([S3.index("(13)")])
    assert conjugator(S3, (L12, 0), (L12, 0)) == S3.identity
    assert S3.labels[conjugator(S3, (L12, 0), (L13, 0))] == "(23)"
    assert conjugator(S3, (L12, 0), (L12, S3.index("(12)"))) is None


def _set(sols):
    return {frozenset(s.coeffs.items()) for s in sols}


def test_solve_k_sweedler(h4_0, h4_1):
    g, one_ = {(1, 0): 1}, {(0, 0): 1}
    for e, expect in ((h4_0, {"k": 2, "k1+kg": 2, "k1+kgx": 1, "H4": 1}),
                      (h4_1, {"k": 1, "k1+kg": 1, "k1+kgx": 1, "H4": 1})):
        for ce in e.coideals:
            start = time.perf_counter()
            rep = solve_k(e.H, e.R, ce.C)
            assert time.perf_counter() - start < 1
            assert rep.status is Status.FINITE
            want = [TensorElement((4, ce.C.dim), one_)]
            if expect[ce.name] == 2:
                want.append(TensorElement((4, ce.C.dim), g))
            assert _set(rep.solutions) == _set(want), (e.name, ce.name)


def test_solve_k_matches_group_formula():
    for G in builtin_groups():
        H = group_algebra(G)
        for u in G.central_involutions():
            R = r_u(G, u, H)
            for L in enumerate_subgroups(G):
                C = subgroup_comodule(G, H, L)
                rep = solve_k(H, R, C)
                assert rep.status is Status.FINITE
                assert _set(rep.solutions) == _set(kG_k_matrices(G, u, L)), (G.name, u, L)


def test_solve_k_on_double_has_no_solution(double_c2):
    D, R, C = double_c2
    rep = solve_k(D, R, C)
    assert rep.status is Status.FINITE and rep.solutions == []


def test_report_serialises(h4_0):
    ce = h4_0.coideal("k")
    d = solve_k(h4_0.H, h4_0.R, ce.C).to_dict(h4_0.H, ce.C)
    assert d["status"] == "FINITE" and d["solutions"] == ["1⊗1", "g⊗1"]


# the branching engine on hand-made systems


def _leaves(eqs):
    leaves, trace = solve_polynomial_system(eqs)
    return [(k, {v: str(p) for v, p in s.items()}, [str(e) for e in r]) for k, s, r in leaves], trace


def test_engine_idempotent_branching():
    leaves, trace = _leaves([t0 * t0 - t0, t0 * t1])
    assert leaves == [("solved", {0: "0"}, []), ("solved", {1: "0", 0: "0"}, []),
                      ("solved", {1: "0", 0: "1"}, [])]
    assert trace[0] == "root: split t0*t1 = 0 as t0 * (t1)"


def test_engine_family_leaf():
    # t0 t1 = t1: either t1 = 0 (t0 free) or t0 = 1 (t1 free)
    leaves, _ = _leaves([t0 * t1 - t1])
    assert leaves == [("solved", {1: "0"}, []), ("solved", {0: "1"}, [])]


def test_engine_residual_and_inconsistent():
    leaves, trace = _leaves([t0 * t0 + t1 * t1 - one])
    assert leaves == [("residual", {}, ["t0*t0 + t1*t1 - 1"])]
    assert trace == ["root: no branching shape applies; residual"]
    assert _leaves([t0 - one, t0 * t0 - one * 2])[0] == []


def test_engine_leaf_budget():
    eqs = [Poly.var(i) * Poly.var(i) - Poly.var(i) for i in range(6)]
    leaves, _ = solve_polynomial_system(eqs, max_leaves=4)
    assert any(kind == "residual" for kind, _, _ in leaves)


# distinguishing


def _item(e, coideal, el):
    C = e.coideal(coideal).C
    return C, TensorElement((e.H.dim, C.dim), el)


def test_distinguish_sweedler(h4_0):
    H, R = h4_0.H, h4_0.R
    k1 = _item(h4_0, "k", {(0, 0): 1})
    kg = _item(h4_0, "k", {(1, 0): 1})
    v = distinguish(H, R, k1, kg)
    assert v.kind is VerdictKind.DISTINGUISHED and v.reason == "trace"
    assert v.detail["word"] == "t" and v.detail["traces"] == ["16", "0"]
    v = distinguish(H, R, _item(h4_0, "k1+kg", {(0, 0): 1}), _item(h4_0, "k1+kgx", {(0, 0): 1}))
    assert str(v) == "DISTINGUISHED(semisimplicity)"
    v = distinguish(H, R, k1, _item(h4_0, "H4", {(0, 0): 1}))
    assert str(v) == "DISTINGUISHED(dimension)"
    assert distinguish(H, R, k1, k1).kind is VerdictKind.NOT_DISTINGUISHED


def test_trace_witness_scales_with_dim_b(h4_0):
    C = h4_0.coideal("k1+kg").C
    sig1 = signature(h4_0.H, h4_0.R, C, KMatrix(C, TensorElement((4, 2), {(0, 0): 1})), 2, 1)
    sigg = signature(h4_0.H, h4_0.R, C, KMatrix(C, TensorElement((4, 2), {(1, 0): 1})), 2, 1)
    assert sig1[2] == ("t", 16 * 2) and sigg[2] == ("t", 0)


def test_distinguish_groups(s3):
    G, H, R = s3.H.group, s3.H, s3.R

    def item(gen, a):
        L = G.closure([G.index(gen)])
        C = subgroup_comodule(G, H, L)
        return C, TensorElement((6, C.dim), {(G.index(a), 0): 1})

    v = distinguish(H, R, item("(12)", "e"), item("(13)", "e"))
    assert v.kind is VerdictKind.EQUIVALENT and v.detail == {"g": "(23)"}
    a, b = item("(123)", "(123)"), item("(123)", "e")
    ab, ba = distinguish(H, R, a, b), distinguish(H, R, b, a)
    assert str(ab) == str(ba) == "DISTINGUISHED(trace)"
    assert ab.detail["traces"] == ba.detail["traces"][::-1]
    assert distinguish(H, R, a, a).kind is VerdictKind.EQUIVALENT


def test_conjugacy_separates_equal_traces():
    e = catalog.load("C3_e")
    G = e.H.group
    C = subgroup_comodule(G, e.H, (0,))
    a = (C, TensorElement((3, 1), {(G.index("g"), 0): 1}))
    b = (C, TensorElement((3, 1), {(G.index("g^2"), 0): 1}))
    assert signature(e.H, e.R, C, KMatrix(C, a[1]), 2, 2) == signature(e.H, e.R, C, KMatrix(C, b[1]), 2, 2)
    assert str(distinguish(e.H, e.R, a, b, maxlen=2)) == "DISTINGUISHED(conjugacy)"


def test_distinguish_symmetric_on_sweedler(h4_0):
    pairs = [p[1:] for p in h4_0.pairs()]
    for x in pairs:
        for y in pairs:
            a = distinguish(h4_0.H, h4_0.R, x, y)
            b = distinguish(h4_0.H, h4_0.R, y, x)
            assert (a.kind, a.reason) == (b.kind, b.reason)


def test_host_mismatch(h4_0, kc2):
    with pytest.raises(HostMismatch):
        distinguish(h4_0.H, h4_0.R, _item(h4_0, "k", {(0, 0): 1}), kc2.pairs()[0][1:])


def test_morita_class_counts(h4_0, h4_1, s3):
    assert len(morita_classes(h4_0.H, h4_0.R, h4_0.pairs())) == 6
    assert len(morita_classes(h4_1.H, h4_1.R, h4_1.pairs())) == 4
    classes = morita_classes(s3.H, s3.R, s3.pairs())
    assert sorted(len(c) for c in classes) == [1, 1, 1, 2, 2, 3, 3, 3]
    for name in ("C2_g", "C4_e", "C4_g^2"):
        e = catalog.load(name)
        assert all(len(c) == 1 for c in morita_classes(e.H, e.R, e.pairs()))

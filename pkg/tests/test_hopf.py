from fractions import Fraction
from itertools import product

import pytest

from braidmorita import catalog
from braidmorita.classify import group_algebra
from braidmorita.comodule import reflective_algebra_mult
from braidmorita.groups import builtin_group, cyclic
from braidmorita.hopf import (
    AlgebraData, HopfData, antipode_inverse, check_algebra, check_augmentation, check_hopf,
    dual_hopf, regular_action, semisimple_via_trace_form,
)
from braidmorita.linalg import Matrix, nullspace

from oracles import nilpotent_radical_dim, separable


def test_group_algebra_and_h4_pass():
    assert check_algebra(group_algebra(builtin_group("S3"))).passed
    H = catalog.sweedler_hopf()
    assert check_hopf(H).passed
    assert check_hopf(group_algebra(builtin_group("S3"))).passed


def test_h4_relations():
    H = catalog.sweedler_hopf()
    g, x, gx = H.index("g"), H.index("x"), H.index("gx")
    assert H.mul_basis(g, g) == {0: 1}
    assert H.mul_basis(x, x) == {}
    assert H.mul_basis(x, g) == {gx: -1}
    assert H.delta(x) == {(x, g): 1, (0, x): 1}


def test_two_dim_corruption_is_still_associative():
    # u*u = u instead of 1: a unital 2-dim algebra is a quotient of k[u], hence associative
    A = AlgebraData(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)], [1, 0], ["1", "u"])
    assert check_algebra(A).passed


def test_corrupted_kc3_fails_at_ggg():
    m = [(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 0, 1, 1), (1, 1, 2, 1),
         (1, 2, 1, 1),  # g * g^2 = g instead of e
         (2, 0, 2, 1), (2, 1, 0, 1), (2, 2, 1, 1)]
    rep = check_algebra(AlgebraData(3, m, [1, 0, 0], ["e", "g", "g^2"]))
    assert rep.failed() == ["associativity"]
    assert rep.results[0].witness == (1, 1, 1)


def test_identity_antipode_fails():
    H = catalog.sweedler_hopf()
    bad = HopfData(4, [tuple(e) for e in H.mult_entries()], H.unit,
                   [tuple(e) for e in H.comult_entries()], H.counit,
                   [(i, i, 1) for i in range(4)], H.labels)
    assert check_hopf(bad).failed() == ["antipode"]
    assert antipode_inverse(bad).is_identity()


def test_duals():
    for H in (group_algebra(cyclic(2)), catalog.sweedler_hopf()):
        D = dual_hopf(H)
        assert D.dim == H.dim and check_hopf(D).passed
        assert dual_hopf(D).same_structure(H)
    # function algebra on C2: orthogonal idempotents
    F = dual_hopf(group_algebra(cyclic(2)))
    assert F.mul_basis(0, 1) == {} and F.mul_basis(1, 1) == {1: 1}


def test_antipode_inverse():
    H = catalog.sweedler_hopf()
    assert (antipode_inverse(H) @ H.antipode).is_identity()
    # S has order 4 on H4
    S2 = H.antipode @ H.antipode
    assert not S2.is_identity() and (S2 @ S2).is_identity()


def test_regular_action_is_algebra_map():
    H = catalog.sweedler_hopf()
    L = regular_action(H)
    x = H.index("x")
    assert (L[x] @ L[x]).is_zero()
    for i, j in product(range(4), repeat=2):
        prod_ij = H.mul_basis(i, j)
        expect = Matrix.zeros(4)
        for k, c in prod_ij.items():
            expect = expect + L[k].scale(c)
        assert L[i] @ L[j] == expect


def _small_algebras():
    out = [("kS3", group_algebra(builtin_group("S3"))), ("H4", catalog.sweedler_hopf())]
    for name in catalog.entry_names():
        e = catalog.load(name)
        for ce in e.coideals:
            if ce.C.B.dim <= 6:
                out.append((f"{name}/{ce.name}", ce.C.B))
    D, _, _ = catalog.double_c2()
    out.append(("D(kC2)", D))
    out.append(("R_H4(k)", reflective_algebra_mult(catalog.sweedler_hopf(), catalog.sweedler(0).coideal("k").C)))
    return out


@pytest.mark.parametrize("name,A", _small_algebras(), ids=lambda v: v if isinstance(v, str) else "")
def test_semisimplicity_matches_oracles(name, A):
    ss = semisimple_via_trace_form(A).semisimple
    assert ss == separable(A)
    assert ss == (nilpotent_radical_dim(A) == 0)


def test_sweedler_coideal_semisimplicity():
    e = catalog.sweedler(0)
    assert semisimple_via_trace_form(e.coideal("k1+kg").C.B).semisimple
    r = semisimple_via_trace_form(e.coideal("k1+kgx").C.B)
    assert not r.semisimple
    from braidmorita.linalg import rank
    assert rank(r.gram) == 1
    assert not semisimple_via_trace_form(catalog.sweedler_hopf()).semisimple


def test_augmentations():
    kc2 = group_algebra(cyclic(2))
    assert check_augmentation(kc2, [1, -1])
    assert check_augmentation(kc2, [1, 1])
    H = catalog.sweedler_hopf()
    assert not check_augmentation(H, [1, 0, 1, 0])  # eps(x) = 1
    for ce in catalog.sweedler(0).coideals:
        from braidmorita.comodule import restricted_counit
        assert check_augmentation(ce.C.B, restricted_counit(ce.C))
    with pytest.raises(ValueError):
        check_augmentation(kc2, [1])

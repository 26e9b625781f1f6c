import json

import pytest

from braidmorita import catalog, io
from braidmorita.comodule import check_comodule_algebra, check_k_matrix
from braidmorita.groups import builtin_group
from braidmorita.hopf import check_hopf
from braidmorita.linalg import TensorElement
from braidmorita.quasitriangular import RMatrix, check_r_matrix


def test_entry_names():
    assert catalog.entry_names() == [
        "H4_l0", "H4_l1", "C2_e", "C2_g", "C3_e", "C4_e", "C4_g^2",
        "C2xC2_e", "C2xC2_a", "C2xC2_b", "C2xC2_ab", "S3_e"]
    with pytest.raises(KeyError):
        catalog.load("Q8_e")


def test_every_entry_verifies(all_entries):
    for e in all_entries:
        assert catalog.verify_entry(e).passed, e.name


def test_sweedler_pair_labels(h4_0, h4_1):
    assert [p[0] for p in h4_0.pairs()] == [
        "(k, 1⊗1)", "(k, g⊗1)", "(k1+kg, 1⊗1)", "(k1+kg, g⊗1)", "(k1+kgx, 1⊗1)", "(H4, 1⊗1)"]
    assert len(h4_1.pairs()) == 4


def test_other_lambda_loads():
    e = catalog.load("H4_l1_2")
    assert e.name == "H4_l1_2" and len(e.pairs()) == 4


def test_export_round_trip(tmp_path, h4_0):
    docs = catalog.export(h4_0, str(tmp_path))
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["known_k"]["k"] == ["1⊗1", "g⊗1"]
    H, R = io.load_hopf(str(tmp_path / manifest["hopf"]))
    assert check_hopf(H).passed and check_r_matrix(H, R).passed
    for name, fname in manifest["comodules"].items():
        C, R2 = io.load_comodule(str(tmp_path / fname))
        assert check_comodule_algebra(C).passed
        assert R2 == R
        Rm = RMatrix(C.H, R2)
        for text in manifest["known_k"][name]:
            K = io.parse_tensor(text, [C.H.labels, C.B.labels])
            assert check_k_matrix(C.H, Rm, C, K).passed
    assert set(docs) == {p.name for p in tmp_path.iterdir()}


def test_group_round_trip(s3):
    d = io.hopf_to_dict(s3.H, s3.R.element)
    H, R = io.hopf_from_dict(json.loads(json.dumps(d)))
    assert H.same_structure(s3.H) and R == s3.R.element
    assert H.group.to_dict() == builtin_group("S3").to_dict()


def test_parse_and_format_tensor():
    labels = [["1", "g", "x", "gx"], ["1", "g"]]
    u = io.parse_tensor("g⊗1 + 1/2 x⊗g - 3*gx(x)1", labels)
    assert u.coeffs == {(1, 0): 1, (2, 1): io.to_scalar("1/2"), (3, 0): -3}
    assert io.format_tensor(u, labels) == "g⊗1 + 1/2 x⊗g - 3 gx⊗1"
    assert io.parse_tensor(io.format_tensor(u, labels), labels) == u
    assert io.parse_tensor("-g⊗1", labels).coeffs == {(1, 0): -1}
    # "1" names the unit when it is a basis vector with another label
    assert io.parse_tensor("1⊗1", [["e", "g"], ["e"]], [0, 0]).coeffs == {(0, 0): 1}
    for bad in ("", "q⊗1", "g", "g⊗1⊗1"):
        with pytest.raises(io.FormatError):
            io.parse_tensor(bad, labels)


def test_format_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(io.FormatError):
        io.read_json(str(p))
    with pytest.raises(io.FormatError):
        io.hopf_from_dict({"dim": 1})
    with pytest.raises(io.FormatError):
        io.tensor_from_json((2, 2), [[0, "1"]])


def test_tensor_json_round_trip():
    u = TensorElement((2, 3), {(0, 2): "1/3", (1, 0): -2})
    assert io.tensor_from_json((2, 3), json.loads(json.dumps(io.tensor_to_json(u)))) == u

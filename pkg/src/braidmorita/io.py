"""JSON files and the label syntax for tensor elements.

Scalars are written as strings ``"p/q"`` (``"p"`` when q = 1).  Index lists
are 0-based; omitted structure constants are zero.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from typing import Sequence

from .groups import GroupTable
from .hopf import AlgebraData, HopfData
from .linalg import Matrix, TensorElement, format_scalar, to_scalar
from .comodule import ComoduleAlgebraData

SCHEMA_VERSION = 1


class FormatError(ValueError):
    pass


def _s(c) -> str:
    return format_scalar(Fraction(c))


def algebra_to_dict(A: AlgebraData) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.labels),
        "unit": [_s(c) for c in A.unit],
        "mult": [[i, j, k, _s(c)] for i, j, k, c in A.mult_entries()],
    }


def hopf_to_dict(H: HopfData, R: TensorElement | None = None) -> dict:
    d = algebra_to_dict(H)
    d["comult"] = [[i, j, k, _s(c)] for i, j, k, c in H.comult_entries()]
    d["counit"] = [_s(c) for c in H.counit]
    d["antipode"] = [[i, j, _s(c)] for i, j, c in H.antipode.items()]
    if getattr(H, "group", None) is not None:
        d["group"] = H.group.to_dict()
    if R is not None:
        d["r_matrix"] = tensor_to_json(R)
    return d


def tensor_to_json(u: TensorElement) -> list:
    return [[*k, _s(c)] for k, c in sorted(u.coeffs.items())]


def tensor_from_json(dims: Sequence[int], entries) -> TensorElement:
    coeffs = {}
    for e in entries:
        *idx, c = e
        key = tuple(int(i) for i in idx)
        if len(key) != len(dims):
            raise FormatError(f"tensor entry {e} does not have {len(dims)} indices")
        coeffs[key] = coeffs.get(key, 0) + to_scalar(c)
    return TensorElement(tuple(dims), coeffs)


def _require(d: dict, *keys):
    missing = [k for k in keys if k not in d]
    if missing:
        raise FormatError(f"missing field(s): {', '.join(missing)}")


def algebra_from_dict(d: dict) -> AlgebraData:
    _require(d, "dim", "unit", "mult")
    return AlgebraData(int(d["dim"]), [tuple(e) for e in d["mult"]], d["unit"], d.get("basis"))


def hopf_from_dict(d: dict) -> tuple[HopfData, TensorElement | None]:
    _require(d, "dim", "unit", "mult", "comult", "counit", "antipode")
    H = HopfData(int(d["dim"]), [tuple(e) for e in d["mult"]], d["unit"],
                 [tuple(e) for e in d["comult"]], d["counit"],
                 [tuple(e) for e in d["antipode"]], d.get("basis"))
    if "group" in d:
        H.group = GroupTable.from_dict(d["group"])
    R = tensor_from_json((H.dim, H.dim), d["r_matrix"]) if "r_matrix" in d else None
    return H, R


def comodule_to_dict(C: ComoduleAlgebraData, host_ref: str | None = None, R=None) -> dict:
    d = {
        "name": C.name,
        "host": host_ref if host_ref is not None else hopf_to_dict(C.H, R),
        "algebra": algebra_to_dict(C.B),
        "coaction": [[j, i, k, _s(c)] for j, i, k, c in C.coaction_entries()],
    }
    if C.inclusion is not None:
        d["inclusion"] = [[_s(x) for x in C.inclusion.column(j)] for j in range(C.dim)]
    if C.subgroup is not None:
        d["subgroup"] = list(C.subgroup)
    return d


def comodule_from_dict(d: dict, base_dir: str = ".", host: HopfData | None = None):
    """Returns (ComoduleAlgebraData, R from the host file or None)."""
    _require(d, "algebra", "coaction")
    R = None
    if host is None:
        _require(d, "host")
        ref = d["host"]
        if isinstance(ref, str):
            host, R = load_hopf(os.path.join(base_dir, ref))
        else:
            host, R = hopf_from_dict(ref)
    B = algebra_from_dict(d["algebra"])
    inc = None
    if "inclusion" in d:
        inc = Matrix.from_columns([[to_scalar(x) for x in col] for col in d["inclusion"]])
    sub = tuple(d["subgroup"]) if "subgroup" in d else None
    C = ComoduleAlgebraData(host, B, [tuple(e) for e in d["coaction"]], d.get("name", "B"), inc, sub)
    return C, R


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def load_hopf(path: str):
    return hopf_from_dict(read_json(path))


def load_comodule(path: str, host: HopfData | None = None):
    return comodule_from_dict(read_json(path), os.path.dirname(os.path.abspath(path)), host)


def load_group(path: str) -> GroupTable:
    return GroupTable.from_dict(read_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)


# ---------------------------------------------------------------------------
# label syntax "g⊗1 + 1/2 x⊗gx"

_TENSOR_SIGNS = ("⊗", "(x)")


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms, depth, cur, sign = [], 0, "", 1
    prev = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev != "^":
            if cur.strip():
                terms.append((sign, cur.strip()))
            elif ch == "-":
                sign = -sign
                prev = ch
                continue
            cur, sign = "", (1 if ch == "+" else -1)
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def _split_legs(term: str) -> list[str]:
    for sep in _TENSOR_SIGNS:
        term = term.replace(sep, "\x00")
    return [p.strip() for p in term.split("\x00")]


def parse_tensor(text: str, labels: Sequence[Sequence[str]],
                 units: Sequence[int | None] | None = None) -> TensorElement:
    """Parse e.g. ``"g⊗1 + x⊗gx"`` or ``"1/2 1(x)g - 3*gx⊗x"`` against basis labels.

    ``units[k]`` is the basis index of the unit in leg k (if the unit is a basis
    vector); "1" then names it even when the label is something else, e.g. "e".
    """
    dims = tuple(len(l) for l in labels)
    index = [{lab: i for i, lab in enumerate(ls)} for ls in labels]
    for k, u in enumerate(units or ()):
        if u is not None:
            index[k].setdefault("1", u)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    if not text.strip():
        raise FormatError("empty tensor expression")
    for sign, term in _split_terms(text):
        coef = Fraction(1)
        legs = _split_legs(term)
        if len(legs) != len(dims) or not all(l in index[k] for k, l in enumerate(legs)):
            m = re.match(r"^(\d+(?:/\d+)?)\s*\*?\s*(.+)$", term)
            if m and len(_split_legs(m.group(2))) == len(dims):
                coef = Fraction(m.group(1))
                legs = _split_legs(m.group(2))
        if len(legs) != len(dims):
            raise FormatError(f"term {term!r} needs {len(dims)} tensor legs")
        key = []
        for k, lab in enumerate(legs):
            if lab not in index[k]:
                raise FormatError(f"unknown basis label {lab!r} in leg {k + 1}; have {list(labels[k])}")
            key.append(index[k][lab])
        key = tuple(key)
        coeffs[key] = coeffs.get(key, 0) + sign * coef
    return TensorElement(dims, coeffs)


def unit_index(A) -> int | None:
    """Basis index of 1_A when the unit is a single basis vector."""
    nz = [i for i, c in enumerate(A.unit) if c]
    return nz[0] if len(nz) == 1 and A.unit[nz[0]] == 1 else None


def format_tensor(u: TensorElement, labels: Sequence[Sequence[str]]) -> str:
    if not u.coeffs:
        return "0"
    parts = []
    for k, c in sorted(u.coeffs.items()):
        mono = "⊗".join(labels[leg][i] for leg, i in enumerate(k))
        a = abs(c)
        body = mono if a == 1 else f"{format_scalar(a)} {mono}"
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sg, body in parts[1:]:
        s += f" {sg} {body}"
    return s

"""Command-line front end: ``braidmorita <command> <subcommand> [options]``.

Inputs come either from JSON files (``--hopf``, ``--comodule``) or from the
built-in catalog (``--catalog H4_l0 --coideal k1+kg``).  ``--json`` switches
every command to a machine-readable document; exit status is 0 iff ok.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import catalog
from .braidrep import BraidWord, rep_type_a, rep_type_bc, rep_type_d, signature_json, signature_of, trace_word, verify_relations
from .classify import Status, distinguish, pair_conjugacy_classes, solve_k
from .comodule import KMatrix, check_comodule_algebra, check_k_matrix
from .groups import builtin_group, enumerate_subgroups
from .hopf import check_algebra, check_hopf
from .io import (
    SCHEMA_VERSION,
    FormatError,
    algebra_from_dict,
    dumps,
    format_tensor,
    load_comodule,
    load_group,
    load_hopf,
    parse_tensor,
    read_json,
    unit_index,
)
from .linalg import format_scalar
from .quasitriangular import ConstructionFailed, RMatrix, check_r_matrix


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    ok: bool
    payload: dict
    summary: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "ok" if self.ok else "fail"


# ---------------------------------------------------------------------------
# input resolution


def _host(args, need_r=True):
    """(H, R or None, catalog entry or None) from --catalog or --hopf (plus optional --r)."""
    entry = None
    if getattr(args, "catalog", None):
        entry = catalog.load(args.catalog)
        H, R = entry.H, entry.R.element
    elif getattr(args, "hopf", None):
        H, R = load_hopf(args.hopf)
    elif getattr(args, "comodule", None):
        C, R = load_comodule(args.comodule)
        H = C.H
    else:
        raise UsageError("give --hopf FILE or --catalog NAME")
    if getattr(args, "r", None):
        R = parse_tensor(args.r, [H.labels, H.labels], [unit_index(H)] * 2)
    if need_r and R is None:
        raise UsageError("no R-matrix: add \"r_matrix\" to the Hopf file or pass --r")
    return H, R, entry


def _rmatrix(H, R) -> RMatrix:
    rep = check_r_matrix(H, R)
    if not rep.passed:
        raise UsageError(f"R-matrix fails: {', '.join(rep.failed())}")
    return rep.value


def _comodule(args, H, entry, which=""):
    cname = getattr(args, f"coideal{which}", None)
    cfile = getattr(args, f"comodule{which}", None)
    if cname:
        if entry is None:
            raise UsageError("--coideal needs --catalog")
        return entry.coideal(cname).C
    if cfile:
        return load_comodule(cfile, host=H)[0]
    raise UsageError(f"give --comodule{which} FILE or --coideal{which} NAME")


def _kmatrix(args, H, C, which=""):
    text = getattr(args, f"k{which}", None)
    if not text:
        raise UsageError(f"give --k{which} EXPR, e.g. \"g⊗1\"")
    return parse_tensor(text, [H.labels, C.B.labels], [unit_index(H), unit_index(C.B)])


def _report(rep) -> tuple[dict, list[str]]:
    return rep.to_dict(), rep.summary().splitlines()


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> CommandResult:
    what = args.what
    if what == "algebra":
        if args.algebra:
            A = algebra_from_dict(read_json(args.algebra))
        else:
            A, _, _ = _host(args, need_r=False)
        rep = check_algebra(A)
    elif what == "hopf":
        H, _, _ = _host(args, need_r=False)
        rep = check_hopf(H)
    elif what == "rmatrix":
        H, R, _ = _host(args)
        rep = check_r_matrix(H, R)
    elif what == "comodule":
        H, _, entry = _host(args, need_r=False)
        rep = check_comodule_algebra(_comodule(args, H, entry))
    else:
        H, R, entry = _host(args)
        C = _comodule(args, H, entry)
        rep = check_k_matrix(H, _rmatrix(H, R), C, _kmatrix(args, H, C))
    payload, summary = _report(rep)
    return CommandResult(rep.passed, payload, summary)


def _rep(args):
    H, R, entry = _host(args)
    Rm = _rmatrix(H, R)
    t = args.type.upper()
    if t == "A":
        return rep_type_a(H, Rm, args.n), H
    C = _comodule(args, H, entry)
    K = KMatrix(C, _kmatrix(args, H, C))
    builder = rep_type_bc if t == "BC" else rep_type_d
    return builder(H, Rm, C, K, args.n), H


def cmd_braidrep(args) -> CommandResult:
    rep, _ = _rep(args)
    head = {"type": rep.pres.type, "n": rep.pres.n, "dim": rep.dim}
    if args.action == "build":
        payload = dict(head, generators={g: {"nnz": rep.gens[g].nnz()} for g in rep.pres.generators},
                       relations=rep.pres.relation_strings())
        lines = [f"type {rep.pres.type}_{rep.pres.n} on a {rep.dim}-dimensional carrier"]
        lines += [f"  relation {r}" for r in rep.pres.relation_strings()]
        return CommandResult(True, payload, lines)
    if args.action == "check":
        res = verify_relations(rep)
        payload = dict(head, relations_hold=res.ok, failing=res.failing)
        msg = "all relations hold" if res.ok else f"relation fails: {res.failing}"
        return CommandResult(res.ok, payload, [msg])
    if args.action == "trace":
        w = BraidWord.parse(args.word or "")
        tr = trace_word(rep, w)
        return CommandResult(True, dict(head, word=str(w), trace=format_scalar(tr)),
                             [f"trace({w or '1'}) = {format_scalar(tr)}"])
    sig = signature_of(rep, args.maxlen)
    return CommandResult(True, dict(head, maxlen=args.maxlen, signature=signature_json(sig)),
                         [f"{w or '1'}: {format_scalar(t)}" for w, t in sig])


def cmd_classify(args) -> CommandResult:
    H, R, entry = _host(args)
    C = _comodule(args, H, entry)
    rep = solve_k(H, _rmatrix(H, R), C)
    payload = rep.to_dict(H, C)
    lines = [f"{rep.status.value}: " + ", ".join(payload["solutions"]) if payload["solutions"] else f"{rep.status.value}: no K-matrices"]
    for fam in payload["families"]:
        lines.append(f"  family {fam['element']} det = {fam['determinant']}")
    for sysm in payload["residual"]:
        lines.append(f"  residual system: {sysm}")
    return CommandResult(rep.status != Status.RESIDUAL, payload, lines)


def _group(args):
    if args.group_file:
        return load_group(args.group_file)
    if args.group:
        return builtin_group(args.group)
    raise UsageError("give --group NAME or --group-file FILE")


def cmd_group(args) -> CommandResult:
    G = _group(args)
    if args.action == "subgroups":
        subs = enumerate_subgroups(G)
        payload = {"group": G.name, "order": G.order, "subgroups": [G.label_set(L) for L in subs]}
        return CommandResult(True, payload, ["{" + ", ".join(G.label_set(L)) + "}" for L in subs])
    u = args.u if args.u is not None else G.labels[G.identity]
    classes = pair_conjugacy_classes(G, u)
    payload = {
        "group": G.name,
        "u": u,
        "classes": [
            {"representative": {"L": G.label_set(c.representative[0]), "a": G.labels[c.representative[1]]},
             "members": [{"L": Ls, "a": a} for Ls, a in c.labelled(G)]}
            for c in classes
        ],
        "pairs": sum(len(c.members) for c in classes),
    }
    lines = [f"{len(classes)} classes, {payload['pairs']} pairs"]
    for c in classes:
        lines.append("  " + ", ".join(f"({{{','.join(Ls)}}}, {a}⊗1)" for Ls, a in c.labelled(G)))
    return CommandResult(True, payload, lines)


def cmd_distinguish(args) -> CommandResult:
    H, R, entry = _host(args)
    Rm = _rmatrix(H, R)
    C1 = _comodule(args, H, entry)
    C2 = _comodule(args, H, entry, "2")
    v = distinguish(H, Rm, (C1, _kmatrix(args, H, C1)), (C2, _kmatrix(args, H, C2, "2")), args.n, args.maxlen)
    extra = ", ".join(f"{k}={' vs '.join(map(str, x)) if isinstance(x, list) else x}" for k, x in v.detail.items())
    return CommandResult(True, v.to_dict(), [str(v) + (f" [{extra}]" if extra else "")])


def cmd_catalog(args) -> CommandResult:
    if args.action == "list":
        names = catalog.entry_names()
        return CommandResult(True, {"entries": names}, names)
    entry = catalog.load(args.name)
    docs = catalog.export(entry, args.out)
    if args.out:
        return CommandResult(True, {"written": sorted(docs)}, [f"wrote {f}" for f in sorted(docs)])
    return CommandResult(True, docs, [dumps(docs)])


# ---------------------------------------------------------------------------


def _host_opts(p, comodule=True, k=False, second=False):
    p.add_argument("--hopf", help="Hopf algebra JSON (may contain r_matrix)")
    p.add_argument("--catalog", help="built-in catalog entry, e.g. H4_l0 or S3_e")
    p.add_argument("--r", help="R-matrix in label syntax, overriding the file")
    if comodule:
        p.add_argument("--comodule", help="comodule algebra JSON")
        p.add_argument("--coideal", help="coideal name within --catalog")
    if k:
        p.add_argument("--k", help='K-matrix in label syntax, e.g. "g⊗1"')
    if second:
        p.add_argument("--comodule2")
        p.add_argument("--coideal2")
        p.add_argument("--k2")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidmorita", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="emit JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def leaf(p):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
        return p

    v = leaf(sub.add_parser("verify", help="check axioms"))
    v.add_argument("what", choices=["algebra", "hopf", "rmatrix", "comodule", "kmatrix"])
    v.add_argument("--algebra", help="algebra JSON (for 'verify algebra')")
    _host_opts(v, k=True)
    v.set_defaults(func=cmd_verify)

    b = leaf(sub.add_parser("braidrep", help="braid group representations"))
    b.add_argument("action", choices=["build", "check", "trace", "signature"])
    b.add_argument("--type", default="BC", choices=["A", "BC", "D", "a", "bc", "d"])
    b.add_argument("--n", type=int, default=2)
    b.add_argument("--maxlen", type=int, default=1)
    b.add_argument("--word", default="")
    _host_opts(b, k=True)
    b.set_defaults(func=cmd_braidrep)

    c = leaf(sub.add_parser("classify", help="solve for K-matrices"))
    c.add_argument("action", choices=["kmatrices"])
    _host_opts(c)
    c.set_defaults(func=cmd_classify)

    g = leaf(sub.add_parser("group", help="finite group utilities"))
    g.add_argument("action", choices=["subgroups", "classify"])
    g.add_argument("--group", help="builtin group: C2, C3, C4, C2xC2, S3")
    g.add_argument("--group-file", help="GroupTable JSON")
    g.add_argument("--u", help="central involution label (default: identity)")
    g.set_defaults(func=cmd_group)

    d = leaf(sub.add_parser("distinguish", help="compare two (B, K) pairs"))
    _host_opts(d, k=True, second=True)
    d.add_argument("--n", type=int, default=2)
    d.add_argument("--maxlen", type=int, default=1)
    d.set_defaults(func=cmd_distinguish)

    k = leaf(sub.add_parser("catalog", help="built-in examples"))
    k.add_argument("action", choices=["list", "export"])
    k.add_argument("name", nargs="?")
    k.add_argument("--out", help="directory for exported files")
    k.set_defaults(func=cmd_catalog)
    return ap


def run(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    if args.command == "catalog" and args.action == "export" and not args.name:
        raise UsageError("catalog export needs an entry name")
    return args.func(args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = args.json
    try:
        if args.command == "catalog" and args.action == "export" and not args.name:
            raise UsageError("catalog export needs an entry name")
        res = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FormatError, KeyError, ValueError, ArithmeticError, OSError, ConstructionFailed) as exc:
        name = type(exc).__name__
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if as_json:
            print(dumps({"schema": SCHEMA_VERSION, "command": args.command, "status": "fail",
                         "error": {"name": name, "message": str(msg)}}))
        else:
            print(f"error: {name}: {msg}", file=sys.stderr)
        return 1
    if as_json:
        print(dumps({"schema": SCHEMA_VERSION, "command": args.command, "status": res.status,
                     "result": res.payload}))
    else:
        for line in res.summary:
            print(line)
    return 0 if res.ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Every subcommand builds a report (a JSON-ready dict plus text lines) and
returns an exit code: 0 when every checked property holds, 1 when one fails,
2 on usage, parse or input validation errors. ``--format structured`` prints
the report as one JSON document carrying ``format_version``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from hilbext import bits
from hilbext.algebra import (
    CLASSES,
    SIG_HIL,
    Homomorphism,
    check_axioms,
    check_homomorphism,
    enumerate_algebras,
    enumerate_implicative_semilattices,
    with_meet,
)
from hilbext.config import guards
from hilbext.documents import (
    declared_class,
    dump,
    emit_algebra,
    parse_algebra,
    parse_map,
    parse_poset,
    poset_labels,
    read,
)
from hilbext.errors import GuardExceeded, HilbextError, SoundnessError
from hilbext.extension import build_extension, factorizations, lift_hom, universal_factor
from hilbext.filters import all_filters, is_irreducible, spectrum
from hilbext.frontal import (
    OPERATORS,
    FrontalAlgebra,
    classify,
    coderivative,
    extend_frontal,
    poset_successor_by_search,
    search_operator,
)
from hilbext.verify import verify

FORMAT_VERSION = 1
SYMBOL = {"succ": "S", "gamma": "γ", "gabbay": "G"}


class UsageError(HilbextError):
    pass


@dataclass
class Result:
    command: str
    ok: bool = True
    data: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)

    def fail(self, line=None):
        self.ok = False
        if line:
            self.lines.append(line)


def _mapping(H, values, target=None):
    target = H if target is None else target
    return "(" + ", ".join(f"{H.label(a)}↦{target.label(b)}" for a, b in enumerate(values)) + ")"


def _table_lines(A, table, sym):
    w = max(len(A.label(i)) for i in range(A.n))
    head = " " * w + f" {sym} | " + " ".join(A.label(j).rjust(w) for j in range(A.n))
    out = [head, "-" * len(head)]
    for i in range(A.n):
        out.append(A.label(i).rjust(w) + " " * (len(sym) + 2) + "| " + " ".join(A.label(table[i][j]).rjust(w) for j in range(A.n)))
    return out


def _load(args, path, res=None, **kw):
    kw.setdefault("allow_invalid_tau", args.allow_invalid_tau)
    doc = parse_algebra(read(path), **kw)
    if res is not None:
        for w in doc.warnings:
            res.data.setdefault("warnings", []).append(w)
            res.lines.append(f"warning: {w}")
    return doc


# ---------------------------------------------------------------------------


def cmd_check(args, res):
    doc = _load(args, args.file, res, validate=False)
    H = doc.algebra
    cls = args.cls or declared_class(H)
    report = check_axioms(H, cls)
    res.data["class"] = cls
    res.data["axioms"] = report.as_dict()
    res.lines.append(report.summary())
    res.ok = report.ok
    if doc.tau is not None:
        fr = classify(H, doc.tau)["frontal"] if report.ok else None
        if fr is not None:
            res.data["tau"] = fr.as_dict()
            res.lines.append(fr.summary())
            res.ok = res.ok and fr.ok


def cmd_spectrum(args, res):
    H = _load(args, args.file, res).algebra
    X = spectrum(H)
    labels = [H.label(a) for a in range(H.n)]
    fils = all_filters(H)
    res.data["filters"] = [bits.members(F) for F in fils]
    res.data["irreducible"] = [bits.members(P) for P in X.filters]
    res.data["hasse"] = [list(e) for e in X.order.hasse_edges()]
    res.lines.append(f"filters ({len(fils)}):")
    for F in fils:
        mark = " irreducible" if is_irreducible(H, F) else ""
        res.lines.append(f"  {bits.fmt(F, labels)}{mark}")
    res.lines.append(f"X(H) ({X.size} points):")
    for i, P in enumerate(X.filters):
        res.lines.append(f"  P{i} = {bits.fmt(P, labels)}")
    res.lines.append("inclusions (covers):")
    for i, j in X.order.hasse_edges():
        res.lines.append(f"  P{i} < P{j}")


def cmd_extend(args, res):
    doc = _load(args, args.file, res)
    H = doc.algebra
    E = build_extension(H)
    A = E.algebra
    pts = [f"P{i}" for i in range(E.spectrum.size)]
    res.data["spectrum"] = [bits.members(P) for P in E.spectrum.filters]
    res.data["elements"] = [
        {"index": i, "label": A.label(i), "upset": bits.members(U), "generators": list(E.gens[i])}
        for i, U in enumerate(E.elements)
    ]
    res.data["phi"] = list(E.phi_index)
    res.data["algebra"] = emit_algebra(A)
    res.lines.append(f"L(H): {E.size} elements over {E.spectrum.size} spectrum points")
    for i, U in enumerate(E.elements):
        tag = "  (one)" if i == E.one else "  (zero)" if i == E.zero else ""
        res.lines.append(f"  [{i}] {A.label(i) or '-'} = {bits.fmt(U, pts)}{tag}")
    res.lines.append("phi: " + _mapping(H, E.phi_index, A))
    res.lines.extend(_table_lines(A, A.imp, "->"))
    res.lines.extend(_table_lines(A, A.meet, "^ "))
    if doc.tau is not None and not doc.warnings:
        ext = extend_frontal(E, FrontalAlgebra(H, doc.tau))
        res.data["tau_extended"] = list(ext)
        res.lines.append("tau on L(H): " + _mapping(A, ext))


def _hom(path, H, A):
    m = parse_map(read(path))
    if len(m) != H.n or any(not 0 <= x < A.n for x in m):
        raise UsageError(f"map must have {H.n} entries in 0..{A.n - 1}")
    return Homomorphism(H, A, m, SIG_HIL)


def cmd_lift(args, res):
    H1, H2 = _load(args, args.file1, res).algebra, _load(args, args.file2, res).algebra
    h = _hom(args.hom, H1, H2.reduct())
    if not check_homomorphism(h):
        res.fail("the map does not preserve -> and 1")
        return
    E1, E2 = build_extension(H1), build_extension(H2)
    f = lift_hom(Homomorphism(H1, H2, h.map, SIG_HIL), E1, E2)
    res.data["lift"] = list(f.map)
    res.lines.append("lift: " + _mapping(E1.algebra, f.map, E2.algebra))


def cmd_factor(args, res):
    H = _load(args, args.file, res).algebra
    A = _load(args, args.into, res).algebra
    if A.meet is None:
        A = with_meet(A)
        if A is None:
            raise UsageError("the target is not an implicative semilattice")
    h = _hom(args.hom, H, A.reduct())
    if not check_homomorphism(h):
        res.fail("the map does not preserve -> and 1")
        return
    E = build_extension(H)
    f = universal_factor(H, A, Homomorphism(H, A, h.map, SIG_HIL), E)
    res.data["factor"] = list(f.map)
    res.lines.append("factor: " + _mapping(E.algebra, f.map, A))
    if A.n**E.size <= guards().max_maps:
        count = len(factorizations(H, A, h, E))
        res.data["factorizations"] = count
        res.lines.append(f"factorizations found by exhaustive search: {count}")
        if count != 1:
            res.fail("the factorization is not unique")


def cmd_frontal_find(args, res):
    H = _load(args, args.file, res).algebra
    if args.op in ("gamma", "gabbay") and H.zero is None:
        raise UsageError(f"{args.op} needs a bounded algebra (declare zero)")
    found = search_operator(H, args.op)
    res.data["op"] = args.op
    res.data["exists"] = found.exists
    if found.exists:
        res.data["values"] = list(found.values)
        res.lines.append(f"{SYMBOL[args.op]} = {_mapping(H, found.values)}")
    else:
        res.data["missing"] = {str(a): list(m) for a, m in sorted(found.missing.items())}
        res.lines.append(f"no {args.op}: the candidate set has no minimum at")
        for a, mins in sorted(found.missing.items()):
            names = ", ".join(H.label(b) for b in mins)
            res.lines.append(f"  {H.label(a)} (minimal elements: {names})")


def cmd_frontal_classify(args, res):
    doc = _load(args, args.file, allow_invalid_tau=True)
    if doc.tau is None:
        raise UsageError("the document has no tau")
    reports = classify(doc.algebra, doc.tau)
    res.data["reports"] = {k: r.as_dict() for k, r in reports.items()}
    res.data["warnings"] = list(doc.warnings)
    res.lines.append("tau = " + _mapping(doc.algebra, doc.tau))
    for r in reports.values():
        res.lines.append(r.summary(limit=3))
    res.ok = reports["frontal"].ok


def _parse_upset(text):
    try:
        return bits.from_iter(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--upset expects comma-separated indices, got {text!r}") from None


def cmd_poset_ops(args, res):
    text = read(args.file)
    P = parse_poset(text)
    labels = poset_labels(text) or [str(i) for i in range(P.n)]
    if args.upset is not None:
        U = _parse_upset(args.upset)
        if U & ~P.full or not P.is_upset(U):
            raise UsageError(f"{bits.fmt(U, labels)} is not an upset")
        ups = [U]
    else:
        bound = guards().max_filter_scan
        if P.n > bound:
            raise GuardExceeded("exhaustive upset scan", P.n, bound)
        ups = P.upsets()
    everything = P.upsets() if P.n <= guards().max_filter_scan else None
    rows = []
    for U in ups:
        S = coderivative(P, U)
        least = poset_successor_by_search(P, U, everything) if everything is not None else None
        agree = least is None or least == S
        rows.append({"upset": bits.members(U), "successor": bits.members(S), "agrees": agree})
        line = f"{bits.fmt(U, labels)} -> {bits.fmt(S, labels)}"
        res.lines.append(line if agree else line + f"  MISMATCH: search gives {bits.fmt(least, labels)}")
        if not agree:
            res.ok = False
    res.data["upsets"] = rows


def cmd_search(args, res):
    cls = args.cls
    if args.without in ("gamma", "gabbay") and cls in ("hilbert", "is"):
        raise UsageError(f"--without {args.without} needs a bounded class")
    if cls in ("is", "bounded_is"):
        algs = enumerate_implicative_semilattices(args.size, cls == "bounded_is", args.max_size)
    elif cls in ("hilbert", "bounded_hilbert"):
        algs = enumerate_algebras(args.size, cls, args.max_size)
    else:
        raise UsageError(f"search does not support class {cls}")
    found = []
    stream = args.format == "text"
    for H in algs:
        if args.without is not None:
            s = search_operator(H, args.without)
            if s.exists:
                continue
        found.append(emit_algebra(H))
        if stream:
            print(dump(found[-1]), file=args.out, flush=True)
    res.data["class"] = cls
    res.data["size"] = args.size
    res.data["without"] = args.without
    res.data["count"] = len(found)
    res.data["algebras"] = found
    res.lines.append(f"# {len(found)} algebras")


def cmd_verify(args, res):
    doc = _load(args, args.file, res)
    checks = verify(doc.algebra, doc.tau)
    res.data["checks"] = [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
    for c in checks:
        tail = f" ({c.detail})" if c.detail else ""
        res.lines.append(f"{'PASS' if c.ok else 'FAIL'} {c.name}{tail}")
    res.ok = all(c.ok for c in checks)


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="hilbext", description="Finite Hilbert algebras and their implicative semilattice extensions.")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument(
        "--allow-invalid-tau", action="store_true", help="load a non-frontal tau with a warning instead of failing"
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="check the axioms of a class")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", choices=CLASSES)
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("spectrum", help="filters and the irreducible spectrum")
    s.add_argument("file")
    s.set_defaults(run=cmd_spectrum)

    s = sub.add_parser("extend", help="build L(H)")
    s.add_argument("file")
    s.set_defaults(run=cmd_extend)

    s = sub.add_parser("lift", help="lift a homomorphism to the extensions")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--hom", required=True)
    s.set_defaults(run=cmd_lift)

    s = sub.add_parser("factor", help="factor a homomorphism into an IS through L(H)")
    s.add_argument("file")
    s.add_argument("--into", required=True)
    s.add_argument("--hom", required=True)
    s.set_defaults(run=cmd_factor)

    fr = sub.add_parser("frontal", help="frontal operators").add_subparsers(
        dest="frontal_command", required=True, parser_class=_Parser
    )
    s = fr.add_parser("find", help="the minimum-defined operator, if any")
    s.add_argument("file")
    s.add_argument("--op", choices=OPERATORS, required=True)
    s.set_defaults(run=cmd_frontal_find)
    s = fr.add_parser("classify", help="which operator axioms tau satisfies")
    s.add_argument("file")
    s.set_defaults(run=cmd_frontal_classify)

    po = sub.add_parser("poset", help="operators on poset upsets").add_subparsers(
        dest="poset_command", required=True, parser_class=_Parser
    )
    s = po.add_parser("ops", help="co-derivative and successor on upsets")
    s.add_argument("file")
    s.add_argument("--upset", help="comma-separated point indices; default is every upset")
    s.set_defaults(run=cmd_poset_ops)

    s = sub.add_parser("search", help="enumerate algebras up to isomorphism")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=CLASSES, default="hilbert")
    s.add_argument("--without", choices=OPERATORS)
    s.add_argument("--max-size", type=int, default=None)
    s.set_defaults(run=cmd_search)

    s = sub.add_parser("verify", help="run the invariant suite on one algebra")
    s.add_argument("file")
    s.set_defaults(run=cmd_verify)
    return p


def _command_name(args):
    name = args.command
    for extra in ("frontal_command", "poset_command"):
        if getattr(args, extra, None):
            name += " " + getattr(args, extra)
    return name


def run_command(argv, out=None, err=None):
    """Run one command; returns ``(exit_code, result)`` where ``result`` may be ``None``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    fmt = "structured" if "structured" in argv else "text"
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit_error(exc, 2, fmt, out, err)
        return 2, None
    res = Result(_command_name(args))
    args.out = out
    try:
        args.run(args, res)
    except SoundnessError as exc:
        _emit_error(exc, 1, args.format, out, err)
        return 1, res
    except (HilbextError, OSError, ValueError) as exc:
        _emit_error(exc, 2, args.format, out, err)
        return 2, res
    code = 0 if res.ok else 1
    if args.format == "structured":
        doc = {"format_version": FORMAT_VERSION, "command": res.command, "ok": res.ok, **res.data}
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        for line in res.lines:
            print(line, file=out)
    return code, res


def _emit_error(exc, code, fmt, out, err):
    kind = "usage" if code == 2 else "failure"
    if fmt == "structured":
        doc = {"format_version": FORMAT_VERSION, "ok": False, "error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        print(f"hilbext: {exc}", file=err)


def main(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end.

Code files are plain text::

    # comment
    q 3
    kind generator          (or: kind parity)
    1 0 1 2 ...
    0 1 1 1 ...

Exit status: 0 success / all checks passed, 1 a consistency check failed (or the
detectors disagree), 2 an operational error (bad file, cap exceeded, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import code as codes
from . import matroid as mat
from . import srres
from .errors import CwCodeError, NotAPrimePower, ParseError, RaggedMatrix, TooLarge, ValueOutOfField
from .gfield import field_new

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class CodeFile:
    q: int
    kind: str
    rows: tuple

    def to_code(self):
        builder = codes.LinearCode.from_generator if self.kind == "generator" else codes.LinearCode.from_parity_check
        n = len(self.rows[0]) if self.rows else None
        return builder(self.q, self.rows, n=n)


def parse_code_file(text: str) -> CodeFile:
    q = kind = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if q is None:
            if words[0] != "q" or len(words) != 2:
                raise ParseError("expected 'q <int>'", lineno)
            try:
                q = int(words[1])
                field_new(q)
            except ValueError as exc:
                if isinstance(exc, (NotAPrimePower, TooLarge)):
                    raise ParseError(f"{type(exc).__name__}: {exc}", lineno) from exc
                raise ParseError(f"bad field order {words[1]!r}", lineno) from exc
        elif kind is None:
            if words[0] != "kind" or len(words) != 2 or words[1] not in ("generator", "parity"):
                raise ParseError("expected 'kind generator' or 'kind parity'", lineno)
            kind = words[1]
        else:
            try:
                row = tuple(int(w) for w in words)
            except ValueError as exc:
                raise ParseError(f"non-integer entry in {line!r}", lineno) from exc
            if rows and len(row) != len(rows[0]):
                raise RaggedMatrix(f"row has {len(row)} entries, expected {len(rows[0])}", lineno)
            bad = [v for v in row if not 0 <= v < q]
            if bad:
                raise ValueOutOfField(f"line {lineno}: entry {bad[0]} not in [0, {q})")
            rows.append(row)
    if q is None or kind is None:
        raise ParseError("missing 'q' or 'kind' directive")
    if not rows:
        raise ParseError("matrix has no rows")
    return CodeFile(q, kind, tuple(rows))


def format_code_file(c: codes.LinearCode, kind="generator", comment=None) -> str:
    m = c.generator if kind == "generator" else c.parity_check
    lines = [f"# {comment}"] if comment else []
    lines += [f"q {c.q}", f"kind {kind}"]
    lines += [" ".join(str(v) for v in row) for row in m.tolist()]
    return "\n".join(lines) + "\n"


def _subset_str(s):
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def _sorted_subsets(sets):
    return sorted((sorted(s) for s in sets), key=lambda s: (len(s), s))


def _load(path):
    with open(path, encoding="utf-8") as fh:
        return parse_code_file(fh.read()).to_code()


class Context:
    def __init__(self, args):
        self.args = args
        self.code = _load(args.file)
        self.max_n = args.max_n
        self.max_enum = args.max_enum
        self._matroid = self._table = None

    @property
    def matroid(self):
        if self._matroid is None:
            self._matroid = mat.from_parity_check(self.code.parity_check)
        return self._matroid

    def table(self, field=None):
        if field is not None:
            return srres.betti_table(self.matroid, field, self.max_n, self.code.k, self.code.q)
        if self._table is None:
            self._table = srres.betti_table(self.matroid, None, self.max_n, self.code.k, self.code.q)
        return self._table

    def hierarchy(self):
        return codes.weight_hierarchy(self.code, self.max_enum)

    def envelope(self, result):
        c = self.code
        return {"q": c.q, "n": c.n, "k": c.k, "result": result}


def _emit(ctx, as_json, text_lines, result):
    if as_json:
        print(json.dumps(ctx.envelope(result), sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- commands ------------------------------------------------------------------------

def cmd_hierarchy(args):
    ctx = Context(args)
    h = ctx.hierarchy()
    _emit(ctx, args.json, [str(h)], {"command": "hierarchy", "hierarchy": list(h)})
    return EXIT_OK


def cmd_betti(args):
    ctx = Context(args)
    field = field_new(args.field) if args.field else None
    t = ctx.table(field)
    if args.grading == "nn":
        items = [(i, sorted(s), b) for (i, s), b in t.sorted_entries()]
        lines = [f"beta[{i},{_subset_str(s)}] = {b}" for i, s, b in items]
        entries = [{"i": i, "sigma": s, "beta": b} for i, s, b in items]
    elif args.grading == "n":
        graded = srres.project_n_graded(t)
        lines = [f"beta[{i},{d}] = {b}" for (i, d), b in graded.items()]
        entries = [{"i": i, "d": d, "beta": b} for (i, d), b in graded.items()]
    else:
        ug = srres.project_ungraded(t)
        lines = [f"beta[{i}] = {b}" for i, b in ug.items()]
        entries = [{"i": i, "beta": b} for i, b in ug.items()]
    _emit(ctx, args.json, lines, {"command": "betti", "grading": args.grading, "entries": entries})
    return EXIT_OK


def cmd_resolution(args):
    ctx = Context(args)
    summary = srres.resolution_summary(ctx.table())
    _emit(ctx, args.json, [str(summary)], {
        "command": "resolution",
        "resolution": str(summary),
        "pure": summary.pure,
        "linear": summary.linear,
    })
    return EXIT_OK


def cmd_circuits(args):
    ctx = Context(args)
    sets = _sorted_subsets(mat.circuits(ctx.matroid, ctx.max_n))
    _emit(ctx, args.json, [_subset_str(s) for s in sets], {"command": "circuits", "sets": sets})
    return EXIT_OK


def cmd_nsets(args):
    ctx = Context(args)
    sets = _sorted_subsets(mat.n_sets(ctx.matroid, args.level, ctx.max_n))
    _emit(ctx, args.json, [_subset_str(s) for s in sets],
          {"command": "nsets", "level": args.level, "sets": sets})
    return EXIT_OK


def detector_verdicts(ctx, methods):
    """Map method name -> weight or None; methods that do not apply are left out."""
    c = ctx.code
    out = {}
    h = ctx.hierarchy() if {"prop1", "cor2"} & set(methods) else None
    for method in methods:
        if method == "direct":
            out[method] = codes.check_constant_weight_direct(c, ctx.max_enum)
        elif method == "prop1":
            if c.k >= 2:
                out[method] = codes.check_constant_weight_prop1(h, c.q)
        elif method == "cor2":
            out[method] = codes.check_constant_weight_cor2(h, c.q)
        elif method == "betti1":
            out[method] = srres.first_betti_cw_test(ctx.table(), c.k, c.q)
    return out


def cmd_check_cw(args):
    ctx = Context(args)
    methods = ["direct", "prop1", "cor2", "betti1"] if args.method == "all" else [args.method]
    verdicts = detector_verdicts(ctx, methods)
    lines = [
        f"{m}: " + (f"constant weight {w}" if w is not None else "not constant weight")
        for m, w in verdicts.items()
    ]
    status = EXIT_OK
    values = set(verdicts.values())
    if len(values) > 1:
        lines.append("detectors disagree")
        overall = None
        status = EXIT_FAIL
    else:
        overall = values.pop() if values else None
        lines.append(f"constant weight, weight {overall}" if overall is not None else "not constant weight")
    h = ctx.hierarchy()
    d_k, bound = h[-1], codes.griesmer_bound(h[0], ctx.code.k, ctx.code.q)
    met = d_k == bound
    lines.append(f"Griesmer bound: d_k = {d_k}, bound = {bound} ({'met' if met else 'not met'})")
    _emit(ctx, args.json, lines, {
        "command": "check-cw",
        "verdicts": verdicts,
        "agree": status == EXIT_OK,
        "constant_weight": overall is not None,
        "weight": overall,
        "griesmer": {"d_k": d_k, "bound": bound, "met": met},
    })
    return status


def verify_checks(ctx):
    """Run every applicable consistency check; returns a list of (name, passed or None, detail)."""
    c = ctx.code
    checks = []
    if c.k == 0:
        return [("hierarchy_vs_matroid", None, "zero code")]
    h = ctx.hierarchy()
    mw = mat.matroid_weights(ctx.matroid, ctx.max_n)
    checks.append(("hierarchy_vs_matroid", h == mw, f"code {h}, matroid {mw}"))

    d = codes.check_constant_weight_direct(c, ctx.max_enum)
    t = ctx.table()
    summary = srres.resolution_summary(t)
    if d is not None:
        predicted = codes.predicted_hierarchy_from_level(d, 1, c.k, c.q)
        constant = all(
            bin(mask).count("1") == predicted[i - 1]
            for i in range(1, c.k + 1)
            for mask in codes.subcode_support_masks(c, i, ctx.max_enum)
        )
        checks.append(("subcode_weight_constancy", constant and h == predicted, f"predicted {predicted}"))
        expected = srres.predict_cw_resolution(c.k, c.q, d)
        checks.append(("cw_resolution_table", summary == expected, f"expected {expected}"))
        pure = summary.pure and all(len(s) == h[i - 1] for (i, s) in t.entries if i)
        checks.append(("purity", pure, "every degree-i support has size d_i"))
    else:
        checks.append(("subcode_weight_constancy", None, "not constant weight"))
        checks.append(("cw_resolution_table", None, "not constant weight"))
        checks.append(("purity", None, "not constant weight"))

    checks.append(("gauss_identity", srres.gauss_identity_residual(c.k, c.q) == 0, f"k={c.k}, q={c.q}"))

    if summary.pure:
        top = len(codes.support(c))
        residual = srres.verify_alternating_sum(t, top)
        checks.append(("alternating_sum", residual == 0, f"residual {residual}"))
    else:
        checks.append(("alternating_sum", None, "resolution not pure"))

    verdicts = detector_verdicts(ctx, ["direct", "prop1", "cor2", "betti1"])
    checks.append(("detector_agreement", len(set(verdicts.values())) == 1, str(verdicts)))
    return checks


def cmd_verify(args):
    ctx = Context(args)
    checks = verify_checks(ctx)
    failed = any(ok is False for _, ok, _ in checks)
    label = {True: "PASS", False: "FAIL", None: "SKIP"}
    lines = [f"{label[ok]} {name}: {detail}" for name, ok, detail in checks]
    lines.append("verify: " + ("FAILED" if failed else "OK"))
    _emit(ctx, args.json, lines, {
        "command": "verify",
        "checks": [{"name": n, "status": label[ok], "detail": d} for n, ok, d in checks],
        "ok": not failed,
    })
    return EXIT_FAIL if failed else EXIT_OK


def cmd_gen(args):
    c = codes.gen_simplex(args.q, args.k, args.replicate)
    text = format_code_file(c, "generator", f"simplex code q={args.q} k={args.k} replicate={args.replicate}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cwcode", description="Weight hierarchies and Stanley-Reisner Betti numbers of linear codes.")
    parser.add_argument("--max-n", type=int, default=mat.DEFAULT_MAX_N, help="ground-set size cap")
    parser.add_argument("--max-enum", type=int, default=codes.DEFAULT_MAX_ENUM, help="cap on q^k for codeword sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    add("hierarchy", cmd_hierarchy, "weight hierarchy (d_1,...,d_k)")
    p = add("betti", cmd_betti, "Betti numbers of the Stanley-Reisner ring")
    p.add_argument("--grading", choices=["nn", "n", "total"], default="nn")
    p.add_argument("--field", type=int, default=None, help="homology field order (default 2)")
    add("resolution", cmd_resolution, "graded resolution shape")
    add("circuits", cmd_circuits, "circuits of the parity-check matroid")
    p = add("nsets", cmd_nsets, "minimal subsets of a given nullity")
    p.add_argument("--level", type=int, required=True)
    p = add("check-cw", cmd_check_cw, "constant weight detectors")
    p.add_argument("--method", choices=["direct", "prop1", "cor2", "betti1", "all"], default="all")
    add("verify", cmd_verify, "run the consistency checks")

    p = sub.add_parser("gen", help="generate a code file")
    p.add_argument("family", choices=["simplex"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--replicate", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CwCodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

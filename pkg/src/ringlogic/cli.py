"""Command-line front end.

    ringlogic ideals Z2xZ4
    ringlogic table Z4 --op sum
    ringlogic check Z8 --suite boolean
    ringlogic code Z2xZ4 --kind reduced --format json
    ringlogic classify 8
    ringlogic report table1 --max 8

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit status is 0
on success, 1 when a check fails or ``--oracle`` finds a disagreement, and 2
on usage errors. ``RINGLOGIC_WIDTH`` caps the width of text Cayley tables;
wider tables are printed in column blocks.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import codes, ideals, mvclassify, residuated
from .ring import MAX_EXPLICIT_ORDER, RingSpec, SizeBoundError, enumerate_elements, parse_ring_spec

WIDTH_ENV = "RINGLOGIC_WIDTH"
TABLE_OPS = ("imp", "oplus", "sum", "product", "intersect", "ann")
DEFAULT_SUITES = residuated.STRUCTURE_SUITES


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    """What a subcommand produced: the data text, notes for stderr, and status."""

    data: str
    notes: list[str] = field(default_factory=list)
    status: int = 0


def _spec(text: str) -> RingSpec:
    try:
        return parse_ring_spec(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def _width() -> int | None:
    raw = os.environ.get(WIDTH_ENV)
    if not raw:
        return None
    try:
        width = int(raw)
    except ValueError:
        raise UsageError(f"{WIDTH_ENV} must be an integer, got {raw!r}") from None
    if width < 20:
        raise UsageError(f"{WIDTH_ENV} must be at least 20")
    return width


def _oracle_table(spec: RingSpec, out: Outcome) -> residuated.FiniteAlgebraTable | None:
    if spec.order > MAX_EXPLICIT_ORDER:
        out.notes.append(f"oracle skipped: |A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
        return None
    fast = residuated.from_ideal_lattice(spec)
    slow = residuated.from_explicit_sets(spec)
    diffs = residuated.table_mismatches(fast, slow)
    if diffs:
        out.notes.append(f"oracle mismatch for {spec.render()} (fast vs explicit):")
        out.notes.extend("  " + d for d in diffs)
        out.status = 1
    else:
        out.notes.append(f"oracle: {spec.render()} tables agree with explicit-set computation")
    return slow


# ---------------------------------------------------------------------------
# subcommands


def cmd_ideals(args) -> Outcome:
    spec = _spec(args.spec)
    idx = ideals.enumerate_ideals(spec)
    labels = ideals.ideal_labels(len(idx))
    explicit = spec.order <= MAX_EXPLICIT_ORDER
    out = Outcome("")
    if args.oracle:
        if not explicit:
            out.notes.append(f"oracle skipped: |A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
        else:
            fast = {ideals.materialize(e) for e in idx}
            slow = ideals.enumerate_ideals_oracle(spec)
            if fast != slow or len(idx) != spec.ideal_count:
                out.status = 1
                out.notes.append(
                    f"oracle mismatch: {len(fast)} indexed ideals vs {len(slow)} explicit, "
                    f"N_A = {spec.ideal_count}"
                )
            else:
                out.notes.append(f"oracle: {len(slow)} ideals agree with brute-force enumeration")

    def members(e):
        return [list(m) for m in ideals.materialize(e).sorted_members()] if explicit else None

    if args.format == "json":
        out.data = _dumps({
            "ring": spec.render(),
            "order": spec.order,
            "ideal_count": spec.ideal_count,
            "ideals": [{"label": lab, **e.to_json(members=explicit)} for lab, e in zip(labels, idx)],
        })
    elif args.format == "csv":
        out.data = _csv([["label", "exponents", "cardinality"]] + [
            [lab, " ".join(map(str, e.exponents)), e.cardinality] for lab, e in zip(labels, idx)
        ])
    else:
        lines = [f"{spec.render()}: |A| = {spec.order}, N_A = {spec.ideal_count}"]
        for lab, e in zip(labels, idx):
            line = f"{lab:>3}  e=({','.join(map(str, e.exponents))})  |I|={e.cardinality}"
            ms = members(e)
            if ms is not None:
                shown = ["".join(map(str, m)) if spec.rank > 1 else str(m[0]) for m in ms]
                line += "  {" + ", ".join(shown) + "}"
            lines.append(line)
        out.data = "\n".join(lines) + "\n"
    return out


def cmd_table(args) -> Outcome:
    spec = _spec(args.spec)
    t = residuated.from_ideal_lattice(spec)
    out = Outcome("")
    if args.oracle:
        _oracle_table(spec, out)
    op = args.op
    if op == "ann":
        values = [[t.labels[int(v)]] for v in t.star]
        header = ["x", "Ann"]
    else:
        name = {"sum": "join", "product": "times", "intersect": "meet"}.get(op, op)
        grid = getattr(t, name)
        values = [[t.labels[int(v)] for v in row] for row in grid]
        header = [op] + list(t.labels)
    if args.format == "json":
        out.data = _dumps({
            "ring": spec.render(),
            "op": op,
            "carrier": list(t.labels),
            "exponents": [list(e) for e in t.exponents],
            "table": values if op != "ann" else [v[0] for v in values],
        })
    elif args.format == "csv":
        out.data = _csv([header] + [[lab] + row for lab, row in zip(t.labels, values)])
    else:
        out.data = _fit(residuated.render_table(t, op), _width()) + "\n"
    return out


def _fit(text: str, width: int | None) -> str:
    """Split a rendered Cayley table into column blocks no wider than ``width``."""
    lines = text.split("\n")
    if width is None or max(map(len, lines)) <= width:
        return text
    head, rule, body = lines[0], lines[1], lines[2:]
    bar = head.index("|") + 2
    cells = head[bar:].split(" ")
    cell = max(map(len, cells)) + 1
    per_block = max(1, (width - bar) // cell)
    blocks = []
    for start in range(0, len(cells), per_block):
        lo, hi = bar + start * cell, bar + (start + per_block) * cell
        block = [ln[:bar] + ln[lo:hi] for ln in [head] + body]
        block.insert(1, rule[:bar - 1] + "-" * (max(map(len, block)) - bar + 1))
        blocks.append("\n".join(b.rstrip() for b in block))
    return "\n\n".join(blocks)


def cmd_check(args) -> Outcome:
    spec = _spec(args.spec)
    t = residuated.from_ideal_lattice(spec)
    out = Outcome("")
    if args.oracle:
        slow = _oracle_table(spec, out)
        if slow is not None and out.status == 0:
            for suite in args.suite or DEFAULT_SUITES:
                a, b = residuated.check_suite(t, suite), residuated.check_suite(slow, suite)
                if a.to_json(t) != b.to_json(slow):
                    out.status = 1
                    out.notes.append(f"oracle mismatch in suite {suite}: {a.render(t)} vs {b.render(slow)}")
    reports = [residuated.check_suite(t, s) for s in args.suite or DEFAULT_SUITES]
    verdict = residuated.classify_lattice(t)
    if args.format == "json":
        out.data = _dumps({
            "ring": spec.render(),
            "reports": [r.to_json(t) for r in reports],
            "classification": str(verdict),
        })
    elif args.format == "csv":
        rows = [["suite", "pass", "axiom", "args", "witness"]]
        for r in reports:
            if not r.witnesses:
                rows.append([r.suite, "true", "", "", ""])
            for w in r.witnesses:
                rows.append([r.suite, "false", w.axiom.id, " ".join(t.labels[a] for a in w.args), w.render(t)])
        out.data = _csv(rows)
    else:
        body = "\n".join(r.render(t) for r in reports)
        out.data = f"Id({spec.render()}): {t.size} ideals\n{body}\nclassification: {verdict}\n"
    if not all(r.passed for r in reports):
        out.status = 1
    return out


def cmd_code(args) -> Outcome:
    spec = _spec(args.spec)
    out = Outcome("")
    try:
        if args.kind == "membership":
            code = codes.membership_code(spec)
        else:
            code = codes.reduced_code(residuated.from_ideal_lattice(spec))
    except SizeBoundError as exc:
        raise UsageError(str(exc)) from None
    if args.oracle:
        if spec.order > MAX_EXPLICIT_ORDER:
            out.notes.append(f"oracle skipped: |A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
        else:
            slow = _oracle_code(spec, args.kind)
            fast_words = [w.bits for w in code.words]
            if fast_words != slow:
                out.status = 1
                out.notes.append(f"oracle mismatch: fast {fast_words} vs explicit {slow}")
            else:
                out.notes.append("oracle: codewords agree with explicit-set computation")
    d = codes.min_distance(code) if len(code.words) >= 2 else None
    kind = str(codes.classify_code(code)) if d is not None else "n/a"
    if args.format == "json":
        doc = json.loads(code.to_json())
        doc.update(min_distance=d, classification=kind, ring=spec.render(), kind=args.kind)
        out.data = _dumps(doc)
    elif args.format == "csv":
        out.data = code.to_csv()
        out.notes.append(f"d_H = {d}, classification: {kind}")
    else:
        out.data = code.to_text() + f"d_H = {d}\nclassification: {kind}\n"
    return out


def _oracle_code(spec: RingSpec, kind: str) -> list[str]:
    """Codewords rebuilt from brute-force ideal sets, in canonical ideal order."""
    found = sorted(ideals.enumerate_ideals_oracle(spec), key=lambda X: ideals.ideal_position(ideals.identify(X)))
    if kind == "membership":
        elements = [tuple(x.residues) for x in enumerate_elements(spec)]
        return ["".join("1" if x in X.members else "0" for x in elements) for X in found]
    return ["".join("1" if X.members <= Y.members else "0" for Y in found) for X in found]


def cmd_classify(args) -> Outcome:
    try:
        result = mvclassify.classify_all(args.n)
    except (ValueError, SizeBoundError) as exc:
        raise UsageError(str(exc)) from None
    out = Outcome("")
    if args.oracle:
        for alg in result.algebras:
            if alg.spec.order > MAX_EXPLICIT_ORDER:
                # Beyond element-set range the chain closed forms serve as the check.
                if alg.is_chain and residuated.table_mismatches(alg.table, mvclassify.chain_mv(args.n).table):
                    out.status = 1
                    out.notes.append(f"oracle mismatch: {alg.provenance} vs closed-form chain")
                continue
            _oracle_table(alg.spec, out)
    if args.format == "json":
        out.data = _dumps(result.to_json())
    elif args.format == "csv":
        rows = [["partition", "ring", "chain", "lattice_class"]]
        for a in result.algebras:
            rows.append([str(a.partition), a.spec.render(), a.is_chain, str(residuated.classify_lattice(a.table))])
        out.data = _csv(rows)
    else:
        s = result.summary()
        lines = [f"n = {s['n']}: {s['total']} MV-algebras ({s['chains']} chain, {s['boolean']} Boolean)"]
        for a in result.algebras:
            lines.append("")
            lines.append(f"[{a.partition}] {a.provenance}: {residuated.classify_lattice(a.table)}")
            for op in ("oplus", "ann", "imp"):
                lines.append(_fit(residuated.render_table(a.table, op), _width()))
        out.data = "\n".join(lines) + "\n"
    return out


def cmd_report(args) -> Outcome:
    try:
        rep = mvclassify.report_tables(args.kind, args.max)
    except (ValueError, SizeBoundError) as exc:
        raise UsageError(str(exc)) from None
    out = Outcome("")
    if args.oracle:
        out.notes.append("oracle: report rows are recomputed from classification; no extra route")
    if args.format == "json":
        out.data = rep.to_json() + "\n"
    elif args.format == "csv":
        out.data = rep.to_csv()
    else:
        out.data = rep.to_text()
    return out


# ---------------------------------------------------------------------------
# entry points


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write data to PATH instead of stdout")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against brute-force element-set computation")

    parser = argparse.ArgumentParser(prog="ringlogic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ideals", parents=[common], help="list ideals with cardinalities")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("table", parents=[common], help="print a Cayley table of Id(A)")
    p.add_argument("spec")
    p.add_argument("--op", choices=TABLE_OPS, default="imp")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="run axiom suites on Id(A)")
    p.add_argument("spec")
    p.add_argument("--suite", action="append", choices=residuated.SUITE_IDS,
                   help=f"repeatable; default: {', '.join(DEFAULT_SUITES)}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("code", parents=[common], help="print a block code and its distance")
    p.add_argument("spec")
    p.add_argument("--kind", choices=("membership", "reduced"), default="membership")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("classify", parents=[common], help="all MV-algebras with n elements")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", parents=[common], help="regenerate the summary tables")
    p.add_argument("kind", choices=("table1", "table2", "table3"))
    p.add_argument("--max", type=int, default=8)
    p.set_defaults(func=cmd_report)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already written usage to stderr
        return 2 if exc.code else 0
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"ringlogic: error: {exc}", file=stderr)
        return 2
    except SizeBoundError as exc:
        print(f"ringlogic: error: {exc}", file=stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out.data)
    else:
        stdout.write(out.data)
    for note in out.notes:
        print(note, file=stderr)
    return out.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

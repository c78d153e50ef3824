"""Command-line interface.

    flagcontact classify --type D4 [--json]
    flagcontact classify --all --max-rank 8 [--json]
    flagcontact certify --type E8 [--json] [--jacobi-samples N] [--matrix]
    flagcontact grassmannian --n 4 [--trials 5] [--seed 7] [--json]
    flagcontact roots --type E6 [--json]

Exit codes: 0 success, 1 NoneExists under --expect-exists, 2 usage or
invalid input, 3 internal certification failure.
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import sys
from collections.abc import Sequence
from typing import Any

from flagcontact import __version__
from flagcontact.chevalley import certify_kind
from flagcontact.classifier import ContactReport, classify, contact_parabolic
from flagcontact.isogr import RANK_RTOL, InvalidN, run_audit
from flagcontact.rootsys import (
    CartanKind,
    InvalidKind,
    all_kinds,
    build_root_system,
    format_root,
    to_fundamental_basis,
)

SCHEMA_VERSION = 1
RESIDUAL_LIMIT = 1e-8

EXIT_OK = 0
EXIT_NONE_EXISTS = 1
EXIT_USAGE = 2
EXIT_CERT_FAILURE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _kind(text: str) -> CartanKind:
    try:
        return CartanKind.parse(text)
    except InvalidKind as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagcontact", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON envelope")
    common.add_argument("--deterministic", action="store_true", help="omit timestamps")
    common.add_argument("--out", metavar="FILE", help="also write output to FILE")

    p = sub.add_parser("classify", parents=[common], help="contact classification")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--type", type=_kind, dest="kind")
    g.add_argument("--all", action="store_true")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--expect-exists", action="store_true")

    p = sub.add_parser("certify", parents=[common], help="contact-form rank certificate")
    p.add_argument("--type", type=_kind, dest="kind", required=True)
    p.add_argument("--jacobi-samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--matrix", action="store_true", help="include the contact-form matrix")
    p.add_argument("--expect-exists", action="store_true")

    p = sub.add_parser("grassmannian", parents=[common], help="isotropic Grassmannian audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("roots", parents=[common], help="list positive roots")
    p.add_argument("--type", type=_kind, dest="kind", required=True)
    return parser


def envelope(command: str, inputs: dict[str, Any], payload: Any, deterministic: bool, seed: int | None = None) -> dict:
    env = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
        "input": inputs,
        "payload": payload,
    }
    if seed is not None:
        env["seed"] = seed
    if not deterministic:
        env["generated_at"] = dt.datetime.now(dt.timezone.utc).isoformat()
    return env


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _nodes(nodes: Sequence[int]) -> str:
    return ", ".join(f"a{i + 1}" for i in nodes)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    out = [headers, ["-" * w for w in widths], *rows]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in out)


def _report_row(r: ContactReport) -> list[str]:
    if not r.exists:
        return [str(r.kind), r.verdict.value, "-", "-", "-", "-", f"witnesses {_nodes(r.non_orthogonal_nodes)}"]
    return [
        str(r.kind),
        r.verdict.value,
        _nodes([r.contact_node]),
        str(r.dim),
        str(r.n),
        str(r.line_bundle_coefficient),
        "ok" if r.identity_checked else "FAILED",
    ]


_REPORT_HEADERS = ["kind", "verdict", "node", "dim", "n", "k", "(n+1)lambda = mu"]


def _describe(r: ContactReport) -> str:
    if not r.exists:
        return (
            f"{r.kind}: no invariant contact structure exists on any b2 = 1 flag variety; "
            f"the highest root is non-orthogonal to {len(r.non_orthogonal_nodes)} simple roots "
            f"({_nodes(r.non_orthogonal_nodes)})"
        )
    lam = r.line_bundle_weight.coords
    return "\n".join(
        [
            f"{r.kind}: invariant contact structure exists on G/P_Lambda = P(O_min)",
            f"  contact node        {_nodes([r.contact_node])}",
            f"  Lambda              {{{_nodes(r.Lambda)}}}",
            f"  dim                 {r.dim} = 2*{r.n} + 1",
            f"  contact bundle      L(lambda), lambda = {r.line_bundle_coefficient} * w{r.contact_node + 1}  {list(lam)}",
            f"  anticanonical       mu = {list(r.anticanonical_weight.coords)}",
            f"  (n+1) lambda = mu   {'ok' if r.identity_checked else 'FAILED'}",
        ]
    )


def _cmd_classify(args) -> tuple[str, int]:
    if args.all:
        reports = [classify(k) for k in all_kinds(args.max_rank)]
        payload = [r.to_dict() for r in reports]
        inputs = {"all": True, "max_rank": args.max_rank}
        text = _table(_REPORT_HEADERS, [_report_row(r) for r in reports])
    else:
        reports = [classify(args.kind)]
        payload = reports[0].to_dict()
        inputs = {"kind": str(args.kind)}
        text = _describe(reports[0])
    code = EXIT_OK
    if any(r.exists and not r.identity_checked for r in reports):
        code = EXIT_CERT_FAILURE
    elif args.expect_exists and not all(r.exists for r in reports):
        code = EXIT_NONE_EXISTS
    if args.json:
        text = dumps(envelope("classify", inputs, payload, args.deterministic))
    return text, code


def _cmd_certify(args) -> tuple[str, int]:
    report = classify(args.kind)
    record = None
    if report.exists:
        rs = build_root_system(args.kind)
        record = certify_kind(
            rs,
            contact_parabolic(rs),
            jacobi_samples=args.jacobi_samples,
            seed=args.seed,
            include_matrix=args.matrix,
        )
    payload = {
        "classification": report.to_dict(),
        "certificate": None if record is None else record.to_dict(),
    }
    if record is None:
        code = EXIT_NONE_EXISTS if args.expect_exists else EXIT_OK
        text = _describe(report)
    else:
        code = EXIT_OK if record.ok and record.rank == report.dim - 1 else EXIT_CERT_FAILURE
        text = "\n".join(
            [
                f"{args.kind}: contact form on (g_-lambda)^perp / p_Lambda",
                f"  size x size         {record.size} x {record.size}",
                f"  exact rank          {record.rank}",
                f"  nondegenerate       {record.nondegenerate}",
                f"  antisymmetric       {record.antisymmetric}",
                f"  b -> lambda - b     {'fixed-point free' if record.involution_ok else 'FAILED'}",
                f"  weight balance      {'ok' if record.weight_balance_ok else 'FAILED'}",
                f"  Jacobi spot-check   {record.jacobi_violations} violations in {record.jacobi_samples} triples",
            ]
        )
        if record.matrix is not None:
            text += "\n" + "\n".join(" ".join(f"{v:2d}" for v in row) for row in record.matrix)
    if args.json:
        text = dumps(
            envelope("certify", {"kind": str(args.kind)}, payload, args.deterministic, seed=args.seed)
        )
    return text, code


def _cmd_grassmannian(args) -> tuple[str, int]:
    records = run_audit(args.n, args.trials, args.seed)
    n = args.n
    ok = all(
        r.dimT == 4 * n - 7 and r.dimE == 4 * n - 8 and r.contact_rank == 4 * n - 8 and r.max_residual < RESIDUAL_LIMIT
        for r in records
    )
    payload = {
        "n": n,
        "seed": args.seed,
        "trials": args.trials,
        "rank_rtol": RANK_RTOL,
        "dimT": records[0].dimT if len({r.dimT for r in records}) == 1 else None,
        "dimE": records[0].dimE if len({r.dimE for r in records}) == 1 else None,
        "contact_rank": records[0].contact_rank if len({r.contact_rank for r in records}) == 1 else None,
        "max_residual": max(r.max_residual for r in records),
        "records": [r.to_dict() for r in records],
    }
    if args.json:
        text = dumps(envelope("grassmannian", {"n": n, "trials": args.trials}, payload, args.deterministic, seed=args.seed))
    else:
        rows = [
            [str(k), r.point, str(r.seed), str(r.dimT), str(r.dimE), str(r.contact_rank), f"{r.max_residual:.2e}"]
            for k, r in enumerate(records)
        ]
        text = f"Gr_B(2, C^{2 * n})  expected dimT {4 * n - 7}, dimE {4 * n - 8}\n"
        text += _table(["trial", "point", "seed", "dimT", "dimE", "contact_rank", "max_residual"], rows)
    return text, EXIT_OK if ok else EXIT_CERT_FAILURE


def _cmd_roots(args) -> tuple[str, int]:
    rs = build_root_system(args.kind)
    entries = [
        {"root": list(r.coords), "weight": list(to_fundamental_basis(r, rs).coords), "height": r.height}
        for r in rs.positive_roots
    ]
    payload = {"kind": str(rs.kind), "cartan": [list(row) for row in rs.cartan], "positive_roots": entries}
    if args.json:
        return dumps(envelope("roots", {"kind": str(rs.kind)}, payload, args.deterministic)), EXIT_OK
    rows = [
        [str(k), str(e["height"]), format_root(e["root"]), " ".join(str(c) for c in e["weight"])]
        for k, e in enumerate(entries)
    ]
    text = f"{rs.kind}: {len(entries)} positive roots, highest {format_root(rs.highest)}\n"
    return text + _table(["#", "ht", "simple-root basis", "fundamental-weight basis"], rows), EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "certify": _cmd_certify,
    "grassmannian": _cmd_grassmannian,
    "roots": _cmd_roots,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        text, code = _COMMANDS[args.command](args)
    except (InvalidKind, InvalidN, ValueError) as exc:
        print(parser.format_usage() + f"flagcontact: error: {exc}", file=stderr)
        return EXIT_USAGE
    print(text, file=stdout)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

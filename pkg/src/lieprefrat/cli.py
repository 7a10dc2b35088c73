"""Command-line interface.

Subcommands: check (validate an algebra file), analyze (one-algebra
reports), verify (run the named checks over a file or the corpus), example
(emit the built-in truncated-Weyl family).  Exit codes: 0 success, 1 check
failure, 2 input error, 3 resource guard tripped.  All output is
deterministic; --json output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    centre,
    derived_series,
    is_completely_solvable,
    is_solvable,
    lower_central_series,
    nilpotent_residual,
    validate_structure,
)
from .chief import chief_series, classify_series
from .conjugacy import verify_conjugacy_theorem
from .corpus import GOLDEN_PRIMES, standard_corpus, truncated_weyl_algebra
from .errors import (
    BudgetExceeded,
    FileFormatError,
    LiePrefratError,
    NotASubalgebra,
    UnsupportedPrime,
)
from .fileformat import parse_algebra, serialize_algebra, subalgebra_from_spec
from .intervals import omega_min, phi_of
from .prefrattini import prefrattini_set
from .verify import Guards, run_verification

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
        return
    _emit_text(obj, indent=0)


def _emit_text(obj, indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in obj:
            value = obj[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {_render_flat(value)}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{pad}-")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}- {_render_flat(value)}")
    else:
        print(f"{pad}{_render_flat(obj)}")


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _render_flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _rows(space) -> list:
    return [list(row) for row in space.rows]


def _load_algebra(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(path, f"cannot read file: {exc.strerror}") from None
    return parse_algebra(text)


def cmd_check(args) -> int:
    L = _load_algebra(args.file)
    violation = validate_structure(L)
    if violation is None:
        print(f"ok: GF({L.p}), dim {L.dim}, Lie axioms hold")
        return EXIT_OK
    print(
        f"invalid: {violation.kind} fails at basis indices "
        f"{violation.indices}, residue {list(violation.value)}",
        file=sys.stderr,
    )
    return EXIT_INPUT


def cmd_analyze(args) -> int:
    L = _load_algebra(args.file)
    violation = validate_structure(L)
    if violation is not None:
        print(
            f"error: algebra file is not a Lie algebra ({violation.kind} at "
            f"{violation.indices})",
            file=sys.stderr,
        )
        return EXIT_INPUT
    u = subalgebra_from_spec(args.u, L)
    what = args.what
    if what == "info":
        report = {
            "p": L.p,
            "dim": L.dim,
            "basis": list(L.labels),
            "solvable": is_solvable(L),
            "completely_solvable": is_completely_solvable(L),
            "derived_series_dims": [t.dim for t in derived_series(L)],
            "lower_central_dims": [t.dim for t in lower_central_series(L)],
            "residual_dim": nilpotent_residual(L).dim,
            "centre_dim": centre(L).dim,
        }
    elif what == "chief":
        series = chief_series(L)
        classifications = classify_series(L, series, u)
        report = {
            "ideals": [_rows(a) for a in series.ideals],
            "factor_dims": list(series.factor_dims()),
            "factors": [
                {
                    "index": c.index,
                    "dim": c.factor_dim,
                    "u_frattini": c.u_frattini,
                    "complement_count": len(c.complements),
                }
                for c in classifications
            ],
        }
    elif what == "frattini":
        report = {"phi": _rows(phi_of(L, u))}
    elif what == "prefrattini":
        result = prefrattini_set(L, u)
        report = {
            "index_set": list(result.index_set),
            "count": len(result.members),
            "common_dim": result.common_dim,
            "members": [_rows(b) for b in result.members],
        }
    elif what == "omega-min":
        report = {"members": [_rows(s) for s in omega_min(L, u)]}
    else:  # conjugacy
        conj = verify_conjugacy_theorem(L, u)
        report = {
            "status": conj.status,
            "reason": conj.reason,
            "group_order": conj.group_order,
            "members": [_rows(m) for m in conj.members],
            "witnesses": [
                {
                    "member": _rows(m),
                    "via": None if w is None else [list(x) for x in w.generators],
                }
                for m, w in conj.witnesses
            ],
        }
    _emit(report, args.json)
    return EXIT_OK


def _u_label(rows) -> str:
    if not rows:
        return "0"
    return " ".join(",".join(str(a) for a in row) for row in rows)


def cmd_verify(args) -> int:
    if args.corpus:
        entries = [(e.name, e.algebra) for e in standard_corpus(args.p)]
    elif args.file:
        entries = [(args.file, _load_algebra(args.file))]
    else:
        print("error: give an algebra file or --corpus", file=sys.stderr)
        return EXIT_INPUT
    checks = None if args.checks in (None, "all") else args.checks.split(",")
    guards = Guards(node_budget=args.node_budget, group_cap=args.group_cap)
    rows = run_verification(entries, args.u_mode, checks, guards)
    if args.json:
        print(json.dumps([r.to_json_row() for r in rows], indent=2, sort_keys=True))
    else:
        width = max(len(r.algebra) for r in rows) if rows else 8
        cwidth = max(len(r.check) for r in rows) if rows else 8
        for r in rows:
            print(
                f"{r.algebra:<{width}}  u={_u_label(r.u)!s:<24}  "
                f"{r.check:<{cwidth}}  {r.status}"
            )
        totals = {}
        for r in rows:
            totals[r.status] = totals.get(r.status, 0) + 1
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(totals.items()))
        print(f"-- {len(rows)} cells; {summary}")
    if any(r.status == "FAIL" for r in rows):
        return EXIT_FAIL
    if any(r.status == "SKIPPED(resource)" for r in rows):
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_example(args) -> int:
    L = truncated_weyl_algebra(args.p)
    text = serialize_algebra(L)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieprefrat",
        description=(
            "exact prefrattini / complemented-interval computations for "
            "solvable Lie algebras over GF(p)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="validate an algebra file")
    p_check.add_argument("file")
    p_check.set_defaults(func=cmd_check)

    p_an = sub.add_parser("analyze", help="report on one algebra")
    p_an.add_argument("file")
    p_an.add_argument(
        "--u",
        default="0",
        help='subalgebra U as "v1;v2;..." with comma-separated coordinates '
        '(default "0")',
    )
    p_an.add_argument(
        "--what",
        required=True,
        choices=["info", "chief", "frattini", "prefrattini", "omega-min", "conjugacy"],
    )
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run the named checks")
    p_ver.add_argument("file", nargs="?", default=None)
    p_ver.add_argument("--corpus", action="store_true", help="use the built-in corpus")
    p_ver.add_argument(
        "--p", type=int, default=2, choices=GOLDEN_PRIMES, help="corpus prime"
    )
    p_ver.add_argument(
        "--u-mode",
        default="zero",
        help="zero | all-subalgebras | sample:N (default zero)",
    )
    p_ver.add_argument(
        "--checks", default="all", help="comma-separated check names, or all"
    )
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--node-budget", type=int, default=None)
    p_ver.add_argument("--group-cap", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_ex = sub.add_parser(
        "example", help="write the built-in (p+3)-dimensional example family"
    )
    p_ex.add_argument("--p", type=int, required=True)
    p_ex.add_argument("--out", default=None)
    p_ex.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotASubalgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FileFormatError, UnsupportedPrime) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except LiePrefratError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Batch command-line front end.

Subcommands wire the computational modules together and emit JSON
(machine), aligned text (human), or flattened CSV reports.  Output is
fully deterministic: identical invocations produce identical bytes.

Exit codes: 0 success, 1 domain error, 2 internal-consistency failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import fi_analysis, induction, os_model
from .characters import (
    ClassFunction,
    decompose,
    irreducible_character,
    mn_character,
)
from .errors import ConsistencyError, DomainError
from .partitions import parse_partition

MAX_N_ENV = "FISTAB_MAX_N"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def _key(k) -> str:
    # the empty partition serializes as ""; show it as () in human output
    return "()" if k == "" else str(k)


def _is_scalar_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def render_text(payload, indent: int = 0) -> list[str]:
    lines = []
    pad = " " * indent
    if isinstance(payload, dict):
        width = max((len(_key(k)) for k in payload), default=0)
        for k, v in payload.items():
            if isinstance(v, dict) or (isinstance(v, list) and not _is_scalar_list(v)):
                lines.append(f"{pad}{_key(k)}:")
                lines.extend(render_text(v, indent + 2))
            elif _is_scalar_list(v):
                joined = " ".join(_scalar(x) for x in v)
                lines.append(f"{pad}{_key(k):<{width}}  {joined}")
            else:
                lines.append(f"{pad}{_key(k):<{width}}  {_scalar(v)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 2))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(payload)}")
    return lines


def _flatten(payload, prefix: str = ""):
    rows = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            rows.extend(_flatten(v, f"{prefix}{_key(k)}."))
    elif isinstance(payload, list) and not _is_scalar_list(payload):
        for idx, v in enumerate(payload):
            rows.extend(_flatten(v, f"{prefix}{idx}."))
    else:
        key = prefix[:-1] if prefix.endswith(".") else prefix
        value = " ".join(_scalar(x) for x in payload) if isinstance(payload, list) else _scalar(payload)
        rows.append((key, value))
    return rows


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "text":
        return "\n".join(render_text(payload)) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for key, value in _flatten(payload):
            writer.writerow([key, value])
        return buf.getvalue()
    raise DomainError(f"unknown format {fmt!r}")


def _emit(payload, args) -> None:
    report = render(payload, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)


def _load_json(args, inline_attr: str):
    inline = getattr(args, inline_attr, None)
    if inline is not None:
        text = inline
    elif getattr(args, "input", None):
        with open(args.input) as fh:
            text = fh.read()
    else:
        raise DomainError(f"provide --{inline_attr.replace('_', '-')} or --input")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON input: {exc}") from exc


def _graded_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad graded dimension list {text!r}") from exc


# --------------------------------------------------------------------------
# subcommand handlers


def cmd_character(args):
    lam = parse_partition(args.lam)
    n = sum(lam)
    if args.mu is not None:
        mu = parse_partition(args.mu)
        return {
            "lam": list(lam),
            "n": n,
            "mu": list(mu),
            "value": mn_character(lam, mu),
        }
    chi = irreducible_character(lam)
    return {"lam": list(lam), "n": n, "values": chi.to_mapping()}


def cmd_decompose(args):
    payload = _load_json(args, "values")
    chi = ClassFunction.from_mapping(args.n, payload)
    dec = decompose(chi)
    return {
        "n": args.n,
        "decomposition": dec.to_mapping(),
        "dimension": dec.dimension(),
    }


def cmd_m_module(args):
    if (args.lam is None) == (args.regular is None):
        raise DomainError("give exactly one of --lam or --regular")
    if args.lam is not None:
        lam = parse_partition(args.lam)
        dec = induction.m_module(lam, args.n)
        head = {"lam": list(lam)}
    else:
        dec = induction.m_regular(args.regular, args.n)
        head = {"m": args.regular}
    return {
        **head,
        "n": args.n,
        "decomposition": dec.to_mapping(),
        "dimension": dec.dimension(),
    }


def cmd_stability_scan(args):
    payload = _load_json(args, "entries")
    seq = fi_analysis.FISequence.decompositions_from_mapping(payload)
    report = fi_analysis.detect_stability(seq)
    return report.to_mapping()


def cmd_fit_charpoly(args):
    payload = _load_json(args, "entries")
    seq = fi_analysis.FISequence.characters_from_mapping(payload)
    poly = fi_analysis.fit_char_polynomial(seq, args.degree_bound)
    return {
        "window": list(seq.window),
        "degree_bound": args.degree_bound,
        "polynomial": poly.to_mapping(),
    }


def cmd_fit_dimpoly(args):
    payload = _load_json(args, "dims")
    try:
        dims = {int(k): int(v) for k, v in payload.items()}
    except (ValueError, TypeError, AttributeError) as exc:
        raise DomainError(f"dimension table must map integers to integers: {exc}") from exc
    poly = fi_analysis.fit_dim_polynomial(dims, args.degree_bound)
    return {
        "points": {str(n): dims[n] for n in sorted(dims)},
        "degree_bound": args.degree_bound,
        "polynomial": poly.to_mapping(),
    }


def cmd_bounds(args):
    params = bounds_mod.BoundParams(args.alpha, args.beta)
    head = {"alpha": str(params.alpha), "beta": str(params.beta), "i": args.i}
    if args.fisharp:
        return {**head, "fisharp_degree": bounds_mod.fisharp_degree(params, args.i)}
    if args.page is not None:
        if args.p is None or args.q is None:
            raise DomainError("--page needs --p and --q")
        st = bounds_mod.page_stability(params, (args.p, args.q), args.page)
        head.update({"page": args.page, "p": args.p, "q": args.q})
    else:
        st = bounds_mod.abutment_stability(
            params, args.i, degenerates_at=args.degenerates_at
        )
        if args.degenerates_at is not None:
            head["degenerates_at"] = args.degenerates_at
    return {
        **head,
        "injectivity": st.inj,
        "surjectivity": st.surj,
        "stability_degree": st.stability_degree,
    }


def cmd_table1(args):
    return bounds_mod.table1_row(args.row, args.i).to_mapping()


def _desk_cap(k: int) -> int:
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise DomainError(f"{MAX_N_ENV} must be an integer, got {env!r}") from exc
    return 10 if k <= 2 else 8


def cmd_os_scan(args):
    k = args.k
    if args.n_min < 1 or args.n_max < args.n_min:
        raise DomainError("need 1 <= n-min <= n-max")
    cap = _desk_cap(k)
    if args.n_max > cap and not args.allow_large:
        raise DomainError(
            f"n-max {args.n_max} exceeds the desk-scale cap {cap} for k={k}; "
            f"pass --allow-large or set {MAX_N_ENV} to override"
        )
    window = range(args.n_min, args.n_max + 1)
    decs = {n: os_model.decomposition(n, k) for n in window}
    payload = {
        "k": k,
        "window": [args.n_min, args.n_max],
        "betti": {str(n): os_model.betti(n, k) for n in window},
        "decompositions": {str(n): decs[n].to_mapping() for n in window},
    }
    if args.n_max > args.n_min:
        seq = fi_analysis.FISequence(decs)
        payload["stability"] = fi_analysis.detect_stability(seq).to_mapping()
        chars = fi_analysis.FISequence({n: os_model.character(n, k) for n in window})
        try:
            poly = fi_analysis.fit_char_polynomial(chars, 2 * k)
            payload["character_polynomial"] = poly.to_mapping()
        except DomainError as exc:
            payload["character_polynomial"] = {"error": str(exc)}
    coinv = {}
    for a in range(0, args.a_max + 1):
        rows = {}
        for n in range(max(args.n_min, a), args.n_max):
            rows[str(n)] = os_model.coinvariant_report(n, a, k).to_mapping()
        if rows:
            coinv[str(a)] = rows
    payload["coinvariants"] = coinv
    return payload


def cmd_wreath_scan(args):
    dims = _graded_dims(args.graded_dims)
    if args.n_min < 0 or args.n_max < args.n_min:
        raise DomainError("need 0 <= n-min <= n-max")
    values = {
        n: induction.wreath_invariant_dim(dims, n, args.i)
        for n in range(args.n_min, args.n_max + 1)
    }
    start = max(args.n_min, 2 * args.i)
    tail = [values[n] for n in range(start, args.n_max + 1)]
    return {
        "graded_dims": list(dims),
        "i": args.i,
        "window": [args.n_min, args.n_max],
        "invariant_dims": {str(n): v for n, v in values.items()},
        "expected_constant_from": 2 * args.i,
        "constant_on_tail": len(set(tail)) <= 1,
    }


def cmd_kunneth(args):
    dims = _graded_dims(args.graded_dims)
    chi = induction.kunneth_power(dims, args.n, args.i)
    payload = {
        "graded_dims": list(dims),
        "n": args.n,
        "i": args.i,
        "character": chi.to_mapping(),
    }
    if args.decompose:
        payload["decomposition"] = decompose(chi).to_mapping()
    return payload


# --------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="fistab", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the report to this path instead of stdout")
    common.add_argument(
        "--format", choices=("json", "text", "csv"), default="json", help="report format"
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("character", parents=[common], help="irreducible character values")
    p.add_argument("--lam", required=True, help="shape, e.g. 3+2")
    p.add_argument("--mu", help="cycle type; omit for the whole class function")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("decompose", parents=[common], help="decompose a class function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--values", help="inline JSON {cycle type: value}")
    p.add_argument("--input", help="path to the JSON class function")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("m-module", parents=[common], help="free-module level decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", help="inducing shape, e.g. 2+1")
    p.add_argument("--regular", type=int, help="induce from the full group algebra of S_m")
    p.set_defaults(func=cmd_m_module)

    p = sub.add_parser("stability-scan", parents=[common], help="detect uniform stability")
    p.add_argument("--entries", help="inline JSON sequence of decompositions")
    p.add_argument("--input", help="path to the JSON sequence")
    p.set_defaults(func=cmd_stability_scan)

    p = sub.add_parser("fit-charpoly", parents=[common], help="fit a character polynomial")
    p.add_argument("--entries", help="inline JSON sequence of class functions")
    p.add_argument("--input", help="path to the JSON sequence")
    p.add_argument("--degree-bound", type=int, required=True)
    p.set_defaults(func=cmd_fit_charpoly)

    p = sub.add_parser("fit-dimpoly", parents=[common], help="fit a dimension polynomial")
    p.add_argument("--dims", help="inline JSON {n: dimension}")
    p.add_argument("--input", help="path to the JSON dimensions")
    p.add_argument("--degree-bound", type=int, required=True)
    p.set_defaults(func=cmd_fit_dimpoly)

    p = sub.add_parser("bounds", parents=[common], help="stability-bound arithmetic")
    p.add_argument("--alpha", type=Fraction, required=True)
    p.add_argument("--beta", type=Fraction, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--page", type=int, help="page number r >= 3 for entry bounds")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--fisharp", action="store_true", help="generation-degree variant")
    p.add_argument("--degenerates-at", type=int, help="known degeneration page")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table1", parents=[common], help="headline bounds per example family")
    p.add_argument("--row", required=True, choices=bounds_mod.TABLE1_ROWS)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("os-scan", parents=[common], help="configuration-space model scan")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a-max", type=int, default=3)
    p.add_argument("--allow-large", action="store_true", help="ignore desk-scale caps")
    p.set_defaults(func=cmd_os_scan)

    p = sub.add_parser("wreath-scan", parents=[common], help="wreath-product Betti scan")
    p.add_argument("--graded-dims", required=True, help="comma list, e.g. 1,2")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_wreath_scan)

    p = sub.add_parser("kunneth", parents=[common], help="graded tensor-power character")
    p.add_argument("--graded-dims", required=True, help="comma list, e.g. 1,2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--decompose", action="store_true")
    p.set_defaults(func=cmd_kunneth)

    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Pull --config out of argv and splice the file's key=value pairs in
    as flags right after the subcommand, so explicit flags win."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise DomainError("--config needs a path")
    path = argv[idx + 1]
    rest = argv[:idx] + argv[idx + 2 :]
    flags: list[str] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise DomainError(f"bad config line (want key=value): {line!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if value.lower() in ("true", "false"):
                if value.lower() == "true":
                    flags.append(f"--{key}")
            else:
                flags.extend((f"--{key}", value))
    if not rest:
        raise DomainError("--config given without a subcommand")
    return rest[:1] + flags + rest[1:]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(argv)
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            parser.error("a subcommand is required")
        payload = args.func(args)
        _emit(payload, args)
        return 0
    except (DomainError, OSError) as exc:
        print(f"fistab: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"fistab: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 64


if __name__ == "__main__":
    sys.exit(main())

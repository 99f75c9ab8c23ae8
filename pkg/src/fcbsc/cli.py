"""Command-line entry point: ``fcbsc <command> [options]``.

Exit codes: 0 ok, 2 invalid input, 3 inconclusive (budget), 4 invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bounds, codesearch, oracle, reqmatrix
from .bsymbol import ChannelParams
from .errors import FcbscError
from .gf import FieldSpec, field_from_order, field_make
from .linfunc import LinearFunction, identity, linfunc_make

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_VIOLATION = 0, 2, 3, 4

TABLE_HEADER = ["q", "k", "l", "b", "t", "s", "plotkin_num", "plotkin_den", "ceiling", "nb_B1", "oracle", "nb_B2", "status"]


class UsageError(FcbscError):
    code = "invalid_input"


@dataclass
class RunConfig:
    spec: FieldSpec
    functions: list[LinearFunction]
    b: list[int]
    t: list[int]
    budget: int
    fmt: str
    out: Path | None

    @property
    def f(self) -> LinearFunction:
        return self.functions[0]

    @property
    def params(self) -> ChannelParams:
        return ChannelParams(self.b[0], self.t[0])


def parse_matrix(text: str) -> list[list[int]]:
    """``"1,0;0,1"``, JSON ``[[1,0],[0,1]]``, or ``@path`` to a CSV file."""
    text = text.strip()
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        return [[int(c) for c in r] for r in rows]
    if text.startswith("["):
        data = json.loads(text)
        return data if data and isinstance(data[0], list) else [data]
    return [[int(c) for c in row.split(",")] for row in text.split(";") if row.strip()]


def parse_function(text: str, spec: FieldSpec) -> LinearFunction:
    if text.startswith("identity:"):
        return identity(int(text.split(":", 1)[1]), spec)
    try:
        rows = parse_matrix(text)
    except (ValueError, json.JSONDecodeError, OSError) as exc:
        raise UsageError(f"cannot parse --f {text!r}: {exc}") from None
    return linfunc_make(rows, spec)


def parse_int_list(text: str) -> list[int]:
    """``"1,2,5"`` or ``"1..3"`` (inclusive); empty string gives ``[]``."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in str(text).split(","))):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _field(args) -> FieldSpec:
    modulus = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    if args.p is not None:
        return field_make(args.p, args.m or 1, modulus)
    return field_from_order(args.q or 2, modulus)


def load_config(args) -> RunConfig:
    if args.config:
        data = json.loads(Path(args.config).read_text())
        fld = data.get("field", {})
        for key in ("p", "m", "q"):
            if getattr(args, key) is None and key in fld:
                setattr(args, key, fld[key])
        if args.modulus is None and fld.get("modulus"):
            args.modulus = ",".join(str(c) for c in fld["modulus"])
        if not args.f and "function" in data:
            fn = data["function"]
            args.f = [fn if isinstance(fn, str) else json.dumps(fn)]
        params = data.get("params", {})
        args.b = args.b if args.b is not None else str(params.get("b", ""))
        args.t = args.t if args.t is not None else str(params.get("t", ""))
        if args.budget is None and "budget" in data:
            args.budget = int(data["budget"])
    spec = _field(args)
    functions = [parse_function(text, spec) for text in (args.f or [])]
    b = parse_int_list(args.b if args.b is not None else "1")
    t = parse_int_list(args.t if args.t is not None else "1")
    return RunConfig(
        spec=spec,
        functions=functions,
        b=b,
        t=t,
        budget=args.budget if args.budget is not None else codesearch.DEFAULT_BUDGET,
        fmt=args.format,
        out=Path(args.out) if args.out else None,
    )


def _require_function(cfg: RunConfig) -> LinearFunction:
    if not cfg.functions:
        raise UsageError("--f is required")
    return cfg.f


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------- commands


def cmd_bound(cfg: RunConfig, args) -> int:
    f = _require_function(cfg)
    report = bounds.sandwich_report(f, cfg.params, args.search, args.oracle, cfg.budget)
    _emit(cfg, _dump(report.to_json()))
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def _requirement(cfg: RunConfig, args) -> reqmatrix.RequirementMatrix:
    if args.matrix:
        try:
            return reqmatrix.custom(parse_matrix(args.matrix))
        except (ValueError, json.JSONDecodeError, OSError) as exc:
            raise UsageError(f"cannot parse --matrix: {exc}") from None
    return reqmatrix.for_linear(_require_function(cfg), cfg.params, args.kind)


def cmd_matrix(cfg: RunConfig, args) -> int:
    B = _requirement(cfg, args)
    if cfg.fmt == "json":
        _emit(cfg, _dump({"kind": B.kind, "messages": [u.to_str() for u in B.messages], "entries": B.entries.tolist()}))
    else:
        _emit(cfg, B.to_csv())
    return EXIT_OK


def cmd_nb_search(cfg: RunConfig, args) -> int:
    B = _requirement(cfg, args)
    res = codesearch.min_length_search(B, cfg.spec, cfg.params.b, cfg.budget)
    payload = res.to_json()
    payload["greedy_upper_bound"] = codesearch.greedy_upper_bound(B, cfg.spec, cfg.params.b)
    _emit(cfg, _dump(payload))
    return EXIT_OK if res.status == "exact" else EXIT_INCONCLUSIVE


def cmd_oracle(cfg: RunConfig, args) -> int:
    f = _require_function(cfg)
    res = oracle.exact_optimal_redundancy(f.label, cfg.spec, f.k, cfg.params, cap=args.cap, budget=cfg.budget)
    _emit(cfg, _dump(res.to_json()))
    return EXIT_OK if res.status == "exact" else EXIT_INCONCLUSIVE


def _simulation(enc: oracle.EncoderMap, f: LinearFunction, params: ChannelParams) -> dict:
    by_weight = {
        str(w): oracle.decode_failures_by_weight(enc, f.label, params, w, w) for w in range(params.t + 2)
    }
    return {
        "valid": oracle.is_valid_fcbsc(enc, f.label, params),
        "failures_up_to_t": sum(by_weight[str(w)] for w in range(params.t + 1)),
        "failures_by_weight": by_weight,
    }


def cmd_simulate(cfg: RunConfig, args) -> int:
    f = _require_function(cfg)
    if args.encoder:
        enc = oracle.EncoderMap.from_json(json.loads(Path(args.encoder).read_text()), cfg.spec)
    else:
        res = oracle.exact_optimal_redundancy(f.label, cfg.spec, f.k, cfg.params, cap=args.cap, budget=cfg.budget)
        if res.witness is None:
            _emit(cfg, _dump({"status": res.status, "bracket": list(res.bracket)}))
            return EXIT_INCONCLUSIVE
        enc = res.witness
    payload = {"encoder": enc.to_json(), "r": enc.r, **_simulation(enc, f, cfg.params)}
    _emit(cfg, _dump(payload))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    f = _require_function(cfg)
    report = bounds.sandwich_report(f, cfg.params, True, True, cfg.budget, oracle_cap=args.cap)
    payload = report.to_json()
    payload["chain"] = [str(v) for _, v in report.chain()]
    if report.inconclusive:
        payload["status"] = "inconclusive"
        _emit(cfg, _dump(payload))
        return EXIT_INCONCLUSIVE
    violations = report.violations()
    sim = _simulation(report.oracle_result.witness, f, cfg.params)
    payload["simulation"] = sim
    if sim["failures_up_to_t"] or not sim["valid"]:
        violations.append("witness decodes every <= t pattern")
    payload["violations"] = violations
    payload["status"] = "violation" if violations else "ok"
    _emit(cfg, _dump(payload))
    if violations:
        print(f"error: invariant_violation: {'; '.join(violations)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def table_rows(cfg: RunConfig, search: bool, run_oracle: bool) -> list[list[str]]:
    rows = []
    for f in cfg.functions:
        for b in cfg.b:
            for t in cfg.t:
                base = [f.spec.q, f.k, f.l, b, t]
                params = ChannelParams(b, t)
                try:
                    rep = bounds.sandwich_report(f, params, search, run_oracle, cfg.budget)
                except FcbscError as exc:
                    rows.append([*base, "", "", "", "", "", "", "", exc.code])
                    continue
                nb1 = rep.n_b_B1.min_length if rep.n_b_B1 else None
                nb2 = rep.n_b_B2.min_length if rep.n_b_B2 else None
                status = "timeout" if rep.inconclusive else "ok"
                vals = [rep.s, rep.plotkin_value.numerator, rep.plotkin_value.denominator, rep.plotkin_ceiling, nb1, rep.oracle_r, nb2]
                rows.append([*base, *("" if v is None else v for v in vals), status])
    return [[str(x) for x in r] for r in rows]


def cmd_table(cfg: RunConfig, args) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    rows = table_rows(cfg, args.search, args.oracle)
    w.writerows(rows)
    _emit(cfg, buf.getvalue())
    return EXIT_INCONCLUSIVE if any(r[-1] == "timeout" for r in rows) else EXIT_OK


COMMANDS = {
    "bound": cmd_bound,
    "matrix": cmd_matrix,
    "nb-search": cmd_nb_search,
    "oracle": cmd_oracle,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--q", type=int, help="field order (prime power)")
    common.add_argument("--p", type=int, help="field characteristic")
    common.add_argument("--m", type=int, help="extension degree")
    common.add_argument("--modulus", help="comma-separated modulus coefficients, constant first")
    common.add_argument("--f", action="append", help="matrix: '1,0;0,1', JSON, @file.csv or identity:k")
    common.add_argument("--b", help="read width (list or range for table)")
    common.add_argument("--t", help="error parameter (list or range for table)")
    common.add_argument("--budget", type=int)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="fcbsc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="evaluate the redundancy lower bound")
    p.add_argument("--search", action="store_true", help="also compute N_b(B1), N_b(B2)")
    p.add_argument("--oracle", action="store_true", help="also compute exact optimal redundancy")

    for name, hlp in (("matrix", "dump a requirement matrix"), ("nb-search", "minimal irregular-distance code length")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--kind", choices=["B1", "B2"], default="B1")
        p.add_argument("--matrix", help="custom requirement matrix instead of --f")
    sub.choices["matrix"].set_defaults(format="csv")

    for name, hlp in (
        ("oracle", "exact optimal redundancy by exhaustive search"),
        ("simulate", "replay all bounded-weight read errors through the decoder"),
        ("verify", "check the full bound/search/oracle chain"),
    ):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--cap", type=int, default=8, help="largest redundancy tried")
    sub.choices["simulate"].add_argument("--encoder", help="JSON encoder map file")

    p = sub.add_parser("table", parents=[common], help="CSV sweep over functions, b and t")
    p.add_argument("--search", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(format="csv")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg, args)
    except FcbscError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: invalid_input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

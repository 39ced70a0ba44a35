"""Command-line interface: ``subpoisson <command> ...``.

Exit status is 0 on success, 1 when a verification report fails and 2 on
usage errors (bad flags, unparsable descriptors, unreadable sample files).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import bounds as _bounds
from .closure import (
    ProxyCertificate, cert_abs, cert_bounded_multiplier, cert_convex, cert_from_bounded,
    cert_from_subgaussian, cert_scale, cert_sum, certificate,
)
from .distributions import (
    DescriptorError, Distribution, IndependentSum, Scaled, abs_centered, catalog,
    parse_descriptor,
)
from .empirical import empirical_proxy, load_samples, mc_verify_propositions, mc_verify_tail_bounds, SUITES
from .orlicz import orlicz_summary
from .proxy import SolverOptions, optimal_proxy
from .special_functions import DomainError

SCHEMA = "subpoisson/v1"
FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


# -- output ------------------------------------------------------------------

def _plain(obj):
    """JSON-safe copy: non-finite floats become the strings "inf" / "-inf"."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        obj = obj.item()
    if isinstance(obj, float):
        if math.isnan(obj):
            raise ValueError("NaN cannot be serialized")
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
    return obj


def to_json(payload: dict) -> str:
    """Canonical JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(_plain({"schema": SCHEMA, **payload}), sort_keys=True, indent=2) + "\n"


def _fmt6(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (float, np.floating)):
        return "inf" if x == math.inf else "-inf" if x == -math.inf else f"{x:.6g}"
    return str(x)


def to_table(rows: list[dict], columns: list[str]) -> str:
    cells = [[_fmt6(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_plain(r.get(c)) if not isinstance(r.get(c), float) or math.isinf(r[c])
                    else repr(r[c]) for c in columns])
    return buf.getvalue()


def _emit(fmt: str, payload: dict, rows: list[dict], columns: list[str]) -> str:
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(rows, columns)
    return to_table(rows, columns)


# -- argument helpers ----------------------------------------------------------

def _descriptor(text: str) -> Distribution:
    try:
        return parse_descriptor(text)
    except DescriptorError as e:
        raise UsageError(f"cannot parse descriptor: {e}") from e
    except (ValueError, DomainError) as e:
        raise UsageError(f"invalid distribution {text!r}: {e}") from e


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError as e:
        raise UsageError(f"not a number: {text!r}") from e


def parse_t_grid(text: str) -> list[float]:
    """``a:b:step`` (inclusive of b up to rounding), a comma list, or one value."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"--t expects a:b:step, got {text!r}")
        a, b, step = map(_float, parts)
        if not step > 0.0 or b < a:
            raise UsageError("--t needs step > 0 and b >= a")
        count = int(math.floor((b - a) / step + 1e-9)) + 1
        return [a + i * step for i in range(count)]
    return [_float(p) for p in text.split(",")]


def _options(args) -> SolverOptions:
    try:
        return SolverOptions(tol=args.tol, grid_per_decade=args.grid_per_decade,
                             lambda_max=args.lambda_max, divergence_cap=args.divergence_cap)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _leaf(d: Distribution, opts: SolverOptions) -> ProxyCertificate:
    """Two-sided leaf certificate: analytic value when known, else numeric."""
    a = d.analytic_proxies()
    if a is not None:
        return certificate(a.sp_two_sided, rule="analytic", source=d.descriptor())
    return certificate(optimal_proxy(d, "two_sided", opts).value, rule="numeric", source=d.descriptor())


# -- commands ------------------------------------------------------------------

def cmd_proxy(args) -> tuple[str, int]:
    opts = _options(args)
    denom = "half_lambda_squared" if args.subgaussian else "phi"
    if args.samples:
        try:
            s = load_samples(args.samples, args.column)
        except (OSError, ValueError, IndexError) as e:
            raise UsageError(f"cannot read samples: {e}") from e
        sides = ("upper", "lower", "two_sided") if args.side == "all" else (args.side,)
        est = {side: empirical_proxy(s, side) for side in sides}
        payload = {"command": "proxy", "source": s.source, "n": len(s),
                   "estimate": {k: r.to_dict() for k, r in est.items()},
                   "note": "plug-in estimate from samples; not a certified bound"}
        rows = [{"side": r.side, "estimate": r.value, "argmax_lambda": r.argmax_lambda, "n": len(s)}
                for r in est.values()]
        return _emit(args.format, payload, rows, ["side", "estimate", "argmax_lambda", "n"]), 0
    if not args.descriptor:
        raise UsageError("proxy needs a descriptor or --samples")
    d = _descriptor(args.descriptor)
    analytic = None if args.subgaussian else d.analytic_proxies()
    rows, results = [], {}
    sides = ("upper", "lower", "two_sided") if args.side == "all" else (args.side,)
    for side in sides:
        r = optimal_proxy(d, side, opts, denom)
        results[side] = r
        a = None if analytic is None else {"upper": analytic.sp_upper, "lower": analytic.sp_lower,
                                           "two_sided": analytic.sp_two_sided}[side]
        if a is None:
            delta = None
        elif a == r.value:
            delta = 0.0
        elif math.isinf(a) or math.isinf(r.value):
            delta = math.inf
        else:
            delta = abs(r.value - a) / max(abs(a), 1e-300)
        rows.append({"side": side, "analytic": a, "numeric": r.value, "rel_delta": delta,
                     "argmax_lambda": r.argmax_lambda, "divergent": r.diagnostics.divergent})
    payload = {
        "command": "proxy",
        "descriptor": d.descriptor(),
        "denominator": denom,
        "variance": d.variance,
        "analytic": None if analytic is None else analytic.to_dict(),
        "numeric": {k: v.to_dict() for k, v in results.items()},
        "agreement": {r["side"]: r["rel_delta"] for r in rows},
    }
    cols = ["side", "analytic", "numeric", "rel_delta", "argmax_lambda", "divergent"]
    return _emit(args.format, payload, rows, cols), 0


def cmd_bound(args) -> tuple[str, int]:
    ts = parse_t_grid(args.t)
    kinds = list(_bounds.KINDS) if args.kind == "all" else [args.kind]
    try:
        curves = [_bounds.bound_curve(k, args.sigma2, ts, args.side, args.sigma2_minus) for k in kinds]
    except DomainError as e:
        raise UsageError(str(e)) from e
    rows = [{"t": t, **{c.kind: c.points[i][1] for c in curves}} for i, t in enumerate(ts)]
    payload = {"command": "bound", "curves": [c.to_dict() for c in curves]}
    return _emit(args.format, payload, rows, ["t"] + kinds), 0


def _cert_op(args, opts) -> tuple[ProxyCertificate, Distribution | None]:
    op, operands = args.op, args.operands
    need = {"sum": None, "scale": 2, "convex": 3, "abs": 1, "multiplier": 1, "subgaussian": 1}
    if op in need and need[op] is not None and len(operands) != need[op]:
        raise UsageError(f"cert {op} takes {need[op]} operand(s), got {len(operands)}")
    try:
        if op == "sum":
            if not operands:
                raise UsageError("cert sum needs at least one descriptor")
            ds = [_descriptor(t) for t in operands]
            return cert_sum(_leaf(d, opts) for d in ds), IndependentSum(tuple(ds))
        if op == "scale":
            a, d = _float(operands[0]), _descriptor(operands[1])
            return cert_scale(a, _leaf(d, opts)), Scaled(a, d) if abs(a) <= 1.0 else None
        if op == "convex":
            a = _float(operands[0])
            x, y = _descriptor(operands[1]), _descriptor(operands[2])
            mix = IndependentSum((Scaled(1.0 - a, x), Scaled(a, y))) if 0.0 <= a <= 1.0 else None
            return cert_convex(a, _leaf(x, opts), _leaf(y, opts)), mix
        if op == "abs":
            d = _descriptor(operands[0])
            return cert_abs(_leaf(d, opts)), abs_centered(d)
        if op == "multiplier":
            return cert_bounded_multiplier(_leaf(_descriptor(operands[0]), opts)), None
        if op == "bounded":
            if not operands:
                raise UsageError("cert bounded needs a shape")
            return cert_from_bounded(operands[0], *map(_float, operands[1:])), None
        if op == "subgaussian":
            return cert_from_subgaussian(_float(operands[0]), args.side), None
    except (ValueError, DomainError, NotImplementedError) as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(f"cert {op}: {e}") from e
    raise UsageError(f"unknown cert operation {op!r}")


def cmd_cert(args) -> tuple[str, int]:
    opts = _options(args)
    cert, target = _cert_op(args, opts)
    payload = {"command": "cert", "op": args.op, "certificate": cert.to_dict()}
    row = {"op": args.op, "side": cert.side, "bound": cert.bound, "optimal": None,
           "steps": " > ".join(s.rule for s in cert.derivation)}
    if target is not None and args.check:
        opt = optimal_proxy(target, cert.side, opts).value
        payload["check"] = {"descriptor": target.descriptor(), "optimal": opt,
                            "sound": opt <= cert.bound + 1e-6}
        row["optimal"] = opt
    return _emit(args.format, payload, [row], ["op", "side", "bound", "optimal", "steps"]), 0


def cmd_orlicz(args) -> tuple[str, int]:
    d = _descriptor(args.descriptor)
    a = d.analytic_proxies()
    sigma2 = a.sp_two_sided if a is not None else optimal_proxy(d, "two_sided", _options(args)).value
    summary = orlicz_summary(d, sigma2)
    payload = {"command": "orlicz", "descriptor": d.descriptor(), "sigma2": sigma2, **summary}
    row = {"descriptor": d.descriptor(), "sigma2": sigma2, **summary}
    cols = ["descriptor", "sigma2", "psi1", "psi1_bound_from_proxy", "psi2", "psi2_bridge_bound"]
    return _emit(args.format, payload, [row], cols), 0


def cmd_verify(args) -> tuple[str, int]:
    if args.descriptor:
        d = _descriptor(args.descriptor)
        if args.sigma2 is None:
            a = d.analytic_proxies()
            if a is None:
                raise UsageError("verify with a descriptor needs --sigma2 for non-catalog laws")
            proxies = {k: v for k, v in (("upper", a.sp_upper), ("lower", a.sp_lower)) if math.isfinite(v)}
        else:
            proxies = {"upper": args.sigma2}
        ts = parse_t_grid(args.t) if args.t else None
        try:
            report = mc_verify_tail_bounds(d, proxies, ts, args.n, args.seed)
        except (ValueError, DomainError) as e:
            raise UsageError(str(e)) from e
    else:
        report = mc_verify_propositions(args.suite, args.n, args.seed)
    payload = {"command": "verify", "report": report.to_dict()}
    rows = [p.to_dict() for p in report.points]
    cols = ["label", "observed", "bound", "tolerance", "margin", "passed"]
    out = _emit(args.format, payload, rows, cols)
    if args.format == "table":
        out += f"{report.check}: {'PASS' if report.passed else 'FAIL'} ({len(report.points)} points, " \
               f"{len(report.failures())} failed, worst margin {_fmt6(report.worst_margin)})\n"
    return out, 0 if report.passed else 1


def cmd_catalog(args) -> tuple[str, int]:
    rows = []
    for d in catalog():
        a = d.analytic_proxies()
        rows.append({"descriptor": d.descriptor(), "mean": d.mean, "variance": d.variance,
                     "sp_upper": a.sp_upper, "sp_lower": a.sp_lower, "sp_two_sided": a.sp_two_sided,
                     "source": a.source})
    cols = ["descriptor", "mean", "variance", "sp_upper", "sp_lower", "sp_two_sided"]
    return _emit(args.format, {"command": "catalog", "members": rows}, rows, cols), 0


# -- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subpoisson", description="Sub-Poisson variance proxies, tail bounds and checks.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    solver = _Parser(add_help=False)
    defaults = SolverOptions()
    solver.add_argument("--tol", type=float, default=defaults.tol)
    solver.add_argument("--grid-per-decade", type=int, default=defaults.grid_per_decade)
    solver.add_argument("--lambda-max", type=float, default=defaults.lambda_max)
    solver.add_argument("--divergence-cap", type=float, default=defaults.divergence_cap)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("proxy", parents=[common, solver], help="optimal variance proxies")
    q.add_argument("descriptor", nargs="?")
    q.add_argument("--side", choices=("upper", "lower", "two_sided", "all"), default="all")
    q.add_argument("--subgaussian", action="store_true", help="use the lam^2/2 denominator")
    q.add_argument("--samples", help="estimate from a sample file instead")
    q.add_argument("--column", help="CSV column name or index for --samples")
    q.set_defaults(func=cmd_proxy, default_format="table")

    b = sub.add_parser("bound", parents=[common], help="Bennett/Bernstein tail bound curves")
    b.add_argument("--sigma2", type=float, required=True)
    b.add_argument("--sigma2-minus", type=float, default=None)
    b.add_argument("--t", required=True, help="a:b:step, comma list or single value")
    b.add_argument("--kind", choices=_bounds.KINDS + ("all",), default="all")
    b.add_argument("--side", choices=("upper", "lower", "two_sided"), default="upper")
    b.set_defaults(func=cmd_bound, default_format="csv")

    c = sub.add_parser("cert", parents=[common, solver], help="closure certificates")
    c.add_argument("op", choices=("sum", "scale", "convex", "abs", "multiplier", "bounded", "subgaussian"))
    c.add_argument("operands", nargs="*")
    c.add_argument("--side", choices=("upper", "lower", "two_sided"), default="two_sided")
    c.add_argument("--no-check", dest="check", action="store_false",
                   help="skip the numeric optimum of the combined law")
    c.set_defaults(func=cmd_cert, default_format="table")

    o = sub.add_parser("orlicz", parents=[common, solver], help="psi_1 / psi_2 norms and bridges")
    o.add_argument("descriptor")
    o.set_defaults(func=cmd_orlicz, default_format="table")

    v = sub.add_parser("verify", parents=[common], help="Monte-Carlo and invariant checks")
    v.add_argument("descriptor", nargs="?", help="check tail bounds for one law instead of a suite")
    v.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    v.add_argument("--n", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sigma2", type=float, default=None)
    v.add_argument("--t", default=None)
    v.set_defaults(func=cmd_verify, default_format="table")

    k = sub.add_parser("catalog", parents=[common], help="catalog members and known proxies")
    k.set_defaults(func=cmd_catalog, default_format="table")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.format = args.format or args.default_format
        if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
            raise UsageError("--n must be >= 1")
        out, status = args.func(args)
    except UsageError as e:
        stderr.write(f"subpoisson: error: {e}\n")
        return 2
    stdout.write(out)
    return status


def main() -> None:
    sys.exit(run())

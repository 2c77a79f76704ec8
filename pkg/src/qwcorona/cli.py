"""Command-line front end: spectra, corona cross-checks, transfer verdicts.

Output is machine-readable and reproducible: JSON by default (floats
rendered with 12 significant digits, byte-identical across runs), CSV for
grid data.  Exit codes: 0 when a verdict was produced (a negative verdict
included), 2 on parse or precondition errors, 3 when the answer is
undecided-numeric.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .algebraic import QuadExt, recognize_quadext, AmbiguousMatchError
from .corona_spectra import CoronaParams, corona_full_q, corona_spectrum
from .graphs import (
    Graph,
    generate,
    read_edge_list,
    signless_laplacian,
    vertex_complemented_corona,
)
from .spectra import decompose, fidelity_scan, transition_amplitude
from .state_transfer import (
    PST,
    UNDECIDED,
    PGSTSearchResult,
    corona_base_pst_check,
    pgst_cocktail,
    pgst_scan,
    pgst_time_search,
    pst_certify,
)

ENV_PREFIX = "QWC_"


@dataclass(frozen=True)
class RunConfig:
    """Numeric policy shared by all commands; flags beat env beats default."""

    tolerance: float = 1e-9
    cluster_tol: float = 1e-7
    l_bound: int = 10**6
    epsilon: float = 0.01
    t_max: float = 50.0
    steps: int = 2000
    format: str = "json"

    def __post_init__(self) -> None:
        for field in ("tolerance", "cluster_tol", "epsilon", "t_max"):
            if getattr(self, field) <= 0:
                raise ValueError(f"{field} must be positive, got {getattr(self, field)}")
        if self.l_bound <= 0 or self.steps <= 0:
            raise ValueError("l_bound and steps must be positive")
        if self.format not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {self.format!r}")


_ENV_FIELDS = {
    "tolerance": ("TOLERANCE", float),
    "cluster_tol": ("CLUSTER_TOL", float),
    "l_bound": ("L_BOUND", int),
    "epsilon": ("EPSILON", float),
    "t_max": ("T_MAX", float),
    "steps": ("STEPS", int),
    "format": ("FORMAT", str),
}


def build_config(args: argparse.Namespace) -> RunConfig:
    values = {}
    explicit_format = False
    for field, (suffix, cast) in _ENV_FIELDS.items():
        env = os.environ.get(ENV_PREFIX + suffix)
        if env is not None:
            try:
                values[field] = cast(env)
            except ValueError:
                raise ValueError(
                    f"environment variable {ENV_PREFIX + suffix}={env!r} "
                    f"is not a valid {cast.__name__}"
                ) from None
            if field == "format":
                explicit_format = True
        flag = getattr(args, field, None)
        if flag is not None:
            values[field] = flag
            if field == "format":
                explicit_format = True
    cfg = RunConfig(**values)
    object.__setattr__(cfg, "_explicit_format", explicit_format)
    return cfg


# ---------------------------------------------------------------------------
# spec and address parsing


@dataclass(frozen=True)
class ParsedSpec:
    """A graph plus its corona structure when the spec string declared one."""

    text: str
    graph: Graph
    g: Graph = None
    h: Graph = None
    cocktail_m: int = None

    @property
    def is_corona(self) -> bool:
        return self.g is not None


def parse_spec(text: str, file_path: str = None) -> ParsedSpec:
    if file_path is not None:
        return ParsedSpec(text=f"file:{file_path}", graph=read_edge_list(file_path))
    text = text.strip()
    if not text:
        raise ValueError("empty graph spec")
    if text.startswith("cocktail-corona:"):
        tail = text[len("cocktail-corona:") :]
        try:
            m = int(tail)
        except ValueError:
            raise ValueError(
                f"cannot parse {text!r}: parameter {tail!r} (position "
                f"{len('cocktail-corona:')}) is not an integer"
            ) from None
        from .graphs import cocktail_party_graph, complete_graph

        g = cocktail_party_graph(m)
        h = complete_graph(1)
        return ParsedSpec(
            text=text,
            graph=vertex_complemented_corona(g, h),
            g=g,
            h=h,
            cocktail_m=m,
        )
    if text.startswith("corona(") and text.endswith(")"):
        inner = text[len("corona(") : -1]
        depth = 0
        split_at = -1
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split_at = i
                break
        if split_at < 0:
            raise ValueError(
                f"cannot parse {text!r}: expected a top-level comma inside corona(...) "
                f"(position {len('corona(')})"
            )
        left = parse_spec(inner[:split_at])
        right = parse_spec(inner[split_at + 1 :])
        return ParsedSpec(
            text=text,
            graph=vertex_complemented_corona(left.graph, right.graph),
            g=left.graph,
            h=right.graph,
        )
    return ParsedSpec(text=text, graph=generate(text))


def parse_address(text: str, spec: ParsedSpec) -> int:
    """Vertex address: a plain index, base:i, or copy:i:j in corona order."""
    text = text.strip()
    if text.startswith("base:") or text.startswith("copy:"):
        if not spec.is_corona:
            raise ValueError(f"address {text!r} needs a corona spec")
        n1, n2 = spec.g.n, spec.h.n
        parts = text.split(":")
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise ValueError(f"malformed vertex address {text!r}") from None
        if parts[0] == "base" and len(nums) == 1:
            i = nums[0]
            if not 0 <= i < n1:
                raise ValueError(f"base index {i} out of range [0, {n1})")
            return i
        if parts[0] == "copy" and len(nums) == 2:
            i, j = nums
            if not 0 <= i < n1:
                raise ValueError(f"base index {i} out of range [0, {n1})")
            if not 0 <= j < n2:
                raise ValueError(f"attachment index {j} out of range [0, {n2})")
            return n1 + i * n2 + j
        raise ValueError(f"malformed vertex address {text!r}")
    try:
        idx = int(text)
    except ValueError:
        raise ValueError(f"malformed vertex address {text!r}") from None
    if not 0 <= idx < spec.graph.n:
        raise ValueError(f"vertex {idx} out of range [0, {spec.graph.n})")
    return idx


# ---------------------------------------------------------------------------
# JSON rendering (deterministic)


def _fmt_float(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0
    return f"{x:.12g}"


def render_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return render_json({"re": obj.real, "im": obj.imag})
    if isinstance(obj, QuadExt):
        return render_json({"a": obj.a, "b": obj.b, "delta": obj.delta})
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, np.ndarray):
        return render_json(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _value_json(v):
    """Eigenvalue slot: exact quadratic form when available, approx otherwise."""
    if isinstance(v, QuadExt):
        return v
    return {"approx": float(v)}


def _recognized(x: float, tolerance: float):
    try:
        e = recognize_quadext(x, tolerance=tolerance)
    except AmbiguousMatchError:
        return None
    return e


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args, cfg: RunConfig) -> tuple:
    spec = parse_spec(args.spec, args.file)
    dec = decompose(signless_laplacian(spec.graph), cfg.cluster_tol)
    if cfg.format == "csv":
        lines = ["value,multiplicity"]
        for val, mult in zip(dec.eigenvalues, dec.multiplicities):
            lines.append(f"{_fmt_float(val)},{mult}")
        return "\n".join(lines), 0
    rows = []
    for val, mult in zip(dec.eigenvalues, dec.multiplicities):
        exact = _recognized(val, cfg.tolerance)
        rows.append(
            {
                "value": _value_json(exact if exact is not None else val),
                "multiplicity": mult,
            }
        )
    out = {
        "spec": spec.text,
        "n": spec.graph.n,
        "eigenvalues": rows,
        "warnings": list(dec.warnings),
    }
    if args.projectors:
        out["projectors"] = [p for p in dec.projectors]
    return render_json(out), 0


def cmd_corona_spectrum(args, cfg: RunConfig) -> tuple:
    gspec = parse_spec(args.g_spec)
    hspec = parse_spec(args.h_spec)
    params = CoronaParams.from_graphs(gspec.graph, hspec.graph)
    gdec = decompose(signless_laplacian(gspec.graph), cfg.cluster_tol)
    hdec = decompose(signless_laplacian(hspec.graph), cfg.cluster_tol)
    spectrum = corona_spectrum(gdec, hdec, params)

    oracle = decompose(corona_full_q(gspec.graph, hspec.graph), cfg.cluster_tol)
    closed_sorted = np.sort(
        np.concatenate(
            [np.full(e.multiplicity, float(e.value)) for e in spectrum.entries]
        )
    )
    oracle_sorted = np.sort(
        np.concatenate(
            [
                np.full(m, v)
                for v, m in zip(oracle.eigenvalues, oracle.multiplicities)
            ]
        )
    )
    max_dev = float(np.max(np.abs(closed_sorted - oracle_sorted)))

    if cfg.format == "csv":
        lines = ["kind,value,origin,multiplicity"]
        for e in spectrum.entries:
            lines.append(
                f"{e.kind},{_fmt_float(float(e.value))},{_fmt_float(e.origin)},{e.multiplicity}"
            )
        lines.append(f"# max_deviation,{_fmt_float(max_dev)}")
        return "\n".join(lines), 0

    entries = []
    for e in spectrum.entries:
        entries.append(
            {
                "kind": e.kind,
                "value": _value_json(e.value),
                "origin": e.origin,
                "multiplicity": e.multiplicity,
                "radicand": e.radicand,
            }
        )
    out = {
        "g": gspec.text,
        "h": hspec.text,
        "params": {
            "n1": params.n1,
            "n2": params.n2,
            "r1": params.r1,
            "r2": params.r2,
            "s": params.s,
            "t": params.t,
        },
        "closed_form": entries,
        "oracle": [
            {"value": v, "multiplicity": m}
            for v, m in zip(oracle.eigenvalues, oracle.multiplicities)
        ],
        "max_deviation": max_dev,
    }
    if args.materialize_projectors:
        out["projectors"] = [spectrum.projector(k) for k in range(len(spectrum.entries))]
    return render_json(out), 0


def cmd_check_pst(args, cfg: RunConfig) -> tuple:
    spec = parse_spec(args.spec, args.file)
    u = parse_address(args.u, spec)
    v = parse_address(args.v, spec)
    mode = "generic"
    report = None
    if spec.is_corona and u < spec.g.n and v < spec.g.n:
        try:
            report = corona_base_pst_check(
                spec.g, spec.h, u, v, tol=cfg.tolerance, cluster_tol=cfg.cluster_tol
            )
            mode = "corona-base"
        except ValueError:
            report = None
    if report is None:
        dec = decompose(signless_laplacian(spec.graph), cfg.cluster_tol)
        report = pst_certify(dec, u, v, tol=cfg.tolerance)
    out = {"spec": spec.text, "mode": mode}
    out.update(report.to_json_dict())
    out["support"] = [_value_json(x) for x in report.support]
    out["lambda_plus"] = [_value_json(x) for x in report.lambda_plus]
    out["lambda_minus"] = [_value_json(x) for x in report.lambda_minus]
    code = 3 if report.verdict == UNDECIDED else 0
    return render_json(out), code


def cmd_search_pgst(args, cfg: RunConfig) -> tuple:
    spec = parse_spec(args.spec, args.file)
    note = None
    if spec.cocktail_m is not None:
        if args.u is not None or args.v is not None:
            got = (args.u, args.v)
            if got != ("0", "1"):
                raise ValueError(
                    "the cocktail party search runs between the antipodal base pair 0 1"
                )
        result = pgst_cocktail(spec.cocktail_m, cfg.epsilon, cfg.l_bound)
        mode = "cocktail"
    else:
        if not spec.is_corona:
            raise ValueError("search-pgst needs a corona spec")
        if args.u is None or args.v is None:
            raise ValueError("search-pgst needs two base vertex indices")
        u = _base_index(args.u, spec)
        v = _base_index(args.v, spec)
        params = CoronaParams.from_graphs(spec.g, spec.h)
        gdec = decompose(signless_laplacian(spec.g), cfg.cluster_tol)
        try:
            result = pgst_time_search(gdec, params, u, v, cfg.epsilon, cfg.l_bound)
            mode = "guaranteed"
        except ValueError as err:
            note = str(err)
            base = pst_certify(gdec, u, v, tol=cfg.tolerance)
            g_par = base.g if base.verdict == PST and base.g else 1
            best_l, time, fid, achieved = pgst_scan(
                gdec, params, u, v, cfg.epsilon, cfg.l_bound, g_par
            )
            result = PGSTSearchResult(
                u=u,
                v=v,
                target_epsilon=cfg.epsilon,
                l_bound=cfg.l_bound,
                achieved=achieved,
                basis="heuristic-search",
                best_l=best_l,
                time=time,
                fidelity=fid,
            )
            mode = "heuristic"
    out = {"spec": spec.text, "mode": mode}
    out.update(result.to_json_dict())
    if note is not None:
        out["note"] = note
    return render_json(out), 0


def _base_index(text: str, spec: ParsedSpec) -> int:
    idx = parse_address(text, spec)
    if idx >= spec.g.n:
        raise ValueError("the time search runs between base vertices only")
    return idx


def cmd_fidelity(args, cfg: RunConfig) -> tuple:
    spec = parse_spec(args.spec, args.file)
    u = parse_address(args.u, spec)
    v = parse_address(args.v, spec)
    dec = decompose(signless_laplacian(spec.graph), cfg.cluster_tol)
    if args.tau is not None:
        amp = transition_amplitude(dec, u, v, float(args.tau))
        out = {
            "spec": spec.text,
            "u": u,
            "v": v,
            "tau": float(args.tau),
            "amplitude": amp,
            "fidelity": float(abs(amp) ** 2),
        }
        return render_json(out), 0

    if args.grid is not None:
        start, stop, steps = _parse_grid(args.grid)
    else:
        start, stop, steps = 0.0, cfg.t_max, cfg.steps
    if start == 0.0:
        scan = fidelity_scan(dec, u, v, stop, steps)
        taus, fids = scan.taus, scan.fidelities
        best_tau, best_fid = scan.best_tau, scan.best_fidelity
    else:
        taus = start + (stop - start) * np.arange(1, steps + 1) / steps
        fids = np.abs(transition_amplitude(dec, u, v, taus)) ** 2
        k = int(np.argmax(fids))
        best_tau, best_fid = float(taus[k]), float(fids[k])

    fmt = cfg.format if getattr(cfg, "_explicit_format", False) else "csv"
    if fmt == "csv":
        lines = ["tau,fidelity"]
        for tval, fval in zip(taus, fids):
            lines.append(f"{_fmt_float(tval)},{_fmt_float(fval)}")
        return "\n".join(lines), 0
    out = {
        "spec": spec.text,
        "u": u,
        "v": v,
        "taus": taus,
        "fidelities": fids,
        "best_tau": best_tau,
        "best_fidelity": best_fid,
    }
    return render_json(out), 0


def _parse_grid(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:steps, got {text!r}")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"grid must be start:stop:steps, got {text!r}") from None
    if start < 0 or stop <= start or steps < 2:
        raise ValueError(f"grid needs 0 <= start < stop and steps >= 2, got {text!r}")
    return start, stop, steps


# ---------------------------------------------------------------------------
# argument wiring


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--cluster-tol", dest="cluster_tol", type=float, default=None)
    p.add_argument("--l-bound", dest="l_bound", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--t-max", dest="t_max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--file", default=None, help="read the graph from an edge list file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwc",
        description="Signless Laplacian walk analysis on graphs and their coronas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues with exact forms where possible")
    p.add_argument("spec")
    p.add_argument("--projectors", action="store_true")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("corona-spectrum", help="closed form vs numeric oracle")
    p.add_argument("g_spec")
    p.add_argument("h_spec")
    p.add_argument("--materialize-projectors", action="store_true")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_corona_spectrum)

    p = sub.add_parser("check-pst", help="perfect transfer verdict for a vertex pair")
    p.add_argument("spec")
    p.add_argument("u")
    p.add_argument("v")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_check_pst)

    p = sub.add_parser("search-pgst", help="bounded search for near-perfect transfer")
    p.add_argument("spec")
    p.add_argument("u", nargs="?", default=None)
    p.add_argument("v", nargs="?", default=None)
    _add_config_flags(p)
    p.set_defaults(handler=cmd_search_pgst)

    p = sub.add_parser("fidelity", help="amplitude at one time or over a grid")
    p.add_argument("spec")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--grid", default=None, help="start:stop:steps")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_fidelity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = build_config(args)
        payload, code = args.handler(args, cfg)
    except (ValueError, OSError, AssertionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(payload)
    return code


def entrypoint() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = 1
    sys.exit(code)

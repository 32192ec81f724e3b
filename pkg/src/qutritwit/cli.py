"""Command-line interface: classification, witness and state emission,
detection scans, certificates, structural physical approximation, figure
data, and angle sweeps.

Every command writes a single JSON record

    {"schema_version": "1", "command": ..., "inputs": ..., "results": ...}

to stdout (or --output PATH).  Matrix entries are nested rows of [re, im]
pairs, except when the map parameters are exact rationals, in which case
entries are emitted as "p/q" strings.  Invalid input exits with status 2 and
a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional

import numpy as np

from . import linalg
from .maps import (
    MapParams,
    classify,
    dual,
    improper_coeffs,
    on_ellipse,
    slice_params,
    so2_coeffs,
)
from .oracles import (
    SeeSawConfig,
    indecomposability_certificate,
    min_product_expectation,
    span_rank,
    zero_product_vectors,
)
from .spa import critical_p, spa_region, spa_state
from .states import detects_rho_family, rho_eps
from .witnesses import (
    decompose_tilde,
    exact_witness_entries,
    matrix_entries,
    witness_matrix,
    witness_tilde_matrix,
    witness_u,
)

SCHEMA_VERSION = "1"
SEED_ENV_VAR = "QUTRITWIT_SEED"
DEFAULT_SEED = 7


def _default_seed() -> int:
    try:
        return int(os.environ.get(SEED_ENV_VAR, DEFAULT_SEED))
    except ValueError:
        return DEFAULT_SEED


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse number {text!r}") from exc


def _encode_number(x) -> object:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and math.isinf(x):
        return None
    return x


def _encode_params(p: MapParams) -> dict:
    return {k: _encode_number(v) for k, v in zip("abc", p.astuple())}


def _encode_interval(interval: Optional[tuple[float, float]]):
    if interval is None:
        return None
    lo, hi = interval
    return [_encode_number(lo), _encode_number(hi)]


def _resolve_params(args) -> tuple[MapParams, dict]:
    """Build MapParams from positional (a b c), --bc, or --alpha input."""
    given = [args.params is not None and len(args.params) > 0, args.bc is not None, args.alpha is not None]
    if sum(given) != 1:
        raise ValueError("provide exactly one of: positional a b c, --bc B C, --alpha ALPHA")
    if args.params:
        if len(args.params) != 3:
            raise ValueError("positional parameters must be exactly three numbers: a b c")
        a, b, c = (_parse_number(t) for t in args.params)
        return MapParams(a, b, c), {"a": _encode_number(a), "b": _encode_number(b), "c": _encode_number(c)}
    if args.bc is not None:
        b, c = (_parse_number(t) for t in args.bc)
        return slice_params(b, c), {"b": _encode_number(b), "c": _encode_number(c)}
    alpha = float(args.alpha)
    if getattr(args, "degrees", False):
        alpha = math.radians(alpha)
    improper = bool(getattr(args, "improper", False))
    coeffs = improper_coeffs if improper else so2_coeffs
    return coeffs(alpha), {"alpha": alpha, "improper": improper}


def _seesaw_config(args) -> SeeSawConfig:
    return SeeSawConfig(
        restarts=args.restarts,
        rng_seed=args.seed if args.seed is not None else _default_seed(),
    )


def _witness_of_kind(p: MapParams, kind: str):
    if kind == "standard":
        return witness_matrix(p)
    if kind == "tilde":
        return witness_tilde_matrix(p)
    if kind == "u":
        return witness_u(p)
    raise ValueError(f"unknown witness kind {kind!r}")


def _matrix_payload(M, params: Optional[MapParams], kind: str) -> tuple[object, bool]:
    if params is not None and params.is_exact:
        exact_kind = {"u": "u_conjugated"}.get(kind, kind)
        if exact_kind in ("standard", "tilde", "u_conjugated"):
            return exact_witness_entries(params, exact_kind), True
    return matrix_entries(M), False


def _write_record(args, command: str, inputs: dict, results: dict) -> None:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    text = json.dumps(record, indent=2)
    _emit(args, text)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _csv_matrix(M) -> str:
    rows = []
    for row in linalg.as_matrix(M):
        cells = []
        for z in row:
            if abs(z.imag) > 0:
                cells.append(f"{z.real:.17g}{z.imag:+.17g}j")
            else:
                cells.append(f"{z.real:.17g}")
        rows.append(",".join(cells))
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_classify(args) -> int:
    p, inputs = _resolve_params(args)
    cls = classify(p)
    slice_ok = p.on_slice()
    results = {
        "params": _encode_params(p),
        "positivity": cls.positivity.value,
        "decomposability": cls.decomposability.value,
        "on_slice": slice_ok,
        "on_ellipse": on_ellipse(p, tol=args.tol) if slice_ok else None,
        "dual": _encode_params(dual(p)),
        "detection_interval": _encode_interval(detects_rho_family(p)) if slice_ok else None,
    }
    _write_record(args, "classify", inputs, results)
    return 0


def _cmd_witness(args) -> int:
    p, inputs = _resolve_params(args)
    inputs["kind"] = args.kind
    W = _witness_of_kind(p, args.kind)
    if args.format == "csv":
        _emit(args, _csv_matrix(W.matrix))
        return 0
    cfg = _seesaw_config(args)
    entries, exact = _matrix_payload(W.matrix, p, args.kind)
    results = {
        "params": _encode_params(p),
        "kind": W.kind,
        "matrix": entries,
        "exact": exact,
        "trace": W.trace(),
        "min_eigenvalue": W.min_eigenvalue(),
        "block_positivity_estimate": min_product_expectation(W.matrix, cfg).value,
        "seesaw": {"restarts": cfg.restarts, "seed": cfg.rng_seed},
    }
    _write_record(args, "witness", inputs, results)
    return 0


def _cmd_detect(args) -> int:
    p, inputs = _resolve_params(args)
    lo, hi, count = args.eps_grid
    lo, hi = float(lo), float(hi)
    count = int(count)
    if lo <= 0 or hi <= lo or count < 2:
        raise ValueError("--eps-grid requires 0 < LO < HI and N >= 2")
    inputs["kind"] = args.kind
    inputs["eps_grid"] = [lo, hi, count]
    grid = np.linspace(lo, hi, count)
    W = _witness_of_kind(p, args.kind)
    values = [float(linalg.trace_pair(rho_eps(e).matrix, W.matrix).real) for e in grid]
    if args.format == "csv":
        lines = ["eps,value"] + [f"{e:.17g},{v:.17g}" for e, v in zip(grid, values)]
        _emit(args, "\n".join(lines))
        return 0
    results = {
        "params": _encode_params(p),
        "kind": W.kind,
        "eps": [float(e) for e in grid],
        "values": values,
        "detection_interval": _encode_interval(detects_rho_family(p)) if args.kind == "standard" else None,
    }
    _write_record(args, "detect", inputs, results)
    return 0


def _cmd_spa(args) -> int:
    p, inputs = _resolve_params(args)
    res = spa_state(p)
    results = {
        "params": _encode_params(p),
        "p_star": res.p_star,
        "region": spa_region(float(p.b), float(p.c)),
        "separable_certified": res.separable_certified,
        "state": matrix_entries(res.state.matrix),
        "state_min_eigenvalue": linalg.min_eigenvalue(res.state.matrix),
    }
    if res.components is not None:
        comp = res.components
        results["components"] = {
            "sigma_12": matrix_entries(comp.sigma_12.matrix),
            "sigma_13": matrix_entries(comp.sigma_13.matrix),
            "sigma_23": matrix_entries(comp.sigma_23.matrix),
            "sigma_d": matrix_entries(comp.sigma_d.matrix),
            "scale": comp.scale,
        }
    else:
        results["components"] = None
    _write_record(args, "spa", inputs, results)
    return 0


def _cmd_certify(args) -> int:
    p, inputs = _resolve_params(args)
    if args.tilde == args.indecomposable:
        raise ValueError("choose exactly one of --tilde or --indecomposable")
    if args.tilde:
        cert = decompose_tilde(p)
        W = witness_tilde_matrix(p)
        results = {
            "params": _encode_params(p),
            "certificate": "decomposition",
            "P": matrix_entries(cert.P),
            "Q": matrix_entries(cert.Q),
            "scale": cert.scale,
            "min_eig_P": linalg.min_eigenvalue(cert.P),
            "min_eig_Q": linalg.min_eigenvalue(cert.Q),
            "reconstruction_residual": cert.residual(W),
        }
    else:
        found = indecomposability_certificate(p)
        results = {
            "params": _encode_params(p),
            "certificate": "ppt_state" if found else None,
            "eps": found[0] if found else None,
            "value": found[1] if found else None,
        }
    _write_record(args, "certify", inputs, results)
    return 0


def _cmd_figure(args) -> int:
    n = args.resolution
    if n < 8:
        raise ValueError("--resolution must be at least 8")
    ts = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    ellipse = []
    for t in ts:
        x = 4.0 / 3.0 + (2.0 / 3.0) * math.cos(t)
        y = (2.0 / math.sqrt(3.0)) * math.sin(t)
        ellipse.append([(x + y) / 2.0, (x - y) / 2.0])
    results = {
        "ellipse": ellipse,
        "decomposable_line": [[0.0, 0.0], [1.0, 1.0]],
        "simplex": [[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [0.0, 0.0]],
        "spa_lines": {
            "c_eq_1_minus_2b": [[0.0, 1.0], [0.5, 0.0]],
            "b_eq_1_minus_2c": [[1.0, 0.0], [0.0, 0.5]],
        },
        "special_points": {
            "i": [1.0, 0.0],
            "ii": [0.0, 1.0],
            "iii": [1.0, 1.0],
            "iv": [1.0 / 3.0, 1.0 / 3.0],
            "v": [0.0, 0.0],
        },
    }
    _write_record(args, "figure", {"resolution": n}, results)
    return 0


def _cmd_sweep(args) -> int:
    n = args.alpha_grid
    if n < 1:
        raise ValueError("--alpha-grid must be positive")
    coeffs = improper_coeffs if args.improper else so2_coeffs
    family = "improper" if args.improper else "proper"
    if args.what == "rank":
        print("note: span-rank sweep runs a see-saw search per angle (slow)", file=sys.stderr)
    rows = []
    for alpha in np.linspace(0.0, 2 * math.pi, n, endpoint=False):
        p = coeffs(float(alpha))
        a, b, c = p.asfloats()
        row = {"alpha": float(alpha), "a": a, "b": b, "c": c, "sum": a + b + c}
        if args.what == "witness":
            W = witness_tilde_matrix(p) if args.improper else witness_matrix(p)
            row["matrix"] = matrix_entries(W.matrix)
            row["trace"] = W.trace()
            row["min_eigenvalue"] = W.min_eigenvalue()
        elif args.what == "pstar":
            row["p_star"] = critical_p(p)
        elif args.what == "rank":
            W = witness_tilde_matrix(p) if args.improper else witness_matrix(p)
            cfg = _seesaw_config(args)
            zeros = zero_product_vectors(W.matrix, cfg)
            row["zero_count"] = len(zeros)
            row["span_rank"] = span_rank(zeros)
        rows.append(row)
    inputs = {"alpha_grid": n, "family": family, "what": args.what}
    _write_record(args, "sweep", inputs, {"rows": rows})
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="numerical tolerance for reported checks")
    common.add_argument("--seed", type=int, default=None, help=f"see-saw RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})")
    common.add_argument("--restarts", type=int, default=200, help="see-saw restarts")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    common.add_argument("--output", type=str, default=None, help="write output to a file instead of stdout")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("params", nargs="*", help="map parameters a b c (numbers or fractions like 2/3)")
    params.add_argument("--bc", nargs=2, metavar=("B", "C"), default=None, help="parameters on the plane a+b+c = 2")
    params.add_argument("--alpha", type=float, default=None, help="rotation angle in radians")
    params.add_argument("--improper", action="store_true", help="use the improper-rotation family for --alpha")
    params.add_argument("--degrees", action="store_true", help="interpret --alpha in degrees")

    parser = argparse.ArgumentParser(
        prog="qutritwit",
        description="Two-qutrit entanglement witnesses: construction, classification, certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common, params], help="positivity class, decomposability, duality")

    w = sub.add_parser("witness", parents=[common, params], help="emit a witness matrix with diagnostics")
    w.add_argument("--kind", choices=("standard", "tilde", "u"), default="standard")

    d = sub.add_parser("detect", parents=[common, params], help="detection values over an eps grid")
    d.add_argument("--kind", choices=("standard", "tilde", "u"), default="standard")
    d.add_argument("--eps-grid", nargs=3, metavar=("LO", "HI", "N"), default=("0.1", "2.0", "20"))

    sub.add_parser("spa", parents=[common, params], help="structural physical approximation")

    cert = sub.add_parser("certify", parents=[common, params], help="decomposability or indecomposability certificate")
    cert.add_argument("--tilde", action="store_true", help="P + Q^G certificate for the improper-family witness")
    cert.add_argument("--indecomposable", action="store_true", help="PPT probe state with negative expectation")

    fig = sub.add_parser("figure", parents=[common], help="polylines and special points of the parameter-plane figure")
    fig.add_argument("--resolution", type=int, default=360, help="ellipse polyline vertices (>= 8)")

    sw = sub.add_parser("sweep", parents=[common], help="tabulate quantities over a rotation-angle grid")
    sw.add_argument("--alpha-grid", type=int, default=36, help="number of angles on [0, 2 pi)")
    sw.add_argument("--improper", action="store_true", help="sweep the improper-rotation family")
    sw.add_argument("--what", choices=("coeffs", "witness", "pstar", "rank"), default="coeffs")

    return parser


_DISPATCH = {
    "classify": _cmd_classify,
    "witness": _cmd_witness,
    "detect": _cmd_detect,
    "spa": _cmd_spa,
    "certify": _cmd_certify,
    "figure": _cmd_figure,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

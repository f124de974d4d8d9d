"""Command-line interface.

Subcommands: validate, analyze, payload-sweep, optimize, pose-sweep.
Angles are accepted and printed in degrees; everything else stays in SI
units. Numeric output uses 9 significant digits. Exit codes: 0 success,
1 domain errors, 2 usage errors.
"""

import argparse
import math
import sys
from dataclasses import replace

from .contact import GripConfig, holding_max_offset, required_grip_force
from .designfile import parse_design
from .errors import GripperToolError, InfeasibleHoldError, NoFeasiblePayloadError
from .payload import max_payload, payload_sweep
from .pose import gamma_sweep
from .sizing import SizingProblem, check_feasible, maximize_stroke

INFEASIBLE = "INFEASIBLE"

DEG = math.pi / 180.0


def fmt(value: float) -> str:
    """Canonical 9-significant-digit rendering used for all numeric output."""
    return f"{value:.9g}"


def _parse_range(text: str) -> list[float]:
    """start:stop:step, optional trailing 'deg'. Stop is included when it
    lands within 1e-12 (relative) of a step multiple."""
    raw = text.strip()
    factor = 1.0
    if raw.endswith("deg"):
        factor = DEG
        raw = raw[:-3]
    parts = raw.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"range {text!r} must be start:stop:step[deg]"
        )
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range {text!r} has non-numeric parts")
    if step <= 0.0 or stop < start:
        raise argparse.ArgumentTypeError(
            f"range {text!r} needs step > 0 and stop >= start"
        )
    span = (stop - start) / step
    count = round(span)
    if abs(span - count) > 1e-12 * max(1.0, abs(span)):
        count = math.floor(span)
    return [(start + i * step) * factor for i in range(int(count) + 1)]


def _parse_interval(text: str) -> tuple[float, float]:
    raw = text.strip()
    factor = 1.0
    if raw.endswith("deg"):
        factor = DEG
        raw = raw[:-3]
    parts = raw.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"interval {text!r} must be lo:hi[deg]")
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"interval {text!r} has non-numeric parts")
    return lo * factor, hi * factor


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_design(fh.read())


def _cmd_validate(args, out) -> int:
    dims, _, _, _ = _load(args.design)
    violations = check_feasible(dims)
    if not violations:
        print("no violations", file=out)
        return 0
    for v in violations:
        print(f"violation {v.constraint}: margin = {fmt(v.margin)}", file=out)
    return 1


def _cmd_analyze(args, out) -> int:
    dims, spring, model, state = _load(args.design)
    try:
        offset = holding_max_offset(model, state)
        offset_text = "unbounded" if math.isinf(offset) else fmt(offset)
    except InfeasibleHoldError:
        offset_text = INFEASIBLE
    print(f"holding_max_offset_m = {offset_text}", file=out)
    for config in (GripConfig.BACKWARD_BASE, GripConfig.FORWARD_BASE):
        force = required_grip_force(dims, spring, replace(state, config=config))
        print(f"required_grip_force_{config.value}_N = {fmt(force)}", file=out)
    try:
        result = max_payload(model, state, args.d_obj)
        payload_text = fmt(result.max_weight)
    except NoFeasiblePayloadError:
        payload_text = INFEASIBLE
    print(f"max_payload_N = {payload_text}", file=out)
    return 0


def _cmd_payload_sweep(args, out) -> int:
    _, _, model, state = _load(args.design)
    rows = payload_sweep(model, state, args.d_obj, args.alpha, args.d,
                         workers=args.workers)
    print("alpha_deg,d_m,max_weight_N", file=out)
    for alpha, d, weight in rows:
        cell = INFEASIBLE if weight is None else fmt(weight)
        print(f"{fmt(alpha / DEG)},{fmt(d)},{cell}", file=out)
    return 0


def _cmd_optimize(args, out) -> int:
    dims, spring, _, state = _load(args.design)
    problem = SizingProblem(
        d_axis=dims.d_axis, r_edge=dims.r_edge, k=dims.k, w_init=dims.w_init,
        m_bounds=args.m, r_bounds=args.r, theta_init_bounds=args.theta_init,
        grip_budget=args.grip_budget, spring=spring, grasp=state, v=dims.v,
    )
    result = maximize_stroke(problem)
    d = result.dims
    print(f"m_m = {fmt(d.m)}", file=out)
    print(f"r_m = {fmt(d.r)}", file=out)
    print(f"theta_init_deg = {fmt(d.theta_init / DEG)}", file=out)
    print(f"theta_end_deg = {fmt(d.theta_end / DEG)}", file=out)
    print(f"h_m = {fmt(d.h)}", file=out)
    print(f"p_m = {fmt(d.p)}", file=out)
    print(f"q_m = {fmt(d.q)}", file=out)
    print(f"w_init_m = {fmt(d.w_init)}", file=out)
    print(f"stroke_m = {fmt(result.stroke)}", file=out)
    print(f"active_constraints = {','.join(result.active_constraints)}", file=out)
    return 0


def _cmd_pose_sweep(args, out) -> int:
    _, _, model, state = _load(args.design)
    curve = gamma_sweep(model, state, args.samples, workers=args.workers)
    print("gamma_deg,torque_margin_Nm", file=out)
    for gamma, margin in curve.samples:
        cell = INFEASIBLE if math.isnan(margin) else fmt(margin)
        print(f"{fmt(gamma / DEG)},{cell}", file=out)
    print(f"# peak gamma_deg = {fmt(curve.peak_gamma / DEG)} "
          f"margin_Nm = {fmt(curve.peak_margin)}", file=out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grippertool",
        description="Quasi-static analysis of the spring-return parallel-jaw tool",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check dimension feasibility")
    p.add_argument("design")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("analyze", help="hold offset, grip forces, max payload")
    p.add_argument("design")
    p.add_argument("--d-obj", type=float, default=0.0,
                   help="object moment arm in meters (default 0)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("payload-sweep", help="max payload over (alpha, d) grid")
    p.add_argument("design")
    p.add_argument("--alpha", type=_parse_range, required=True,
                   help="tool angle range start:stop:step[deg]")
    p.add_argument("--d", type=_parse_range, required=True,
                   help="grasp offset range start:stop:step (meters)")
    p.add_argument("--d-obj", type=float, default=0.0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_payload_sweep)

    p = sub.add_parser("optimize", help="maximize stroke within bounds")
    p.add_argument("design")
    p.add_argument("--m", type=_parse_interval, required=True,
                   help="bounds lo:hi for the base half-gap (meters)")
    p.add_argument("--r", type=_parse_interval, required=True,
                   help="bounds lo:hi for the linkage length (meters)")
    p.add_argument("--theta-init", type=_parse_interval, required=True,
                   help="bounds lo:hi[deg] for the open angle")
    p.add_argument("--grip-budget", type=float, required=True,
                   help="maximum acceptable grip force (N)")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("pose-sweep", help="torque margin over the hand-tool angle")
    p.add_argument("design")
    p.add_argument("--samples", type=int, default=91)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_pose_sweep)

    return parser


def run(argv, out=None, err=None) -> int:
    """Dispatch argv (without the program name); returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (GripperToolError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line surface: disentangle, compose, squeeze-compose, evolve.

Every command is a thin wrapper over the library with deterministic JSON
output: fixed field order, complex numbers as [re, im] pairs, floats printed
with 17 significant digits so values round-trip exactly.  Exit codes are a
stable contract for pipelines: 0 on success, 2 for input or parse problems,
3 when a requested decomposition does not exist.
"""

from __future__ import annotations

import argparse
import bisect
import cmath
import json
import math
import re
import sys

from .algebra import AlgebraKind, ExponentParams, GroupElement, make_algebra
from .compose import alpha_continued_fraction, compose_many, disentangle
from .errors import SingularDecomposition
from .evolve import (
    HamiltonianSchedule,
    default_checkpoint_stride,
    evolve,
    oscillator_schedule,
)
from .squeeze import SqueezeParams, compose_squeezes, factor_squeeze_rotation

__all__ = ["main", "entry_point", "build_parser"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SINGULAR = 3

# argparse mistakes "-0.3,0" for an option flag; tokens that start like a
# negative number and contain a comma get a protective leading space, which
# the pair parsers strip again.
_NEGATIVE_PAIR = re.compile(r"-\.?\d[^ ]*,")


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _render(value) -> str:
    """Fixed-order JSON with .17g floats and complex values as [re, im]."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, complex):
        return f"[{_fmt(value.real)}, {_fmt(value.imag)}]"
    if isinstance(value, dict):
        inner = ", ".join(f"{json.dumps(k)}: {_render(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    raise TypeError(f"cannot render {type(value).__name__}")


def _emit(payload: dict) -> None:
    print(_render(payload))


def _fail(code: int, message: str, **extra) -> int:
    body = {"error": message}
    for key, value in extra.items():
        if value is not None:
            body[key] = value
    _emit(body)
    return code


def _require(condition, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _number_field(obj: dict, key: str, label: str = "schedule") -> float:
    value = obj.get(key)
    _require(
        _is_number(value) and math.isfinite(value),
        f'{label}: "{key}" must be a finite number',
    )
    return float(value)


def _complex_field(obj: dict, key: str, label: str) -> complex:
    value = obj.get(key)
    ok = (
        isinstance(value, list)
        and len(value) == 2
        and all(_is_number(v) for v in value)
    )
    _require(ok, f'{label}: "{key}" must be a [re, im] pair')
    out = complex(float(value[0]), float(value[1]))
    _require(cmath.isfinite(out), f'{label}: "{key}" must be finite')
    return out


def _parse_complex_pair(text: str) -> complex:
    parts = text.strip().split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}") from None


def _parse_squeeze_pair(text: str) -> SqueezeParams:
    parts = text.strip().split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected r,phi but got {text!r}")
    try:
        r, phi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,phi but got {text!r}") from None
    if r < 0:
        raise argparse.ArgumentTypeError(f"squeeze magnitude must be >= 0, got {r}")
    return SqueezeParams(r, phi)


# ---------------------------------------------------------------------------
# commands

def cmd_disentangle(args) -> int:
    algebra = make_algebra(args.algebra)
    result = disentangle(algebra, ExponentParams(*args.lam))
    element = result.element
    _emit(
        {
            "Lambda_plus": element.big_plus,
            "Lambda_c": element.big_c(),
            "log_c": element.log_c,
            "nu": result.nu,
            "Lambda_minus": element.big_minus,
        }
    )
    return EXIT_OK


def _load_elements(path: str, algebra: AlgebraKind) -> list:
    with open(path) as fh:
        raw = json.load(fh)
    _require(
        isinstance(raw, list) and len(raw) > 0,
        "element file must hold a nonempty JSON list",
    )
    elements = []
    for pos, entry in enumerate(raw, start=1):
        label = f"element {pos}"
        _require(isinstance(entry, dict), f"{label} must be an object")
        big_plus = _complex_field(entry, "Lambda_plus", label)
        big_minus = _complex_field(entry, "Lambda_minus", label)
        if "log_c" in entry:
            log_c = _complex_field(entry, "log_c", label)
        else:
            _require("Lambda_c" in entry, f'{label} needs "log_c" or "Lambda_c"')
            big_c = _complex_field(entry, "Lambda_c", label)
            _require(big_c != 0, f'{label}: "Lambda_c" must be nonzero')
            log_c = cmath.log(big_c)
        elements.append(GroupElement(algebra, big_plus, log_c, big_minus))
    return elements


def cmd_compose(args) -> int:
    algebra = make_algebra(args.algebra)
    elements = _load_elements(args.elements, algebra)
    combined = compose_many(elements)
    payload = {
        "alpha": combined.big_plus,
        "beta": combined.big_c(),
        "gamma": combined.big_minus,
        "log_c": combined.log_c,
    }
    if args.continued_fraction:
        alpha_cf = alpha_continued_fraction(elements)
        payload["alpha_continued_fraction"] = alpha_cf
        payload["alpha_abs_difference"] = abs(alpha_cf - combined.big_plus)
    _emit(payload)
    return EXIT_OK


def cmd_squeeze_compose(args) -> int:
    product = compose_squeezes(args.z2, args.z1)
    factored = factor_squeeze_rotation(product)
    redone = factored.recompose()
    residual = max(
        abs(redone.big_plus - product.big_plus),
        abs(redone.big_c() - product.big_c()),
        abs(redone.big_minus - product.big_minus),
    )
    _emit(
        {
            "alpha": product.big_plus,
            "beta": product.big_c(),
            "gamma": product.big_minus,
            "factorization": {
                "r": factored.squeeze.r,
                "phi": factored.squeeze.phi,
                "rotation_angle": factored.rotation.angle,
            },
            "recomposition_residual": residual,
        }
    )
    return EXIT_OK


def _table_omega(profile: dict):
    points = profile.get("points")
    _require(
        isinstance(points, list) and len(points) > 0,
        'omega_profile: "points" must be a nonempty list',
    )
    times, omegas = [], []
    for pos, point in enumerate(points, start=1):
        ok = isinstance(point, list) and len(point) == 2 and all(_is_number(v) for v in point)
        _require(ok, f"omega_profile point {pos} must be a [t, omega] pair")
        times.append(float(point[0]))
        omegas.append(float(point[1]))
    for a, b in zip(times, times[1:]):
        _require(a < b, "omega_profile times must be strictly increasing")

    def omega_of_t(t: float) -> float:
        if t <= times[0]:
            return omegas[0]
        if t >= times[-1]:
            return omegas[-1]
        i = bisect.bisect_right(times, t) - 1
        frac = (t - times[i]) / (times[i + 1] - times[i])
        return omegas[i] + (omegas[i + 1] - omegas[i]) * frac

    return omega_of_t


def _preset_schedule(preset, algebra: AlgebraKind, t_final: float) -> HamiltonianSchedule:
    _require(isinstance(preset, dict), '"preset" must be an object')
    _require(preset.get("name") == "oscillator", 'only the "oscillator" preset exists')
    _require(algebra is AlgebraKind.SU11, 'the oscillator preset requires algebra "su11"')
    omega0 = _number_field(preset, "omega0", "preset")
    profile = preset.get("omega_profile")
    _require(isinstance(profile, dict), 'preset: "omega_profile" must be an object')
    kind = profile.get("type")
    if kind == "constant":
        omega = _number_field(profile, "omega", "omega_profile")

        def omega_of_t(t: float) -> float:
            return omega

    elif kind == "jump":
        before = _number_field(profile, "omega_before", "omega_profile")
        after = _number_field(profile, "omega_after", "omega_profile")
        t_jump = 0.0
        if "t_jump" in profile:
            t_jump = _number_field(profile, "t_jump", "omega_profile")

        def omega_of_t(t: float) -> float:
            return before if t < t_jump else after

    elif kind == "table":
        omega_of_t = _table_omega(profile)
    else:
        raise ValueError(f'unknown omega_profile type {kind!r}')
    return oscillator_schedule(omega0, omega_of_t, t_final)


def _samples_schedule(samples, algebra: AlgebraKind, t_final: float) -> HamiltonianSchedule:
    _require(isinstance(samples, list) and len(samples) > 0, '"samples" must be a nonempty list')
    times, triples = [], []
    for pos, entry in enumerate(samples, start=1):
        label = f"sample {pos}"
        _require(isinstance(entry, dict), f"{label} must be an object")
        times.append(_number_field(entry, "t", label))
        triples.append(
            (
                _complex_field(entry, "eta_plus", label),
                _complex_field(entry, "eta_c", label),
                _complex_field(entry, "eta_minus", label),
            )
        )
    for a, b in zip(times, times[1:]):
        _require(a < b, '"samples" times must be strictly increasing')
    _require(t_final >= times[-1], '"t_final" must not precede the last sample time')

    def eta(t: float):
        # linear interpolation inside the sampled window, clamped outside it
        if t <= times[0]:
            return triples[0]
        if t >= times[-1]:
            return triples[-1]
        i = bisect.bisect_right(times, t) - 1
        frac = (t - times[i]) / (times[i + 1] - times[i])
        return tuple(a + (b - a) * frac for a, b in zip(triples[i], triples[i + 1]))

    return HamiltonianSchedule(algebra, eta, t_final)


def load_schedule(path: str) -> HamiltonianSchedule:
    """Parse and validate a schedule file (top-level "format": 1)."""
    with open(path) as fh:
        raw = json.load(fh)
    _require(isinstance(raw, dict), "schedule must be a JSON object")
    _require(raw.get("format") == 1, 'schedule "format" must be the number 1')
    algebra_name = raw.get("algebra")
    _require(isinstance(algebra_name, str), 'schedule: "algebra" must be a string')
    algebra = make_algebra(algebra_name)
    t_final = _number_field(raw, "t_final")
    _require(t_final > 0, '"t_final" must be positive')
    has_preset = "preset" in raw
    has_samples = "samples" in raw
    _require(
        has_preset != has_samples,
        'schedule needs exactly one of "preset" or "samples"',
    )
    if has_preset:
        return _preset_schedule(raw["preset"], algebra, t_final)
    return _samples_schedule(raw["samples"], algebra, t_final)


def _write_trajectory_csv(path: str, trajectory) -> None:
    lines = ["t,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im"]
    for t, g in trajectory:
        beta = g.big_c()
        row = (
            t,
            g.big_plus.real,
            g.big_plus.imag,
            beta.real,
            beta.imag,
            g.big_minus.real,
            g.big_minus.imag,
        )
        lines.append(",".join(_fmt(v) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_evolve(args) -> int:
    schedule = load_schedule(args.schedule)
    _require(args.steps >= 1, f"--steps must be >= 1, got {args.steps}")
    stride = args.checkpoints
    if stride is None and args.csv is not None:
        stride = default_checkpoint_stride(args.steps)
    result = evolve(schedule, args.steps, checkpoint_every=stride, midpoint=args.midpoint)
    if args.csv is not None:
        _write_trajectory_csv(args.csv, result.trajectory)
    element = result.element
    _emit(
        {
            "alpha": element.big_plus,
            "beta": element.big_c(),
            "gamma": element.big_minus,
            "log_c": element.log_c,
            "steps": result.steps,
            "tau": result.tau,
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchkit",
        description="Disentangling and composition calculus for su(1,1), su(2), so(2,1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    algebras = [kind.value for kind in AlgebraKind]

    p = sub.add_parser("disentangle", help="normal-order a single exponential")
    p.add_argument("--algebra", required=True, choices=algebras)
    p.add_argument(
        "--lambda",
        dest="lam",
        required=True,
        nargs=3,
        type=_parse_complex_pair,
        metavar=("PLUS", "C", "MINUS"),
        help="exponent coordinates, each as re,im",
    )
    p.set_defaults(func=cmd_disentangle)

    p = sub.add_parser("compose", help="fold a JSON list of ordered elements")
    p.add_argument("--algebra", required=True, choices=algebras)
    p.add_argument(
        "--continued-fraction",
        action="store_true",
        help="also report the continued-fraction alpha and its deviation",
    )
    p.add_argument("elements", help="path to a JSON list, earliest element first")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser(
        "squeeze-compose",
        help="compose two squeezing operators and factor the result",
    )
    p.add_argument("--z1", required=True, type=_parse_squeeze_pair, metavar="R,PHI")
    p.add_argument("--z2", required=True, type=_parse_squeeze_pair, metavar="R,PHI")
    p.set_defaults(func=cmd_squeeze_compose)

    p = sub.add_parser("evolve", help="build a time-evolution operator")
    p.add_argument("--schedule", required=True, help="path to a schedule JSON file")
    p.add_argument("--steps", required=True, type=int)
    p.add_argument(
        "--checkpoints",
        type=int,
        default=None,
        metavar="K",
        help="record the trajectory every K steps (default: about 100 rows)",
    )
    p.add_argument("--csv", default=None, metavar="PATH", help="write the trajectory as CSV")
    p.add_argument(
        "--midpoint",
        action="store_true",
        help="sample coefficients at interval midpoints (second-order variant)",
    )
    p.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = [" " + token if _NEGATIVE_PAIR.match(token) else token for token in argv]
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SingularDecomposition as exc:
        return _fail(
            EXIT_SINGULAR,
            str(exc),
            denominator_abs=exc.denominator_abs,
            step=exc.step,
            time=exc.time,
        )
    except (OSError, ValueError) as exc:
        # every domain error type in this package subclasses ValueError
        return _fail(EXIT_INPUT, str(exc))


def entry_point() -> None:
    sys.exit(main())

"""Command line interface.

Subcommands: ``verify`` (self-check battery over the integral theorems),
``force`` (all force routes on a scenario), ``moment`` (moment routes and
reference shifts), ``convergence`` (force across quadrature orders) and
``reduce2d`` (planar formulas against the embedded 3D machinery).

Scenarios come from the built-in catalog (``--scenario``) or a JSON
config (``--config``); output is canonical JSON (sorted keys, two-space
indent, trailing newline) or CSV with fixed columns.  Exit codes: 0 all
checks passed, 1 a numerical check failed, 2 bad usage or config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .quaternion import Quaternion, ReducedPoint
from .fields import QuaternionField, Jet, is_monogenic
from .potentials import (
    FlowPotential,
    catalog,
    dipole_flow,
    embedded_cylinder_flow,
    identity_flow,
    point_source,
    saddle_flow,
    sphere_flow,
    uniform_flow,
)
from .surfaces import (
    RegularBody,
    box_body,
    cylinder_body,
    integrate_g_dsigma_f,
    sphere_body,
)
from .integrals import cauchy_reconstruct, verify_stokes
from .forces import (
    FlowScenario,
    all_force_methods,
    force_blasius,
    moment_from_pressure,
    moment_quadratic,
    moment_reference_shift,
    pressure_field,
)
from .scenarios import scenario_catalog, vanishing_integral_cases
from .planar import PlanarContour, cylinder_vortex_2d, reduce_and_compare

__all__ = ["ScenarioConfig", "main", "console_main"]

DEFAULT_SCENARIO = "sphere-stream"


# ----------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------

def _build_potential(cfg: dict) -> FlowPotential:
    kind = cfg.get("kind")
    if kind == "uniform":
        v = cfg.get("velocity", [1.0, 0.0, 0.0])
        if len(v) != 3:
            raise ValueError("uniform potential needs a 3-component velocity")
        return uniform_flow(*map(float, v))
    if kind == "identity":
        return identity_flow()
    if kind == "saddle":
        return saddle_flow()
    if kind == "source":
        c = cfg.get("center", [0.0, 0.0, 0.0])
        return point_source(float(cfg.get("strength", 1.0)),
                            ReducedPoint(*map(float, c)))
    if kind == "dipole":
        c = cfg.get("center", [0.0, 0.0, 0.0])
        return dipole_flow(float(cfg.get("coefficient", 1.0)),
                           ReducedPoint(*map(float, c)))
    if kind == "sphere":
        return sphere_flow(float(cfg.get("speed", 1.0)),
                           float(cfg.get("radius", 1.0)))
    if kind == "embedded_cylinder":
        return embedded_cylinder_flow(float(cfg.get("speed", 1.0)),
                                      float(cfg.get("radius", 1.0)),
                                      float(cfg.get("circulation", 0.0)))
    raise ValueError(f"unknown potential kind {kind!r}")


def _build_body(cfg: dict) -> RegularBody:
    kind = cfg.get("kind")
    if kind == "sphere":
        c = cfg.get("center", [0.0, 0.0, 0.0])
        return sphere_body(float(cfg.get("radius", 1.0)),
                           ReducedPoint(*map(float, c)))
    if kind == "box":
        return box_body(tuple(map(float, cfg.get("x", [-0.5, 0.5]))),
                        tuple(map(float, cfg.get("y", [-0.5, 0.5]))),
                        tuple(map(float, cfg.get("z", [-0.5, 0.5]))))
    if kind == "cylinder":
        z = cfg.get("z", [-0.5, 0.5])
        c2 = cfg.get("center2d", [0.0, 0.0])
        return cylinder_body(float(cfg.get("radius", 1.0)),
                             float(z[0]), float(z[1]),
                             (float(c2[0]), float(c2[1])))
    raise ValueError(f"unknown body kind {kind!r}")


@dataclass(frozen=True)
class ScenarioConfig:
    """JSON-facing description of a potential, a body, and a density."""

    name: str
    potential: dict
    body: dict
    rho: float = 1.0

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        if not isinstance(data, dict):
            raise ValueError("scenario config must be a JSON object")
        unknown = set(data) - {"name", "potential", "body", "rho"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for key in ("potential", "body"):
            if key not in data or not isinstance(data[key], dict):
                raise ValueError(f"config needs a {key!r} object")
        return cls(name=str(data.get("name", "custom")),
                   potential=dict(data["potential"]),
                   body=dict(data["body"]),
                   rho=float(data.get("rho", 1.0)))

    def to_dict(self) -> dict:
        return {"name": self.name, "potential": dict(self.potential),
                "body": dict(self.body), "rho": self.rho}

    def build(self) -> FlowScenario:
        return FlowScenario(name=self.name,
                            potential=_build_potential(self.potential),
                            body=_build_body(self.body),
                            rho=self.rho)

    @classmethod
    def default(cls) -> "ScenarioConfig":
        return cls(name=DEFAULT_SCENARIO,
                   potential={"kind": "sphere", "speed": 1.0, "radius": 1.0},
                   body={"kind": "sphere", "radius": 1.0})


def _resolve_scenario(args) -> FlowScenario:
    if getattr(args, "config", None) and getattr(args, "scenario", None):
        raise ValueError("give either --scenario or --config, not both")
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return ScenarioConfig.from_dict(data).build()
    name = getattr(args, "scenario", None) or DEFAULT_SCENARIO
    cat = scenario_catalog()
    if name not in cat:
        raise ValueError(
            f"unknown scenario {name!r}; known: {', '.join(sorted(cat))}")
    return cat[name]


# ----------------------------------------------------------------------
# output
# ----------------------------------------------------------------------

def _emit(args, payload: dict, csv_header: list[str],
          csv_rows: list[list]) -> None:
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        for row in csv_rows:
            writer.writerow([repr(v) if isinstance(v, float) else v
                             for v in row])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vec(p: ReducedPoint) -> list[float]:
    return [p.x, p.y, p.z]


def _parse_components(text: str, count: int) -> tuple[float, ...]:
    parts = [t for t in text.replace(" ", "").split(",") if t]
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated numbers, "
                         f"got {text!r}")
    return tuple(float(t) for t in parts)


def _single_order(args, default: int = 16) -> int:
    orders = getattr(args, "order", None)
    if not orders:
        return default
    return int(orders[-1])


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cmd_force(args) -> int:
    scenario = _resolve_scenario(args)
    order = _single_order(args)
    comparison = all_force_methods(scenario.potential, scenario.body,
                                   rho=scenario.rho, order=order,
                                   workers=args.threads)
    expected = scenario.expected_force
    expected_gap = None
    if expected is not None:
        expected_gap = max((r.force - expected).norm()
                           for r in comparison.results.values())
    ok = comparison.max_disagreement <= args.tol
    if expected_gap is not None:
        ok = ok and expected_gap <= args.tol

    payload = {
        "command": "force",
        "scenario": scenario.name,
        "rho": scenario.rho,
        "order": order,
        "tol": args.tol,
        "results": {name: {"force": _vec(r.force), "nodes": r.node_count}
                    for name, r in comparison.results.items()},
        "gated": dict(comparison.gated),
        "max_disagreement": comparison.max_disagreement,
        "expected_force": _vec(expected) if expected is not None else None,
        "expected_gap": expected_gap,
        "status": "pass" if ok else "fail",
    }
    rows = [[scenario.name, name, order, r.node_count,
             r.force.x, r.force.y, r.force.z]
            for name, r in sorted(comparison.results.items())]
    _emit(args, payload, ["scenario", "method", "order", "nodes",
                          "fx", "fy", "fz"], rows)
    return 0 if ok else 1


def _cmd_moment(args) -> int:
    scenario = _resolve_scenario(args)
    order = _single_order(args)
    about = ReducedPoint(*_parse_components(args.about, 3))
    mq = moment_quadratic(scenario.potential, scenario.body, about,
                          rho=scenario.rho, order=order,
                          workers=args.threads)
    mp = moment_from_pressure(
        pressure_field(scenario.potential, rho=scenario.rho),
        scenario.body, about, order=order, workers=args.threads)
    gap = (mq.moment - mp.moment).norm()
    results = {mq.method: mq, mp.method: mp}
    if args.shift_to:
        target = ReducedPoint(*_parse_components(args.shift_to, 3))
        force = force_blasius(scenario.potential, scenario.body,
                              rho=scenario.rho, order=order,
                              workers=args.threads)
        shifted = moment_reference_shift(mq, force, target)
        results[shifted.method] = shifted
    ok = gap <= args.tol
    payload = {
        "command": "moment",
        "scenario": scenario.name,
        "rho": scenario.rho,
        "order": order,
        "tol": args.tol,
        "about": _vec(about),
        "results": {name: {"moment": _vec(m.moment), "about": _vec(m.about),
                           "nodes": m.node_count}
                    for name, m in results.items()},
        "method_gap": gap,
        "status": "pass" if ok else "fail",
    }
    rows = [[scenario.name, name, order, m.about.x, m.about.y, m.about.z,
             m.moment.x, m.moment.y, m.moment.z]
            for name, m in sorted(results.items())]
    _emit(args, payload, ["scenario", "method", "order", "about_x",
                          "about_y", "about_z", "mx", "my", "mz"], rows)
    return 0 if ok else 1


def _coordinate_field() -> QuaternionField:
    """The reduced coordinate as a field; D of it is the constant -1."""
    def jet(p: ReducedPoint) -> Jet:
        return Jet(Quaternion(p.x, p.y, p.z, 0.0), Quaternion(1.0),
                   Quaternion(0.0, 1.0, 0.0, 0.0),
                   Quaternion(0.0, 0.0, 1.0, 0.0))
    return QuaternionField(lambda p: Quaternion(p.x, p.y, p.z, 0.0),
                           jet=jet, name="coordinate")


def _cmd_verify(args) -> int:
    order = _single_order(args)
    tol = args.tol
    checks: list[dict] = []

    def record(name: str, gap: float, bound: float):
        checks.append({"check": name, "gap": gap, "tol": bound,
                       "status": "pass" if gap <= bound else "fail"})

    probes = [ReducedPoint(1.1, 0.2, 0.3), ReducedPoint(0.7, -0.5, 0.4),
              ReducedPoint(-0.3, 0.8, 1.2), ReducedPoint(0.5, 0.6, -0.7)]
    for name, pot in sorted(catalog().items()):
        report = pot.monogenicity(probes)
        record(f"monogenic:{name}", report.max_residual, report.tol)

    for name, pot, body in vanishing_integral_cases():
        q = integrate_g_dsigma_f(body.surface, None, pot, order,
                                 args.threads)
        record(f"vanishing-integral:{name}", q.norm(), tol)

    coord = _coordinate_field()
    box = box_body((-0.5, 0.6), (-0.4, 0.5), (-0.55, 0.45))
    rep = verify_stokes(box, coord, coord, order=order, tol=tol,
                        workers=args.threads)
    record("stokes-two-sided:box", rep.gap, tol)
    rep = verify_stokes(sphere_body(1.0), None, coord, order=order, tol=tol,
                        workers=args.threads)
    record("stokes-left:sphere", rep.gap, tol)

    target = ReducedPoint(0.2, 0.1, -0.1)
    f = saddle_flow().field
    rec = cauchy_reconstruct(sphere_body(1.0), f, target,
                             workers=args.threads)
    record("cauchy-reconstruct:saddle", (rec - f(target)).norm(), 1e-6)

    report = reduce_and_compare(cylinder_vortex_2d(1.0, 1.0, 2.0 * math.pi),
                                PlanarContour.circle(1.0),
                                cylinder_body(1.0, -0.5, 0.5),
                                order_3d=order, tol=tol,
                                workers=args.threads)
    record("planar-reduction:cylinder-vortex",
           max(report.force_gap, report.moment_gap), tol)

    ok = all(c["status"] == "pass" for c in checks)
    payload = {"command": "verify", "order": order, "tol": tol,
               "checks": checks, "status": "pass" if ok else "fail"}
    rows = [[c["check"], c["gap"], c["tol"], c["status"]] for c in checks]
    _emit(args, payload, ["check", "gap", "tol", "status"], rows)
    return 0 if ok else 1


def _cmd_convergence(args) -> int:
    scenario = _resolve_scenario(args)
    orders = sorted(set(args.order)) if args.order else [8, 16, 32]
    entries = []
    prev: Optional[ReducedPoint] = None
    for order in orders:
        res = force_blasius(scenario.potential, scenario.body,
                            rho=scenario.rho, order=order,
                            workers=args.threads)
        step = (res.force - prev).norm() if prev is not None else None
        entries.append({"order": order, "nodes": res.node_count,
                        "force": _vec(res.force),
                        "change_from_previous": step})
        prev = res.force
    payload = {"command": "convergence", "scenario": scenario.name,
               "rho": scenario.rho, "method": "blasius",
               "entries": entries, "status": "pass"}
    rows = [[scenario.name, "blasius", e["order"], e["nodes"],
             e["force"][0], e["force"][1], e["force"][2],
             "" if e["change_from_previous"] is None
             else repr(e["change_from_previous"])]
            for e in entries]
    _emit(args, payload, ["scenario", "method", "order", "nodes",
                          "fx", "fy", "fz", "change"], rows)
    return 0


def _cmd_reduce2d(args) -> int:
    speed, radius, circulation = 1.0, 1.0, 2.0 * math.pi
    rho = 1.0
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = ScenarioConfig.from_dict(json.load(fh))
        if cfg.potential.get("kind") != "embedded_cylinder":
            raise ValueError(
                "reduce2d config needs an embedded_cylinder potential")
        speed = float(cfg.potential.get("speed", 1.0))
        radius = float(cfg.potential.get("radius", 1.0))
        circulation = float(cfg.potential.get("circulation", 0.0))
        rho = cfg.rho
    about = complex(*_parse_components(args.about, 2)) if args.about else 0j
    potential = cylinder_vortex_2d(speed, radius, circulation)
    contour = PlanarContour.circle(radius)
    body = cylinder_body(radius, -0.5, 0.5)
    report = reduce_and_compare(potential, contour, body, rho=rho,
                                order_3d=_single_order(args), about=about,
                                tol=args.tol, workers=args.threads)
    payload = {
        "command": "reduce2d",
        "speed": speed, "radius": radius, "circulation": circulation,
        "rho": rho, "about": [about.real, about.imag],
        "force_2d": [report.force_2d.real, report.force_2d.imag],
        "force_3d": _vec(report.force_3d),
        "force_gap": report.force_gap,
        "moment_2d": report.moment_2d,
        "moment_3d_z": report.moment_3d.z,
        "moment_gap": report.moment_gap,
        "tol": report.tol,
        "status": "pass" if report.ok else "fail",
    }
    rows = [
        ["force_x", report.force_2d.real, report.force_3d.x],
        ["force_y", report.force_2d.imag, report.force_3d.y],
        ["moment_z", report.moment_2d, report.moment_3d.z],
    ]
    _emit(args, payload, ["quantity", "planar", "embedded_3d"], rows)
    return 0 if report.ok else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--scenario", help="named scenario from the catalog")
    sub.add_argument("--config", help="path to a JSON scenario config")
    sub.add_argument("--order", action="append", type=int,
                     help="quadrature order (repeatable for convergence)")
    sub.add_argument("--tol", type=float, default=1e-8,
                     help="pass/fail tolerance (default 1e-8)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", help="write output to this file")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads for node evaluation")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatflow",
        description="quaternionic flow potentials, surface integrals, "
                    "and force/moment formulas")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the integral-theorem battery")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("force", help="evaluate every force route")
    _add_common(p)
    p.set_defaults(func=_cmd_force)

    p = sub.add_parser("moment", help="evaluate moment routes")
    _add_common(p)
    p.add_argument("--about", default="0,0,0",
                   help="reference point, three comma-separated numbers")
    p.add_argument("--shift-to", dest="shift_to",
                   help="also transport the moment to this reference point")
    p.set_defaults(func=_cmd_moment)

    p = sub.add_parser("convergence", help="force across quadrature orders")
    _add_common(p)
    p.set_defaults(func=_cmd_convergence)

    p = sub.add_parser("reduce2d",
                       help="compare planar formulas with embedded 3D")
    _add_common(p)
    p.add_argument("--about",
                   help="planar moment reference, two comma-separated numbers")
    p.set_defaults(func=_cmd_reduce2d)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as err:
        print(f"quatflow: {err}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

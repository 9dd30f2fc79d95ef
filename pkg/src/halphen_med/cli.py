"""Command line entry point: ``halphen-med {list,integrate,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BlowUp, ConfigError
from .scenarios import (ScenarioConfig, builtin_scenario, integrate_config, list_scenarios,
                        run_scenario, trajectory_csv, trajectory_json)

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG, EXIT_BLOWUP = 0, 1, 2, 3


def _load(args) -> ScenarioConfig:
    if bool(args.config) == bool(args.scenario):
        raise ConfigError("give exactly one of --config or --scenario")
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}", "config") from exc
    else:
        data = builtin_scenario(args.scenario)
    if args.tol is not None:
        data["tolerance"] = args.tol
    return ScenarioConfig.from_dict(data)


def _cmd_list(args) -> int:
    for name, desc in list_scenarios():
        print(f"{name:28s} {desc}")
    return EXIT_PASS


def _cmd_integrate(args) -> int:
    cfg = _load(args)
    try:
        traj = integrate_config(cfg)
        code = EXIT_PASS
    except BlowUp as exc:
        print(f"blow-up: {exc}", file=sys.stderr)
        traj, code = exc.partial, EXIT_BLOWUP
    fmt = args.format or "csv"
    text = trajectory_csv(traj, cfg.system) if fmt == "csv" else trajectory_json(traj, cfg.system) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"trajectory.{fmt}").write_text(text)
    else:
        sys.stdout.write(text)
    return code


def _cmd_verify(args) -> int:
    cfg = _load(args)
    try:
        report = run_scenario(cfg, args.out)
    except BlowUp as exc:
        print(f"blow-up: {exc}", file=sys.stderr)
        print(exc.report.to_json())
        return EXIT_BLOWUP
    if (args.format or "json") == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.summary_csv())
    return EXIT_PASS if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halphen-med",
                                     description="Integrate and verify Halphen/Chazy/Darboux-Halphen MED scenarios")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list built-in scenarios").set_defaults(func=_cmd_list)
    for name, func, help_ in (("integrate", _cmd_integrate, "integrate a scenario and emit the trajectory"),
                              ("verify", _cmd_verify, "integrate and run the scenario's verifications")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", help="scenario config JSON file")
        p.add_argument("--scenario", help="name of a built-in scenario (see `list`)")
        p.add_argument("--out", help="output directory")
        p.add_argument("--tol", type=float, help="override the integration tolerance")
        p.add_argument("--format", choices=["json", "csv"], help="stdout/trajectory format")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

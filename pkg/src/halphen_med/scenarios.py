"""Scenario configs, the verification runner, and the built-in scenario catalog."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import closed_form, flows, med, transforms
from .errors import BlowUp, ConfigError, DomainError
from .numerics import PathSpec, Trajectory, fd_derivative, integrate_path

SYSTEMS = ("hal1", "hal2", "chazy", "dhv", "ach", "dh9")
VERIFICATIONS = ("lax", "exponents", "closed-form", "transform", "f-integrability", "z-system")
VALID = {
    "hal1": {"closed-form", "transform"},
    "hal2": {"lax", "exponents", "closed-form", "transform", "f-integrability", "z-system"},
    "chazy": {"closed-form"},
    "dhv": {"lax", "transform"},
    "ach": {"transform"},
    "dh9": {"transform"},
}
DEFAULT_THRESHOLDS = {
    "lax": 1e-8,
    "exponents": 1e-7,
    "closed-form": 1e-7,
    "transform": 1e-8,
    "f-integrability": 1e-13,
    "z-system": 1e-8,
}
SYSTEM_THRESHOLDS = {("dhv", "lax"): 1e-7, ("hal2", "closed-form"): 1e-6}
DEFAULT_Z_PATH = ((0.5, 0.5), (0.3, 0.6), (0.6, 0.8))
FD_STEP = 1e-3


def _cx(v, where):
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(u, (int, float)) for u in v):
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    raise ConfigError("expected a complex number as [re, im]", where)


def _cx_list(v, where, n=None):
    if not isinstance(v, (list, tuple)):
        raise ConfigError("expected a list", where)
    if n is not None and len(v) != n:
        raise ConfigError(f"expected {n} entries, got {len(v)}", where)
    return [_cx(u, f"{where}[{i}]") for i, u in enumerate(v)]


def _pair(z: complex):
    return [float(z.real), float(z.imag)]


@dataclass
class ScenarioConfig:
    system: str
    path: list
    verification: list
    initial: object  # list of complex or a "theta:ma,mb,mc,md,t0" string
    params: dict = field(default_factory=dict)
    tolerance: float = 1e-12
    name: str = ""
    med: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)
    z_path: list | None = None
    field_scale: float = 1.0
    grid: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioConfig":
        if not isinstance(d, dict):
            raise ConfigError("config must be a JSON object")
        known = {"system", "path", "verification", "initial", "params", "tolerance", "name",
                 "med", "thresholds", "z_path", "field_scale", "grid"}
        for key in d:
            if key not in known:
                raise ConfigError("unknown key", key)
        for key in ("system", "path", "initial"):
            if key not in d:
                raise ConfigError("required key missing", key)
        cfg = cls(system=d["system"], path=d["path"], verification=list(d.get("verification", [])),
                  initial=d["initial"], params=dict(d.get("params", {})),
                  tolerance=d.get("tolerance", 1e-12), name=d.get("name", ""),
                  med=dict(d.get("med", {})), thresholds=dict(d.get("thresholds", {})),
                  z_path=d.get("z_path"), field_scale=d.get("field_scale", 1.0),
                  grid=dict(d.get("grid", {})))
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        out = {"name": self.name, "system": self.system, "params": self.params,
               "initial": self.initial, "path": self.path, "tolerance": self.tolerance,
               "verification": self.verification}
        for key in ("med", "thresholds", "grid"):
            if getattr(self, key):
                out[key] = getattr(self, key)
        if self.z_path is not None:
            out["z_path"] = self.z_path
        if self.field_scale != 1.0:
            out["field_scale"] = self.field_scale
        return out

    # -- validation and decoding -------------------------------------------

    def validate(self):
        if self.system not in SYSTEMS:
            raise ConfigError(f"must be one of {', '.join(SYSTEMS)}", "system")
        if not isinstance(self.tolerance, (int, float)) or not self.tolerance > 0:
            raise ConfigError("must be a positive number", "tolerance")
        for i, v in enumerate(self.verification):
            if v not in VERIFICATIONS:
                raise ConfigError(f"unknown verification {v!r}", f"verification[{i}]")
            if v not in VALID[self.system]:
                raise ConfigError(f"{v!r} is not available for system {self.system!r}", f"verification[{i}]")
        for k, v in self.thresholds.items():
            if k not in VERIFICATIONS or not isinstance(v, (int, float)) or not v > 0:
                raise ConfigError("thresholds map verification names to positive numbers", f"thresholds.{k}")
        self.path_spec()
        self.system_params()
        self.initial_state()
        if {"lax", "exponents", "z-system"} & set(self.verification) and self.system == "hal2":
            self.med_params()
        if self.system == "dhv" and "lax" in self.verification:
            self.dhv_mu()
        if "closed-form" in self.verification and self.system in ("hal1", "chazy"):
            if self.theta_spec() is None:
                raise ConfigError("closed-form verification needs a theta initial state", "initial")
        if self.system == "dh9" and "transform" in self.verification:
            m = np.reshape(self.initial_state(), (3, 3))
            if transforms.block_defect(m) > 0:
                raise ConfigError("dh9 transform check needs a diagonal or block initial matrix", "initial")
        if self.z_path is not None:
            self.z_path_spec()
        if not isinstance(self.field_scale, (int, float)):
            raise ConfigError("must be a number", "field_scale")

    def path_spec(self) -> PathSpec:
        try:
            return PathSpec(tuple(_cx_list(self.path, "path")))
        except DomainError as exc:
            raise ConfigError(str(exc), "path") from exc

    def z_path_spec(self) -> PathSpec:
        try:
            return PathSpec(tuple(_cx_list(self.z_path or DEFAULT_Z_PATH, "z_path")))
        except DomainError as exc:
            raise ConfigError(str(exc), "z_path") from exc

    def system_params(self):
        if self.system in ("hal2",):
            if "abc" in self.params:
                return flows.HalphenABC(*_cx_list(self.params["abc"], "params.abc", 3))
            if "alphas" in self.params:
                return transforms.alphas_to_abc(_cx_list(self.params["alphas"], "params.alphas", 3))
            raise ConfigError("hal2 needs abc or alphas", "params")
        if self.system == "ach":
            if "alphas" in self.params:
                return flows.AlphaParams(*_cx_list(self.params["alphas"], "params.alphas", 3))
            if "abc" in self.params:
                return transforms.abc_to_alphas(_cx_list(self.params["abc"], "params.abc", 3))
            raise ConfigError("ach needs alphas or abc", "params")
        if self.params:
            raise ConfigError(f"system {self.system!r} takes no parameters", "params")
        return None

    def theta_spec(self):
        if not isinstance(self.initial, str):
            return None
        if not self.initial.startswith("theta:"):
            raise ConfigError("string initial states must look like 'theta:ma,mb,mc,md,t0'", "initial")
        try:
            parts = [complex(u.strip().replace(" ", "")) for u in self.initial[6:].split(",")]
        except ValueError as exc:
            raise ConfigError(f"cannot parse theta spec: {exc}", "initial") from exc
        if len(parts) != 5:
            raise ConfigError("theta spec needs ma,mb,mc,md,t0", "initial")
        m = closed_form.Mobius(*parts[:4])
        try:
            m.validate()
        except DomainError as exc:
            raise ConfigError(str(exc), "initial") from exc
        return m, parts[4]

    def initial_state(self) -> np.ndarray:
        dims = {"hal1": 3, "hal2": 3, "chazy": 3, "dhv": 5, "ach": 3, "dh9": 9}
        theta = self.theta_spec()
        if theta is None:
            vals = self.initial
            if self.system == "dh9" and isinstance(vals, list) and vals and isinstance(vals[0], list) \
                    and len(vals) == 3 and all(len(r) == 3 for r in vals):
                vals = [u for row in vals for u in row]
            return np.array(_cx_list(vals, "initial", dims[self.system]))
        m, t0 = theta
        if abs(self.path_spec().vertices[0] - t0) > 1e-14:
            raise ConfigError("path must start at the theta spec's t0", "path[0]")
        try:
            if self.system == "chazy":
                return closed_form.chazy_theta_solution(m, t0)
            h1 = closed_form.hal1_theta_solution(m, t0)
        except DomainError as exc:
            raise ConfigError(str(exc), "initial") from exc
        if self.system == "hal1":
            return h1
        if self.system == "hal2":
            if np.max(np.abs(np.array(self.system_params()) + 1 / 8)) > 1e-14:
                raise ConfigError("theta initial state for hal2 requires a = b = c = -1/8", "initial")
            return transforms.hal1_to_hal2_state(h1)
        if self.system == "ach":
            if np.max(np.abs(np.array(self.system_params()))) > 1e-14:
                raise ConfigError("theta initial state for ach requires alphas = 0", "initial")
            return transforms.hal1_to_dh9_diag(h1)
        w = transforms.hal1_to_dh9_diag(h1)
        if self.system == "dhv":
            return np.concatenate([w, [0, 0]])
        return transforms.embed_diag_dh9(*w).ravel()

    def med_params(self) -> med.MedParams:
        d = self.med or {}
        mu = _cx(d.get("mu", [0.7, 0.2]), "med.mu")
        c = _cx_list(d.get("c", [1.0, -0.4, -0.6]), "med.c", 3)
        S = d.get("S", [[[0.3, 0], [1, 0]], [[0.5, 0], [-0.3, 0]]])
        if not isinstance(S, list) or len(S) != 2:
            raise ConfigError("expected a 2x2 matrix of [re, im] entries", "med.S")
        S = np.array([_cx_list(row, f"med.S[{i}]", 2) for i, row in enumerate(S)])
        if abs(sum(c)) > 1e-12:
            raise ConfigError(f"c1 + c2 + c3 must vanish (got {sum(c)})", "med.c")
        if abs(np.trace(S)) > 1e-12:
            raise ConfigError("S must be traceless", "med.S")
        return med.MedParams(mu, tuple(c), S)

    def dhv_mu(self) -> complex:
        return _cx((self.med or {}).get("mu", [0.6, 0.1]), "med.mu")

    def threshold(self, kind: str) -> float:
        if kind in self.thresholds:
            return float(self.thresholds[kind])
        return SYSTEM_THRESHOLDS.get((self.system, kind), DEFAULT_THRESHOLDS[kind])


@dataclass
class RunReport:
    config: dict
    trajectory: dict
    verifications: list
    status: str  # "pass", "fail" or "blowup"
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        # wall_time deliberately excluded: data files must be reproducible
        return {"config": self.config, "trajectory": self.trajectory,
                "verifications": self.verifications, "status": self.status,
                "passed": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["verification", "max_abs_residual", "tolerance", "passed"])
        for v in self.verifications:
            w.writerow([v["verification"], repr(v["max_abs_residual"]), repr(v["tolerance"]), v["passed"]])
        return buf.getvalue()


def trajectory_csv(traj: Trajectory, system: str) -> str:
    names = flows.COMPONENTS[system]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["path_param", "t_re", "t_im"]
    for n in names:
        header += [f"{n}_re", f"{n}_im"]
    w.writerow(header)
    for s, t, y in zip(traj.s, traj.t, traj.y):
        row = [repr(float(s)), repr(float(t.real)), repr(float(t.imag))]
        for v in y:
            row += [repr(float(v.real)), repr(float(v.imag))]
        w.writerow(row)
    return buf.getvalue()


def trajectory_json(traj: Trajectory, system: str) -> str:
    names = flows.COMPONENTS[system]
    return json.dumps({
        "system": system, "components": list(names), "steps": traj.n_steps,
        "rejected": traj.n_rejected, "complete": traj.complete,
        "samples": [{"path_param": float(s), "t": _pair(t), "state": [_pair(v) for v in y],
                     "error": float(e)} for s, t, y, e in zip(traj.s, traj.t, traj.y, traj.err)],
    }, indent=2)


def integrate_config(cfg: ScenarioConfig) -> Trajectory:
    f = flows.rhs(cfg.system, cfg.system_params())
    field_scale = cfg.field_scale
    if field_scale != 1.0:
        base = f
        f = lambda t, y: field_scale * base(t, y)  # noqa: E731
    return integrate_path(f, cfg.initial_state(), cfg.path_spec(), cfg.tolerance)


# -- verifications -------------------------------------------------------------

def _flow_report(kind, traj: Trajectory, mapping, target, n_t, **meta) -> med.ResidualReport:
    """FD t-derivative of ``mapping(state)`` against ``target(mapping(state))`` on a t-grid."""
    entries, ts = [], []
    for s in traj.param_grid(n_t, margin=0.05):
        t0 = traj.time_at(s)
        solve = traj.local_solution(s)
        d = fd_derivative(lambda t: mapping(solve(t)), t0, FD_STEP)
        r = float(np.max(np.abs(d - target(mapping(solve(t0))))))
        entries.append({"x": 0j, "t": t0, "total": r, "scalar": r, "traceless": 0.0})
        ts.append(t0)
    return med.ResidualReport.from_entries(kind, [], ts, entries, **meta)


def _pointwise_report(kind, traj: Trajectory, fn, n_t, **meta) -> med.ResidualReport:
    entries, ts = [], []
    for s in traj.param_grid(n_t):
        t0 = traj.time_at(s)
        r = float(fn(t0, traj.interpolate(s), s))
        entries.append({"x": 0j, "t": t0, "total": r, "scalar": r, "traceless": 0.0})
        ts.append(t0)
    return med.ResidualReport.from_entries(kind, [], ts, entries, **meta)


def _verify(cfg: ScenarioConfig, kind: str, traj: Trajectory) -> dict:
    n_t = int(cfg.grid.get("n_t", 5))
    system = cfg.system
    extra = {}
    if kind == "lax" and system == "hal2":
        rep = med.med_compatibility_residual(traj, cfg.med_params(), cfg.system_params(), n_t=n_t)
    elif kind == "lax":
        rep = med.dhv_compatibility_residual(traj, cfg.dhv_mu(), n_t=int(cfg.grid.get("n_t", 4)))
    elif kind == "z-system":
        rep = med.z_system_residual(traj, cfg.med_params(), cfg.system_params(), n_t=n_t)
    elif kind == "exponents":
        p = cfg.med_params()
        checks = [med.exponent_evolution_check(traj, p, j, n_t, cfg.threshold(kind)) for j in range(3)]
        signs = {c.sign for c in checks}
        extra = {"sites": [c.to_dict() for c in checks],
                 "sign": checks[0].sign if len(signs) == 1 else 0}
        entries = [{"x": 0j, "t": t, "total": c.error, "scalar": c.error, "traceless": 0.0}
                   for c in checks for t in c.t_points[:1]]
        rep = med.ResidualReport.from_entries(kind, [], [c.t_points[0] for c in checks], entries)
        if extra["sign"] == 0:
            rep.max_abs_residual = float("inf")
    elif kind == "f-integrability":
        abc = cfg.system_params()

        def fi(t, st, s):
            xs = med.default_x_grid([st])
            return max(abs(med.f_integrability_residual(st, abc, x, traj.derivative(s))) for x in xs)

        rep = _pointwise_report(kind, traj, fi, n_t)
    elif kind == "closed-form":
        rep = _closed_form_report(cfg, traj, n_t)
    else:
        rep = _transform_report(cfg, traj, n_t)
    tol = cfg.threshold(kind)
    out = {"verification": kind, "tolerance": tol,
           "passed": bool(rep.max_abs_residual <= tol), **rep.to_dict()}
    out["max_abs_residual"] = rep.max_abs_residual
    out.update(extra)
    return out


def _closed_form_report(cfg: ScenarioConfig, traj: Trajectory, n_t: int):
    system = cfg.system
    if system == "hal2":
        abc = cfg.system_params()
        sol = closed_form.hal2_hypergeom_solution(abc, cfg.z_path_spec())
        entries, zs = [], []
        idx = np.unique(np.linspace(0, len(sol.z) - 1, 10).round().astype(int))
        for k in idx:
            local = sol.local(int(k))
            dxdz = fd_derivative(lambda z: local(z)[2], complex(sol.z[k]), FD_STEP)
            r = float(np.max(np.abs(dxdz / sol.dtdz[k] - flows.hal2_field(sol.states[k], abc))))
            entries.append({"x": complex(sol.z[k]), "t": complex(sol.t[k]), "total": r,
                            "scalar": r, "traceless": 0.0})
            zs.append(complex(sol.z[k]))
        return med.ResidualReport.from_entries("hal2-hypergeom", zs, list(sol.t[idx]), entries,
                                               wronskian_drift=sol.basis.wronskian_drift)
    m, _ = cfg.theta_spec()
    exact = closed_form.hal1_theta_solution if system == "hal1" else closed_form.chazy_theta_solution

    def diff(t0, st, s):
        ref = exact(m, t0)
        return np.max(np.abs(st - ref)) / max(1.0, float(np.max(np.abs(ref))))

    # relative deviation of the integrated trajectory from the closed form at 10 points
    return _pointwise_report("closed-form", traj, diff, 10, mobius=[_pair(complex(v)) for v in m])


def _transform_report(cfg: ScenarioConfig, traj: Trajectory, n_t: int):
    system = cfg.system
    if system == "hal1":
        return _flow_report("hal1-to-chazy", traj, transforms.hal1_to_chazy, flows.chazy_field, n_t)
    if system == "hal2":
        abc = np.array(cfg.system_params())
        if np.max(np.abs(abc + 1 / 8)) <= 1e-14:
            return _flow_report("hal2-to-hal1", traj, transforms.hal2_to_hal1_state, flows.hal1_field, n_t)
        alphas = transforms.abc_to_alphas(abc)
        return _flow_report("hal2-to-ach", traj, transforms.hal2_state_to_ach_state,
                            lambda w: flows.ach_field(w, alphas), n_t)
    if system == "ach":
        abc = transforms.alphas_to_abc(cfg.system_params())
        return _flow_report("ach-to-hal2", traj, transforms.ach_state_to_hal2_state,
                            lambda x: flows.hal2_field(x, abc), n_t)
    if system == "dhv":
        def block(t0, st, s):
            m = transforms.embed_block_dh9(st)
            fm = flows.dh9_field(m)
            return max(float(np.max(np.abs(transforms.block_dh9_to_dhv(fm) - flows.dhv_field(st)))),
                       transforms.block_defect(fm))

        return _pointwise_report("dhv-block-dh9", traj, block, n_t)
    # dh9: diagonal trajectories follow Halphen I (with the sign map), block ones DH-V
    m0 = np.reshape(cfg.initial_state(), (3, 3))
    if np.max(np.abs(m0 - np.diag(np.diag(m0)))) == 0:
        return _flow_report("dh9-diag-hal1", traj, _dh9_diag_view, _hal1_view_field, n_t)
    return _flow_report("dh9-block-dhv", traj, _dh9_block_view, _dhv_view_field, n_t)


# The last component of each view is the shape defect, whose rate must be 0.

def _dh9_diag_view(y):
    m = np.reshape(y, (3, 3))
    off = np.abs(m - np.diag(np.diag(m))).max()
    return np.concatenate([transforms.dh9_diag_to_hal1(np.diag(m)), [off]])


def _hal1_view_field(v):
    return np.concatenate([flows.hal1_field(v[:3]), [0.0]])


def _dh9_block_view(y):
    m = np.reshape(y, (3, 3))
    return np.concatenate([transforms.block_dh9_to_dhv(m), [transforms.block_defect(m)]])


def _dhv_view_field(v):
    return np.concatenate([flows.dhv_field(v[:5]), [0.0]])


def _trajectory_summary(traj: Trajectory) -> dict:
    return {"steps": traj.n_steps, "rejected": traj.n_rejected, "complete": traj.complete,
            "end_param": float(traj.end_param), "end_t": _pair(complex(traj.t[-1])),
            "end_state": [_pair(complex(v)) for v in traj.end_state]}


def run_scenario(config, out_dir=None) -> RunReport:
    """Integrate, run the requested verifications and optionally write
    ``trajectory.csv``, ``report.json`` and a ``timing.json`` sidecar to ``out_dir``.

    BlowUp is re-raised after the partial report is written; it carries the
    report as ``exc.report``.
    """
    cfg = config if isinstance(config, ScenarioConfig) else ScenarioConfig.from_dict(config)
    start = time.perf_counter()
    try:
        traj = integrate_config(cfg)
    except BlowUp as exc:
        traj = exc.partial
        report = RunReport(cfg.to_dict(), _trajectory_summary(traj) if traj is not None else {}, [],
                           "blowup", time.perf_counter() - start)
        report.trajectory["error"] = str(exc)
        _write(out_dir, cfg, traj, report)
        exc.report = report
        raise
    results = [_verify(cfg, kind, traj) for kind in cfg.verification]
    status = "pass" if all(r["passed"] for r in results) else "fail"
    report = RunReport(cfg.to_dict(), _trajectory_summary(traj), results, status,
                       time.perf_counter() - start)
    _write(out_dir, cfg, traj, report)
    return report


def _write(out_dir, cfg, traj, report):
    if out_dir is None:
        return
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if traj is not None:
        (out / "trajectory.csv").write_text(trajectory_csv(traj, cfg.system))
    (out / "report.json").write_text(report.to_json() + "\n")
    (out / "timing.json").write_text(json.dumps({"wall_time": report.wall_time}) + "\n")


# -- catalog --------------------------------------------------------------------

_GENERIC_HAL2 = [[0.3, 0.1], [-0.5, 0.2], [0.1, -0.4]]
_GENERIC_DHV = [[0.3, 0.1], [-0.2, 0.3], [0.1, -0.2], [0.2, 0.1], [-0.1, 0.15]]
_EIGHTH = [[-0.125, 0], [-0.125, 0], [-0.125, 0]]
_CHAZY_ABC = [[-31 / 288, 0], [-23 / 288, 0], [-41 / 288, 0]]

_CATALOG = [
    ("hal1-closed-form", "Halphen I from a theta initial state follows the theta solution; y = 2(X+Y+Z) solves Chazy",
     {"system": "hal1", "initial": "theta:1,0,0,1,1j", "path": [[0, 1], [0.5, 1], [0.5, 1.5]],
      "verification": ["closed-form", "transform"]}),
    ("hal1-mobius-closed-form", "Halphen I theta solution under the Mobius map (2t+1)/(t+1)",
     {"system": "hal1", "initial": "theta:2,1,1,1,-0.5+0.4j", "path": [[-0.5, 0.4], [-0.55, 0.45]],
      "verification": ["closed-form"]}),
    ("chazy-closed-form", "Chazy from the theta_1' solution, compared at 10 t-points",
     {"system": "chazy", "initial": "theta:1,0,0,1,1j", "path": [[0, 1], [0.4, 1.2]],
      "verification": ["closed-form"]}),
    ("hal2-transform-hal1", "Halphen II at a=b=c=-1/8 maps onto Halphen I",
     {"system": "hal2", "params": {"abc": _EIGHTH}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.5, 0], [0.5, 0.5]], "verification": ["transform"]}),
    ("hal2-lax-default", "Zero curvature of the Halphen II MED Lax pair on a 5x5 grid",
     {"system": "hal2", "params": {"abc": _EIGHTH}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.5, 0], [0.5, 0.5]], "verification": ["lax"]}),
    ("hal2-lax-theta", "Halphen II (-1/8) from a theta initial state: Lax pair and exponent law",
     {"system": "hal2", "params": {"abc": _EIGHTH}, "initial": "theta:1,0,0,1,1j",
      "path": [[0, 1], [0.3, 1.1]], "verification": ["lax", "exponents"]}),
    ("hal2-exponents", "Local exponents follow the exponent law (global sign recorded)",
     {"system": "hal2", "params": {"abc": _CHAZY_ABC}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.4, 0.1]], "verification": ["exponents"]}),
    ("hal2-f-integrability", "Integrability polynomial of the scalar factor f vanishes",
     {"system": "hal2", "params": {"abc": [[0.1, 0.05], [-0.2, 0], [0.03, -0.1]]}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.4, 0]], "verification": ["f-integrability"]}),
    ("hal2-z-system", "Z-system after the Y = f Z rescaling",
     {"system": "hal2", "params": {"abc": _CHAZY_ABC}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.4, 0.2]], "verification": ["z-system"]}),
    ("hal2-hypergeom-chazy", "Halphen II through the Fuchsian ratio map, Chazy parameters",
     {"system": "hal2", "params": {"abc": _CHAZY_ABC}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.1, 0]], "verification": ["closed-form"]}),
    ("hal2-hypergeom-halphen1", "Halphen II through the Fuchsian ratio map, a=b=c=-1/8",
     {"system": "hal2", "params": {"abc": _EIGHTH}, "initial": _GENERIC_HAL2,
      "path": [[0, 0], [0.1, 0]], "verification": ["closed-form"]}),
    ("dhv-lax-default", "Zero curvature of the DH-V MED Lax pair on a 4x4 grid",
     {"system": "dhv", "initial": _GENERIC_DHV, "path": [[0, 0], [0.4, 0]],
      "verification": ["lax", "transform"]}),
    ("dh9-diag-transform", "Diagonal DH-IX is Halphen I under (X,Y,Z) = -(w1,w2,w3)",
     {"system": "dh9", "initial": [[[0.3, 0.1], 0, 0], [0, [-0.5, 0.2], 0], [0, 0, [0.1, -0.4]]],
      "path": [[0, 0], [0.5, 0]], "verification": ["transform"]}),
    ("dh9-block-transform", "Block DH-IX stays block and follows DH-V",
     {"system": "dh9", "initial": [[[0.3, 0.1], [-0.1, 0.15], 0], [[0.2, 0.1], [-0.2, 0.3], 0], [0, 0, [0.1, -0.2]]],
      "path": [[0, 0], [0.4, 0]], "verification": ["transform"]}),
    ("ach-transform", "ACH with alphas (0, 1/2, 1/3) conjugates to Halphen II at the Chazy parameters",
     {"system": "ach", "params": {"alphas": [0, 0.5, [1 / 3, 0]]}, "initial": [[0.2, 0.1], [-0.3, 0.05], [0.1, -0.2]],
      "path": [[0, 0], [0.4, 0]], "verification": ["transform"]}),
]


def list_scenarios() -> list[tuple[str, str]]:
    return [(name, desc) for name, desc, _ in _CATALOG]


def builtin_scenario(name: str) -> dict:
    for n, _, cfg in _CATALOG:
        if n == name:
            return json.loads(json.dumps({"name": n, **cfg}))
    raise ConfigError(f"no built-in scenario named {name!r}", "scenario")

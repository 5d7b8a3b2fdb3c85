"""Config-driven verification sweeps.

The config is deliberately dependency-free: ``[section]`` headers and one
``key = value`` pair per line, lists comma-separated, ``#`` starts a comment
line.  Parsing fails fast with the offending line number.  Example::

    [sweep]
    checks = hyper, nikolskii, threshold
    seed = 7

    [grid]
    tuples = 2 2 2 4, 2 3 2 4
    r = auto

    [corpus]
    count = 5
    nvars = 1
    max_degree = 4
    kind = unit-box

    [output]
    path = sweep.csv

Polynomial lists in ``[corpus] polys`` are separated by ``;`` because the
dense polynomial format itself uses commas.  A sweep is a pure function of
its config: rerunning one produces byte-identical CSV.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import random_polynomials
from .inequalities import (
    HyperParams,
    hyper_check,
    kulikov_check,
    nikolskii_check,
    sharp_radius,
    threshold_search,
    weissler_threshold_check,
)
from .poly import ComplexPolynomial, parse_polynomial
from .report import ReportRow, VerificationReport, fmt_value

__all__ = ["SweepConfig", "parse_sweep_config", "load_sweep_config", "run_sweep"]

CHECK_KINDS = ("hyper", "nikolskii", "kulikov", "weissler", "threshold")

_SECTION_KEYS = {
    "sweep": {"checks", "seed", "method", "nodes", "angles", "samples"},
    "grid": {"tuples", "alpha", "beta", "p", "q", "r", "eps"},
    "corpus": {"polys", "count", "max_degree", "nvars", "kind", "seed"},
    "output": {"path"},
}


@dataclass(frozen=True)
class SweepConfig:
    checks: tuple[str, ...] = ("hyper",)
    seed: int = 0
    method: str = "quad"
    nodes: int | None = None
    angles: int | None = None
    samples: int | None = None
    tuples: tuple[tuple[float, float, float, float], ...] = ()
    radii: tuple[float, ...] | str = "auto"
    eps: float = 1e-2
    polys: tuple[ComplexPolynomial, ...] = ()
    output_path: str | None = None


def _fail(line_no: int, message: str) -> ValueError:
    return ValueError(f"config line {line_no}: {message}")


def _split_list(raw: str) -> list[str]:
    return [part.strip() for part in raw.split(",") if part.strip()]


def parse_sweep_config(text: str) -> SweepConfig:
    entries: dict[tuple[str, str], tuple[str, int]] = {}
    section = None
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in _SECTION_KEYS:
                raise _fail(line_no, f"unknown section [{section}]")
            continue
        if "=" not in line:
            raise _fail(line_no, f"expected key = value, got {raw_line.strip()!r}")
        if section is None:
            raise _fail(line_no, "key appears before any [section] header")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in _SECTION_KEYS[section]:
            raise _fail(line_no, f"unknown key {key!r} in [{section}]")
        if (section, key) in entries:
            raise _fail(line_no, f"duplicate key {key!r} in [{section}]")
        entries[(section, key)] = (value, line_no)

    def take(section: str, key: str) -> tuple[str, int] | None:
        return entries.get((section, key))

    def take_int(section: str, key: str, default: int | None) -> int | None:
        got = take(section, key)
        if got is None:
            return default
        value, line_no = got
        try:
            return int(value)
        except ValueError:
            raise _fail(line_no, f"{key} must be an integer, got {value!r}") from None

    def take_float(section: str, key: str, default: float) -> float:
        got = take(section, key)
        if got is None:
            return default
        value, line_no = got
        try:
            return float(value)
        except ValueError:
            raise _fail(line_no, f"{key} must be a number, got {value!r}") from None

    checks: tuple[str, ...] = ("hyper",)
    got = take("sweep", "checks")
    if got is not None:
        value, line_no = got
        names = tuple(name.lower() for name in _split_list(value))
        for name in names:
            if name not in CHECK_KINDS:
                raise _fail(
                    line_no, f"unknown check {name!r}; valid: {', '.join(CHECK_KINDS)}"
                )
        if not names:
            raise _fail(line_no, "checks list is empty")
        checks = names

    seed = take_int("sweep", "seed", 0)
    method = "quad"
    got = take("sweep", "method")
    if got is not None:
        value, line_no = got
        if value not in ("quad", "exact"):
            raise _fail(line_no, f"method must be quad or exact, got {value!r}")
        method = value
    nodes = take_int("sweep", "nodes", None)
    angles = take_int("sweep", "angles", None)
    samples = take_int("sweep", "samples", None)

    tuples: list[tuple[float, float, float, float]] = []
    got = take("grid", "tuples")
    axis_keys = [k for k in ("alpha", "beta", "p", "q") if take("grid", k) is not None]
    if got is not None and axis_keys:
        raise _fail(
            got[1], "give either tuples or the alpha/beta/p/q axis lists, not both"
        )
    if got is not None:
        value, line_no = got
        for chunk in _split_list(value):
            parts = chunk.split()
            if len(parts) != 4:
                raise _fail(
                    line_no,
                    f"each tuple needs four numbers 'alpha beta p q', got {chunk!r}",
                )
            try:
                tuples.append(tuple(float(x) for x in parts))
            except ValueError:
                raise _fail(line_no, f"non-numeric tuple entry in {chunk!r}") from None
    elif axis_keys:
        axes = {}
        for key in ("alpha", "beta", "p", "q"):
            got_axis = take("grid", key)
            if got_axis is None:
                present = take("grid", axis_keys[0])
                raise _fail(
                    present[1], f"axis lists need all of alpha/beta/p/q; missing {key}"
                )
            value, line_no = got_axis
            try:
                axes[key] = [float(x) for x in _split_list(value)]
            except ValueError:
                raise _fail(line_no, f"{key} list must be numeric") from None
            if not axes[key]:
                raise _fail(line_no, f"{key} list is empty")
        for a in axes["alpha"]:
            for b in axes["beta"]:
                for pp in axes["p"]:
                    for qq in axes["q"]:
                        tuples.append((a, b, pp, qq))

    radii: tuple[float, ...] | str = "auto"
    got = take("grid", "r")
    if got is not None:
        value, line_no = got
        if value.lower() == "auto":
            radii = "auto"
        else:
            try:
                radii = tuple(float(x) for x in _split_list(value))
            except ValueError:
                raise _fail(line_no, f"r must be auto or numbers, got {value!r}") from None
            for r in radii:
                if not (0.0 <= r <= 1.0):
                    raise _fail(line_no, f"radius {r} outside [0, 1]")
    eps = take_float("grid", "eps", 1e-2)
    if not (0.0 < eps < 1.0):
        raise _fail(take("grid", "eps")[1], f"eps must lie in (0, 1), got {eps}")

    polys: list[ComplexPolynomial] = []
    got = take("corpus", "polys")
    if got is not None:
        value, line_no = got
        for chunk in value.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                polys.append(parse_polynomial(chunk))
            except ValueError as exc:
                raise _fail(line_no, f"bad polynomial {chunk!r}: {exc}") from None
    count = take_int("corpus", "count", 0)
    if count:
        nvars = take_int("corpus", "nvars", 1)
        max_degree = take_int("corpus", "max_degree", 4)
        kind = "unit-box"
        got = take("corpus", "kind")
        if got is not None:
            value, line_no = got
            if value not in ("unit-box", "zero-free"):
                raise _fail(line_no, f"kind must be unit-box or zero-free, got {value!r}")
            kind = value
        corpus_seed = take_int("corpus", "seed", seed)
        polys.extend(random_polynomials(count, nvars, max_degree, corpus_seed, kind))

    output_path = None
    got = take("output", "path")
    if got is not None:
        output_path = got[0]
        if not output_path:
            raise _fail(got[1], "output path is empty")

    return SweepConfig(
        checks=checks,
        seed=seed,
        method=method,
        nodes=nodes,
        angles=angles,
        samples=samples,
        tuples=tuple(tuples),
        radii=radii,
        eps=eps,
        polys=tuple(polys),
        output_path=output_path,
    )


def load_sweep_config(path: str) -> SweepConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_sweep_config(handle.read())


# --------------------------------------------------------------- execution


def _params_string(pairs) -> str:
    return ";".join(f"{k}={fmt_value(v)}" for k, v in pairs)


def _status(passed: bool, hypothesis_ok: bool) -> str:
    if not hypothesis_ok:
        return "out-of-hypothesis"
    return "pass" if passed else "fail"


def _radii_for(cfg: SweepConfig, tup) -> list[float]:
    if cfg.radii == "auto":
        alpha, beta, p, q = tup
        return [sharp_radius(HyperParams.make(alpha, beta, p, q))]
    return list(cfg.radii)


def _hyper_task(cfg, poly, tup, r):
    alpha, beta, p, q = tup
    hp = HyperParams.make(alpha, beta, p, q)
    res = hyper_check(poly, hp, r, method=cfg.method, nodes=cfg.nodes, angles=cfg.angles)
    params = _params_string(
        [("alpha", alpha), ("beta", beta), ("p", p), ("q", q), ("r", r), ("poly", poly)]
    )
    return ReportRow(
        check_id="hyper",
        params=params,
        computed=res.lhs,
        target=res.rhs,
        status=_status(res.passed, res.hypothesis_ok),
        method=res.method,
        est_error=0.0,
        hypothesis_ok=res.hypothesis_ok,
    )


def _nikolskii_task(cfg, poly, tup):
    alpha, beta, p, q = tup
    res = nikolskii_check(poly, alpha, beta, p, q, nodes=cfg.nodes, angles=cfg.angles)
    params = _params_string(
        [("alpha", alpha), ("beta", beta), ("p", p), ("q", q), ("poly", poly)]
    )
    return ReportRow(
        check_id="nikolskii",
        params=params,
        computed=res.ratio,
        target=res.bound,
        status=_status(res.passed, res.hypothesis_ok),
        method="quadrature",
        est_error=0.0,
        hypothesis_ok=res.hypothesis_ok,
        note=f"degree={res.degree}",
    )


def _kulikov_task(cfg, poly, tup):
    alpha, _, p, q = tup
    res = kulikov_check(poly, alpha, p, q)
    params = _params_string([("alpha", alpha), ("p", p), ("q", q), ("poly", poly)])
    return ReportRow(
        check_id="kulikov",
        params=params,
        computed=res.lhs,
        target=res.rhs,
        status=_status(res.passed, True),
        method="quadrature",
        est_error=0.0,
        note=f"beta_prime={fmt_value(res.beta_prime)}",
    )


def _weissler_task(cfg, poly, tup, r):
    _, _, p, q = tup
    res = weissler_threshold_check(poly, p, q, r, angles=cfg.angles)
    params = _params_string([("p", p), ("q", q), ("r", r), ("poly", poly)])
    return ReportRow(
        check_id="weissler",
        params=params,
        computed=res.lhs,
        target=res.rhs,
        status=_status(res.passed, p <= q),
        method="quadrature",
        est_error=0.0,
        hypothesis_ok=p <= q,
    )


def _threshold_task(cfg, tup):
    alpha, beta, p, q = tup
    hp = HyperParams.make(alpha, beta, p, q)
    rep = threshold_search(hp, eps=cfg.eps)
    passed = abs(rep.r_star_empirical - rep.r_star_theoretical) <= 5e-3
    params = _params_string(
        [("alpha", alpha), ("beta", beta), ("p", p), ("q", q), ("eps", cfg.eps)]
    )
    return ReportRow(
        check_id="threshold",
        params=params,
        computed=rep.r_star_empirical,
        target=rep.r_star_theoretical,
        status=_status(passed, hp.hypothesis_ok),
        method="bisection",
        est_error=rep.bracket_width,
        hypothesis_ok=hp.hypothesis_ok,
    )


def _weissler_radii(cfg: SweepConfig, tup) -> list[float]:
    if cfg.radii == "auto":
        _, _, p, q = tup
        return [math.sqrt(min(p / q, 1.0))]
    return list(cfg.radii)


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> VerificationReport:
    """Execute the configured cross-product of checks.

    Per-row numerical failures become status=error rows; they fail the
    aggregate but do not abort the sweep.
    """
    tasks = []
    for kind in cfg.checks:
        if kind == "hyper":
            for tup in cfg.tuples:
                for r in _radii_for(cfg, tup):
                    for poly in cfg.polys:
                        tasks.append(("hyper", (cfg, poly, tup, r), _hyper_task))
        elif kind == "nikolskii":
            for tup in cfg.tuples:
                for poly in cfg.polys:
                    tasks.append(("nikolskii", (cfg, poly, tup), _nikolskii_task))
        elif kind == "kulikov":
            for tup in cfg.tuples:
                for poly in cfg.polys:
                    tasks.append(("kulikov", (cfg, poly, tup), _kulikov_task))
        elif kind == "weissler":
            for tup in cfg.tuples:
                for r in _weissler_radii(cfg, tup):
                    for poly in cfg.polys:
                        tasks.append(("weissler", (cfg, poly, tup, r), _weissler_task))
        elif kind == "threshold":
            for tup in cfg.tuples:
                tasks.append(("threshold", (cfg, tup), _threshold_task))

    def run_one(task):
        kind, args, fn = task
        try:
            return fn(*args)
        except Exception as exc:
            described = args[1] if len(args) > 1 else None
            params = _params_string([("input", described)]) if described is not None else ""
            return ReportRow(
                check_id=kind,
                params=params,
                computed=None,
                target=None,
                status="error",
                note=f"{type(exc).__name__}: {exc}",
            )

    report = VerificationReport()
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            report.extend(pool.map(run_one, tasks))
    else:
        report.extend(run_one(task) for task in tasks)
    return report

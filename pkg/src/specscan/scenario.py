"""Scenario files: flat ``key = value`` lines with dotted section keys.

Example::

    params.U = 1.0
    params.F = 0.3
    prior.uniform = 0.039 0.3
    sweep.F = 0.1 0.4 30
    report.types = 0.039 0.3
    verify = false
    seed = 0

Prior keys (exactly one, or none for a point mass at ``params.c``):
``prior.point = c``, ``prior.uniform = lo hi``, ``prior.atoms = c:w c:w ...``
and ``prior.pieces = lo:hi:density ...``. ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ConfigError, DomainError
from .params import NetworkParams
from .priors import TypeDistribution

PARAM_KEYS = ("U", "V", "C_S", "C_I", "F", "a", "b", "c", "q0")
REQUIRED_PARAMS = ("U", "V", "C_S", "C_I", "F", "a", "b")
SWEEP_KEYS = ("F", "q0")
PRIOR_KINDS = ("point", "uniform", "atoms", "pieces")


@dataclass(frozen=True)
class SweepAxis:
    parameter: str
    lo: float
    hi: float
    steps: int


@dataclass(frozen=True)
class ScenarioConfig:
    params: NetworkParams
    prior: TypeDistribution
    point_prior: bool
    sweep: tuple = ()
    report_types: tuple = ()
    verify: bool = False
    seed: int = 0
    source: str = field(default="<string>", compare=False)


def _floats(key, raw, n=None):
    try:
        vals = [float(t) for t in raw.split()]
    except ValueError:
        raise ConfigError(key, f"expected numbers, got {raw!r}") from None
    if n is not None and len(vals) != n:
        raise ConfigError(key, f"expected {n} values, got {len(vals)}")
    return vals


def _bool(key, raw):
    low = raw.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ConfigError(key, f"expected a boolean, got {raw!r}")


def _tokens(key, raw, width):
    out = []
    for tok in raw.split():
        parts = tok.split(":")
        if len(parts) != width:
            raise ConfigError(key, f"malformed entry {tok!r}")
        try:
            out.append(tuple(float(v) for v in parts))
        except ValueError:
            raise ConfigError(key, f"malformed entry {tok!r}") from None
    if not out:
        raise ConfigError(key, "no entries")
    return out


def parse_config(text: str, source: str = "<string>") -> ScenarioConfig:
    entries = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in entries:
            raise ConfigError(key, "given twice")
        entries[key] = value

    known = {f"params.{k}" for k in PARAM_KEYS} | {f"prior.{k}" for k in PRIOR_KINDS} \
        | {f"sweep.{k}" for k in SWEEP_KEYS} | {"report.types", "verify", "seed"}
    for key in entries:
        if key not in known:
            raise ConfigError(key, "unknown key")

    values = {}
    for k in PARAM_KEYS:
        key = f"params.{k}"
        if key in entries:
            values[k] = _floats(key, entries[key], 1)[0]
        elif k in REQUIRED_PARAMS:
            raise ConfigError(key, "missing")
    values.setdefault("c", values["b"])
    values.setdefault("q0", 1.0)

    prior_keys = [k for k in PRIOR_KINDS if f"prior.{k}" in entries]
    if len(prior_keys) > 1:
        raise ConfigError("prior", f"give one prior, got {', '.join(prior_keys)}")
    point_prior = not prior_keys or prior_keys[0] == "point"
    try:
        if not prior_keys:
            prior = TypeDistribution.point(values["c"])
        else:
            kind = prior_keys[0]
            key = f"prior.{kind}"
            raw = entries[key]
            if kind == "point":
                values["c"] = _floats(key, raw, 1)[0]
                prior = TypeDistribution.point(values["c"])
            elif kind == "uniform":
                lo, hi = _floats(key, raw, 2)
                if not lo < hi:
                    raise ConfigError(key, "needs lo < hi")
                prior = TypeDistribution.uniform(lo, hi)
            elif kind == "atoms":
                prior = TypeDistribution.discrete(_tokens(key, raw, 2), normalize=True)
            else:
                prior = TypeDistribution.piecewise(_tokens(key, raw, 3), normalize=True)
    except DomainError as exc:
        raise ConfigError("prior", str(exc)) from None

    try:
        params = NetworkParams(**values)
    except DomainError as exc:
        raise ConfigError("params", str(exc)) from None
    try:
        prior.check_support(params.a, params.b)
    except DomainError as exc:
        raise ConfigError("prior", str(exc)) from None

    sweep = []
    for k in SWEEP_KEYS:
        key = f"sweep.{k}"
        if key not in entries:
            continue
        lo, hi, steps = _floats(key, entries[key], 3)
        if steps < 1 or steps != int(steps):
            raise ConfigError(key, "steps must be a positive integer")
        if hi < lo:
            raise ConfigError(key, "needs min <= max")
        for v in (lo, hi):
            try:
                params.with_(**{k: v})
            except DomainError as exc:
                raise ConfigError(key, f"range endpoint {v} is invalid: {exc}") from None
        if k == "q0" and lo <= 0:
            raise ConfigError(key, "q0 must stay > 0 in a sweep")
        sweep.append(SweepAxis(k, lo, hi, int(steps)))

    if "report.types" in entries:
        types = tuple(_floats("report.types", entries["report.types"]))
    else:
        types = (params.c,) if point_prior else prior.support_bounds
    for c in types:
        if not prior.in_support(c):
            raise ConfigError("report.types", f"type {c} is outside the prior support")

    verify = _bool("verify", entries["verify"]) if "verify" in entries else False
    seed = 0
    if "seed" in entries:
        try:
            seed = int(entries["seed"])
        except ValueError:
            raise ConfigError("seed", f"expected an integer, got {entries['seed']!r}") from None

    return ScenarioConfig(params, prior, point_prior, tuple(sweep), types, verify, seed, source)


def load_config(path) -> ScenarioConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError("--config", f"cannot read {path}: {exc.strerror}") from None
    return parse_config(text, str(path))


def packaged_config(name: str) -> ScenarioConfig:
    """Load one of the scenarios shipped in ``specscan/data``."""
    text = resources.files("specscan").joinpath("data").joinpath(name).read_text()
    return parse_config(text, f"specscan/data/{name}")

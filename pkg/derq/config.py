import os
from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml
from dotenv import load_dotenv
from sympy import isprime

from .errors import InputError

# A .env file next to the caller may carry DERQ_* overrides
load_dotenv()

CONFIG_FILE = Path("derq.yaml")

DEFAULT_BUDGET_SECONDS = 1800.0
DEFAULT_MAX_NODES = 50_000_000
DEFAULT_JOBS = 1
DEFAULT_SEED = 20240601
DEFAULT_MAX_PRIME = 7

ENV_OVERRIDES = {
    "DERQ_BUDGET_SECONDS": ("budget_seconds", float),
    "DERQ_MAX_NODES": ("max_nodes", int),
    "DERQ_JOBS": ("jobs", int),
    "DERQ_SEED": ("seed", int),
}


@dataclass(frozen=True)
class RunConfig:
    command: str = ""
    inputs: tuple = ()
    prime: int = None
    degree: int = None
    jobs: int = DEFAULT_JOBS
    budget_seconds: float = DEFAULT_BUDGET_SECONDS
    max_nodes: int = DEFAULT_MAX_NODES
    max_prime: int = DEFAULT_MAX_PRIME
    output: str = None
    output_format: str = "text"
    seed: int = DEFAULT_SEED
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.prime is not None and not isprime(self.prime):
            raise InputError(f"{self.prime} is not a prime")
        if self.jobs < 1:
            raise InputError("worker count must be at least 1")
        if self.budget_seconds <= 0 or self.max_nodes <= 0:
            raise InputError("budgets must be positive")
        if self.output_format not in ("json", "text"):
            raise InputError(f"unknown output format {self.output_format!r}")
        return self

    def with_overrides(self, **changes):
        """Apply non-None keyword overrides (CLI flags) on top of this config."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_file_settings(path=CONFIG_FILE):
    """Read derq.yaml if it exists; unknown keys are ignored."""
    path = Path(path)
    if not path.exists():
        return {}
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    if not isinstance(data, dict):
        raise InputError(f"{path} must contain a mapping")
    known = RunConfig.__dataclass_fields__
    return {k: v for k, v in data.items() if k in known}


def load_env_settings(environ=None):
    environ = os.environ if environ is None else environ
    settings = {}
    for var, (key, cast) in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw == "":
            continue
        try:
            settings[key] = cast(raw)
        except ValueError as e:
            raise InputError(f"{var}={raw!r} is not a valid {cast.__name__}") from e
    return settings


def load_config(path=CONFIG_FILE, environ=None, **flags):
    """Build a RunConfig: flags > environment > derq.yaml > defaults."""
    settings = load_file_settings(path)
    settings.update(load_env_settings(environ))
    config = RunConfig(**settings)
    return config.with_overrides(**flags).validate()

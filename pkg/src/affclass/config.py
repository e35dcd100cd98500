"""Run-time limits shared by the library and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_MAX_N = "AFFCLASS_MAX_N"

FORMATS = ("text", "json", "csv")


class ValidationError(ValueError):
    """Bad argument: out-of-range n, malformed truth table, unknown class index."""


class CapExceeded(ValidationError):
    """Requested materialization is larger than the configured cap."""


@dataclass(frozen=True)
class RunConfig:
    max_n_table: int = 24
    max_n_materialize: int = 4
    output_format: str = "text"

    def __post_init__(self):
        if self.max_n_table < 1 or self.max_n_materialize < 1:
            raise ValidationError("caps must be positive")
        if self.max_n_materialize > self.max_n_table:
            raise ValidationError("max_n_materialize must not exceed max_n_table")
        if self.output_format not in FORMATS:
            raise ValidationError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        cfg = cls()
        raw = os.environ.get(ENV_MAX_N)
        if raw:
            try:
                cfg = replace(cfg, max_n_materialize=int(raw))
            except ValueError as exc:
                raise ValidationError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from exc
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(cfg, **overrides)


DEFAULT = RunConfig()


def check_materialize(n: int, cap: int | None = None) -> None:
    cap = DEFAULT.max_n_materialize if cap is None else cap
    if n > cap:
        raise CapExceeded(
            f"n={n} exceeds the materialization cap ({cap}); "
            f"raise it with --max-n or {ENV_MAX_N}, or stream the output"
        )

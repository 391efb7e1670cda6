"""Environment variable settings for the command line and the search runner."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, MutableMapping

from .symfunc import DEFAULT_BUDGET_BITS

_PREFIX = "GPTE_"

_OPTIONAL_DEFAULTS = {
    "GPTE_WORKERS": "1",
    "GPTE_FACTOR_BUDGET_BITS": str(DEFAULT_BUDGET_BITS),
    "GPTE_LOG_LEVEL": "WARNING",
    "GPTE_SERVICE_NAME": "gaussian-pte",
    "GPTE_OTLP_LOGS_ENDPOINT": "",
    "GPTE_OTLP_TRACES_ENDPOINT": "",
    "GPTE_RUN_SLOW": "false",
}

_BOOLEAN_TRUE = {"1", "true", "yes", "on"}

_LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class SettingsError(ValueError):
    """Raised when an environment variable holds an unusable value."""


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError as exc:
        raise SettingsError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise SettingsError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class RuntimeSettings:
    """Resolved ``GPTE_*`` variables; unknown ones are kept in ``extra``."""

    workers: int = 1
    factor_budget_bits: int = DEFAULT_BUDGET_BITS
    log_level: str = "WARNING"
    service_name: str = "gaussian-pte"
    otlp_logs_endpoint: str | None = None
    otlp_traces_endpoint: str | None = None
    run_slow: bool = False
    extra: Mapping[str, str] = field(default_factory=dict)

    @classmethod
    def from_env(
        cls, env: Mapping[str, str] | None = None, *, mutable: bool = False
    ) -> "RuntimeSettings":
        """Read settings from ``env``, defaulting to ``os.environ``.

        Args:
            env: Mapping to read from.
            mutable: Return ``extra`` as a plain dict instead of a read-only view.

        Raises:
            SettingsError: If a numeric variable or the log level is invalid.
        """

        source: Mapping[str, str] = os.environ if env is None else env
        resolved: MutableMapping[str, str] = {
            k: source[k] for k in source if k.startswith(_PREFIX)
        }
        for key, default in _OPTIONAL_DEFAULTS.items():
            resolved.setdefault(key, default)

        level = resolved["GPTE_LOG_LEVEL"].strip().upper()
        if level not in _LOG_LEVELS:
            raise SettingsError(f"GPTE_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")

        extra = {key: value for key, value in resolved.items() if key not in _OPTIONAL_DEFAULTS}
        return cls(
            workers=_positive_int("GPTE_WORKERS", resolved["GPTE_WORKERS"]),
            factor_budget_bits=_positive_int(
                "GPTE_FACTOR_BUDGET_BITS", resolved["GPTE_FACTOR_BUDGET_BITS"]
            ),
            log_level=level,
            service_name=resolved["GPTE_SERVICE_NAME"] or "gaussian-pte",
            otlp_logs_endpoint=resolved["GPTE_OTLP_LOGS_ENDPOINT"] or None,
            otlp_traces_endpoint=resolved["GPTE_OTLP_TRACES_ENDPOINT"] or None,
            run_slow=resolved["GPTE_RUN_SLOW"].strip().lower() in _BOOLEAN_TRUE,
            extra=extra if mutable else MappingProxyType(extra),
        )

    @property
    def log_level_number(self) -> int:
        return logging.getLevelName(self.log_level)

    def as_dict(self) -> Mapping[str, str]:
        return {
            "GPTE_WORKERS": str(self.workers),
            "GPTE_FACTOR_BUDGET_BITS": str(self.factor_budget_bits),
            "GPTE_LOG_LEVEL": self.log_level,
            "GPTE_SERVICE_NAME": self.service_name,
            "GPTE_OTLP_LOGS_ENDPOINT": self.otlp_logs_endpoint or "",
            "GPTE_OTLP_TRACES_ENDPOINT": self.otlp_traces_endpoint or "",
            "GPTE_RUN_SLOW": "true" if self.run_slow else "false",
            **dict(self.extra),
        }


__all__ = ["RuntimeSettings", "SettingsError"]

import inspect
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from ..errors import InvalidConfiguration

TOLERANCE_ENV_VAR = "HALMOS_TOL"


@dataclass(frozen=True)
class Tolerances:
    """The single tolerance record threaded through every operation.

    Every threshold is relative to a natural scale (largest singular value,
    matrix norm) where one exists and absolute otherwise.
    """

    orth: float = 1e-10
    hermitian: float = 1e-10
    idempotent: float = 1e-9
    gap: float = 1e-8
    gray_zone: float = 1e-6
    residual: float = 1e-9
    rank: float = 1e-8
    null: float = 1e-10
    absolute: float = 1e-10
    containment: float = 1e-8

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not value > 0:
                raise InvalidConfiguration(
                    f"Tolerance '{f.name}' must be a positive number, got {value!r}",
                    invariant=f"{f.name} > 0",
                )

    @classmethod
    def from_dict(cls, params: Dict[str, Any]) -> "Tolerances":
        return cls(
            **{
                k: float(v)
                for k, v in params.items()
                if k in inspect.signature(cls).parameters
            }
        )

    def to_dict(self) -> Dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def scaled(self, factor: float) -> "Tolerances":
        """Multiply the whole family by ``factor`` (the CLI ``--tol`` knob)."""
        if not factor > 0:
            raise InvalidConfiguration(
                f"Tolerance scale must be positive, got {factor}",
                invariant="tol > 0",
            )
        return replace(
            self, **{f.name: getattr(self, f.name) * factor for f in fields(self)}
        )

    @property
    def block(self) -> float:
        """Threshold above which an asserted vanishing block is an error."""
        return 10 * self.residual

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> "Tolerances":
        environ = os.environ if environ is None else environ
        raw = environ.get(TOLERANCE_ENV_VAR)
        if raw is None or not raw.strip():
            return cls()
        try:
            factor = float(raw)
        except ValueError:
            raise InvalidConfiguration(
                f"{TOLERANCE_ENV_VAR} must be a number, got {raw!r}",
                invariant=f"{TOLERANCE_ENV_VAR} numeric",
            )
        return cls().scaled(factor)


DEFAULT_TOLERANCES = Tolerances()

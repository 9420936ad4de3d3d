"""Resource caps, overridable through environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields

ENV_PREFIX = "KNESER_LAB_"


@dataclass(frozen=True)
class Caps:
    kg_edges: int = 10**7
    alt_inner_n: int = 22
    alt_outer_n: int = 9
    fan_labelings: int = 10**7
    fan_vertices: int = 10**6
    sweep_colorings: int = 10**6
    time_budget_ms: int = 0  # 0 disables the budget

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "time_budget_ms":
                if value < 0:
                    raise ValueError("time_budget_ms must be >= 0")
            elif value <= 0:
                raise ValueError(f"cap {f.name} must be positive")

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """Read ``KNESER_LAB_<FIELD>`` overrides, e.g. ``KNESER_LAB_KG_EDGES``."""
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                kwargs[f.name] = int(raw)
        return cls(**kwargs)

    @property
    def time_budget_s(self) -> float | None:
        return self.time_budget_ms / 1000.0 if self.time_budget_ms else None


DEFAULT_CAPS = Caps()

import os
from dataclasses import dataclass

DEFAULT_BUDGET = 3
BUDGET_ENV = "BLUESCHEME_BUDGET"


@dataclass(frozen=True)
class Settings:
    """Knobs shared by the congruence engine and the spectrum enumerator.

    ``budget`` is the saturation depth: the maximal number of one-step
    rewrites in a derivation. ``max_states`` caps the size of any single
    explored congruence class; hitting it yields an honest Unknown.
    """

    budget: int = DEFAULT_BUDGET
    max_states: int = 4000
    max_generators: int = 24

    @classmethod
    def from_env(cls, **overrides):
        raw = os.environ.get(BUDGET_ENV)
        if raw is not None and "budget" not in overrides:
            overrides["budget"] = int(raw)
        return cls(**overrides)

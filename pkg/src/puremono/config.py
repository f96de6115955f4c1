"""Run configuration shared by the library entry points and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from puremono.poly.integer import DEFAULT_SQUAREFREE_BOUND

BOUND_ENV = "PUREMONO_SQUAREFREE_BOUND"


def _bound_from_env() -> int:
    raw = os.environ.get(BOUND_ENV)
    return int(raw) if raw else DEFAULT_SQUAREFREE_BOUND


@dataclass(frozen=True)
class Config:
    seed: int = 0
    squarefree_bound: int = field(default_factory=_bound_from_env)

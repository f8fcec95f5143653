"""Published closed-form expressions for the accelerated GHZ state.

Each formula is evaluated exactly as printed, with no corrections, so that the
sweep can report where it agrees with the numerically computed value.
"""
from __future__ import annotations

import enum
import math

from .unruh import check_accel


class ClosedFormId(str, enum.Enum):
    EQ8_BIPARTITE_ONEOBS = "eq8"
    Q_AB_ONEOBS_COS = "q_ab_cos"
    EQ10_TRI_ONEOBS = "eq10"
    EQ12_BIPARTITE_BC_TWOOBS = "eq12"
    EQ13_BIPARTITE_ABAC_TWOOBS = "eq13"
    EQ15_TRI_TWOOBS = "eq15"


def _eq8(r):
    return 0.25 * (-2.0 + math.sqrt(3.0 + math.cos(4 * r)))


def _q_ab_cos(r):
    return math.cos(r)


def _eq10(r):
    return 0.25 * (-2.0 + 4.0 * math.cos(r) + math.sqrt(3.0 + math.cos(4 * r)))


def _eq12(r):
    c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
    return 0.25 * (
        -4.0
        + c2 * math.sqrt(3.0 + math.cos(4 * r))
        + 2.0 * math.sqrt(c2 * c2 * s2 * s2 + (1.0 + s2 * s2) ** 2)
    )


def _eq15(r):
    return 0.25 * (-2.0 + 4.0 * math.cos(r) ** 2 + math.sqrt(3.0 + math.cos(4 * r)))


_FORMULAS = {
    ClosedFormId.EQ8_BIPARTITE_ONEOBS: _eq8,
    ClosedFormId.Q_AB_ONEOBS_COS: _q_ab_cos,
    ClosedFormId.EQ10_TRI_ONEOBS: _eq10,
    ClosedFormId.EQ12_BIPARTITE_BC_TWOOBS: _eq12,
    # same expression as EQ8, with r in place of r_c
    ClosedFormId.EQ13_BIPARTITE_ABAC_TWOOBS: _eq8,
    ClosedFormId.EQ15_TRI_TWOOBS: _eq15,
}

ONE_OBSERVER_FORMS = (
    ClosedFormId.EQ8_BIPARTITE_ONEOBS,
    ClosedFormId.Q_AB_ONEOBS_COS,
    ClosedFormId.EQ10_TRI_ONEOBS,
)
TWO_OBSERVER_FORMS = (
    ClosedFormId.EQ12_BIPARTITE_BC_TWOOBS,
    ClosedFormId.EQ13_BIPARTITE_ABAC_TWOOBS,
    ClosedFormId.EQ15_TRI_TWOOBS,
)


def eval_closed_form(form: ClosedFormId | str, r: float) -> float:
    """Evaluate a published closed form at acceleration parameter ``r``."""
    return _FORMULAS[ClosedFormId(form)](check_accel(r))

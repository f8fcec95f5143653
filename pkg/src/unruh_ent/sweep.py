"""Acceleration sweeps over the GHZ state and closed-form audit reports."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .closed_forms import (
    ONE_OBSERVER_FORMS,
    TWO_OBSERVER_FORMS,
    ClosedFormId,
    eval_closed_form,
)
from .errors import ConfigError, EmptyInput
from .measures import pi_tangle, q_bipartite_marginal, q_tripartite
from .unruh import R_MAX, ghz_state_under_acceleration

SCENARIOS = ("one", "two", "custom")
FORMATS = ("csv", "json")
OUTPUT_GROUPS = ("q_tri", "q_bi", "pi")
PASS_TOL = 1e-9

# column suffix -> party pair (A=0, B=1, C=2)
PAIR_NAMES = {"bc": (1, 2), "ac": (0, 2), "ab": (0, 1)}
Q_TRI_COLS = ("q_tri_bc", "q_tri_ac", "q_tri_ab")
Q_BI_COLS = ("q_bi_ab", "q_bi_ac", "q_bi_bc")
ONE_TANGLE_COLS = ("na_bc", "nb_ac", "nc_ab")

# the numeric column each closed form is audited against
FORM_TARGETS = {
    ClosedFormId.EQ8_BIPARTITE_ONEOBS: "q_bi_bc",
    ClosedFormId.Q_AB_ONEOBS_COS: "q_tri_ab",
    ClosedFormId.EQ10_TRI_ONEOBS: "q_tri_bc",
    ClosedFormId.EQ12_BIPARTITE_BC_TWOOBS: "q_bi_bc",
    ClosedFormId.EQ13_BIPARTITE_ABAC_TWOOBS: "q_bi_ab",
    ClosedFormId.EQ15_TRI_TWOOBS: "q_tri_bc",
}
CF_COLS = tuple(f"cf_{f.value}" for f in ClosedFormId)
DELTA_COLS = tuple(f"d_{f.value}" for f in ClosedFormId)
COLUMNS = (
    ("r", "rb", "rc")
    + Q_TRI_COLS
    + Q_BI_COLS
    + ("pi",)
    + ONE_TANGLE_COLS
    + CF_COLS
    + DELTA_COLS
)


@dataclass
class SweepConfig:
    """Scenario and grid for a sweep.

    ``one`` accelerates Charlie only (``rb = 0``), ``two`` accelerates Bob and
    Charlie equally. ``custom`` sweeps every party whose ``rb``/``rc`` is left
    unset and holds the others fixed; with both fixed it is a single point.
    """

    scenario: str = "one"
    grid: int = 201
    rb: Optional[float] = None
    rc: Optional[float] = None
    outputs: tuple[str, ...] = OUTPUT_GROUPS
    format: str = "csv"
    seed: int = 0
    workers: int = 1

    def validate(self) -> SweepConfig:
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}", field="scenario")
        if isinstance(self.grid, bool) or not isinstance(self.grid, int) or self.grid < 2:
            raise ConfigError(f"grid must be an integer >= 2, got {self.grid!r}", field="grid")
        for name in ("rb", "rc"):
            value = getattr(self, name)
            if value is None:
                continue
            if self.scenario != "custom":
                raise ConfigError(f"--{name} is only valid with scenario 'custom'", field=name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ConfigError(f"{value!r} is not a number", field=name) from None
            if not (math.isfinite(value) and 0.0 <= value <= R_MAX):
                raise ConfigError(f"{value!r} outside [0, pi/4]", field=name)
            setattr(self, name, value)
        outputs = tuple(self.outputs)
        bad = [o for o in outputs if o not in OUTPUT_GROUPS]
        if bad or not outputs:
            raise ConfigError(
                f"outputs must be a non-empty subset of {OUTPUT_GROUPS}, got {outputs!r}",
                field="outputs",
            )
        self.outputs = outputs
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}", field="format")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}", field="seed")
        if isinstance(self.workers, bool) or not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError(f"workers must be a positive integer", field="workers")
        return self

    def points(self) -> list[tuple[Optional[float], float, float]]:
        """``(r, rb, rc)`` per grid point, ascending; ``r`` is the swept value."""
        grid = np.linspace(0.0, R_MAX, self.grid)
        grid[-1] = R_MAX
        if self.scenario == "one":
            return [(float(t), 0.0, float(t)) for t in grid]
        if self.scenario == "two":
            return [(float(t), float(t), float(t)) for t in grid]
        if self.rb is not None and self.rc is not None:
            return [(None, self.rb, self.rc)]
        return [
            (
                float(t),
                self.rb if self.rb is not None else float(t),
                self.rc if self.rc is not None else float(t),
            )
            for t in grid
        ]

    def closed_forms(self) -> tuple[ClosedFormId, ...]:
        if self.scenario == "one":
            return ONE_OBSERVER_FORMS
        if self.scenario == "two":
            return TWO_OBSERVER_FORMS
        if self.rb == 0.0 and self.rc is None:
            return ONE_OBSERVER_FORMS
        if self.rb is None and self.rc is None:
            return TWO_OBSERVER_FORMS
        return ()


@dataclass
class SweepRecord:
    r: Optional[float]
    rb: float
    rc: float
    q_tri: dict[str, float] = field(default_factory=dict)
    q_bi: dict[str, float] = field(default_factory=dict)
    pi: Optional[float] = None
    one_tangles: dict[str, float] = field(default_factory=dict)
    two_tangles: dict[str, float] = field(default_factory=dict)
    closed: dict[str, float] = field(default_factory=dict)
    deltas: dict[str, float] = field(default_factory=dict)

    def to_row(self) -> dict[str, Optional[float]]:
        row: dict[str, Optional[float]] = dict.fromkeys(COLUMNS)
        row.update(r=self.r, rb=self.rb, rc=self.rc, pi=self.pi)
        for name, value in self.q_tri.items():
            row[f"q_tri_{name}"] = value
        for name, value in self.q_bi.items():
            row[f"q_bi_{name}"] = value
        row.update(self.one_tangles)
        for form, value in self.closed.items():
            row[f"cf_{form}"] = value
        for form, value in self.deltas.items():
            row[f"d_{form}"] = value
        return row

    @classmethod
    def from_row(cls, row: dict) -> SweepRecord:
        def get(key):
            value = row.get(key)
            return None if value is None or value == "" else float(value)

        rec = cls(r=get("r"), rb=get("rb"), rc=get("rc"), pi=get("pi"))
        for name in PAIR_NAMES:
            if get(f"q_tri_{name}") is not None:
                rec.q_tri[name] = get(f"q_tri_{name}")
            if get(f"q_bi_{name}") is not None:
                rec.q_bi[name] = get(f"q_bi_{name}")
        for col in ONE_TANGLE_COLS:
            if get(col) is not None:
                rec.one_tangles[col] = get(col)
        for form in ClosedFormId:
            if get(f"cf_{form.value}") is not None:
                rec.closed[form.value] = get(f"cf_{form.value}")
            if get(f"d_{form.value}") is not None:
                rec.deltas[form.value] = get(f"d_{form.value}")
        return rec


def evaluate_point(
    r: Optional[float],
    rb: float,
    rc: float,
    outputs: Sequence[str] = OUTPUT_GROUPS,
    forms: Sequence[ClosedFormId] = (),
) -> SweepRecord:
    """Compute every requested quantifier for one ``(rb, rc)`` point."""
    rho = ghz_state_under_acceleration(rb, rc)
    rec = SweepRecord(r=r, rb=rb, rc=rc)
    if "q_tri" in outputs:
        for name, pair in PAIR_NAMES.items():
            rec.q_tri[name] = q_tripartite(rho, pair).value
    if "q_bi" in outputs:
        for name, pair in PAIR_NAMES.items():
            rec.q_bi[name] = q_bipartite_marginal(rho, pair).value
    if "pi" in outputs:
        bd = pi_tangle(rho)
        rec.pi = bd.pi
        rec.one_tangles = dict(zip(ONE_TANGLE_COLS, bd.one_tangles))
        rec.two_tangles = {
            name: bd.two_tangles[tuple(sorted(pair))] for name, pair in PAIR_NAMES.items()
        }
    numeric = rec.to_row()
    for form in forms:
        # rb == 0 for one-observer forms, rb == rc for two-observer forms
        value = eval_closed_form(form, rc)
        rec.closed[form.value] = value
        target = numeric[FORM_TARGETS[form]]
        if target is not None:
            rec.deltas[form.value] = abs(target - value)
    return rec


def _evaluate(args):
    return evaluate_point(*args)


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Evaluate the configured grid; records come back in ascending ``r``."""
    cfg.validate()
    forms = cfg.closed_forms()
    jobs = [(r, rb, rc, cfg.outputs, forms) for r, rb, rc in cfg.points()]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            # map preserves submission order, which is already ascending
            return list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    return [_evaluate(job) for job in jobs]


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else format(value, ".17g")


def records_to_csv(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        row = rec.to_row()
        writer.writerow([_fmt(row[c]) for c in COLUMNS])
    return buf.getvalue()


def records_from_csv(text: str) -> list[SweepRecord]:
    reader = csv.DictReader(io.StringIO(text))
    missing = [c for c in ("r", "rb", "rc") if c not in (reader.fieldnames or [])]
    if missing:
        raise ConfigError(f"CSV input lacks columns {missing}", line=1)
    return [SweepRecord.from_row(row) for row in reader]


def records_to_json(records: Iterable[SweepRecord]) -> str:
    return json.dumps([rec.to_row() for rec in records], indent=1) + "\n"


def records_from_json(text: str) -> list[SweepRecord]:
    return [SweepRecord.from_row(row) for row in json.loads(text)]


@dataclass(frozen=True)
class ReportRow:
    form: str
    target: str
    n: int
    max_delta: float
    mean_delta: float
    r_at_max: Optional[float]
    status: str


@dataclass(frozen=True)
class Report:
    rows: tuple[ReportRow, ...]

    def status(self, form: ClosedFormId | str) -> str:
        key = ClosedFormId(form).value
        for row in self.rows:
            if row.form == key:
                return row.status
        raise KeyError(key)

    def row(self, form: ClosedFormId | str) -> ReportRow:
        key = ClosedFormId(form).value
        return next(r for r in self.rows if r.form == key)

    def to_dict(self) -> list[dict]:
        return [row.__dict__.copy() for row in self.rows]

    def to_text(self) -> str:
        lines = [
            f"{'formula':<10} {'compared to':<12} {'points':>6} {'max |delta|':>12} "
            f"{'mean |delta|':>12} {'r at max':>10}  status"
        ]
        for row in self.rows:
            r_at = "" if row.r_at_max is None else f"{row.r_at_max:.6f}"
            lines.append(
                f"{row.form:<10} {row.target:<12} {row.n:>6} {row.max_delta:>12.3e} "
                f"{row.mean_delta:>12.3e} {r_at:>10}  {row.status}"
            )
        return "\n".join(lines) + "\n"


def compare_report(records: Sequence[SweepRecord], tol: float = PASS_TOL) -> Report:
    """Per-formula max and mean ``|numeric - closed form|`` with PASS/DISCREPANT.

    A formula passes when its largest delta is at most ``tol``. Discrepant rows
    are reported, never raised.
    """
    if not records:
        raise EmptyInput("no sweep records to compare")
    rows = []
    for form in ClosedFormId:
        pairs = [(rec.deltas[form.value], rec.r) for rec in records if form.value in rec.deltas]
        if not pairs:
            continue
        deltas = np.array([d for d, _ in pairs])
        k = int(np.argmax(deltas))
        max_delta = float(deltas[k])
        rows.append(
            ReportRow(
                form=form.value,
                target=FORM_TARGETS[form],
                n=len(pairs),
                max_delta=max_delta,
                mean_delta=float(deltas.mean()),
                r_at_max=pairs[k][1],
                status="PASS" if max_delta <= tol else "DISCREPANT",
            )
        )
    if not rows:
        raise EmptyInput("records carry no closed-form deltas")
    return Report(tuple(rows))

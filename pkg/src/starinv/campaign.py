"""Verification campaigns: run batteries over projection pairs, aggregate.

A campaign fixes a ring instance, a pair source (seeded random trials
for the infinite matrix rings, exhaustive enumeration for the finite
ones), and a list of battery ids.  Every trial is keyed by a TrialSpec
so any recorded failure can be replayed exactly.  Aggregation is
order-independent and records are kept sorted by trial index.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

from ._version import __version__
from .algebra import ExhaustiveEngine, enumerate_projections, example26_algebra
from .generators import EXHAUSTIVE_CELL_CAP, TrialSpec, all_projections_matrix, trial_pair
from .matrices import MatrixInverseEngine, MatrixRing
from .ring import ProjectionPairContext
from .scalars import QI, QQ, PrimeField
from .theorems import (
    TheoremVerdict,
    cor25_battery,
    cor26_battery,
    cor28_battery,
    cor29_chains,
    lemma21_checks,
    lemma22_identities,
    lemma23_identities,
    lemma210_battery,
    lemma211_check,
    lemma212_check,
    thm24_battery,
    thm27_check,
    thm213_check,
    thm214_check,
)

THEOREM_IDS = (
    "lemma21",
    "lemma22",
    "lemma23",
    "thm24",
    "cor25",
    "cor26",
    "thm27",
    "cor28",
    "cor29",
    "lemma210",
    "lemma211",
    "lemma212",
    "thm213",
    "thm214",
)

SCHEMA_VERSION = 1

STATUS_PASSED = "passed"
STATUS_FAILED = "failed"
STATUS_NOT_APPLICABLE = "not_applicable"


def run_battery(theorem: str, ctx: ProjectionPairContext, engine, star_reducing: bool) -> TheoremVerdict:
    """Dispatch one battery id on one pair.

    The element-level checks (lemma21, lemma212) are applied to the
    product pq derived from the pair.
    """
    if theorem == "lemma21":
        return lemma21_checks(ctx.p * ctx.q, engine)
    if theorem == "lemma22":
        return lemma22_identities(ctx)
    if theorem == "lemma23":
        return lemma23_identities(ctx, engine)
    if theorem == "thm24":
        return thm24_battery(ctx, engine)
    if theorem == "cor25":
        return cor25_battery(ctx, engine, star_reducing)
    if theorem == "cor26":
        return cor26_battery(ctx, engine, star_reducing)
    if theorem == "thm27":
        return thm27_check(ctx, engine)
    if theorem == "cor28":
        return cor28_battery(ctx, engine, star_reducing)
    if theorem == "cor29":
        return cor29_chains(ctx, engine, star_reducing)
    if theorem == "lemma210":
        return lemma210_battery(ctx, engine, star_reducing)
    if theorem == "lemma211":
        return lemma211_check(ctx, engine)
    if theorem == "lemma212":
        return lemma212_check(ctx.p * ctx.q, engine)
    if theorem == "thm213":
        return thm213_check(ctx, engine, star_reducing)
    if theorem == "thm214":
        return thm214_check(ctx, engine, star_reducing)
    raise ValueError(f"unknown theorem id {theorem!r}")


@dataclass(frozen=True)
class CampaignConfig:
    ring: str
    n: int = 2
    trials: int = 100
    seed: int = 0
    theorems: tuple[str, ...] = THEOREM_IDS

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "theorems": list(self.theorems),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignConfig":
        return cls(
            ring=data["ring"],
            n=data["n"],
            trials=data["trials"],
            seed=data["seed"],
            theorems=tuple(data["theorems"]),
        )


@dataclass(frozen=True)
class TheoremCounts:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "not_applicable": self.not_applicable,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremCounts":
        return cls(**data)


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of one battery on one trial.

    The replay data (spec and serialized pair) is attached to failures.
    """

    theorem: str
    trial: int
    status: str
    failing_checks: tuple[str, ...] = ()
    spec: TrialSpec | None = None
    p: str | None = None
    q: str | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trial": self.trial,
            "status": self.status,
            "failing_checks": list(self.failing_checks),
            "spec": None if self.spec is None else self.spec.to_dict(),
            "p": self.p,
            "q": self.q,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrialRecord":
        return cls(
            theorem=data["theorem"],
            trial=data["trial"],
            status=data["status"],
            failing_checks=tuple(data["failing_checks"]),
            spec=None if data["spec"] is None else TrialSpec.from_dict(data["spec"]),
            p=data["p"],
            q=data["q"],
        )


@dataclass
class CampaignReport:
    schema: int
    tool: str
    config: CampaignConfig
    counts: dict
    records: tuple[TrialRecord, ...]
    duration_seconds: float

    def failures(self) -> tuple[TrialRecord, ...]:
        return tuple(r for r in self.records if r.status == STATUS_FAILED)

    @property
    def exit_code(self) -> int:
        return 0 if all(c.failed == 0 for c in self.counts.values()) else 1

    def to_json(self) -> str:
        payload = {
            "schema": self.schema,
            "tool": self.tool,
            "config": self.config.to_dict(),
            "theorems": {name: c.to_dict() for name, c in self.counts.items()},
            "records": [r.to_dict() for r in self.records],
            "duration_seconds": self.duration_seconds,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CampaignReport":
        data = json.loads(text)
        return cls(
            schema=data["schema"],
            tool=data["tool"],
            config=CampaignConfig.from_dict(data["config"]),
            counts={name: TheoremCounts.from_dict(c) for name, c in data["theorems"].items()},
            records=tuple(TrialRecord.from_dict(r) for r in data["records"]),
            duration_seconds=data["duration_seconds"],
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theorem", "trial", "status", "failing_checks"])
        for record in self.records:
            writer.writerow(
                [record.theorem, record.trial, record.status, ";".join(record.failing_checks)]
            )
        return out.getvalue()


def _matrix_ring(ring_id: str, n: int) -> MatrixRing:
    if ring_id == "q":
        return MatrixRing(QQ, n)
    if ring_id == "qi":
        return MatrixRing(QI, n)
    if ring_id.startswith("gf:"):
        return MatrixRing(PrimeField(int(ring_id.split(":", 1)[1])), n)
    raise ValueError(f"unknown ring id {ring_id!r}")


def parse_ring_id(ring_id: str) -> str:
    """Validate a ring id, returning it unchanged.

    Accepted: q, qi, gf:<prime>, example26.
    """
    if ring_id in ("q", "qi", "example26"):
        return ring_id
    if ring_id.startswith("gf:"):
        PrimeField(int(ring_id.split(":", 1)[1]))  # validates primality
        return ring_id
    raise ValueError(f"unknown ring id {ring_id!r}")


def _pair_stream(config: CampaignConfig):
    """Yield (spec, p, q) trials plus the engine and reducing flag."""
    if config.ring == "example26":
        algebra = example26_algebra()
        engine = ExhaustiveEngine(algebra)
        projections = enumerate_projections(algebra)

        def pairs():
            index = 0
            for p in projections:
                for q in projections:
                    spec = TrialSpec(config.ring, algebra.dim, None, None, config.seed, index)
                    yield spec, p, q
                    index += 1

        return engine, engine.star_reducing, pairs()

    ring = _matrix_ring(config.ring, config.n)
    engine = MatrixInverseEngine(ring)
    size = ring.field.size
    if size is not None and size ** (config.n * config.n) <= EXHAUSTIVE_CELL_CAP:
        projections = all_projections_matrix(config.n, ring.field)

        def pairs():
            index = 0
            for p in projections:
                for q in projections:
                    spec = TrialSpec(config.ring, config.n, None, None, config.seed, index)
                    yield spec, p, q
                    index += 1

        return engine, engine.star_reducing, pairs()

    def pairs():
        for trial in range(config.trials):
            spec, p, q = trial_pair(ring, config.seed, trial)
            yield spec, p, q

    return engine, engine.star_reducing, pairs()


def run_campaign(config: CampaignConfig) -> CampaignReport:
    """Run the configured batteries and aggregate a report.

    Exhaustive instances (example26, small prime-field rings) ignore the
    trial count and sweep every projection pair.
    """
    for theorem in config.theorems:
        if theorem not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {theorem!r}")
    started = time.monotonic()
    engine, star_reducing, pairs = _pair_stream(config)
    records: list[TrialRecord] = []
    tallies = {theorem: [0, 0, 0] for theorem in config.theorems}  # passed, failed, na
    for spec, p, q in pairs:
        ctx = ProjectionPairContext(p, q)
        for theorem in config.theorems:
            verdict = run_battery(theorem, ctx, engine, star_reducing)
            if not verdict.applicable:
                status = STATUS_NOT_APPLICABLE
                tallies[theorem][2] += 1
                records.append(TrialRecord(theorem, spec.trial, status))
            elif verdict.passed:
                status = STATUS_PASSED
                tallies[theorem][0] += 1
                records.append(TrialRecord(theorem, spec.trial, status))
            else:
                tallies[theorem][1] += 1
                records.append(
                    TrialRecord(
                        theorem,
                        spec.trial,
                        STATUS_FAILED,
                        failing_checks=verdict.failing_checks(),
                        spec=spec,
                        p=engine.serialize(p),
                        q=engine.serialize(q),
                    )
                )
    records.sort(key=lambda r: (r.trial, THEOREM_IDS.index(r.theorem)))
    counts = {
        theorem: TheoremCounts(
            checked=sum(tally), passed=tally[0], failed=tally[1], not_applicable=tally[2]
        )
        for theorem, tally in tallies.items()
    }
    return CampaignReport(
        schema=SCHEMA_VERSION,
        tool=f"starinv {__version__}",
        config=config,
        counts=counts,
        records=tuple(records),
        duration_seconds=time.monotonic() - started,
    )

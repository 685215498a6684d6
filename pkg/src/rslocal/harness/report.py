"""Run the verification checks and serialise the report.

Report schema (JSON, keys sorted, 2-space indent, trailing newline)::

    {
      "version": "1",
      "config": {...every VerifyConfig field except out...},
      "checks": [
        {"id": str, "anchor": str, "status": "pass" | "fail",
         "witness": str | object, "runtime": float | null},
        ...                       # sorted by id
      ],
      "summary": {"total": int, "passed": int, "failed": [ids]}
    }

``runtime`` is null unless ``timings`` is set, so that a default report is a
pure function of the config.
"""
from __future__ import annotations

import json
import time
import traceback
from dataclasses import dataclass

from .checks import CHECKS, Fault
from .config import ConfigError, VerifyConfig

REPORT_VERSION = "1"
GROUPS = ("all", "split", "inert", "lemmas", "unipotent", "factors")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    anchor: str
    status: str
    witness: object
    runtime: float | None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status,
                "witness": self.witness, "runtime": self.runtime}


@dataclass(frozen=True)
class VerificationReport:
    config: VerifyConfig
    checks: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.id for c in self.checks if not c.passed]

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def __getitem__(self, check_id: str) -> CheckRecord:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def as_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "config": self.config.echo(),
            "checks": [c.as_dict() for c in self.checks],
            "summary": {"total": len(self.checks), "passed": len(self.checks) - len(self.failed),
                        "failed": self.failed},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_json())


def check_ids(group: str = "all") -> list[str]:
    return sorted(c.id for c in _select(group))


def _select(group: str):
    if group not in GROUPS:
        raise ConfigError(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")
    return [c for c in CHECKS if group == "all" or group in c.groups]


def run_suite(cfg: VerifyConfig, group: str = "all") -> VerificationReport:
    """Run the selected checks in dependency order; a failing or crashing check doesn't stop the rest."""
    selected = _select(group)
    known = {c.id for c in CHECKS}
    if cfg.inject_fault and cfg.inject_fault not in known:
        raise ConfigError(f"inject_fault names unknown check {cfg.inject_fault!r}")
    records = []
    for chk in selected:
        fault = Fault(active=chk.id == cfg.inject_fault)
        start = time.perf_counter()
        try:
            passed, witness = chk.run(cfg, fault)
        except Exception as exc:  # recorded, the suite goes on
            passed = False
            witness = f"{type(exc).__name__}: {exc}"
            traceback.clear_frames(exc.__traceback__)
        elapsed = time.perf_counter() - start
        records.append(CheckRecord(
            chk.id, chk.anchor, "pass" if passed else "fail", witness,
            round(elapsed, 6) if cfg.timings else None,
        ))
    records.sort(key=lambda r: r.id)
    report = VerificationReport(cfg, tuple(records))
    if cfg.out:
        report.write(cfg.out)
    return report

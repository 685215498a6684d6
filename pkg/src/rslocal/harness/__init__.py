"""Verification harness: config, seeded sampling, checks and reports."""
from .config import ConfigError, VerifyConfig, load_config
from .report import GROUPS, CheckRecord, VerificationReport, check_ids, run_suite
from .sampling import sample_angles, sample_satake

__all__ = [
    "CheckRecord",
    "ConfigError",
    "GROUPS",
    "VerificationReport",
    "VerifyConfig",
    "check_ids",
    "load_config",
    "run_suite",
    "sample_angles",
    "sample_satake",
]

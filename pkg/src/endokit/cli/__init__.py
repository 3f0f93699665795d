"""Command-line front end: configuration, verification suites, reports."""

from .config import COMMANDS, ConfigError, RunConfig, load_config_file, \
    load_schema, schema_path
from .main import build_parser, main
from .output import report_document, write_artifacts, write_report
from .suites import CheckRecord, parity_battery, suite_for, verify_all_suite

__all__ = [
    "COMMANDS",
    "ConfigError",
    "RunConfig",
    "load_config_file",
    "load_schema",
    "schema_path",
    "build_parser",
    "main",
    "report_document",
    "write_artifacts",
    "write_report",
    "CheckRecord",
    "parity_battery",
    "suite_for",
    "verify_all_suite",
]

"""Experiment harness: configs, suite runner, oracle audit and report rendering."""

from .config import ConfigError, ExperimentConfig, config_from_mapping, load_config
from .oracle import Discrepancy, oracle_check
from .render import render_report, report_from_json
from .runner import Report, Row, run_suite
from .variants import ROSTER, MethodVariant, parse_variant, select_variants

__all__ = [
    "ConfigError", "ExperimentConfig", "config_from_mapping", "load_config",
    "Discrepancy", "oracle_check", "render_report", "report_from_json",
    "Report", "Row", "run_suite", "ROSTER", "MethodVariant", "parse_variant", "select_variants",
]

"""Structured logging and report schemas for verification runs."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import jsonschema
    JSONSCHEMA_AVAILABLE = True
except ImportError:
    JSONSCHEMA_AVAILABLE = False

from core.config import Config

VERDICTS = ["pass", "fail", "discrepancy-noted"]

# JSON Schema for verification run events
VERIFICATION_EVENT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationRunEvent",
    "type": "object",
    "required": ["event", "timestamp", "claim", "params", "verdict", "graphs_examined", "mismatch_count"],
    "properties": {
        "event": {"const": "VERIFICATION_RUN"},
        "timestamp": {"type": "string", "format": "date-time"},
        "claim": {"type": "string"},
        "params": {
            "type": "object",
            "properties": {
                "n": {"type": ["integer", "null"]},
                "k": {"type": ["integer", "null"]}
            }
        },
        "verdict": {"enum": VERDICTS},
        "graphs_examined": {"type": "integer", "minimum": 0},
        "mismatch_count": {"type": "integer", "minimum": 0}
    }
}

# JSON Schema for a single verification report
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationReport",
    "type": "object",
    "required": ["claim", "params", "graphs_examined", "observed", "witnesses", "mismatches", "verdict", "elapsed_s"],
    "additionalProperties": False,
    "properties": {
        "claim": {"type": "string"},
        "params": {
            "type": "object",
            "required": ["n", "k"],
            "properties": {
                "n": {"type": ["integer", "null"]},
                "k": {"type": ["integer", "null"]}
            }
        },
        "graphs_examined": {"type": "integer", "minimum": 0},
        "observed": {"type": "object"},
        "witnesses": {"type": "array", "items": {"type": "string"}},
        "mismatches": {"type": "array", "items": {"type": "string"}},
        "verdict": {"enum": VERDICTS},
        "elapsed_s": {"type": "number", "minimum": 0}
    },
    "if": {"properties": {"verdict": {"const": "pass"}}},
    "then": {"properties": {"mismatches": {"maxItems": 0}}}
}


def ensure_logs_directory(log_dir: Optional[str] = None) -> Path:
    """Ensure the logs directory exists and return its path.

    Args:
        log_dir: Directory to use instead of the configured one.

    Returns:
        Path to the logs directory.
    """
    logs_dir = Path(log_dir or Config.LOG_DIR)
    logs_dir.mkdir(parents=True, exist_ok=True)
    return logs_dir


def validate_report(report: Dict[str, Any]) -> None:
    """Validate a report dictionary against REPORT_SCHEMA.

    Raises:
        ValueError: If the report does not match the schema.
    """
    if not JSONSCHEMA_AVAILABLE:
        return
    try:
        jsonschema.validate(report, REPORT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ValueError(f"Report validation failed: {e.message}")


def log_verification_event(report: Dict[str, Any], log_dir: Optional[str] = None) -> Dict[str, Any]:
    """Append a verification run event to the structured log file.

    Args:
        report: Report dictionary as produced by VerificationReport.to_dict
        log_dir: Directory to use instead of the configured one

    Returns:
        The logged entry.
    """
    logs_dir = ensure_logs_directory(log_dir)
    log_file = logs_dir / "verification.log"

    log_entry = {
        "event": "VERIFICATION_RUN",
        "timestamp": datetime.now().isoformat() + "Z",
        "claim": report["claim"],
        "params": report["params"],
        "verdict": report["verdict"],
        "graphs_examined": report["graphs_examined"],
        "mismatch_count": len(report["mismatches"])
    }

    if JSONSCHEMA_AVAILABLE:
        try:
            jsonschema.validate(log_entry, VERIFICATION_EVENT_SCHEMA)
        except jsonschema.ValidationError as e:
            raise ValueError(f"Log entry validation failed: {e}")

    # JSON Lines
    with open(log_file, "a", encoding="utf-8") as f:
        f.write(json.dumps(log_entry) + "\n")
    return log_entry


def validate_log_entry(log_entry: Dict[str, Any]) -> bool:
    """Validate a log entry against the verification event schema.

    Args:
        log_entry: Dictionary representing the log entry

    Returns:
        True if valid, False otherwise

    Raises:
        ValueError: If jsonschema is not available
    """
    if not JSONSCHEMA_AVAILABLE:
        raise ValueError("jsonschema library is required for log validation")

    try:
        jsonschema.validate(log_entry, VERIFICATION_EVENT_SCHEMA)
        return True
    except jsonschema.ValidationError:
        return False

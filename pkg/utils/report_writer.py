"""JSON export of verification reports."""

import json
from pathlib import Path
from typing import Any, Dict, List

from core.logging import validate_report


def render_reports(reports: List[Dict[str, Any]]) -> str:
    """Validate and serialize reports as an indented JSON array, field order preserved."""
    for report in reports:
        validate_report(report)
    return json.dumps(reports, indent=2) + "\n"


def write_reports(reports: List[Dict[str, Any]], output_path: Path) -> None:
    """Write reports to a JSON file.

    Args:
        reports: Report dictionaries
        output_path: Path where the JSON file should be written

    Raises:
        ValueError: If a report does not match the report schema
        OSError: If the file cannot be written
    """
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(render_reports(reports), encoding='utf-8')


def load_reports(path: Path) -> List[Dict[str, Any]]:
    """Load a report file written by write_reports (a single report object is accepted too)."""
    data = json.loads(path.read_text(encoding='utf-8'))
    reports = data if isinstance(data, list) else [data]
    for report in reports:
        validate_report(report)
    return reports

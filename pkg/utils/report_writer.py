"""
Single writer for every report the workbench emits.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from .errors import UsageError


def _strip_timing(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_timing(v) for k, v in value.items() if k != "timing"}
    if isinstance(value, list):
        return [_strip_timing(v) for v in value]
    return value


class ReportWriter:
    """
    Serializes a payload under the run header as JSON, CSV or text.

    Args:
        header (Dict): run configuration, modulus and tool version
        output_format (str): ``json``, ``csv`` or ``text``
        output_path (str): file to write instead of stdout
        include_timing (bool): keep ``timing`` entries in the payload
    """

    def __init__(self, header: Dict, output_format: str = "json",
                 output_path: Optional[str] = None, include_timing: bool = False):
        self.header = header
        self.output_format = output_format
        self.output_path = output_path
        self.include_timing = include_timing

    def render(self, payload: Any) -> str:
        """
        Text of the report.

        Args:
            payload: JSON-compatible payload; CSV needs ``{"columns": [...], "rows": [[...]]}``

        Returns:
            str: the rendered report, newline terminated
        """
        if not self.include_timing:
            payload = _strip_timing(payload)
        if self.output_format == "json":
            document = {"header": self.header, "payload": payload}
            return json.dumps(document, sort_keys=True, indent=2, default=str) + "\n"
        if self.output_format == "csv":
            if not isinstance(payload, dict) or "columns" not in payload or "rows" not in payload:
                raise UsageError("csv output is only available for tables")
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(payload["columns"])
            writer.writerows(payload["rows"])
            return buffer.getvalue()
        if self.output_format == "text":
            return "\n".join(self._text_lines(payload)) + "\n"
        raise UsageError(f"unknown output format {self.output_format!r}")

    def _text_lines(self, payload: Any):
        if isinstance(payload, dict) and "rows" in payload:
            for row in payload["rows"]:
                yield json.dumps(row, sort_keys=True, default=str)
        elif isinstance(payload, dict):
            for key in sorted(payload):
                yield f"{key}: {json.dumps(payload[key], sort_keys=True, default=str)}"
        elif isinstance(payload, list):
            for item in payload:
                yield json.dumps(item, sort_keys=True, default=str)
        else:
            yield str(payload)

    def write(self, payload: Any) -> str:
        """Render and emit to ``output_path`` or stdout."""
        text = self.render(payload)
        if self.output_path:
            Path(self.output_path).write_text(text)
            logger.info(f"Report written to {self.output_path}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
        return text

    def write_error(self, record: Dict) -> str:
        """Error records are always JSON so they stay machine-readable."""
        text = json.dumps({"header": self.header, "error": record}, sort_keys=True, indent=2) + "\n"
        if self.output_path:
            Path(self.output_path).write_text(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
        return text

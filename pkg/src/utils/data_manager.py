"""
Data Manager Module
Handles emission of computed tables as CSV or JSON
"""

import io
import json
import os
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

import numpy as np
import pandas as pd

from config import output_config


class ResultWriter:
    """Writes rows of results to stdout or to a file, in input order"""

    def __init__(self, fmt: str = "csv", float_format: Optional[str] = None):
        if fmt not in ("csv", "json"):
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.float_format = float_format or output_config.float_format

    def render(self, rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
        """
        Render rows to text

        Args:
            rows: One mapping per row
            columns: Column order (also the CSV header)

        Returns:
            CSV text, or a JSON array of objects with the same fields
        """
        if self.fmt == "csv":
            frame = pd.DataFrame([{c: row.get(c) for c in columns} for row in rows],
                                 columns=list(columns))
            buffer = io.StringIO()
            frame.to_csv(buffer, index=False, float_format=self.float_format,
                         lineterminator='\n')
            return buffer.getvalue()
        records = [{c: self._make_serializable(row.get(c)) for c in columns} for row in rows]
        return json.dumps(records, indent=2) + "\n"

    def write(self, rows: Sequence[Dict[str, Any]], columns: Sequence[str],
              out: Optional[str] = None, stream: Optional[TextIO] = None) -> Optional[str]:
        """Write to `out` (creating parent directories) or to `stream`/stdout"""
        return self.emit_text(self.render(rows, columns), out=out, stream=stream)

    def emit_text(self, text: str, out: Optional[str] = None,
                  stream: Optional[TextIO] = None) -> Optional[str]:
        """Write already rendered text; returns the path when written to a file"""
        if out:
            directory = os.path.dirname(out)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(out, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            return out
        (stream or sys.stdout).write(text)
        return None

    def _make_serializable(self, obj: Any) -> Any:
        """Convert numpy values, and round floats through the float format"""
        if isinstance(obj, dict):
            return {k: self._make_serializable(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self._make_serializable(item) for item in obj]
        if isinstance(obj, np.ndarray):
            return [self._make_serializable(item) for item in obj.tolist()]
        if isinstance(obj, (bool, np.bool_)):
            return bool(obj)
        if isinstance(obj, (np.integer, int)):
            return int(obj)
        if isinstance(obj, (np.floating, float)):
            value = float(obj)
            if not np.isfinite(value):
                return str(value)
            return float(self.float_format % value)
        return obj


def format_number(value: float, float_format: Optional[str] = None) -> str:
    """Single number in the output float format"""
    return (float_format or output_config.float_format) % value

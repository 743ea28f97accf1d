import csv
import io
import json
from typing import Any, Dict, List, Optional, TextIO

from pydantic import BaseModel

from config.settings import settings


def flatten(record: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    """Nested dicts become dotted columns; lists become compact JSON cells"""
    flat: Dict[str, Any] = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value, separators=(",", ":"))
        else:
            flat[name] = value
    return flat


class RecordWriter:
    """Single buffered writer for every record the CLI emits"""

    def __init__(self, stream: TextIO, fmt: str = "jsonl", buffer_size: Optional[int] = None):
        if fmt not in ("jsonl", "csv"):
            raise ValueError(f"unknown output format {fmt!r}")
        self.stream = stream
        self.fmt = fmt
        self.buffer_size = buffer_size or settings.OUTPUT_BUFFER
        self._buffer = io.StringIO()
        self._columns: Optional[List[str]] = None
        self._csv: Optional[csv.DictWriter] = None

    def __enter__(self) -> "RecordWriter":
        return self

    def __exit__(self, *exc) -> None:
        self.flush()

    def write(self, record: BaseModel) -> None:
        if self.fmt == "jsonl":
            self._buffer.write(record.model_dump_json(exclude_none=True))
            self._buffer.write("\n")
        else:
            row = flatten(record.model_dump(mode="json", exclude_none=True))
            if self._csv is None:
                self._columns = list(row)
                self._csv = csv.DictWriter(self._buffer, fieldnames=self._columns, lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(row)

        if self._buffer.tell() >= self.buffer_size:
            self.flush()

    def flush(self) -> None:
        text = self._buffer.getvalue()
        if text:
            self.stream.write(text)
            self.stream.flush()
        self._buffer.seek(0)
        self._buffer.truncate()

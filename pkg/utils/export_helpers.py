import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

import pandas as pd

from utils.errors import ExportError
from utils.reports import to_jsonable

VERSION = "1.0.0"


def generate_json(meta: Dict[str, Any], data: Any) -> str:
    """Render one top-level object {"meta": ..., "data": ...}.

    Keys keep insertion order and floats use Python's shortest round-trip
    repr, so identical inputs give identical bytes.
    """
    payload = {"meta": {**to_jsonable(meta), "version": VERSION}, "data": to_jsonable(data)}
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def generate_csv(frame: pd.DataFrame) -> str:
    """Render a frame as comma-separated text with a header row and LF endings."""
    if frame.empty and len(frame.columns) == 0:
        raise ValueError("No records to export.")
    return frame.to_csv(index=False, lineterminator="\n")


def write_output(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write to ``path``, or to standard output when no path is given."""
    if path is None or str(path) == "-":
        print(text, end="")
        return
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as e:
        raise ExportError(f"Cannot write {path}: {e}") from e

"""Sampled point sets as pandas frames, rendered to CSV or JSON."""
import math
from typing import Any, Dict, Optional

import pandas as pd

from algebra.dyadic import Dyadic, vec_to_float
from curve.evaluation import eval_dyadic
from spherical.density import direction_samples
from spherical.projection import (
    central_projection,
    closed_curve_samples,
    projective_sequence,
)
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.export_helpers import generate_csv, generate_json, write_output
from utils.logger import logger

# Constants
KINDS = ("curve", "sphere", "central", "projective", "directions")
FORMATS = ("csv", "json")
COORDS = ["x0", "x1", "x2", "x3"]


def _linear_grid(t_min: float, t_max: float, count: int):
    """``count`` dyadic parameters from t_min to t_max inclusive.

    Interior points are rounded down onto the grid, then clamped into the range.
    """
    if count < 1:
        raise InvalidInputError("count must be positive")
    if t_max < t_min:
        raise InvalidInputError("t_max must not be below t_min")
    low, high = Dyadic.from_float(t_min), Dyadic.from_float(t_max)
    if count == 1:
        return [low]
    bits = get_settings().dyadic_bits
    step = (high.to_fraction() - low.to_fraction()) / (count - 1)
    grid = [low]
    for i in range(1, count - 1):
        value = low.to_fraction() + i * step
        grid.append(max(low, min(high, Dyadic(math.floor(value * (1 << bits)), bits))))
    grid.append(high)
    return grid


def _frame(rows, index_name: str) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=[index_name] + COORDS)


def build_samples(kind: str, count: int = 4096, t_min: float = 0.0, t_max: float = 16.0,
                  anchor: float = 1.0, steps: int = 256, n_max: int = 64,
                  max_samples: Optional[int] = None) -> pd.DataFrame:
    if kind == "curve":
        rows = [[float(t)] + list(vec_to_float(eval_dyadic(t))) for t in _linear_grid(t_min, t_max, count)]
        return _frame(rows, "t")
    if kind == "sphere":
        a = Dyadic.from_float(anchor)
        rows = [[float(t)] + list(p) for t, p in closed_curve_samples(a, count)]
        return _frame(rows, "t")
    if kind == "central":
        if t_min <= 0:
            raise InvalidInputError("central projection needs t_min > 0")
        rows = [[float(t)] + list(central_projection(t)) for t in _linear_grid(t_min, t_max, count)]
        return _frame(rows, "t")
    if kind == "projective":
        points = projective_sequence(steps=steps)
        return _frame([[n] + list(p) for n, p in enumerate(points)], "n")
    if kind == "directions":
        pairs, directions = direction_samples(n_max, max_samples)
        frame = pd.DataFrame(directions, columns=COORDS)
        frame.insert(0, "n", pairs[:, 1])
        frame.insert(0, "m", pairs[:, 0])
        return frame
    raise InvalidInputError(f"Unknown export kind {kind!r}; choose from {', '.join(KINDS)}")


def render(frame: pd.DataFrame, fmt: str, meta: Dict[str, Any]) -> str:
    if fmt == "csv":
        return generate_csv(frame)
    if fmt == "json":
        return generate_json(meta, {"columns": list(frame.columns), "records": frame.to_dict(orient="records")})
    raise InvalidInputError(f"Unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def export_samples(kind: str, fmt: str = "csv", path: Optional[str] = None, **params) -> pd.DataFrame:
    """Build the samples for ``kind`` and write them to ``path`` (standard output if None)."""
    frame = build_samples(kind, **params)
    meta = {"command": "export", "parameters": {"kind": kind, "format": fmt, **params}}
    write_output(render(frame, fmt, meta), path)
    logger.info("Samples exported", extra={"kind": kind, "format": fmt, "records": len(frame),
                                             "path": path or "-"})
    return frame

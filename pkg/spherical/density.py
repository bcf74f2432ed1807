"""Exploratory coverage of S^3 by the chord directions (S(n) - S(m)) / ||S(n) - S(m)||.

Cells come from the gnomonic projection of S^3 onto the faces of the cube
[-1, 1]^4: 8 faces, each split into k^3 cells. The report gives the share of
occupied cells and the largest angular gap between an empty cell centre and
the nearest occupied one. It is evidence only.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from curve.partial_sums import partial_sum_table
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.logger import logger

# Constants
DEFAULT_RESOLUTION = 8
CHUNK = 1 << 16
GAP_BLOCK = 1024


def direction_samples(n_max: int, max_samples: Optional[int] = None,
                      seed: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """All pairs 0 <= m < n <= n_max (or a seeded subsample) and their unit chord directions."""
    if n_max < 1:
        raise InvalidInputError("n_max must be positive")
    table = partial_sum_table(n_max)
    m, n = np.triu_indices(n_max + 1, k=1)
    if max_samples is not None and len(m) > max_samples:
        rng = np.random.default_rng(get_settings().seed if seed is None else seed)
        keep = np.sort(rng.choice(len(m), size=max_samples, replace=False))
        m, n = m[keep], n[keep]
    diffs = (table[n] - table[m]).astype(float)
    norms = np.linalg.norm(diffs, axis=1)
    nonzero = norms > 0
    pairs = np.stack([m[nonzero], n[nonzero]], axis=1)
    return pairs, diffs[nonzero] / norms[nonzero, None]


def cell_index(directions: np.ndarray, resolution: int) -> np.ndarray:
    """Flat cell id in [0, 8 k^3) of each unit vector."""
    axis = np.argmax(np.abs(directions), axis=1)
    rows = np.arange(len(directions))
    major = directions[rows, axis]
    face = 2 * axis + (major < 0)
    others = np.array([[j for j in range(4) if j != i] for i in range(4)])[axis]
    coords = directions[rows[:, None], others] / np.abs(major)[:, None]
    bins = np.clip(((coords + 1.0) / 2.0 * resolution).astype(np.int64), 0, resolution - 1)
    return ((face * resolution + bins[:, 0]) * resolution + bins[:, 1]) * resolution + bins[:, 2]


def cell_centers(resolution: int) -> np.ndarray:
    """Unit vectors through the centre of every cell, in cell-id order."""
    ids = np.arange(8 * resolution ** 3)
    b2 = ids % resolution
    b1 = (ids // resolution) % resolution
    b0 = (ids // resolution ** 2) % resolution
    face = ids // resolution ** 3
    axis, negative = face // 2, face % 2
    vectors = np.zeros((len(ids), 4))
    vectors[ids, axis] = np.where(negative, -1.0, 1.0)
    others = np.array([[j for j in range(4) if j != i] for i in range(4)])[axis]
    for slot, b in enumerate((b0, b1, b2)):
        vectors[ids, others[:, slot]] = (b + 0.5) / resolution * 2.0 - 1.0
    return vectors / np.linalg.norm(vectors, axis=1)[:, None]


@dataclass
class DensityReport:
    n_max: int
    resolution: int
    samples: int
    cells: int
    occupied: int
    largest_empty_gap: float

    @property
    def fraction(self) -> float:
        return self.occupied / self.cells

    def to_dict(self):
        return {
            "n_max": self.n_max,
            "resolution": self.resolution,
            "samples": self.samples,
            "cells": self.cells,
            "occupied": self.occupied,
            "fraction": self.fraction,
            "largest_empty_gap": self.largest_empty_gap,
        }


def largest_empty_gap(centers: np.ndarray, empty: np.ndarray, occupied: np.ndarray,
                      block: int = GAP_BLOCK) -> float:
    """Largest angle from an empty cell center to its nearest occupied center.

    Works on block x block tiles of the cosine matrix.
    """
    if not (empty.size and occupied.size):
        return 0.0
    best = np.full(empty.size, -1.0)
    for i in range(0, empty.size, block):
        rows = centers[empty[i:i + block]]
        for j in range(0, occupied.size, block):
            cols = centers[occupied[j:j + block]]
            best[i:i + block] = np.maximum(best[i:i + block], (rows @ cols.T).max(axis=1))
    return float(np.arccos(np.clip(best, -1.0, 1.0)).max())


def direction_density(n_max: int, resolution: int = DEFAULT_RESOLUTION,
                      max_samples: Optional[int] = None, threads: Optional[int] = None) -> DensityReport:
    if resolution < 1:
        raise InvalidInputError("resolution must be positive")
    start = time.perf_counter()
    _, directions = direction_samples(n_max, max_samples)
    chunks = [directions[i:i + CHUNK] for i in range(0, len(directions), CHUNK)]
    workers = max(1, threads if threads is not None else get_settings().threads)
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: np.unique(cell_index(c, resolution)), chunks))
    else:
        parts = [np.unique(cell_index(c, resolution)) for c in chunks]
    occupied = np.unique(np.concatenate(parts)) if parts else np.array([], dtype=np.int64)

    centers = cell_centers(resolution)
    empty = np.setdiff1d(np.arange(len(centers)), occupied)
    gap = largest_empty_gap(centers, empty, occupied)
    report = DensityReport(n_max, resolution, len(directions), len(centers), int(occupied.size), gap)
    logger.info("Direction density estimated",
                extra={**report.to_dict(), "elapsed_s": round(time.perf_counter() - start, 4)})
    return report

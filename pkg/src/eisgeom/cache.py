"""On-disk cache of enumerated root classes, one file per (center, batch)."""

from __future__ import annotations

import hashlib
import logging
import os
from pathlib import Path
from typing import Optional

import numpy as np

from . import model
from .geometry import CRITICAL_SINH2, NCOORD, RootList, enumerate_batches
from .lattice import CacheError, eis_coords, read_vector_file, write_vector_file

log = logging.getLogger(__name__)

ENV_VAR = "EISGEOM_CACHE_DIR"
CENTERS = ("c", "pinf")


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "eisgeom"


def center_id(name: str) -> str:
    """Cache key of a named center: its label plus a digest of its coordinates."""
    v = model.special_points()[name]
    digest = hashlib.sha256(" ".join(map(str, eis_coords(v))).encode()).hexdigest()[:12]
    return f"{name}-{digest}"


def _path(cache_dir: Path, name: str, batch: int) -> Path:
    return Path(cache_dir) / f"{center_id(name)}.batch{batch}.vec"


def load(cache_dir: Path, name: str, batch: int) -> Optional[RootList]:
    p = _path(cache_dir, name, batch)
    if not p.exists():
        return None
    try:
        _, vecs = read_vector_file(str(p), center_id(name), "3")
    except (CacheError, ValueError) as exc:
        log.warning("discarding cache file %s: %s", p, exc)
        return None
    arr = np.array(vecs, dtype=np.int64).reshape(-1, NCOORD)
    return RootList(name, batch, CRITICAL_SINH2[batch], arr)


def store(cache_dir: Path, rl: RootList, name: str) -> str:
    return write_vector_file(str(_path(cache_dir, name, rl.batch)), center_id(name), "3", rl.roots.tolist())


def batches(name: str, max_batch: int = 3, cache_dir: Optional[Path] = None, workers: int = 1,
            use_cache: bool = True) -> tuple[dict[int, RootList], bool]:
    """Batch 0..max_batch root classes around a named center; returns (lists, came_from_cache)."""
    cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
    if use_cache:
        got = {n: load(cache_dir, name, n) for n in range(max_batch + 1)}
        if all(v is not None for v in got.values()):
            return got, True
    res = enumerate_batches(model.special_points()[name], max_batch, name, workers=workers)
    if use_cache:
        for rl in res.values():
            store(cache_dir, rl, name)
    return res, False


def status(cache_dir: Optional[Path] = None) -> list[dict]:
    cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
    out = []
    for name in CENTERS:
        for n in range(len(CRITICAL_SINH2) - 1):
            p = _path(cache_dir, name, n)
            entry = {"center": name, "batch": n, "path": str(p), "present": p.exists()}
            if p.exists():
                try:
                    meta, _ = read_vector_file(str(p), center_id(name), "3")
                    entry.update(valid=True, count=int(meta["count"]))
                except CacheError as exc:
                    entry.update(valid=False, error=str(exc))
            out.append(entry)
    return out


def clear(cache_dir: Optional[Path] = None) -> int:
    cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
    removed = 0
    if cache_dir.is_dir():
        for p in cache_dir.glob("*.vec"):
            p.unlink()
            removed += 1
    return removed

"""On-disk cache of the enumerated pentagrams.

``pentagrams.json`` holds one record per line, ``{"contexts": [[4 ids] x5],
"neg": n}``; ``pentagrams.meta.json`` holds the counts and the SHA-256 of the
record file.  A missing or mismatching pair is rebuilt.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
from collections import Counter
from pathlib import Path
from typing import Sequence

from .enumerator import Pentagram, enumerate_pentagrams, pentagrams_from_keys

log = logging.getLogger(__name__)

DATA_FILE = "pentagrams.json"
META_FILE = "pentagrams.meta.json"
ENV_VAR = "PENTAGRAM_ATLAS_CACHE"


def resolve_cache_dir(cache_dir: str | os.PathLike | None = None) -> Path:
    """Explicit argument, then the environment variable, then ``./cache``."""
    if cache_dir is not None:
        return Path(cache_dir)
    return Path(os.environ.get(ENV_VAR, "cache"))


def dumps_pentagrams(pentagrams: Sequence[Pentagram]) -> bytes:
    lines = [json.dumps(p.to_json(), separators=(",", ":")) for p in pentagrams]
    return ("[\n" + ",\n".join(lines) + "\n]\n").encode()


def _meta(pentagrams: Sequence[Pentagram], digest: str) -> dict:
    families = Counter(p.negative_context_count for p in pentagrams)
    return {
        "count": len(pentagrams),
        "families": {str(k): families[k] for k in sorted(families, reverse=True)},
        "sha256": digest,
    }


def write_cache(cache_dir: str | os.PathLike, pentagrams: Sequence[Pentagram]) -> None:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    data = dumps_pentagrams(pentagrams)
    digest = hashlib.sha256(data).hexdigest()
    (cache_dir / DATA_FILE).write_bytes(data)
    (cache_dir / META_FILE).write_text(json.dumps(_meta(pentagrams, digest), indent=2) + "\n")


def read_cache(cache_dir: str | os.PathLike) -> list[Pentagram] | None:
    """The cached pentagrams, or None if the cache is absent or corrupt."""
    cache_dir = Path(cache_dir)
    try:
        data = (cache_dir / DATA_FILE).read_bytes()
        meta = json.loads((cache_dir / META_FILE).read_text())
    except (OSError, ValueError):
        return None
    if hashlib.sha256(data).hexdigest() != meta.get("sha256"):
        log.warning("cache hash mismatch in %s", cache_dir)
        return None
    records = json.loads(data)
    pentagrams = pentagrams_from_keys(r["contexts"] for r in records)
    if [p.negative_context_count for p in pentagrams] != [r["neg"] for r in records]:
        return None
    return pentagrams


def load_or_build(cache_dir: str | os.PathLike | None = None, threads: int | None = None) -> tuple[list[Pentagram], bool]:
    """Return ``(pentagrams, rebuilt)``; enumerates and writes on a miss."""
    cache_dir = resolve_cache_dir(cache_dir)
    pentagrams = read_cache(cache_dir)
    if pentagrams is not None:
        return pentagrams, False
    log.info("enumerating pentagrams into %s", cache_dir)
    pentagrams = enumerate_pentagrams(threads=threads)
    write_cache(cache_dir, pentagrams)
    return pentagrams, True

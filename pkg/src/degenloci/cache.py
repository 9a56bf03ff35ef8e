"""Disk cache for command results.

Every calculator here is deterministic, so a result can be replayed from
disk whenever the command name, its parameters and the output format
version all agree.  Keys are content hashes of that triple; a bumped
:data:`degenloci.FORMAT_VERSION` therefore orphans old entries instead of
misreading them.  A corrupt or unreadable entry is treated as a miss.

The cache is opt-in: pass a directory on the command line or set the
``DEGENLOCI_CACHE_DIR`` environment variable.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

ENV_CACHE_DIR = "DEGENLOCI_CACHE_DIR"


def cache_key(command: str, parameters: dict, format_version: int) -> str:
    """Content hash identifying one deterministic computation."""
    canonical = json.dumps(
        {"command": command, "parameters": parameters,
         "format_version": format_version},
        sort_keys=True, separators=(",", ":"), ensure_ascii=True,
    )
    return hashlib.sha256(canonical.encode("ascii")).hexdigest()


class ResultCache:
    """Maps computation keys to JSON payloads under one directory.

    With ``directory=None`` every lookup misses and stores are dropped,
    so callers never need to branch on whether caching is active.
    """

    def __init__(self, directory: Optional[os.PathLike | str]):
        self.directory = Path(directory) if directory is not None else None
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_environment(cls, override: Optional[str] = None) -> "ResultCache":
        """Build a cache from an explicit directory, falling back to the
        environment variable, falling back to disabled."""
        directory = override if override is not None else os.environ.get(ENV_CACHE_DIR)
        return cls(directory)

    def _path(self, key: str) -> Optional[Path]:
        if self.directory is None:
            return None
        return self.directory / f"{key}.json"

    def load(self, key: str) -> Optional[dict]:
        path = self._path(key)
        if path is None:
            return None
        try:
            with open(path, encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, ValueError):
            self.misses += 1
            return None
        if not isinstance(payload, dict):
            self.misses += 1
            return None
        self.hits += 1
        return payload

    def store(self, key: str, payload: dict) -> None:
        path = self._path(key)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        # write-then-rename so a second process never sees a torn file
        fd, temp_name = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, sort_keys=True)
            os.replace(temp_name, path)
        except OSError:
            try:
                os.unlink(temp_name)
            except OSError:
                pass

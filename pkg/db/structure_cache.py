"""
Append-only persistent cache for structure constants and LR coefficients.

File layout: a header line "QTREP1 <version>" followed by one record per line,

    <kind> TAB <key> TAB <one> TAB <eps> TAB <checksum>

where checksum is the BLAKE2b digest of the first four fields. A record that
fails to parse or verify causes the whole file to be rebuilt; it is never read
partially.
"""

import fcntl
import hashlib
import logging
import os
import threading
from pathlib import Path
from typing import Dict, Optional, Tuple

from algebra.errors import CacheFormatError
from algebra.parity_ring import GradedInt

logger = logging.getLogger(__name__)

MAGIC = "QTREP1"
FORMAT_VERSION = 1


def _checksum(kind: str, key: str, one: int, eps: int) -> str:
    payload = f"{kind}\t{key}\t{one}\t{eps}".encode()
    return hashlib.blake2b(payload, digest_size=16).hexdigest()


class StructureCache:
    def __init__(self, path: str):
        self.path = Path(path)
        self._records: Dict[Tuple[str, str], GradedInt] = {}
        self._lock = threading.Lock()
        self._load()

    def _header(self) -> str:
        return f"{MAGIC} {FORMAT_VERSION}\n"

    def _rebuild(self):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "w") as f:
            f.write(self._header())
        self._records = {}

    def _load(self):
        if not self.path.exists():
            self._rebuild()
            return
        try:
            with open(self.path) as f:
                lines = f.read().splitlines()
        except OSError as e:
            raise CacheFormatError(f"Failed to read cache '{self.path}': {e}")

        if not lines:
            logger.warning(f"Cache {self.path} is empty; rebuilding")
            self._rebuild()
            return
        header = lines[0].split()
        if len(header) != 2 or header[0] != MAGIC:
            logger.warning(f"Cache {self.path} has no {MAGIC} header; rebuilding")
            self._rebuild()
            return
        if header[1] != str(FORMAT_VERSION):
            raise CacheFormatError(f"Cache '{self.path}' has unsupported format version {header[1]}")

        records = {}
        for number, line in enumerate(lines[1:], start=2):
            fields = line.split("\t")
            try:
                kind, key, one, eps, digest = fields
                one, eps = int(one), int(eps)
            except ValueError:
                logger.warning(f"Cache {self.path}: unparsable record on line {number}; rebuilding")
                self._rebuild()
                return
            if digest != _checksum(kind, key, one, eps):
                logger.warning(f"Cache {self.path}: checksum mismatch on line {number}; rebuilding")
                self._rebuild()
                return
            records[(kind, key)] = GradedInt(one, eps)
        self._records = records
        logger.info(f"Loaded {len(records)} cached records from {self.path}")

    def get(self, kind: str, key: str) -> Optional[GradedInt]:
        return self._records.get((kind, key))

    def put(self, kind: str, key: str, value: GradedInt):
        if "\t" in key or "\n" in key:
            raise ValueError(f"cache keys cannot contain tabs or newlines: {key!r}")
        with self._lock:
            if (kind, key) in self._records:
                return
            self._records[(kind, key)] = value
            line = f"{kind}\t{key}\t{value.a}\t{value.b}\t{_checksum(kind, key, value.a, value.b)}\n"
            with open(self.path, "a") as f:
                fcntl.flock(f.fileno(), fcntl.LOCK_EX)
                try:
                    f.write(line)
                    f.flush()
                    os.fsync(f.fileno())
                finally:
                    fcntl.flock(f.fileno(), fcntl.LOCK_UN)

    def __len__(self) -> int:
        return len(self._records)


# Global cache instance for reuse
_cache_instance: Optional[StructureCache] = None
_cache_resolved = False


def get_structure_cache(path: Optional[str] = None) -> Optional[StructureCache]:
    """
    Process-wide structure cache.

    An explicit path (re)opens the cache there; otherwise QTREP_CACHE is consulted
    once. Returns None when no cache location is configured.
    """
    global _cache_instance, _cache_resolved

    if path is not None:
        if _cache_instance is None or _cache_instance.path != Path(path):
            _cache_instance = StructureCache(path)
        _cache_resolved = True
        return _cache_instance

    if not _cache_resolved:
        env_path = os.getenv("QTREP_CACHE")
        if env_path:
            _cache_instance = StructureCache(env_path)
        _cache_resolved = True
    return _cache_instance


def reset_structure_cache():
    global _cache_instance, _cache_resolved
    _cache_instance = None
    _cache_resolved = False

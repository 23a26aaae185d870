# append-only bracket cache keyed by (canonical PD, tool version)
import json
import logging
from pathlib import Path
from typing import Dict, Optional

from aajones import __version__
from aajones.errors import CacheError, ParseError
from aajones.laurent import LaurentPoly, Unit, format_poly, parse_poly

logger = logging.getLogger(__name__)

CACHE_FILE = "bracket-cache.jsonl"


class BracketCache:
    """
    Brackets already computed, one JSON object per line of ``bracket-cache.jsonl``.

    Lines written by another version are ignored and malformed lines are
    skipped with a warning.  The file is only ever appended to.
    """

    def __init__(self, directory, version: str = __version__):
        self.directory = Path(directory)
        self.version = version
        self.path = self.directory / CACHE_FILE
        self._entries: Optional[Dict[str, str]] = None
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise CacheError(f"Cannot use cache directory {self.directory}: {e}")
        if not self.directory.is_dir():
            raise CacheError(f"Cache path is not a directory: {self.directory}")

    def _load(self) -> Dict[str, str]:
        if self._entries is not None:
            return self._entries
        entries: Dict[str, str] = {}
        if self.path.exists():
            try:
                with open(self.path, encoding="utf-8") as f:
                    for lineno, line in enumerate(f, 1):
                        if not line.strip():
                            continue
                        try:
                            record = json.loads(line)
                            pd, version, text = record["pd"], record["version"], record["bracket"]
                        except (json.JSONDecodeError, KeyError, TypeError) as e:
                            logger.warning(f"Skipping malformed cache line {lineno} in {self.path}: {e}")
                            continue
                        if version == self.version:
                            entries[pd] = text
            except OSError as e:
                raise CacheError(f"Cannot read cache file {self.path}: {e}")
        logger.debug("loaded %d cached brackets from %s", len(entries), self.path)
        self._entries = entries
        return entries

    def get(self, pd: str) -> Optional[LaurentPoly]:
        text = self._load().get(pd)
        if text is None:
            return None
        try:
            return parse_poly(text, Unit.QUARTER_A)
        except ParseError as e:
            logger.warning(f"Ignoring unreadable cached bracket for {pd}: {e}")
            return None

    def put(self, pd: str, bracket: LaurentPoly) -> None:
        entries = self._load()
        text = format_poly(bracket)
        if entries.get(pd) == text:
            return
        line = json.dumps({"pd": pd, "version": self.version, "bracket": text})
        try:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(line + "\n")
        except OSError as e:
            raise CacheError(f"Cannot write cache file {self.path}: {e}")
        entries[pd] = text

    def __len__(self) -> int:
        return len(self._load())


def open_cache(directory) -> Optional[BracketCache]:
    return BracketCache(directory) if directory else None

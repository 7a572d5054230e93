"""
Diagram corpus loading.
Reads entry files from the corpus directory, parses their metadata and
turns entries into link diagrams.
"""

import logging
import os
from collections import defaultdict
from pathlib import Path

from config import settings
from diagram.braid import parse_braid
from diagram.models import DiagramError, LinkDiagram
from diagram.pd import parse_pd
from loaders.metadata import CorpusEntry, CorpusError, MetadataExtractor

logger = logging.getLogger(__name__)


class CorpusLoader:
    """Loader for the diagram corpus."""

    def __init__(self, data_folder: str | None = None):
        """Initialize corpus loader.

        Args:
            data_folder: Folder of .txt entries. Defaults to settings value.
        """
        self.data_folder = data_folder or settings.CORPUS_DIR
        self.extractor = MetadataExtractor()
        self._entries: list[CorpusEntry] | None = None

    def _load_txt_file(self, file_path: str) -> str:
        with open(file_path, encoding="utf-8") as f:
            return f.read()

    def _is_empty_file(self, file_path: str) -> bool:
        try:
            return os.path.getsize(file_path) == 0
        except OSError:
            return True

    def _find_txt_files(self) -> list[str]:
        data_path = Path(self.data_folder)
        if not data_path.is_dir():
            logger.warning(f"Corpus folder does not exist: {self.data_folder}")
            return []
        return sorted(str(p) for p in data_path.glob("*.txt"))

    def load_all_entries(self) -> list[CorpusEntry]:
        """Parse every corpus file, sorted by entry name.

        Raises:
            CorpusError: If a file is malformed or two entries share a name.
        """
        if self._entries is not None:
            return self._entries

        entries: dict[str, CorpusEntry] = {}
        for file_path in self._find_txt_files():
            if self._is_empty_file(file_path):
                logger.debug(f"Skipping empty file: {file_path}")
                continue
            try:
                text = self._load_txt_file(file_path)
                entry = self.extractor.extract_entry(text, file_path=file_path)
            except UnicodeDecodeError as e:
                raise CorpusError(f"Failed to decode {file_path} as UTF-8") from e
            except CorpusError as e:
                raise CorpusError(f"{file_path}: {e}") from e
            if entry.name in entries:
                raise CorpusError(f"Duplicate corpus entry name '{entry.name}'")
            entries[entry.name] = entry

        self._entries = [entries[name] for name in sorted(entries)]
        logger.info(f"Loaded {len(self._entries)} corpus entr(y/ies) from {self.data_folder}")
        return self._entries

    def get(self, name: str) -> CorpusEntry:
        for entry in self.load_all_entries():
            if entry.name == name:
                return entry
        raise CorpusError(f"No corpus entry named '{name}'")

    def by_link(self) -> dict[str, list[CorpusEntry]]:
        """Entries grouped by the link they represent."""
        groups: dict[str, list[CorpusEntry]] = defaultdict(list)
        for entry in self.load_all_entries():
            groups[entry.link].append(entry)
        return dict(groups)

    def entries(self, include_slow: bool = True) -> list[CorpusEntry]:
        return [e for e in self.load_all_entries() if include_slow or e.tier != "slow"]


def entry_diagram(entry: CorpusEntry) -> LinkDiagram:
    """Parse a corpus entry into a diagram.

    Raises:
        CorpusError: If the stored code does not parse.
    """
    try:
        if entry.kind == "braid":
            return parse_braid(entry.code, basepoint=entry.basepoint)
        return parse_pd(entry.code, unknot=entry.unknot, basepoint=entry.basepoint)
    except DiagramError as e:
        raise CorpusError(f"Corpus entry '{entry.name}' does not parse: {e}") from e

"""
Corpus entry metadata.
Entries are small text files of 'key: value' lines; the header names the
entry, the link it represents and how the diagram is encoded.
"""

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

KINDS = ("pd", "braid")


class CorpusError(Exception):
    """Raised for unreadable or inconsistent corpus entries."""

    pass


@dataclass
class CorpusEntry:
    """One diagram of the corpus.

    Attributes:
        name: Unique entry name.
        link: Link type; entries sharing it are diagrams of the same link.
        kind: "pd" or "braid".
        code: PD text or braid word.
        unknot: Empty PD code stands for the crossingless unknot.
        basepoint: Optional edge label for the reduced theory.
        tier: "fast" or "slow" (large cubes).
        notes: Free text.
        jones: Tabulated unnormalized Jones polynomial of the link, in
            the text form of `format_laurent` (e.g. "q + q^3 + q^5 - q^9").
    """

    name: str
    link: str
    kind: str
    code: str
    unknot: bool = False
    basepoint: int | None = None
    tier: str = "fast"
    notes: str = ""
    jones: str = ""
    source: str = ""
    content_hash: str = field(default="", compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "link": self.link,
            "kind": self.kind,
            "code": self.code,
            "unknot": self.unknot,
            "basepoint": self.basepoint,
            "tier": self.tier,
            "notes": self.notes,
            "jones": self.jones,
            "source": self.source,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CorpusEntry":
        return cls(**data)


class MetadataExtractor:
    """Parses the 'key: value' header of a corpus file."""

    LINE_PATTERN = re.compile(r"^\s*([A-Za-z_]+)\s*:(.*)$")
    REQUIRED = ("name", "link", "kind", "code")

    @staticmethod
    def _parse_fields(text: str) -> dict[str, str]:
        fields: dict[str, str] = {}
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            match = MetadataExtractor.LINE_PATTERN.match(line)
            if match is None:
                raise CorpusError(f"Line {number} is not 'key: value': {line!r}")
            key = match.group(1).lower()
            if key in fields:
                raise CorpusError(f"Duplicate key '{key}' on line {number}")
            fields[key] = match.group(2).strip()
        return fields

    @staticmethod
    def _parse_bool(value: str) -> bool:
        return value.lower() in ("1", "true", "yes")

    @staticmethod
    def extract_entry(text: str, file_path: str | None = None) -> CorpusEntry:
        """Build a CorpusEntry from file contents.

        Raises:
            CorpusError: On missing keys, unknown kinds or bad basepoints.
        """
        fields = MetadataExtractor._parse_fields(text)
        missing = [key for key in MetadataExtractor.REQUIRED if key not in fields]
        if missing:
            raise CorpusError(f"Missing keys: {', '.join(missing)}")
        if fields["kind"] not in KINDS:
            raise CorpusError(f"Unknown kind '{fields['kind']}' (expected pd or braid)")

        basepoint = None
        if fields.get("basepoint"):
            try:
                basepoint = int(fields["basepoint"])
            except ValueError as e:
                raise CorpusError(f"Basepoint must be an integer: {fields['basepoint']}") from e

        return CorpusEntry(
            name=fields["name"] or Path(file_path or "").stem,
            link=fields["link"],
            kind=fields["kind"],
            code=fields["code"],
            unknot=MetadataExtractor._parse_bool(fields.get("unknot", "")),
            basepoint=basepoint,
            tier=fields.get("tier", "fast") or "fast",
            notes=fields.get("notes", ""),
            jones=fields.get("jones", ""),
            source=file_path or "",
            content_hash=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        )

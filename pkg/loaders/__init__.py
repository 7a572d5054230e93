"""
Diagram corpus package.

Provides the shipped diagram corpus and its metadata:
- Corpus file discovery and parsing (CorpusLoader, entry_diagram)
- Entry metadata and header parsing (CorpusEntry, MetadataExtractor, CorpusError)
"""

from .loader import CorpusLoader, entry_diagram
from .metadata import CorpusEntry, CorpusError, MetadataExtractor

__all__ = [
    "CorpusEntry",
    "CorpusError",
    "CorpusLoader",
    "MetadataExtractor",
    "entry_diagram",
]

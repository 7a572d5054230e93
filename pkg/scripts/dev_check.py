#!/usr/bin/env python3
"""
Development environment diagnostic tool.
Reports Python configuration, optional packages, the diagram corpus
inventory and key settings for troubleshooting and setup verification.
"""
import importlib.util
import os
import sys
from pathlib import Path

from config import IS_DEV, settings


def print_environment():
    """Print environment information."""
    print("=" * 60)
    print("Environment Information")
    print("=" * 60)
    print(f"Python version: {sys.version}")
    print(f"Python executable: {sys.executable}")
    print(f"Platform: {sys.platform}")
    print(f"Working directory: {os.getcwd()}")
    print(f"Project root: {Path(__file__).parent.parent}")
    print(f"Development mode: {IS_DEV}")
    print()


def print_packages():
    """Print availability of the numeric and tracing packages."""
    print("=" * 60)
    print("Packages")
    print("=" * 60)
    for name in ("numpy", "sympy", "pydantic", "pydantic_settings", "opentelemetry"):
        found = importlib.util.find_spec(name) is not None
        print(f"{'✓' if found else '❌'} {name}")
    print()


def print_corpus_status():
    """Print diagram corpus inventory."""
    print("=" * 60)
    print("Corpus Status")
    print("=" * 60)

    corpus_dir = Path(settings.CORPUS_DIR)
    if not corpus_dir.is_dir():
        print(f"❌ Corpus folder does not exist: {corpus_dir}")
        print()
        return

    from loaders.loader import CorpusLoader
    from loaders.metadata import CorpusError

    try:
        entries = CorpusLoader(str(corpus_dir)).load_all_entries()
    except CorpusError as e:
        print(f"❌ Corpus does not load: {e}")
        print()
        return

    print(f"✓ Corpus folder: {corpus_dir}")
    print(f"  Entries: {len(entries)}")
    print(f"  Links: {len({entry.link for entry in entries})}")
    slow = [entry.name for entry in entries if entry.tier == "slow"]
    if slow:
        print(f"  Slow tier: {', '.join(slow)}")
    print()


def print_settings_summary():
    """Print key settings summary."""
    print("=" * 60)
    print("Key Settings")
    print("=" * 60)
    print(f"LOG_LEVEL: {settings.LOG_LEVEL}")
    print(f"LOG_DIR: {settings.LOG_DIR}")
    print(f"ENABLE_TRACING: {settings.ENABLE_TRACING}")
    print(f"MAX_CROSSINGS: {settings.MAX_CROSSINGS}")
    print(f"WORKERS: {settings.WORKERS}")
    print(f"DEFAULT_THEORY: {settings.DEFAULT_THEORY}")
    print(f"VERIFY_DECORATIONS: {settings.VERIFY_DECORATIONS}")
    print(f"VERIFY_RANDOM_DIAGRAMS: {settings.VERIFY_RANDOM_DIAGRAMS}")
    print(f"RULE_SAMPLE_FACES: {settings.RULE_SAMPLE_FACES}")
    print()


def main():
    """Main function."""
    print("\n🔍 Development Environment Check\n")

    print_environment()
    print_packages()
    print_settings_summary()
    print_corpus_status()

    print("=" * 60)
    print("Check complete!")
    print("=" * 60)
    print()


if __name__ == "__main__":
    main()

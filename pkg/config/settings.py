"""
Application configuration and environment detection.
Defines crossing limits, verification sample sizes, worker counts
and observability settings for the spectral sequence pipeline.
"""

import os
import socket

from pydantic_settings import BaseSettings


def is_dev_environment() -> bool:
    """Detect if running in development mode.

    Checks various indicators:
    - DEV_MODE environment variable
    - HOSTNAME containing 'dev'
    - Container hostname ends with '-dev'

    Returns:
        True if dev mode detected, False otherwise.
    """
    if os.getenv("DEV_MODE") == "true":
        return True

    hostname = os.getenv("HOSTNAME", "")
    if "dev" in hostname.lower():
        return True

    try:
        if socket.gethostname().endswith("-dev"):
            return True
    except Exception:
        pass

    return False


IS_DEV = is_dev_environment()


class Settings(BaseSettings):
    LOG_LEVEL: str = "INFO"

    LOG_DIR: str = "logs"

    ENABLE_TRACING: bool = False

    # 3^n faces; beyond this the cube is not desk scale
    MAX_CROSSINGS: int = 14

    # Process count for face evaluation (1 = in-process)
    WORKERS: int = 1

    # Source resolutions handed to a worker at a time
    FACE_CHUNK_SIZE: int = 64

    # Face terms remembered per generator basis, keyed by face and arc orientation
    FACE_CACHE_SIZE: int = 500_000

    SEED: int = 0

    CORPUS_DIR: str = "data/corpus"

    DEFAULT_THEORY: str = "szabo"

    OUTPUT_FORMAT: str = "text"

    CHECK_D_SQUARED: bool = True

    VERIFY_DECORATIONS: int = 50

    VERIFY_RANDOM_DIAGRAMS: int = 100

    VERIFY_MAX_CROSSINGS: int = 8

    VERIFY_TRANSVERSE_BRAIDS: int = 50

    RULE_SAMPLE_FACES: int = 10000

    RULE_MAX_DIMENSION: int = 5

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"  # Ignore extra environment variables not defined as fields


settings = Settings()


if IS_DEV:
    # Smaller verification samples keep local runs short
    settings.VERIFY_DECORATIONS = min(settings.VERIFY_DECORATIONS, 5)
    settings.VERIFY_RANDOM_DIAGRAMS = min(settings.VERIFY_RANDOM_DIAGRAMS, 10)
    settings.VERIFY_TRANSVERSE_BRAIDS = min(settings.VERIFY_TRANSVERSE_BRAIDS, 10)
    settings.RULE_SAMPLE_FACES = min(settings.RULE_SAMPLE_FACES, 1000)

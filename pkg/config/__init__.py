"""
Configuration management package.

Provides pipeline settings read from the environment and .env files:
- Typed settings model with crossing caps and sample sizes (Settings)
- Global settings instance shared by every package (settings)
- Development mode flag that shrinks verification samples (IS_DEV)
"""

from .settings import IS_DEV, Settings, settings

__all__ = ["Settings", "settings", "IS_DEV"]

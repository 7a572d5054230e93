"""
Utility modules for the core package.
Provides bit-level helpers for resolutions, monomial masks and
GF(2) vectors packed into Python integers.
"""

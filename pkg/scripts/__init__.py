"""
Scripts package for command-line utilities.
Provides the khss entry point (compute, verify, invariance, dump-matrix)
and the development environment diagnostics.
"""

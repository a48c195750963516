"""Utility modules for zorder.

1. Dictionary helpers (masking secrets for logging, merging without silent overwrites)
2. Deterministic JSON serialization of results
"""

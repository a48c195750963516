"""Common Dagster utilities for zorder: merging definitions of domain packages and running assets locally."""

"""Command line interface (console script `zorder`)."""

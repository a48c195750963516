"""Source code package for the common zorder layer.

This package contains the functionality shared by all zorder entry points:
1. Configuration and initialization
2. Logging system
3. The campaign base class (extract, transform, load)
4. Utility functions
"""

"""The multiplicative partial order on Z_n.

This package contains the library (src), the command line interface (cli) and the Dagster assets
(wf) that run verification campaigns. Assets are grouped under PROJECT_NAME / DOMAIN_NAME.
"""

PROJECT_NAME = "ZORDER"
DOMAIN_NAME = "RING_ORDER"  # Needs to match the directory name

"""Exact calculator for slope invariants of knotted tori built from braid satellites."""

import os
from importlib.metadata import PackageNotFoundError, version

# Try to get version from package metadata
try:
    __version__ = version("slope-calc")
except PackageNotFoundError:
    # Running in development or from source
    __version__ = "0.0.0-dev"

# Allow environment variable override for container builds
__version__ = os.environ.get("SLOPE_CALC_VERSION", __version__)

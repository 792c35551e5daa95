"""Desk-scale size guards.

Every exhaustive operation is capped by the number of candidates it would
visit; the default cap can be overridden per call or globally through the
``CENSUS_MAX_ENUM`` environment variable.
"""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_CAP = 10**7
ENV_CAP_VAR = "CENSUS_MAX_ENUM"

# Dense index tables (size**2 entries) are only built below this ring size;
# under the default cap any enumeration with n >= 2 stays far below it.
TABLE_SIZE_LIMIT = 4096


def enumeration_cap(override: int | None = None) -> int:
    """The active candidate cap: explicit override, else env var, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_CAP_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_ENUMERATION_CAP

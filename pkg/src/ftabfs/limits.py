"""Work-limit guard shared by the brute-force phases.

Exhaustive fault enumeration grows as C(m, f) * n; the guard refuses runs
whose declared work exceeds the limit so a typo'd invocation fails fast
instead of spinning for hours.  The default suits desk scale (n <= 150 at
f = 1, n <= 48 at f = 2); override with the ``FTABFS_WORK_LIMIT``
environment variable or an explicit argument.
"""

from __future__ import annotations

import math
import os

DEFAULT_WORK_LIMIT = 10**8
ENV_VAR = "FTABFS_WORK_LIMIT"


class WorkLimitExceeded(RuntimeError):
    def __init__(self, units, limit):
        self.units = units
        self.limit = limit
        super().__init__(f"work limit exceeded: {units} > {limit}")


def resolve_work_limit(explicit=None):
    """Effective limit: explicit argument, else env override, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_WORK_LIMIT


def guard_fault_enumeration(m, f, n, limit=None):
    """Raise WorkLimitExceeded when C(m, f) * n exceeds the limit."""
    limit = resolve_work_limit(limit)
    units = math.comb(m, f) * n
    if units > limit:
        raise WorkLimitExceeded(units, limit)
    return units

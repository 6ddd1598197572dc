"""Resource caps.

Overridable through the FORGE_CAPS environment variable, formatted as
``closure:automorphism:oracle`` (each field an integer, empty fields keep
the default).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_CLOSURE_CAP = 10**6
DEFAULT_AUTOMORPHISM_CAP = 2000
DEFAULT_ORACLE_CAP = 20000


@dataclass(frozen=True)
class Caps:
    closure: int = DEFAULT_CLOSURE_CAP
    automorphism: int = DEFAULT_AUTOMORPHISM_CAP
    oracle: int = DEFAULT_ORACLE_CAP


def get_caps() -> Caps:
    raw = os.environ.get("FORGE_CAPS")
    if not raw:
        return Caps()
    fields = raw.split(":")
    defaults = [DEFAULT_CLOSURE_CAP, DEFAULT_AUTOMORPHISM_CAP, DEFAULT_ORACLE_CAP]
    vals = []
    for i, default in enumerate(defaults):
        if i < len(fields) and fields[i].strip():
            vals.append(int(fields[i]))
        else:
            vals.append(default)
    return Caps(closure=vals[0], automorphism=vals[1], oracle=vals[2])

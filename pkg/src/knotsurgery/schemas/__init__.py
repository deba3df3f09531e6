"""Published JSON schemas, one per CLI output document.

Every JSON document the CLI can emit validates against the schema of the
same name: polynomial (alexander, torres), sw, family, certificate, verify.
"""

import json
from importlib import resources

NAMES = ("polynomial", "sw", "family", "certificate", "verify")


def load(name: str) -> dict:
    if name not in NAMES:
        raise ValueError(f"no such schema {name!r}; have {NAMES}")
    path = resources.files(__name__).joinpath(f"{name}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))

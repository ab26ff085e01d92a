"""Neighbour-transitive codes in graphs."""

import json

from ._gcw import *  # noqa: F401,F403
from ._gcw import run_cli


def report(*args):
    """Run a CLI command and return its JSON report (raises on a nonzero exit)."""
    rc, out, err = run_cli([*args, "--format", "json"])
    if rc != 0:
        raise RuntimeError(f"gcw {' '.join(args)} exited with {rc}: {err.strip()}")
    return json.loads(out)

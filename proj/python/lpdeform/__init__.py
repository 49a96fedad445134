"""Letterplace ideals of rooted-tree posets and their flat deformations."""

import json
from pathlib import Path

from . import _lpdeform
from ._lpdeform import LpError, ResourceLimitError, check, generators, hilbert, info, t1

__all__ = [
    "LpError",
    "ResourceLimitError",
    "check",
    "generators",
    "hilbert",
    "info",
    "poset",
    "read_poset",
    "t1",
]


def poset(text):
    """Parse poset text and return its JSON export as a dict."""
    return json.loads(_lpdeform.poset_json(text))


def read_poset(path):
    """Read a poset file and return its text, ready for the other functions."""
    return Path(path).read_text()

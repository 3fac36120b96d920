"""Shipped surface models and equation data."""

import json
from importlib import resources
from pathlib import Path


def path(name: str) -> Path:
    if not name.endswith(".json"):
        name += ".json"
    return Path(str(resources.files(__name__) / name))


def load(name: str) -> dict:
    with open(path(name)) as fh:
        return json.load(fh)


def names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))

"""Bundled diagrams: groups of presentations of the same colored link."""
from __future__ import annotations

import json
from importlib import resources

from ..linkcx import ColoredDiagram
from ..webmoy import Web


def _read(name: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(name).read_text())


def groups() -> dict[str, list[str]]:
    """Group name -> file names; files in one group are isotopic diagrams."""
    return _read("manifest.json")


def load_diagram(name: str) -> ColoredDiagram:
    if not name.endswith(".json"):
        name += ".json"
    return ColoredDiagram.from_json(_read(name))


def load_group(group: str) -> list[ColoredDiagram]:
    return [load_diagram(n) for n in groups()[group]]


def load_web(name: str) -> Web:
    if not name.endswith(".json"):
        name += ".json"
    return Web.from_json(_read(name))


def path(name: str) -> str:
    return str(resources.files(__name__).joinpath(name))

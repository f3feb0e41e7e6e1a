"""Bundled PD diagrams: ``trefoil``, ``whitehead``, ``hopf`` and ``five_two``."""

from __future__ import annotations

from importlib import resources

from .diagram import Diagram, parse_pd

NAMES = ("trefoil", "whitehead", "hopf", "five_two")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files(__package__).joinpath("data", f"{name}.pd").read_text(encoding="utf-8")


def load(name: str) -> Diagram:
    return parse_pd(fixture_text(name))

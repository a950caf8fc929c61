"""Size caps for the exponential searches.

Caps are explicit errors, not slowdowns: every exact primitive checks the
relevant size against the active :class:`Caps` and raises
:class:`~imtw.errors.CapExceeded`.
"""
from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    n: int = 20  # NP-hard primitives on the host graph
    obstruction_n: int = 16
    clique_n: int = 16  # complete edge colorings in the Ramsey searches
    oracle_n: int = 12  # hard ceiling for the ordering oracles

    def replace(self, **changes) -> "Caps":
        return dataclasses.replace(self, **changes)


_active = Caps()


def get_caps() -> Caps:
    return _active


def set_caps(caps: Caps) -> None:
    global _active
    _active = caps


@contextlib.contextmanager
def caps_override(**changes):
    old = get_caps()
    set_caps(old.replace(**changes))
    try:
        yield get_caps()
    finally:
        set_caps(old)


def parse_caps(text: str) -> Caps:
    """Parse ``"n=18,obstruction_n=12"`` into a :class:`Caps`."""
    fields = {f.name for f in dataclasses.fields(Caps)}
    changes = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        if not sep or key not in fields:
            raise ValueError(f"bad cap specification {part!r}")
        changes[key] = int(value)
        if changes[key] < 1:
            raise ValueError(f"cap {key} must be positive")
    return get_caps().replace(**changes)


def check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(what, size, cap)

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Pass/fail outcome of a check; ``clause`` names what failed."""

    ok: bool
    clause: str = ""
    witnesses: tuple[Any, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "clause": self.clause,
            "witnesses": [_plain(w) for w in self.witnesses],
        }


def _plain(obj):
    if isinstance(obj, tuple):
        return [_plain(x) for x in obj]
    return obj


PASS = Verdict(True)

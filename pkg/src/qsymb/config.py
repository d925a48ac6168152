"""Enumeration caps.

Defaults can be overridden through the environment (``QSYMB_MAX_N_A``,
``QSYMB_MAX_N_B``, ``QSYMB_MAX_ITEMS``) or temporarily with :func:`caps_override`.
"""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    max_n_a: int = 8
    max_n_b: int = 5
    max_items: int = 2_000_000

    @classmethod
    def from_env(cls) -> "Caps":
        base = cls()
        return cls(
            max_n_a=int(os.environ.get("QSYMB_MAX_N_A", base.max_n_a)),
            max_n_b=int(os.environ.get("QSYMB_MAX_N_B", base.max_n_b)),
            max_items=int(os.environ.get("QSYMB_MAX_ITEMS", base.max_items)),
        )

    def replace(self, **changes) -> "Caps":
        return dataclasses.replace(self, **changes)


_CAPS: contextvars.ContextVar[Caps | None] = contextvars.ContextVar("qsymb_caps", default=None)


def get_caps() -> Caps:
    caps = _CAPS.get()
    return caps if caps is not None else Caps.from_env()


@contextlib.contextmanager
def caps_override(**changes):
    token = _CAPS.set(get_caps().replace(**changes))
    try:
        yield get_caps()
    finally:
        _CAPS.reset(token)


@contextlib.contextmanager
def use_caps(caps: Caps):
    token = _CAPS.set(caps)
    try:
        yield caps
    finally:
        _CAPS.reset(token)

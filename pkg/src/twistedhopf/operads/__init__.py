"""Concrete operads and the bilinear operations shared by all of them."""

from __future__ import annotations

import re
from functools import lru_cache

from ..smod import InvalidInput
from .assoc import AssociativeOperad
from .base import (
    Operad,
    compose_full,
    compose_full_left_to_right,
    compose_partial,
    degeneracy,
    degenerate_label,
    restrict_to_set,
)
from .com import CommutativeOperad
from .laws import OPERAD_LAWS, applicable_laws, check_operad_laws
from .lie import LieOperad, lie_dynkin_expand, lie_straighten
from .mag import MagmaticOperad
from .pois import PoissonOperad

__all__ = [
    "AssociativeOperad",
    "CommutativeOperad",
    "LieOperad",
    "MagmaticOperad",
    "OPERAD_LAWS",
    "Operad",
    "applicable_laws",
    "check_operad_laws",
    "PoissonOperad",
    "compose_full",
    "compose_full_left_to_right",
    "compose_partial",
    "degeneracy",
    "degenerate_label",
    "get_operad",
    "lie_dynkin_expand",
    "lie_straighten",
    "restrict_to_set",
]


def get_operad(name: str) -> Operad:
    """Shared instance by CLI name: ``as``, ``com``, ``lie``, ``pois``, ``mag2``, ``mag3``, ..."""
    return _operad(name.strip().lower())


@lru_cache(maxsize=None)
def _operad(key: str) -> Operad:
    if key == "as":
        return AssociativeOperad()
    if key == "com":
        return CommutativeOperad()
    if key == "lie":
        return LieOperad(get_operad("as"))
    if key == "pois":
        return PoissonOperad()
    m = re.fullmatch(r"mag(\d+)", key)
    if m and int(m.group(1)) >= 2:
        return MagmaticOperad(int(m.group(1)))
    raise InvalidInput(f"unknown operad {key!r}")

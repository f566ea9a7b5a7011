"""Groebner bases and ideal operations."""

from .groebner import groebner, normal_form
from .ideal import (
    Ideal,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_member,
    intersect,
    krull_dim,
    radical_member,
    saturate,
)

__all__ = [
    "groebner", "normal_form", "Ideal", "eliminate", "ideal_contains", "ideal_equal",
    "ideal_member", "intersect", "krull_dim", "radical_member", "saturate",
]

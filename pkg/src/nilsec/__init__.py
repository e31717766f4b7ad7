"""Secant varieties of nilpotent orbits: exact invariants and cross-checks."""

from __future__ import annotations

__version__ = "0.1.0"

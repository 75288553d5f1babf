"""Descent-based statistics on tableaux: Des, maj, comaj."""

from __future__ import annotations

from .model import Tableau


def descent_set(t: Tableau) -> set[int]:
    """Indices i with i+1 in a strictly higher row than i."""
    pos = t.positions()
    return {i for i in range(1, t.n) if pos[i + 1][0] > pos[i][0]}


def maj(t: Tableau) -> int:
    """Sum of the descents of t."""
    return sum(descent_set(t))


def comaj(t: Tableau) -> int:
    """Sum of n - i over descents i of t."""
    n = t.n
    return sum(n - i for i in descent_set(t))

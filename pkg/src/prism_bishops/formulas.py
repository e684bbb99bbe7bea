"""Closed-form independence numbers, upper bounds and diagonal totals.

All functions take a :class:`BoardSpec` (or anything with ``n``, ``k``, ``r``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import BoardSpec


@dataclass(frozen=True)
class CaseTag:
    k_parity: str  # "odd" | "even"
    n_parity: str
    r_class: str  # "zero" | "odd" | "even_positive"

    @property
    def branch(self) -> str:
        k_odd = self.k_parity == "odd"
        if self.n_parity == "odd" and self.r_class == "zero":
            return "2n+4" if k_odd else "n+5"
        if self.n_parity == "odd" or self.r_class == "odd":
            return "2n+3-r" if k_odd else "n+3+r"
        return "2n-r" if k_odd else "n+r"


def _parity(x: int) -> str:
    return "odd" if x % 2 else "even"


def case_tag(spec: BoardSpec) -> CaseTag:
    r = spec.r
    r_class = "zero" if r == 0 else _parity(r) if r % 2 else "even_positive"
    return CaseTag(_parity(spec.k), _parity(spec.n), r_class)


def theorem_value(spec: BoardSpec) -> int:
    """Bishop independence number of the n x n x m prism surface."""
    n, r = spec.n, spec.r
    return {
        "2n+4": 2 * n + 4,
        "2n+3-r": 2 * n + 3 - r,
        "2n-r": 2 * n - r,
        "n+5": n + 5,
        "n+3+r": n + 3 + r,
        "n+r": n + r,
    }[case_tag(spec).branch]


def lemma3_bound(spec: BoardSpec) -> int:
    """Half the number of maximal diagonals, rounded down."""
    n, k, r = spec.n, spec.k, spec.r
    if k % 2:
        return 2 * n + 4 if r == 0 else 2 * n + 3 - r
    return n + 5 if r == 0 else n + 3 + r


def diagonal_count_formula(spec: BoardSpec) -> int:
    n, k, r = spec.n, spec.k, spec.r
    if k % 2:
        return 4 * n + 8 if r == 0 else 4 * n - 2 * r + 6
    return 2 * n + 10 if r == 0 else 2 * n + 2 * r + 6


def p_size_formula(spec: BoardSpec) -> int:
    """Total odd-numbered cycle-set members when n and r are even."""
    n, r = spec.n, spec.r
    return 2 * n - r if spec.k % 2 else n + r

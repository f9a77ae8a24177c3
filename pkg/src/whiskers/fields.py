"""Coefficient fields and exact rank computations.

Homology (and hence every Betti number) is computed over either a prime
field F_p or the rationals.  Ranks are exact: F_2 uses bitset Gaussian
elimination on Python ints, other primes use modular elimination, and the
rationals use Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either F_p (p prime) or, with p=None, the rationals."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"F{self.p}"

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        text = text.strip().upper()
        if text in ("Q", "QQ", "RATIONAL", "RATIONALS", "0"):
            return QQ
        if text.startswith("F"):
            text = text[1:]
        return FieldSpec(int(text))


GF2 = FieldSpec(2)
QQ = FieldSpec(None)


def rank_gf2(columns: list[int]) -> int:
    """Rank over F_2 of a matrix given as column bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            top = col.bit_length()
            row = pivots.get(top)
            if row is None:
                pivots[top] = col
                rank += 1
                break
            col ^= row
    return rank


def rank_modp(rows: list[list[int]], p: int) -> int:
    """Rank over F_p by in-place Gaussian elimination."""
    rows = [[x % p for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def rank_rational(rows: list[list[int]]) -> int:
    """Rank over the rationals (entries are integers)."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(work):
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        lead = work[rank][col]
        work[rank] = [x / lead for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank

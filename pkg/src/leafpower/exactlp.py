"""Exact linear programming over rationals, sized for certificate work.

A small dense two-phase simplex on ``fractions.Fraction``: no floating point
anywhere, so a returned optimum satisfies every constraint exactly and can be
re-substituted without tolerance.  Bland's rule (smallest index enters, ties
on leaving broken by smallest basis index) guarantees termination.

All structural variables are implicitly nonnegative; senses are per-row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

LE = "<="
GE = ">="
EQ = "=="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Row = tuple[Sequence[Fraction | int], str, Fraction | int]


@dataclass(frozen=True)
class Solution:
    status: str
    x: tuple[Fraction, ...] | None
    objective: Fraction | None


def maximize(objective: Sequence[Fraction | int], rows: Sequence[Row]) -> Solution:
    """Maximize objective . x subject to the rows, over x >= 0."""
    n = len(objective)
    cost = [Fraction(c) for c in objective]

    coeffs: list[list[Fraction]] = []
    senses: list[str] = []
    rhs: list[Fraction] = []
    for row_coeffs, sense, value in rows:
        if len(row_coeffs) != n:
            raise ValueError("row length does not match variable count")
        if sense not in (LE, GE, EQ):
            raise ValueError(f"unknown sense {sense!r}")
        a = [Fraction(c) for c in row_coeffs]
        b = Fraction(value)
        if b < 0:
            a = [-c for c in a]
            b = -b
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        coeffs.append(a)
        senses.append(sense)
        rhs.append(b)

    m = len(coeffs)
    # Column layout: structural | slack/surplus | artificial | rhs.
    num_extra = sum(1 for s in senses if s != EQ)
    num_art = sum(1 for s in senses if s != LE)
    total = n + num_extra + num_art

    tableau = [[Fraction(0)] * (total + 1) for _ in range(m)]
    basis = [-1] * m
    extra_at = n
    art_at = n + num_extra
    artificial_cols: set[int] = set()
    for i in range(m):
        for j in range(n):
            tableau[i][j] = coeffs[i][j]
        tableau[i][total] = rhs[i]
        if senses[i] == LE:
            tableau[i][extra_at] = Fraction(1)
            basis[i] = extra_at
            extra_at += 1
        elif senses[i] == GE:
            tableau[i][extra_at] = Fraction(-1)
            extra_at += 1
            tableau[i][art_at] = Fraction(1)
            basis[i] = art_at
            artificial_cols.add(art_at)
            art_at += 1
        else:
            tableau[i][art_at] = Fraction(1)
            basis[i] = art_at
            artificial_cols.add(art_at)
            art_at += 1

    def pivot(row: int, col: int) -> None:
        inv = Fraction(1) / tableau[row][col]
        tableau[row] = [c * inv for c in tableau[row]]
        for i in range(len(tableau)):
            if i != row and tableau[i][col] != 0:
                factor = tableau[i][col]
                tableau[i] = [
                    a - factor * b for a, b in zip(tableau[i], tableau[row])
                ]

    def run_simplex(cost_vec: list[Fraction], allowed: list[int]) -> str:
        while True:
            reduced = {}
            for j in allowed:
                rc = cost_vec[j]
                for i in range(len(tableau)):
                    cb = cost_vec[basis[i]]
                    if cb != 0:
                        rc -= cb * tableau[i][j]
                reduced[j] = rc
            entering = None
            for j in allowed:
                if reduced[j] > 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            leaving = None
            best_ratio = None
            for i in range(len(tableau)):
                if tableau[i][entering] > 0:
                    ratio = tableau[i][total] / tableau[i][entering]
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = i
            if leaving is None:
                return UNBOUNDED
            pivot(leaving, entering)
            basis[leaving] = entering

    if artificial_cols:
        phase1_cost = [Fraction(0)] * (total + 1)
        for j in artificial_cols:
            phase1_cost[j] = Fraction(-1)
        status = run_simplex(phase1_cost, list(range(total)))
        if status != OPTIMAL:
            raise RuntimeError("phase 1 cannot be unbounded")
        infeas = sum(tableau[i][total] for i in range(len(tableau)) if basis[i] in artificial_cols)
        if infeas > 0:
            return Solution(status=INFEASIBLE, x=None, objective=None)
        # Drive surviving artificials out of the basis; drop redundant rows.
        for i in reversed(range(len(tableau))):
            if basis[i] not in artificial_cols:
                continue
            pivot_col = None
            for j in range(n + num_extra):
                if tableau[i][j] != 0:
                    pivot_col = j
                    break
            if pivot_col is None:
                del tableau[i]
                del basis[i]
            else:
                pivot(i, pivot_col)
                basis[i] = pivot_col

    phase2_cost = [Fraction(0)] * (total + 1)
    for j in range(n):
        phase2_cost[j] = cost[j]
    allowed = [j for j in range(n + num_extra) if j not in artificial_cols]
    status = run_simplex(phase2_cost, allowed)
    if status == UNBOUNDED:
        return Solution(status=UNBOUNDED, x=None, objective=None)

    x = [Fraction(0)] * n
    for i in range(len(tableau)):
        if basis[i] < n:
            x[basis[i]] = tableau[i][total]
    value = sum(c * v for c, v in zip(cost, x))
    return Solution(status=OPTIMAL, x=tuple(x), objective=value)

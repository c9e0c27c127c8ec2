"""Exact sparse linear algebra over Q.

Rows are dicts ``column -> coefficient``.  Elimination always pivots on the
smallest column index present in a row, so results are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

Row = Dict[int, Fraction]


def _integer_row(row: Mapping[int, object]) -> Dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for j, v in row.items():
        v = Fraction(v) * den
        if v:
            out[j] = int(v)
    return _primitive(out)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def rank(rows: Sequence[Mapping[int, object]]) -> int:
    """Rank by fraction-free elimination on integer rows."""
    pivots: Dict[int, Dict[int, int]] = {}
    for r in rows:
        row = _integer_row(r)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            a, b = p[c], row[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {j: v * fa for j, v in row.items()}
            for j, v in p.items():
                nv = new.get(j, 0) - fb * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            row = _primitive(new)
    return len(pivots)


class Echelon:
    """Incremental row echelon form of an augmented system ``A z = b``."""

    def __init__(self):
        self.pivots: Dict[int, Tuple[Row, Fraction]] = {}
        self.consistent = True

    def add(self, row: Mapping[int, object], rhs=0) -> bool:
        """Add an equation; returns False if it made the system inconsistent."""
        row = {j: Fraction(v) for j, v in row.items() if v}
        b = Fraction(rhs)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                f = row[c]
                self.pivots[c] = ({j: v / f for j, v in row.items()}, b / f)
                return True
            prow, pb = piv
            f = row[c]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            b -= f * pb
        if b:
            self.consistent = False
            return False
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def particular_solution(self) -> Optional[Dict[int, Fraction]]:
        """Solution with all free coordinates set to zero."""
        if not self.consistent:
            return None
        x: Dict[int, Fraction] = {}
        for c in sorted(self.pivots, reverse=True):
            row, b = self.pivots[c]
            v = b
            for j, a in row.items():
                if j != c and j in x:
                    v -= a * x[j]
            if v:
                x[c] = v
        return x

    def nullspace(self, ncols: int) -> List[Dict[int, Fraction]]:
        """Basis of the homogeneous solution space, one vector per free column."""
        basis = []
        order = sorted(self.pivots, reverse=True)
        for f in range(ncols):
            if f in self.pivots:
                continue
            x = {f: Fraction(1)}
            for c in order:
                row, _ = self.pivots[c]
                v = Fraction(0)
                for j, a in row.items():
                    if j != c and j in x:
                        v -= a * x[j]
                if v:
                    x[c] = v
            basis.append(x)
        return basis


def transpose(columns: Sequence[Mapping[Hashable, object]]) -> Dict[Hashable, Dict[int, object]]:
    rows: Dict[Hashable, Dict[int, object]] = {}
    for j, col in enumerate(columns):
        for key, v in col.items():
            if v:
                rows.setdefault(key, {})[j] = v
    return rows


def solve(columns: Sequence[Mapping[Hashable, object]], rhs: Mapping[Hashable, object]) -> Optional[Dict[int, Fraction]]:
    """Solve ``Σ_j z_j columns[j] = rhs``; ``None`` if inconsistent.

    Columns and the right-hand side are sparse vectors keyed by arbitrary
    hashable row labels.  Free variables are set to zero.
    """
    ech = Echelon()
    rows = transpose(columns)
    for key in list(rows) + [k for k in rhs if k not in rows]:
        if not ech.add(rows.get(key, {}), rhs.get(key, 0)):
            return None
    return ech.particular_solution()


def nullspace(columns: Sequence[Mapping[Hashable, object]]) -> List[Dict[int, Fraction]]:
    ech = Echelon()
    for row in transpose(columns).values():
        ech.add(row)
    return ech.nullspace(len(columns))

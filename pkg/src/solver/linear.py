"""
The linear system F_delta = 0 (delta in psi(R)) whose kernel is C_R, and exact
Gaussian elimination over the coefficient field.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from src.arith.field import Field
from src.arith.sorted_set import SortedRationalSet
from src.newton.maps import psi
from src.newton.polygon import NewtonData
from src.series.operator import MahlerOperator

logger = logging.getLogger(__name__)

SparseRow = Dict[int, Any]


@dataclass(frozen=True)
class LinearSystem:
    rows: SortedRationalSet      # psi(R)
    cols: SortedRationalSet      # R
    entries: Dict[int, SparseRow]
    field: Field

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, delta, gamma) -> Any:
        i = self.rows.elems.index(Fraction(delta))
        j = self.cols.elems.index(Fraction(gamma))
        return self.entries.get(i, {}).get(j, self.field.zero)

    def to_dense(self) -> List[List[Any]]:
        zero = self.field.zero
        return [
            [self.entries.get(i, {}).get(j, zero) for j in range(len(self.cols))]
            for i in range(len(self.rows))
        ]


def assemble_system(N: NewtonData, L: MahlerOperator, R: SortedRationalSet) -> LinearSystem:
    """entry(delta, gamma) = sum of a_{i,j} over P(L) with gamma ell^i + j = delta."""
    R = R if isinstance(R, SortedRationalSet) else SortedRationalSet(R)
    rows = SortedRationalSet(psi(N, r) for r in R)
    row_index = {delta: i for i, delta in enumerate(rows)}
    entries: Dict[int, SparseRow] = {}
    for j, gamma in enumerate(R):
        for p in N.points:
            i = row_index.get(gamma * p.abscissa + p.ordinate)
            if i is None:
                continue
            row = entries.setdefault(i, {})
            value = row.get(j, L.field.zero) + p.coeff
            if value:
                row[j] = value
            else:
                row.pop(j, None)
    logger.debug("assembled %dx%d system", len(rows), len(R))
    return LinearSystem(rows=rows, cols=R, entries=entries, field=L.field)


def rref(rows: Sequence[SparseRow], ncols: int, one: Any = 1, sparsest_pivot: bool = True
         ) -> Tuple[List[SparseRow], List[int]]:
    """
    Reduced row echelon form of sparse rows.

    Columns are scanned left to right; among the rows with a nonzero entry in
    the current column the one with fewest nonzeros becomes the pivot.
    """
    remaining = [dict(r) for r in rows if r]
    reduced: List[SparseRow] = []
    pivots: List[int] = []
    for col in range(ncols):
        candidates = [idx for idx, r in enumerate(remaining) if col in r]
        if not candidates:
            continue
        idx = min(candidates, key=lambda t: len(remaining[t])) if sparsest_pivot else candidates[0]
        pivot = remaining.pop(idx)
        inverse = one / pivot[col]
        pivot = {c: v * inverse for c, v in pivot.items()}
        for r in remaining + reduced:
            factor = r.get(col)
            if not factor:
                continue
            for c, v in pivot.items():
                value = r.get(c, 0) - factor * v
                if value:
                    r[c] = value
                else:
                    r.pop(c, None)
        reduced.append(pivot)
        pivots.append(col)
    return reduced, pivots


def kernel_basis(S: LinearSystem) -> List[List[Any]]:
    """
    Basis of the kernel, in reduced echelon form with respect to increasing
    exponents: each vector has coordinate 1 at its smallest nonzero exponent.
    """
    ncols = len(S.cols)
    one, zero = S.field.one, S.field.zero
    reduced, pivots = rref(list(S.entries.values()), ncols, one=one)
    pivot_set = set(pivots)
    raw: List[SparseRow] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec: SparseRow = {free: one}
        for row, pcol in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vec[pcol] = -value
        raw.append(vec)
    canonical, _ = rref(raw, ncols, one=one, sparsest_pivot=False)
    logger.info("kernel dimension %d (%d columns, rank %d)", len(canonical), ncols, len(pivots))
    return [[vec.get(j, zero) for j in range(ncols)] for vec in canonical]


def rank(vectors: Sequence[Sequence[Any]], one: Any = 1) -> int:
    rows = [{j: v for j, v in enumerate(vec) if v} for vec in vectors]
    ncols = max((len(vec) for vec in vectors), default=0)
    return len(rref(rows, ncols, one=one)[1])

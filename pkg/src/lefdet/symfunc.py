"""Exact evaluation of elementary symmetric and Schur polynomials.

Three independent Schur evaluators are provided so they can cross-check each
other: a determinant in elementary symmetric values, the bialternant ratio,
and a semistandard-tableau sum.  Conventions throughout: e_0 = 1, and
e_k = 0 for k < 0 or k > (number of values); consequently a Schur value over
the empty variable list is 1 for the empty partition and 0 otherwise.

``schur_jacobi_trudi(lam, x)`` deliberately returns the Schur value of the
CONJUGATE of its input, i.e. det(e_{lam_i + j - i}(x)), so determinant
formulas written in that shape transcribe with no extra conjugations.  Use
``schur`` when the input partition should be the output shape.

The ``*_homog`` variants take paired coefficient lists (a, b) instead of the
ratio vector a/b.  E_k(a; b) sums, over k-subsets S, the product of a over S
times the product of b off S, so E_k(a; b) = (prod b) * e_k(a/b) whenever no
b entry vanishes; the determinant variants carry the matching power of
prod b.  They are polynomial in a and b, hence defined with zero entries too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ExactMatrix, det
from .partitions import Partition


@dataclass(frozen=True)
class HomogPair:
    """Paired coefficient lists of equal length (numerators, denominators)."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError(
                f"paired lists must have equal length, got {len(self.a)} and {len(self.b)}"
            )

    def __len__(self):
        return len(self.a)


def _elem_table(values: tuple) -> list:
    """[e_0, e_1, ..., e_n] for the given values, over any exact ring."""
    e: list = [1]
    for x in values:
        e.append(0)
        for j in range(len(e) - 1, 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e


def elementary(k: int, values):
    """The k-th elementary symmetric value; 0 outside 0..len(values)."""
    values = tuple(values)
    if k < 0 or k > len(values):
        return 0
    return _elem_table(values)[k]


def _homog_table(pair: HomogPair) -> list:
    """[E_0, ..., E_n] with E_k(a; b) the degree-k subset sum; E_0 = prod b."""
    table: list = [1]
    for a_i, b_i in zip(pair.a, pair.b):
        table.append(0)
        for j in range(len(table) - 1, 0, -1):
            table[j] = b_i * table[j] + a_i * table[j - 1]
        table[0] = b_i * table[0]
    return table


def elementary_homog(k: int, pair: HomogPair):
    """E_k(a; b); 0 outside 0..len(pair), prod(b) at k = 0."""
    if k < 0 or k > len(pair):
        return 0
    return _homog_table(pair)[k]


def _jt_det(table: list, nvalues: int, parts: tuple[int, ...]):
    """det(T[parts_i + j - i]) over the given table, 0 outside 0..nvalues."""
    size = len(parts)
    if size == 0:
        return 1

    def at(k: int):
        return table[k] if 0 <= k <= nvalues else 0

    entries = [at(parts[i] + j - i) for i in range(size) for j in range(size)]
    return det(ExactMatrix(size, size, entries))


def schur_jacobi_trudi(lam: Partition, values):
    """det(e_{lam_i + j - i}(values)); this is the Schur value of conjugate(lam)."""
    values = tuple(values)
    if len(lam) == 0:
        return 1
    return _jt_det(_elem_table(values), len(values), lam.parts)


def schur(lam: Partition, values):
    """The Schur value of lam itself (conjugation-normalized convenience)."""
    return schur_jacobi_trudi(lam.conjugate(), values)


def schur_homog(lam: Partition, pair: HomogPair, rows: int | None = None):
    """det(E_{lam_i + j - i}(a; b)) over ``rows`` rows (default: number of parts).

    Equals (prod b)^rows times the Schur value of conjugate(lam) at a/b when
    no b entry vanishes; zero-padding lam to extra rows multiplies by prod b
    per row, which is why the row count is explicit.
    """
    size = len(lam) if rows is None else rows
    if size < len(lam):
        raise ValueError(f"rows={rows} cannot hold {len(lam)} parts")
    if size == 0:
        return 1
    return _jt_det(_homog_table(pair), len(pair), lam.padded(size))


def schur_bialternant(lam: Partition, values) -> Fraction:
    """Ratio of alternants; needs pairwise distinct values and enough of them."""
    values = tuple(Fraction(v) for v in values)
    n = len(values)
    if len(lam) > n:
        raise ValueError(
            f"partition with {len(lam)} parts needs at least that many values, got {n}"
        )
    if len(set(values)) != n:
        raise ValueError("bialternant undefined at non-distinct point")
    if n == 0:
        return Fraction(1)
    padded = lam.padded(n)
    num = det(
        ExactMatrix(
            n, n, [values[j] ** (padded[i] + n - 1 - i) for i in range(n) for j in range(n)]
        )
    )
    den = det(
        ExactMatrix(n, n, [values[j] ** (n - 1 - i) for i in range(n) for j in range(n)])
    )
    return num / den


def schur_tableaux(lam: Partition, values):
    """Sum over semistandard tableaux of shape lam with entries up to len(values).

    Independent combinatorial oracle; guarded to small inputs because the
    tableau count explodes.
    """
    values = tuple(values)
    n = len(values)
    if lam.weight > 10 or n > 5:
        raise ValueError(
            f"tableau enumeration guard: need weight <= 10 and <= 5 values, "
            f"got weight {lam.weight} in {n} values"
        )
    if len(lam) == 0:
        return 1
    if len(lam) > n:
        return 0

    shape = lam.parts

    def row_fillings(length: int, above: tuple[int, ...] | None):
        # weakly increasing along the row, strictly below the row above
        row = [0] * length

        def fill(c: int):
            if c == length:
                yield tuple(row)
                return
            lo = row[c - 1] if c > 0 else 0
            if above is not None:
                lo = max(lo, above[c] + 1)
            for v in range(lo, n):
                row[c] = v
                yield from fill(c + 1)

        yield from fill(0)

    def rec(i: int, above: tuple[int, ...] | None):
        if i == len(shape):
            return 1
        total = 0
        for row in row_fillings(shape[i], above):
            weight = 1
            for v in row:
                weight = weight * values[v]
            total = total + weight * rec(i + 1, row)
        return total

    return rec(0, None)

"""Dense fuzzy vectors and matrices over a shared lattice.

Relations are endorelations stored row-major; rectangular shapes exist only
as intermediate results of compositions.  All containers are immutable and
every operation is a pure function, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    IterationLimitExceeded,
    LatticeMismatch,
    NotQuasiOrder,
)
from .lattice import Lattice, ONE, ZERO


@dataclass(frozen=True)
class FuzzyVector:
    """A fuzzy subset of an n-element set."""

    lattice: Lattice
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        for x in self.entries:
            self.lattice.validate(x)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    @classmethod
    def from_values(cls, lattice: Lattice, values: Iterable) -> "FuzzyVector":
        return cls(lattice, tuple(Fraction(v) for v in values))

    @classmethod
    def zeros(cls, lattice: Lattice, n: int) -> "FuzzyVector":
        return cls(lattice, (ZERO,) * n)

    @classmethod
    def ones(cls, lattice: Lattice, n: int) -> "FuzzyVector":
        return cls(lattice, (ONE,) * n)


@dataclass(frozen=True)
class FuzzyMatrix:
    """A fuzzy relation (rows x cols matrix of lattice values), row-major."""

    lattice: Lattice
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for x in self.entries:
            self.lattice.validate(x)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j :: self.cols]

    def row_vector(self, i: int) -> FuzzyVector:
        return FuzzyVector(self.lattice, self.row(i))

    def col_vector(self, j: int) -> FuzzyVector:
        return FuzzyVector(self.lattice, self.col(j))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def from_rows(cls, lattice: Lattice, rows: Sequence[Sequence]) -> "FuzzyMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        flat = tuple(Fraction(v) for r in rows for v in r)
        return cls(lattice, nrows, ncols, flat)

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @classmethod
    def identity(cls, lattice: Lattice, n: int) -> "FuzzyMatrix":
        flat = tuple(ONE if i == j else ZERO for i in range(n) for j in range(n))
        return cls(lattice, n, n, flat)

    @classmethod
    def universal(cls, lattice: Lattice, n: int) -> "FuzzyMatrix":
        return cls(lattice, n, n, (ONE,) * (n * n))


def _check_same_lattice(a, b) -> Lattice:
    if a.lattice != b.lattice:
        raise LatticeMismatch(f"{a.lattice.describe()} vs {b.lattice.describe()}")
    return a.lattice


# ---------------------------------------------------------------------------
# compositions


def compose(p: FuzzyMatrix, q: FuzzyMatrix) -> FuzzyMatrix:
    """(P o Q)(a,b) = join_c P(a,c) * Q(c,b)."""
    lat = _check_same_lattice(p, q)
    if p.cols != q.rows:
        raise DimensionMismatch(f"cannot compose {p.rows}x{p.cols} with {q.rows}x{q.cols}")
    otimes, join = lat.otimes, lat.join
    out = []
    for i in range(p.rows):
        prow = p.row(i)
        for j in range(q.cols):
            qcol = q.col(j)
            acc = ZERO
            for x, y in zip(prow, qcol):
                if x != ZERO and y != ZERO:
                    acc = join(acc, otimes(x, y))
            out.append(acc)
    return FuzzyMatrix(lat, p.rows, q.cols, tuple(out))


def compose_vm(f: FuzzyVector, p: FuzzyMatrix) -> FuzzyVector:
    """(f o P)(a) = join_b f(b) * P(b,a)."""
    lat = _check_same_lattice(f, p)
    if len(f) != p.rows:
        raise DimensionMismatch(f"vector length {len(f)} vs {p.rows} rows")
    otimes, join = lat.otimes, lat.join
    out = []
    for j in range(p.cols):
        acc = ZERO
        for b in range(p.rows):
            x = f.entries[b]
            if x != ZERO:
                y = p.entries[b * p.cols + j]
                if y != ZERO:
                    acc = join(acc, otimes(x, y))
        out.append(acc)
    return FuzzyVector(lat, tuple(out))


def compose_mv(p: FuzzyMatrix, f: FuzzyVector) -> FuzzyVector:
    """(P o f)(a) = join_b P(a,b) * f(b)."""
    lat = _check_same_lattice(p, f)
    if p.cols != len(f):
        raise DimensionMismatch(f"{p.cols} cols vs vector length {len(f)}")
    otimes, join = lat.otimes, lat.join
    out = []
    for i in range(p.rows):
        acc = ZERO
        for b, y in enumerate(p.row(i)):
            if y != ZERO:
                x = f.entries[b]
                if x != ZERO:
                    acc = join(acc, otimes(y, x))
        out.append(acc)
    return FuzzyVector(lat, tuple(out))


def overlap(f: FuzzyVector, g: FuzzyVector) -> Fraction:
    """Degree of overlapping: join_a f(a) * g(a)."""
    lat = _check_same_lattice(f, g)
    if len(f) != len(g):
        raise DimensionMismatch(f"vector lengths {len(f)} vs {len(g)}")
    otimes, join = lat.otimes, lat.join
    acc = ZERO
    for x, y in zip(f.entries, g.entries):
        if x != ZERO and y != ZERO:
            acc = join(acc, otimes(x, y))
    return acc


# ---------------------------------------------------------------------------
# pointwise algebra


def _pointwise(op, p: FuzzyMatrix, q: FuzzyMatrix) -> FuzzyMatrix:
    lat = _check_same_lattice(p, q)
    if (p.rows, p.cols) != (q.rows, q.cols):
        raise DimensionMismatch(f"{p.rows}x{p.cols} vs {q.rows}x{q.cols}")
    return FuzzyMatrix(lat, p.rows, p.cols, tuple(op(x, y) for x, y in zip(p.entries, q.entries)))


def meet(p: FuzzyMatrix, q: FuzzyMatrix) -> FuzzyMatrix:
    return _pointwise(p.lattice.meet, p, q)


def join(p: FuzzyMatrix, q: FuzzyMatrix) -> FuzzyMatrix:
    return _pointwise(p.lattice.join, p, q)


def transpose(p: FuzzyMatrix) -> FuzzyMatrix:
    flat = tuple(p.entries[j * p.cols + i] for i in range(p.cols) for j in range(p.rows))
    return FuzzyMatrix(p.lattice, p.cols, p.rows, flat)


def leq(p: FuzzyMatrix, q: FuzzyMatrix) -> bool:
    """Entrywise p <= q."""
    _check_same_lattice(p, q)
    if (p.rows, p.cols) != (q.rows, q.cols):
        raise DimensionMismatch(f"{p.rows}x{p.cols} vs {q.rows}x{q.cols}")
    return all(x <= y for x, y in zip(p.entries, q.entries))


# ---------------------------------------------------------------------------
# closures and predicates


def transitive_closure(r: FuzzyMatrix, max_iter: int | None = None) -> FuzzyMatrix:
    """Least transitive relation above r, by squaring: r <- r v r o r.

    On a finite matrix the join of powers is attained within n-1 squarings
    (x*y <= x, so paths through repeated states never beat their shortcuts);
    the cap is a defensive guard only.
    """
    if not r.is_square:
        raise DimensionMismatch("transitive closure needs a square matrix")
    cap = max_iter if max_iter is not None else max(10 * r.rows, 10)
    current = r
    for _ in range(cap):
        nxt = join(current, compose(current, current))
        if nxt == current:
            return current
        current = nxt
    raise IterationLimitExceeded(f"transitive closure did not stabilize within {cap} steps")


@dataclass(frozen=True)
class QuasiOrderWitness:
    """Reflexivity/transitivity/symmetry facts about a square relation."""

    matrix: FuzzyMatrix
    reflexive: bool
    transitive: bool
    symmetric: bool

    @property
    def is_quasi_order(self) -> bool:
        return self.reflexive and self.transitive


def is_quasi_order(r: FuzzyMatrix) -> QuasiOrderWitness:
    if not r.is_square:
        raise DimensionMismatch("quasi-order test needs a square matrix")
    n = r.rows
    reflexive = all(r.entries[i * n + i] == ONE for i in range(n))
    transitive = leq(compose(r, r), r)
    symmetric = r == transpose(r)
    return QuasiOrderWitness(r, reflexive, transitive, symmetric)


def is_fuzzy_equivalence(r: FuzzyMatrix) -> bool:
    w = is_quasi_order(r)
    return w.is_quasi_order and w.symmetric


def is_fuzzy_order(r: FuzzyMatrix) -> bool:
    """Quasi-order whose crisp part is antisymmetric."""
    w = is_quasi_order(r)
    if not w.is_quasi_order:
        return False
    n = r.rows
    for i in range(n):
        for j in range(i + 1, n):
            if r.entries[i * n + j] == ONE and r.entries[j * n + i] == ONE:
                return False
    return True


def require_quasi_order(r: FuzzyMatrix) -> FuzzyMatrix:
    w = is_quasi_order(r)
    if not w.is_quasi_order:
        missing = []
        if not w.reflexive:
            missing.append("reflexive")
        if not w.transitive:
            missing.append("transitive")
        raise NotQuasiOrder(f"relation is not {' or '.join(missing)}")
    return r


def natural_equivalence(r: FuzzyMatrix) -> FuzzyMatrix:
    """E_R = R meet R^{-1}; a fuzzy equivalence below the quasi-order R."""
    require_quasi_order(r)
    return meet(r, transpose(r))


def from_fuzzy_set_right(f: FuzzyVector) -> FuzzyMatrix:
    """R_f(a,b) = f(a) -> f(b); always a quasi-order."""
    lat = f.lattice
    res = lat.residuum
    n = len(f)
    flat = tuple(res(f.entries[a], f.entries[b]) for a in range(n) for b in range(n))
    return FuzzyMatrix(lat, n, n, flat)


def from_fuzzy_set_left(f: FuzzyVector) -> FuzzyMatrix:
    """R^f(a,b) = f(b) -> f(a); always a quasi-order."""
    lat = f.lattice
    res = lat.residuum
    n = len(f)
    flat = tuple(res(f.entries[b], f.entries[a]) for a in range(n) for b in range(n))
    return FuzzyMatrix(lat, n, n, flat)


def crisp_part(r: FuzzyMatrix) -> FuzzyMatrix:
    """Entry 1 where r is 1, else 0, over the same lattice."""
    flat = tuple(ONE if x == ONE else ZERO for x in r.entries)
    return FuzzyMatrix(r.lattice, r.rows, r.cols, flat)


def aftersets(r: FuzzyMatrix) -> list[tuple[int, FuzzyVector]]:
    """Distinct rows of a quasi-order, keyed by least realizing state index.

    First-occurrence order makes quotient constructions deterministic; the
    count always equals the distinct-column count.
    """
    require_quasi_order(r)
    seen: dict[tuple[Fraction, ...], int] = {}
    out: list[tuple[int, FuzzyVector]] = []
    for i in range(r.rows):
        row = r.row(i)
        if row not in seen:
            seen[row] = i
            out.append((i, FuzzyVector(r.lattice, row)))
    return out


def foresets(r: FuzzyMatrix) -> list[tuple[int, FuzzyVector]]:
    """Distinct columns of a quasi-order, keyed by least realizing state index."""
    require_quasi_order(r)
    seen: dict[tuple[Fraction, ...], int] = {}
    out: list[tuple[int, FuzzyVector]] = []
    for j in range(r.cols):
        col = r.col(j)
        if col not in seen:
            seen[col] = j
            out.append((j, FuzzyVector(r.lattice, col)))
    return out

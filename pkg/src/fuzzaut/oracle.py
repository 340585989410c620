"""Independent brute-force verifiers.

Everything in here recomputes its answers from first principles (word
enumeration, bitmask relation algebra) so it can serve as the second route
of a dual check against the main algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .automaton import FuzzyRecognizer, Machine, Word, underlying
from .errors import AlphabetMismatch, NotBoolean, TooLarge
from .lattice import ONE, ZERO
from .relation import FuzzyMatrix, compose_vm, overlap, require_quasi_order


@dataclass(frozen=True)
class EquivalenceVerdict:
    equal_up_to: int
    first_divergence: tuple[Word, Fraction, Fraction] | None

    @property
    def equal(self) -> bool:
        return self.first_divergence is None


def languages_equal_up_to(a: FuzzyRecognizer, b: FuzzyRecognizer, k: int) -> EquivalenceVerdict:
    """Compare recognized languages on every word of length <= k, in
    length-then-lexicographic order, with exact value equality.

    Walks the word tree breadth-first, extending the state vectors of both
    recognizers one letter at a time, so each word costs one step."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    if a.lattice != b.lattice:
        raise AlphabetMismatch("recognizers live over different lattices")
    mats_a = [a.automaton.delta[x] for x in a.alphabet]
    mats_b = [b.automaton.delta[x] for x in b.alphabet]
    frontier = [((), a.sigma, b.sigma)]
    for _ in range(k + 1):
        nxt = []
        for word, va, vb in frontier:
            xa = overlap(va, a.tau)
            xb = overlap(vb, b.tau)
            if xa != xb:
                return EquivalenceVerdict(k, (word, xa, xb))
            if len(word) < k:
                for i in range(len(mats_a)):
                    nxt.append((word + (i,), compose_vm(va, mats_a[i]), compose_vm(vb, mats_b[i])))
        frontier = nxt
    return EquivalenceVerdict(k, None)


# ---------------------------------------------------------------------------
# crisp quasi-order enumeration (bitmask rows, independent of relation.py)


@lru_cache(maxsize=None)
def _crisp_quasi_orders(n: int) -> tuple[tuple[int, ...], ...]:
    """All reflexive transitive crisp relations on n states, as row bitmasks."""
    if n > 4:
        raise TooLarge(f"quasi-order enumeration capped at 4 states, got {n}")
    out = []
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(offdiag)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(offdiag):
            if bits >> k & 1:
                rows[i] |= 1 << j
        # transitive iff every successor's row is contained in mine
        ok = True
        for i in range(n):
            acc = 0
            m = rows[i]
            while m:
                j = (m & -m).bit_length() - 1
                acc |= rows[j]
                m &= m - 1
            if acc & ~rows[i]:
                ok = False
                break
        if ok:
            out.append(tuple(rows))
    return tuple(out)


def crisp_quasi_orders(lattice, n: int) -> list[FuzzyMatrix]:
    """All crisp quasi-orders on n states as Boolean-valued matrices."""
    mats = []
    for rows in _crisp_quasi_orders(n):
        flat = tuple(
            ONE if rows[i] >> j & 1 else ZERO for i in range(n) for j in range(n)
        )
        mats.append(FuzzyMatrix(lattice, n, n, flat))
    return mats


def _as_bitrows(m: FuzzyMatrix) -> tuple[int, ...]:
    rows = []
    for i in range(m.rows):
        bits = 0
        for j, v in enumerate(m.row(i)):
            if v == ONE:
                bits |= 1 << j
            elif v != ZERO:
                raise NotBoolean(f"entry ({i},{j}) = {v} is not crisp")
        rows.append(bits)
    return tuple(rows)


def _bit_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in p:
        acc = 0
        m = row
        while m:
            j = (m & -m).bit_length() - 1
            acc |= q[j]
            m &= m - 1
        out.append(acc)
    return tuple(out)


def _bit_apply(vec: int, p: tuple[int, ...]) -> int:
    # image of a state set under a relation: union of successor rows
    acc = 0
    m = vec
    while m:
        j = (m & -m).bit_length() - 1
        acc |= p[j]
        m &= m - 1
    return acc


def brute_force_greatest_invariant(machine: Machine, side: str) -> FuzzyMatrix:
    """Greatest right/left invariant crisp quasi-order, by direct filtering.

    Enumerates every crisp quasi-order on <= 4 Boolean states, keeps those
    satisfying the defining equations, and returns their join (union closed
    transitively), which the filter must accept again.
    """
    aut = underlying(machine)
    lat = aut.lattice
    if lat.kind != "boolean":
        raise NotBoolean(f"brute force requires the Boolean lattice, got {lat.describe()}")
    n = aut.n
    if n > 4:
        raise TooLarge(f"brute force capped at 4 states, got {n}")

    deltas = [_as_bitrows(aut.delta[x]) for x in aut.alphabet]
    if isinstance(machine, FuzzyRecognizer):
        tau_bits = sum(1 << i for i, v in enumerate(machine.tau.entries) if v == ONE)
        sigma_bits = sum(1 << i for i, v in enumerate(machine.sigma.entries) if v == ONE)
    else:
        tau_bits = sigma_bits = None

    def accepted(rows: tuple[int, ...]) -> bool:
        for d in deltas:
            dr = _bit_compose(d, rows)
            target = dr if side == "right" else _bit_compose(rows, d)
            lhs = _bit_compose(rows, dr) if side == "right" else _bit_compose(_bit_compose(rows, d), rows)
            if lhs != target:
                return False
        if side == "right" and tau_bits is not None:
            if _bit_apply(tau_bits, _transpose_bits(rows, n)) != tau_bits:
                return False
        if side == "left" and sigma_bits is not None:
            if _bit_apply(sigma_bits, rows) != sigma_bits:
                return False
        return True

    solutions = [rows for rows in _crisp_quasi_orders(n) if accepted(rows)]
    best = tuple(0 for _ in range(n))
    union = list(best)
    for rows in solutions:
        for i in range(n):
            union[i] |= rows[i]
    # transitive closure of the union (the join in the quasi-order lattice)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = _bit_apply(union[i], tuple(union))
            if acc & ~union[i]:
                union[i] |= acc
                changed = True
    joined = tuple(union)
    if not accepted(joined):
        raise AssertionError("join of invariant quasi-orders failed the filter")
    flat = tuple(ONE if joined[i] >> j & 1 else ZERO for i in range(n) for j in range(n))
    return FuzzyMatrix(lat, n, n, flat)


def _transpose_bits(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(
        sum(1 << j for j in range(n) if rows[j] >> i & 1) for i in range(n)
    )


# ---------------------------------------------------------------------------
# the general system


def check_general_system(
    rec: FuzzyRecognizer, r: FuzzyMatrix, k: int
) -> tuple[bool, Word | None]:
    """Verify sigma o R o dx1 o R o ... o R o dxn o R o tau equals the plain
    product for every word of length <= k; returns the first witness word
    (length-then-lexicographic) on failure."""
    require_quasi_order(r)
    mats = [rec.automaton.delta[x] for x in rec.alphabet]
    frontier = [((), rec.sigma, compose_vm(rec.sigma, r))]
    for _ in range(k + 1):
        nxt = []
        for word, plain, dressed in frontier:
            if overlap(dressed, rec.tau) != overlap(plain, rec.tau):
                return False, word
            if len(word) < k:
                for i in range(len(mats)):
                    nxt.append(
                        (
                            word + (i,),
                            compose_vm(plain, mats[i]),
                            compose_vm(compose_vm(dressed, mats[i]), r),
                        )
                    )
        frontier = nxt
    return True, None

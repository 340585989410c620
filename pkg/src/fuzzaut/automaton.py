"""Fuzzy automata and recognizers.

Words are tuples of alphabet indices; the empty word is the empty tuple.
Letter names only matter at the document/CLI boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    AlphabetMismatch,
    DimensionMismatch,
    LatticeMismatch,
    SizeLimitExceeded,
    UnknownLetter,
    ValidationError,
)
from .lattice import Lattice
from .relation import FuzzyMatrix, FuzzyVector, compose, compose_mv, compose_vm, overlap, transpose

Word = tuple[int, ...]
EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class FuzzyAutomaton:
    lattice: Lattice
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    delta: dict[str, FuzzyMatrix]

    def __post_init__(self):
        n = len(self.states)
        if n == 0:
            raise ValidationError("automaton needs at least one state")
        if len(set(self.states)) != n:
            raise ValidationError("state names must be unique")
        if not self.alphabet:
            raise ValidationError("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValidationError("letters must be unique")
        if set(self.delta) != set(self.alphabet):
            raise ValidationError("delta must map exactly the alphabet letters")
        for x in self.alphabet:
            m = self.delta[x]
            if m.lattice != self.lattice:
                raise LatticeMismatch(f"transition matrix for {x!r} uses a different lattice")
            if (m.rows, m.cols) != (n, n):
                raise DimensionMismatch(f"transition matrix for {x!r} must be {n}x{n}")

    @property
    def n(self) -> int:
        return len(self.states)

    def matrix(self, letter_index: int) -> FuzzyMatrix:
        try:
            return self.delta[self.alphabet[letter_index]]
        except IndexError:
            raise UnknownLetter(f"letter index {letter_index} out of range") from None


@dataclass(frozen=True)
class FuzzyRecognizer:
    automaton: FuzzyAutomaton
    sigma: FuzzyVector
    tau: FuzzyVector

    def __post_init__(self):
        n = self.automaton.n
        for name, v in (("sigma", self.sigma), ("tau", self.tau)):
            if v.lattice != self.automaton.lattice:
                raise LatticeMismatch(f"{name} uses a different lattice")
            if len(v) != n:
                raise DimensionMismatch(f"{name} must have length {n}")

    @property
    def lattice(self) -> Lattice:
        return self.automaton.lattice

    @property
    def states(self) -> tuple[str, ...]:
        return self.automaton.states

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.automaton.alphabet

    @property
    def delta(self) -> dict[str, FuzzyMatrix]:
        return self.automaton.delta

    @property
    def n(self) -> int:
        return self.automaton.n

    def matrix(self, letter_index: int) -> FuzzyMatrix:
        return self.automaton.matrix(letter_index)


Machine = Union[FuzzyAutomaton, FuzzyRecognizer]


def underlying(machine: Machine) -> FuzzyAutomaton:
    return machine.automaton if isinstance(machine, FuzzyRecognizer) else machine


def check_word(machine: Machine, word: Word) -> None:
    k = len(underlying(machine).alphabet)
    for i in word:
        if not 0 <= i < k:
            raise UnknownLetter(f"letter index {i} out of range for alphabet of size {k}")


def transition_of_word(machine: Machine, word: Word) -> FuzzyMatrix:
    """delta_u: identity for the empty word, composed letter matrices otherwise."""
    aut = underlying(machine)
    check_word(machine, word)
    result = FuzzyMatrix.identity(aut.lattice, aut.n)
    for i in word:
        result = compose(result, aut.matrix(i))
    return result


def recognize(rec: FuzzyRecognizer, word: Word) -> Fraction:
    """Membership degree of the word: sigma o delta_u o tau."""
    check_word(rec, word)
    v = rec.sigma
    for i in word:
        v = compose_vm(v, rec.matrix(i))
    return overlap(v, rec.tau)


def generate(rec: FuzzyRecognizer, word: Word) -> Fraction:
    """Degree to which the word drives some initial state anywhere at all."""
    check_word(rec, word)
    v = rec.sigma
    for i in word:
        v = compose_vm(v, rec.matrix(i))
    acc = rec.lattice.zero
    for x in v.entries:
        acc = rec.lattice.join(acc, x)
    return acc


def reverse(machine: Machine) -> Machine:
    """Transpose every transition matrix; swap sigma and tau on recognizers."""
    aut = underlying(machine)
    rev = FuzzyAutomaton(
        aut.lattice,
        aut.states,
        aut.alphabet,
        {x: transpose(m) for x, m in aut.delta.items()},
    )
    if isinstance(machine, FuzzyRecognizer):
        return FuzzyRecognizer(rev, machine.tau, machine.sigma)
    return rev


# ---------------------------------------------------------------------------
# isomorphism


def _fingerprints(machine: Machine):
    aut = underlying(machine)
    n = aut.n
    fps = []
    for i in range(n):
        parts = []
        if isinstance(machine, FuzzyRecognizer):
            parts.append(("sigma", machine.sigma.entries[i]))
            parts.append(("tau", machine.tau.entries[i]))
        for x in aut.alphabet:
            m = aut.delta[x]
            parts.append((x, m[i, i], tuple(sorted(m.row(i))), tuple(sorted(m.col(i)))))
        fps.append(tuple(parts))
    return fps


def are_isomorphic(a: Machine, b: Machine, max_states: int = 12) -> tuple[int, ...] | None:
    """Exact isomorphism decision by backtracking with row-signature pruning.

    Returns a state bijection as a tuple phi with phi[i] = matching index in b,
    or None.  Refuses above max_states rather than approximating.
    """
    if isinstance(a, FuzzyRecognizer) != isinstance(b, FuzzyRecognizer):
        raise ValidationError("cannot compare an automaton with a recognizer")
    aut_a, aut_b = underlying(a), underlying(b)
    if aut_a.lattice != aut_b.lattice:
        raise LatticeMismatch("isomorphism needs a shared lattice")
    if aut_a.alphabet != aut_b.alphabet:
        raise AlphabetMismatch(f"{aut_a.alphabet} vs {aut_b.alphabet}")
    n = aut_a.n
    if n != aut_b.n:
        return None
    if n > max_states:
        raise SizeLimitExceeded(f"isomorphism capped at {max_states} states, got {n}")

    fps_a, fps_b = _fingerprints(a), _fingerprints(b)
    if sorted(fps_a) != sorted(fps_b):
        return None
    candidates = [[j for j in range(n) if fps_b[j] == fps_a[i]] for i in range(n)]
    mats_a = [aut_a.delta[x] for x in aut_a.alphabet]
    mats_b = [aut_b.delta[x] for x in aut_b.alphabet]

    # assign states in order of fewest candidates first
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    phi: dict[int, int] = {}
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for ma, mb in zip(mats_a, mats_b):
                if ma[i, i] != mb[j, j]:
                    ok = False
                    break
                for k, l in phi.items():
                    if ma[i, k] != mb[j, l] or ma[k, i] != mb[l, j]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            phi[i] = j
            used[j] = True
            if extend(pos + 1):
                return True
            del phi[i]
            used[j] = False
        return False

    if not extend(0):
        return None
    return tuple(phi[i] for i in range(n))


# ---------------------------------------------------------------------------
# accessible fuzzy subset construction


@dataclass(frozen=True)
class FuzzyStateFamily:
    """All distinct fuzzy state sets reachable from sigma (forward) or tau (reverse).

    Members are (witness word, vector) in length-then-lexicographic discovery
    order.  complete means the family is closed under every letter; truncated
    means a cap stopped exploration before closure could be verified.
    """

    direction: str
    members: tuple[tuple[Word, FuzzyVector], ...]
    complete: bool
    truncated: bool

    def vectors(self) -> list[FuzzyVector]:
        return [v for _, v in self.members]


def reachable_state_family(
    rec: FuzzyRecognizer,
    direction: str,
    max_states: int = 4096,
    max_depth: int = 64,
) -> FuzzyStateFamily:
    """Breadth-first closure of {sigma} under f -> f o delta_x (forward) or of
    {tau} under f -> delta_x o f (reverse), deduplicated by exact equality.
    """
    if direction not in ("forward", "reverse"):
        raise ValidationError(f"direction must be 'forward' or 'reverse', got {direction!r}")
    if max_states < 1:
        raise ValidationError("max_states must be at least 1")
    aut = rec.automaton
    mats = [aut.delta[x] for x in aut.alphabet]
    start = rec.sigma if direction == "forward" else rec.tau

    seen: dict[FuzzyVector, Word] = {start: EMPTY_WORD}
    members: list[tuple[Word, FuzzyVector]] = [(EMPTY_WORD, start)]
    frontier: list[tuple[Word, FuzzyVector]] = [(EMPTY_WORD, start)]
    truncated = False
    depth = 0

    while frontier and not truncated:
        if depth >= max_depth:
            truncated = True
            break
        nxt: list[tuple[Word, FuzzyVector]] = []
        if direction == "forward":
            expansions = ((w + (xi,), compose_vm(f, mats[xi]))
                          for w, f in frontier for xi in range(len(mats)))
        else:
            # prepend the letter: tau_{x u} = delta_x o tau_u; letter-outer
            # iteration keeps witnesses in length-then-lex order
            expansions = (((xi,) + w, compose_mv(mats[xi], f))
                          for xi in range(len(mats)) for w, f in frontier)
        for word, g in expansions:
            if g in seen:
                continue
            if len(seen) >= max_states:
                truncated = True
                break
            seen[g] = word
            members.append((word, g))
            nxt.append((word, g))
        frontier = nxt
        depth += 1

    return FuzzyStateFamily(direction, tuple(members), complete=not truncated, truncated=truncated)


def recognize_via_family(
    rec: FuzzyRecognizer, family: FuzzyStateFamily, word: Word
) -> Fraction:
    """Evaluate recognition through a complete forward family (test oracle)."""
    if family.direction != "forward" or not family.complete:
        raise ValidationError("needs a complete forward family")
    table = {v: v for _, v in family.members}
    mats = [rec.automaton.delta[x] for x in rec.alphabet]
    v = rec.sigma
    for i in word:
        v = table[compose_vm(v, mats[i])]
    return overlap(v, rec.tau)


def words_up_to(alphabet_size: int, max_len: int):
    """All words of length <= max_len in length-then-lexicographic order."""
    for length in range(max_len + 1):
        yield from itertools.product(range(alphabet_size), repeat=length)

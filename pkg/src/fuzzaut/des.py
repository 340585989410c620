"""Fuzzy discrete-event-system layer: composition, projection, blocking.

Blocking compares the prefix-closure of the recognized language against the
generated language.  The prefix-closure quantifies over all continuation
words, so a finite tool can only decide it when the reachable fuzzy state
sets are finitely many; verdicts are three-valued so the tool never
overclaims on lattices where that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automaton import (
    FuzzyAutomaton,
    FuzzyRecognizer,
    Word,
    check_word,
    reachable_state_family,
)
from .errors import (
    EmptySharedAlphabet,
    LatticeMismatch,
    NotASuperset,
    ValidationError,
)
from .lattice import ZERO
from .relation import FuzzyMatrix, FuzzyVector, compose, compose_vm, join, overlap


@dataclass(frozen=True)
class ComposedRecognizer:
    """A product-space recognizer plus the bookkeeping of where it came from."""

    recognizer: FuzzyRecognizer
    left_states: tuple[str, ...]
    right_states: tuple[str, ...]
    shared_alphabet: tuple[str, ...]
    private_left: tuple[str, ...]
    private_right: tuple[str, ...]


def _composite_states(a: FuzzyRecognizer, b: FuzzyRecognizer) -> tuple[str, ...]:
    # row-major over (left, right): the right component varies fastest
    return tuple(f"({p},{q})" for p in a.states for q in b.states)


def _tensor_vector(a: FuzzyVector, b: FuzzyVector, lat) -> FuzzyVector:
    return FuzzyVector(
        lat, tuple(lat.otimes(x, y) for x in a.entries for y in b.entries)
    )


def product_compose(a: FuzzyRecognizer, b: FuzzyRecognizer) -> ComposedRecognizer:
    """Synchronous product over the shared alphabet X intersect Y."""
    if a.lattice != b.lattice:
        raise LatticeMismatch("product needs a shared lattice")
    shared = tuple(x for x in a.alphabet if x in set(b.alphabet))
    if not shared:
        raise EmptySharedAlphabet("product needs a nonempty shared alphabet")
    return _compose(a, b, alphabet=shared, shared=set(shared))


def parallel_compose(a: FuzzyRecognizer, b: FuzzyRecognizer) -> ComposedRecognizer:
    """Synchronize on shared letters, interleave on private ones."""
    if a.lattice != b.lattice:
        raise LatticeMismatch("parallel composition needs a shared lattice")
    bset = set(b.alphabet)
    aset = set(a.alphabet)
    alphabet = a.alphabet + tuple(y for y in b.alphabet if y not in aset)
    return _compose(a, b, alphabet=alphabet, shared=aset & bset)


def _compose(a: FuzzyRecognizer, b: FuzzyRecognizer, alphabet, shared) -> ComposedRecognizer:
    lat = a.lattice
    na, nb = a.n, b.n
    aset, bset = set(a.alphabet), set(b.alphabet)
    delta = {}
    for x in alphabet:
        flat = []
        in_a, in_b = x in aset, x in bset
        ma = a.delta[x] if in_a else None
        mb = b.delta[x] if in_b else None
        for p in range(na):
            for q in range(nb):
                for p2 in range(na):
                    for q2 in range(nb):
                        if x in shared:
                            flat.append(lat.otimes(ma[p, p2], mb[q, q2]))
                        elif in_a:
                            flat.append(ma[p, p2] if q == q2 else ZERO)
                        else:
                            flat.append(mb[q, q2] if p == p2 else ZERO)
        delta[x] = FuzzyMatrix(lat, na * nb, na * nb, tuple(flat))
    aut = FuzzyAutomaton(lat, _composite_states(a, b), tuple(alphabet), delta)
    rec = FuzzyRecognizer(
        aut,
        _tensor_vector(a.sigma, b.sigma, lat),
        _tensor_vector(a.tau, b.tau, lat),
    )
    return ComposedRecognizer(
        recognizer=rec,
        left_states=a.states,
        right_states=b.states,
        shared_alphabet=tuple(x for x in alphabet if x in shared),
        private_left=tuple(x for x in alphabet if x in aset and x not in shared),
        private_right=tuple(x for x in alphabet if x in bset and x not in shared),
    )


def input_extension(rec: FuzzyRecognizer, alphabet: tuple[str, ...]) -> FuzzyRecognizer:
    """Extend to a superset alphabet; new letters act as the identity."""
    if not set(rec.alphabet) <= set(alphabet):
        raise NotASuperset(f"{alphabet} does not contain {rec.alphabet}")
    if len(set(alphabet)) != len(alphabet):
        raise ValidationError("letters must be unique")
    lat = rec.lattice
    n = rec.n
    ident = FuzzyMatrix.identity(lat, n)
    delta = {x: (rec.delta[x] if x in rec.delta else ident) for x in alphabet}
    aut = FuzzyAutomaton(lat, rec.states, tuple(alphabet), delta)
    return FuzzyRecognizer(aut, rec.sigma, rec.tau)


def natural_projection(
    word: Word, from_alphabet: tuple[str, ...], to_alphabet: tuple[str, ...]
) -> Word:
    """Delete the letters outside the smaller alphabet; reindex the rest."""
    if not set(to_alphabet) <= set(from_alphabet):
        raise NotASuperset(f"{from_alphabet} does not contain {to_alphabet}")
    index = {x: i for i, x in enumerate(to_alphabet)}
    out = []
    for i in word:
        name = from_alphabet[i]
        if name in index:
            out.append(index[name])
    return tuple(out)


# ---------------------------------------------------------------------------
# prefix closure and blocking


def bounded_reach_matrix(rec: FuzzyRecognizer, horizon: int) -> FuzzyMatrix:
    """T_h = join of delta_v over all words v with |v| <= h.

    Composition distributes over joins, so f o T_h o tau equals the join of
    f o delta_v o tau over the same words.  Stops early on stabilization,
    in which case the matrix covers all of X*.
    """
    aut = rec.automaton
    ident = FuzzyMatrix.identity(aut.lattice, aut.n)
    current = ident
    for _ in range(horizon):
        stepped = ident
        for x in aut.alphabet:
            stepped = join(stepped, compose(aut.delta[x], current))
        if stepped == current:
            return current
        current = stepped
    return current


def prefix_closure_at(rec: FuzzyRecognizer, word: Word, horizon: int) -> Fraction:
    """join over |v| <= horizon of L(rec)(word . v): a lower bound of the
    prefix-closure, exact whenever the supremum is attained in the horizon."""
    if horizon < 0:
        raise ValidationError("horizon must be nonnegative")
    check_word(rec, word)
    v = rec.sigma
    for i in word:
        v = compose_vm(v, rec.matrix(i))
    reach = bounded_reach_matrix(rec, horizon)
    return overlap(compose_vm(v, reach), rec.tau)


@dataclass(frozen=True)
class BlockingVerdict:
    verdict: str  # 'nonblocking' | 'blocking' | 'undetermined'
    witness: Word | None

    @property
    def decided(self) -> bool:
        return self.verdict != "undetermined"


def _sup_value(lat, vec: FuzzyVector) -> Fraction:
    acc = ZERO
    for x in vec.entries:
        acc = lat.join(acc, x)
    return acc


def _closure_from(rec: FuzzyRecognizer, start: FuzzyVector, cap: int):
    """BFS closure of one fuzzy state set under all letters; None if capped."""
    mats = [rec.automaton.delta[x] for x in rec.alphabet]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for m in mats:
                g = compose_vm(f, m)
                if g not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return seen


def check_blocking(
    rec: FuzzyRecognizer,
    horizon: int,
    max_states: int = 4096,
    max_depth: int = 64,
) -> BlockingVerdict:
    """Decide whether the prefix-closure of L falls strictly below L_g.

    When the forward state family closes, the check is exact for every word
    (the horizon is auto-tightened to the family size).  Otherwise words up
    to the horizon are inspected and a gap is only reported when the
    continuation closure from that word is finite, so a 'blocking' verdict
    is always certified; anything short of a full decision comes back
    'undetermined'.
    """
    if horizon < 1:
        raise ValidationError("horizon must be at least 1")
    lat = rec.lattice
    family = reachable_state_family(rec, "forward", max_states=max_states, max_depth=max_depth)

    if family.complete:
        m = len(family.members)
        reach = bounded_reach_matrix(rec, m)
        for word, vec in family.members:
            lg = _sup_value(lat, vec)
            lbar = overlap(compose_vm(vec, reach), rec.tau)
            if lbar < lg:
                return BlockingVerdict("blocking", word)
        return BlockingVerdict("nonblocking", None)

    # truncated family: certified gaps only, never a nonblocking claim
    for word, vec in family.members:
        if len(word) > horizon:
            break
        closure = _closure_from(rec, vec, cap=max_states)
        if closure is None:
            continue
        lbar = ZERO
        for g in closure:
            lbar = lat.join(lbar, overlap(g, rec.tau))
        lg = _sup_value(lat, vec)
        if lbar < lg:
            return BlockingVerdict("blocking", word)
    return BlockingVerdict("undetermined", None)


def conflict_check(
    a: FuzzyRecognizer,
    b: FuzzyRecognizer,
    horizon: int,
    max_states: int = 4096,
    max_depth: int = 64,
) -> BlockingVerdict:
    """Blocking analysis of the parallel composition of a and b."""
    composed = parallel_compose(a, b)
    return check_blocking(
        composed.recognizer, horizon, max_states=max_states, max_depth=max_depth
    )

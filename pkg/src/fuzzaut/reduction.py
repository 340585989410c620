"""Invariant quasi-order constructions and afterset quotients.

The reduction methods, by tag:

    ri / li       greatest right/left invariant fuzzy quasi-order, by the
                  descending iteration R <- R meet R^r (resp. R^l)
    rie / lie     equivalence variants of the same iteration
    cri / cli_crisp   crisp variants: R <- R meet crisp_part(R^r / R^l)
    sri / sli     strongly invariant, closed form (no iteration)
    wri / wli     weakly invariant, via the reachable state family
    wrie / wlie   equivalence variants of the weak construction

On a recognizer each right-side start is first met with the constraint
quasi-order R^tau (largest R with R o tau = tau); left-side starts with
R_sigma.  Equivalence methods use the symmetrized constraint.

Iterations over locally finite lattices terminate; over the product lattice
they may not, in which case the report carries the last iterate and the
running infimum instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .automaton import (
    FuzzyAutomaton,
    FuzzyRecognizer,
    Machine,
    are_isomorphic,
    reachable_state_family,
    underlying,
)
from .errors import ContainmentViolated, EquivalenceRequired, ValidationError
from .lattice import ONE
from .relation import (
    FuzzyMatrix,
    FuzzyVector,
    aftersets,
    compose,
    compose_mv,
    compose_vm,
    crisp_part,
    foresets,
    from_fuzzy_set_left,
    from_fuzzy_set_right,
    is_quasi_order,
    leq,
    meet,
    require_quasi_order,
    transpose,
)

ITERATIVE_METHODS = ("ri", "li", "rie", "lie", "cri", "cli_crisp")
CLOSED_FORM_METHODS = ("sri", "sli")
WEAK_METHODS = ("wri", "wli", "wrie", "wlie")
METHODS = ITERATIVE_METHODS + CLOSED_FORM_METHODS + WEAK_METHODS

_RIGHT_SIDE = {"ri", "rie", "cri", "sri", "wri", "wrie"}
_EQUIVALENCE = {"rie", "lie", "wrie", "wlie"}
_CRISP = {"cri", "cli_crisp"}


@dataclass(frozen=True)
class ReductionReport:
    method: str
    iterates: int
    converged: bool
    quasi_order: FuzzyMatrix
    quotient: Machine
    state_trace: tuple[int, int]
    iterate_infimum: FuzzyMatrix


# ---------------------------------------------------------------------------
# one-step operators


def r_step(machine: Machine, r: FuzzyMatrix) -> FuzzyMatrix:
    """R^r(a,b) = meet over letters x and states c of (dx o R)(b,c) -> (dx o R)(a,c)."""
    return _step(machine, r, side="right", kernel="residuum")


def l_step(machine: Machine, r: FuzzyMatrix) -> FuzzyMatrix:
    """R^l(a,b) = meet over x, c of (R o dx)(c,a) -> (R o dx)(c,b)."""
    return _step(machine, r, side="left", kernel="residuum")


def req_step(machine: Machine, e: FuzzyMatrix) -> FuzzyMatrix:
    """Equivalence kernel: biresiduum of rows of dx o E."""
    return _step(machine, e, side="right", kernel="biresiduum")


def leq_step(machine: Machine, e: FuzzyMatrix) -> FuzzyMatrix:
    return _step(machine, e, side="left", kernel="biresiduum")


def _step(machine: Machine, r: FuzzyMatrix, side: str, kernel: str) -> FuzzyMatrix:
    aut = underlying(machine)
    require_quasi_order(r)
    if r.rows != aut.n:
        raise ValidationError(f"relation is {r.rows}x{r.cols}, automaton has {aut.n} states")
    lat = aut.lattice
    op = lat.residuum if kernel == "residuum" else lat.biresiduum
    composed = {
        x: compose(aut.delta[x], r) if side == "right" else compose(r, aut.delta[x])
        for x in aut.alphabet
    }
    return _meet_of_implications(lat, aut.n, composed.values(), side, op)


def _meet_of_implications(lat, n, matrices, side, op) -> FuzzyMatrix:
    # right: out(a,b) = meet_c op(M(b,c), M(a,c)) over row vectors
    # left:  out(a,b) = meet_c op(M(c,a), M(c,b)) over column vectors
    out = [ONE] * (n * n)
    for m in matrices:
        lines = [m.row(i) for i in range(n)] if side == "right" else [m.col(i) for i in range(n)]
        for a in range(n):
            la = lines[a]
            for b in range(n):
                lb = lines[b]
                acc = out[a * n + b]
                for c in range(n):
                    v = op(lb[c], la[c]) if side == "right" else op(la[c], lb[c])
                    if v < acc:
                        acc = v
                out[a * n + b] = acc
    return FuzzyMatrix(lat, n, n, tuple(out))


def strongly_invariant_kernel(machine: Machine, side: str) -> FuzzyMatrix:
    """Greatest R with R o dx = dx (right) or dx o R = dx (left); no iteration."""
    aut = underlying(machine)
    lat = aut.lattice
    return _meet_of_implications(
        lat, aut.n, [aut.delta[x] for x in aut.alphabet], side, lat.residuum
    )


# ---------------------------------------------------------------------------
# invariance predicates (exact equalities, used by tests and callers)


def is_right_invariant(machine: Machine, r: FuzzyMatrix) -> bool:
    aut = underlying(machine)
    require_quasi_order(r)
    for x in aut.alphabet:
        dx_r = compose(aut.delta[x], r)
        if compose(r, dx_r) != dx_r:
            return False
    if isinstance(machine, FuzzyRecognizer):
        if compose_mv(r, machine.tau) != machine.tau:
            return False
    return True


def is_left_invariant(machine: Machine, r: FuzzyMatrix) -> bool:
    aut = underlying(machine)
    require_quasi_order(r)
    for x in aut.alphabet:
        r_dx = compose(r, aut.delta[x])
        if compose(r_dx, r) != r_dx:
            return False
    if isinstance(machine, FuzzyRecognizer):
        if compose_vm(machine.sigma, r) != machine.sigma:
            return False
    return True


def is_strongly_right_invariant(machine: Machine, r: FuzzyMatrix) -> bool:
    aut = underlying(machine)
    require_quasi_order(r)
    for x in aut.alphabet:
        if compose(r, aut.delta[x]) != aut.delta[x]:
            return False
    if isinstance(machine, FuzzyRecognizer):
        if compose_mv(r, machine.tau) != machine.tau:
            return False
    return True


def is_strongly_left_invariant(machine: Machine, r: FuzzyMatrix) -> bool:
    aut = underlying(machine)
    require_quasi_order(r)
    for x in aut.alphabet:
        if compose(aut.delta[x], r) != aut.delta[x]:
            return False
    if isinstance(machine, FuzzyRecognizer):
        if compose_vm(machine.sigma, r) != machine.sigma:
            return False
    return True


# ---------------------------------------------------------------------------
# constraint quasi-orders on recognizers


def tau_constraint(rec: FuzzyRecognizer) -> FuzzyMatrix:
    """R^tau: greatest R with R o tau = tau."""
    return from_fuzzy_set_left(rec.tau)


def sigma_constraint(rec: FuzzyRecognizer) -> FuzzyMatrix:
    """R_sigma: greatest R with sigma o R = sigma."""
    return from_fuzzy_set_right(rec.sigma)


def _initial_relation(machine: Machine, method: str, start: FuzzyMatrix | None) -> FuzzyMatrix:
    aut = underlying(machine)
    n = aut.n
    if start is None:
        current = FuzzyMatrix.universal(aut.lattice, n)
    else:
        if start.lattice != aut.lattice or start.rows != n or not start.is_square:
            raise ValidationError("start relation does not match the automaton")
        require_quasi_order(start)
        if method in _EQUIVALENCE and not is_quasi_order(start).symmetric:
            raise EquivalenceRequired(f"method {method} needs an equivalence start")
        current = start
    if isinstance(machine, FuzzyRecognizer):
        bound = tau_constraint(machine) if method in _RIGHT_SIDE else sigma_constraint(machine)
        if method in _EQUIVALENCE:
            # an equivalence below R^tau is below its symmetrization too
            bound = meet(bound, transpose(bound))
        current = meet(current, bound)
    if method in _CRISP:
        current = crisp_part(current)
    return current


# ---------------------------------------------------------------------------
# the main driver


def greatest_invariant(
    machine: Machine,
    method: str,
    start: FuzzyMatrix | None = None,
    max_iter: int = 256,
    max_states: int = 4096,
    max_depth: int = 64,
) -> ReductionReport:
    """Greatest quasi-order of the given kind below start (default: universal).

    Iterative methods refine until two consecutive iterates are equal; the
    comparison is exact structural equality, there is no tolerance.  If the
    cap is hit first the report has converged=False and carries the last
    iterate together with the running infimum of all iterates.
    """
    if method not in METHODS:
        raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}")
    if method in WEAK_METHODS:
        if not isinstance(machine, FuzzyRecognizer):
            raise ValidationError(f"method {method} needs a recognizer")
        side = "right" if method in _RIGHT_SIDE else "left"
        return greatest_weakly_invariant(
            machine,
            side,
            max_states=max_states,
            max_depth=max_depth,
            equivalence=method in _EQUIVALENCE,
            start=start,
        )

    current = _initial_relation(machine, method, start)
    if method in CLOSED_FORM_METHODS:
        kernel = strongly_invariant_kernel(machine, "right" if method == "sri" else "left")
        result = meet(current, kernel)
        return _report(machine, method, result, iterates=1, converged=True, infimum=result)

    step: Callable[[Machine, FuzzyMatrix], FuzzyMatrix] = {
        "ri": r_step,
        "li": l_step,
        "rie": req_step,
        "lie": leq_step,
        "cri": lambda m, r: crisp_part(r_step(m, r)),
        "cli_crisp": lambda m, r: crisp_part(l_step(m, r)),
    }[method]

    iterates = 1
    infimum = current
    converged = False
    while iterates < max_iter:
        refined = meet(current, step(machine, current))
        iterates += 1
        infimum = meet(infimum, refined)
        if refined == current:
            converged = True
            break
        current = refined
    return _report(machine, method, current, iterates, converged, infimum)


def greatest_strongly_invariant(machine: Machine, side: str) -> FuzzyMatrix:
    """Closed-form greatest strongly invariant quasi-order (with the recognizer
    constraint met in when sigma/tau are present)."""
    if side not in ("right", "left"):
        raise ValidationError(f"side must be 'right' or 'left', got {side!r}")
    kernel = strongly_invariant_kernel(machine, side)
    if isinstance(machine, FuzzyRecognizer):
        bound = tau_constraint(machine) if side == "right" else sigma_constraint(machine)
        kernel = meet(kernel, bound)
    return kernel


def greatest_weakly_invariant(
    rec: FuzzyRecognizer,
    side: str,
    max_states: int = 4096,
    max_depth: int = 64,
    equivalence: bool = False,
    start: FuzzyMatrix | None = None,
) -> ReductionReport:
    """Meet of the per-word constraints tau_u(b) -> tau_u(a) (right) or
    sigma_u(a) -> sigma_u(b) (left), over the reachable state family.

    If the family fails to close within the caps the result is a sound
    over-approximation (every discovered vector still constrains) and the
    report says converged=False.
    """
    if side not in ("right", "left"):
        raise ValidationError(f"side must be 'right' or 'left', got {side!r}")
    if not isinstance(rec, FuzzyRecognizer):
        raise ValidationError("weakly invariant quasi-orders need a recognizer")
    method = ("wri" if side == "right" else "wli") + ("e" if equivalence else "")
    direction = "reverse" if side == "right" else "forward"
    family = reachable_state_family(rec, direction, max_states=max_states, max_depth=max_depth)

    n = rec.n
    current = FuzzyMatrix.universal(rec.lattice, n)
    if start is not None:
        require_quasi_order(start)
        if equivalence and not is_quasi_order(start).symmetric:
            raise EquivalenceRequired(f"method {method} needs an equivalence start")
        current = meet(current, start)
    for _, vec in family.members:
        if equivalence:
            piece = meet(from_fuzzy_set_left(vec), from_fuzzy_set_right(vec))
        elif side == "right":
            piece = from_fuzzy_set_left(vec)
        else:
            piece = from_fuzzy_set_right(vec)
        current = meet(current, piece)
    return _report(
        rec,
        method,
        current,
        iterates=len(family.members),
        converged=family.complete,
        infimum=current,
    )


def _report(machine, method, relation, iterates, converged, infimum) -> ReductionReport:
    quotient = afterset_quotient(machine, relation)
    n_after = underlying(quotient).n
    return ReductionReport(
        method=method,
        iterates=iterates,
        converged=converged,
        quasi_order=relation,
        quotient=quotient,
        state_trace=(underlying(machine).n, n_after),
        iterate_infimum=infimum,
    )


# ---------------------------------------------------------------------------
# quotients


def _quotient_from_reps(machine: Machine, r: FuzzyMatrix, reps: list[int]) -> Machine:
    aut = underlying(machine)
    lat = aut.lattice
    names = tuple(f"Q{aut.states[i]}" for i in reps)
    delta = {}
    for x in aut.alphabet:
        m = compose(compose(r, aut.delta[x]), r)
        rows = tuple(m[a, b] for a in reps for b in reps)
        delta[x] = FuzzyMatrix(lat, len(reps), len(reps), rows)
    quotient_aut = FuzzyAutomaton(lat, names, aut.alphabet, delta)
    if isinstance(machine, FuzzyRecognizer):
        sigma_full = compose_vm(machine.sigma, r)
        tau_full = compose_mv(r, machine.tau)
        sigma = FuzzyVector(lat, tuple(sigma_full.entries[i] for i in reps))
        tau = FuzzyVector(lat, tuple(tau_full.entries[i] for i in reps))
        return FuzzyRecognizer(quotient_aut, sigma, tau)
    return quotient_aut


def afterset_quotient(machine: Machine, r: FuzzyMatrix) -> Machine:
    """The afterset automaton/recognizer: one state per distinct row of r,
    transitions (R o dx o R), initial sigma o R, terminal R o tau."""
    aut = underlying(machine)
    if r.rows != aut.n or not r.is_square:
        raise ValidationError(f"relation is {r.rows}x{r.cols}, automaton has {aut.n} states")
    reps = [i for i, _ in aftersets(r)]
    return _quotient_from_reps(machine, r, reps)


def foreset_quotient(machine: Machine, r: FuzzyMatrix) -> Machine:
    """Column-based construction; isomorphic to the afterset quotient."""
    aut = underlying(machine)
    if r.rows != aut.n or not r.is_square:
        raise ValidationError(f"relation is {r.rows}x{r.cols}, automaton has {aut.n} states")
    reps = [j for j, _ in foresets(r)]
    return _quotient_from_reps(machine, r, reps)


def quotient_quasi_order(r: FuzzyMatrix, s: FuzzyMatrix) -> FuzzyMatrix:
    """S/R on the afterset representatives of R, defined by S/R(R_a,R_b) = S(a,b)."""
    require_quasi_order(r)
    require_quasi_order(s)
    if (r.rows, r.cols) != (s.rows, s.cols):
        raise ContainmentViolated("relations must share dimensions")
    if not leq(r, s):
        raise ContainmentViolated("need R <= S entrywise")
    reps = [i for i, _ in aftersets(r)]
    flat = tuple(s[a, b] for a in reps for b in reps)
    return FuzzyMatrix(r.lattice, len(reps), len(reps), flat)


# ---------------------------------------------------------------------------
# alternate reductions


@dataclass(frozen=True)
class AlternateReduction:
    """Outcome of an alternating reduction schedule.

    reports holds one ReductionReport per executed round, including the final
    round whose quotient merely reproduced its input.  state_trace lists the
    sizes of the reduction chain itself (start first, ending at the reduct).
    stop_reason is one of 'isomorphic', 'single_state', 'max_rounds'.
    """

    schedule: str
    reports: tuple[ReductionReport, ...]
    reduct: Machine
    state_trace: tuple[int, ...]
    stop_reason: str


SCHEDULES = {
    "rl": ("ri", "li"),
    "lr": ("li", "ri"),
    "wrl": ("wri", "wli"),
    "wlr": ("wli", "wri"),
}


def alternate_reduce(
    machine: Machine,
    schedule: str,
    max_rounds: int = 16,
    max_iter: int = 256,
    max_states: int = 4096,
    max_depth: int = 64,
) -> AlternateReduction:
    """Alternate right- and left-side greatest invariant reductions.

    Stops when a round's quotient is isomorphic to its input, when a single
    state remains, or after max_rounds.  The round that witnessed the
    isomorphism stays in the report list; the reduct is the automaton the
    chain had reached before it.
    """
    if schedule not in SCHEDULES:
        raise ValidationError(f"unknown schedule {schedule!r}; expected one of {sorted(SCHEDULES)}")
    if schedule.startswith("w") and not isinstance(machine, FuzzyRecognizer):
        raise ValidationError(f"schedule {schedule} needs a recognizer")
    methods = SCHEDULES[schedule]

    current = machine
    trace = [underlying(machine).n]
    reports: list[ReductionReport] = []
    stop = "max_rounds"
    for round_index in range(max_rounds):
        if underlying(current).n == 1:
            stop = "single_state"
            break
        method = methods[round_index % 2]
        report = greatest_invariant(
            current, method, max_iter=max_iter, max_states=max_states, max_depth=max_depth
        )
        reports.append(report)
        quotient = report.quotient
        same_size = underlying(quotient).n == underlying(current).n
        if same_size and are_isomorphic(quotient, current) is not None:
            stop = "isomorphic"
            break
        current = quotient
        trace.append(underlying(current).n)
        if underlying(current).n == 1:
            stop = "single_state"
            break
    return AlternateReduction(schedule, tuple(reports), current, tuple(trace), stop)

"""Complete residuated lattices on [0,1] with exact rational arithmetic.

Five structures are supported, all linearly ordered by the rational order:

    boolean       carrier {0,1}, classical conjunction/implication
    godel         x*y = min(x,y),        x->y = 1 if x<=y else y
    product       x*y = x*y (Goguen),    x->y = 1 if x<=y else y/x
    lukasiewicz   x*y = max(x+y-1, 0),   x->y = min(1-x+y, 1)
    chain(n)      carrier {0, 1/n, ..., 1}, index arithmetic
                  a_k * a_l = a_max(k+l-n,0),  a_k -> a_l = a_min(n-k+l,n)

Values are `fractions.Fraction` in canonical reduced form, so every
operation is exact and fixpoint detection can use structural equality.
No floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LatticeValueError

ZERO = Fraction(0)
ONE = Fraction(1)

KINDS = ("boolean", "godel", "product", "lukasiewicz", "chain")


@dataclass(frozen=True)
class Lattice:
    """Descriptor selecting the residuated-lattice semantics of all values."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise LatticeValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind == "chain":
            if self.n is None or self.n < 1:
                raise LatticeValueError("chain lattice needs a positive level count n")
        elif self.n is not None:
            raise LatticeValueError(f"lattice kind {self.kind!r} takes no parameter n")

    # -- constructors ------------------------------------------------------

    @classmethod
    def boolean(cls) -> "Lattice":
        return cls("boolean")

    @classmethod
    def godel(cls) -> "Lattice":
        return cls("godel")

    @classmethod
    def product(cls) -> "Lattice":
        return cls("product")

    @classmethod
    def lukasiewicz(cls) -> "Lattice":
        return cls("lukasiewicz")

    @classmethod
    def chain(cls, n: int) -> "Lattice":
        return cls("chain", n)

    # -- carrier -----------------------------------------------------------

    @property
    def zero(self) -> Fraction:
        return ZERO

    @property
    def one(self) -> Fraction:
        return ONE

    def validate(self, x: Fraction) -> Fraction:
        """Check carrier membership; off-grid values are rejected, never snapped."""
        if not isinstance(x, Fraction):
            raise LatticeValueError(f"expected Fraction, got {type(x).__name__}")
        if x < ZERO or x > ONE:
            raise LatticeValueError(f"value {x} outside [0,1]")
        if self.kind == "boolean":
            if x != ZERO and x != ONE:
                raise LatticeValueError(f"value {x} not in the Boolean carrier {{0,1}}")
        elif self.kind == "chain":
            if (x * self.n).denominator != 1:
                raise LatticeValueError(f"value {x} not on the chain({self.n}) grid")
        return x

    def carrier_sample(self, points: int = 21) -> list[Fraction]:
        """An evenly spaced grid of carrier values (used by the law tests)."""
        if self.kind == "boolean":
            return [ZERO, ONE]
        if self.kind == "chain":
            return [Fraction(k, self.n) for k in range(self.n + 1)]
        step = points - 1
        return [Fraction(k, step) for k in range(points)]

    # -- operations --------------------------------------------------------

    def meet(self, x: Fraction, y: Fraction) -> Fraction:
        return x if x <= y else y

    def join(self, x: Fraction, y: Fraction) -> Fraction:
        return x if x >= y else y

    def otimes(self, x: Fraction, y: Fraction) -> Fraction:
        kind = self.kind
        if kind == "godel" or kind == "boolean":
            return x if x <= y else y
        if kind == "product":
            return x * y
        if kind == "lukasiewicz":
            z = x + y - ONE
            return z if z > ZERO else ZERO
        k = self._level(x) + self._level(y) - self.n
        return Fraction(k, self.n) if k > 0 else ZERO

    def residuum(self, x: Fraction, y: Fraction) -> Fraction:
        """The largest z with x*z <= y (adjoint of otimes)."""
        if x <= y:
            return ONE
        kind = self.kind
        if kind == "godel" or kind == "boolean":
            return y
        if kind == "product":
            return y / x
        if kind == "lukasiewicz":
            return ONE - x + y
        k = self.n - self._level(x) + self._level(y)
        return Fraction(k, self.n) if k < self.n else ONE

    def biresiduum(self, x: Fraction, y: Fraction) -> Fraction:
        return self.meet(self.residuum(x, y), self.residuum(y, x))

    def _level(self, x: Fraction) -> int:
        k = x * self.n
        if k.denominator != 1:
            raise LatticeValueError(f"value {x} not on the chain({self.n}) grid")
        return int(k)

    # -- text syntax -------------------------------------------------------

    def parse(self, text: str) -> Fraction:
        """Parse "p/q", a decimal literal, "0" or "1" into a carrier value."""
        try:
            x = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise LatticeValueError(f"cannot parse value {text!r}: {exc}") from None
        return self.validate(x)

    def format(self, x: Fraction) -> str:
        """Canonical text form: reduced "p/q", or "0"/"1"/integer-free numerator."""
        return str(x)

    def describe(self) -> str:
        return f"chain({self.n})" if self.kind == "chain" else self.kind

from dataclasses import dataclass
from typing import FrozenSet, Tuple

from app.modules.frontends.ltl import LtlFormula


@dataclass(frozen=True)
class Closure:
    """Positive subformulas of a desugared formula, children before parents.

    ``elementary`` lists the variables and temporal formulas; an atom is an
    assignment to them, the remaining entries are Boolean combinations whose
    value follows. ``temporal`` is the X/F/U part of ``elementary``.
    """

    formula: LtlFormula
    nodes: Tuple[LtlFormula, ...]
    elementary: Tuple[LtlFormula, ...]
    temporal: Tuple[LtlFormula, ...]
    variables: Tuple[str, ...]


@dataclass(frozen=True)
class Atom:
    """A consistent truth assignment over the closure.

    ``holds`` is the set of closure nodes that are true; ``letter`` is the set of
    variables it makes true; ``now`` is the truth of the temporal formulas and
    ``required`` is what any predecessor must assign to them.
    """

    holds: FrozenSet[LtlFormula]
    letter: FrozenSet[str]
    now: Tuple[bool, ...]
    required: Tuple[bool, ...]

    @property
    def is_final(self) -> bool:
        return not any(self.now)

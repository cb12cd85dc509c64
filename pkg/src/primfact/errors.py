"""Exception types shared across the package.

Exit-code / HTTP mapping (see cli and service modules): UsageError -> exit 1
(HTTP 400), verification failure -> exit 2, BudgetExceededError -> exit 3
(HTTP 503).  CentralityError and NonIntegralResultError indicate broken
internal invariants, never bad user input.
"""


class UsageError(ValueError):
    """Malformed user input: bad permutation/partition text, size mismatch."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search hit its node budget.  Loud, never a truncation."""

    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"search budget exceeded: {nodes} nodes > limit {budget}")


class CentralityError(RuntimeError):
    """A group-algebra vector expected to be central is not.

    Carries two same-class permutations with differing coefficients.
    """

    def __init__(self, perm_a, perm_b, coeff_a, coeff_b):
        self.perm_a = perm_a
        self.perm_b = perm_b
        self.coeff_a = coeff_a
        self.coeff_b = coeff_b
        super().__init__(
            f"vector is not constant on a conjugacy class: "
            f"coefficient {coeff_a} at {perm_a} vs {coeff_b} at {perm_b}"
        )


class NonIntegralResultError(ArithmeticError):
    """A formula that must produce an integer produced a proper fraction.

    Raised only on internal transcription bugs, never on valid input.
    """

from dataclasses import dataclass

from .errors import BudgetExceeded


@dataclass(frozen=True)
class Budget:
    """Caps on explicit enumerations. Closed-form routes ignore these."""

    enumeration: int = 10**7   # Apery set / U_{j,0} size and DP table length
    genus: int = 10**7         # number of gaps materialized
    compositions: int = 10**7  # terms in the Bernoulli-formula sum

    def check(self, what: str, size: int, cap: int) -> None:
        if size > cap:
            raise BudgetExceeded(what, size, cap)


DEFAULT_BUDGET = Budget()

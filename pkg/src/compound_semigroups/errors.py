"""Exception hierarchy shared by every module."""


class SemigroupError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SemigroupError, ValueError):
    """Input failed a precondition."""


class LengthMismatch(ValidationError):
    def __init__(self, len_a: int, len_b: int):
        super().__init__(f"tuples differ in length: {len_a} != {len_b}")
        self.len_a = len_a
        self.len_b = len_b


class GcdViolation(ValidationError):
    """gcd(a_i, b_j) != 1 for a pair of indices that must be coprime (1-based)."""

    def __init__(self, i: int, j: int, gcd: int | None = None):
        msg = f"gcd(a_{i}, b_{j}) != 1"
        if gcd is not None:
            msg = f"gcd(a_{i}, b_{j}) = {gcd} != 1"
        super().__init__(msg)
        self.i = i
        self.j = j
        self.gcd = gcd


class IndexOutOfRange(ValidationError, IndexError):
    pass


class PerfectPowerViolation(ValidationError):
    """The shift c_i is a rational b_i-th power (1-based index)."""

    def __init__(self, i: int, c, b: int):
        super().__init__(f"c_{i} = {c} is a perfect power of a rational with exponent {b}")
        self.i = i
        self.c = c
        self.b = b


class GenusTooSmall(ValidationError):
    def __init__(self, genus: int):
        super().__init__(f"genus {genus} < 2: no higher-order Weierstrass points")
        self.genus = genus


class BudgetExceeded(SemigroupError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InternalError(SemigroupError, AssertionError):
    """Two routes that must agree did not. Always a bug, never a result."""

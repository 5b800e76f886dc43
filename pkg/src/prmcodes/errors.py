"""Exception types shared across the package."""


class PrmError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(PrmError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class OrderTooLarge(PrmError):
    def __init__(self, q, cap):
        super().__init__(f"field order {q} exceeds cap {cap}")
        self.q = q
        self.cap = cap


class NotPrimePower(PrmError):
    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class ZeroVector(PrmError):
    pass


class ZeroSpan(PrmError):
    pass


class DimensionMismatch(PrmError):
    pass


class AlreadyHyperplane(PrmError):
    pass


class NotHyperplane(PrmError):
    pass


class ArityMismatch(PrmError):
    pass


class NuOutOfRange(PrmError):
    def __init__(self, nu, m, q):
        super().__init__(f"nu={nu} outside [1, m(q-1)] = [1, {m * (q - 1)}] for m={m}, q={q}")
        self.nu = nu
        self.m = m
        self.q = q


class BudgetExceeded(PrmError):
    def __init__(self, required, budget):
        super().__init__(f"exhaustive search needs {required} codewords, budget is {budget}")
        self.required = required
        self.budget = budget


class TooManyPoints(PrmError):
    def __init__(self, t, q):
        super().__init__(f"t={t} points exceeds the limit q+1={q + 1}")
        self.t = t
        self.q = q


class DuplicatePoints(PrmError):
    pass


class NonvanishingSetMismatch(PrmError):
    pass


class WrongRegime(PrmError):
    pass

class NumberTheoryError(Exception):
    """Base class for every error raised by the library"""


class InputRangeError(NumberTheoryError, ValueError):
    """An argument lies outside the range an operation supports"""


class NotPrimeError(InputRangeError):
    """A parameter that must be prime is composite"""


class EmptyProgressionError(NumberTheoryError, ValueError):
    """gcd(r, m) > 1, so the progression r mod m holds at most one prime"""


class BudgetExceededError(NumberTheoryError):
    """A search window or sieve is larger than the configured budget"""


class MalformedSpecError(NumberTheoryError, ValueError):
    """A search spec or residue class violates its invariants"""


class FamilyParameterError(NumberTheoryError, ValueError):
    """Parameters do not describe a member of an exceptional family"""


class WitnessDomainError(NumberTheoryError, ValueError):
    """z is outside the class or range a witness can be extracted for"""


class TheoremViolationError(NumberTheoryError):
    """A certificate that the proofs guarantee could not be produced"""

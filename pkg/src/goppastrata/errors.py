"""Exception types raised across the package."""


class GoppaStrataError(Exception):
    """Base class for all library errors."""


class NonPrimeCharacteristic(GoppaStrataError, ValueError):
    pass


class ReducibleModulus(GoppaStrataError, ValueError):
    pass


class DivisionByZero(GoppaStrataError, ZeroDivisionError):
    pass


class FieldMismatch(GoppaStrataError, ValueError):
    pass


class IndexOutOfRange(GoppaStrataError, IndexError):
    pass


class LengthMismatch(GoppaStrataError, ValueError):
    pass


class UnsupportedFamily(GoppaStrataError, ValueError):
    pass


class EvalAtInfinity(GoppaStrataError, ValueError):
    pass


class NotSAG(GoppaStrataError, ValueError):
    """The degree m of G violates 2g - 2 < m < n."""


class DuplicatePoints(GoppaStrataError, ValueError):
    pass


class MultiplierNotFound(GoppaStrataError, RuntimeError):
    """No all-nonzero column multiplier vector makes the evaluation duals orthogonal."""


class TooLargeToExhaust(GoppaStrataError, RuntimeError):
    pass


class BudgetExceeded(TooLargeToExhaust):
    pass


class HeightUnknown(GoppaStrataError, ValueError):
    pass


class CapacityZero(GoppaStrataError, ValueError):
    """The code has t = 0, so no error is guaranteed correctable."""

"""Exception hierarchy shared by every module."""


class EdetError(Exception):
    """Base class for all library errors."""


class ParseError(EdetError, ValueError):
    pass


class RingMismatch(EdetError, TypeError):
    pass


class DivisionUnavailable(EdetError, ZeroDivisionError):
    """The ring cannot divide exactly by the requested integer."""


class MalformedTable(ParseError):
    pass


class OrderTooLarge(EdetError, ValueError):
    pass


class DimensionMismatch(EdetError, ValueError):
    pass


class PayloadLength(EdetError, ValueError):
    pass


class ExponentOutOfRange(EdetError, ValueError):
    pass


class InadmissibleMethod(EdetError, TypeError):
    """A determinant method was requested on a ring lacking the structure it needs."""


class RingNotCommutative(InadmissibleMethod):
    pass


class RingNotAssociative(InadmissibleMethod):
    pass


class RingNotPowerAssociative(InadmissibleMethod):
    pass


class InvalidPairing(EdetError, ValueError):
    """A counterexample claim was paired with a ring where it is meaningless."""


class SearchExhausted(EdetError):
    """No witness was found within the trial budget (inconclusive, not a proof)."""

    def __init__(self, claim, trials):
        super().__init__(f"no witness for {claim!r} within {trials} trials")
        self.claim = claim
        self.trials = trials

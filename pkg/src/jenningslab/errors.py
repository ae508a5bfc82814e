"""Exception hierarchy shared by all modules."""


class JenningsError(Exception):
    """Base class for every error raised by jenningslab."""


class OrderMismatchError(JenningsError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"truncation orders differ: {left} vs {right}")
        self.left = left
        self.right = right


class PrecisionError(JenningsError, ValueError):
    """A computation needs more known coefficients than the series carries."""


class DomainError(JenningsError, ValueError):
    """An argument is outside the range where the operation is defined."""


class BelowGuaranteeError(DomainError):
    """A degree lies below the bound c_k where commutator witnesses are guaranteed."""


class PairNotFoundError(JenningsError, LookupError):
    pass


class SeriesParseError(JenningsError, ValueError):
    pass

"""Exception hierarchy. Everything raised on bad input is a ``ValueError``."""


class ChanorderError(ValueError):
    pass


class DimensionError(ChanorderError):
    """Shapes or alphabets of the arguments do not fit together."""


class ChannelError(ChanorderError):
    """A matrix is not a valid row-stochastic channel."""


class EnumerationCapError(ChanorderError):
    """An exhaustive enumeration would exceed its configured cap."""


class NumericalError(ArithmeticError):
    """The LP kernel produced an answer that fails its own certificate check."""


class PreconditionError(ChanorderError):
    pass

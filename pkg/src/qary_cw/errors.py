"""Exception and warning types raised by the codec and the oracle."""


class UnsupportedLength(ValueError):
    """The information length ``k`` is not a positive power of ``q``."""


class WeightUnreachable(ValueError):
    """No weighting index brings the codeword to the requested weight."""


class InvalidPrefix(ValueError):
    """A Gray prefix decoded to an index outside ``[0, kq - 1]``."""


class ExhaustionCapExceeded(RuntimeError):
    """An exhaustive sweep would exceed the configured evaluation cap."""


class WeightOutsideBoundsWarning(UserWarning):
    """The target weight lies outside the closed-form weight interval."""

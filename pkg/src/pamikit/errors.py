"""Exception types shared across the package."""


class PamiError(ValueError):
    """Base class for all domain errors."""


class EmptyInput(PamiError):
    """A labeling with zero samples was supplied."""


class LengthMismatch(PamiError):
    """Two sequences that must have equal length do not."""


class InvalidMarginal(PamiError):
    """A cluster-size vector contains a non-positive count."""


class InvalidSize(PamiError):
    """Block size outside [1, n]."""


class InvalidK(PamiError):
    """Requested number of clusters outside [1, n]."""


class TooLarge(PamiError):
    """Instance exceeds the exhaustive-enumeration bound."""


class DegenerateInput(PamiError):
    """Input on which the requested statistic is undefined."""

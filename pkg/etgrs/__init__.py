import logging

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())


class EtgrsError(ValueError):
    """Base class for all errors raised by the etgrs package."""


class OracleDisagreementError(EtgrsError):
    """Raised when two independent evaluation paths disagree on the same question."""

"""Exception types shared across the package."""


class AdacsError(Exception):
    """Base class for package errors."""


class OracleError(AdacsError):
    """Base class for measurement-oracle protocol violations."""


class RoundAlreadyOpen(OracleError):
    pass


class NoOpenRound(OracleError):
    pass


class StaleToken(OracleError):
    pass


class IndexOutOfRange(OracleError):
    pass


class OpenLedger(OracleError):
    """A ledger operation required all rounds to be committed."""


class DegenerateUniverse(AdacsError):
    """The requested sparse-recovery regime collapses to direct observation."""


class InvalidP(AdacsError, ValueError):
    pass


class InvalidFamilyParams(AdacsError, ValueError):
    pass


class ConfigError(AdacsError, ValueError):
    pass


class EmptyInput(AdacsError, ValueError):
    pass

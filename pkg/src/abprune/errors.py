"""Exception hierarchy shared by every abprune module."""


class AbpruneError(Exception):
    """Base class for all library errors."""


class IllegalMove(AbpruneError, ValueError):
    pass


class InvalidParams(AbpruneError, ValueError):
    pass


class InvalidWindow(AbpruneError, ValueError):
    pass


class InvalidWidth(AbpruneError, ValueError):
    pass


class EmptyRoot(AbpruneError, ValueError):
    pass


class TerminalRoot(AbpruneError, ValueError):
    pass


class InvalidInput(AbpruneError, ValueError):
    pass


class ConfigError(AbpruneError, ValueError):
    """A SearchConfig (or CLI flag combination) violates its invariants."""


class PositionFormatError(AbpruneError, ValueError):
    pass

"""Exception hierarchy shared by all region builders."""


class ChannelError(ValueError):
    pass


class RangeError(ChannelError):
    pass


class PassivityError(ChannelError):
    pass


class UnitarityError(ChannelError):
    pass


class DomainError(ValueError):
    pass


class StrategyError(ValueError):
    pass


class RegimeError(RuntimeError):
    """The channel is not in the regime a capacity formula requires."""


class FlavorError(ValueError):
    pass


class UnboundedError(ValueError):
    pass


class EmptyFamilyError(ValueError):
    pass


class ConfigError(ValueError):
    pass

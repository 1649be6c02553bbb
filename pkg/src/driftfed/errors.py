"""Error types shared across the simulator."""


class ConfigError(ValueError):
    """Invalid configuration value (bad concept id, schedule bounds, ...)."""


class EmptyDataError(ValueError):
    """An operation that requires data received an empty pool or batch."""


class EmptyMetricError(ValueError):
    """A metric had every cell excluded and cannot be computed."""

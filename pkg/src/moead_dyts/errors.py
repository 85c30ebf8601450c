class ParameterError(ValueError):
    """An argument is outside the domain an operation accepts."""


class ConfigurationError(ValueError):
    """A run or experiment configuration is inconsistent; raised before any work starts."""

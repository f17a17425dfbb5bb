"""Shared exception types. The CLI maps these onto exit codes."""


class ToolkitError(Exception):
    """Base for all errors raised by this package."""


class ConfigFileError(ToolkitError):
    """A scenario file could not be read or has invalid structure."""

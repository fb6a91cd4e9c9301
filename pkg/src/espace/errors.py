"""Shared exception types."""


class EspaceError(Exception):
    """Base class for all package errors."""


class EmptyInputError(EspaceError):
    """An operation received empty text where non-empty text is required."""


class EmptyCorpusError(EspaceError):
    """Ingestion got zero non-empty documents."""


class MissingConceptError(EspaceError):
    """A concept URI is not present in the knowledge graph."""


class EmptyContextError(EspaceError):
    """A formal context was requested from an empty alignment."""


class SizeLimitError(EspaceError):
    """A formal context exceeds the configured size bound for lattice building."""


class ConfigurationError(EspaceError):
    """A configuration value is missing or out of range."""

"""Exception types shared across the toolkit."""


class LangsteerError(Exception):
    """Base class for all toolkit errors."""


class FormatError(LangsteerError):
    """A surface string cannot be interpreted under the declared encoding."""


class SchemaError(LangsteerError):
    """Structured input violates its schema. Carries all violations at once."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class DimensionError(LangsteerError):
    """A vector's length does not match the vocabulary it is paired with."""


class ExhaustedVocabularyError(LangsteerError):
    """A hard mask would leave no producible token."""


class EmptyInputError(LangsteerError):
    """An aggregate was requested over zero records."""


class EmptyReferenceError(LangsteerError):
    """A metric reference tokenized to nothing."""


class UnknownTokenError(LangsteerError):
    """A token id is outside the model vocabulary."""


class UnknownSampleError(LangsteerError):
    """A record references a sample id absent from the dataset."""


class MissingFieldError(LangsteerError):
    """A required field is absent for the requested language or record."""

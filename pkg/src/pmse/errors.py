"""Exception types shared across the toolkit."""


class PmseError(Exception):
    """Base class for all toolkit errors."""


class InvalidParams(PmseError):
    """Cipher parameters violate an invariant (iv length, empty password, ...)."""


class UnknownSet(PmseError):
    """Permutation set identifier does not resolve."""


class TooShort(PmseError):
    """Input stream shorter than the operation requires."""


class LengthMismatch(PmseError):
    """Two sequences that must have equal length do not."""


class ZeroVariance(PmseError):
    """Correlation requested against a constant sequence."""


class RandomSourceUnavailable(PmseError):
    """The OS randomness source could not supply bytes."""


class MalformedHeader(PmseError):
    """PNM header is not parseable or describes an empty image."""


class UnsupportedMaxval(PmseError):
    """PNM maxval is not 255."""


class TruncatedPayload(PmseError):
    """PNM payload holds fewer bytes than the header promises."""


class IoFailure(PmseError):
    """Underlying I/O operation failed."""


class NotABlock(PmseError):
    """Document does not carry a block metadata island."""


class SchemaVersionUnknown(PmseError):
    """Block metadata island declares a schema this code does not speak."""


class TemplateMissingSlot(PmseError):
    """Block template lacks a required placeholder."""

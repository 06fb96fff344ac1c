"""Exception hierarchy shared by every stegocrypt module.

All errors derive from :class:`StegoCryptError`. The ones that signal bad
input values also derive from :class:`ValueError` so generic callers can
catch them without importing this module.
"""


class StegoCryptError(Exception):
    """Base class for all library errors."""


class DomainError(StegoCryptError, ValueError):
    """An argument is outside the operation's mathematical domain."""


class NotInvertibleError(DomainError):
    pass


class BlockTooLargeError(DomainError):
    """A plaintext or ciphertext block is not smaller than the modulus."""


class KeyTooSmallError(DomainError):
    """The modulus cannot hold a single whole byte per block."""


class CorruptCiphertextError(StegoCryptError, ValueError):
    pass


class UnsupportedFormatError(StegoCryptError, ValueError):
    pass


class ImageDecodeError(StegoCryptError, ValueError):
    pass


class CapacityError(StegoCryptError, ValueError):
    pass


class DelimiterCollisionError(StegoCryptError, ValueError):
    pass


class NoMessageError(StegoCryptError, ValueError):
    pass


class CorruptFrameError(StegoCryptError, ValueError):
    pass


class EnvelopeError(StegoCryptError, ValueError):
    """A serialized cipher envelope could not be parsed."""


class NotAStegoEnvelopeError(EnvelopeError):
    pass


class WrongKeyKindError(StegoCryptError, ValueError):
    pass


class KeyFileError(StegoCryptError, ValueError):
    pass

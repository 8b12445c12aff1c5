"""Exception hierarchy.

Every error raised on bad input derives from :class:`InputError`, which the
command-line front end maps to exit status 2.
"""


class SpancomError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SpancomError, ValueError):
    """The caller handed us something outside an operation's domain."""


class SelfLoop(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class ParseError(InputError):
    pass


class NotUnicyclic(InputError):
    pass


class BadCycleLength(InputError):
    pass


class BadAttachment(InputError):
    pass


class Disconnected(InputError):
    pass


class TooLarge(InputError):
    """An exhaustive operation was asked to run past its size guard."""


class NotCanonical(InputError):
    pass


class EmptyInput(InputError):
    pass


class LabelOutOfRange(InputError):
    pass


class NotPure(InputError):
    pass


class NotPermutation(InputError):
    pass


class ZeroNumerator(InputError):
    pass


class BadParams(InputError):
    pass


class NegativeUpper(InputError):
    pass

"""Exception types raised by the codecs.

Contract violations on inputs (bad widths, unsorted lists, out-of-range
symbols) raise plain ``ValueError``; the classes here cover problems found
while *reading* a stream.
"""


class CodecError(Exception):
    pass


class EndOfStreamError(CodecError):
    """A read would run past the last written bit."""


class MalformedStreamError(CodecError):
    """The bits do not form a valid codeword (or a safety cap was hit)."""


class CodecOverflowError(CodecError):
    """A value does not fit the codec's fixed field budget."""

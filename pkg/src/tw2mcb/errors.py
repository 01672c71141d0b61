"""Exception hierarchy shared by the pipeline stages."""

from __future__ import annotations


class MCBError(Exception):
    """Base class for every error raised by this package."""


class ParseError(MCBError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class InvalidParam(MCBError, ValueError):
    pass


class NotPartial2Tree(MCBError):
    pass


class NotBiconnected(MCBError):
    pass


class TooSmall(MCBError):
    pass


class OracleBuildError(MCBError):
    pass


class PairNotInBag(MCBError, KeyError):
    pass


class VertexInBag(MCBError):
    pass


class NotOuterplanar(MCBError):
    pass


class TooLarge(MCBError):
    pass


class InternalError(MCBError):
    """An invariant that the algorithm guarantees was found broken."""


class ExpansionNotSimple(InternalError):
    pass

"""Exception hierarchy shared by every layer of the package."""


class MhGarsideError(Exception):
    """Base class; carries an optional witness tuple."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


# cell complexes
class ComplexError(MhGarsideError):
    pass


class NonRegular(ComplexError):
    pass


class Disconnected(ComplexError):
    pass


class UnknownCell(ComplexError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ComplexFormatError(ComplexError):
    pass


# hemisphere maps
class Tie(MhGarsideError):
    pass


class NotQmh(MhGarsideError):
    pass


class NotMh(MhGarsideError):
    pass


class NotInvolutive(MhGarsideError):
    pass


class NotFlat(MhGarsideError):
    pass


class NotSimplicial(MhGarsideError):
    pass


# paths
class NotPositive(MhGarsideError):
    pass


class ExplosionGuard(MhGarsideError):
    pass


class NotUniqueExtremum(MhGarsideError):
    pass


# arrangements and covectors
class ArrangementError(MhGarsideError):
    pass


class ZeroNormal(ArrangementError):
    pass


class BadSignChar(ArrangementError):
    pass


class RaggedLengths(ArrangementError):
    pass


class NotCentrallySymmetric(ArrangementError):
    pass


class MissingZeroVector(ArrangementError):
    pass


class NoTopes(ArrangementError):
    pass


class NotGraded(ArrangementError):
    pass


class NoCircuits(ArrangementError):
    pass


class WiringError(ArrangementError):
    pass


# engine
class SourceMismatch(MhGarsideError):
    pass


class NotComposable(MhGarsideError):
    pass


class WordFormatError(MhGarsideError):
    pass

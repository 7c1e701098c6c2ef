"""Exception and warning hierarchy.

``FormatError`` covers unreadable or malformed inputs (the CLI maps it to exit
code 2); ``ValidationError`` covers inputs that parse but violate a
precondition (exit code 1).
"""


class TextSpotError(Exception):
    pass


class FormatError(TextSpotError):
    pass


class ValidationError(TextSpotError, ValueError):
    pass


# -- file formats -----------------------------------------------------------

class IoFailure(FormatError):
    pass


class BadMagic(FormatError):
    pass


class UnsupportedVersion(FormatError):
    pass


class TruncatedPayload(FormatError):
    pass


class MalformedLine(FormatError):
    def __init__(self, path, lineno, reason):
        self.path = path
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"{path}:{lineno}: {reason}")


class UnknownScript(MalformedLine):
    pass


class DuplicateSymbol(FormatError):
    pass


class EmptyAlphabet(FormatError):
    pass


# -- preconditions ----------------------------------------------------------

class DegenerateAngle(ValidationError):
    pass


class ZeroAreaBox(ValidationError):
    pass


class NonConvexQuad(ValidationError):
    pass


class DegenerateQuad(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class InfeasibleLength(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class TiePoint(ValidationError):
    pass


class Divergence(ValidationError):
    pass


class EmptyWord(ValidationError):
    pass


class UnknownCharacter(ValidationError):
    pass


# -- non-fatal conditions ---------------------------------------------------

class BoxOutsideGrid(UserWarning):
    pass


class PlacementFailure(UserWarning):
    pass

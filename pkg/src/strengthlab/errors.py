"""Exception hierarchy shared by every module."""


class StrengthLabError(Exception):
    pass


class EmptyProbe(StrengthLabError):
    pass


class PartialComposition(StrengthLabError):
    pass


class ObjectOutsideTarget(StrengthLabError):
    pass


class ComponentTypeMismatch(StrengthLabError):
    pass


class HomBoundExceeded(StrengthLabError):
    pass


class SearchBoundExceeded(StrengthLabError):
    pass


class WindowError(StrengthLabError):
    """A table-backed structure was asked for data outside its window."""


class UnitOutsideProbeClosure(StrengthLabError):
    pass


class NotAProduct(StrengthLabError):
    pass


class NotACoproduct(StrengthLabError):
    pass


class LiftingSquareBroken(StrengthLabError):
    pass


class NoMediator(StrengthLabError):
    pass


class Item3DiagramFailed(StrengthLabError):
    pass


class NoBraiding(StrengthLabError):
    pass


class LaxLawFailed(StrengthLabError):
    pass


class ComparisonNotIso(StrengthLabError):
    pass


class NonCartesianInstance(StrengthLabError):
    pass


class UnknownInstance(StrengthLabError):
    pass


class ParamOutOfBounds(StrengthLabError):
    pass


class GenerationFailed(StrengthLabError):
    pass


class LetSyntaxError(StrengthLabError):
    def __init__(self, msg, line, col):
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.col = col


class LetTypeError(StrengthLabError):
    def __init__(self, msg, path=()):
        where = "/".join(path) if path else "<root>"
        super().__init__(f"{msg} (at {where})")
        self.path = tuple(path)


class ParseError(StrengthLabError):
    def __init__(self, msg, line):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class ValidationFailed(StrengthLabError):
    def __init__(self, report):
        super().__init__(f"validation failed: {report.summary()}")
        self.report = report

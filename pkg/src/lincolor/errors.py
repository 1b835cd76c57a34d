"""Exception hierarchy shared by all modules."""


class LincolorError(Exception):
    """Base class for every error raised by this package."""


class OverlappingVertexSets(LincolorError, ValueError):
    pass


class UnknownVertex(LincolorError, KeyError):
    pass


class EmptyComplex(LincolorError, ValueError):
    pass


class IncompleteColoring(LincolorError, ValueError):
    pass


class NotALinearColoring(LincolorError, ValueError):
    pass


class EmptyMulticomplex(LincolorError, ValueError):
    pass


class NotASubcomplex(LincolorError, ValueError):
    pass


class NotReducible(LincolorError):
    """A search exhausted its state space without reaching the target."""


class NotCollapsible(NotReducible):
    pass


class BudgetExhausted(LincolorError):
    """A bounded search ran out of nodes; the answer is unknown."""

    def __init__(self, message="search budget exhausted", nodes=0):
        super().__init__(message)
        self.nodes = nodes


class InvalidTrace(LincolorError, ValueError):
    pass


class NotFree(LincolorError, ValueError):
    pass


class FaceNotInComplex(LincolorError, ValueError):
    pass


class NotAPrimitivePair(LincolorError, ValueError):
    pass


class BoundViolated(LincolorError, AssertionError):
    """A proven inequality failed; this indicates a bug, not bad input."""


class EmptyPoset(LincolorError, ValueError):
    pass


class UnknownElement(LincolorError, KeyError):
    pass


class NotMonotone(LincolorError, ValueError):
    pass


class NotAClosureOperator(LincolorError, ValueError):
    pass


class NotDefined(LincolorError, ValueError):
    pass


class NotAProperColoring(LincolorError, ValueError):
    pass


class ParseError(LincolorError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TooLarge(LincolorError, ValueError):
    pass

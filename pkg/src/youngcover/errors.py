"""Exception hierarchy shared by all modules."""


class YoungCoverError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(YoungCoverError, ValueError):
    pass


class NotWeaklyDecreasing(DiagramError):
    pass


class NonPositiveLength(DiagramError):
    pass


class IndexOutOfRange(DiagramError):
    pass


class RectOutsideDiagram(DiagramError):
    pass


class NotACover(DiagramError):
    pass


class StepCountMismatch(DiagramError):
    pass


class InvalidBudget(YoungCoverError, ValueError):
    pass


class Infeasible(YoungCoverError):
    """No (i,j)-local cover exists for the requested diagram and budget."""


class CapacityOverflow(YoungCoverError, OverflowError):
    """The requested construction is too large to materialise."""


class CapExceeded(YoungCoverError):
    """A search hit its node or size cap; the answer is unknown."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class NotADifferenceGraph(YoungCoverError, ValueError):
    pass


class CycleDetected(YoungCoverError, ValueError):
    pass


class NotHeightTwo(YoungCoverError, ValueError):
    pass


class ForeignElement(YoungCoverError, ValueError):
    pass


class ParseError(YoungCoverError, ValueError):
    pass

"""Exception hierarchy.

Three families, matching the CLI exit codes: malformed input (1),
semantically invalid objects (2) and exceeded enumeration bounds (3).
"""


class ComtraceError(Exception):
    exit_code = 2


class ParseError(ComtraceError):
    exit_code = 1


class SemanticError(ComtraceError):
    exit_code = 2


class BoundExceeded(ComtraceError):
    exit_code = 3


# alphabet construction
class InvalidEventName(SemanticError):
    pass


class DuplicateEvent(SemanticError):
    pass


class ReflexivePair(SemanticError):
    pass


class SerNotInSim(SemanticError):
    pass


class UnknownEvent(SemanticError):
    pass


class AlphabetTooLarge(BoundExceeded):
    pass


# step sequences
class InvalidStep(SemanticError):
    pass


class LabelCollision(SemanticError):
    pass


class NotAnOccurrence(SemanticError):
    pass


# structures
class InvalidStructure(SemanticError):
    pass


class AlphabetMismatch(SemanticError):
    pass


class NotAnLsosComtrace(SemanticError):
    pass


class NotACdGraph(SemanticError):
    pass


class NotCovering(SemanticError):
    pass


class ClassSizeExceeded(BoundExceeded):
    pass


class GroundTooLarge(BoundExceeded):
    pass

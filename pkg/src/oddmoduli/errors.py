"""Exception hierarchy.

Errors split into two families: bad user input (the CLI maps these to exit
code 2) and broken internal invariants (exit code 3).
"""


class ModuliError(Exception):
    """Base class for every error raised by the engine."""


class InvalidInput(ModuliError):
    """The caller supplied data outside the supported domain."""


class InvariantFailure(ModuliError):
    """An internal consistency check failed; indicates a bug or corrupt state."""


class EmptyGenerators(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class NoPartition(InvalidInput):
    pass


class Hyperelliptic(InvalidInput):
    pass


class NotOddType(InvalidInput):
    pass


class GenusTooSmall(InvalidInput):
    pass


class UnknownParameter(InvalidInput):
    pass


class ZeroScale(InvalidInput):
    pass


class MissingAssignment(InvalidInput):
    pass


class DegreeMismatch(InvariantFailure):
    pass


class WeightMismatch(InvariantFailure):
    pass


class IrreducibleNonBasis(InvariantFailure):
    pass


class CaseExhaustion(InvariantFailure):
    pass


class WeightViolation(InvariantFailure):
    pass


class InconsistentLinearSystem(InvariantFailure):
    pass


class NonTriangularEquation(InvariantFailure):
    pass

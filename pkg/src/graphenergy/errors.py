"""Exception types shared across the package."""


class GraphEnergyError(Exception):
    """Base class for all package errors."""


class ParameterError(GraphEnergyError, ValueError):
    """An argument is outside its documented domain."""


class InvalidPartitionError(ParameterError):
    """A partition spec cannot be realized (e.g. fewer vertices than parts)."""


class DegenerateLawError(ParameterError):
    """A limiting law is undefined for the requested parameters (p in {0, 1})."""


class ConsistencyError(GraphEnergyError):
    """Input data violates a structural precondition (symmetry, block pattern)."""


class NumericalError(GraphEnergyError):
    """An iterative routine failed to converge; the result was not returned."""


class RecordError(GraphEnergyError):
    """A persisted run record could not be parsed."""

"""Exception hierarchy for the product-geometry engine."""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GeometryError):
    """A point (or parameter) lies outside the model of the chosen geometry."""


class DegenerateError(GeometryError):
    """A configuration is degenerate (coincident vertices, collapsed image)."""


class PrecondError(GeometryError):
    """An operation was called on input violating its stated precondition."""


class ConsistencyError(GeometryError):
    """A computed quantity contradicts a proven structural property.

    This signals an implementation bug (or use outside a theorem's scope)
    and is never silently suppressed.
    """


class SingularityError(GeometryError):
    """Numerical integration ran into a coordinate-chart singularity."""

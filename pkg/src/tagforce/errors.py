"""Exception hierarchy. Every error carries the CLI exit code and a short code tag."""


class TagforceError(Exception):
    """Base class for all pipeline errors."""

    exit_code = 1
    code = "error"


class SchemaError(TagforceError):
    """Malformed config files, CSV files, or input data contracts."""

    exit_code = 2
    code = "schema"


class NumericError(TagforceError):
    """Numerical failure: singular systems, invalid geometry, divergence."""

    exit_code = 3
    code = "numeric"


class ProjectionError(NumericError):
    """Point at or behind the camera plane cannot be projected."""


class DegenerateGeometryError(NumericError):
    """Rank-deficient or physically impossible geometric configuration."""


class ConvergenceError(NumericError):
    """Iterative solver diverged. ``best`` holds the best iterate seen."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class UnreliableLagError(TagforceError):
    """Cross-correlation peak too weak to trust the lag estimate."""

    exit_code = 4
    code = "lag"

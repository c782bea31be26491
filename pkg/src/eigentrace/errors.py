"""Exception hierarchy. CLI exit codes: config 2, consistency 3, cache 4."""


class EigentraceError(Exception):
    pass


class ConfigurationError(EigentraceError):
    """Invalid spec/config values, including quadrature non-convergence."""


class RangeError(EigentraceError):
    """Argument or catalog range exceeded; message says how to extend."""


class ConsistencyError(EigentraceError):
    """Internal numerical cross-checks failed (e.g. missed zeros)."""


class AccuracyError(EigentraceError):
    """Requested step/order too coarse for the stated tolerance."""


class DataError(EigentraceError):
    """Input data unusable (e.g. non-smooth sampled profile)."""


class CacheCorruptionError(EigentraceError):
    """Zero-cache file unreadable; clear or rebuild it."""

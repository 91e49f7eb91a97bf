"""Exception types and the resource cap shared across the package."""
from contextlib import contextmanager


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive computation would exceed the configured cap."""


class FactorizationError(ValueError):
    """Raised when a rotation is requested at a node whose spine is too short."""


# Exhaustive enumerations refuse to materialize more than this many objects.
MAX_OBJECTS = 750_000


def check_budget(count, what, limit=None):
    limit = MAX_OBJECTS if limit is None else limit
    if count > limit:
        raise ResourceLimitError(f"{what}: {count} objects exceeds the cap of {limit}")


@contextmanager
def object_cap(limit):
    """Temporarily replace the default cap used by :func:`check_budget`."""
    global MAX_OBJECTS
    saved = MAX_OBJECTS
    MAX_OBJECTS = limit
    try:
        yield
    finally:
        MAX_OBJECTS = saved

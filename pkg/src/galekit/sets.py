"""Index sets on the ground set [m] = {1, ..., m} (1-based throughout)."""

from .errors import GalekitError, BAD_INPUT


def index_set(items, m=None):
    out = frozenset(int(i) for i in items)
    if m is not None and any(i < 1 or i > m for i in out):
        raise GalekitError(BAD_INPUT, f"index outside [1, {m}]: {sorted(out)}")
    return out


def complement(indices, m):
    return frozenset(range(1, m + 1)) - frozenset(indices)


def sorted_sets(family):
    """Deterministic order: by size, then lexicographically."""
    return sorted((tuple(sorted(s)) for s in family), key=lambda t: (len(t), t))


def set_label(indices):
    """Compact label such as '34' or '1,10' for messages."""
    items = sorted(indices)
    if all(i < 10 for i in items):
        return "".join(str(i) for i in items) or "{}"
    return ",".join(str(i) for i in items)
